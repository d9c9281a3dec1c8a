#include "cggpack/compose.hpp"

#include "cggpack/blowup.hpp"
#include "cggpack/error.hpp"

namespace cggpack {

ComposeReport compose_packings(const Packing& outer, const Packing& inner, int t) {
    if (t < 1) throw precondition_error("blowup factor must be positive");
    if (inner.host != blowup(outer.pattern, t))
        throw precondition_error("inner host is not the blowup of the outer pattern");
    const int n = outer.host.n;

    ComposeReport rep;
    rep.packing = Packing{complete_graph(n * t, outer.host.kind), inner.pattern, {}};
    rep.packing.flat.reserve(static_cast<std::size_t>(outer.copy_count()) * inner.flat.size());

    const long long oc = outer.copy_count();
    for (long long i = 0; i < oc; ++i) {
        Embedding out_copy = outer.copy(i);
        for (std::size_t f = 0; f < inner.flat.size(); ++f) {
            int w = inner.flat[f];
            int interval = w / t, off = w % t;
            rep.packing.flat.push_back(out_copy.map[interval] * t + off);
        }
    }

    // exact accounting over K_{n*t}
    BigInt covered_inner(inner.covered_edges());
    BigInt bundle_all = BigInt(outer.host.edge_count()) * t * t;
    BigInt bundle_covered = BigInt(outer.covered_edges()) * t * t;
    rep.non_blowup_edges = BigInt(n) * (BigInt(t) * (t - 1) / 2);
    rep.outer_uncovered = bundle_all - bundle_covered;
    rep.inner_uncovered = BigInt(oc) * (BigInt(outer.pattern.edge_count()) * t * t - covered_inner);
    return rep;
}

} // namespace cggpack
