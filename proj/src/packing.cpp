#include "cggpack/packing.hpp"

#include "cggpack/error.hpp"

#include <sstream>

namespace cggpack {

Embedding Packing::copy(long long i) const {
    Embedding e;
    e.map.assign(flat.begin() + i * pattern.n, flat.begin() + (i + 1) * pattern.n);
    return e;
}

void Packing::push_copy(const Embedding& e) {
    flat.insert(flat.end(), e.map.begin(), e.map.end());
}

Rat Packing::coverage() const {
    if (host.edge_count() == 0) return Rat(0);
    return Rat(BigInt(covered_edges()), BigInt(host.edge_count()));
}

std::uint64_t Packing::digest() const {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(host.n));
    mix(static_cast<std::uint64_t>(pattern.n));
    for (int v : flat) mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)));
    return h;
}

VerifyReport verify_packing(const Packing& p) {
    VerifyReport rep;
    const long long count = p.copy_count();
    rep.copies_checked = count;

    std::vector<bool> used(static_cast<std::size_t>(p.host.n) * (p.host.n - 1) / 2, false);
    long long covered = 0;
    constexpr std::size_t kMaxListed = 16;

    for (long long i = 0; i < count; ++i) {
        Embedding e = p.copy(i);
        if (!embedding_valid(p.pattern, p.host, e)) {
            if (rep.bad_embeddings.size() < kMaxListed) rep.bad_embeddings.push_back(i);
            continue;
        }
        for (const auto& [u, v] : p.pattern.edges) {
            auto id = edge_id(p.host.n, e.map[u], e.map[v]);
            if (used[id]) {
                if (rep.overlaps.size() < kMaxListed) rep.overlaps.emplace_back(-1, i);
            } else {
                used[id] = true;
                ++covered;
            }
        }
    }

    // resolve overlap partners: second pass only when something clashed
    if (!rep.overlaps.empty()) {
        std::vector<long long> owner(used.size(), -1);
        std::vector<std::pair<long long, long long>> resolved;
        for (long long i = 0; i < count && resolved.size() < kMaxListed; ++i) {
            Embedding e = p.copy(i);
            if (!embedding_valid(p.pattern, p.host, e)) continue;
            for (const auto& [u, v] : p.pattern.edges) {
                auto id = edge_id(p.host.n, e.map[u], e.map[v]);
                if (owner[id] >= 0)
                    resolved.emplace_back(owner[id], i);
                else
                    owner[id] = i;
            }
        }
        rep.overlaps = std::move(resolved);
    }

    rep.distinct_covered = covered;
    rep.coverage = p.host.edge_count() > 0 ? Rat(BigInt(covered), BigInt(p.host.edge_count())) : Rat(0);
    rep.coverage_matches =
        rep.bad_embeddings.empty() && rep.overlaps.empty() && covered == p.covered_edges();
    rep.ok = rep.coverage_matches;
    return rep;
}

std::string VerifyReport::summary() const {
    std::ostringstream os;
    os << (ok ? "ok" : "FAILED") << ": " << copies_checked << " copies, " << distinct_covered
       << " edges covered";
    if (!bad_embeddings.empty()) os << ", " << bad_embeddings.size() << " invalid copies";
    if (!overlaps.empty()) {
        os << ", overlapping pairs:";
        for (auto [a, b] : overlaps) os << " (" << a << "," << b << ")";
    }
    return os.str();
}

} // namespace cggpack
