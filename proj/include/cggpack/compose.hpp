#pragma once

#include "cggpack/packing.hpp"

namespace cggpack {

struct ComposeReport {
    Packing packing; // G-packing of K_{n*t}
    // uncovered-edge accounting over K_{n*t}
    BigInt non_blowup_edges;     // inside the t-intervals
    BigInt outer_uncovered;      // bundles over host edges no outer copy uses
    BigInt inner_uncovered;      // per outer copy, blowup edges the inner packing misses
};

/// Lift an inner G-packing of H[t] through an outer H-packing of K_n into a
/// G-packing of K_{n*t}: interval j of each outer copy's blowup is the j-th
/// image vertex's interval in K_n[t]. Different outer copies occupy disjoint
/// bundles, so the union stays edge-disjoint. The same inner packing is reused
/// for every outer copy, which keeps covered(composed) = copies(outer) *
/// covered(inner) an exact identity.
ComposeReport compose_packings(const Packing& outer, const Packing& inner, int t);

} // namespace cggpack
