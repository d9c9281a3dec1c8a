#pragma once

#include "cggpack/packing.hpp"
#include "cggpack/rational.hpp"
#include "cggpack/rotation_class.hpp"
#include "cggpack/weighted.hpp"

#include <map>
#include <vector>

namespace cggpack {

struct ScheduleReport {
    Packing packing;
    long long quota = 0;      // sum over classes of floor(x * n)
    long long accepted = 0;   // copies that survived the used-edge filter
    std::vector<long long> used_per_length; // index l-1
    Rat residual_rows;        // total shortfall of Mx against 1 per row (rounding excluded)
};

/// Integral packing of K_n from a fractional rotation-class solution: class S
/// with value x_S contributes floor(x_S * n) rotation offsets, each accepted
/// only if all its edges are still free (sound for repeated gap values and
/// across classes). Requires 0/1 weights per length realizable as a plane
/// pattern and an exact sub-solution M x <= 1; rows below 1 are reported as
/// residual coverage loss rather than rejected, because patterns like the
/// plane 4-cycle provably admit no perfect solution over any odd host.
ScheduleReport rotation_schedule_packing(const WeightedCgg& w,
                                         const std::map<RotationClass, Rat>& x, int n);

/// Deterministic near-cover for the plane C4 side system on odd n: partitions
/// most of [1, (n-1)/2] into quadruples of distinct lengths summing to n; the
/// classes with those gaps, each at full multiplicity 1, cover every grouped
/// length exactly once. Returns the 0/1 solution keyed by rotation class.
std::map<RotationClass, Rat> c4_quad_cover(int n);

} // namespace cggpack
