#pragma once

#include <vector>

namespace cggpack {

/// Rotational equivalence class of a k-subset of K_m, represented by the gap
/// vector between cyclically consecutive chosen positions, stored in its
/// lexicographically minimal rotation. Gaps are positive and sum to m.
struct RotationClass {
    std::vector<int> gaps;

    int k() const { return static_cast<int>(gaps.size()); }
    int m() const;

    /// Smallest period of the gap sequence under rotation; a full orbit under
    /// the m rotations of K_m has period == k.
    int minimal_period() const;
    long long orbit_size() const { return static_cast<long long>(m()) / (k() / minimal_period()); }

    bool operator==(const RotationClass&) const = default;
    bool operator<(const RotationClass& o) const { return gaps < o.gaps; }
};

// Canonicalize a gap vector (lex-min rotation). Validates positivity.
RotationClass make_rotation_class(std::vector<int> gaps);

// Gap vector of a strictly increasing position subset of [0, m).
std::vector<int> gaps_of_positions(const std::vector<int>& positions, int m);

// Positions of the copy with the given gaps anchored at `offset` (mod m).
std::vector<int> positions_of_gaps(const std::vector<int>& gaps, int m, int offset);

// --- dual-analysis test configurations -------------------------------------
// Four-vertex trapezoids: side lengths follow the cyclic order as listed.
// s:        (i, i_max - i, i, min(i_max + i, m - i_max - i)), needs i < i_max
// s_prime:  (i, i0, i, i0 + 2i), needs i <= m'/4 and i0 <= m'/2
// s_dprime: (i, i0, i, i0 - 2i), needs i <= m'/4 and i0 > m'/2
// where m' = (m-1)/2. Out-of-range parameters throw precondition_error.
RotationClass config_s(int m, int i, int i_max);
RotationClass config_s_prime(int m, int i, int i0);
RotationClass config_s_dprime(int m, int i, int i0);

// 2k-vertex configurations. hex_s is parameterized by a long length i >= k
// (decomposed as i = k*q + r); hex_s_ij takes a short length i < k and a
// spacing j <= m'/(2k).
RotationClass config_hex_s(int m, int k, int i);
RotationClass config_hex_s_ij(int m, int k, int i, int j);

} // namespace cggpack
