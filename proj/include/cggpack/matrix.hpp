#pragma once

#include "cggpack/rational.hpp"
#include "cggpack/rotation_class.hpp"
#include "cggpack/weighted.hpp"

#include <optional>
#include <vector>

namespace cggpack {

/// The length-by-rotation-class matrix of a length-uniform weighted pattern W
/// against the odd complete host K_m. Rows are host edge lengths 1..(m-1)/2;
/// one column per canonical gap vector with a full rotation orbit; the entry
/// at (l, S) is the total W-weight that a representative copy of S places on
/// host edges of length l.
///
/// Periodic gap vectors (orbits smaller than m) are not admitted as columns:
/// the equivalence between the matrix system and the per-edge packing
/// equation rests on each length-l edge receiving every copy of a class via
/// a unique rotation, which fails on sub-orbits. They can only arise when the
/// pattern has an odd vertex count.
class CompressedMatrix {
public:
    CompressedMatrix(int m, int k, std::vector<Rat> weights_by_length,
                     std::vector<RotationClass> columns);

    int m() const { return m_; }
    int k() const { return k_; }
    int rows() const { return (m_ - 1) / 2; }
    int cols() const { return static_cast<int>(columns_.size()); }
    const std::vector<RotationClass>& columns() const { return columns_; }
    const std::vector<Rat>& weights_by_length() const { return weights_; }

    /// Sparse column: (row index = length-1, entry) pairs, ascending rows.
    std::vector<std::pair<int, Rat>> column_entries(int col) const;
    std::vector<std::pair<int, Rat>> entries_for_gaps(const std::vector<int>& gaps) const;

    Rat entry(int length, int col) const;

    std::vector<std::vector<Rat>> dense() const;

    std::optional<int> column_index(const RotationClass& cls) const;

private:
    int m_;
    int k_;
    std::vector<Rat> weights_;
    std::vector<RotationClass> columns_; // sorted lexicographically
};

/// Builds the matrix for a length-uniform W (reject non-uniform weights with
/// guidance to uniformize first) and odd m >= k.
CompressedMatrix compressed_matrix(const WeightedCgg& w, int m);

/// All canonical full-orbit gap vectors of length k summing to m, in
/// lexicographic order.
std::vector<RotationClass> enumerate_rotation_classes(int m, int k);

} // namespace cggpack
