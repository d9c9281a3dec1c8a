#include "cggpack/matrix.hpp"

#include "cggpack/error.hpp"

#include <algorithm>
#include <functional>

namespace cggpack {

CompressedMatrix::CompressedMatrix(int m, int k, std::vector<Rat> weights_by_length,
                                   std::vector<RotationClass> columns)
    : m_(m), k_(k), weights_(std::move(weights_by_length)), columns_(std::move(columns)) {}

std::vector<std::pair<int, Rat>> CompressedMatrix::entries_for_gaps(
    const std::vector<int>& gaps) const {
    std::vector<Rat> by_row(rows(), Rat(0));
    std::vector<int> pos(k_, 0);
    for (int i = 1; i < k_; ++i) pos[i] = pos[i - 1] + gaps[i - 1];
    for (int i = 0; i < k_; ++i)
        for (int j = i + 1; j < k_; ++j) {
            int d = pos[j] - pos[i];
            int host_len = std::min(d, m_ - d);
            int pat_len = std::min(j - i, k_ - (j - i));
            by_row[host_len - 1] += weights_[pat_len - 1];
        }
    std::vector<std::pair<int, Rat>> sparse;
    for (int r = 0; r < rows(); ++r)
        if (by_row[r] != 0) sparse.emplace_back(r, std::move(by_row[r]));
    return sparse;
}

std::vector<std::pair<int, Rat>> CompressedMatrix::column_entries(int col) const {
    return entries_for_gaps(columns_[col].gaps);
}

Rat CompressedMatrix::entry(int length, int col) const {
    for (const auto& [r, v] : column_entries(col))
        if (r == length - 1) return v;
    return Rat(0);
}

std::vector<std::vector<Rat>> CompressedMatrix::dense() const {
    std::vector<std::vector<Rat>> d(rows(), std::vector<Rat>(cols(), Rat(0)));
    for (int c = 0; c < cols(); ++c)
        for (const auto& [r, v] : column_entries(c)) d[r][c] = v;
    return d;
}

std::optional<int> CompressedMatrix::column_index(const RotationClass& cls) const {
    auto it = std::lower_bound(columns_.begin(), columns_.end(), cls);
    if (it != columns_.end() && *it == cls) return static_cast<int>(it - columns_.begin());
    return std::nullopt;
}

std::vector<RotationClass> enumerate_rotation_classes(int m, int k) {
    std::vector<RotationClass> out;
    std::vector<int> gaps(k);
    // lexicographic composition enumeration, keeping canonical full-orbit vectors
    auto is_canonical_full_orbit = [&]() {
        std::vector<int> rot(k);
        for (int r = 1; r < k; ++r) {
            for (int i = 0; i < k; ++i) rot[i] = gaps[(i + r) % k];
            if (rot < gaps) return false;  // not canonical
            if (rot == gaps) return false; // periodic: sub-orbit class
        }
        return true;
    };
    std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (idx == k - 1) {
            if (remaining >= 1) {
                gaps[idx] = remaining;
                if (is_canonical_full_orbit()) out.push_back(RotationClass{gaps});
            }
            return;
        }
        int room = k - idx - 1;
        for (int g = 1; g <= remaining - room; ++g) {
            gaps[idx] = g;
            rec(idx + 1, remaining - g);
        }
    };
    if (k >= 2 && m >= k) rec(0, m);
    return out;
}

CompressedMatrix compressed_matrix(const WeightedCgg& w, int m) {
    if (m % 2 == 0)
        throw precondition_error("compressed matrix needs odd m: unique rotations per length fail");
    auto by_length = w.length_uniform();
    if (!by_length)
        throw precondition_error(
            "compressed matrix needs length-uniform weights; call uniformize_by_rotation first");
    if (m < w.k()) throw precondition_error("host smaller than pattern");
    return CompressedMatrix(m, w.k(), std::move(*by_length),
                            enumerate_rotation_classes(m, w.k()));
}

} // namespace cggpack
