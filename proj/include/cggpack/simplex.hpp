#pragma once

#include "cggpack/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cggpack {

/// Exact-rational phase-1 simplex for the feasibility system
///     A x = 1,  x >= 0
/// over a growing column set. Bland's rule throughout, so every pivot
/// sequence terminates and is deterministic. Artificial variables stay in the
/// tableau for the whole run: their block carries the basis inverse, which is
/// what prices freshly added columns and exposes the dual vector.
class Phase1Simplex {
public:
    explicit Phase1Simplex(int rows);

    int rows() const { return rows_; }
    int structural_columns() const { return static_cast<int>(col_count_); }

    /// Append a structural column given sparsely as (row, value) pairs.
    int add_column(const std::vector<std::pair<int, Rat>>& sparse);

    /// Pivot to optimality over the current columns. Returns the objective
    /// (total artificial mass); zero means the current system is feasible.
    const Rat& optimize();

    const Rat& objective() const { return obj_; }
    bool feasible() const { return obj_ == 0; }

    /// Phase-1 dual y*. The reduced cost of an (unadded) column a is
    /// -y*^T a; negative values identify improving columns.
    std::vector<Rat> dual() const;

    /// x over structural columns (by add index); only meaningful when feasible.
    std::vector<Rat> primal() const;

    /// Farkas vector y = -y*: satisfies 1^T y = -objective < 0 whenever the
    /// run ended infeasible, and y^T a >= 0 for every column that priced
    /// nonnegative.
    std::vector<Rat> farkas() const;

    std::int64_t pivot_count() const { return pivots_; }

private:
    void pivot(int row, int col_global);
    // global column ids: structural j -> j, artificial t -> kArtificialBase + t
    static constexpr int kArtificialBase = 1 << 30;
    Rat& at(std::vector<Rat>& row, int global);
    const Rat& at(const std::vector<Rat>& row, int global) const;

    int rows_;
    std::size_t col_count_ = 0;
    // per tableau row: [structural... | artificial block | rhs]
    std::vector<std::vector<Rat>> tab_;
    std::vector<Rat> rhs_;
    std::vector<Rat> d_;     // reduced cost row, same layout as tab_ rows
    Rat obj_;
    std::vector<int> basis_; // global column id per row
    std::int64_t pivots_ = 0;
    bool bland_mode_ = false;
};

struct DenseOutcome {
    bool feasible = false;
    std::vector<Rat> x; // per column when feasible
    std::vector<Rat> y; // Farkas certificate when infeasible
    std::int64_t pivots = 0;
};

/// Decide {x >= 0 : M x = 1} for an explicit rows-by-cols rational matrix.
/// The returned branch is re-verified exactly before returning.
DenseOutcome solve_feasibility_dense(const std::vector<std::vector<Rat>>& m);

bool verify_primal(const std::vector<std::vector<Rat>>& m, const std::vector<Rat>& x);

bool verify_certificate(const std::vector<std::vector<Rat>>& m, const std::vector<Rat>& y);

} // namespace cggpack
