#include "cggpack/simplex.hpp"

#include "cggpack/error.hpp"

namespace cggpack {

Phase1Simplex::Phase1Simplex(int rows) : rows_(rows) {
    if (rows < 1) throw precondition_error("simplex needs at least one row");
    tab_.assign(rows, std::vector<Rat>());
    rhs_.assign(rows, Rat(1));
    basis_.resize(rows);
    // artificial block starts as the identity
    for (int i = 0; i < rows; ++i) {
        tab_[i].assign(rows, Rat(0));
        tab_[i][i] = 1;
        basis_[i] = kArtificialBase + i;
    }
    // minimize sum of artificials: d_art = 0 (basic), obj = sum rhs
    d_.assign(rows, Rat(0));
    obj_ = Rat(rows);
}

Rat& Phase1Simplex::at(std::vector<Rat>& row, int global) {
    return global >= kArtificialBase ? row[col_count_ + (global - kArtificialBase)]
                                     : row[global];
}

const Rat& Phase1Simplex::at(const std::vector<Rat>& row, int global) const {
    return global >= kArtificialBase ? row[col_count_ + (global - kArtificialBase)]
                                     : row[global];
}

int Phase1Simplex::add_column(const std::vector<std::pair<int, Rat>>& sparse) {
    // tableau form of the new column is B^{-1} a, read off the artificial block
    std::vector<Rat> col(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i) {
        Rat v = 0;
        for (const auto& [r, a] : sparse) v += tab_[i][col_count_ + r] * a;
        col[i] = std::move(v);
    }
    // reduced cost: 0 - y^T a with y_t = 1 - d_art_t
    Rat red = 0;
    for (const auto& [r, a] : sparse) red -= (Rat(1) - d_[col_count_ + r]) * a;

    int j = static_cast<int>(col_count_);
    for (int i = 0; i < rows_; ++i) tab_[i].insert(tab_[i].begin() + j, std::move(col[i]));
    d_.insert(d_.begin() + j, std::move(red));
    ++col_count_;
    return j;
}

void Phase1Simplex::pivot(int row, int col_global) {
    ++pivots_;
    auto& prow = tab_[row];
    const Rat piv = at(prow, col_global);
    if (piv == 0) throw verification_error("pivot on zero element");
    if (piv != 1) {
        for (auto& v : prow) v /= piv;
        rhs_[row] /= piv;
    }
    for (int i = 0; i < rows_; ++i) {
        if (i == row) continue;
        const Rat f = at(tab_[i], col_global);
        if (f == 0) continue;
        auto& irow = tab_[i];
        for (std::size_t c = 0; c < irow.size(); ++c)
            if (prow[c] != 0) irow[c] -= f * prow[c];
        rhs_[i] -= f * rhs_[row];
    }
    const Rat fd = at(d_, col_global);
    if (fd != 0) {
        for (std::size_t c = 0; c < d_.size(); ++c)
            if (prow[c] != 0) d_[c] -= fd * prow[c];
    }
    basis_[row] = col_global;
    // total artificial mass, read straight off the basis
    obj_ = 0;
    for (int i = 0; i < rows_; ++i)
        if (basis_[i] >= kArtificialBase) obj_ += rhs_[i];
}

const Rat& Phase1Simplex::optimize() {
    const auto total = col_count_ + static_cast<std::size_t>(rows_);
    // Dantzig entering while the objective moves; a degeneracy streak flips
    // the run into Bland's rule for good, which rules out cycling.
    long long stalled = 0;
    const long long stall_limit = 3LL * rows_ + 16;
    for (;;) {
        int enter = -1;
        if (!bland_mode_) {
            const Rat* best = nullptr;
            for (std::size_t c = 0; c < total; ++c) {
                if (d_[c] < 0 && (!best || d_[c] < *best)) {
                    best = &d_[c];
                    enter = c < col_count_ ? static_cast<int>(c)
                                           : kArtificialBase + static_cast<int>(c - col_count_);
                }
            }
        } else {
            for (std::size_t c = 0; c < total; ++c) {
                if (d_[c] < 0) {
                    enter = c < col_count_ ? static_cast<int>(c)
                                           : kArtificialBase + static_cast<int>(c - col_count_);
                    break;
                }
            }
        }
        if (enter < 0) return obj_;
        // ratio test, ties to the smallest leaving basis index
        int leave = -1;
        Rat best;
        for (int i = 0; i < rows_; ++i) {
            const Rat& a = at(tab_[i], enter);
            if (a <= 0) continue;
            Rat ratio = rhs_[i] / a;
            if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                best = std::move(ratio);
                leave = i;
            }
        }
        if (leave < 0) throw verification_error("phase-1 objective unbounded below");
        const Rat before = obj_;
        pivot(leave, enter);
        if (!bland_mode_) {
            stalled = obj_ == before ? stalled + 1 : 0;
            if (stalled > stall_limit) bland_mode_ = true;
        }
    }
}

std::vector<Rat> Phase1Simplex::dual() const {
    std::vector<Rat> y(rows_);
    for (int t = 0; t < rows_; ++t) y[t] = Rat(1) - d_[col_count_ + t];
    return y;
}

std::vector<Rat> Phase1Simplex::primal() const {
    std::vector<Rat> x(col_count_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        if (basis_[i] < kArtificialBase) x[basis_[i]] = rhs_[i];
    return x;
}

std::vector<Rat> Phase1Simplex::farkas() const {
    auto y = dual();
    for (auto& v : y) v = -v;
    return y;
}

bool verify_primal(const std::vector<std::vector<Rat>>& m, const std::vector<Rat>& x) {
    for (const auto& v : x)
        if (v < 0) return false;
    for (const auto& row : m) {
        Rat s = 0;
        for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * x[j];
        if (s != 1) return false;
    }
    return true;
}

bool verify_certificate(const std::vector<std::vector<Rat>>& m, const std::vector<Rat>& y) {
    Rat total = 0;
    for (const auto& v : y) total += v;
    if (!(total < 0)) return false;
    if (m.empty()) return true;
    const std::size_t cols = m[0].size();
    for (std::size_t j = 0; j < cols; ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < m.size(); ++i) s += m[i][j] * y[i];
        if (s < 0) return false;
    }
    return true;
}

DenseOutcome solve_feasibility_dense(const std::vector<std::vector<Rat>>& m) {
    if (m.empty()) throw precondition_error("empty system");
    const int rows = static_cast<int>(m.size());
    const std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw precondition_error("ragged matrix");

    Phase1Simplex s(rows);
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<std::pair<int, Rat>> col;
        for (int i = 0; i < rows; ++i)
            if (m[i][j] != 0) col.emplace_back(i, m[i][j]);
        s.add_column(col);
    }
    s.optimize();

    DenseOutcome out;
    out.pivots = s.pivot_count();
    if (s.feasible()) {
        out.feasible = true;
        out.x = s.primal();
        if (!verify_primal(m, out.x))
            throw verification_error("simplex claimed feasibility but Mx = 1 fails exactly");
    } else {
        out.feasible = false;
        out.y = s.farkas();
        if (!verify_certificate(m, out.y))
            throw verification_error("simplex claimed infeasibility but the certificate fails");
    }
    return out;
}

} // namespace cggpack
