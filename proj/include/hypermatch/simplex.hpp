#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hypermatch {

enum class LpStatus { optimal, infeasible, unbounded };

// min c.x s.t. rows (== / <=) over x >= 0, all rhs >= 0.
template <class R>
struct LpProblem {
    int num_vars = 0;
    std::vector<std::vector<std::pair<int32_t, R>>> rows;
    std::vector<R> rhs;
    std::vector<uint8_t> is_eq;
    std::vector<std::pair<int32_t, R>> objective;
};

template <class R>
struct LpSolution {
    LpStatus status = LpStatus::optimal;
    std::vector<R> x;       // structural values (optimal only)
    R objective{};          // c.x at optimum
    // Per-row multipliers. On infeasible exit this is a Farkas vector for the
    // phase-1 system: y.rhs > 0 and y^T A <= 0 componentwise over x >= 0.
    // On optimal exit these are the simplex duals used for column pricing.
    std::vector<R> row_duals;
};

// Dense exact tableau simplex. Entering rule is Dantzig until a run of
// degenerate pivots, then Bland until the objective moves again, which keeps
// the method finite on the highly degenerate matching polytopes seen here.
template <class R>
class DenseSimplex {
public:
    explicit DenseSimplex(const LpProblem<R>& p)
        : nv_(p.num_vars), m_(static_cast<int>(p.rows.size())) {
        for (int i = 0; i < m_; ++i)
            if (p.rhs[i] < R(0)) throw std::invalid_argument("simplex wants rhs >= 0");
        ns_ = 0;
        na_ = 0;
        for (int i = 0; i < m_; ++i) (p.is_eq[i] ? na_ : ns_) += 1;
        width_ = nv_ + ns_ + na_;
        tab_.assign(static_cast<size_t>(m_) * (width_ + 1), R(0));
        basis_.resize(m_);
        row_cols_.resize(m_);
        row_ids_.resize(m_);
        int s = 0, a = 0;
        for (int i = 0; i < m_; ++i) {
            row_ids_[i] = i;
            for (const auto& [j, v] : p.rows[i]) at(i, j) = v;
            at(i, width_) = p.rhs[i];
            if (p.is_eq[i]) {
                int col = nv_ + ns_ + a++;
                at(i, col) = R(1);
                basis_[i] = col;
                row_cols_[i] = col;
            } else {
                int col = nv_ + s++;
                at(i, col) = R(1);
                basis_[i] = col;
                row_cols_[i] = col;
            }
        }
        objective_ = p.objective;
    }

    LpSolution<R> solve(int num_original_rows) {
        LpSolution<R> out;
        // Phase 1: minimize the sum of artificials.
        z_.assign(width_ + 1, R(0));
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < nv_ + ns_) continue;  // slack-basic rows cost 0
            for (int j = 0; j <= width_; ++j) z_[j] -= at(i, j);
        }
        for (int i = 0; i < m_; ++i)
            if (basis_[i] >= nv_ + ns_) z_[basis_[i]] += R(1);
        ban_artificials_ = false;
        run();
        if (-z_[width_] > R(0)) {
            out.status = LpStatus::infeasible;
            out.row_duals.assign(num_original_rows, R(0));
            for (int i = 0; i < m_; ++i) {
                int col = row_cols_[i];
                R cost = col >= nv_ + ns_ ? R(1) : R(0);
                out.row_duals[row_ids_[i]] = cost - z_[col];
            }
            return out;
        }
        drive_out_artificials();

        // Phase 2: minimize the real objective.
        z_.assign(width_ + 1, R(0));
        for (const auto& [j, v] : objective_) z_[j] = v;
        for (int i = 0; i < m_; ++i) {
            R cb = cost_of(basis_[i]);
            if (cb.is_zero()) continue;
            for (int j = 0; j <= width_; ++j) z_[j] -= cb * at(i, j);
        }
        ban_artificials_ = true;
        if (!run()) {
            out.status = LpStatus::unbounded;
            return out;
        }
        out.status = LpStatus::optimal;
        out.x.assign(nv_, R(0));
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < nv_) out.x[basis_[i]] = at(i, width_);
        out.objective = -z_[width_];
        out.row_duals.assign(num_original_rows, R(0));
        for (int i = 0; i < m_; ++i)
            out.row_duals[row_ids_[i]] = -z_[row_cols_[i]];
        return out;
    }

private:
    R& at(int i, int j) { return tab_[static_cast<size_t>(i) * (width_ + 1) + j]; }
    const R& at(int i, int j) const {
        return tab_[static_cast<size_t>(i) * (width_ + 1) + j];
    }

    R cost_of(int col) const {
        for (const auto& [j, v] : objective_)
            if (j == col) return v;
        return R(0);
    }

    bool col_banned(int j) const { return ban_artificials_ && j >= nv_ + ns_; }

    // Bland-compatible ratio test: min rhs/entry over positive entries,
    // ties broken by the smallest basic variable index.
    int ratio_row(int pcol) const {
        int row = -1;
        for (int i = 0; i < m_; ++i) {
            const R& e = at(i, pcol);
            if (!(e > R(0))) continue;
            if (row < 0) {
                row = i;
                continue;
            }
            const R lhs = at(i, width_) * at(row, pcol);
            const R rhs = at(row, width_) * e;
            if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[row])) row = i;
        }
        return row;
    }

    void pivot(int prow, int pcol) {
        const R pv = at(prow, pcol);
        for (int j = 0; j <= width_; ++j) at(prow, j) /= pv;
        for (int i = 0; i < m_; ++i) {
            if (i == prow) continue;
            const R f = at(i, pcol);
            if (f.is_zero()) continue;
            for (int j = 0; j <= width_; ++j) at(i, j) -= f * at(prow, j);
        }
        const R fz = z_[pcol];
        if (!fz.is_zero())
            for (int j = 0; j <= width_; ++j) z_[j] -= fz * at(prow, j);
        basis_[prow] = pcol;
    }

    // Returns false on unbounded.
    bool run() {
        int stall = 0;
        bool bland = false;
        while (true) {
            int pcol = -1;
            if (bland) {
                for (int j = 0; j < width_; ++j)
                    if (!col_banned(j) && z_[j] < R(0)) {
                        pcol = j;
                        break;
                    }
            } else {
                for (int j = 0; j < width_; ++j) {
                    if (col_banned(j) || !(z_[j] < R(0))) continue;
                    if (pcol < 0 || z_[j] < z_[pcol]) pcol = j;
                }
            }
            if (pcol < 0) return true;
            int prow = ratio_row(pcol);
            if (prow < 0) return false;
            bool degenerate = at(prow, width_).is_zero();
            pivot(prow, pcol);
            if (degenerate) {
                if (++stall > 40) bland = true;
            } else {
                stall = 0;
                bland = false;
            }
        }
    }

    void drive_out_artificials() {
        for (int i = m_ - 1; i >= 0; --i) {
            if (basis_[i] < nv_ + ns_) continue;
            int pcol = -1;
            for (int j = 0; j < nv_ + ns_; ++j)
                if (!at(i, j).is_zero()) {
                    pcol = j;
                    break;
                }
            if (pcol >= 0) {
                pivot(i, pcol);
            } else {
                // the row reduced to 0 = 0; drop it
                tab_.erase(tab_.begin() + static_cast<size_t>(i) * (width_ + 1),
                           tab_.begin() + static_cast<size_t>(i + 1) * (width_ + 1));
                basis_.erase(basis_.begin() + i);
                row_cols_.erase(row_cols_.begin() + i);
                row_ids_.erase(row_ids_.begin() + i);
                --m_;
            }
        }
    }

    int nv_, m_, ns_ = 0, na_ = 0, width_ = 0;
    bool ban_artificials_ = false;
    std::vector<R> tab_;
    std::vector<R> z_;
    std::vector<int32_t> basis_;
    std::vector<int32_t> row_cols_;  // the row's slack or artificial column
    std::vector<int32_t> row_ids_;   // original row index (rows can be dropped)
    std::vector<std::pair<int32_t, R>> objective_;
};

template <class R>
LpSolution<R> solve_lp(const LpProblem<R>& p) {
    DenseSimplex<R> s(p);
    return s.solve(static_cast<int>(p.rows.size()));
}

}  // namespace hypermatch
