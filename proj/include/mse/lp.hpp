#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mse/errors.hpp"
#include "mse/scalar.hpp"

namespace mse {

/// Exact rational linear feasibility over free variables.
///
/// A system is a list of rows  a.x >= b  or  a.x = b.  Strict inequalities
/// never appear here: callers with homogeneous systems scale ">" into
/// ">= 1" (monotonicity and separation constraints are all of that kind).
///
/// solve_feasibility answers with either an exact feasible point or a
/// Farkas certificate y (y >= 0 on inequality rows, yT A = 0, yT b > 0)
/// proving infeasibility.  Both answers are revalidated before being
/// returned, and the method is deterministic: a phase-1 simplex with the
/// least-index (Bland) pivot rule, so identical input gives identical
/// output, and termination needs no perturbation.

enum class Relation { GreaterEqual, Equal };

struct LinearRow {
    std::vector<Scalar> coeffs;
    Relation rel = Relation::GreaterEqual;
    Scalar rhs;
};

struct LinearSystem {
    std::size_t num_vars = 0;
    std::vector<LinearRow> rows;

    explicit LinearSystem(std::size_t vars = 0) : num_vars(vars) {}

    void add_ge(std::vector<Scalar> coeffs, Scalar rhs) {
        rows.push_back({std::move(coeffs), Relation::GreaterEqual, std::move(rhs)});
    }
    void add_eq(std::vector<Scalar> coeffs, Scalar rhs) {
        rows.push_back({std::move(coeffs), Relation::Equal, std::move(rhs)});
    }
};

struct FeasibilityResult {
    bool feasible = false;
    std::vector<Scalar> point;   // set when feasible
    std::vector<Scalar> farkas;  // set when infeasible
    std::size_t pivots = 0;
};

/// Exact substitution check of a candidate point against every row.
inline bool satisfies(const LinearSystem& sys, const std::vector<Scalar>& x) {
    if (x.size() != sys.num_vars) return false;
    for (const LinearRow& row : sys.rows) {
        Scalar lhs = 0;
        for (std::size_t j = 0; j < sys.num_vars; ++j) lhs += row.coeffs[j] * x[j];
        if (row.rel == Relation::Equal ? lhs != row.rhs : lhs < row.rhs) return false;
    }
    return true;
}

/// True iff y certifies infeasibility: correct length, y_i >= 0 on
/// inequality rows, yT A = 0 exactly and yT b > 0 exactly.
inline bool validate_farkas(const LinearSystem& sys, const std::vector<Scalar>& y) {
    if (y.size() != sys.rows.size()) return false;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (sys.rows[i].rel == Relation::GreaterEqual && y[i] < 0) return false;
    }
    std::vector<Scalar> combo(sys.num_vars, Scalar(0));
    Scalar rhs = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0) continue;
        for (std::size_t j = 0; j < sys.num_vars; ++j) combo[j] += y[i] * sys.rows[i].coeffs[j];
        rhs += y[i] * sys.rows[i].rhs;
    }
    for (const Scalar& c : combo) if (c != 0) return false;
    return rhs > 0;
}

namespace detail {

/// Dense phase-1 tableau.  Free variables are split x = u - w internally;
/// the split never leaks into the interface.  Column layout:
///   [ u_0..u_{n-1} | w_0..w_{n-1} | slack per inequality row | artificials ]
/// Rows are sign-normalized to a nonnegative right-hand side, and the
/// artificial basis of the initial tableau doubles as the record from
/// which the Farkas multipliers are read at an infeasible optimum.
class PhaseOneSimplex {
public:
    explicit PhaseOneSimplex(const LinearSystem& sys) : n_(sys.num_vars), m_(sys.rows.size()) {
        std::size_t num_ge = 0;
        for (const LinearRow& r : sys.rows) num_ge += r.rel == Relation::GreaterEqual;
        art0_ = 2 * n_ + num_ge;
        cols_ = art0_ + m_;
        rhs_ = cols_;

        tab_.assign(m_, std::vector<Scalar>(cols_ + 1, Scalar(0)));
        sigma_.assign(m_, 1);
        basis_.assign(m_, 0);
        std::size_t slack = 2 * n_;
        for (std::size_t i = 0; i < m_; ++i) {
            const LinearRow& row = sys.rows[i];
            if (row.coeffs.size() != n_) throw Error("linear system: row arity mismatch");
            sigma_[i] = row.rhs < 0 ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) {
                Scalar v = sigma_[i] < 0 ? -row.coeffs[j] : row.coeffs[j];
                tab_[i][n_ + j] = -v;
                tab_[i][j] = std::move(v);
            }
            tab_[i][rhs_] = sigma_[i] < 0 ? -row.rhs : row.rhs;
            if (row.rel == Relation::GreaterEqual) {
                tab_[i][slack] = sigma_[i] < 0 ? Scalar(1) : Scalar(-1);
                ++slack;
            }
            tab_[i][art0_ + i] = 1;
            basis_[i] = art0_ + i;
        }

        // reduced costs for minimizing the sum of artificials; the
        // artificial columns themselves start at 0
        red_.assign(cols_, Scalar(0));
        obj_ = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < art0_; ++j) red_[j] -= tab_[i][j];
            obj_ += tab_[i][rhs_];
        }
    }

    /// Runs to optimality; returns the number of pivots performed.
    std::size_t run() {
        std::size_t pivots = 0;
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (red_[j] < 0) { enter = j; break; }
            }
            if (enter == cols_) return pivots;

            std::size_t leave = m_;
            Scalar best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Scalar ratio = tab_[i][rhs_] / tab_[i][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave == m_) throw Error("phase-1 objective unbounded: malformed tableau");
            pivot(leave, enter);
            ++pivots;
        }
    }

    bool optimal_is_zero() const { return obj_ == 0; }

    std::vector<Scalar> extract_point() const {
        std::vector<Scalar> value(cols_, Scalar(0));
        for (std::size_t i = 0; i < m_; ++i) value[basis_[i]] = tab_[i][rhs_];
        std::vector<Scalar> x(n_);
        for (std::size_t j = 0; j < n_; ++j) x[j] = value[j] - value[n_ + j];
        return x;
    }

    /// Farkas multipliers for the original (un-normalized) rows, read off
    /// the artificial reduced costs at an infeasible optimum.
    std::vector<Scalar> extract_farkas() const {
        std::vector<Scalar> y(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            Scalar yi = Scalar(1) - red_[art0_ + i];
            y[i] = sigma_[i] < 0 ? -yi : yi;
        }
        return y;
    }

private:
    void pivot(std::size_t row, std::size_t col) {
        std::vector<Scalar>& prow = tab_[row];
        const Scalar piv = prow[col];
        for (std::size_t j = 0; j <= rhs_; ++j) {
            if (prow[j] != 0) prow[j] /= piv;
        }
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == row || tab_[r][col] == 0) continue;
            const Scalar f = tab_[r][col];
            std::vector<Scalar>& t = tab_[r];
            for (std::size_t j = 0; j <= rhs_; ++j) {
                if (prow[j] != 0) t[j] -= f * prow[j];
            }
        }
        if (red_[col] != 0) {
            const Scalar f = red_[col];
            for (std::size_t j = 0; j < cols_; ++j) {
                if (prow[j] != 0) red_[j] -= f * prow[j];
            }
            obj_ += f * prow[rhs_];
        }
        basis_[row] = col;
    }

    std::size_t n_, m_, art0_, cols_, rhs_;
    std::vector<std::vector<Scalar>> tab_;
    std::vector<Scalar> red_;
    Scalar obj_;
    std::vector<int> sigma_;
    std::vector<std::size_t> basis_;
};

} // namespace detail

inline FeasibilityResult solve_feasibility(const LinearSystem& sys) {
    FeasibilityResult res;
    if (sys.rows.empty()) {
        res.feasible = true;
        res.point.assign(sys.num_vars, Scalar(0));
        return res;
    }
    detail::PhaseOneSimplex simplex(sys);
    res.pivots = simplex.run();
    if (simplex.optimal_is_zero()) {
        res.feasible = true;
        res.point = simplex.extract_point();
        if (!satisfies(sys, res.point)) throw Error("internal: feasible point failed recheck");
    } else {
        res.feasible = false;
        res.farkas = simplex.extract_farkas();
        if (!validate_farkas(sys, res.farkas)) throw Error("internal: Farkas certificate failed recheck");
    }
    return res;
}

} // namespace mse
