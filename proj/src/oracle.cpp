#include "lpsubst/oracle.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace lpsubst {

const char* to_string(OracleStatus s) {
    switch (s) {
        case OracleStatus::Optimal: return "optimal";
        case OracleStatus::Unbounded: return "unbounded";
        case OracleStatus::Infeasible: return "infeasible";
    }
    return "?";
}

namespace {

// Dense tableau in equality form: columns are x (n), slacks (m), artificials,
// then the right-hand side.
class SimplexTableau {
public:
    SimplexTableau(const LpProblem& p) : m_(p.m()), n_(p.n()) {
        for (std::size_t i = 0; i < m_; ++i)
            if (p.b[i] < 0) ++art_;
        cols_ = n_ + m_ + art_;
        t_ = RatMatrix(m_, cols_ + 1);
        basis_.resize(m_);
        std::size_t next_art = n_ + m_;
        for (std::size_t i = 0; i < m_; ++i) {
            const bool flip = p.b[i] < 0;
            for (std::size_t j = 0; j < n_; ++j) t_(i, j) = flip ? Rational(-p.A(i, j)) : p.A(i, j);
            t_(i, n_ + i) = flip ? -1 : 1;
            t_(i, cols_) = flip ? Rational(-p.b[i]) : p.b[i];
            if (flip) {
                t_(i, next_art) = 1;
                basis_[i] = next_art++;
            } else {
                basis_[i] = n_ + i;
            }
        }
    }

    std::size_t artificial_begin() const { return n_ + m_; }
    std::size_t cols() const { return cols_; }
    std::size_t pivots() const { return pivots_; }
    const Rational& rhs(std::size_t i) const { return t_(i, cols_); }

    /// Maximizes cost over the columns below `limit`. Returns the entering column
    /// of an unbounded direction, or nullopt at optimality.
    std::optional<std::size_t> maximize(const RatVector& cost, std::size_t limit) {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < limit && !enter; ++j)
                if (reduced_cost(cost, j) > 0) enter = j;
            if (!enter) return std::nullopt;

            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_(i, *enter) <= 0) continue;
                Rational ratio = rhs(i) / t_(i, *enter);
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (!leave) return enter;
            pivot(*leave, *enter);
        }
    }

    /// Pivots basic artificials at level zero out of the basis where possible.
    void expel_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < artificial_begin()) continue;
            for (std::size_t j = 0; j < artificial_begin(); ++j)
                if (t_(i, j) != 0) {
                    pivot(i, j);
                    break;
                }
        }
    }

    Rational objective(const RatVector& cost) const {
        Rational z = 0;
        for (std::size_t i = 0; i < m_; ++i) z += cost[basis_[i]] * rhs(i);
        return z;
    }

    RatVector primal() const {
        RatVector x(n_);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = rhs(i);
        return x;
    }

    RatVector ray(std::size_t enter) const {
        RatVector d(n_);
        if (enter < n_) d[enter] = 1;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) d[basis_[i]] = -t_(i, enter);
        return d;
    }

private:
    Rational reduced_cost(const RatVector& cost, std::size_t j) const {
        Rational d = cost[j];
        for (std::size_t i = 0; i < m_; ++i)
            if (t_(i, j) != 0) d -= cost[basis_[i]] * t_(i, j);
        return d;
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rational p = t_(r, c);
        for (std::size_t j = 0; j <= cols_; ++j) t_(r, j) /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || t_(i, c) == 0) continue;
            const Rational f = t_(i, c);
            for (std::size_t j = 0; j <= cols_; ++j) t_(i, j) -= f * t_(r, j);
        }
        basis_[r] = c;
        ++pivots_;
    }

    std::size_t m_, n_, art_ = 0, cols_ = 0;
    RatMatrix t_;
    std::vector<std::size_t> basis_;
    std::size_t pivots_ = 0;
};

}  // namespace

OracleOutcome simplex_solve(const LpProblem& p) {
    p.validate();
    SimplexTableau tab(p);
    OracleOutcome out;

    RatVector phase1(tab.cols());
    for (std::size_t j = tab.artificial_begin(); j < tab.cols(); ++j) phase1[j] = -1;
    tab.maximize(phase1, tab.cols());
    if (tab.objective(phase1) < 0) {
        out.status = OracleStatus::Infeasible;
        out.pivots = tab.pivots();
        return out;
    }
    tab.expel_artificials();

    RatVector phase2(tab.cols());
    for (std::size_t j = 0; j < p.n(); ++j) phase2[j] = p.c[j];
    if (auto enter = tab.maximize(phase2, tab.artificial_begin())) {
        out.status = OracleStatus::Unbounded;
        out.ray = tab.ray(*enter);
    } else {
        out.status = OracleStatus::Optimal;
        out.x = tab.primal();
        out.z = tab.objective(phase2);
    }
    out.pivots = tab.pivots();
    return out;
}

bool verify_solution(const LpProblem& p, std::span<const Rational> x, const Rational& z) {
    if (x.size() != p.n() || p.b.size() != p.m() || p.c.size() != p.n()) return false;
    for (const auto& q : x)
        if (q < 0) return false;
    for (std::size_t i = 0; i < p.m(); ++i)
        if (dot(p.A.row(i), x) > p.b[i]) return false;
    return dot(p.c, x) == z;
}

bool verify_ray(const LpProblem& p, std::span<const Rational> d) {
    if (d.size() != p.n()) return false;
    for (const auto& q : d)
        if (q < 0) return false;
    for (std::size_t i = 0; i < p.m(); ++i)
        if (dot(p.A.row(i), d) > 0) return false;
    return dot(p.c, d) > 0;
}

}  // namespace lpsubst
