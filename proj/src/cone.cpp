#include "lpsubst/cone.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lpsubst {

namespace {

std::size_t row_index(int row) { return static_cast<std::size_t>(row + 1); }
std::size_t col_index(int col) { return static_cast<std::size_t>(col); }

}  // namespace

// Tableau ------------------------------------------------------------------

Tableau::Tableau(RatMatrix abar, std::set<int> remaining, int step)
    : abar_(std::move(abar)), remaining_(std::move(remaining)), step_(step) {
    if (abar_.rows() < 2 || abar_.cols() < 2) throw DimensionMismatch("tableau needs rows -1, 0 and columns z, h");
    m_ = static_cast<int>(abar_.rows()) - 2;
    n_ = static_cast<int>(abar_.cols()) - 2;
    for (int v : remaining_)
        if (v < 1 || v > n_) throw std::invalid_argument("remaining variable out of range: " + std::to_string(v));
}

void Tableau::check_cell(int row, int col) const {
    if (row < -1 || row > m_ || col < 0 || col > n_ + 1)
        throw std::out_of_range("tableau cell (" + std::to_string(row) + ", " + std::to_string(col) + ")");
}

const Rational& Tableau::at(int row, int col) const {
    check_cell(row, col);
    ++reads_;
    return abar_(row_index(row), col_index(col));
}

Rational& Tableau::cell(int row, int col) {
    check_cell(row, col);
    return abar_(row_index(row), col_index(col));
}

LinearForm Tableau::cost() const {
    LinearForm f(static_cast<std::size_t>(n_));
    for (int j : remaining_) f.coef(j) = -at(-1, j);
    f.h = -at(-1, h_col());
    return f;
}

Rational Tableau::ch() const { return -at(-1, h_col()); }

void Tableau::deactivate(int var) {
    if (!remaining_.erase(var)) throw std::invalid_argument("variable " + std::to_string(var) + " is not active");
    for (int r = -1; r <= m_; ++r) cell(r, var) = 0;
}

void Tableau::zero_row(int row) {
    for (int c = 0; c <= n_ + 1; ++c) cell(row, c) = 0;
}

void Tableau::replace_matrix(RatMatrix abar) {
    if (abar.rows() != abar_.rows() || abar.cols() != abar_.cols())
        throw DimensionMismatch("replacement tableau has a different shape");
    abar_ = std::move(abar);
}

// EqualityLedger -----------------------------------------------------------

void EqualityLedger::claim(int var) {
    if (closed_) throw std::logic_error("ledger already closed");
    if (!vars_.insert(var).second)
        throw std::logic_error("variable " + std::to_string(var) + " already has a ledger entry");
}

void EqualityLedger::add_substitution(BoundFunction f) {
    claim(f.var);
    const int var = f.var;
    entries_.push_back(Substitution{var, std::move(f)});
}

void EqualityLedger::add_forced_zero(int var) {
    claim(var);
    entries_.push_back(ForcedZero{var});
}

void EqualityLedger::close_cost(LinearForm cost) {
    if (closed_) throw std::logic_error("ledger already closed");
    entries_.push_back(CostClose{std::move(cost)});
    closed_ = true;
}

// Construction -------------------------------------------------------------

Tableau homogenize(const LpProblem& p) {
    p.validate();
    const std::size_t m = p.m(), n = p.n();
    RatMatrix abar(m + 2, n + 2);
    abar(0, 0) = 1;
    for (std::size_t j = 0; j < n; ++j) {
        abar(0, j + 1) = -p.c[j];
        abar(1, j + 1) = -p.c[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) abar(i + 2, j + 1) = p.A(i, j);
        abar(i + 2, n + 1) = -p.b[i];
    }
    std::set<int> remaining;
    for (std::size_t j = 1; j <= n; ++j) remaining.insert(static_cast<int>(j));
    return Tableau(std::move(abar), std::move(remaining), 0);
}

// Sweeps -------------------------------------------------------------------

std::vector<int> set_row_to_zero(Tableau& t) {
    std::vector<int> zeroed;
    for (int i = 0; i <= t.m(); ++i) {
        bool nonpositive = true, nonzero = false;
        for (int c = 0; c <= t.h_col() && nonpositive; ++c) {
            const Rational& a = t.at(i, c);
            nonpositive = a <= 0;
            nonzero = nonzero || a != 0;
        }
        if (nonpositive && nonzero) {
            t.zero_row(i);
            zeroed.push_back(i);
        }
    }
    return zeroed;
}

std::vector<int> check_nul_var(const Tableau& t) {
    std::set<int> forced;
    for (int i = 0; i <= t.m(); ++i) {
        bool nonnegative = true;
        for (int c = 0; c <= t.h_col() && nonnegative; ++c) nonnegative = t.at(i, c) >= 0;
        if (!nonnegative) continue;
        for (int c = 0; c <= t.h_col(); ++c)
            if (t.at(i, c) > 0) forced.insert(c);
    }
    return {forced.begin(), forced.end()};
}

SweepReport sweep(Tableau& t, EqualityLedger& ledger) {
    SweepReport report;
    for (;;) {
        ++report.passes;
        const auto zeroed = set_row_to_zero(t);
        report.zeroed_rows.insert(report.zeroed_rows.end(), zeroed.begin(), zeroed.end());

        bool changed = !zeroed.empty();
        for (int c : check_nul_var(t)) {
            if (c == t.h_col()) {
                report.h_forced_zero = true;
                continue;
            }
            // z never appears with a positive entry in rows 0..m.
            if (c == Tableau::z_col) continue;
            ledger.add_forced_zero(c);
            t.deactivate(c);
            report.forced_zero.push_back(c);
            changed = true;
        }
        if (report.h_forced_zero || !changed) break;
    }
    return report;
}

// Substitution -------------------------------------------------------------

RatMatrix transition_matrix(const Tableau& t, const BoundFunction& f) {
    const auto size = static_cast<std::size_t>(t.n() + 2);
    RatMatrix T = RatMatrix::identity(size);
    auto row = T.row(static_cast<std::size_t>(f.var));
    row[0] = 0;
    for (int j = 1; j <= t.n(); ++j) row[static_cast<std::size_t>(j)] = f.form.coef(j);
    row[size - 1] = f.form.h;
    return T;
}

void apply_substitution(Tableau& t, int row, int var, const BoundFunction& f) {
    if (!t.is_active(var)) throw std::invalid_argument("apply_substitution: variable is not active");
    if (row < 1 || row > t.m()) throw std::invalid_argument("apply_substitution: pivot must be a constraint row");
    if (f.row != row || f.var != var) throw std::invalid_argument("apply_substitution: bound not sourced at pivot");
    if (f.form.n() != static_cast<std::size_t>(t.n()))
        throw std::invalid_argument("apply_substitution: bound has the wrong arity");

    const Rational& pivot = t.at(row, var);
    if (pivot == 0) throw std::invalid_argument("apply_substitution: zero pivot");
    bool matches = f.form.coef(var) == 0 && f.form.h == Rational(-t.at(row, t.h_col()) / pivot);
    for (int j = 1; j <= t.n() && matches; ++j) {
        if (j == var) continue;
        const Rational expected = t.is_active(j) ? Rational(-t.at(row, j) / pivot) : Rational(0);
        matches = f.form.coef(j) == expected;
    }
    if (!matches) throw std::invalid_argument("apply_substitution: bound not sourced at pivot");

    RatMatrix next = mat_mul(t.matrix(), transition_matrix(t, f));
    t.add_reads(static_cast<std::uint64_t>(t.matrix().rows() * t.matrix().cols()));

    RatMatrix correction(next.rows(), next.cols());
    auto crow = correction.row(row_index(row));
    for (int j = 1; j <= t.n(); ++j) crow[static_cast<std::size_t>(j)] = -f.form.coef(j);
    crow[static_cast<std::size_t>(t.h_col())] = -f.form.h;

    t.replace_matrix(mat_add(next, correction));
    t.deactivate(var);
    t.advance_step();
}

}  // namespace lpsubst
