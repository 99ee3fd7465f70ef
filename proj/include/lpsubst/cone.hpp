#pragma once

// The homogenized cone C(Abar) = { w = (z, x, h) : Abar w <= 0 } and the
// in-place operations the substitution method performs on it.
//
// Row labels run -1..m: row -1 is z - cost <= 0, row 0 is -cost <= 0 and
// rows 1..m are A x - b h <= 0. Column labels are 0 (z), 1..n (x_j) and n+1 (h).

#include <cstdint>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "lpsubst/bound.hpp"
#include "lpsubst/exact.hpp"
#include "lpsubst/linear_form.hpp"
#include "lpsubst/problem.hpp"

namespace lpsubst {

class Tableau {
public:
    /// abar has m+2 rows and n+2 columns. remaining lists the active variables (1..n).
    Tableau(RatMatrix abar, std::set<int> remaining, int step = 0);

    int m() const { return m_; }
    int n() const { return n_; }
    int step() const { return step_; }
    int h_col() const { return n_ + 1; }
    static constexpr int z_col = 0;

    /// Counted read of the cell at row label in [-1, m], column label in [0, n+1].
    const Rational& at(int row, int col) const;
    /// Uncounted access for mutation by the cone operations.
    Rational& cell(int row, int col);

    const RatMatrix& matrix() const { return abar_; }
    const std::set<int>& remaining() const { return remaining_; }
    bool is_active(int var) const { return remaining_.count(var) != 0; }

    /// Current cost: minus row -1 on the x and h columns. Row 0 carries the same
    /// entries until a sweep zeroes it.
    LinearForm cost() const;
    /// Current h-cost c_h.
    Rational ch() const;

    /// Removes var from the active set and zeroes its column.
    void deactivate(int var);
    void zero_row(int row);
    void replace_matrix(RatMatrix abar);
    void advance_step() { ++step_; }

    std::uint64_t reads() const { return reads_; }
    void add_reads(std::uint64_t n) const { reads_ += n; }

private:
    void check_cell(int row, int col) const;

    RatMatrix abar_;
    std::set<int> remaining_;
    int m_ = 0;
    int n_ = 0;
    int step_ = 0;
    mutable std::uint64_t reads_ = 0;
};

struct Substitution {
    int var;
    BoundFunction f;  ///< x_var = f.form(x, h)
};
struct ForcedZero {
    int var;
};
struct CostClose {
    LinearForm cost;  ///< z = cost(x, h)
};
using LedgerEntry = std::variant<Substitution, ForcedZero, CostClose>;

/// The triangular system accumulated by the substitution steps.
class EqualityLedger {
public:
    /// Each throws std::logic_error if the variable already has an entry.
    void add_substitution(BoundFunction f);
    void add_forced_zero(int var);
    void close_cost(LinearForm cost);

    const std::vector<LedgerEntry>& entries() const { return entries_; }
    bool contains(int var) const { return vars_.count(var) != 0; }
    bool closed() const { return closed_; }

private:
    void claim(int var);

    std::vector<LedgerEntry> entries_;
    std::set<int> vars_;
    bool closed_ = false;
};

/// Builds the step-0 tableau with c_h = 0.
Tableau homogenize(const LpProblem& p);

/// Zeroes every row 0..m whose entries are all <= 0. Returns the zeroed row labels
/// (rows that were already zero are not reported).
std::vector<int> set_row_to_zero(Tableau& t);

/// Column labels forced to zero by some row 0..m with all entries >= 0.
/// The h column (n+1) may be among them.
std::vector<int> check_nul_var(const Tableau& t);

struct SweepReport {
    std::vector<int> zeroed_rows;
    std::vector<int> forced_zero;  ///< variable labels, in the order they were forced
    bool h_forced_zero = false;
    int passes = 0;
};

/// Alternates set_row_to_zero and check_nul_var until neither changes anything,
/// recording each forced variable in the ledger and deactivating it. Stops
/// early when h is forced to zero.
SweepReport sweep(Tableau& t, EqualityLedger& ledger);

/// Builds the transition matrix for substituting x_var = f (identity with row var
/// replaced by (0, f.x, f.h)).
RatMatrix transition_matrix(const Tableau& t, const BoundFunction& f);

/// Abar <- Abar T + correction, where the correction puts -(0, f.x, f.h) in row
/// `row` so that it encodes x_var >= 0. Deactivates var and advances the step.
/// Sweeps are left to the caller.
/// Throws std::invalid_argument if var is inactive, row is not a constraint row,
/// or f is not the bound function of (row, var) in t.
void apply_substitution(Tableau& t, int row, int var, const BoundFunction& f);

}  // namespace lpsubst
