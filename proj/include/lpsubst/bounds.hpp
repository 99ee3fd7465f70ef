#pragma once

// Bound functions generated by solving one tableau row for one variable,
// and the classifications the selector works with.

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "lpsubst/bound.hpp"
#include "lpsubst/cone.hpp"

namespace lpsubst {

/// Split of the remaining variables by the sign of their current cost coefficient.
struct CostPartition {
    std::vector<int> plus;
    std::vector<int> zero;
    std::vector<int> minus;

    friend bool operator==(const CostPartition&, const CostPartition&) = default;
};

/// Solves row `row` (0..m) for active variable `var`. Returns nullopt when the
/// entry is zero. Throws std::invalid_argument for an inactive variable or a row
/// outside 0..m.
std::optional<BoundFunction> make_bound(const Tableau& t, int row, int var);

enum class BoundFilter {
    Upper,
    Lower,                  ///< any lower bound, strictly positive or not
    StrictlyPositiveLower,
};

/// All bounds of the requested kind over rows 0..m and the given variables,
/// ordered by (row, var).
std::vector<BoundFunction> enumerate_bounds(const Tableau& t, std::span<const int> vars, BoundFilter filter);

/// The cost with x_var replaced by f: coefficients c_j' + c_var v_j', h-coefficient c_h + c_var r.
LinearForm substitute_cost(const LinearForm& cost, const BoundFunction& f);
LinearForm substitute_cost(const Tableau& t, const BoundFunction& f);

CostPartition partition_vars(const LinearForm& cost, const std::set<int>& remaining);
CostPartition partition_vars(const Tableau& t);

/// Variables with at least one upper bound and at least one strictly positive lower bound.
std::vector<int> dominating_set(const Tableau& t);

/// Per-row sign counts over the active columns and h, gathered in one pass.
struct RowSigns {
    int positives = 0;
    int negatives = 0;
    int sole_negative = 0;  ///< the negative variable when negatives == 1
    int h_sign = 0;
};
std::vector<RowSigns> scan_rows(const Tableau& t);

/// x_var >= f is strictly positive iff var is the row's only negative active
/// entry and the h entry is positive.
inline bool strictly_positive_lower(const RowSigns& s, int var) {
    return s.negatives == 1 && s.sole_negative == var && s.h_sign > 0;
}

}  // namespace lpsubst
