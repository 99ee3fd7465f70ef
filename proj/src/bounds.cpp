#include "lpsubst/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpsubst {

const char* to_string(BoundKind k) {
    switch (k) {
        case BoundKind::Upper: return "upper";
        case BoundKind::Lower: return "lower";
        case BoundKind::StrictlyPositiveLower: return "strictly-positive-lower";
    }
    return "?";
}

std::optional<BoundFunction> make_bound(const Tableau& t, int row, int var) {
    if (!t.is_active(var)) throw std::invalid_argument("make_bound: variable is not active");
    if (row < 0 || row > t.m()) throw std::invalid_argument("make_bound: row must lie in 0..m");

    const Rational pivot = t.at(row, var);
    if (pivot == 0) return std::nullopt;

    BoundFunction f;
    f.row = row;
    f.var = var;
    f.form = LinearForm(static_cast<std::size_t>(t.n()));
    for (int j : t.remaining())
        if (j != var) f.form.coef(j) = -t.at(row, j) / pivot;
    f.form.h = -t.at(row, t.h_col()) / pivot;

    if (pivot > 0) {
        f.kind = BoundKind::Upper;
    } else {
        const bool nonneg = std::all_of(f.form.x.begin(), f.form.x.end(), [](const Rational& q) { return q >= 0; });
        f.kind = nonneg && f.form.h > 0 ? BoundKind::StrictlyPositiveLower : BoundKind::Lower;
    }
    f.hclass = classify(f.form);
    return f;
}

std::vector<RowSigns> scan_rows(const Tableau& t) {
    std::vector<RowSigns> out(static_cast<std::size_t>(t.m() + 1));
    for (int i = 0; i <= t.m(); ++i) {
        RowSigns& s = out[static_cast<std::size_t>(i)];
        for (int j : t.remaining()) {
            const int sg = sign(t.at(i, j));
            if (sg > 0) ++s.positives;
            if (sg < 0) {
                ++s.negatives;
                s.sole_negative = j;
            }
        }
        if (s.negatives != 1) s.sole_negative = 0;
        s.h_sign = sign(t.at(i, t.h_col()));
    }
    return out;
}

std::vector<BoundFunction> enumerate_bounds(const Tableau& t, std::span<const int> vars, BoundFilter filter) {
    for (int j : vars)
        if (!t.is_active(j)) throw std::invalid_argument("enumerate_bounds: variable is not active");

    std::vector<BoundFunction> out;
    if (filter == BoundFilter::StrictlyPositiveLower) {
        const auto signs = scan_rows(t);
        for (int i = 0; i <= t.m(); ++i) {
            const RowSigns& s = signs[static_cast<std::size_t>(i)];
            for (int j : vars)
                if (strictly_positive_lower(s, j)) out.push_back(*make_bound(t, i, j));
        }
        return out;
    }

    const int wanted = filter == BoundFilter::Upper ? 1 : -1;
    for (int i = 0; i <= t.m(); ++i)
        for (int j : vars)
            if (sign(t.at(i, j)) == wanted) out.push_back(*make_bound(t, i, j));
    return out;
}

LinearForm substitute_cost(const LinearForm& cost, const BoundFunction& f) {
    if (cost.n() != f.form.n()) throw DimensionMismatch("substitute_cost: arity mismatch");
    const Rational cj = cost.coef(f.var);
    LinearForm out = cost;
    out.coef(f.var) = 0;
    if (cj != 0) {
        for (std::size_t k = 0; k < out.x.size(); ++k) out.x[k] += cj * f.form.x[k];
        out.h += cj * f.form.h;
    }
    return out;
}

LinearForm substitute_cost(const Tableau& t, const BoundFunction& f) { return substitute_cost(t.cost(), f); }

CostPartition partition_vars(const LinearForm& cost, const std::set<int>& remaining) {
    CostPartition p;
    for (int j : remaining) {
        const int sg = sign(cost.coef(j));
        (sg > 0 ? p.plus : sg == 0 ? p.zero : p.minus).push_back(j);
    }
    return p;
}

CostPartition partition_vars(const Tableau& t) { return partition_vars(t.cost(), t.remaining()); }

std::vector<int> dominating_set(const Tableau& t) {
    const auto signs = scan_rows(t);
    std::set<int> has_sp_lower;
    for (const RowSigns& s : signs)
        if (s.negatives == 1 && s.h_sign > 0) has_sp_lower.insert(s.sole_negative);

    std::vector<int> out;
    for (int j : has_sp_lower) {
        for (int i = 0; i <= t.m(); ++i)
            if (t.at(i, j) > 0) {
                out.push_back(j);
                break;
            }
    }
    return out;
}

}  // namespace lpsubst
