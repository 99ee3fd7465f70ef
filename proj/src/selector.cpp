#include "lpsubst/selector.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace lpsubst {

namespace {

std::vector<int> unite(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Candidate> with_costs(const LinearForm& cost, std::vector<BoundFunction> bounds) {
    std::vector<Candidate> out;
    out.reserve(bounds.size());
    for (auto& b : bounds) out.push_back(make_candidate(cost, std::move(b)));
    return out;
}

}  // namespace

Candidate make_candidate(const LinearForm& cost, BoundFunction fb) {
    Candidate c;
    c.fz = substitute_cost(cost, fb);
    c.fz_class = classify(c.fz);
    c.fb = std::move(fb);
    return c;
}

const char* to_string(CandidateKind k) {
    switch (k) {
        case CandidateKind::Upper: return "upper";
        case CandidateKind::Lower: return "lower";
        case CandidateKind::LowerRelaxed: return "lower-relaxed";
    }
    return "?";
}

bool check_stop(const Tableau& t, const CostPartition& p) {
    if (!p.plus.empty()) return false;
    for (int i = 0; i <= t.m(); ++i)
        if (t.at(i, t.h_col()) > 0) return false;
    return true;
}

bool check_stop(const Tableau& t) { return check_stop(t, partition_vars(t)); }

std::optional<int> unbounded_witness(const Tableau& t, const CostPartition& p) {
    for (int j : unite(p.plus, p.minus)) {
        bool has_upper = false;
        for (int i = 0; i <= t.m() && !has_upper; ++i) has_upper = t.at(i, j) > 0;
        if (!has_upper) return j;
    }
    return std::nullopt;
}

bool check_unbounded(const Tableau& t) { return unbounded_witness(t, partition_vars(t)).has_value(); }

CandidateSet candidate_sets(const Tableau& t) { return candidate_sets(t, t.cost(), partition_vars(t)); }

CandidateSet candidate_sets(const Tableau& t, const LinearForm& cost, const CostPartition& p) {
    if (t.remaining().empty()) throw std::invalid_argument("candidate_sets: no remaining variable");

    CandidateSet out;
    out.dominating = dominating_set(t);
    const auto upper_vars = unite(p.plus, p.zero);
    const auto lower_vars = unite(p.zero, p.minus);

    if (!out.dominating.empty()) {
        out.kind = CandidateKind::Upper;
        out.items = with_costs(cost, enumerate_bounds(t, intersect(upper_vars, out.dominating), BoundFilter::Upper));
        if (!out.items.empty()) return out;
        out.kind = CandidateKind::Lower;
        out.items = with_costs(
            cost, enumerate_bounds(t, intersect(lower_vars, out.dominating), BoundFilter::StrictlyPositiveLower));
        if (!out.items.empty()) return out;
        out.fell_through = true;
    }

    out.kind = CandidateKind::Upper;
    out.items = with_costs(cost, enumerate_bounds(t, upper_vars, BoundFilter::Upper));
    if (!out.items.empty()) return out;
    out.kind = CandidateKind::Lower;
    out.items = with_costs(cost, enumerate_bounds(t, lower_vars, BoundFilter::StrictlyPositiveLower));
    if (!out.items.empty()) return out;
    out.kind = CandidateKind::LowerRelaxed;
    out.items = with_costs(cost, enumerate_bounds(t, lower_vars, BoundFilter::Lower));
    return out;
}

std::vector<Candidate> b_filter(const std::vector<Candidate>& cands, const Rational& ch) {
    std::vector<Candidate> out;
    for (const auto& c : cands) {
        const bool x_ok = std::all_of(c.fz.x.begin(), c.fz.x.end(), [](const Rational& q) { return q <= 0; });
        if (x_ok && c.fz.h <= ch) out.push_back(c);
    }
    return out;
}

SelectionResult select_pair(const std::vector<Candidate>& cands) {
    if (cands.empty()) throw std::invalid_argument("select_pair: no candidates");
    const bool upper = cands.front().fb.kind == BoundKind::Upper;
    for (const auto& c : cands)
        if ((c.fb.kind == BoundKind::Upper) != upper) throw std::invalid_argument("select_pair: mixed bound kinds");

    SelectionResult res;

    // First nonempty class pair in the order (B,B), (B,U), (U,B), (U,U).
    static constexpr std::array<std::pair<HClass, HClass>, 4> order{{
        {HClass::B, HClass::B},
        {HClass::B, HClass::U},
        {HClass::U, HClass::B},
        {HClass::U, HClass::U},
    }};
    std::vector<const Candidate*> group;
    for (const auto& [tc, tpc] : order) {
        for (const auto& c : cands)
            if (c.fz_class == tc && c.fb.hclass == tpc) group.push_back(&c);
        if (!group.empty()) {
            res.t_class = tc;
            res.t_prime_class = tpc;
            break;
        }
    }
    for (const Candidate* c : group) res.class_members.push_back(c->pair());

    std::vector<std::pair<Pair, IntervalMag>> images;
    for (const Candidate* c : group) images.emplace_back(c->pair(), linear_image(c->fz, res.t_class));
    const auto first = min_mags(images);
    res.tau = first.value;
    res.tau_argset = first.keys;

    std::vector<Pair> finalists = first.keys;
    if (finalists.size() > 1) {
        std::vector<std::pair<Pair, IntervalMag>> second;
        for (const Candidate* c : group)
            if (std::find(finalists.begin(), finalists.end(), c->pair()) != finalists.end())
                second.emplace_back(c->pair(), linear_image(c->fb.form, res.t_prime_class));
        const auto stage = upper ? min_mags(second) : max_mags(second);
        res.second = stage.value;
        res.second_argset = stage.keys;
        finalists = stage.keys;
    }
    res.lexicographic_tiebreak = finalists.size() > 1;
    res.chosen = *std::min_element(finalists.begin(), finalists.end());
    for (const Candidate* c : group)
        if (c->pair() == res.chosen) res.candidate = *c;
    return res;
}

}  // namespace lpsubst
