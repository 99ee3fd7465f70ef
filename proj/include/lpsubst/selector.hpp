#pragma once

// Decision layer of one substitution step: stopping and unboundedness tests,
// the candidate sets, the filter applied when every cost coefficient is
// nonpositive, and the interval-based choice of the pair to substitute.

#include <optional>
#include <utility>
#include <vector>

#include "lpsubst/bounds.hpp"
#include "lpsubst/interval.hpp"

namespace lpsubst {

using Pair = std::pair<int, int>;  ///< (row, variable)

struct Candidate {
    BoundFunction fb;  ///< bound on the variable
    LinearForm fz;     ///< cost after substituting fb
    HClass fz_class = HClass::U;

    Pair pair() const { return {fb.row, fb.var}; }
};

/// Builds a candidate from a bound and the current cost.
Candidate make_candidate(const LinearForm& cost, BoundFunction fb);

enum class CandidateKind { Upper, Lower, LowerRelaxed };
const char* to_string(CandidateKind k);

struct CandidateSet {
    CandidateKind kind = CandidateKind::Upper;
    std::vector<Candidate> items;
    std::vector<int> dominating;
    /// The dominating-variable branch produced nothing and the full partition was used instead.
    bool fell_through = false;
};

/// True iff no remaining variable has a positive cost coefficient and the h
/// column over rows 0..m is nonpositive. Then max cost = c_h h at x = 0.
bool check_stop(const Tableau& t);
bool check_stop(const Tableau& t, const CostPartition& p);

/// A variable with nonzero cost coefficient whose column over rows 0..m is <= 0, if any.
std::optional<int> unbounded_witness(const Tableau& t, const CostPartition& p);
bool check_unbounded(const Tableau& t);

/// Throws std::invalid_argument when no variable remains.
CandidateSet candidate_sets(const Tableau& t);
CandidateSet candidate_sets(const Tableau& t, const LinearForm& cost, const CostPartition& p);

/// Keeps candidates whose fz is <= c_h h on the whole nonnegative orthant,
/// i.e. every x coefficient <= 0 and h coefficient <= c_h.
std::vector<Candidate> b_filter(const std::vector<Candidate>& cands, const Rational& ch);

struct SelectionResult {
    Pair chosen{0, 0};
    Candidate candidate;
    HClass t_class = HClass::B;        ///< class of the cost functions in the chosen group
    HClass t_prime_class = HClass::B;  ///< class of the bound functions in the chosen group
    std::vector<Pair> class_members;
    IntervalMag tau;                   ///< smallest cost image over the class
    std::vector<Pair> tau_argset;
    std::optional<IntervalMag> second; ///< tie-break image of the bound functions
    std::vector<Pair> second_argset;
    bool lexicographic_tiebreak = false;
};

/// Throws std::invalid_argument on an empty or mixed-kind candidate list.
SelectionResult select_pair(const std::vector<Candidate>& cands);

}  // namespace lpsubst
