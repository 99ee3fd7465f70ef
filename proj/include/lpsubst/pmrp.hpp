#pragma once

// The positive-maximum search on the homogenized cone: the case ladder that
// drives one substitution per step, and the backward solve of the ledger.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpsubst/cone.hpp"
#include "lpsubst/selector.hpp"

namespace lpsubst {

struct StepCounters {
    std::uint64_t sweep_reads = 0;
    std::uint64_t selection_reads = 0;  ///< partition, tests, candidate generation
    std::uint64_t update_reads = 0;     ///< transition-matrix product
    int sweep_passes = 0;
};

struct StepRecord {
    int k = 0;
    /// "0", "1.1", "1.2", "2.1", "2.2.1", "2.2.2" or "fallthrough".
    std::string case_label;
    RatMatrix tableau;  ///< tableau as it entered step k, before the sweeps
    std::vector<int> remaining;
    SweepReport sweep;
    CostPartition partition;
    std::optional<CandidateKind> candidate_kind;
    std::vector<Candidate> candidates;  ///< after the B-filter when it applies
    std::vector<Pair> filtered_out;
    std::optional<SelectionResult> selection;
    StepCounters counters;
    std::vector<std::string> notes;
};

enum class PmrpStatus { MaxFound, HZero, Unbounded };
const char* to_string(PmrpStatus s);

/// Why a run ended without the method's own stop or h = 0 conclusion.
enum class Anomaly {
    None,
    ExhaustedWithoutStop,  ///< no variable left but the stop test fails
    NoCandidates,          ///< the candidate sets are all empty
};
const char* to_string(Anomaly a);

struct PmrpOutcome {
    PmrpStatus status = PmrpStatus::HZero;
    Anomaly anomaly = Anomaly::None;
    std::string reason;
    Rational zcoef;                       ///< z = zcoef h when MaxFound
    std::map<int, Rational> assignment;   ///< coefficient of h for each ledgered variable
    int substitutions = 0;
    std::vector<StepRecord> trace;
    EqualityLedger ledger;
    std::optional<int> unbounded_var;
};

/// Raised when a run attempts more substitutions than there are variables.
struct SubstitutionCapExceeded : std::logic_error {
    using std::logic_error::logic_error;
};

/// Solves the homogenized problem from step 0.
PmrpOutcome pmrp_solve(const LpProblem& p);

/// Continues from an intermediate tableau and ledger (e.g. a published mid-run state).
PmrpOutcome pmrp_resume(Tableau t, EqualityLedger ledger);

/// Read-count budget breaches of one step, measured against the dimensions of
/// its tableau: selection <= 10 (m+2)(n+2), update <= (m+2)(n+2)^2 and
/// sweeps <= 3 passes (m+1)(n+2). Empty when the step is within budget.
std::vector<std::string> check_step_bounds(const StepRecord& rec);

struct BackSolution {
    std::map<int, Rational> vars;
    std::optional<Rational> z;  ///< present when the ledger is closed
};

/// Resolves the ledger last-to-first at the given h. Throws std::logic_error when an
/// entry refers to a variable that is not resolved later in the ledger.
BackSolution backward_substitute(const EqualityLedger& ledger, const Rational& h);

}  // namespace lpsubst
