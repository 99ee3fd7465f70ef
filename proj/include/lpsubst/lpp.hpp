#pragma once

// Full LP driver: the primal search, then the dual search when the primal
// forces h = 0.

#include <optional>
#include <string>
#include <vector>

#include "lpsubst/oracle.hpp"
#include "lpsubst/pmrp.hpp"

namespace lpsubst {

enum class LppStatus { PositiveMax, NegativeMax, NoMaximum, Unbounded, MethodFail };
const char* to_string(LppStatus s);

struct LppOutcome {
    LppStatus status = LppStatus::MethodFail;
    Rational z;    ///< PositiveMax / NegativeMax only
    RatVector x;   ///< PositiveMax: primal solution at h = 1
    RatVector y;   ///< NegativeMax: dual solution at h = 1
    PmrpOutcome primal;
    std::optional<PmrpOutcome> dual;
    /// Primal point from the reference simplex, filled on request for NegativeMax.
    std::optional<RatVector> oracle_x;
    std::vector<std::string> notes;
};

struct LppOptions {
    bool oracle_witness = false;
};

LppOutcome lpp_solve(const LpProblem& p, const LppOptions& opts = {});

}  // namespace lpsubst
