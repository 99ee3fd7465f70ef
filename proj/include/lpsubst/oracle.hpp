#pragma once

// Independent reference solver: two-phase exact simplex with Bland's rule.

#include <cstddef>
#include <span>

#include "lpsubst/problem.hpp"

namespace lpsubst {

enum class OracleStatus { Optimal, Unbounded, Infeasible };
const char* to_string(OracleStatus s);

struct OracleOutcome {
    OracleStatus status = OracleStatus::Infeasible;
    RatVector x;    ///< optimal basic feasible solution (Optimal only)
    Rational z;     ///< optimal value (Optimal only)
    RatVector ray;  ///< d >= 0 with A d <= 0 and c^T d > 0 (Unbounded only)
    std::size_t pivots = 0;
};

OracleOutcome simplex_solve(const LpProblem& p);

/// A x <= b, x >= 0 and c^T x = z, all exactly.
bool verify_solution(const LpProblem& p, std::span<const Rational> x, const Rational& z);

/// A d <= 0, d >= 0 and c^T d > 0.
bool verify_ray(const LpProblem& p, std::span<const Rational> d);

}  // namespace lpsubst
