#pragma once

// Problem files, outcome and trace serialization.
//
// Problem file:
//   {"name": "...", "sense": "max", "objective": ["p/q", ...],
//    "A": [["p/q", ...], ...], "b": ["p/q", ...]}
// Scalars are "p/q" strings or JSON integers. Traces are JSON Lines, one
// step per line.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lpsubst/lpp.hpp"
#include "lpsubst/oracle.hpp"

namespace lpsubst {

using json = nlohmann::ordered_json;

/// Malformed problem text. line and column are 1-based and 0 when unknown.
class ProblemSyntaxError : public std::runtime_error {
public:
    ProblemSyntaxError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

/// Throws ProblemSyntaxError (bad JSON, duplicate or unknown keys, wrong types),
/// DimensionMismatch (ragged rows, wrong lengths) or RationalSyntaxError.
LpProblem parse_problem(std::string_view text);
LpProblem problem_from_json(const json& j);
json problem_to_json(const LpProblem& p);
std::string serialize_problem(const LpProblem& p);
LpProblem read_problem_file(const std::string& path);

json rational_json(const Rational& q);
Rational rational_from_json(const json& j);
json vector_json(const RatVector& v);
RatVector vector_from_json(const json& j);

json step_to_json(const StepRecord& rec);
json pmrp_to_json(const PmrpOutcome& out, bool with_trace);
json lpp_to_json(const LppOutcome& out, bool with_traces);
json oracle_to_json(const OracleOutcome& out);

/// Writes every step of the primal and dual runs, tagged with "run".
void write_trace_jsonl(std::ostream& os, const LppOutcome& out);

/// Schema check of one trace line; returns the problems found (empty when valid).
std::vector<std::string> validate_step_json(const json& j);

}  // namespace lpsubst
