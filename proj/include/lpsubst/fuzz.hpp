#pragma once

// Random cross-checking of the substitution method against the reference
// simplex, with replayable records of every disagreement.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lpsubst/io.hpp"

namespace lpsubst {

enum class Verdict { Agree, ValueMismatch, StatusMismatch };
const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// The method's answer on one instance, with failures captured instead of thrown.
struct MethodRun {
    LppStatus status = LppStatus::MethodFail;
    Rational z;
    RatVector x;
    RatVector y;
    std::vector<std::string> notes;
    std::string error;           ///< message of an exception escaping the solver
    bool cap_overrun = false;
    bool certificate_failed = false;  ///< primal reached a maximum whose point fails the constraints
    std::vector<std::string> bound_breaches;
    std::size_t substitutions = 0;
};

MethodRun run_method(const LpProblem& p);
json method_to_json(const MethodRun& r);

Verdict classify(const MethodRun& method, const OracleOutcome& oracle);

struct CounterexampleRecord {
    LpProblem problem;
    std::uint64_t seed = 0;
    std::size_t index = 0;
    Verdict divergence = Verdict::StatusMismatch;
    json method;
    json oracle;
};

json record_to_json(const CounterexampleRecord& r);
CounterexampleRecord record_from_json(const json& j);

struct ReplayResult {
    Verdict verdict = Verdict::Agree;
    bool same_verdict = false;
    bool method_identical = false;
    bool oracle_identical = false;
};
ReplayResult replay(const CounterexampleRecord& r);

struct FuzzParams {
    int m_max = 5;
    int n_max = 5;
    int count = 500;
    std::uint64_t seed = 1;
    int range = 5;
    int threads = 1;
};

/// Instance `index` of a run with the given parameters.
LpProblem random_problem(const FuzzParams& params, std::size_t index);

struct InstanceSummary {
    std::size_t index = 0;
    std::size_t m = 0, n = 0;
    Verdict verdict = Verdict::Agree;
    LppStatus method = LppStatus::MethodFail;
    OracleStatus oracle = OracleStatus::Infeasible;
    Rational method_z, oracle_z;
};

struct FuzzReport {
    FuzzParams params;
    std::size_t agree = 0, value_mismatch = 0, status_mismatch = 0;
    std::size_t method_fail = 0, cap_overrun = 0;
    std::size_t certificate_failures = 0, bound_breaches = 0;
    std::vector<InstanceSummary> instances;     ///< in index order
    std::vector<CounterexampleRecord> records;  ///< one per divergence, in index order
};

FuzzReport fuzz_run(const FuzzParams& params);
json report_to_json(const FuzzReport& r);

/// Writes record files cex-<seed>-<index>.json into dir; returns their paths.
std::vector<std::filesystem::path> write_records(const FuzzReport& r, const std::filesystem::path& dir);

}  // namespace lpsubst
