#include "lpsubst/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <random>
#include <thread>

namespace lpsubst {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Agree: return "agree";
        case Verdict::ValueMismatch: return "value-mismatch";
        case Verdict::StatusMismatch: return "status-mismatch";
    }
    return "?";
}

Verdict verdict_from_string(const std::string& s) {
    for (Verdict v : {Verdict::Agree, Verdict::ValueMismatch, Verdict::StatusMismatch})
        if (s == to_string(v)) return v;
    throw std::invalid_argument("unknown verdict \"" + s + "\"");
}

MethodRun run_method(const LpProblem& p) {
    MethodRun r;
    try {
        LppOutcome o = lpp_solve(p);
        r.status = o.status;
        r.z = o.z;
        r.x = o.x;
        r.y = o.y;
        r.notes = o.notes;
        if (o.primal.status == PmrpStatus::MaxFound) {
            RatVector x(p.n());
            for (const auto& [var, q] : o.primal.assignment)
                if (var >= 1 && static_cast<std::size_t>(var) <= p.n()) x[var - 1] = q;
            r.certificate_failed = !verify_solution(p, x, o.primal.zcoef);
        }
        auto scan = [&](const PmrpOutcome& run) {
            r.substitutions += static_cast<std::size_t>(run.substitutions);
            for (const auto& s : run.trace)
                for (auto& b : check_step_bounds(s)) r.bound_breaches.push_back(std::move(b));
        };
        scan(o.primal);
        if (o.dual) scan(*o.dual);
    } catch (const SubstitutionCapExceeded& e) {
        r.status = LppStatus::MethodFail;
        r.cap_overrun = true;
        r.error = e.what();
    } catch (const std::exception& e) {
        r.status = LppStatus::MethodFail;
        r.error = e.what();
    }
    return r;
}

json method_to_json(const MethodRun& r) {
    const bool has_value = r.status == LppStatus::PositiveMax || r.status == LppStatus::NegativeMax;
    json j;
    j["status"] = to_string(r.status);
    j["z"] = has_value ? rational_json(r.z) : json(nullptr);
    j["x"] = vector_json(r.x);
    j["y"] = vector_json(r.y);
    j["notes"] = r.notes;
    j["error"] = r.error;
    j["cap_overrun"] = r.cap_overrun;
    j["certificate_failed"] = r.certificate_failed;
    j["bound_breaches"] = r.bound_breaches;
    j["substitutions"] = r.substitutions;
    return j;
}

Verdict classify(const MethodRun& method, const OracleOutcome& oracle) {
    switch (oracle.status) {
        case OracleStatus::Optimal:
            if (method.status == LppStatus::PositiveMax || method.status == LppStatus::NegativeMax)
                return method.z == oracle.z ? Verdict::Agree : Verdict::ValueMismatch;
            return Verdict::StatusMismatch;
        case OracleStatus::Unbounded:
            return method.status == LppStatus::Unbounded || method.status == LppStatus::NoMaximum
                       ? Verdict::Agree
                       : Verdict::StatusMismatch;
        case OracleStatus::Infeasible:
            return method.status == LppStatus::NoMaximum ? Verdict::Agree : Verdict::StatusMismatch;
    }
    return Verdict::StatusMismatch;
}

json record_to_json(const CounterexampleRecord& r) {
    json j;
    j["problem"] = problem_to_json(r.problem);
    j["seed"] = r.seed;
    j["index"] = r.index;
    j["divergence"] = to_string(r.divergence);
    j["method"] = r.method;
    j["oracle"] = r.oracle;
    return j;
}

CounterexampleRecord record_from_json(const json& j) {
    for (const char* key : {"problem", "seed", "index", "divergence", "method", "oracle"})
        if (!j.contains(key)) throw ProblemSyntaxError(std::string("record is missing \"") + key + "\"");
    CounterexampleRecord r;
    r.problem = problem_from_json(j["problem"]);
    r.seed = j["seed"].get<std::uint64_t>();
    r.index = j["index"].get<std::size_t>();
    r.divergence = verdict_from_string(j["divergence"].get<std::string>());
    r.method = j["method"];
    r.oracle = j["oracle"];
    return r;
}

ReplayResult replay(const CounterexampleRecord& r) {
    const MethodRun method = run_method(r.problem);
    const OracleOutcome oracle = simplex_solve(r.problem);
    ReplayResult out;
    out.verdict = classify(method, oracle);
    out.same_verdict = out.verdict == r.divergence;
    out.method_identical = method_to_json(method) == r.method;
    out.oracle_identical = oracle_to_json(oracle) == r.oracle;
    return out;
}

LpProblem random_problem(const FuzzParams& params, std::size_t index) {
    const auto idx = static_cast<std::uint64_t>(index);
    std::seed_seq seq{static_cast<std::uint32_t>(params.seed), static_cast<std::uint32_t>(params.seed >> 32),
                      static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> mdist(1, params.m_max), ndist(1, params.n_max);
    std::uniform_int_distribution<long> entry(-params.range, params.range);
    const auto m = static_cast<std::size_t>(mdist(rng));
    const auto n = static_cast<std::size_t>(ndist(rng));

    LpProblem p;
    p.name = "fuzz-" + std::to_string(params.seed) + "-" + std::to_string(index);
    p.A = RatMatrix(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) p.A(i, j) = entry(rng);
    p.b.resize(m);
    for (auto& q : p.b) q = entry(rng);
    p.c.resize(n);
    for (auto& q : p.c) q = entry(rng);
    return p;
}

namespace {

struct InstanceResult {
    InstanceSummary summary;
    MethodRun method;
    std::optional<CounterexampleRecord> record;
};

InstanceResult run_instance(const FuzzParams& params, std::size_t index) {
    InstanceResult res;
    LpProblem p = random_problem(params, index);
    res.method = run_method(p);
    const OracleOutcome oracle = simplex_solve(p);

    auto& s = res.summary;
    s.index = index;
    s.m = p.m();
    s.n = p.n();
    s.verdict = classify(res.method, oracle);
    s.method = res.method.status;
    s.oracle = oracle.status;
    s.method_z = res.method.z;
    s.oracle_z = oracle.z;
    if (s.verdict != Verdict::Agree)
        res.record = CounterexampleRecord{std::move(p), params.seed, index, s.verdict, method_to_json(res.method),
                                          oracle_to_json(oracle)};
    return res;
}

}  // namespace

FuzzReport fuzz_run(const FuzzParams& params) {
    if (params.m_max < 1 || params.n_max < 1 || params.count < 0 || params.range < 0)
        throw std::invalid_argument("fuzz_run: dimensions must be positive and count, range nonnegative");

    const auto count = static_cast<std::size_t>(params.count);
    std::vector<InstanceResult> results(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < count;) results[i] = run_instance(params, i);
    };
    const int threads = std::clamp(params.threads, 1, 64);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    FuzzReport rep;
    rep.params = params;
    for (auto& r : results) {
        switch (r.summary.verdict) {
            case Verdict::Agree: ++rep.agree; break;
            case Verdict::ValueMismatch: ++rep.value_mismatch; break;
            case Verdict::StatusMismatch: ++rep.status_mismatch; break;
        }
        if (r.method.status == LppStatus::MethodFail) ++rep.method_fail;
        if (r.method.cap_overrun) ++rep.cap_overrun;
        if (r.method.certificate_failed) ++rep.certificate_failures;
        if (!r.method.bound_breaches.empty()) ++rep.bound_breaches;
        rep.instances.push_back(r.summary);
        if (r.record) rep.records.push_back(std::move(*r.record));
    }
    return rep;
}

json report_to_json(const FuzzReport& r) {
    json j;
    j["params"] = {{"m_max", r.params.m_max},
                   {"n_max", r.params.n_max},
                   {"count", r.params.count},
                   {"seed", r.params.seed},
                   {"range", r.params.range}};
    j["agree"] = r.agree;
    j["value_mismatch"] = r.value_mismatch;
    j["status_mismatch"] = r.status_mismatch;
    j["method_fail"] = r.method_fail;
    j["cap_overrun"] = r.cap_overrun;
    j["certificate_failures"] = r.certificate_failures;
    j["bound_breaches"] = r.bound_breaches;
    json divergent = json::array();
    for (const auto& rec : r.records) divergent.push_back(rec.index);
    j["divergent_instances"] = std::move(divergent);
    return j;
}

std::vector<std::filesystem::path> write_records(const FuzzReport& r, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> paths;
    for (const auto& rec : r.records) {
        auto path = dir / ("cex-" + std::to_string(rec.seed) + "-" + std::to_string(rec.index) + ".json");
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << record_to_json(rec).dump(2) << '\n';
        paths.push_back(std::move(path));
    }
    return paths;
}

}  // namespace lpsubst
