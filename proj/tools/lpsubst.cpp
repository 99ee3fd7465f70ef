// Command-line front end: solve, oracle, check, replay, fuzz.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lpsubst/fuzz.hpp"

using namespace lpsubst;

namespace {

constexpr int kOk = 0;
constexpr int kDivergence = 2;
constexpr int kInputError = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RatVector parse_list(const std::string& text) {
    RatVector v;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw InputError("empty entry in list \"" + text + "\"");
        v.push_back(parse_rational(std::string_view(item).substr(b, e - b + 1)));
    }
    return v;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

int cmd_solve(const std::string& file, const std::string& trace, const std::string& hval, bool oracle_check) {
    const LpProblem p = read_problem_file(file);
    const Rational h = parse_rational(hval);
    if (h <= 0) throw InputError("--h must be positive");

    LppOutcome out = lpp_solve(p);
    if (!trace.empty()) {
        std::ofstream os(trace);
        if (!os) throw InputError("cannot write " + trace);
        write_trace_jsonl(os, out);
    }
    for (auto& q : out.x) q *= h;
    for (auto& q : out.y) q *= h;
    out.z *= h;
    json j = lpp_to_json(out, false);
    if (h != 1) j["h"] = rational_json(h);

    int code = kOk;
    if (oracle_check) {
        const OracleOutcome o = simplex_solve(p);
        const Verdict v = classify(run_method(p), o);
        j["oracle"] = oracle_to_json(o);
        j["verdict"] = to_string(v);
        if (v != Verdict::Agree) code = kDivergence;
    }
    std::cout << j.dump(2) << '\n';
    return code;
}

int cmd_oracle(const std::string& file) {
    std::cout << oracle_to_json(simplex_solve(read_problem_file(file))).dump(2) << '\n';
    return kOk;
}

int cmd_check(const std::string& file, const std::string& xs, const std::string& zs) {
    const LpProblem p = read_problem_file(file);
    const RatVector x = parse_list(xs);
    if (x.size() != p.n())
        throw InputError("--x has " + std::to_string(x.size()) + " entries, problem has " + std::to_string(p.n()));
    const bool ok = verify_solution(p, x, parse_rational(zs));
    std::cout << (ok ? "valid" : "invalid") << '\n';
    return ok ? kOk : kDivergence;
}

int cmd_replay(const std::string& file) {
    const CounterexampleRecord rec = record_from_json(read_json_file(file));
    const ReplayResult r = replay(rec);
    json j;
    j["recorded"] = to_string(rec.divergence);
    j["replayed"] = to_string(r.verdict);
    j["same_verdict"] = r.same_verdict;
    j["method_identical"] = r.method_identical;
    j["oracle_identical"] = r.oracle_identical;
    std::cout << j.dump(2) << '\n';
    return r.same_verdict && r.method_identical && r.oracle_identical ? kOk : kDivergence;
}

int cmd_fuzz(const FuzzParams& params, const std::string& out_dir) {
    const FuzzReport rep = fuzz_run(params);
    json j = report_to_json(rep);
    if (!out_dir.empty()) {
        json files = json::array();
        for (const auto& path : write_records(rep, out_dir)) files.push_back(path.string());
        j["records"] = std::move(files);
    }
    std::cout << j.dump(2) << '\n';
    return rep.records.empty() ? kOk : kDivergence;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact substitution-method LP solver with a reference simplex"};
    app.require_subcommand(1);

    std::string file, trace, hval = "1", xs, zs, out_dir;
    bool oracle_check = false;
    FuzzParams fp;

    auto* solve = app.add_subcommand("solve", "solve a problem file");
    solve->add_option("file", file, "problem JSON")->required();
    solve->add_option("--trace", trace, "write the step trace as JSON Lines");
    solve->set_help_flag("--help", "print this help message and exit");  // -h would clash with --h
    solve->add_option("--h", hval, "value of the homogenizing variable");
    solve->add_flag("--oracle-check", oracle_check, "compare against the reference simplex");

    auto* oracle = app.add_subcommand("oracle", "solve with the reference simplex");
    oracle->add_option("file", file, "problem JSON")->required();

    auto* check = app.add_subcommand("check", "verify a candidate solution");
    check->add_option("file", file, "problem JSON")->required();
    check->add_option("--x", xs, "comma-separated values")->required();
    check->add_option("--z", zs, "objective value")->required();

    auto* rep = app.add_subcommand("replay", "re-run a counterexample record");
    rep->add_option("file", file, "record JSON")->required();

    auto* fuzz = app.add_subcommand("fuzz", "cross-check random instances");
    fuzz->add_option("--m", fp.m_max, "maximum number of constraints")->check(CLI::PositiveNumber);
    fuzz->add_option("--n", fp.n_max, "maximum number of variables")->check(CLI::PositiveNumber);
    fuzz->add_option("--count", fp.count, "number of instances")->check(CLI::NonNegativeNumber);
    fuzz->add_option("--seed", fp.seed, "base seed");
    fuzz->add_option("--range", fp.range, "entries are drawn from [-range, range]")->check(CLI::NonNegativeNumber);
    fuzz->add_option("--threads", fp.threads, "worker threads")->check(CLI::PositiveNumber);
    fuzz->add_option("--out", out_dir, "directory for counterexample records");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*solve) return cmd_solve(file, trace, hval, oracle_check);
        if (*oracle) return cmd_oracle(file);
        if (*check) return cmd_check(file, xs, zs);
        if (*rep) return cmd_replay(file);
        if (*fuzz) return cmd_fuzz(fp, out_dir);
    } catch (const std::invalid_argument& e) {  // dimension and rational syntax errors
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}
