#include "lpsubst/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lpsubst {

ProblemSyntaxError::ProblemSyntaxError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line ? what + " at line " + std::to_string(line) + ", column " + std::to_string(column)
                              : what),
      line_(line),
      column_(column) {}

// Scalars ------------------------------------------------------------------

json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
    throw ProblemSyntaxError("expected a rational string or integer, got " + j.dump());
}

json vector_json(const RatVector& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(rational_json(q));
    return a;
}

RatVector vector_from_json(const json& j) {
    if (!j.is_array()) throw ProblemSyntaxError("expected an array, got " + j.dump());
    RatVector v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

namespace {

json matrix_json(const RatMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(rational_json(m(i, k)));
        a.push_back(std::move(r));
    }
    return a;
}

json ints(const std::vector<int>& v) { return json(v); }

json pairs(const std::vector<Pair>& v) {
    json a = json::array();
    for (const auto& [r, c] : v) a.push_back(json::array({r, c}));
    return a;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json form_json(const LinearForm& f) { return json{{"x", vector_json(f.x)}, {"h", rational_json(f.h)}}; }

json candidate_json(const Candidate& c) {
    return json{
        {"row", c.fb.row},
        {"var", c.fb.var},
        {"kind", to_string(c.fb.kind)},
        {"bound", format(c.fb.form)},
        {"bound_class", to_string(c.fb.hclass)},
        {"cost", format(c.fz)},
        {"cost_class", to_string(c.fz_class)},
        {"bound_form", form_json(c.fb.form)},
        {"cost_form", form_json(c.fz)},
    };
}

}  // namespace

// Problems -----------------------------------------------------------------

LpProblem problem_from_json(const json& j) {
    if (!j.is_object()) throw ProblemSyntaxError("problem must be a JSON object");
    static const std::set<std::string> known{"name", "sense", "objective", "A", "b"};
    for (const auto& [key, _] : j.items())
        if (!known.contains(key)) throw ProblemSyntaxError("unknown key \"" + key + "\"");
    for (const char* key : {"objective", "A", "b"})
        if (!j.contains(key)) throw ProblemSyntaxError(std::string("missing key \"") + key + "\"");
    if (j.contains("sense") && j["sense"] != "max") throw ProblemSyntaxError("sense must be \"max\"");

    LpProblem p;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ProblemSyntaxError("name must be a string");
        p.name = j["name"].get<std::string>();
    }
    const json& a = j["A"];
    if (!a.is_array() || a.empty()) throw ProblemSyntaxError("A must be a nonempty array of rows");
    std::vector<RatVector> rows;
    for (const auto& r : a) rows.push_back(vector_from_json(r));
    if (rows.front().empty()) throw DimensionMismatch("A has empty rows");
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].size() != rows.front().size())
            throw DimensionMismatch("row " + std::to_string(i) + " of A has " + std::to_string(rows[i].size()) +
                                    " entries, expected " + std::to_string(rows.front().size()));
    p.A = RatMatrix::from_rows(rows);
    p.b = vector_from_json(j["b"]);
    p.c = vector_from_json(j["objective"]);
    p.validate();
    return p;
}

LpProblem parse_problem(std::string_view text) {
    std::vector<std::set<std::string>> keys;
    json::parser_callback_t cb = [&](int, json::parse_event_t ev, json& parsed) {
        switch (ev) {
            case json::parse_event_t::object_start: keys.emplace_back(); break;
            case json::parse_event_t::object_end: keys.pop_back(); break;
            case json::parse_event_t::key: {
                const auto k = parsed.get<std::string>();
                if (!keys.back().insert(k).second) throw ProblemSyntaxError("duplicate key \"" + k + "\"");
                break;
            }
            default: break;
        }
        return true;
    };
    json j;
    try {
        j = json::parse(text.begin(), text.end(), cb);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte);
        throw ProblemSyntaxError("malformed JSON", line, col);
    }
    return problem_from_json(j);
}

json problem_to_json(const LpProblem& p) {
    json j;
    if (!p.name.empty()) j["name"] = p.name;
    j["sense"] = "max";
    j["objective"] = vector_json(p.c);
    j["A"] = matrix_json(p.A);
    j["b"] = vector_json(p.b);
    return j;
}

std::string serialize_problem(const LpProblem& p) { return problem_to_json(p).dump(2) + "\n"; }

LpProblem read_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

// Outcomes -----------------------------------------------------------------

json step_to_json(const StepRecord& rec) {
    json j;
    j["k"] = rec.k;
    j["case"] = rec.case_label;
    j["remaining"] = ints(rec.remaining);
    j["partition"] = {{"plus", ints(rec.partition.plus)},
                      {"zero", ints(rec.partition.zero)},
                      {"minus", ints(rec.partition.minus)}};
    j["sweep"] = {{"zeroed_rows", ints(rec.sweep.zeroed_rows)},
                  {"forced_zero", ints(rec.sweep.forced_zero)},
                  {"h_forced_zero", rec.sweep.h_forced_zero},
                  {"passes", rec.sweep.passes}};
    j["candidate_kind"] = rec.candidate_kind ? json(to_string(*rec.candidate_kind)) : json(nullptr);
    json cands = json::array();
    for (const auto& c : rec.candidates) cands.push_back(candidate_json(c));
    j["candidates"] = std::move(cands);
    j["filtered_out"] = pairs(rec.filtered_out);
    if (rec.selection) {
        const auto& s = *rec.selection;
        j["selection"] = {
            {"chosen", json::array({s.chosen.first, s.chosen.second})},
            {"t_class", to_string(s.t_class)},
            {"t_prime_class", to_string(s.t_prime_class)},
            {"class_members", pairs(s.class_members)},
            {"tau", to_string(s.tau.magnitude())},
            {"tau_argset", pairs(s.tau_argset)},
            {"second", s.second ? json(to_string(s.second->magnitude())) : json(nullptr)},
            {"second_argset", pairs(s.second_argset)},
            {"lexicographic_tiebreak", s.lexicographic_tiebreak},
            {"bound", format(s.candidate.fb.form)},
        };
    } else {
        j["selection"] = nullptr;
    }
    j["tableau"] = matrix_json(rec.tableau);
    j["counters"] = {{"sweep_reads", rec.counters.sweep_reads},
                     {"selection_reads", rec.counters.selection_reads},
                     {"update_reads", rec.counters.update_reads},
                     {"sweep_passes", rec.counters.sweep_passes}};
    j["notes"] = rec.notes;
    return j;
}

json pmrp_to_json(const PmrpOutcome& out, bool with_trace) {
    json j;
    j["status"] = to_string(out.status);
    j["anomaly"] = to_string(out.anomaly);
    j["reason"] = out.reason;
    j["zcoef"] = rational_json(out.zcoef);
    json assign = json::object();
    for (const auto& [var, q] : out.assignment) assign[std::to_string(var)] = rational_json(q);
    j["assignment"] = std::move(assign);
    j["substitutions"] = out.substitutions;
    if (out.unbounded_var) j["unbounded_var"] = *out.unbounded_var;
    if (with_trace) {
        json steps = json::array();
        for (const auto& s : out.trace) steps.push_back(step_to_json(s));
        j["trace"] = std::move(steps);
    }
    return j;
}

json lpp_to_json(const LppOutcome& out, bool with_traces) {
    json j;
    j["status"] = to_string(out.status);
    const bool has_value = out.status == LppStatus::PositiveMax || out.status == LppStatus::NegativeMax;
    j["z"] = has_value ? rational_json(out.z) : json(nullptr);
    j["x"] = vector_json(out.x);
    j["y"] = vector_json(out.y);
    if (out.oracle_x) j["oracle_x"] = vector_json(*out.oracle_x);
    j["notes"] = out.notes;
    json traces;
    traces["primal"] = pmrp_to_json(out.primal, with_traces);
    traces["dual"] = out.dual ? pmrp_to_json(*out.dual, with_traces) : json(nullptr);
    j["traces"] = std::move(traces);
    return j;
}

json oracle_to_json(const OracleOutcome& out) {
    json j;
    j["status"] = to_string(out.status);
    if (out.status == OracleStatus::Optimal) {
        j["z"] = rational_json(out.z);
        j["x"] = vector_json(out.x);
    }
    if (out.status == OracleStatus::Unbounded) j["ray"] = vector_json(out.ray);
    j["pivots"] = out.pivots;
    return j;
}

void write_trace_jsonl(std::ostream& os, const LppOutcome& out) {
    auto emit = [&](const PmrpOutcome& run, const char* tag) {
        for (const auto& s : run.trace) {
            json j;
            j["run"] = tag;
            const json step = step_to_json(s);
            for (const auto& [k, v] : step.items()) j[k] = v;
            os << j.dump() << '\n';
        }
    };
    emit(out.primal, "primal");
    if (out.dual) emit(*out.dual, "dual");
}

std::vector<std::string> validate_step_json(const json& j) {
    std::vector<std::string> errs;
    if (!j.is_object()) return {"step is not an object"};
    auto need = [&](const char* key, bool ok) {
        if (!j.contains(key))
            errs.push_back(std::string("missing \"") + key + "\"");
        else if (!ok)
            errs.push_back(std::string("bad type for \"") + key + "\"");
    };
    need("k", j.contains("k") && j["k"].is_number_integer());
    need("case", j.contains("case") && j["case"].is_string());
    if (j.contains("case") && j["case"].is_string()) {
        static const std::set<std::string> labels{"0", "1", "1.1", "1.2", "2.1", "2.2", "2.2.1", "2.2.2",
                                                  "fallthrough"};
        if (!labels.contains(j["case"].get<std::string>()))
            errs.push_back("unknown case label " + j["case"].dump());
    }
    const bool part_ok = j.contains("partition") && j["partition"].is_object() &&
                         j["partition"].contains("plus") && j["partition"].contains("zero") &&
                         j["partition"].contains("minus");
    need("partition", part_ok);
    bool cands_ok = j.contains("candidates") && j["candidates"].is_array();
    if (cands_ok)
        for (const auto& c : j["candidates"])
            cands_ok = cands_ok && c.is_object() && c.contains("row") && c.contains("var") && c.contains("bound");
    need("candidates", cands_ok);
    need("selection", j.contains("selection") &&
                          (j["selection"].is_null() || (j["selection"].is_object() && j["selection"].contains("chosen"))));
    bool tab_ok = j.contains("tableau") && j["tableau"].is_array() && !j["tableau"].empty();
    if (tab_ok) {
        const auto width = j["tableau"].front().size();
        for (const auto& r : j["tableau"]) {
            tab_ok = tab_ok && r.is_array() && r.size() == width;
            if (!tab_ok) break;
            for (const auto& q : r) {
                try {
                    tab_ok = tab_ok && q.is_string() && (parse_rational(q.get<std::string>()), true);
                } catch (const std::exception&) {
                    tab_ok = false;
                }
            }
        }
    }
    need("tableau", tab_ok);
    bool ctr_ok = j.contains("counters") && j["counters"].is_object();
    if (ctr_ok)
        for (const char* k : {"sweep_reads", "selection_reads", "update_reads", "sweep_passes"})
            ctr_ok = ctr_ok && j["counters"].contains(k) && j["counters"][k].is_number_integer() &&
                     j["counters"][k].get<long long>() >= 0;
    need("counters", ctr_ok);
    return errs;
}

}  // namespace lpsubst
