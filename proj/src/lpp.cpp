#include "lpsubst/lpp.hpp"

namespace lpsubst {

const char* to_string(LppStatus s) {
    switch (s) {
        case LppStatus::PositiveMax: return "positive-max";
        case LppStatus::NegativeMax: return "negative-max";
        case LppStatus::NoMaximum: return "no-maximum";
        case LppStatus::Unbounded: return "unbounded";
        case LppStatus::MethodFail: return "method-fail";
    }
    return "?";
}

namespace {

RatVector dense(const std::map<int, Rational>& vars, std::size_t n) {
    RatVector v(n);
    for (const auto& [var, q] : vars)
        if (var >= 1 && static_cast<std::size_t>(var) <= n) v[var - 1] = q;
    return v;
}

bool complete(const std::map<int, Rational>& vars, std::size_t n) {
    for (std::size_t j = 1; j <= n; ++j)
        if (!vars.contains(static_cast<int>(j))) return false;
    return true;
}

}  // namespace

LppOutcome lpp_solve(const LpProblem& p, const LppOptions& opts) {
    p.validate();
    LppOutcome out;
    out.primal = pmrp_solve(p);
    const PmrpOutcome& pr = out.primal;

    if (pr.status == PmrpStatus::MaxFound) {
        out.x = dense(pr.assignment, p.n());
        out.z = pr.zcoef;
        if (!complete(pr.assignment, p.n())) {
            out.status = LppStatus::MethodFail;
            out.notes.push_back("primal ledger leaves a variable unresolved");
        } else if (!verify_solution(p, out.x, out.z)) {
            out.status = LppStatus::MethodFail;
            out.notes.push_back("primal certificate fails direct substitution");
        } else if (out.z < 0) {
            out.status = LppStatus::MethodFail;
            out.notes.push_back("primal maximum is negative");
        } else {
            out.status = LppStatus::PositiveMax;
        }
        return out;
    }
    if (pr.status == PmrpStatus::Unbounded) {
        out.status = pr.anomaly == Anomaly::None ? LppStatus::Unbounded : LppStatus::MethodFail;
        return out;
    }
    if (pr.anomaly != Anomaly::None)
        out.notes.push_back(std::string("primal ended with anomaly ") + to_string(pr.anomaly));

    const LpProblem d = dualize(p);
    out.dual = pmrp_solve(d);
    const PmrpOutcome& du = *out.dual;

    if (du.status == PmrpStatus::MaxFound) {
        out.y = dense(du.assignment, d.n());
        out.z = -du.zcoef;
        if (!complete(du.assignment, d.n()) || !verify_solution(d, out.y, du.zcoef)) {
            out.status = LppStatus::MethodFail;
            out.notes.push_back("dual certificate fails direct substitution");
        } else if (out.z > 0) {
            out.status = LppStatus::MethodFail;
            out.notes.push_back("dual maximum has the wrong sign");
        } else {
            out.status = LppStatus::NegativeMax;
            if (opts.oracle_witness) {
                OracleOutcome o = simplex_solve(p);
                if (o.status == OracleStatus::Optimal) {
                    out.oracle_x = std::move(o.x);
                    out.notes.push_back("primal point supplied by the reference simplex");
                }
            }
        }
        return out;
    }

    if (du.status == PmrpStatus::Unbounded) out.notes.push_back("dual unbounded: primal infeasible or degenerate");
    if (du.anomaly != Anomaly::None)
        out.notes.push_back(std::string("dual ended with anomaly ") + to_string(du.anomaly));
    const bool anomalous = pr.anomaly != Anomaly::None || du.anomaly != Anomaly::None;
    out.status = anomalous ? LppStatus::MethodFail : LppStatus::NoMaximum;
    return out;
}

}  // namespace lpsubst
