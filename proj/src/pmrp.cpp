#include "lpsubst/pmrp.hpp"

#include <stdexcept>
#include <variant>

namespace lpsubst {

const char* to_string(PmrpStatus s) {
    switch (s) {
        case PmrpStatus::MaxFound: return "max-found";
        case PmrpStatus::HZero: return "h-zero";
        case PmrpStatus::Unbounded: return "unbounded";
    }
    return "?";
}

const char* to_string(Anomaly a) {
    switch (a) {
        case Anomaly::None: return "none";
        case Anomaly::ExhaustedWithoutStop: return "exhausted-without-stop";
        case Anomaly::NoCandidates: return "no-candidates";
    }
    return "?";
}

namespace {

std::string case_label(bool cost_has_positive, CandidateKind kind) {
    const bool upper = kind == CandidateKind::Upper;
    if (cost_has_positive) return upper ? "1.1" : "1.2";
    return upper ? "2.2.1" : "2.2.2";
}

PmrpOutcome run(Tableau t, EqualityLedger ledger) {
    PmrpOutcome out;
    const int n = t.n();

    for (;;) {
        StepRecord rec;
        rec.k = t.step();
        rec.tableau = t.matrix();
        rec.remaining.assign(t.remaining().begin(), t.remaining().end());

        auto mark = t.reads();
        rec.sweep = sweep(t, ledger);
        rec.counters.sweep_reads = t.reads() - mark;
        rec.counters.sweep_passes = rec.sweep.passes;
        if (rec.sweep.passes > 1) rec.notes.push_back("sweeps iterated to a fixpoint");

        auto finish = [&](PmrpStatus status, std::string label, std::string reason) {
            rec.case_label = std::move(label);
            out.status = status;
            out.reason = std::move(reason);
            out.trace.push_back(std::move(rec));
            out.ledger = ledger;
            return out;
        };

        if (rec.sweep.h_forced_zero) return finish(PmrpStatus::HZero, "0", "h forced to zero by a nonnegative row");

        mark = t.reads();
        const LinearForm cost = t.cost();
        rec.partition = partition_vars(cost, t.remaining());
        if (auto w = unbounded_witness(t, rec.partition)) {
            out.unbounded_var = *w;
            rec.counters.selection_reads = t.reads() - mark;
            return finish(PmrpStatus::Unbounded, "0",
                          "variable x" + std::to_string(*w) + " has a nonzero cost and no upper bound");
        }

        const bool cost_has_positive = !rec.partition.plus.empty();
        if (!cost_has_positive && check_stop(t, rec.partition)) {
            rec.counters.selection_reads = t.reads() - mark;
            for (int j : t.remaining()) ledger.add_forced_zero(j);
            ledger.close_cost(cost);
            const BackSolution sol = backward_substitute(ledger, Rational(1));
            out.zcoef = cost.h;
            out.assignment = sol.vars;
            if (sol.z && *sol.z != cost.h) throw std::logic_error("pmrp: closed cost disagrees with c_h");
            return finish(PmrpStatus::MaxFound, "2.1", "cost bounded by c_h h, attained at x = 0");
        }

        if (t.remaining().empty()) {
            out.anomaly = Anomaly::ExhaustedWithoutStop;
            rec.counters.selection_reads = t.reads() - mark;
            return finish(PmrpStatus::HZero, "2.2", "no variable left and the stop test fails");
        }

        CandidateSet cands = candidate_sets(t, cost, rec.partition);
        rec.candidate_kind = cands.kind;
        if (cands.items.empty()) {
            out.anomaly = Anomaly::NoCandidates;
            rec.counters.selection_reads = t.reads() - mark;
            return finish(PmrpStatus::HZero, cost_has_positive ? "1" : "2.2", "no candidate bound functions");
        }

        std::string label = case_label(cost_has_positive, cands.kind);
        if (cands.fell_through) {
            rec.notes.push_back("dominating-variable sets empty; used the full partition (effective case " + label +
                                ")");
            label = "fallthrough";
        }

        if (!cost_has_positive && cands.kind != CandidateKind::Upper) {
            auto kept = b_filter(cands.items, cost.h);
            for (const auto& c : cands.items) {
                bool still = false;
                for (const auto& k : kept) still = still || k.pair() == c.pair();
                if (!still) rec.filtered_out.push_back(c.pair());
            }
            cands.items = std::move(kept);
            if (cands.items.empty()) {
                rec.counters.selection_reads = t.reads() - mark;
                return finish(PmrpStatus::HZero, label, "no lower-bound candidate keeps the cost below c_h h");
            }
        }
        rec.candidates = cands.items;

        SelectionResult sel = select_pair(cands.items);
        rec.counters.selection_reads = t.reads() - mark;
        if (sel.lexicographic_tiebreak) rec.notes.push_back("residual tie broken by smallest (row, variable)");

        ledger.add_substitution(sel.candidate.fb);
        mark = t.reads();
        apply_substitution(t, sel.chosen.first, sel.chosen.second, sel.candidate.fb);
        rec.counters.update_reads = t.reads() - mark;

        rec.case_label = std::move(label);
        rec.selection = std::move(sel);
        out.trace.push_back(std::move(rec));
        if (++out.substitutions > n) throw SubstitutionCapExceeded("pmrp: more substitutions than variables");
    }
}

}  // namespace

PmrpOutcome pmrp_solve(const LpProblem& p) { return run(homogenize(p), EqualityLedger{}); }

PmrpOutcome pmrp_resume(Tableau t, EqualityLedger ledger) { return run(std::move(t), std::move(ledger)); }

std::vector<std::string> check_step_bounds(const StepRecord& rec) {
    std::vector<std::string> out;
    const std::uint64_t rows = rec.tableau.rows();
    const std::uint64_t cols = rec.tableau.cols();
    const std::uint64_t passes = static_cast<std::uint64_t>(rec.counters.sweep_passes);
    auto check = [&](const char* phase, std::uint64_t used, std::uint64_t budget) {
        if (used > budget)
            out.push_back("step " + std::to_string(rec.k) + " " + phase + " reads " + std::to_string(used) + " > " +
                          std::to_string(budget));
    };
    check("selection", rec.counters.selection_reads, 10 * rows * cols);
    check("update", rec.counters.update_reads, rows * cols * cols);
    // One row-zeroing scan plus a nonnegativity scan and its forced-column pass.
    check("sweep", rec.counters.sweep_reads, 3 * passes * (rows - 1) * cols);
    return out;
}

BackSolution backward_substitute(const EqualityLedger& ledger, const Rational& h) {
    BackSolution sol;
    auto eval = [&](const LinearForm& f) {
        Rational v = f.h * h;
        for (std::size_t k = 0; k < f.x.size(); ++k) {
            if (f.x[k] == 0) continue;
            const int var = static_cast<int>(k) + 1;
            auto it = sol.vars.find(var);
            if (it == sol.vars.end())
                throw std::logic_error("ledger is not triangular: x" + std::to_string(var) + " is unresolved");
            v += f.x[k] * it->second;
        }
        return v;
    };

    // The cost closure comes last in the ledger but depends on every variable.
    const CostClose* close = nullptr;
    const auto& entries = ledger.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        std::visit(
            [&](const auto& e) {
                using E = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<E, ForcedZero>) {
                    sol.vars[e.var] = 0;
                } else if constexpr (std::is_same_v<E, Substitution>) {
                    sol.vars[e.var] = eval(e.f.form);
                } else {
                    close = &e;
                }
            },
            *it);
    }
    if (close) sol.z = eval(close->cost);
    return sol;
}

}  // namespace lpsubst
