#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "lpsubst/bounds.hpp"
#include "support.hpp"

using namespace lpsubst;
using fixtures::mat;

namespace {

Tableau tab(const fixtures::Grid& g, std::set<int> remaining, int step = 0) {
    return Tableau(mat(g), std::move(remaining), step);
}

BoundFunction bound(const Tableau& t, int row, int var) {
    auto f = make_bound(t, row, var);
    REQUIRE(f.has_value());
    return *f;
}

// Row values of the tableau at w, rows -1..m.
RatVector rows_at(const Tableau& t, const RatVector& w) { return mat_vec(t.matrix(), w); }

}  // namespace

TEST_CASE("homogenize builds the step-0 cone") {
    const Tableau t = homogenize(fixtures::neg_problem());
    CHECK(t.matrix() == mat(fixtures::neg_primal0));
    CHECK(t.remaining() == std::set<int>{1, 2, 3});
    CHECK(t.step() == 0);
    CHECK(t.ch() == 0);

    LpProblem zero;
    zero.A = RatMatrix(1, 1);
    zero.b = {0};
    zero.c = {0};
    CHECK(homogenize(zero).matrix() == RatMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});

    const Tableau d = homogenize(dualize(fixtures::neg_problem()));
    CHECK(d.matrix() == mat(fixtures::neg_dual0));

    LpProblem bad = fixtures::neg_problem();
    bad.b.pop_back();
    CHECK_THROWS_AS(homogenize(bad), DimensionMismatch);
}

TEST_CASE("dualize") {
    const LpProblem d = dualize(fixtures::neg_problem());
    CHECK(d.m() == 3);
    CHECK(d.n() == 5);
    CHECK(d.c == fixtures::vec({"1", "-7", "-29", "6", "4"}));
    CHECK(d.b == fixtures::vec({"1", "-1", "3"}));

    LpProblem eye;
    eye.A = RatMatrix::identity(2);
    eye.b = {0, 0};
    eye.c = {0, 0};
    const LpProblem de = dualize(eye);
    CHECK(de.A == -RatMatrix::identity(2));
    CHECK(dualize(de) == eye);
    CHECK(dualize(dualize(fixtures::neg_problem())) == fixtures::neg_problem());
}

TEST_CASE("homogenized rows at h = 1 are the original constraints") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 100; ++k) {
        const LpProblem p = support::rand_problem(rng, 1 + rng() % 4, 1 + rng() % 4, 5);
        const Tableau t = homogenize(p);
        const RatVector x = support::rand_nonneg(rng, p.n());
        const RatVector vals = rows_at(t, support::point(x, 1));
        const RatVector ax = mat_vec(p.A, x);
        for (std::size_t i = 0; i < p.m(); ++i) CHECK((vals[i + 2] <= 0) == (ax[i] <= p.b[i]));
    }
}

TEST_CASE("set_row_to_zero") {
    Tableau small(RatMatrix{{1, 0, 0, 0}, {0, -1, -2, 0}, {0, -1, 2, 0}}, {1, 2});
    CHECK(set_row_to_zero(small) == std::vector<int>{0});
    CHECK(small.matrix() == RatMatrix{{1, 0, 0, 0}, {0, 0, 0, 0}, {0, -1, 2, 0}});

    // Only row 2 of the last positive-maximum tableau is nonpositive.
    Tableau t = tab(fixtures::pos_step3, {2}, 3);
    CHECK(set_row_to_zero(t) == std::vector<int>{2});
    const RatMatrix once = t.matrix();
    CHECK(set_row_to_zero(t).empty());
    CHECK(t.matrix() == once);
    CHECK(t.at(-1, 0) == 1);
}

TEST_CASE("check_nul_var") {
    const Tableau t = tab(fixtures::neg_primal1, {2, 3}, 1);
    CHECK(check_nul_var(t) == std::vector<int>{2, 3, 4});
    CHECK(check_nul_var(t) == check_nul_var(t));

    const Tableau neg(RatMatrix{{1, -1, -1}, {0, -1, -2}, {0, -3, -1}}, {1});
    CHECK(check_nul_var(neg).empty());
    const Tableau zero_row(RatMatrix{{1, 0, 0}, {0, 0, 0}, {0, -1, 1}}, {1});
    CHECK(check_nul_var(zero_row).empty());
}

TEST_CASE("sweep reaches a fixpoint and records forced zeros") {
    Tableau t = tab(fixtures::neg_primal1, {2, 3}, 1);
    EqualityLedger ledger;
    const SweepReport r = sweep(t, ledger);
    CHECK(r.h_forced_zero);
    CHECK(r.forced_zero == std::vector<int>{2, 3});
    CHECK(ledger.contains(2));
    CHECK(ledger.contains(3));
    CHECK(t.remaining().empty());

    std::mt19937_64 rng(2);
    for (int k = 0; k < 100; ++k) {
        Tableau s = support::rand_tableau(rng, 1 + rng() % 4, 1 + rng() % 4);
        EqualityLedger l;
        const SweepReport rep = sweep(s, l);
        if (rep.h_forced_zero) continue;
        CHECK(set_row_to_zero(s).empty());
        for (int c : check_nul_var(s)) CHECK_FALSE(s.is_active(c));
    }
}

TEST_CASE("substitution reproduces the published tableaux") {
    SUBCASE("positive maximum, x4 from row 2") {
        Tableau t = tab(fixtures::pos_step1, {2, 3, 4}, 1);
        apply_substitution(t, 2, 4, bound(t, 2, 4));
        CHECK(t.matrix() == mat(fixtures::pos_step2));
        CHECK(t.remaining() == std::set<int>{2, 3});
        CHECK(t.step() == 2);
    }
    SUBCASE("positive maximum, x3 from row 3") {
        Tableau t = tab(fixtures::pos_step2, {2, 3}, 2);
        apply_substitution(t, 3, 3, bound(t, 3, 3));
        CHECK(t.matrix() == mat(fixtures::pos_step3));
    }
    SUBCASE("negative maximum primal, x1 from row 1") {
        Tableau t = tab(fixtures::neg_primal0, {1, 2, 3});
        apply_substitution(t, 1, 1, bound(t, 1, 1));
        CHECK(t.matrix() == mat(fixtures::neg_primal1));
    }
    SUBCASE("dual steps") {
        Tableau t = tab(fixtures::neg_dual0, {1, 2, 3, 4, 5});
        apply_substitution(t, 3, 4, bound(t, 3, 4));
        CHECK(t.matrix() == mat(fixtures::neg_dual1));
        apply_substitution(t, 1, 1, bound(t, 1, 1));
        CHECK(t.matrix() == mat(fixtures::neg_dual2));
        apply_substitution(t, 2, 2, bound(t, 2, 2));
        const RatMatrix printed = mat(fixtures::neg_dual3);
        for (std::size_t i = 0; i < printed.rows(); ++i)
            for (std::size_t j = 0; j < printed.cols(); ++j) {
                const bool cost_y3 = i < 2 && j == 3;
                CHECK(t.matrix()(i, j) == (cost_y3 ? fixtures::neg_dual3_y3_cost : printed(i, j)));
            }
    }
}

TEST_CASE("apply_substitution rejects bad requests") {
    Tableau t = tab(fixtures::pos_step1, {2, 3, 4}, 1);
    const BoundFunction f = bound(t, 2, 4);
    CHECK_THROWS_AS(apply_substitution(t, 2, 1, f), std::invalid_argument);  // x1 inactive
    CHECK_THROWS_AS(apply_substitution(t, 3, 4, f), std::invalid_argument);  // wrong source row
    BoundFunction tampered = f;
    tampered.form.h += 1;
    CHECK_THROWS_AS(apply_substitution(t, 2, 4, tampered), std::invalid_argument);
    CHECK_THROWS_AS(apply_substitution(t, 0, 2, bound(t, 0, 2)), std::invalid_argument);
    CHECK(t.matrix() == mat(fixtures::pos_step1));
}

TEST_CASE("tableau access") {
    const Tableau t = tab(fixtures::pos_step1, {2, 3, 4}, 1);
    CHECK(t.m() == 3);
    CHECK(t.n() == 4);
    CHECK(t.at(-1, 5) == -3500);
    CHECK(t.ch() == 3500);
    CHECK_THROWS_AS(t.at(4, 0), std::out_of_range);
    CHECK_THROWS_AS(t.at(0, 6), std::out_of_range);
    const auto before = t.reads();
    (void)t.at(1, 1);
    CHECK(t.reads() == before + 1);
    CHECK_THROWS_AS(Tableau(RatMatrix(3, 3), {2}), std::invalid_argument);
}

TEST_CASE("ledger rejects duplicates") {
    EqualityLedger l;
    l.add_forced_zero(2);
    CHECK_THROWS_AS(l.add_forced_zero(2), std::logic_error);
    const Tableau t = tab(fixtures::pos_step1, {2, 3, 4}, 1);
    l.add_substitution(bound(t, 2, 4));
    CHECK_THROWS_AS(l.add_substitution(bound(t, 3, 4)), std::logic_error);
    l.close_cost(t.cost());
    CHECK(l.closed());
    CHECK_THROWS_AS(l.close_cost(t.cost()), std::logic_error);
}

TEST_CASE("substitution invariants and lifting on random tableaux") {
    std::mt19937_64 rng(99);
    int applied = 0;
    for (int k = 0; k < 400; ++k) {
        const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
        Tableau t = support::rand_tableau(rng, m, n);
        const int row = 1 + static_cast<int>(rng() % m), var = 1 + static_cast<int>(rng() % n);
        if (t.at(row, var) == 0) continue;
        const BoundFunction f = bound(t, row, var);
        const Tableau before = t;
        apply_substitution(t, row, var, f);
        ++applied;

        for (int i = -1; i <= t.m(); ++i) CHECK(t.at(i, var) == 0);
        for (int j = 1; j <= t.h_col(); ++j) CHECK(t.at(-1, j) == t.at(0, j));
        CHECK(t.at(row, 0) == 0);
        for (int j = 1; j <= t.n(); ++j) CHECK(t.at(row, j) == -f.form.coef(j));
        CHECK(t.at(row, t.h_col()) == -f.form.h);

        // With x_var = f(x, h) the old rows equal the new ones, the pivot row
        // is tight, and the new pivot row reads -x_var. So a point of the new
        // cone lifts to a point of the old one.
        RatVector x = support::rand_vector(rng, n);
        x[var - 1] = 0;
        const Rational h = support::rand_rational(rng), z = support::rand_rational(rng);
        RatVector w = support::point(x, h);
        w[0] = z;
        const RatVector after = rows_at(t, w);
        x[var - 1] = f.form.eval(x, h);
        RatVector lifted = support::point(x, h);
        lifted[0] = z;
        const RatVector old = rows_at(before, lifted);
        for (int i = -1; i <= t.m(); ++i) {
            const auto idx = static_cast<std::size_t>(i + 1);
            if (i == row) {
                CHECK(old[idx] == 0);
                CHECK(after[idx] == -x[var - 1]);
            } else {
                CHECK(old[idx] == after[idx]);
            }
        }
    }
    CHECK(applied > 200);
}

TEST_CASE("published solutions lift through the published tableaux") {
    // x2 = 0, x3 = 47/102, z = 3500 at h = 1 satisfies step 3; lifting adds x4 = 7/17.
    const Tableau t3 = tab(fixtures::pos_step3, {2}, 3);
    const Tableau t2 = tab(fixtures::pos_step2, {2, 3}, 2);
    const Tableau t1 = tab(fixtures::pos_step1, {2, 3, 4}, 1);
    const RatVector w3{3500, 0, 0, 0, 0, 1};
    const RatVector w2{3500, 0, 0, Rational(47, 102), 0, 1};
    const RatVector w1{3500, 0, 0, Rational(47, 102), Rational(7, 17), 1};
    for (const auto& [t, w] : {std::pair{&t3, &w3}, std::pair{&t2, &w2}, std::pair{&t1, &w1}})
        for (const auto& v : rows_at(*t, *w)) CHECK(v <= 0);
}
