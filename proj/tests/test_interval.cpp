#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpsubst/interval.hpp"
#include "support.hpp"

using namespace lpsubst;
using E = ExtendedRational;

namespace {
Interval iv(long lo, long hi) { return make_interval(E(lo), E(hi)); }
LinearForm form(std::vector<long> x, Rational h) {
    RatVector v;
    for (long c : x) v.emplace_back(c);
    return {v, h};
}
}  // namespace

TEST_CASE("general scale") {
    CHECK(general_scale(iv(1, 2), 3) == iv(3, 6));
    CHECK(general_scale(iv(1, 2), -1) == iv(-2, -1));
    CHECK(general_scale(iv(-5, 5), -2) == iv(-10, 10));
    CHECK(general_scale(make_interval(E(0), E::pos_inf()), -1) == make_interval(E::neg_inf(), E(0)));
    CHECK_THROWS_AS(make_interval(E(2), E(1)), std::invalid_argument);
}

TEST_CASE("general add") {
    CHECK(general_add(iv(0, 1), iv(2, 3)) == iv(2, 4));
    CHECK(general_add(iv(0, 0), iv(-4, 7)) == iv(-4, 7));
    CHECK((IntervalMag(E(2)) + IntervalMag(E(3))).magnitude() == E(5));
    const Interval up = make_interval(E::pos_inf(), E::pos_inf()), down = make_interval(E::neg_inf(), E::neg_inf());
    CHECK_THROWS_AS(general_add(up, down), UndefinedForm);
}

TEST_CASE("magnitudes") {
    CHECK_THROWS_AS(IntervalMag(E(-1)), std::invalid_argument);
    CHECK(IntervalMag(E(3)).at(2) == iv(-6, 6));
    CHECK(IntervalMag(E(2)).subset_of(IntervalMag(E(3))));
    CHECK_FALSE(IntervalMag(E(4)).subset_of(IntervalMag(E(3))));
}

TEST_CASE("linear images of the worked examples") {
    CHECK(linear_image(form({-1, 0, 0}, 3500), HClass::B).magnitude() == E(3500));
    CHECK(linear_image(form({1, -7, -8, 0, -5}, 9), HClass::U).magnitude() == E(30));
    CHECK(linear_image(LinearForm({Rational(-15, 51), 0}, Rational(47, 102)), HClass::B).magnitude() ==
          E(Rational(47, 102)));
}

TEST_CASE("min and max over families keep the full arg-set") {
    using P = std::pair<int, int>;
    std::vector<std::pair<P, IntervalMag>> fam{
        {{1, 3}, IntervalMag(E(3500))}, {{2, 3}, IntervalMag(E(3500))}, {{3, 3}, IntervalMag(E(3500))}};
    auto lo = min_mags(fam);
    CHECK(lo.value.magnitude() == E(3500));
    CHECK(lo.keys == std::vector<P>{{1, 3}, {2, 3}, {3, 3}});

    std::vector<std::pair<P, IntervalMag>> second{{{1, 3}, IntervalMag(E(Rational(9, 50)))},
                                                  {{2, 3}, IntervalMag(E(Rational(13, 30)))},
                                                  {{3, 3}, IntervalMag(E(Rational(47, 102)))}};
    auto hi = max_mags(second);
    CHECK(hi.value.magnitude() == E(Rational(47, 102)));
    CHECK(hi.keys == std::vector<P>{{3, 3}});

    std::vector<std::pair<P, IntervalMag>> pair{{{3, 4}, IntervalMag(E(30))}, {{1, 1}, IntervalMag(E(31))}};
    CHECK(min_mags(pair).keys == std::vector<P>{{3, 4}});
    std::vector<std::pair<int, IntervalMag>> single{{7, IntervalMag(E(5))}};
    CHECK(min_mags(single).keys == std::vector<int>{7});
    CHECK(max_mags(single).value.magnitude() == E(5));
    CHECK_THROWS_AS(min_mags(std::vector<std::pair<int, IntervalMag>>{}), std::invalid_argument);
}

TEST_CASE("closed-form linear combination matches corner enumeration") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 1 + rng() % 4;
        RatVector alpha = support::rand_vector(rng, n);
        std::vector<Interval> ivs;
        for (std::size_t j = 0; j < n; ++j) {
            Rational a = support::rand_rational(rng), b = support::rand_rational(rng);
            if (a > b) std::swap(a, b);
            ivs.push_back(make_interval(E(a), E(b)));
        }
        const Interval got = linear_combination(alpha, ivs);
        Rational lo, hi;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            Rational v = 0;
            for (std::size_t j = 0; j < n; ++j) v += alpha[j] * ((mask >> j & 1) ? ivs[j].hi.value() : ivs[j].lo.value());
            if (mask == 0 || v < lo) lo = v;
            if (mask == 0 || v > hi) hi = v;
        }
        CHECK(got == make_interval(E(lo), E(hi)));
    }
}

TEST_CASE("flavored images: U contains B, triangle inequality, corner check at lambda = 1") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 1 + rng() % 4;
        LinearForm f(support::rand_vector(rng, n), support::rand_rational(rng));
        LinearForm g(support::rand_vector(rng, n), support::rand_rational(rng));
        for (HClass fl : {HClass::B, HClass::U}) {
            LinearForm s(RatVector(n), f.h + g.h);
            for (std::size_t j = 0; j < n; ++j) s.x[j] = f.x[j] + g.x[j];
            CHECK(linear_image(s, fl) <= linear_image(f, fl) + linear_image(g, fl));
        }
        CHECK(linear_image(f, HClass::B).subset_of(linear_image(f, HClass::U)));

        Rational lo, hi;
        const std::size_t corners = std::size_t{1} << (n + 1);
        for (std::size_t mask = 0; mask < corners; ++mask) {
            Rational v = f.h * ((mask >> n & 1) ? 1 : -1);
            for (std::size_t j = 0; j < n; ++j) v += f.x[j] * ((mask >> j & 1) ? 1 : -1);
            if (mask == 0 || v < lo) lo = v;
            if (mask == 0 || v > hi) hi = v;
        }
        CHECK(linear_image(f, HClass::U).at(1) == make_interval(E(lo), E(hi)));
        CHECK(linear_image(f, HClass::B).at(1) == make_interval(E(-abs(f.h)), E(abs(f.h))));
    }
}

TEST_CASE("inclusion of symmetric intervals is magnitude order") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 200; ++k) {
        const Rational a = abs(support::rand_rational(rng)), b = abs(support::rand_rational(rng));
        const Interval ia = IntervalMag(E(a)).at(1), ib = IntervalMag(E(b)).at(1);
        const bool contained = ib.lo <= ia.lo && ia.hi <= ib.hi;
        CHECK(contained == IntervalMag(E(a)).subset_of(IntervalMag(E(b))));
    }
}
