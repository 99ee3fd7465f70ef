#pragma once

// Random generators shared by the property tests.

#include <random>
#include <set>

#include "lpsubst/cone.hpp"
#include "lpsubst/exact.hpp"
#include "lpsubst/problem.hpp"

namespace support {

using lpsubst::Rational;
using lpsubst::RatMatrix;
using lpsubst::RatVector;

inline Rational rand_rational(std::mt19937_64& rng, long span = 20, long den = 12) {
    std::uniform_int_distribution<long> num(-span, span), d(1, den);
    Rational q(num(rng), d(rng));
    q.canonicalize();
    return q;
}

inline Rational rand_int(std::mt19937_64& rng, long range) {
    return Rational(std::uniform_int_distribution<long>(-range, range)(rng));
}

inline RatVector rand_vector(std::mt19937_64& rng, std::size_t n) {
    RatVector v(n);
    for (auto& q : v) q = rand_rational(rng);
    return v;
}

inline RatVector rand_nonneg(std::mt19937_64& rng, std::size_t n) {
    RatVector v(n);
    for (auto& q : v) q = abs(rand_rational(rng));
    return v;
}

inline RatMatrix rand_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_rational(rng);
    return m;
}

inline lpsubst::LpProblem rand_problem(std::mt19937_64& rng, std::size_t m, std::size_t n, long range) {
    lpsubst::LpProblem p;
    p.A = RatMatrix(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) p.A(i, j) = rand_int(rng, range);
    p.b.resize(m);
    for (auto& q : p.b) q = rand_int(rng, range);
    p.c.resize(n);
    for (auto& q : p.c) q = rand_int(rng, range);
    return p;
}

/// Step-0 tableau of a random integer problem.
inline lpsubst::Tableau rand_tableau(std::mt19937_64& rng, std::size_t m, std::size_t n, long range = 5) {
    return lpsubst::homogenize(rand_problem(rng, m, n, range));
}

/// Full point w = (z, x_1..x_n, h) from x and h, with z = 0.
inline RatVector point(const RatVector& x, const Rational& h) {
    RatVector w{Rational(0)};
    w.insert(w.end(), x.begin(), x.end());
    w.push_back(h);
    return w;
}

}  // namespace support
