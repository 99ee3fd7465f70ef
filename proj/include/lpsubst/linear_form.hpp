#pragma once

#include <span>
#include <string>

#include "lpsubst/exact.hpp"

namespace lpsubst {

/// h-bounded (B) or h-unbounded (U). Also names the reachability domain used
/// to take the image of a function of that class: B pins every remaining
/// variable to 0, U lets every coordinate range over [-lambda, lambda].
enum class HClass { B, U };

const char* to_string(HClass c);

/// An (x, h)-linear function sum_j x[j-1] * x_j + h * h.
/// Variables are labelled 1..n; x has one slot per original variable.
struct LinearForm {
    RatVector x;
    Rational h;

    LinearForm() = default;
    explicit LinearForm(std::size_t n) : x(n), h(0) {}
    LinearForm(RatVector coeffs, Rational hcoef) : x(std::move(coeffs)), h(std::move(hcoef)) {}

    std::size_t n() const { return x.size(); }
    const Rational& coef(int var) const { return x.at(static_cast<std::size_t>(var - 1)); }
    Rational& coef(int var) { return x.at(static_cast<std::size_t>(var - 1)); }

    Rational eval(std::span<const Rational> point, const Rational& hval) const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// B iff every x coefficient is <= 0 and the h coefficient is > 0.
HClass classify(const LinearForm& f);

/// Readable form such as "5x2 + 15x3 - 13/2h" (variables named by prefix).
std::string format(const LinearForm& f, const std::string& var_prefix = "x");

}  // namespace lpsubst
