#include "lpsubst/linear_form.hpp"

#include <algorithm>

namespace lpsubst {

const char* to_string(HClass c) { return c == HClass::B ? "hB" : "hU"; }

Rational LinearForm::eval(std::span<const Rational> point, const Rational& hval) const {
    return dot(x, point) + h * hval;
}

HClass classify(const LinearForm& f) {
    const bool nonpositive = std::all_of(f.x.begin(), f.x.end(), [](const Rational& q) { return q <= 0; });
    return nonpositive && f.h > 0 ? HClass::B : HClass::U;
}

std::string format(const LinearForm& f, const std::string& var_prefix) {
    std::string out;
    auto term = [&](const Rational& q, const std::string& name) {
        if (q == 0) return;
        const bool neg = q < 0;
        const Rational mag = neg ? Rational(-q) : q;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (mag != 1) out += to_string(mag);
        out += name;
    };
    for (std::size_t j = 0; j < f.x.size(); ++j) term(f.x[j], var_prefix + std::to_string(j + 1));
    term(f.h, "h");
    return out.empty() ? "0" : out;
}

}  // namespace lpsubst
