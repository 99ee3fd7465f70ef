#pragma once

// Interval arithmetic over the extended rationals, and the symmetric
// lambda-intervals [-v*lambda, v*lambda] used by the selection rule.
//
// lambda is never given a value: every interval the selector compares is a
// nonnegative multiple of the same lambda, so an interval is fully described
// by its magnitude v and inclusion is magnitude order.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lpsubst/exact.hpp"
#include "lpsubst/linear_form.hpp"

namespace lpsubst {

/// Closed interval [lo, hi] with lo <= hi.
struct Interval {
    ExtendedRational lo;
    ExtendedRational hi;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Throws std::invalid_argument when lo > hi.
Interval make_interval(ExtendedRational lo, ExtendedRational hi);

/// alpha * [u, v]: [alpha u, alpha v] for alpha >= 0, [alpha v, alpha u] otherwise.
Interval general_scale(const Interval& iv, const Rational& alpha);

/// [u, v] + [u', v'] = [u + u', v + v']. Throws UndefinedForm on inf + (-inf).
Interval general_add(const Interval& a, const Interval& b);

/// Closed-form image of sum_j alpha_j I_j (lower end takes v_j where alpha_j < 0).
Interval linear_combination(std::span<const Rational> alpha, std::span<const Interval> ivs);

class IntervalMag {
public:
    IntervalMag() = default;
    /// Throws std::invalid_argument for a negative magnitude.
    explicit IntervalMag(ExtendedRational magnitude);

    const ExtendedRational& magnitude() const { return mag_; }
    /// The interval for a concrete lambda >= 0.
    Interval at(const Rational& lambda) const;
    bool subset_of(const IntervalMag& other) const { return mag_ <= other.mag_; }

    friend std::strong_ordering operator<=>(const IntervalMag& a, const IntervalMag& b) { return a.mag_ <=> b.mag_; }
    friend bool operator==(const IntervalMag& a, const IntervalMag& b) { return a.mag_ == b.mag_; }

    friend IntervalMag operator+(const IntervalMag& a, const IntervalMag& b) { return IntervalMag(a.mag_ + b.mag_); }

private:
    ExtendedRational mag_;
};

/// Image of f over the lambda-domain of the given flavor:
/// U gives |x coefficients|_1 + |h coefficient|, B gives |h coefficient|.
IntervalMag linear_image(const LinearForm& f, HClass flavor);

template <class Key>
struct MagExtremum {
    IntervalMag value;
    std::vector<Key> keys;  ///< every key attaining value, in input order
};

namespace detail {
template <class Key, class Better>
MagExtremum<Key> extremum(const std::vector<std::pair<Key, IntervalMag>>& family, Better better) {
    if (family.empty()) throw std::invalid_argument("extremum of an empty interval family");
    MagExtremum<Key> out{family.front().second, {}};
    for (const auto& [key, mag] : family)
        if (better(mag, out.value)) out.value = mag;
    for (const auto& [key, mag] : family)
        if (mag == out.value) out.keys.push_back(key);
    return out;
}
}  // namespace detail

/// Smallest interval of the family and the full arg-set attaining it.
template <class Key>
MagExtremum<Key> min_mags(const std::vector<std::pair<Key, IntervalMag>>& family) {
    return detail::extremum(family, [](const IntervalMag& a, const IntervalMag& b) { return a < b; });
}

template <class Key>
MagExtremum<Key> max_mags(const std::vector<std::pair<Key, IntervalMag>>& family) {
    return detail::extremum(family, [](const IntervalMag& a, const IntervalMag& b) { return a > b; });
}

}  // namespace lpsubst
