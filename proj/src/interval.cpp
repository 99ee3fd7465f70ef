#include "lpsubst/interval.hpp"

namespace lpsubst {

Interval make_interval(ExtendedRational lo, ExtendedRational hi) {
    if (lo > hi) throw std::invalid_argument("invalid interval: lower end exceeds upper end");
    return Interval{std::move(lo), std::move(hi)};
}

Interval general_scale(const Interval& iv, const Rational& alpha) {
    if (iv.lo > iv.hi) throw std::invalid_argument("general_scale: invalid interval");
    const ExtendedRational a(alpha);
    if (alpha >= 0) return Interval{a * iv.lo, a * iv.hi};
    return Interval{a * iv.hi, a * iv.lo};
}

Interval general_add(const Interval& a, const Interval& b) {
    if (a.lo > a.hi || b.lo > b.hi) throw std::invalid_argument("general_add: invalid interval");
    return Interval{a.lo + b.lo, a.hi + b.hi};
}

Interval linear_combination(std::span<const Rational> alpha, std::span<const Interval> ivs) {
    if (alpha.size() != ivs.size()) throw DimensionMismatch("linear_combination: lengths differ");
    ExtendedRational lo(0L), up(0L);
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        const ExtendedRational a(alpha[j]);
        if (alpha[j] < 0) {
            lo = lo + a * ivs[j].hi;
            up = up + a * ivs[j].lo;
        } else {
            lo = lo + a * ivs[j].lo;
            up = up + a * ivs[j].hi;
        }
    }
    return make_interval(lo, up);
}

IntervalMag::IntervalMag(ExtendedRational magnitude) : mag_(std::move(magnitude)) {
    if (mag_.sign() < 0) throw std::invalid_argument("interval magnitude must be nonnegative");
}

Interval IntervalMag::at(const Rational& lambda) const {
    if (lambda < 0) throw std::invalid_argument("lambda must be nonnegative");
    const ExtendedRational v = mag_ * ExtendedRational(lambda);
    return Interval{-v, v};
}

IntervalMag linear_image(const LinearForm& f, HClass flavor) {
    Rational m = lpsubst::abs(f.h);
    if (flavor == HClass::U) m += l1_norm(f.x);
    return IntervalMag(ExtendedRational(m));
}

}  // namespace lpsubst
