#include "lpsubst/exact.hpp"

#include <algorithm>
#include <set>

namespace lpsubst {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

void check_labels(const std::vector<std::string>& labels, std::size_t expected, const char* what) {
    if (labels.empty()) return;
    if (labels.size() != expected)
        throw DimensionMismatch(std::string(what) + " label count does not match dimension");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw std::invalid_argument(std::string(what) + " labels must be unique");
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw RationalSyntaxError("not a rational: \"" + std::string(text) + "\"");

    Rational q;
    q.get_num() = mpz_class(std::string(num), 10);
    q.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (q.get_den() == 0) throw RationalSyntaxError("zero denominator: \"" + std::string(text) + "\"");
    if (text.front() == '-') q.get_num() = -q.get_num();
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational abs(const Rational& q) { return ::abs(q); }

int sign(const Rational& q) { return sgn(q); }

Rational l1_norm(std::span<const Rational> v) {
    Rational sum = 0;
    for (const auto& q : v) sum += ::abs(q);
    return sum;
}

// ExtendedRational ---------------------------------------------------------

const Rational& ExtendedRational::value() const {
    if (!is_finite()) throw UndefinedForm("value() of an infinite extended rational");
    return value_;
}

int ExtendedRational::sign() const {
    switch (kind_) {
        case Kind::PosInf: return 1;
        case Kind::NegInf: return -1;
        case Kind::Finite: break;
    }
    return sgn(value_);
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    using K = ExtendedRational::Kind;
    auto rank = [](K k) { return k == K::NegInf ? 0 : k == K::Finite ? 1 : 2; };
    if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
    if (!a.is_finite()) return std::strong_ordering::equal;
    return cmp(a.value_, b.value_) <=> 0;
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.is_finite() && b.is_finite()) return ExtendedRational(Rational(a.value_ + b.value_));
    if (!a.is_finite() && !b.is_finite() && a.kind_ != b.kind_)
        throw UndefinedForm("inf + (-inf) is undefined");
    return a.is_finite() ? b : a;
}

ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b) { return a + (-b); }

ExtendedRational operator*(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.is_finite() && b.is_finite()) return ExtendedRational(Rational(a.value_ * b.value_));
    const int s = a.sign() * b.sign();
    if (s == 0) throw UndefinedForm("0 * inf is undefined");
    return s > 0 ? ExtendedRational::pos_inf() : ExtendedRational::neg_inf();
}

ExtendedRational ExtendedRational::operator-() const {
    switch (kind_) {
        case Kind::PosInf: return neg_inf();
        case Kind::NegInf: return pos_inf();
        case Kind::Finite: break;
    }
    return ExtendedRational(Rational(-value_));
}

ExtendedRational abs(const ExtendedRational& q) { return q.sign() < 0 ? -q : q; }

std::string to_string(const ExtendedRational& q) {
    switch (q.kind()) {
        case ExtendedRational::Kind::PosInf: return "inf";
        case ExtendedRational::Kind::NegInf: return "-inf";
        case ExtendedRational::Kind::Finite: break;
    }
    return to_string(q.value());
}

// RatMatrix ----------------------------------------------------------------

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatVector RatMatrix::column(std::size_t c) const {
    RatVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    t.row_labels_ = col_labels_;
    t.col_labels_ = row_labels_;
    return t;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix out = *this;
    for (auto& q : out.data_) q = -q;
    return out;
}

void RatMatrix::set_row_labels(std::vector<std::string> labels) {
    check_labels(labels, rows_, "row");
    row_labels_ = std::move(labels);
}

void RatMatrix::set_col_labels(std::vector<std::string> labels) {
    check_labels(labels, cols_, "column");
    col_labels_ = std::move(labels);
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: inner dimensions differ");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    if (!a.row_labels().empty()) out.set_row_labels(a.row_labels());
    if (!b.col_labels().empty()) out.set_col_labels(b.col_labels());
    return out;
}

RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("mat_add: shapes differ");
    RatMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
    return out;
}

RatVector mat_vec(const RatMatrix& a, std::span<const Rational> x) {
    if (a.cols() != x.size()) throw DimensionMismatch("mat_vec: shapes differ");
    RatVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(a.row(i), x);
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: lengths differ");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace lpsubst
