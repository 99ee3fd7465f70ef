#pragma once

// Exact scalar and dense matrix arithmetic over the rationals.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lpsubst {

/// Arbitrary precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised for the undefined forms inf - inf and 0 * inf.
struct UndefinedForm : std::domain_error {
    using std::domain_error::domain_error;
};

struct RationalSyntaxError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parses "p/q" or "p" with an optional leading minus. The denominator must be nonzero.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Rational abs(const Rational& q);
int sign(const Rational& q);

/// Sum of absolute values.
Rational l1_norm(std::span<const Rational> v);

class ExtendedRational {
public:
    enum class Kind { Finite, PosInf, NegInf };

    ExtendedRational() = default;
    ExtendedRational(Rational v) : value_(std::move(v)) {}
    ExtendedRational(long v) : value_(v) {}

    static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }
    static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    /// Throws UndefinedForm when infinite.
    const Rational& value() const;
    int sign() const;

    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);
    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

    friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
    friend ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b);
    friend ExtendedRational operator*(const ExtendedRational& a, const ExtendedRational& b);
    ExtendedRational operator-() const;

private:
    explicit ExtendedRational(Kind k) : kind_(k) {}

    Kind kind_ = Kind::Finite;
    Rational value_;
};

ExtendedRational abs(const ExtendedRational& q);
std::string to_string(const ExtendedRational& q);

/// Dense row-major rational matrix with optional row/column labels.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    /// Throws DimensionMismatch on ragged input.
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
    static RatMatrix from_rows(const std::vector<RatVector>& rows);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    RatVector column(std::size_t c) const;

    RatMatrix transposed() const;
    RatMatrix operator-() const;

    /// Labels are optional; when present their size matches the dimension and entries are unique.
    void set_row_labels(std::vector<std::string> labels);
    void set_col_labels(std::vector<std::string> labels);
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    /// Entry-wise equality; labels are ignored.
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
};

/// Exact product. Result carries the row labels of a and the column labels of b.
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b);
RatVector mat_vec(const RatMatrix& a, std::span<const Rational> x);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace lpsubst
