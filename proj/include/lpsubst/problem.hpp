#pragma once

#include <string>

#include "lpsubst/exact.hpp"

namespace lpsubst {

/// max c^T x  s.t.  A x <= b, x >= 0.
struct LpProblem {
    RatMatrix A;
    RatVector b;
    RatVector c;
    std::string name;

    std::size_t m() const { return A.rows(); }
    std::size_t n() const { return A.cols(); }

    /// Throws DimensionMismatch unless |b| = rows(A) and |c| = cols(A).
    void validate() const;

    friend bool operator==(const LpProblem& a, const LpProblem& b) {
        return a.A == b.A && a.b == b.b && a.c == b.c && a.name == b.name;
    }
};

/// (A, b, c) -> (-A^T, -c, -b).
LpProblem dualize(const LpProblem& p);

}  // namespace lpsubst
