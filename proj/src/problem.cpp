#include "lpsubst/problem.hpp"

namespace lpsubst {

void LpProblem::validate() const {
    if (b.size() != A.rows()) throw DimensionMismatch("|b| must equal the number of rows of A");
    if (c.size() != A.cols()) throw DimensionMismatch("|objective| must equal the number of columns of A");
}

LpProblem dualize(const LpProblem& p) {
    p.validate();
    LpProblem d;
    d.A = -p.A.transposed();
    d.b.reserve(p.c.size());
    for (const auto& q : p.c) d.b.push_back(-q);
    d.c.reserve(p.b.size());
    for (const auto& q : p.b) d.c.push_back(-q);
    d.name = p.name;
    return d;
}

}  // namespace lpsubst
