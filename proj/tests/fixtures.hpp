#pragma once

// Published worked examples, transcribed cell by cell.

#include <string>
#include <vector>

#include "lpsubst/cone.hpp"
#include "lpsubst/exact.hpp"
#include "lpsubst/problem.hpp"

namespace fixtures {

using Grid = std::vector<std::vector<std::string>>;

inline lpsubst::RatMatrix mat(const Grid& g) {
    std::vector<lpsubst::RatVector> rows;
    for (const auto& r : g) {
        lpsubst::RatVector v;
        for (const auto& s : r) v.push_back(lpsubst::parse_rational(s));
        rows.push_back(std::move(v));
    }
    return lpsubst::RatMatrix::from_rows(rows);
}

inline lpsubst::RatVector vec(const std::vector<std::string>& s) {
    lpsubst::RatVector v;
    for (const auto& q : s) v.push_back(lpsubst::parse_rational(q));
    return v;
}

// Positive-maximum example, after x1 was substituted at step 0.
// Columns z, x1..x4, h.
inline const Grid pos_step1 = {
    {"1", "0", "1", "0", "0", "-3500"},
    {"0", "0", "1", "0", "0", "-3500"},
    {"0", "0", "1/10", "-1", "-1/10", "-1/5"},
    {"0", "0", "-10", "-30", "2", "13"},
    {"0", "0", "0", "-6", "-3", "4"},
};
inline const Grid pos_step2 = {
    {"1", "0", "1", "0", "0", "-3500"},
    {"0", "0", "1", "0", "0", "-3500"},
    {"0", "0", "-2/5", "-5/2", "0", "9/20"},
    {"0", "0", "-5", "-15", "0", "13/2"},
    {"0", "0", "-15", "-51", "0", "47/2"},
};
inline const Grid pos_step3 = {
    {"1", "0", "1", "0", "0", "-3500"},
    {"0", "0", "1", "0", "0", "-3500"},
    {"0", "0", "57/170", "0", "0", "-179/255"},
    {"0", "0", "-10/17", "0", "0", "-7/17"},
    {"0", "0", "15/51", "0", "0", "-47/102"},
};

inline lpsubst::Tableau pos_start() { return lpsubst::Tableau(mat(pos_step1), {2, 3, 4}, 1); }

// Negative-maximum example.
inline lpsubst::LpProblem neg_problem() {
    lpsubst::LpProblem p;
    p.A = mat({{"-2", "3", "0"}, {"4", "1", "0"}, {"-1", "-3", "7"}, {"-1", "-1", "-2"}, {"1", "-2", "-3"}});
    p.b = vec({"-1", "7", "29", "-6", "-4"});
    p.c = vec({"-1", "1", "-3"});
    p.name = "negative-max";
    return p;
}

inline const Grid neg_primal0 = {
    {"1", "1", "-1", "3", "0"},
    {"0", "1", "-1", "3", "0"},
    {"0", "-2", "3", "0", "1"},
    {"0", "4", "1", "0", "-7"},
    {"0", "-1", "-3", "7", "-29"},
    {"0", "-1", "-1", "-2", "6"},
    {"0", "1", "-2", "-3", "4"},
};
inline const Grid neg_primal1 = {
    {"1", "0", "1/2", "3", "1/2"},
    {"0", "0", "1/2", "3", "1/2"},
    {"0", "0", "-3/2", "0", "-1/2"},
    {"0", "0", "7", "0", "-5"},
    {"0", "0", "-9/2", "7", "-59/2"},
    {"0", "0", "-5/2", "-2", "11/2"},
    {"0", "0", "-1/2", "-3", "9/2"},
};

// Dual of the same problem. Columns z, y1..y5, h.
inline const Grid neg_dual0 = {
    {"1", "-1", "7", "29", "-6", "-4", "0"},
    {"0", "-1", "7", "29", "-6", "-4", "0"},
    {"0", "2", "-4", "1", "1", "-1", "-1"},
    {"0", "-3", "-1", "3", "1", "2", "1"},
    {"0", "0", "0", "-7", "2", "3", "-3"},
};
inline const Grid neg_dual1 = {
    {"1", "-1", "7", "8", "0", "5", "-9"},
    {"0", "-1", "7", "8", "0", "5", "-9"},
    {"0", "2", "-4", "9/2", "0", "-5/2", "1/2"},
    {"0", "-3", "-1", "13/2", "0", "1/2", "5/2"},
    {"0", "0", "0", "-7/2", "0", "3/2", "-3/2"},
};
inline const Grid neg_dual2 = {
    {"1", "0", "5", "41/4", "0", "15/4", "-35/4"},
    {"0", "0", "5", "41/4", "0", "15/4", "-35/4"},
    {"0", "0", "-2", "9/4", "0", "-5/4", "1/4"},
    {"0", "0", "-7", "53/4", "0", "-13/4", "13/4"},
    {"0", "0", "0", "-7/2", "0", "3/2", "-3/2"},
};
// As printed. Rows -1 and 0 of the y3 column disagree with the product of the
// previous tableau and the substitution; see neg_dual3_y3_cost below.
inline const Grid neg_dual3 = {
    {"1", "0", "0", "347/28", "0", "10/7", "-45/7"},
    {"0", "0", "0", "347/28", "0", "10/7", "-45/7"},
    {"0", "0", "0", "-43/28", "0", "-9/28", "-19/28"},
    {"0", "0", "0", "-53/28", "0", "13/28", "-13/28"},
    {"0", "0", "0", "-7/2", "0", "3/2", "-3/2"},
};
// 41/4 + 5 * 53/28, by hand: the y2 entry 5 times the y3 coefficient of the
// substituted bound, added to the old y3 entry.
inline const lpsubst::Rational neg_dual3_y3_cost = lpsubst::Rational(41, 4) + 5 * lpsubst::Rational(53, 28);

}  // namespace fixtures
