#pragma once

#include "lpsubst/linear_form.hpp"

namespace lpsubst {

enum class BoundKind { Upper, Lower, StrictlyPositiveLower };

const char* to_string(BoundKind k);
inline bool is_lower(BoundKind k) { return k != BoundKind::Upper; }

/// Row `row` of the tableau solved for variable `var`:
///   x_var <= form(x, h)  (Upper, tableau entry > 0)
///   x_var >= form(x, h)  (Lower / StrictlyPositiveLower, tableau entry < 0)
/// form.coef(var) is always 0.
struct BoundFunction {
    int row = 0;
    int var = 0;
    LinearForm form;
    BoundKind kind = BoundKind::Upper;
    HClass hclass = HClass::U;

    friend bool operator==(const BoundFunction&, const BoundFunction&) = default;
};

}  // namespace lpsubst
