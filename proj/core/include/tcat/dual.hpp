#pragma once

#include "tcat/marking.hpp"
#include "tcat/two_category.hpp"

namespace tcat {

/// op1 reverses 1-cells, op2 reverses 2-cells, op12 does both.
/// Cell ids and names are preserved.
enum class DualMode { op1, op2, op12 };

TwoCategory dualize(const TwoCategory& c, DualMode mode);
MarkedTwoCategory dualize(const MarkedTwoCategory& c, DualMode mode);

}  // namespace tcat
