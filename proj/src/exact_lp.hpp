#pragma once

#include <gmpxx.h>

#include <vector>

namespace toricflex::detail {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

/// Whether {x >= 0 : A x = b} is nonempty, by phase-one simplex over the
/// rationals with Bland's rule.
bool exact_feasible(const RationalMatrix& a, const std::vector<mpq_class>& b);

}  // namespace toricflex::detail
