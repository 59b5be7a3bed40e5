#pragma once

#include <cstddef>
#include <optional>

#include "qcat/simplicial_set.hpp"

namespace qcat {

/// Searches a dimension-wise bijection of generators commuting with faces,
/// through dimension d (d < 0: all stored dimensions). Throws BudgetExceeded.
std::optional<SimplicialMap> iso_check(const SSetPtr& x, const SSetPtr& y, int d = -1,
                                       std::size_t budget = 10000000);

}  // namespace qcat
