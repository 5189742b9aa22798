#pragma once

#include <vector>

namespace equigrass::detail {

// Product of the orbit sums indexed by lam and mu (ascending part lists of equal
// length), where part x stands for a^(x mod 2) b^(x div 2) on one index.
// Returns the partitions nu whose orbit appears an odd number of times.
// With deformed=true a^2 = rho a + tau b, so two odd parts x,y on one index give
// both x+y and x+y-1; otherwise a^2 = 0 and such a pair vanishes. The
// coefficient of each nu is fixed by bidegree and left to the caller.
std::vector<std::vector<int>> orbit_product(const std::vector<int>& lam, const std::vector<int>& mu, bool deformed);

}  // namespace equigrass::detail
