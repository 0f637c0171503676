#pragma once

#include <cstdint>
#include <vector>

#include "powsum/natural.hpp"

namespace powsum {

// C(m, k), exact. Out-of-range k (k < 0 or k > m) gives 0. Uses the
// incremental multiplicative formula; every intermediate division is exact.
Natural binomial(uint64_t m, int64_t k);

// [C(m,0), ..., C(m,m)] by the additive Pascal-triangle recurrence, an
// implementation independent of binomial().
std::vector<Natural> binomial_row(uint64_t m);

}  // namespace powsum
