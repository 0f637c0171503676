#include "powsum/binomial.hpp"

#include <algorithm>

namespace powsum {

Natural binomial(uint64_t m, int64_t k) {
    if (k < 0 || uint64_t(k) > m) return Natural(0);
    const uint64_t kk = std::min(uint64_t(k), m - uint64_t(k));  // symmetry keeps the loop short
    Natural result(1);
    // After step i the value is C(m - kk + i, i), so each division is exact.
    for (uint64_t i = 1; i <= kk; ++i) {
        result *= (m - kk + i);
        result = exact_div(result, i);
    }
    return result;
}

std::vector<Natural> binomial_row(uint64_t m) {
    std::vector<Natural> row;
    row.reserve(m + 1);
    row.emplace_back(1);
    for (uint64_t r = 1; r <= m; ++r) {
        row.emplace_back(1);
        for (std::size_t j = row.size() - 2; j >= 1; --j) row[j] += row[j - 1];
    }
    return row;
}

}  // namespace powsum
