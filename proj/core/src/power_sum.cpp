#include "powsum/power_sum.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

#include "powsum/binomial.hpp"

namespace powsum {

Natural power_sum_naive(const PowerSumQuery& q) {
    Natural acc;
    for (uint64_t j = 1; j != 0 && j <= q.a; ++j) acc += pow(Natural(j), q.n);
    return acc;
}

std::vector<Natural> power_sum_table(uint64_t n_max, uint64_t a) {
    if (n_max == std::numeric_limits<uint64_t>::max())
        throw std::invalid_argument("n_max too large");
    std::vector<Natural> table;
    table.reserve(n_max + 1);
    const Natural base = Natural(a) + Natural(1);
    Natural rhs_power = base;                          // (a+1)^{n+1}
    std::vector<Natural> coeff = {Natural(1), Natural(1)};  // row of C(n+1, .)
    for (uint64_t n = 0; n <= n_max; ++n) {
        Natural num = rhs_power;
        num -= Natural(1);
        for (uint64_t k = 0; k < n; ++k) num -= coeff[k] * table[k];
        table.push_back(exact_div(num, n + 1));        // C(n+1, n) = n + 1
        if (n == n_max) break;
        rhs_power *= base;
        coeff.emplace_back(1);                         // advance to row n+2
        for (std::size_t j = coeff.size() - 2; j >= 1; --j) coeff[j] += coeff[j - 1];
    }
    return table;
}

Natural power_sum_pascal(const PowerSumQuery& q) {
    auto table = power_sum_table(q.n, q.a);
    return std::move(table.back());
}

CongruenceReport verify_pascal_identity(uint64_t n, uint64_t a) {
    if (a == 0) throw std::invalid_argument("pascal identity requires a >= 1");
    if (n == std::numeric_limits<uint64_t>::max())
        throw std::invalid_argument("n too large");
    const auto coeff = binomial_row(n + 1);
    Natural lhs;
    for (uint64_t k = 0; k <= n; ++k) lhs += coeff[k] * power_sum_naive(k, a);
    Natural rhs = pow(Natural(a) + Natural(1), n + 1);
    rhs -= Natural(1);
    const bool holds = (lhs == rhs);
    return CongruenceReport{Claim::PascalIdentity, std::move(lhs), std::move(rhs),
                            std::nullopt,          std::nullopt,   holds};
}

Residue power_sum_mod(uint64_t n, uint64_t a, const Modulus& m) {
    const uint64_t mm = m.value();
    uint64_t acc = 0;
    for (uint64_t j = 1; j != 0 && j <= a; ++j) acc = add_mod(acc, pow_mod(j, n, mm), mm);
    return Residue(acc, mm);
}

}  // namespace powsum
