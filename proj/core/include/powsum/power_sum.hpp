#pragma once

#include <cstdint>
#include <vector>

#include "powsum/modular.hpp"
#include "powsum/natural.hpp"
#include "powsum/report.hpp"

namespace powsum {

// The pair (n, a) of S_n(a) = 1^n + 2^n + ... + a^n.
// a = 0 denotes the empty sum, S_n(0) = 0.
struct PowerSumQuery {
    uint64_t n = 0;  // exponent
    uint64_t a = 0;  // upper summation bound
};

// Direct summation of exact powers, O(a) bignum power evaluations. This is
// the reference evaluator; every other route is checked against it.
Natural power_sum_naive(const PowerSumQuery& q);
inline Natural power_sum_naive(uint64_t n, uint64_t a) { return power_sum_naive({n, a}); }

// [S_0(a), ..., S_{n_max}(a)] via the recurrence obtained by solving
//
//     sum_{k=0}^{n} C(n+1, k) S_k(a) = (a+1)^{n+1} - 1
//
// for S_n(a). O(n_max^2) bignum operations, independent of a except for
// operand size. The division by n+1 is exact for every valid input; a
// NotDivisibleError escaping here means the recurrence state is corrupted.
std::vector<Natural> power_sum_table(uint64_t n_max, uint64_t a);

// Last entry of power_sum_table(q.n, q.a).
Natural power_sum_pascal(const PowerSumQuery& q);
inline Natural power_sum_pascal(uint64_t n, uint64_t a) { return power_sum_pascal({n, a}); }

// Checks sum_{k=0}^{n} C(n+1, k) S_k(a) == (a+1)^{n+1} - 1 with both sides
// computed exactly. The left side uses power_sum_naive entries, never the
// Pascal recurrence, so the recurrence cannot certify itself. Requires a >= 1.
CongruenceReport verify_pascal_identity(uint64_t n, uint64_t a);

// S_n(a) mod m by summing pow_mod terms, O(a log n) word operations; the
// exact bignum value is never materialized.
Residue power_sum_mod(uint64_t n, uint64_t a, const Modulus& m);

}  // namespace powsum
