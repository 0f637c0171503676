#pragma once

#include <cstdint>

#include "powsum/modular.hpp"
#include "powsum/natural.hpp"
#include "powsum/report.hpp"

namespace powsum {

// Power-sum congruence fast path: S_n(p) == -1 (mod p) when p-1 | n, else
// == 0 (mod p). Returns the predicted residue (p-1 encodes -1) in O(1).
// Requires n >= 1 and prime p; throws NotPrimeError on a composite modulus.
Residue theorem1_residue(uint64_t n, const Modulus& p);

// Compares theorem1_residue against the brute-force modular summation
// power_sum_mod(n, p, p). holds is true for every valid input.
CongruenceReport verify_theorem1(uint64_t n, const Modulus& p);

// Fermat's little theorem: a^(p-1) == 1 (mod p) for prime p not dividing a.
// Throws DivisibleBaseError when p divides a.
CongruenceReport fermat_check(uint64_t a, const Modulus& p);

// Sum of C(m, k) over 0 < k < m with p-1 | k, computed exactly in bignums.
// An empty range gives 0. For p = 2 every k in [1, m-1] contributes.
// Requires m >= 1 and prime p.
Natural hermite_bachmann_sum(uint64_t m, const Modulus& p);

// Hermite-Bachmann congruence: the sum above is divisible by p.
CongruenceReport verify_hermite_bachmann(uint64_t m, const Modulus& p);

}  // namespace powsum
