#include "powsum/congruence.hpp"

#include <stdexcept>
#include <utility>

#include "powsum/binomial.hpp"
#include "powsum/errors.hpp"
#include "powsum/power_sum.hpp"

namespace powsum {

namespace {

void require_prime(const Modulus& p) {
    if (!p.is_prime()) throw NotPrimeError(p.value());
}

}  // namespace

std::string_view claim_name(Claim claim) noexcept {
    switch (claim) {
        case Claim::Fermat: return "fermat";
        case Claim::Theorem1: return "theorem1";
        case Claim::HermiteBachmann: return "hb";
        case Claim::PascalIdentity: return "pascal";
    }
    return "unknown";
}

Residue theorem1_residue(uint64_t n, const Modulus& p) {
    if (n == 0) throw std::invalid_argument("theorem1 requires n >= 1");
    require_prime(p);
    const uint64_t pv = p.value();
    return (n % (pv - 1) == 0) ? Residue(pv - 1, pv) : Residue(0, pv);
}

CongruenceReport verify_theorem1(uint64_t n, const Modulus& p) {
    const Residue expected = theorem1_residue(n, p);  // gates n and primality
    const Residue brute = power_sum_mod(n, p.value(), p);
    return CongruenceReport{Claim::Theorem1, Natural(brute.value()), std::nullopt,
                            p,               expected,               brute == expected};
}

CongruenceReport fermat_check(uint64_t a, const Modulus& p) {
    require_prime(p);
    const uint64_t pv = p.value();
    if (a % pv == 0) throw DivisibleBaseError(a, pv);
    const Residue value = mod_pow(a, pv - 1, p);
    return CongruenceReport{Claim::Fermat, Natural(value.value()), std::nullopt,
                            p,             Residue(1, pv),         value.value() == 1};
}

Natural hermite_bachmann_sum(uint64_t m, const Modulus& p) {
    if (m == 0) throw std::invalid_argument("hermite-bachmann requires m >= 1");
    require_prime(p);
    const uint64_t step = p.value() - 1;  // >= 1 since p is prime
    Natural sum;
    for (uint64_t k = step; k < m; k += step) {
        sum += binomial(m, int64_t(k));
        if (m - k <= step) break;  // next k would overflow the range anyway
    }
    return sum;
}

CongruenceReport verify_hermite_bachmann(uint64_t m, const Modulus& p) {
    Natural sum = hermite_bachmann_sum(m, p);
    const bool holds = (sum % p.value()) == 0;
    return CongruenceReport{Claim::HermiteBachmann, std::move(sum),        std::nullopt,
                            p,                      Residue(0, p.value()), holds};
}

}  // namespace powsum
