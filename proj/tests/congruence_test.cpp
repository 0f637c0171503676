#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <powsum/binomial.hpp>
#include <powsum/congruence.hpp>
#include <powsum/errors.hpp>
#include <powsum/power_sum.hpp>

using powsum::Modulus;
using powsum::Natural;
using powsum::Residue;

namespace {

std::vector<uint64_t> primes_up_to(uint64_t bound) {
    std::vector<uint64_t> out;
    for (uint64_t q = 2; q <= bound; ++q)
        if (powsum::is_prime(q)) out.push_back(q);
    return out;
}

// holds must line up with the congruence the report encodes.
void check_report_invariant(const powsum::CongruenceReport& rep) {
    if (rep.modulus.has_value()) {
        REQUIRE(rep.expected.has_value());
        CHECK(rep.holds == (rep.lhs % rep.modulus->value() == rep.expected->value()));
    } else {
        REQUIRE(rep.rhs.has_value());
        CHECK(rep.holds == (rep.lhs == *rep.rhs));
    }
}

}  // namespace

TEST_SUITE_BEGIN("congruence");

TEST_CASE("theorem1_residue branches") {
    CHECK(powsum::theorem1_residue(4, Modulus(5)).value() == 4);  // p-1 | n: -1 mod 5
    CHECK(powsum::theorem1_residue(3, Modulus(5)).value() == 0);  // p-1 does not divide n
    CHECK(powsum::theorem1_residue(7, Modulus(2)).value() == 1);  // p = 2 is always the first branch
    CHECK(powsum::theorem1_residue(6, Modulus(7)).value() == 6);
    CHECK_THROWS_AS(powsum::theorem1_residue(4, Modulus(6)), powsum::NotPrimeError);
    CHECK_THROWS_AS(powsum::theorem1_residue(0, Modulus(5)), std::invalid_argument);
}

TEST_CASE("verify_theorem1 compares fast path against brute force") {
    // Independent word-sized oracle for S_n(p) mod p.
    const auto brute = [](uint64_t n, uint64_t p) {
        uint64_t acc = 0;
        for (uint64_t j = 1; j <= p; ++j) {
            uint64_t t = 1;
            for (uint64_t i = 0; i < n; ++i) t = t * j % p;
            acc = (acc + t) % p;
        }
        return acc;
    };
    CHECK(brute(4, 5) == 4);
    CHECK(brute(6, 7) == 6);
    CHECK(brute(5, 7) == 0);

    const auto r1 = powsum::verify_theorem1(4, Modulus(5));
    CHECK(r1.holds);
    CHECK(r1.lhs == Natural(4));
    CHECK(r1.expected->value() == 4);

    const auto r2 = powsum::verify_theorem1(6, Modulus(7));
    CHECK(r2.holds);
    CHECK(r2.lhs == Natural(6));

    const auto r3 = powsum::verify_theorem1(5, Modulus(7));
    CHECK(r3.holds);
    CHECK(r3.lhs == Natural(0));

    for (const auto& rep : {r1, r2, r3}) check_report_invariant(rep);
}

TEST_CASE("fast path equals brute force on a subgrid") {
    for (uint64_t p : primes_up_to(47))
        for (uint64_t n = 1; n <= 60; ++n)
            CHECK(powsum::theorem1_residue(n, Modulus(p)) == powsum::power_sum_mod(n, p, Modulus(p)));
}

TEST_CASE("power sums mod p have period p-1 in the exponent") {
    // The proof decomposition writes n = d(p-1) + r with r in (0, p-1].
    for (uint64_t p : primes_up_to(47)) {
        const Modulus mod(p);
        for (uint64_t n = 1; n <= 200; ++n) {
            const uint64_t r = (n - 1) % (p - 1) + 1;
            CHECK(powsum::power_sum_mod(n, p, mod) == powsum::power_sum_mod(r, p, mod));
        }
    }
}

TEST_CASE("fermat_check") {
    const auto r1 = powsum::fermat_check(2, Modulus(5));
    CHECK(r1.holds);
    CHECK(r1.lhs == Natural(1));  // 16 mod 5
    check_report_invariant(r1);

    const auto r2 = powsum::fermat_check(1, Modulus(97));
    CHECK(r2.holds);
    CHECK(r2.lhs == Natural(1));

    CHECK_THROWS_AS(powsum::fermat_check(10, Modulus(5)), powsum::DivisibleBaseError);
    CHECK_THROWS_AS(powsum::fermat_check(0, Modulus(5)), powsum::DivisibleBaseError);
    CHECK_THROWS_AS(powsum::fermat_check(3, Modulus(4)), powsum::NotPrimeError);
}

TEST_CASE("fermat holds for every base below every prime up to 1000") {
    for (uint64_t p : primes_up_to(1000)) {
        const Modulus mod(p);
        for (uint64_t a = 1; a < p; ++a) {
            if (!powsum::fermat_check(a, mod).holds) {
                CAPTURE(p);
                CAPTURE(a);
                REQUIRE(false);
            }
        }
    }
    CHECK(true);
}

TEST_CASE("hermite_bachmann_sum terms and totals") {
    CHECK(powsum::hermite_bachmann_sum(14, Modulus(5)) == Natural(4095));  // 1001 + 3003 + 91
    CHECK(powsum::hermite_bachmann_sum(1, Modulus(7)) == Natural(0));      // empty range
    CHECK(powsum::hermite_bachmann_sum(6, Modulus(5)) == Natural(15));     // single term C(6,4)
    CHECK_THROWS_AS(powsum::hermite_bachmann_sum(14, Modulus(6)), powsum::NotPrimeError);
    CHECK_THROWS_AS(powsum::hermite_bachmann_sum(0, Modulus(5)), std::invalid_argument);
}

TEST_CASE("hermite_bachmann_sum for p = 2 sums the whole open row") {
    // Oracle: row sum minus the endpoints, 2^m - 2.
    const auto row = powsum::binomial_row(4);
    CHECK(row[1] + row[2] + row[3] == Natural(14));
    CHECK(powsum::hermite_bachmann_sum(4, Modulus(2)) == Natural(14));

    for (uint64_t m = 1; m <= 64; ++m) {
        Natural want = powsum::pow(Natural(2), m);
        want -= Natural(2);  // m = 1 gives the empty sum 0
        CHECK(powsum::hermite_bachmann_sum(m, Modulus(2)) == want);
    }
}

TEST_CASE("verify_hermite_bachmann") {
    const auto r1 = powsum::verify_hermite_bachmann(14, Modulus(5));
    CHECK(r1.holds);
    CHECK(r1.lhs == Natural(4095));  // 5 * 819
    CHECK(r1.expected->value() == 0);
    check_report_invariant(r1);

    const auto r2 = powsum::verify_hermite_bachmann(1, Modulus(3));
    CHECK(r2.holds);
    CHECK(r2.lhs == Natural(0));

    // C(10,2)+C(10,4)+C(10,6)+C(10,8) = 45+210+210+45 = 510 = 3*170.
    const auto row10 = powsum::binomial_row(10);
    CHECK(row10[2] + row10[4] + row10[6] + row10[8] == Natural(510));
    const auto r3 = powsum::verify_hermite_bachmann(10, Modulus(3));
    CHECK(r3.holds);
    CHECK(r3.lhs == Natural(510));

    CHECK_THROWS_AS(powsum::verify_hermite_bachmann(14, Modulus(6)), powsum::NotPrimeError);
}

TEST_CASE("hb holds across a sampled grid") {
    for (uint64_t p : primes_up_to(31))
        for (uint64_t m = 1; m <= 80; ++m) CHECK(powsum::verify_hermite_bachmann(m, Modulus(p)).holds);
}

TEST_CASE("corollary derivation chain from the identity instance") {
    // Instantiate the identity at n = m-1, a = p, reduce mod p, substitute the
    // theorem-1 residues, and compare the outcome with the direct verifier.
    for (uint64_t p : primes_up_to(50)) {
        const Modulus mod(p);
        const auto sums = powsum::power_sum_table(99, p);  // S_k(p), k = 0..99
        for (uint64_t m = 1; m <= 100; ++m) {
            const auto coeff = powsum::binomial_row(m);

            // Full identity instance, both sides exact, then reduced mod p.
            Natural lhs_exact;
            for (uint64_t k = 0; k <= m - 1; ++k) lhs_exact += coeff[k] * sums[k];
            Natural rhs_exact = powsum::pow(Natural(p) + Natural(1), m);
            rhs_exact -= Natural(1);
            REQUIRE(lhs_exact == rhs_exact);
            const uint64_t lhs_mod = lhs_exact % p;
            const uint64_t rhs_mod = rhs_exact % p;  // (p+1)^m - 1 == 0 mod p
            REQUIRE(lhs_mod == rhs_mod);
            REQUIRE(rhs_mod == 0);

            // Substitute S_k(p) mod p by the theorem-1 residues (S_0(p) == 0).
            uint64_t substituted = 0;
            for (uint64_t k = 1; k <= m - 1; ++k) {
                const uint64_t t1 = powsum::theorem1_residue(k, mod).value();
                substituted = (substituted + powsum::mul_mod(coeff[k] % p, t1, p)) % p;
            }
            REQUIRE(substituted == lhs_mod);

            // Nonzero residues appear exactly at k with p-1 | k, each worth
            // -1, so the substituted sum is -(hb sum) mod p; it vanishes iff
            // the Hermite-Bachmann congruence holds.
            const bool chain_holds = (substituted == 0);
            CHECK(chain_holds == powsum::verify_hermite_bachmann(m, mod).holds);
        }
    }
}

TEST_SUITE_END();
