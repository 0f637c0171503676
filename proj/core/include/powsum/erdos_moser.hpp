#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace powsum {

// A pair satisfying S_n(m-1) == m^n exactly.
struct EmSolution {
    uint64_t n;
    uint64_t m;

    friend auto operator<=>(const EmSolution&, const EmSolution&) = default;
};

// {2, 3, 5, 7, 11, 13}: cheap word-size rejection before any bignum work.
std::vector<uint64_t> default_filter_primes();

struct EmSearchConfig {
    uint64_t n_max = 1;
    uint64_t m_max = 2;
    std::vector<uint64_t> filter_primes = default_filter_primes();
};

// Exact bignum check of S_n(m-1) == m^n; requires n, m >= 1.
bool em_check(uint64_t n, uint64_t m);

// Modular prescreen. false means provably not a solution: some listed prime q
// has S_n(m-1) != m^n (mod q). true means not excluded. A true solution is
// never rejected, whatever the prime list. Every listed value must pass
// is_prime; otherwise NotPrimeError.
bool em_filter(uint64_t n, uint64_t m, std::span<const uint64_t> primes);

// All (n, m) with 1 <= n <= n_max, 2 <= m <= m_max and em_check(n, m), sorted
// by (n, m). Candidates go through em_filter first; filters affect speed only,
// never the result set. The grid is partitioned across `threads` workers that
// share nothing; their outputs are merged deterministically.
std::vector<EmSolution> em_search(const EmSearchConfig& cfg, unsigned threads = 1);

}  // namespace powsum
