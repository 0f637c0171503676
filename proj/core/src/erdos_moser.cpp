#include "powsum/erdos_moser.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "powsum/errors.hpp"
#include "powsum/modular.hpp"
#include "powsum/natural.hpp"
#include "powsum/parallel.hpp"
#include "powsum/power_sum.hpp"

namespace powsum {

std::vector<uint64_t> default_filter_primes() { return {2, 3, 5, 7, 11, 13}; }

bool em_check(uint64_t n, uint64_t m) {
    if (n == 0 || m == 0) throw std::invalid_argument("em_check requires n, m >= 1");
    return power_sum_naive(n, m - 1) == pow(Natural(m), n);
}

bool em_filter(uint64_t n, uint64_t m, std::span<const uint64_t> primes) {
    if (n == 0 || m == 0) throw std::invalid_argument("em_filter requires n, m >= 1");
    for (uint64_t q : primes)
        if (!is_prime(q)) throw NotPrimeError(q);
    for (uint64_t q : primes) {
        const Modulus mod(q);
        if (power_sum_mod(n, m - 1, mod).value() != mod_pow(m, n, mod).value()) return false;
    }
    return true;
}

std::vector<EmSolution> em_search(const EmSearchConfig& cfg, unsigned threads) {
    if (cfg.n_max == 0 || cfg.m_max == 0)
        throw std::invalid_argument("em_search requires n_max, m_max >= 1");
    for (uint64_t q : cfg.filter_primes)
        if (!is_prime(q)) throw NotPrimeError(q);
    if (cfg.m_max < 2) return {};

    const uint64_t m_span = cfg.m_max - 1;  // m ranges over [2, m_max]
    const unsigned __int128 total = static_cast<unsigned __int128>(cfg.n_max) * m_span;
    if (total > std::numeric_limits<uint64_t>::max())
        throw std::invalid_argument("search grid too large");
    const uint64_t count = static_cast<uint64_t>(total);

    // Grid point i maps to (n, m) in lexicographic order, so concatenating
    // the block outputs already yields a sorted result.
    const unsigned blocks = parallel_block_count(count, threads);
    std::vector<std::vector<EmSolution>> found(blocks);
    parallel_for_blocks(count, threads, [&](unsigned block, uint64_t lo, uint64_t hi) {
        auto& out = found[block];
        for (uint64_t i = lo; i < hi; ++i) {
            const uint64_t n = 1 + i / m_span;
            const uint64_t m = 2 + i % m_span;
            if (!em_filter(n, m, cfg.filter_primes)) continue;
            if (em_check(n, m)) out.push_back({n, m});
        }
    });

    std::vector<EmSolution> result;
    for (auto& part : found) result.insert(result.end(), part.begin(), part.end());
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace powsum
