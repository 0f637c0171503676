#include "powsum/modular.hpp"

#include <bit>
#include <initializer_list>
#include <stdexcept>

namespace powsum {

namespace {

using u128 = unsigned __int128;

constexpr uint64_t kTrialDivisionCutoff = 10'000;

// true when `a` witnesses compositeness of odd n, n - 1 = d * 2^s.
bool miller_rabin_witness(uint64_t n, uint64_t d, int s, uint64_t a) {
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) noexcept {
    return uint64_t(u128(a % m) * (b % m) % m);
}

uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) noexcept {
    a %= m;
    b %= m;
    uint64_t s = a + b;
    if (s < a || s >= m) s -= m;
    return s;
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) noexcept {
    if (m == 1) return 0;
    uint64_t result = 1;
    uint64_t b = base % m;
    while (exp != 0) {
        if (exp & 1) result = uint64_t(u128(result) * b % m);
        b = uint64_t(u128(b) * b % m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(uint64_t n) noexcept {
    if (n < kTrialDivisionCutoff) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }
    if (n % 2 == 0) return false;
    const int s = std::countr_zero(n - 1);
    const uint64_t d = (n - 1) >> s;
    // This witness set is deterministic for every input below 3.3 * 10^24,
    // which covers the full 64-bit range.
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (miller_rabin_witness(n, d, s, a)) return false;
    return true;
}

Modulus::Modulus(uint64_t m) : m_(m), prime_flag_(-1) {
    if (m == 0) throw std::invalid_argument("modulus must be >= 1");
}

Modulus::Modulus(const Modulus& other) noexcept
    : m_(other.m_), prime_flag_(other.prime_flag_.load(std::memory_order_relaxed)) {}

Modulus& Modulus::operator=(const Modulus& other) noexcept {
    m_ = other.m_;
    prime_flag_.store(other.prime_flag_.load(std::memory_order_relaxed), std::memory_order_relaxed);
    return *this;
}

bool Modulus::is_prime() const noexcept {
    int8_t flag = prime_flag_.load(std::memory_order_relaxed);
    if (flag < 0) {
        flag = powsum::is_prime(m_) ? 1 : 0;
        prime_flag_.store(flag, std::memory_order_relaxed);
    }
    return flag == 1;
}

Residue::Residue(uint64_t value, uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("modulus must be >= 1");
    value_ = value % modulus;
    modulus_ = modulus;
}

Residue::Residue(uint64_t value, const Modulus& modulus) : Residue(value, modulus.value()) {}

Residue mod_pow(uint64_t base, uint64_t exp, const Modulus& m) {
    return Residue(pow_mod(base, exp, m.value()), m.value());
}

}  // namespace powsum
