#pragma once

#include <atomic>
#include <cstdint>

namespace powsum {

// Exact primality for any 64-bit value: trial division below 10^4,
// deterministic Miller-Rabin above it with a witness set that covers the
// whole 64-bit range. Never probabilistic.
bool is_prime(uint64_t n) noexcept;

// (a * b) % m without overflow; m >= 1.
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) noexcept;

// (a + b) % m; m >= 1.
uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) noexcept;

// base^exp % m by square-and-multiply, O(log exp) multiplications; m >= 1
// (m == 1 gives 0, exp == 0 gives the empty product 1).
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) noexcept;

// A modulus m >= 1 carrying a cached primality verdict.
class Modulus {
public:
    explicit Modulus(uint64_t m);  // throws std::invalid_argument when m == 0

    uint64_t value() const noexcept { return m_; }

    // Computed on first use, cached afterwards. The verdict is deterministic,
    // so the relaxed write-once cache slot is race-free in effect.
    bool is_prime() const noexcept;

    Modulus(const Modulus& other) noexcept;
    Modulus& operator=(const Modulus& other) noexcept;

    friend bool operator==(const Modulus& a, const Modulus& b) noexcept {
        return a.m_ == b.m_;
    }

private:
    uint64_t m_;
    mutable std::atomic<int8_t> prime_flag_;  // -1 unknown, 0 composite, 1 prime
};

// A value canonically reduced into [0, modulus). "-1 mod p" is stored as p - 1.
class Residue {
public:
    Residue(uint64_t value, uint64_t modulus);  // throws std::invalid_argument when modulus == 0
    Residue(uint64_t value, const Modulus& modulus);

    uint64_t value() const noexcept { return value_; }
    uint64_t modulus() const noexcept { return modulus_; }

    friend bool operator==(const Residue&, const Residue&) noexcept = default;

private:
    uint64_t value_;
    uint64_t modulus_;
};

// base^exp reduced into [0, m.value()).
Residue mod_pow(uint64_t base, uint64_t exp, const Modulus& m);

}  // namespace powsum
