#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace powsum {

// Exact division hit a nonzero remainder. Valid inputs never trigger this:
// it signals corrupted recurrence state, not a user error.
class NotDivisibleError : public std::runtime_error {
public:
    NotDivisibleError(const std::string& dividend, uint64_t divisor, uint64_t remainder)
        : std::runtime_error("exact division of " + dividend + " by " +
                             std::to_string(divisor) + " leaves remainder " +
                             std::to_string(remainder)) {}
};

// A modulus that must be prime failed the primality test.
class NotPrimeError : public std::runtime_error {
public:
    explicit NotPrimeError(uint64_t modulus)
        : std::runtime_error("modulus " + std::to_string(modulus) + " is not prime"),
          modulus_(modulus) {}

    uint64_t modulus() const noexcept { return modulus_; }

private:
    uint64_t modulus_;
};

// Fermat's little theorem requires a base the modulus does not divide.
class DivisibleBaseError : public std::runtime_error {
public:
    DivisibleBaseError(uint64_t base, uint64_t modulus)
        : std::runtime_error("base " + std::to_string(base) +
                             " is divisible by modulus " + std::to_string(modulus)) {}
};

}  // namespace powsum
