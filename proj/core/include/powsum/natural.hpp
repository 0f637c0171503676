#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace powsum {

// Arbitrary-precision nonnegative integer.
//
// Little-endian base-2^64 limbs in canonical form (no trailing zero limbs;
// zero is the empty vector). Nonnegativity is an invariant: subtracting a
// larger value throws instead of wrapping.
class Natural {
public:
    Natural() = default;
    Natural(uint64_t value);

    // Parses a nonempty string of decimal digits; throws std::invalid_argument.
    static Natural from_decimal(std::string_view text);

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool fits_u64() const noexcept { return limbs_.size() <= 1; }
    uint64_t to_u64() const;  // throws std::overflow_error above 2^64 - 1
    std::string to_decimal() const;
    std::size_t limb_count() const noexcept { return limbs_.size(); }

    Natural& operator+=(const Natural& rhs);
    Natural& operator-=(const Natural& rhs);  // throws std::underflow_error when rhs > *this
    Natural& operator*=(const Natural& rhs);
    Natural& operator*=(uint64_t rhs);

    // Quotient and remainder under division by a machine word; divisor >= 1.
    std::pair<Natural, uint64_t> divmod(uint64_t divisor) const;
    uint64_t operator%(uint64_t modulus) const;

    friend bool operator==(const Natural&, const Natural&) noexcept = default;
    std::strong_ordering operator<=>(const Natural& rhs) const noexcept;

    friend Natural operator+(Natural lhs, const Natural& rhs) { lhs += rhs; return lhs; }
    friend Natural operator-(Natural lhs, const Natural& rhs) { lhs -= rhs; return lhs; }
    friend Natural operator*(Natural lhs, const Natural& rhs) { lhs *= rhs; return lhs; }
    friend Natural operator*(Natural lhs, uint64_t rhs) { lhs *= rhs; return lhs; }

private:
    void trim() noexcept;

    std::vector<uint64_t> limbs_;
};

// base^exp with 0^0 = 1 (the empty product).
Natural pow(const Natural& base, uint64_t exp);

// a / b for b >= 1; throws NotDivisibleError unless b divides a exactly.
Natural exact_div(const Natural& a, uint64_t b);

std::ostream& operator<<(std::ostream& os, const Natural& value);

}  // namespace powsum
