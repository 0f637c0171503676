#include "powsum/natural.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "powsum/errors.hpp"

namespace powsum {

namespace {

using u128 = unsigned __int128;

// Largest power of ten below 2^64; decimal I/O works in chunks of this size.
constexpr uint64_t kChunkBase = 10'000'000'000'000'000'000ULL;
constexpr std::size_t kChunkDigits = 19;

}  // namespace

Natural::Natural(uint64_t value) {
    if (value != 0) limbs_.push_back(value);
}

void Natural::trim() noexcept {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

uint64_t Natural::to_u64() const {
    if (limbs_.size() > 1) throw std::overflow_error("Natural value exceeds 64 bits");
    return limbs_.empty() ? 0 : limbs_.front();
}

Natural& Natural::operator+=(const Natural& rhs) {
    if (&rhs == this) {
        Natural copy(rhs);
        return *this += copy;
    }
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    uint64_t carry = 0;
    std::size_t i = 0;
    for (; i < rhs.limbs_.size(); ++i) {
        const u128 t = u128(limbs_[i]) + rhs.limbs_[i] + carry;
        limbs_[i] = uint64_t(t);
        carry = uint64_t(t >> 64);
    }
    for (; carry != 0 && i < limbs_.size(); ++i) {
        const u128 t = u128(limbs_[i]) + carry;
        limbs_[i] = uint64_t(t);
        carry = uint64_t(t >> 64);
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
    if (&rhs == this) {
        limbs_.clear();
        return *this;
    }
    if (rhs.limbs_.size() > limbs_.size()) throw std::underflow_error("Natural subtraction underflow");
    uint64_t borrow = 0;
    std::size_t i = 0;
    for (; i < rhs.limbs_.size(); ++i) {
        const u128 sub = u128(rhs.limbs_[i]) + borrow;
        borrow = (u128(limbs_[i]) < sub) ? 1 : 0;
        limbs_[i] = uint64_t(u128(limbs_[i]) - sub);
    }
    for (; borrow != 0; ++i) {
        if (i == limbs_.size()) throw std::underflow_error("Natural subtraction underflow");
        borrow = (limbs_[i] == 0) ? 1 : 0;
        limbs_[i] -= 1;
    }
    trim();
    return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
    if (is_zero() || rhs.is_zero()) {
        limbs_.clear();
        return *this;
    }
    const std::vector<uint64_t>& a = limbs_;
    const std::vector<uint64_t>& b = rhs.limbs_;
    std::vector<uint64_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const u128 t = u128(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = uint64_t(t);
            carry = uint64_t(t >> 64);
        }
        r[i + b.size()] += carry;
    }
    limbs_ = std::move(r);
    trim();
    return *this;
}

Natural& Natural::operator*=(uint64_t rhs) {
    if (rhs == 0 || is_zero()) {
        limbs_.clear();
        return *this;
    }
    uint64_t carry = 0;
    for (uint64_t& limb : limbs_) {
        const u128 t = u128(limb) * rhs + carry;
        limb = uint64_t(t);
        carry = uint64_t(t >> 64);
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
}

std::pair<Natural, uint64_t> Natural::divmod(uint64_t divisor) const {
    if (divisor == 0) throw std::invalid_argument("division by zero");
    Natural quotient;
    quotient.limbs_.assign(limbs_.size(), 0);
    uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        const u128 cur = (u128(rem) << 64) | limbs_[i];
        quotient.limbs_[i] = uint64_t(cur / divisor);
        rem = uint64_t(cur % divisor);
    }
    quotient.trim();
    return {std::move(quotient), rem};
}

uint64_t Natural::operator%(uint64_t modulus) const {
    if (modulus == 0) throw std::invalid_argument("division by zero");
    uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        rem = uint64_t(((u128(rem) << 64) | limbs_[i]) % modulus);
    return rem;
}

std::strong_ordering Natural::operator<=>(const Natural& rhs) const noexcept {
    if (limbs_.size() != rhs.limbs_.size()) return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    return std::strong_ordering::equal;
}

Natural Natural::from_decimal(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty decimal string");
    for (char c : text)
        if (c < '0' || c > '9')
            throw std::invalid_argument("invalid decimal digit in \"" + std::string(text) + "\"");
    Natural out;
    std::size_t pos = 0;
    std::size_t head = text.size() % kChunkDigits;
    if (head == 0) head = kChunkDigits;
    while (pos < text.size()) {
        const std::size_t len = (pos == 0) ? head : kChunkDigits;
        uint64_t chunk = 0;
        for (std::size_t i = 0; i < len; ++i) chunk = chunk * 10 + uint64_t(text[pos + i] - '0');
        if (pos == 0) {
            out = Natural(chunk);
        } else {
            out *= kChunkBase;
            out += Natural(chunk);
        }
        pos += len;
    }
    return out;
}

std::string Natural::to_decimal() const {
    if (is_zero()) return "0";
    std::vector<uint64_t> chunks;
    Natural tmp = *this;
    while (!tmp.is_zero()) {
        auto [q, r] = tmp.divmod(kChunkBase);
        chunks.push_back(r);
        tmp = std::move(q);
    }
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        const std::string part = std::to_string(chunks[i]);
        out.append(kChunkDigits - part.size(), '0');
        out += part;
    }
    return out;
}

Natural pow(const Natural& base, uint64_t exp) {
    Natural result(1);
    Natural b = base;
    while (exp != 0) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp != 0) b *= b;
    }
    return result;
}

Natural exact_div(const Natural& a, uint64_t b) {
    if (b == 0) throw std::invalid_argument("exact_div requires a positive divisor");
    auto [quotient, rem] = a.divmod(b);
    if (rem != 0) throw NotDivisibleError(a.to_decimal(), b, rem);
    return std::move(quotient);
}

std::ostream& operator<<(std::ostream& os, const Natural& value) {
    return os << value.to_decimal();
}

}  // namespace powsum
