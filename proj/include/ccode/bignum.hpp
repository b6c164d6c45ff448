#pragma once

// Minimal arbitrary-precision unsigned integer: just enough arithmetic for
// exact bound-table propagation and the cube-root bound evaluation. Base
// 2^32, little-endian limbs, value semantics.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccode/errors.hpp"

namespace ccode {

class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);  // NOLINT: implicit by design, small ints are values too
    static BigUint from_decimal(std::string_view s);
    static BigUint pow(std::uint32_t base, std::uint64_t exp);

    bool is_zero() const { return limbs_.empty(); }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
    std::size_t bit_length() const;
    std::uint64_t to_u64() const;  // throws DomainError when the value does not fit
    std::string str() const;

    BigUint& operator+=(const BigUint& rhs);
    BigUint& operator-=(const BigUint& rhs);  // requires *this >= rhs
    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
    friend BigUint operator*(const BigUint& a, const BigUint& b);

    // Division by a small positive divisor: (quotient, remainder).
    std::pair<BigUint, std::uint32_t> divmod(std::uint32_t d) const;
    BigUint div_floor(std::uint32_t d) const { return divmod(d).first; }
    BigUint div_ceil(std::uint32_t d) const;

    friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);
    friend bool operator==(const BigUint& a, const BigUint& b) = default;

private:
    std::vector<std::uint32_t> limbs_;  // normalized: no trailing zero limbs
    void trim();
};

// Largest v with v^3 <= x.
BigUint icbrt(const BigUint& x);

// Smallest even integer >= v.
BigUint ceil_even(BigUint v);

// ceil(log2 q) for q >= 1.
std::size_t ceil_log2(const BigUint& q);

}  // namespace ccode
