#include "ccode/bignum.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace ccode {

namespace {
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
}

BigUint::BigUint(std::uint64_t v) {
    if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::from_decimal(std::string_view s) {
    if (s.empty()) throw ParseError("empty decimal literal");
    BigUint out;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("invalid decimal digit");
        out = out * BigUint(10) + BigUint(static_cast<std::uint64_t>(c - '0'));
    }
    return out;
}

BigUint BigUint::pow(std::uint32_t base, std::uint64_t exp) {
    BigUint out(1);
    BigUint b(base);
    while (exp) {
        if (exp & 1) out = out * b;
        b = b * b;
        exp >>= 1;
    }
    return out;
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    return (limbs_.size() - 1) * 32 + static_cast<std::size_t>(std::bit_width(limbs_.back()));
}

std::uint64_t BigUint::to_u64() const {
    if (limbs_.size() > 2) throw DomainError("value exceeds 64 bits: " + str());
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::string BigUint::str() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> chunks;  // base 10^9, little endian
    BigUint v = *this;
    while (!v.is_zero()) {
        auto [q, r] = v.divmod(1000000000u);
        chunks.push_back(r);
        v = std::move(q);
    }
    std::string out = std::to_string(chunks.back());
    for (auto it = chunks.rbegin() + 1; it != chunks.rend(); ++it) {
        std::string part = std::to_string(*it);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    limbs_.resize(std::max(limbs_.size(), rhs.limbs_.size()), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
    if (*this < rhs) throw DomainError("unsigned subtraction underflow");
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sub = borrow + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
        if (limbs_[i] >= sub) {
            limbs_[i] = static_cast<std::uint32_t>(limbs_[i] - sub);
            borrow = 0;
        } else {
            limbs_[i] = static_cast<std::uint32_t>(kBase + limbs_[i] - sub);
            borrow = 1;
        }
    }
    assert(borrow == 0);
    trim();
    return *this;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BigUint out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] + carry +
                                static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        out.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
    }
    out.trim();
    return out;
}

std::pair<BigUint, std::uint32_t> BigUint::divmod(std::uint32_t d) const {
    if (d == 0) throw DomainError("division by zero");
    BigUint q;
    q.limbs_.assign(limbs_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    q.trim();
    return {std::move(q), static_cast<std::uint32_t>(rem)};
}

BigUint BigUint::div_ceil(std::uint32_t d) const {
    auto [q, r] = divmod(d);
    if (r) q += BigUint(1);
    return q;
}

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    return std::strong_ordering::equal;
}

BigUint icbrt(const BigUint& x) {
    if (x.is_zero()) return {};
    // Binary search over [1, 2^(ceil(bits/3)+1)).
    BigUint lo(1);
    BigUint hi = BigUint::pow(2, x.bit_length() / 3 + 2);
    // Invariant: lo^3 <= x < hi^3.
    while (lo + BigUint(1) < hi) {
        BigUint mid = (lo + hi).div_floor(2);
        if (mid * mid * mid <= x)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    return lo;
}

BigUint ceil_even(BigUint v) {
    if (!v.is_even()) v += BigUint(1);
    return v;
}

std::size_t ceil_log2(const BigUint& q) {
    if (q.is_zero()) throw DomainError("ceil_log2 of zero");
    return (q - BigUint(1)).bit_length();
}

}  // namespace ccode
