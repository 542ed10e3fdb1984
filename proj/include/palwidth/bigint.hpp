// bigint.hpp -- signed arbitrary-precision integers for exponent arithmetic
//
// Collection multiplies exponents pairwise, so beta entries grow like the
// product of alpha magnitudes; a fixed-width type would overflow silently.
// Only the operations the normal-form arithmetic needs are provided:
// add, subtract, multiply, compare, parity, exact halving, decimal I/O.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace palwidth {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {  // NOLINT: implicit by design, exponents are ints
        bool neg = v < 0;
        // two's-complement safe for LLONG_MIN
        std::uint64_t mag = neg ? ~static_cast<std::uint64_t>(v) + 1
                                : static_cast<std::uint64_t>(v);
        while (mag != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
            mag >>= 32;
        }
        negative_ = neg && !limbs_.empty();
    }

    static BigInt from_string(std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("BigInt: empty string");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size())
            throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit");
            r.mul_add_small(10, static_cast<std::uint32_t>(s[i] - '0'));
        }
        r.negative_ = neg && !r.limbs_.empty();
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
    bool is_odd() const { return !is_even(); }

    int signum() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_)
            return a.negative_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.negative_ ? c > 0 : c < 0;
    }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt operator-() const {
        BigInt r = *this;
        r.negative_ = !r.limbs_.empty() && !r.negative_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.negative_ == b.negative_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_ && !r.limbs_.empty();
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0)
                return r;
            const BigInt& big = c > 0 ? a : b;
            const BigInt& small = c > 0 ? b : a;
            r.limbs_ = sub_mag(big.limbs_, small.limbs_);
            r.negative_ = big.negative_ && !r.limbs_.empty();
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.is_zero() || b.is_zero())
            return r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                    r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
        }
        r.trim();
        r.negative_ = a.negative_ != b.negative_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Exact division by two; precondition is_even().
    BigInt half() const {
        if (is_odd())
            throw std::invalid_argument("BigInt::half: odd value");
        BigInt r = *this;
        std::uint32_t carry = 0;
        for (std::size_t i = r.limbs_.size(); i-- > 0;) {
            std::uint32_t cur = r.limbs_[i];
            r.limbs_[i] = (cur >> 1) | (carry << 31);
            carry = cur & 1u;
        }
        r.trim();
        r.negative_ = negative_ && !r.limbs_.empty();
        return r;
    }

    // Nonnegative remainder mod 2.
    int mod2() const { return is_even() ? 0 : 1; }

    std::optional<long long> to_int64() const {
        if (limbs_.size() > 2)
            return std::nullopt;
        std::uint64_t mag = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            mag = (mag << 32) | limbs_[i];
        if (!negative_ && mag <= static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
            return static_cast<long long>(mag);
        if (negative_ && mag <= static_cast<std::uint64_t>(std::numeric_limits<long long>::max()) + 1)
            return static_cast<long long>(~mag + 1);
        return std::nullopt;
    }

    std::string to_string() const {
        if (limbs_.empty())
            return "0";
        std::vector<std::uint32_t> tmp = limbs_;
        std::string digits;
        while (!tmp.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = tmp.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<std::uint32_t>(cur / 10);
                rem = cur % 10;
            }
            digits.push_back(static_cast<char>('0' + rem));
            while (!tmp.empty() && tmp.back() == 0)
                tmp.pop_back();
        }
        if (negative_)
            digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0)
            limbs_.pop_back();
        if (limbs_.empty())
            negative_ = false;
    }

    void mul_add_small(std::uint32_t mul, std::uint32_t add) {
        std::uint64_t carry = add;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size())
            return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& longer = a.size() >= b.size() ? a : b;
        const auto& shorter = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = longer;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = carry + r[i] + (i < shorter.size() ? shorter[i] : 0);
            r[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            if (carry == 0 && i >= shorter.size())
                break;
        }
        if (carry != 0)
            r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // precondition: |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = cur < 0 ? 1 : 0;
            r[i] = static_cast<std::uint32_t>(cur + (borrow << 32));
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }

    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;  // base 2^32, little-endian, no leading zeros
};

inline std::string to_string(const BigInt& v) { return v.to_string(); }

}  // namespace palwidth
