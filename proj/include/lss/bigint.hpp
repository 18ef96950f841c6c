#ifndef LSS_BIGINT_HPP
#define LSS_BIGINT_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace lss {

/// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
/// Schoolbook arithmetic throughout; operand sizes stay small at desk scale.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        neg_ = v < 0;
        // avoid overflow on LLONG_MIN
        unsigned long long u = neg_ ? ~static_cast<unsigned long long>(v) + 1ULL
                                    : static_cast<unsigned long long>(v);
        while (u) {
            mag_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
            u >>= 32;
        }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        size_t i = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
            r = r.mul_small(10);
            r = r + BigInt(s[i] - '0');
        }
        r.neg_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return mag_.empty(); }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.neg_ = false;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.neg_ = a.neg_ && !r.mag_.empty();
            return r;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) {
            r.mag_ = sub_mag(a.mag_, b.mag_);
            r.neg_ = a.neg_;
        } else {
            r.mag_ = sub_mag(b.mag_, a.mag_);
            r.neg_ = b.neg_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] +
                               r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r.mag_[i + b.mag_.size()] += static_cast<uint32_t>(carry);
        }
        r.trim();
        r.neg_ = a.neg_ != b.neg_;
        return r;
    }

    /// Truncated division: q rounds toward zero, remainder has the dividend's sign.
    friend void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        q.mag_.assign(a.mag_.size(), 0);
        r = BigInt();
        // binary long division over the dividend's bits, high to low
        for (size_t limb = a.mag_.size(); limb-- > 0;) {
            for (int bit = 31; bit >= 0; --bit) {
                r.shift_left_1();
                if ((a.mag_[limb] >> bit) & 1u) {
                    if (r.mag_.empty())
                        r.mag_.push_back(1);
                    else
                        r.mag_[0] |= 1u;
                }
                if (cmp_mag(r.mag_, b.mag_) >= 0) {
                    r.mag_ = sub_mag(r.mag_, b.mag_);
                    q.mag_[limb] |= (1u << bit);
                }
            }
        }
        q.trim();
        r.trim();
        q.neg_ = !q.mag_.empty() && (a.neg_ != b.neg_);
        r.neg_ = !r.mag_.empty() && a.neg_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    static BigInt gcd(BigInt a, BigInt b) {
        a.neg_ = false;
        b.neg_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<uint32_t> work = mag_;
        std::string digits;
        while (!work.empty()) {
            // short division of the magnitude by 10^9
            uint64_t rem = 0;
            for (size_t i = work.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            std::string chunk = std::to_string(rem);
            if (!work.empty())
                chunk = std::string(9 - chunk.size(), '0') + chunk;
            digits = chunk + digits;
        }
        return neg_ ? "-" + digits : digits;
    }

    long long to_longlong() const {
        unsigned long long u = 0;
        for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
        return neg_ ? -static_cast<long long>(u) : static_cast<long long>(u);
    }

private:
    bool neg_ = false;
    std::vector<uint32_t> mag_;  // little-endian, no trailing zeros

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) neg_ = false;
    }

    void shift_left_1() {
        uint32_t carry = 0;
        for (auto& limb : mag_) {
            uint32_t next = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next;
        }
        if (carry) mag_.push_back(carry);
    }

    BigInt mul_small(uint32_t m) const {
        BigInt r;
        uint64_t carry = 0;
        for (uint32_t limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
            r.mag_.push_back(static_cast<uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) r.mag_.push_back(static_cast<uint32_t>(carry));
        r.neg_ = neg_ && !r.mag_.empty();
        r.trim();
        return r;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r;
        r.reserve(big.size() + 1);
        uint64_t carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0);
            r.push_back(static_cast<uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r;
        r.reserve(a.size());
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - borrow -
                          (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (1LL << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r.push_back(static_cast<uint32_t>(cur));
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

}  // namespace lss

#endif
