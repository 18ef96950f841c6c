#ifndef LSS_FIELD_HPP
#define LSS_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "lss/rational.hpp"

namespace lss {

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace detail

/// Coefficient field: the rationals or a prime field F_p.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }

    static FieldSpec prime(uint64_t p) {
        if (p >= (1ULL << 62))
            throw std::invalid_argument("FieldSpec: characteristic too large");
        if (!detail::is_prime_u64(p))
            throw std::invalid_argument("FieldSpec: " + std::to_string(p) + " is not prime");
        return FieldSpec(p);
    }

    /// Accepts "Q", "Fp:<p>", "F<p>".
    static FieldSpec parse(const std::string& s) {
        if (s == "Q" || s == "QQ") return rationals();
        std::string body;
        if (s.rfind("Fp:", 0) == 0)
            body = s.substr(3);
        else if (s.size() > 1 && (s[0] == 'F' || s[0] == 'f'))
            body = s.substr(1);
        else
            throw std::invalid_argument("FieldSpec: unknown field '" + s + "'");
        uint64_t p = 0;
        for (char c : body) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("FieldSpec: unknown field '" + s + "'");
            p = p * 10 + static_cast<uint64_t>(c - '0');
        }
        return prime(p);
    }

    bool is_rationals() const { return p_ == 0; }
    uint64_t characteristic() const { return p_; }

    /// True iff -1 is a square: never over Q; over F_p iff p = 2 or p = 1 mod 4.
    bool has_sqrt_minus_one() const {
        if (p_ == 0) return false;
        return p_ == 2 || p_ % 4 == 1;
    }

    /// A concrete c with c^2 = -1 (smallest such residue).
    uint64_t sqrt_minus_one() const {
        if (!has_sqrt_minus_one())
            throw std::domain_error("FieldSpec: no square root of -1 in " + to_string());
        if (p_ == 2) return 1;
        // c = g^((p-1)/4) for a quadratic non-residue g
        for (uint64_t g = 2; g < p_; ++g) {
            if (detail::powmod_u64(g, (p_ - 1) / 2, p_) == p_ - 1) {
                uint64_t c = detail::powmod_u64(g, (p_ - 1) / 4, p_);
                return std::min(c, p_ - c);
            }
        }
        throw std::logic_error("FieldSpec: non-residue search failed");
    }

    std::string to_string() const {
        return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_);
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.p_ == b.p_; }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return a.p_ != b.p_; }

private:
    explicit FieldSpec(uint64_t p) : p_(p) {}
    uint64_t p_;  // 0 encodes the rationals
};

/// Element of Q or F_p; carries its characteristic so values are self-contained.
class FieldElem {
public:
    FieldElem() : p_(0) {}

    static FieldElem of(const FieldSpec& f, long long v) {
        FieldElem e;
        e.p_ = f.characteristic();
        if (e.p_ == 0) {
            e.q_ = Rational(v);
        } else {
            long long m = v % static_cast<long long>(e.p_);
            if (m < 0) m += static_cast<long long>(e.p_);
            e.r_ = static_cast<uint64_t>(m);
        }
        return e;
    }

    static FieldElem of(const FieldSpec& f, const Rational& q) {
        if (f.is_rationals()) {
            FieldElem e;
            e.q_ = q;
            return e;
        }
        FieldElem num = from_bigint(f, q.num());
        FieldElem den = from_bigint(f, q.den());
        return num / den;
    }

    static FieldElem zero(const FieldSpec& f) { return of(f, 0); }
    static FieldElem one(const FieldSpec& f) { return of(f, 1); }

    uint64_t characteristic() const { return p_; }
    FieldSpec field() const { return p_ == 0 ? FieldSpec::rationals() : FieldSpec::prime(p_); }
    bool is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }
    bool is_one() const { return p_ == 0 ? q_.is_one() : r_ == 1 % p_; }
    const Rational& rational() const { return q_; }
    uint64_t residue() const { return r_; }

    FieldElem operator-() const {
        FieldElem e = *this;
        if (p_ == 0)
            e.q_ = -q_;
        else
            e.r_ = r_ == 0 ? 0 : p_ - r_;
        return e;
    }

    FieldElem inverse() const {
        if (is_zero()) throw std::domain_error("FieldElem: inverse of zero");
        FieldElem e = *this;
        if (p_ == 0)
            e.q_ = Rational(1) / q_;
        else
            e.r_ = detail::powmod_u64(r_, p_ - 2, p_);
        return e;
    }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        a.check(b);
        FieldElem e = a;
        if (a.p_ == 0) {
            e.q_ = a.q_ + b.q_;
        } else {
            e.r_ = a.r_ + b.r_;
            if (e.r_ >= a.p_) e.r_ -= a.p_;
        }
        return e;
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        a.check(b);
        FieldElem e = a;
        if (a.p_ == 0)
            e.q_ = a.q_ * b.q_;
        else
            e.r_ = detail::mulmod_u64(a.r_, b.r_, a.p_);
        return e;
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        a.check(b);
        return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    std::string to_string() const {
        return p_ == 0 ? q_.to_string() : std::to_string(r_);
    }

private:
    static FieldElem from_bigint(const FieldSpec& f, const BigInt& v) {
        FieldElem e;
        e.p_ = f.characteristic();
        BigInt m = v % BigInt(static_cast<long long>(e.p_));
        long long ll = m.to_longlong();
        if (ll < 0) ll += static_cast<long long>(e.p_);
        e.r_ = static_cast<uint64_t>(ll);
        return e;
    }

    void check(const FieldElem& other) const {
        if (p_ != other.p_)
            throw std::invalid_argument("FieldElem: mixed fields");
    }

    uint64_t p_ = 0;  // 0 encodes the rationals
    Rational q_;
    uint64_t r_ = 0;
};

}  // namespace lss

#endif
