#ifndef LSS_MONOMIAL_HPP
#define LSS_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lss {

/// Exponent vector over a fixed ring; index = variable position.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

    size_t nvars() const { return e_.size(); }
    int exponent(size_t i) const { return e_[i]; }
    int& exponent(size_t i) { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
    }
    bool is_squarefree() const {
        return std::all_of(e_.begin(), e_.end(), [](int x) { return x <= 1; });
    }

    bool divides(const Monomial& other) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }

    /// Exact quotient; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) {
            r.e_[i] -= b.e_[i];
            if (r.e_[i] < 0) throw std::domain_error("Monomial: inexact division");
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(r.e_[i], b.e_[i]);
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(r.e_[i], b.e_[i]);
        return r;
    }

    bool coprime(const Monomial& other) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && other.e_[i] > 0) return false;
        return true;
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0) s.push_back(static_cast<int>(i));
        return s;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
    std::vector<int> e_;
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// Lexicographic order along an explicit variable priority list (highest first).
/// A leading block of priority variables may be marked as an elimination block.
struct MonomialOrder {
    std::vector<int> priority;
    int elim_block_size = 0;

    static MonomialOrder lex(size_t nvars, int elim_block = 0) {
        MonomialOrder o;
        o.priority.resize(nvars);
        std::iota(o.priority.begin(), o.priority.end(), 0);
        o.elim_block_size = elim_block;
        return o;
    }

    bool is_positional() const {
        for (size_t i = 0; i < priority.size(); ++i)
            if (priority[i] != static_cast<int>(i)) return false;
        return true;
    }

    Cmp compare(const Monomial& u, const Monomial& v) const {
        if (u.nvars() != v.nvars() || u.nvars() != priority.size())
            throw std::invalid_argument("MonomialOrder: length mismatch");
        for (int idx : priority) {
            int a = u.exponent(idx), b = v.exponent(idx);
            if (a != b) return a > b ? Cmp::GT : Cmp::LT;
        }
        return Cmp::EQ;
    }

    bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) == Cmp::LT; }
    bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) == Cmp::GT; }
};

inline Cmp compare(const Monomial& u, const Monomial& v, const MonomialOrder& ord) {
    return ord.compare(u, v);
}

}  // namespace lss

#endif
