#ifndef LSS_POLYNOMIAL_HPP
#define LSS_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "lss/field.hpp"
#include "lss/monomial.hpp"

namespace lss {

/// Polynomial ring K[x_1..x_n, y_1..y_n] (d coordinate blocks, default 2),
/// optionally preceded by auxiliary elimination variables.
/// Variable layout: [aux_1..aux_k | block_1(1..n) | ... | block_d(1..n)];
/// the default order is lex along this layout, so auxiliary variables always
/// outrank graph variables.
class RingContext {
public:
    RingContext(int n, FieldSpec field, int naux = 0, int d = 2)
        : n_(n), d_(d), naux_(naux), field_(field) {
        if (n < 0 || naux < 0 || d < 1)
            throw std::invalid_argument("RingContext: bad dimensions");
    }

    int vertex_count() const { return n_; }
    int coord_blocks() const { return d_; }
    int aux_count() const { return naux_; }
    const FieldSpec& field() const { return field_; }
    size_t total_vars() const { return static_cast<size_t>(naux_ + d_ * n_); }

    size_t aux_index(int k = 0) const {
        if (k < 0 || k >= naux_) throw std::out_of_range("RingContext: aux index");
        return static_cast<size_t>(k);
    }
    size_t var_index(int block, int vertex) const {
        if (block < 0 || block >= d_ || vertex < 1 || vertex > n_)
            throw std::out_of_range("RingContext: variable index");
        return static_cast<size_t>(naux_ + block * n_ + (vertex - 1));
    }
    size_t x_index(int vertex) const { return var_index(0, vertex); }
    size_t y_index(int vertex) const { return var_index(1, vertex); }

    std::string var_name(size_t idx) const {
        if (idx < static_cast<size_t>(naux_))
            return naux_ == 1 ? "t" : "t" + std::to_string(idx + 1);
        size_t g = idx - naux_;
        int block = static_cast<int>(g) / n_;
        int vertex = static_cast<int>(g) % n_ + 1;
        if (d_ == 2) return (block == 0 ? "x" : "y") + std::to_string(vertex);
        return "x" + std::to_string(vertex) + "_" + std::to_string(block + 1);
    }

    /// Resolves a variable name; returns npos if unknown.
    size_t find_var(const std::string& name) const {
        for (size_t i = 0; i < total_vars(); ++i)
            if (var_name(i) == name) return i;
        return static_cast<size_t>(-1);
    }

    MonomialOrder default_order() const { return MonomialOrder::lex(total_vars(), naux_); }

    friend bool operator==(const RingContext& a, const RingContext& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.naux_ == b.naux_ && a.field_ == b.field_;
    }
    friend bool operator!=(const RingContext& a, const RingContext& b) { return !(a == b); }

private:
    int n_;
    int d_;
    int naux_;
    FieldSpec field_;
};

using RingPtr = std::shared_ptr<const RingContext>;

inline RingPtr make_ring(int n, FieldSpec field, int naux = 0, int d = 2) {
    return std::make_shared<const RingContext>(n, field, naux, d);
}

struct Term {
    FieldElem coeff;
    Monomial mono;
};

/// Sparse multivariate polynomial in canonical form: nonzero coefficients,
/// monomials strictly decreasing in the ring's default lex order.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, const FieldElem& c) {
        Polynomial p(ring);
        if (!c.is_zero()) p.terms_.push_back({c, Monomial(ring->total_vars())});
        return p;
    }

    static Polynomial monomial(RingPtr ring, Monomial m, FieldElem c) {
        Polynomial p(ring);
        if (!c.is_zero()) p.terms_.push_back({std::move(c), std::move(m)});
        return p;
    }

    static Polynomial variable(RingPtr ring, size_t idx) {
        Monomial m(ring->total_vars());
        m.exponent(idx) = 1;
        return monomial(ring, std::move(m), FieldElem::one(ring->field()));
    }

    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    /// Leading term with respect to an arbitrary order (storage is default-lex,
    /// so non-default orders fall back to a linear scan).
    const Term& leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw std::domain_error("Polynomial: leading term of zero");
        if (ord.is_positional()) return terms_.front();
        size_t best = 0;
        for (size_t i = 1; i < terms_.size(); ++i)
            if (ord.greater(terms_[i].mono, terms_[best].mono)) best = i;
        return terms_[best];
    }
    const Term& leading_term() const {
        if (terms_.empty()) throw std::domain_error("Polynomial: leading term of zero");
        return terms_.front();
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = lex_cmp(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                FieldElem s = a.terms_[i].coeff + b.terms_[j].coeff;
                if (!s.is_zero()) r.terms_.push_back({s, a.terms_[i].mono});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial r(a.ring_);
        r.terms_.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                r.terms_.push_back({ta.coeff * tb.coeff, ta.mono * tb.mono});
        r.normalize();
        return r;
    }

    Polynomial scaled(const FieldElem& c) const {
        if (c.is_zero()) return Polynomial(ring_);
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = t.coeff * c;
        return r;
    }

    Polynomial times_monomial(const Monomial& m, const FieldElem& c) const {
        if (c.is_zero()) return Polynomial(ring_);
        Polynomial r = *this;
        for (auto& t : r.terms_) {
            t.coeff = t.coeff * c;
            t.mono = t.mono * m;
        }
        return r;  // multiplying by a fixed monomial preserves lex sorting
    }

    Polynomial monic(const MonomialOrder& ord) const {
        if (is_zero()) return *this;
        return scaled(leading_term(ord).coeff.inverse());
    }

    /// Simultaneous substitution var -> polynomial; unassigned variables map
    /// to themselves. This is the ring homomorphism used by the phi transform.
    Polynomial substitute(const std::map<size_t, Polynomial>& assignment) const {
        for (const auto& [idx, img] : assignment) {
            if (idx >= ring_->total_vars())
                throw std::invalid_argument("substitute: variable out of range");
            if (!img.ring() || *img.ring() != *ring_)
                throw std::invalid_argument("substitute: incompatible ring context");
        }
        Polynomial acc(ring_);
        for (const auto& t : terms_) {
            Monomial fixed(ring_->total_vars());
            Polynomial factor = Polynomial::constant(ring_, t.coeff);
            for (size_t v = 0; v < ring_->total_vars(); ++v) {
                int e = t.mono.exponent(v);
                if (e == 0) continue;
                auto it = assignment.find(v);
                if (it == assignment.end()) {
                    fixed.exponent(v) = e;
                } else {
                    for (int k = 0; k < e; ++k) factor = factor * it->second;
                }
            }
            acc = acc + factor.times_monomial(fixed, FieldElem::one(ring_->field()));
        }
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (size_t i = 0; i < terms_.size(); ++i) {
            const Term& t = terms_[i];
            std::string cs = t.coeff.to_string();
            bool neg = !cs.empty() && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            if (i == 0)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string ms = mono_string(t.mono);
            if (ms.empty()) {
                out += mag;
            } else if (mag == "1") {
                out += ms;
            } else {
                out += mag + "*" + ms;
            }
        }
        return out;
    }

    static Polynomial parse(const RingPtr& ring, const std::string& text);

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    static int lex_cmp(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.nvars(); ++i) {
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) > b.exponent(i) ? 1 : -1;
        }
        return 0;
    }

    void check_ring(const Polynomial& other) const {
        if (!ring_ || !other.ring_ || *ring_ != *other.ring_)
            throw std::invalid_argument("Polynomial: mixed ring contexts");
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
            return lex_cmp(a.mono, b.mono) > 0;
        });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().mono == t.mono) {
                merged.back().coeff = merged.back().coeff + t.coeff;
                if (merged.back().coeff.is_zero()) merged.pop_back();
            } else if (!t.coeff.is_zero()) {
                merged.push_back(std::move(t));
            }
        }
        terms_ = std::move(merged);
    }

    std::string mono_string(const Monomial& m) const {
        std::string out;
        for (size_t v = 0; v < m.nvars(); ++v) {
            int e = m.exponent(v);
            if (e == 0) continue;
            if (!out.empty()) out += "*";
            out += ring_->var_name(v);
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }
};

namespace detail {

/// Tokenizer/parser for the polynomial text grammar:
///   poly   := [sign] term (sign term)*
///   term   := factor (['*'] factor)*
///   factor := number ['/' number] | name ['^' number]
class PolyParser {
public:
    PolyParser(const RingPtr& ring, const std::string& text) : ring_(ring), s_(text) {}

    Polynomial run() {
        Polynomial acc = Polynomial::zero(ring_);
        skip_ws();
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw std::invalid_argument("poly parse: expected '+' or '-' at '" +
                                            s_.substr(pos_) + "'");
            }
            acc = acc + parse_term(sign);
            skip_ws();
            first = false;
        }
        if (first) throw std::invalid_argument("poly parse: empty input");
        return acc;
    }

private:
    RingPtr ring_;
    const std::string& s_;
    size_t pos_ = 0;

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    Polynomial parse_term(int sign) {
        FieldElem coeff = FieldElem::of(ring_->field(), sign);
        Monomial mono(ring_->total_vars());
        bool any = false;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                continue;
            }
            if (c >= '0' && c <= '9') {
                BigInt num = parse_int();
                skip_ws();
                if (peek() == '/') {
                    ++pos_;
                    skip_ws();
                    BigInt den = parse_int();
                    coeff = coeff * FieldElem::of(ring_->field(), Rational(num, den));
                } else {
                    coeff = coeff * FieldElem::of(ring_->field(), Rational(num));
                }
                any = true;
            } else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
                std::string name = parse_name();
                size_t idx = ring_->find_var(name);
                if (idx == static_cast<size_t>(-1))
                    throw std::invalid_argument("poly parse: unknown variable '" + name + "'");
                int e = 1;
                skip_ws();
                if (peek() == '^') {
                    ++pos_;
                    skip_ws();
                    BigInt be = parse_int();
                    e = static_cast<int>(be.to_longlong());
                    if (e < 0) throw std::invalid_argument("poly parse: negative exponent");
                }
                mono.exponent(idx) += e;
                any = true;
            } else {
                break;
            }
        }
        if (!any) throw std::invalid_argument("poly parse: empty term");
        return Polynomial::monomial(ring_, std::move(mono), coeff);
    }

    BigInt parse_int() {
        size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
        if (start == pos_) throw std::invalid_argument("poly parse: expected number");
        return BigInt::from_string(s_.substr(start, pos_ - start));
    }

    std::string parse_name() {
        size_t start = pos_;
        while (pos_ < s_.size() && ((s_[pos_] >= 'a' && s_[pos_] <= 'z') ||
                                    (s_[pos_] >= 'A' && s_[pos_] <= 'Z')))
            ++pos_;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '_') {
            ++pos_;
            while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
        }
        return s_.substr(start, pos_ - start);
    }
};

}  // namespace detail

inline Polynomial Polynomial::parse(const RingPtr& ring, const std::string& text) {
    return detail::PolyParser(ring, text).run();
}

/// Embeds a polynomial into a ring that prepends auxiliary variables (or more
/// generally any ring sharing the graph-variable layout).
inline Polynomial extend_to(const Polynomial& p, const RingPtr& target) {
    const RingPtr& src = p.ring();
    if (target->vertex_count() != src->vertex_count() ||
        target->coord_blocks() != src->coord_blocks() ||
        target->field() != src->field() || target->aux_count() < src->aux_count())
        throw std::invalid_argument("extend_to: incompatible rings");
    size_t shift = target->aux_count() - src->aux_count();
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Monomial m(target->total_vars());
        for (size_t v = 0; v < src->total_vars(); ++v)
            m.exponent(v + shift) = t.mono.exponent(v);
        terms.push_back({t.coeff, std::move(m)});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

/// Inverse of extend_to; fails if any auxiliary variable occurs.
inline Polynomial restrict_to(const Polynomial& p, const RingPtr& target) {
    const RingPtr& src = p.ring();
    if (target->vertex_count() != src->vertex_count() ||
        target->coord_blocks() != src->coord_blocks() ||
        target->field() != src->field() || target->aux_count() > src->aux_count())
        throw std::invalid_argument("restrict_to: incompatible rings");
    size_t shift = src->aux_count() - target->aux_count();
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        for (size_t v = 0; v < shift; ++v)
            if (t.mono.exponent(v) != 0)
                throw std::invalid_argument("restrict_to: auxiliary variable present");
        Monomial m(target->total_vars());
        for (size_t v = shift; v < src->total_vars(); ++v)
            m.exponent(v - shift) = t.mono.exponent(v);
        terms.push_back({t.coeff, std::move(m)});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace lss

#endif
