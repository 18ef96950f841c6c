#ifndef LSS_GROEBNER_HPP
#define LSS_GROEBNER_HPP

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lss/polynomial.hpp"

namespace lss {

/// Resource caps for the Buchberger oracle. Exceeding a cap raises
/// BudgetExhausted; the oracle never returns a partial answer.
struct Budget {
    size_t max_basis = 20000;
    size_t max_pairs = 2000000;

    static Budget from_env() {
        Budget b;
        if (const char* v = std::getenv("LSS_BUDGET")) {
            char* end = nullptr;
            unsigned long long cap = std::strtoull(v, &end, 10);
            if (end && *end == '\0' && cap > 0) {
                b.max_basis = static_cast<size_t>(cap);
                b.max_pairs = static_cast<size_t>(cap) * 100;
            }
        }
        return b;
    }
};

struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error("oracle budget exhausted: " + what) {}
};

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> gens;

    static Ideal zero(RingPtr r) { return Ideal{std::move(r), {}}; }
};

/// Reduced Groebner basis: monic, fully inter-reduced, sorted by increasing
/// leading monomial. Two ideals are equal under an order iff these coincide.
struct ReducedGB {
    std::vector<Polynomial> basis;
    MonomialOrder order;

    friend bool operator==(const ReducedGB& a, const ReducedGB& b) {
        return a.basis == b.basis;
    }
    friend bool operator!=(const ReducedGB& a, const ReducedGB& b) { return !(a == b); }

    bool contains_one() const {
        return basis.size() == 1 && basis[0].terms().size() == 1 &&
               basis[0].leading_term().mono.is_one();
    }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> ms;
        ms.reserve(basis.size());
        for (const auto& g : basis) ms.push_back(g.leading_term(order).mono);
        return ms;
    }
};

/// Remainder of p on division by basis: no remainder term is divisible by any
/// basis leading monomial, and p - remainder lies in (basis). Deterministic:
/// divisors are tried in basis order.
inline Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                              const MonomialOrder& ord) {
    Polynomial work = p;
    Polynomial remainder = Polynomial::zero(p.ring());
    while (!work.is_zero()) {
        const Term& lt = work.leading_term(ord);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const Term& glt = g.leading_term(ord);
            if (glt.mono.divides(lt.mono)) {
                FieldElem factor = lt.coeff / glt.coeff;
                work = work - g.times_monomial(lt.mono / glt.mono, factor);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder = remainder +
                        Polynomial::monomial(p.ring(), lt.mono, lt.coeff);
            work = work - Polynomial::monomial(p.ring(), lt.mono, lt.coeff);
        }
    }
    return remainder;
}

/// Standard S-polynomial after monic normalization of both inputs.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s_polynomial: zero input");
    const Term& lf = f.leading_term(ord);
    const Term& lg = g.leading_term(ord);
    Monomial l = Monomial::lcm(lf.mono, lg.mono);
    Polynomial a = f.times_monomial(l / lf.mono, lf.coeff.inverse());
    Polynomial b = g.times_monomial(l / lg.mono, lg.coeff.inverse());
    return a - b;
}

namespace detail {

/// Minimize (drop generators with divisible leading monomials) and fully
/// inter-reduce a Groebner basis, yielding the reduced basis. Input must
/// already be a Groebner basis of its ideal.
inline ReducedGB reduce_groebner(std::vector<Polynomial> basis, const MonomialOrder& ord) {
    std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
    // minimization
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        const Monomial& mi = basis[i].leading_term(ord).mono;
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mj = basis[j].leading_term(ord).mono;
            if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i].monic(ord));
    }
    // tail reduction until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> rest;
            rest.reserve(minimal.size() - 1);
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) rest.push_back(minimal[j]);
            Polynomial r = normal_form(minimal[i], rest, ord);
            if (r != minimal[i]) {
                minimal[i] = r.monic(ord);
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term(ord).mono, b.leading_term(ord).mono);
    });
    return ReducedGB{std::move(minimal), ord};
}

}  // namespace detail

/// Buchberger's algorithm with the normal pair-selection strategy (minimal
/// lcm degree, then lex on pair indices) and the coprime-leading-term skip.
/// Output is the reduced Groebner basis, hence canonical for the ideal.
inline ReducedGB buchberger(const Ideal& ideal, const MonomialOrder& ord,
                            const Budget& budget = Budget{}) {
    std::vector<Polynomial> basis;
    for (const auto& g : ideal.gens)
        if (!g.is_zero()) basis.push_back(g.monic(ord));

    struct Pair {
        size_t i, j;
        int lcm_deg;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> queue;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            const Monomial& mi = basis[i].leading_term(ord).mono;
            const Monomial& mj = basis[j].leading_term(ord).mono;
            if (mi.coprime(mj)) continue;  // Buchberger's first criterion
            queue.push_back({i, j, Monomial::lcm(mi, mj).degree()});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

    size_t processed = 0;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair pr = *it;
        queue.erase(it);
        if (++processed > budget.max_pairs)
            throw BudgetExhausted("pair count > " + std::to_string(budget.max_pairs));

        Polynomial s = s_polynomial(basis[pr.i], basis[pr.j], ord);
        Polynomial r = normal_form(s, basis, ord);
        if (!r.is_zero()) {
            basis.push_back(r.monic(ord));
            if (basis.size() > budget.max_basis)
                throw BudgetExhausted("basis size > " + std::to_string(budget.max_basis));
            push_pairs_for(basis.size() - 1);
        }
    }
    return detail::reduce_groebner(std::move(basis), ord);
}

inline ReducedGB buchberger(const Ideal& ideal, const Budget& budget = Budget{}) {
    return buchberger(ideal, ideal.ring->default_order(), budget);
}

inline bool contains_poly(const ReducedGB& gb, const Polynomial& p) {
    return normal_form(p, gb.basis, gb.order).is_zero();
}

/// Every generator of inner reduces to zero against outer's basis.
inline bool contains_ideal(const Ideal& outer, const Ideal& inner,
                           const Budget& budget = Budget{}) {
    ReducedGB gb = buchberger(outer, budget);
    for (const auto& g : inner.gens)
        if (!contains_poly(gb, g)) return false;
    return true;
}

inline bool equal_ideals(const Ideal& a, const Ideal& b, const Budget& budget = Budget{}) {
    return buchberger(a, budget) == buchberger(b, budget);
}

namespace detail {

inline RingPtr with_aux(const RingPtr& ring) {
    if (ring->aux_count() != 0)
        throw std::invalid_argument("elimination: ring already has auxiliary variables");
    return make_ring(ring->vertex_count(), ring->field(), 1, ring->coord_blocks());
}

}  // namespace detail

/// I_1 cap I_2 via the single auxiliary variable construction: eliminate t
/// from t*I + (1-t)*J using the lex order with t in front.
inline Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget = Budget{}) {
    if (*a.ring != *b.ring) throw std::invalid_argument("intersect: mixed ring contexts");
    RingPtr ext = detail::with_aux(a.ring);
    Polynomial t = Polynomial::variable(ext, ext->aux_index());
    Polynomial one_minus_t = Polynomial::constant(ext, FieldElem::one(ext->field())) - t;
    Ideal combined{ext, {}};
    for (const auto& f : a.gens) combined.gens.push_back(t * extend_to(f, ext));
    for (const auto& g : b.gens) combined.gens.push_back(one_minus_t * extend_to(g, ext));
    ReducedGB gb = buchberger(combined, ext->default_order(), budget);
    Ideal result{a.ring, {}};
    for (const auto& p : gb.basis) {
        bool has_t = false;
        for (const auto& term : p.terms())
            if (term.mono.exponent(0) > 0) {
                has_t = true;
                break;
            }
        if (!has_t) result.gens.push_back(restrict_to(p, a.ring));
    }
    return result;
}

/// Exact division by a single polynomial; remainder must vanish.
inline Polynomial divide_exact(const Polynomial& p, const Polynomial& f,
                               const MonomialOrder& ord) {
    Polynomial work = p;
    Polynomial quot = Polynomial::zero(p.ring());
    const Term& lf = f.leading_term(ord);
    while (!work.is_zero()) {
        const Term& lt = work.leading_term(ord);
        if (!lf.mono.divides(lt.mono))
            throw std::domain_error("divide_exact: inexact division");
        FieldElem c = lt.coeff / lf.coeff;
        Monomial m = lt.mono / lf.mono;
        quot = quot + Polynomial::monomial(p.ring(), m, c);
        work = work - f.times_monomial(m, c);
    }
    return quot;
}

/// Ideal quotient I : (f) computed as (I cap (f)) with generators divided by f.
inline Ideal quotient_by(const Ideal& ideal, const Polynomial& f,
                         const Budget& budget = Budget{}) {
    if (f.is_zero()) throw std::invalid_argument("quotient_by: zero divisor polynomial");
    Ideal principal{ideal.ring, {f}};
    Ideal inter = intersect(ideal, principal, budget);
    MonomialOrder ord = ideal.ring->default_order();
    Ideal result{ideal.ring, {}};
    for (const auto& g : inter.gens) result.gens.push_back(divide_exact(g, f, ord));
    return result;
}

/// Rabinowitsch trick: f lies in the radical of I iff 1 in I + (1 - t*f).
inline bool radical_member(const Ideal& ideal, const Polynomial& f,
                           const Budget& budget = Budget{}) {
    RingPtr ext = detail::with_aux(ideal.ring);
    Polynomial t = Polynomial::variable(ext, ext->aux_index());
    Ideal combined{ext, {}};
    for (const auto& g : ideal.gens) combined.gens.push_back(extend_to(g, ext));
    combined.gens.push_back(Polynomial::constant(ext, FieldElem::one(ext->field())) -
                            t * extend_to(f, ext));
    return buchberger(combined, ext->default_order(), budget).contains_one();
}

}  // namespace lss

#endif
