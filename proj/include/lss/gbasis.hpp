#ifndef LSS_GBASIS_HPP
#define LSS_GBASIS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lss/builders.hpp"
#include "lss/graph.hpp"
#include "lss/groebner.hpp"

namespace lss {

/// Path i = i_0, ..., i_r = j with i < j whose interior vertices are each
/// either < i or > j. Carries the attached monomial
/// u = prod_{i_k > j} x_{i_k} * prod_{i_k < i} y_{i_k}.
struct AdmissiblePath {
    std::vector<int> seq;

    int from() const { return seq.front(); }
    int to() const { return seq.back(); }
    int length() const { return static_cast<int>(seq.size()) - 1; }
    bool odd() const { return length() % 2 == 1; }

    Monomial attached_monomial(const RingPtr& ring) const {
        Monomial u(ring->total_vars());
        int j = to();
        for (size_t k = 1; k + 1 < seq.size(); ++k) {
            int v = seq[k];
            if (v > j)
                u.exponent(ring->x_index(v)) += 1;
            else
                u.exponent(ring->y_index(v)) += 1;  // v < from() by admissibility
        }
        return u;
    }
};

/// All admissible paths from i to j (i < j): exhaustive DFS restricted to
/// interior vertices below i or above j. Results are ordered by sequence.
inline std::vector<AdmissiblePath> admissible_paths(const Graph& g, int i, int j) {
    if (i >= j) throw std::invalid_argument("admissible_paths: need i < j");
    std::vector<AdmissiblePath> out;
    std::vector<int> path{i};
    std::vector<bool> used(g.vertex_count() + 1, false);
    used[i] = true;
    auto dfs = [&](auto&& self, int v) -> void {
        for (int w : g.neighbors(v)) {
            if (w == j) {
                path.push_back(j);
                out.push_back({path});
                path.pop_back();
                continue;
            }
            if (used[w] || (w > i && w < j) || w == i) continue;
            used[w] = true;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used[w] = false;
        }
    };
    dfs(dfs, i);
    std::sort(out.begin(), out.end(),
              [](const AdmissiblePath& a, const AdmissiblePath& b) { return a.seq < b.seq; });
    return out;
}

enum class GBKind { TypeI, TypeII, TypeIII, TypeIV };

inline std::string to_string(GBKind k) {
    switch (k) {
        case GBKind::TypeI: return "i";
        case GBKind::TypeII: return "ii";
        case GBKind::TypeIII: return "iii";
        case GBKind::TypeIV: return "iv";
    }
    return "?";
}

/// A member of the combinatorial Groebner basis together with the witnessing
/// path(s): one path for types (i)/(ii), an odd/even pair for (iii), and the
/// pair plus the pendant path for (iv).
struct GBElement {
    Polynomial poly;
    GBKind kind;
    std::vector<std::vector<int>> witnesses;
};

namespace detail {

/// Pendant paths from the attachment vertex to fresh vertices: every vertex
/// after it must avoid the blocked set. Each prefix of length >= 1 is itself
/// a valid pendant path.
inline void pendant_paths(const Graph& g, const std::vector<bool>& blocked,
                          std::vector<int>& path, std::vector<bool>& used,
                          std::vector<std::vector<int>>& out) {
    int v = path.back();
    for (int w : g.neighbors(v)) {
        if (blocked[w] || used[w]) continue;
        used[w] = true;
        path.push_back(w);
        out.push_back(path);
        pendant_paths(g, blocked, path, used, out);
        path.pop_back();
        used[w] = false;
    }
}

}  // namespace detail

/// The generating set of Thm-level types (i)-(iv) for the permanental ideal
/// of g's edge set:
///   (i)  u_pi * b_ij for odd admissible pi,
///   (ii) u_pi * g_ij for even admissible pi,
///   (iii) lcm(u_pi, u_sigma) * y_i * x_j for an odd/even pair with the same
///        endpoints,
///   (iv) for such a pair plus a pendant path tau from a in V(pi) u V(sigma)
///        to an outside vertex b (only a shared): with
///        W = V(pi) u V(sigma) u V(tau) \ {b}, emit y_b * prod_W x_h when b
///        is below all of W, x_b * prod_W y_h when b is above all of W, and
///        nothing when b interleaves.
/// Deduplicated by value; with prune set, elements that are monomial
/// multiples of other emitted elements are dropped (the initial ideal is
/// unchanged).
inline std::vector<GBElement> combinatorial_gb(const Graph& g, const RingPtr& ring,
                                               bool prune = true) {
    if (ring->vertex_count() != g.vertex_count() || ring->coord_blocks() != 2)
        throw std::invalid_argument("combinatorial_gb: ring does not match graph");
    const FieldSpec& field = ring->field();
    const FieldElem one = FieldElem::one(field);
    std::vector<GBElement> out;

    auto emit = [&](Polynomial p, GBKind kind, std::vector<std::vector<int>> wit) {
        for (const auto& e : out)
            if (e.poly == p) return;
        out.push_back({std::move(p), kind, std::move(wit)});
    };

    int n = g.vertex_count();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            auto paths = admissible_paths(g, i, j);
            std::vector<const AdmissiblePath*> odd, even;
            for (const auto& p : paths) (p.odd() ? odd : even).push_back(&p);

            for (const auto* p : odd) {
                Monomial u = p->attached_monomial(ring);
                emit(gens::b(ring, i, j).times_monomial(u, one), GBKind::TypeI, {p->seq});
            }
            for (const auto* p : even) {
                Monomial u = p->attached_monomial(ring);
                emit(gens::g(ring, i, j).times_monomial(u, one), GBKind::TypeII, {p->seq});
            }

            for (const auto* po : odd) {
                for (const auto* pe : even) {
                    Monomial u = Monomial::lcm(po->attached_monomial(ring),
                                               pe->attached_monomial(ring));
                    u.exponent(ring->y_index(i)) += 1;
                    u.exponent(ring->x_index(j)) += 1;
                    emit(Polynomial::monomial(ring, u, one), GBKind::TypeIII,
                         {po->seq, pe->seq});

                    // type (iv): pendant paths leaving the union at a single
                    // attachment vertex
                    std::vector<bool> in_union(n + 1, false);
                    std::vector<int> union_verts;
                    for (int v : po->seq)
                        if (!in_union[v]) {
                            in_union[v] = true;
                            union_verts.push_back(v);
                        }
                    for (int v : pe->seq)
                        if (!in_union[v]) {
                            in_union[v] = true;
                            union_verts.push_back(v);
                        }
                    for (int a : union_verts) {
                        std::vector<std::vector<int>> pendants;
                        std::vector<int> path{a};
                        std::vector<bool> used(n + 1, false);
                        used[a] = true;
                        detail::pendant_paths(g, in_union, path, used, pendants);
                        for (const auto& tau : pendants) {
                            int b = tau.back();
                            std::vector<bool> in_w(n + 1, false);
                            for (int v : union_verts) in_w[v] = true;
                            for (int v : tau) in_w[v] = true;
                            in_w[b] = false;
                            bool below = true, above = true;
                            for (int h = 1; h <= n; ++h) {
                                if (!in_w[h]) continue;
                                if (b > h) below = false;
                                if (b < h) above = false;
                            }
                            if (!below && !above) continue;
                            Monomial m(ring->total_vars());
                            if (below) {
                                m.exponent(ring->y_index(b)) += 1;
                                for (int h = 1; h <= n; ++h)
                                    if (in_w[h]) m.exponent(ring->x_index(h)) += 1;
                            } else {
                                m.exponent(ring->x_index(b)) += 1;
                                for (int h = 1; h <= n; ++h)
                                    if (in_w[h]) m.exponent(ring->y_index(h)) += 1;
                            }
                            emit(Polynomial::monomial(ring, m, one), GBKind::TypeIV,
                                 {po->seq, pe->seq, tau});
                        }
                    }
                }
            }
        }
    }

    if (prune) {
        // p is a monomial multiple of q exactly when p == (lm(p)/lm(q)) * q;
        // equal elements cannot occur (emit deduplicates), so no mutual drops
        std::vector<GBElement> kept;
        for (size_t i = 0; i < out.size(); ++i) {
            bool multiple = false;
            for (size_t j = 0; j < out.size() && !multiple; ++j) {
                if (i == j) continue;
                const Monomial& mi = out[i].poly.leading_term().mono;
                const Monomial& mj = out[j].poly.leading_term().mono;
                if (!mj.divides(mi)) continue;
                if (out[i].poly == out[j].poly.times_monomial(mi / mj, one)) multiple = true;
            }
            if (!multiple) kept.push_back(out[i]);
        }
        out = std::move(kept);
    }
    return out;
}

struct GBCertificate {
    bool is_gb = false;              // all S-polynomials reduce to zero
    bool initial_squarefree = false; // all leading monomials squarefree
    bool reduced_match = false;      // reduced form equals the Buchberger oracle's
};

/// Certifies the combinatorial basis against the Buchberger oracle: the
/// emitted set must be a Groebner basis of Pi_G under the standard order,
/// its reduction must equal the oracle's reduced basis, and every leading
/// monomial must be squarefree. Requires characteristic != 2.
inline GBCertificate gb_certify(const Graph& g, const RingPtr& ring,
                                const Budget& budget = Budget{}) {
    if (ring->field().characteristic() == 2)
        throw std::invalid_argument("gb_certify: characteristic 2 not supported by the theorem");
    MonomialOrder ord = ring->default_order();
    auto elements = combinatorial_gb(g, ring);
    std::vector<Polynomial> set;
    for (const auto& e : elements) set.push_back(e.poly);

    GBCertificate cert;
    cert.is_gb = true;
    for (size_t i = 0; i < set.size() && cert.is_gb; ++i)
        for (size_t j = i + 1; j < set.size(); ++j) {
            if (set[i].leading_term(ord).mono.coprime(set[j].leading_term(ord).mono)) continue;
            if (!normal_form(s_polynomial(set[i], set[j], ord), set, ord).is_zero()) {
                cert.is_gb = false;
                break;
            }
        }

    cert.initial_squarefree = true;
    for (const auto& p : set)
        if (!p.leading_term(ord).mono.is_squarefree()) {
            cert.initial_squarefree = false;
            break;
        }

    ReducedGB ours = detail::reduce_groebner(set, ord);
    ReducedGB oracle = buchberger(build_PiG(g, ring), ord, budget);
    cert.reduced_match = ours == oracle;
    return cert;
}

struct Char2Witness {
    Monomial multiplier;  // a monomial in the y-variables
    int vertex = 0;
};

/// Search for a non-radicality witness of L_G over F_2 on a non-bipartite
/// graph: a y-monomial m and vertex i with m*(x_i+y_i)^2 in L_G but
/// m*(x_i+y_i) not in L_G. Returns nothing when no witness exists within
/// the degree bound (default 2(n-1)); that outcome is inconclusive.
inline std::optional<Char2Witness> char2_nonradical_witness(const Graph& g, const RingPtr& ring,
                                                            int degree_bound = -1,
                                                            const Budget& budget = Budget{}) {
    if (ring->field().characteristic() != 2)
        throw std::invalid_argument("char2_nonradical_witness: field must be F_2");
    if (ring->vertex_count() != g.vertex_count())
        throw std::invalid_argument("char2_nonradical_witness: ring does not match graph");
    auto comps = components(g);
    if (std::all_of(comps.begin(), comps.end(),
                    [](const ComponentData& c) { return c.is_bipartite; }))
        throw std::invalid_argument("char2_nonradical_witness: graph is bipartite");
    int n = g.vertex_count();
    if (degree_bound < 0) degree_bound = 2 * (n - 1);

    ReducedGB gb = buchberger(build_LG(g, ring), ring->default_order(), budget);

    // y-monomials by increasing total degree, lex within a degree
    std::vector<Monomial> level{Monomial(ring->total_vars())};
    for (int deg = 0; deg <= degree_bound; ++deg) {
        for (const auto& m : level) {
            for (int i = 1; i <= n; ++i) {
                Polynomial s = Polynomial::variable(ring, ring->x_index(i)) +
                               Polynomial::variable(ring, ring->y_index(i));
                Polynomial base = Polynomial::monomial(ring, m, FieldElem::one(ring->field()));
                if (contains_poly(gb, base * s * s) && !contains_poly(gb, base * s))
                    return Char2Witness{m, i};
            }
        }
        std::vector<Monomial> next;
        for (const auto& m : level) {
            // extend by one y-variable, nondecreasing index to avoid repeats
            int start = 1;
            for (int v = n; v >= 1; --v)
                if (m.exponent(ring->y_index(v)) > 0) {
                    start = v;
                    break;
                }
            for (int v = start; v <= n; ++v) {
                Monomial m2 = m;
                m2.exponent(ring->y_index(v)) += 1;
                next.push_back(std::move(m2));
            }
        }
        level = std::move(next);
    }
    return std::nullopt;
}

}  // namespace lss

#endif
