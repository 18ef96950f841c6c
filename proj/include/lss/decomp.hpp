#ifndef LSS_DECOMP_HPP
#define LSS_DECOMP_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lss/builders.hpp"
#include "lss/graph.hpp"
#include "lss/groebner.hpp"

namespace lss {

/// Combinatorial containment criterion for Q_S(G) subseteq Q_W(G):
/// S subseteq W, and every non-singleton component H of G \ S maps into a
/// single component of G \ W of the same bipartiteness class.
inline bool qs_contains(const Graph& g, const std::vector<int>& S, const std::vector<int>& W) {
    std::vector<int> s_sorted = S, w_sorted = W;
    std::sort(s_sorted.begin(), s_sorted.end());
    std::sort(w_sorted.begin(), w_sorted.end());
    if (!std::includes(w_sorted.begin(), w_sorted.end(), s_sorted.begin(), s_sorted.end()))
        return false;

    auto h_comps = components(g, s_sorted);
    auto g_comps = components(g, w_sorted);
    std::vector<int> comp_of(g.vertex_count() + 1, -1);
    for (size_t j = 0; j < g_comps.size(); ++j)
        for (int v : g_comps[j].vertices) comp_of[v] = static_cast<int>(j);

    for (const auto& h : h_comps) {
        if (h.size() <= 1) continue;
        int target = -1;
        bool ok = true;
        for (int v : h.vertices) {
            if (std::binary_search(w_sorted.begin(), w_sorted.end(), v)) continue;
            if (target == -1)
                target = comp_of[v];
            else if (comp_of[v] != target) {
                ok = false;
                break;
            }
        }
        if (!ok) return false;
        if (target != -1 && g_comps[target].is_bipartite != h.is_bipartite) return false;
    }
    return true;
}

/// Minimal primes of L_G under sqrt(-1) not in K: Q_S for S in M(G).
/// The combinatorial output itself is field-free.
inline std::vector<PrimeComponent> minimal_primes(const Graph& g) {
    std::vector<PrimeComponent> out;
    for (const auto& S : enumerate_M(g)) {
        PrimeComponent pc;
        pc.S = S;
        pc.n = g.vertex_count();
        pc.comps = components(g, S);
        out.push_back(std::move(pc));
    }
    return out;
}

/// Classification verdicts and the hypotheses they are theorems under.
struct DecompositionReport {
    int n = 0;
    int b = 0;  // bipartite connected components of G
    FieldSpec field = FieldSpec::rationals();
    /// true when the field has a square root of -1, which voids the
    /// minimal-prime / dimension / unmixedness / primeness verdicts
    bool hypothesis_violated = false;
    std::string hypothesis = "sqrt(-1) not in K";

    std::vector<PrimeComponent> minimal_primes;
    int dim = 0;
    bool unmixed = false;
    bool prime = false;

    bool radical = false;
    std::string radical_reason;

    std::optional<bool> verified;  // filled by verify_decomposition when requested
};

/// Pure graph-side classification; the symbolic oracle is not consulted.
inline DecompositionReport classify(const Graph& g, const FieldSpec& field) {
    DecompositionReport r;
    r.n = g.vertex_count();
    r.field = field;
    r.b = bipartite_count(components(g));
    r.hypothesis_violated = field.has_sqrt_minus_one();

    r.minimal_primes = minimal_primes(g);
    int max_dim = 0;
    bool all_equal = true;
    int first_height = -1;
    for (const auto& pc : r.minimal_primes) {
        int h = pc.height();
        max_dim = std::max(max_dim, r.n - static_cast<int>(pc.S.size()) + pc.bipartite_components());
        if (first_height == -1)
            first_height = h;
        else if (h != first_height)
            all_equal = false;
    }
    r.dim = max_dim;
    r.unmixed = all_equal;

    bool matching = connectivity_class(g).is_matching_union;
    r.prime = matching;

    uint64_t p = field.characteristic();
    bool bip = r.b == static_cast<int>(components(g).size());
    if (p != 2) {
        r.radical = true;
        r.radical_reason = "char(K) != 2";
    } else if (bip) {
        r.radical = true;
        r.radical_reason = "char(K) = 2 and G bipartite";
    } else {
        r.radical = false;
        r.radical_reason = "char(K) = 2 and G non-bipartite";
    }
    return r;
}

/// Oracle check of the primary decomposition: the iterated elimination
/// intersection of Q_S over S in M(G) must equal L_G as reduced bases.
/// Intersection order is fixed (S by size, then lex) for reproducibility.
inline bool verify_decomposition(const Graph& g, const RingPtr& ring,
                                 const Budget& budget = Budget{}) {
    if (ring->field().has_sqrt_minus_one() || ring->field().characteristic() == 2)
        throw std::invalid_argument(
            "verify_decomposition: field must have sqrt(-1) not in K (e.g. Q or F_p, p = 3 mod 4)");
    auto M = enumerate_M(g);  // already sorted by size then lex
    std::optional<Ideal> inter;
    for (const auto& S : M) {
        Ideal qs = build_QS(g, S, ring).first;
        if (!inter)
            inter = std::move(qs);
        else
            inter = intersect(*inter, qs, budget);
    }
    Ideal lg = build_LG(g, ring);
    if (!inter) inter = Ideal::zero(ring);
    return equal_ideals(*inter, lg, budget);
}

}  // namespace lss

#endif
