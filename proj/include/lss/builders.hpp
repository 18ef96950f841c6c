#ifndef LSS_BUILDERS_HPP
#define LSS_BUILDERS_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "lss/graph.hpp"
#include "lss/groebner.hpp"
#include "lss/polynomial.hpp"

namespace lss {

namespace gens {

/// f_ij = x_i x_j + y_i y_j
inline Polynomial f(const RingPtr& r, int i, int j) {
    return Polynomial::variable(r, r->x_index(i)) * Polynomial::variable(r, r->x_index(j)) +
           Polynomial::variable(r, r->y_index(i)) * Polynomial::variable(r, r->y_index(j));
}

/// g_ij = x_i y_j - x_j y_i
inline Polynomial g(const RingPtr& r, int i, int j) {
    return Polynomial::variable(r, r->x_index(i)) * Polynomial::variable(r, r->y_index(j)) -
           Polynomial::variable(r, r->x_index(j)) * Polynomial::variable(r, r->y_index(i));
}

/// h_i = x_i^2 + y_i^2
inline Polynomial h(const RingPtr& r, int i) {
    return Polynomial::variable(r, r->x_index(i)) * Polynomial::variable(r, r->x_index(i)) +
           Polynomial::variable(r, r->y_index(i)) * Polynomial::variable(r, r->y_index(i));
}

/// b_ij = x_i y_j + x_j y_i  (the 2-permanent)
inline Polynomial b(const RingPtr& r, int i, int j) {
    return Polynomial::variable(r, r->x_index(i)) * Polynomial::variable(r, r->y_index(j)) +
           Polynomial::variable(r, r->x_index(j)) * Polynomial::variable(r, r->y_index(i));
}

}  // namespace gens

/// L_G: one generator x_i x_j + y_i y_j per edge (d = 2).
inline Ideal build_LG(const Graph& g, const RingPtr& ring) {
    if (ring->coord_blocks() != 2 || ring->vertex_count() != g.vertex_count())
        throw std::invalid_argument("build_LG: ring does not match graph");
    Ideal ideal{ring, {}};
    for (const auto& [i, j] : g.edges()) ideal.gens.push_back(gens::f(ring, i, j));
    return ideal;
}

/// General-d variant: one generator sum_k x_{ik} x_{jk} per edge. Plumbing
/// only; no theorem beyond d = 2 is claimed anywhere downstream.
inline Ideal build_LG_general(const Graph& g, const RingPtr& ring) {
    if (ring->vertex_count() != g.vertex_count())
        throw std::invalid_argument("build_LG_general: ring does not match graph");
    Ideal ideal{ring, {}};
    for (const auto& [i, j] : g.edges()) {
        Polynomial p = Polynomial::zero(ring);
        for (int k = 0; k < ring->coord_blocks(); ++k)
            p = p + Polynomial::variable(ring, ring->var_index(k, i)) *
                        Polynomial::variable(ring, ring->var_index(k, j));
        ideal.gens.push_back(p);
    }
    return ideal;
}

/// Permanental ideal of the input graph's edge set: x_i y_j + x_j y_i per edge.
/// Callers pass G or its complement depending on which convention they need.
inline Ideal build_PiG(const Graph& g, const RingPtr& ring) {
    if (ring->coord_blocks() != 2 || ring->vertex_count() != g.vertex_count())
        throw std::invalid_argument("build_PiG: ring does not match graph");
    Ideal ideal{ring, {}};
    for (const auto& [i, j] : g.edges()) ideal.gens.push_back(gens::b(ring, i, j));
    return ideal;
}

/// I_{K_n} on an embedded vertex set: f_ij and g_ij for all pairs, h_i for
/// every vertex when |V| > 2. Singletons give the zero ideal, pairs a single
/// binomial.
inline Ideal build_IKn(const RingPtr& ring, const std::vector<int>& vertices) {
    Ideal ideal{ring, {}};
    size_t n = vertices.size();
    if (n <= 1) return ideal;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            ideal.gens.push_back(gens::f(ring, vertices[a], vertices[b]));
    if (n == 2) return ideal;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            ideal.gens.push_back(gens::g(ring, vertices[a], vertices[b]));
    for (int v : vertices) ideal.gens.push_back(gens::h(ring, v));
    return ideal;
}

inline Ideal build_IKn(const RingPtr& ring, int n) {
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i + 1;
    return build_IKn(ring, verts);
}

/// I_{K_{m,n-m}} with respect to an embedded bipartition: f_ij across blocks,
/// g_ij inside each block.
inline Ideal build_IKmn(const RingPtr& ring, const std::vector<int>& block_a,
                        const std::vector<int>& block_b) {
    if (block_a.empty() || block_b.empty())
        throw std::invalid_argument("build_IKmn: both blocks must be nonempty");
    Ideal ideal{ring, {}};
    for (int i : block_a)
        for (int j : block_b) ideal.gens.push_back(gens::f(ring, i, j));
    auto within = [&](const std::vector<int>& block) {
        for (size_t a = 0; a < block.size(); ++a)
            for (size_t b = a + 1; b < block.size(); ++b) {
                int i = std::min(block[a], block[b]);
                int j = std::max(block[a], block[b]);
                ideal.gens.push_back(gens::g(ring, i, j));
            }
    };
    within(block_a);
    within(block_b);
    return ideal;
}

inline Ideal build_IKmn(const RingPtr& ring, int m, int n) {
    if (m < 1 || m >= n) throw std::invalid_argument("build_IKmn: need 1 <= m < n");
    std::vector<int> a, b;
    for (int i = 1; i <= m; ++i) a.push_back(i);
    for (int j = m + 1; j <= n; ++j) b.push_back(j);
    return build_IKmn(ring, a, b);
}

/// Combinatorial descriptor of Q_S(G): the deleted set plus the component
/// data of G minus S. height = |S| + n - b(S).
struct PrimeComponent {
    std::vector<int> S;
    std::vector<ComponentData> comps;
    int n = 0;

    int bipartite_components() const { return bipartite_count(comps); }
    int height() const {
        return static_cast<int>(S.size()) + n - bipartite_components();
    }
};

/// Q_S(G) = ({x_i, y_i}_{i in S}, I_{K~_1}, ..., I_{K~_c}): complete-graph
/// block ideals for non-bipartite components, complete-bipartite ones (with
/// the unique bipartition) for bipartite components. All generators live in
/// the ambient ring.
inline std::pair<Ideal, PrimeComponent> build_QS(const Graph& g, const std::vector<int>& S,
                                                 const RingPtr& ring) {
    if (ring->vertex_count() != g.vertex_count() || ring->coord_blocks() != 2)
        throw std::invalid_argument("build_QS: ring does not match graph");
    PrimeComponent pc;
    pc.S = S;
    std::sort(pc.S.begin(), pc.S.end());
    pc.n = g.vertex_count();
    pc.comps = components(g, S);

    Ideal ideal{ring, {}};
    for (int v : pc.S) {
        ideal.gens.push_back(Polynomial::variable(ring, ring->x_index(v)));
        ideal.gens.push_back(Polynomial::variable(ring, ring->y_index(v)));
    }
    for (const auto& comp : pc.comps) {
        if (comp.size() == 1) continue;
        Ideal block = comp.is_bipartite ? build_IKmn(ring, comp.blocks[0], comp.blocks[1])
                                        : build_IKn(ring, comp.vertices);
        for (auto& p : block.gens) ideal.gens.push_back(std::move(p));
    }
    return {std::move(ideal), std::move(pc)};
}

/// The change of variables x_i -> x_i - y_i, y_i -> c (x_i + y_i) with
/// c^2 = -1, applied to every generator. Maps L_G onto Pi_G up to units.
inline Ideal phi_transform(const Ideal& ideal, const FieldElem& c) {
    const RingPtr& ring = ideal.ring;
    const FieldSpec& field = ring->field();
    if (field.characteristic() == 2)
        throw std::invalid_argument("phi_transform: characteristic 2 not allowed");
    FieldElem minus_one = -FieldElem::one(field);
    if (c * c != minus_one)
        throw std::invalid_argument("phi_transform: c^2 != -1 in " + field.to_string());
    std::map<size_t, Polynomial> assignment;
    for (int v = 1; v <= ring->vertex_count(); ++v) {
        Polynomial x = Polynomial::variable(ring, ring->x_index(v));
        Polynomial y = Polynomial::variable(ring, ring->y_index(v));
        assignment.emplace(ring->x_index(v), x - y);
        assignment.emplace(ring->y_index(v), (x + y).scaled(c));
    }
    Ideal image{ring, {}};
    for (const auto& p : ideal.gens) image.gens.push_back(p.substitute(assignment));
    return image;
}

}  // namespace lss

#endif
