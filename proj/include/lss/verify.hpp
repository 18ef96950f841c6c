#ifndef LSS_VERIFY_HPP
#define LSS_VERIFY_HPP

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "lss/decomp.hpp"
#include "lss/gbasis.hpp"
#include "lss/monomial_ideal.hpp"
#include "lss/variety.hpp"

namespace lss::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

namespace detail {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline std::vector<std::vector<int>> all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> S;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) S.push_back(v);
        out.push_back(std::move(S));
    }
    return out;
}

inline Graph paw_graph() {
    Graph g(4);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    return g;
}

}  // namespace detail

/// Quadratic Groebner bases of the building-block ideals: every S-polynomial
/// of the standard generators reduces to zero, and Buchberger returns the
/// generators themselves (no growth beyond inter-reduction).
inline CriterionResult quadratic_gb(int n_max = 5, const Budget& budget = Budget{}) {
    detail::Timer timer;
    CriterionResult r;
    r.id = 1;
    r.name = "quadratic Groebner bases of I_Kn and I_Kmn (n=2.." +
                             std::to_string(n_max) + ", Q)";
    int checked = 0;
    bool ok = true;
    std::ostringstream why;
    for (int n = 2; n <= n_max && ok; ++n) {
        RingPtr ring = make_ring(n, FieldSpec::rationals());
        MonomialOrder ord = ring->default_order();
        std::vector<Ideal> ideals{build_IKn(ring, n)};
        for (int m = 1; m < n; ++m) ideals.push_back(build_IKmn(ring, m, n));
        for (const Ideal& ideal : ideals) {
            for (size_t i = 0; i < ideal.gens.size() && ok; ++i)
                for (size_t j = i + 1; j < ideal.gens.size(); ++j) {
                    Polynomial s = s_polynomial(ideal.gens[i], ideal.gens[j], ord);
                    if (!normal_form(s, ideal.gens, ord).is_zero()) {
                        ok = false;
                        why << "S-poly (" << i << "," << j << ") fails at n=" << n;
                        break;
                    }
                }
            ReducedGB gb = buchberger(ideal, ord, budget);
            if (gb.basis.size() != ideal.gens.size()) {
                ok = false;
                why << "basis growth at n=" << n << ": " << ideal.gens.size() << " -> "
                    << gb.basis.size();
            }
            for (const auto& g : ideal.gens)
                if (ok && !contains_poly(gb, g)) {
                    ok = false;
                    why << "generator escaped its own basis at n=" << n;
                }
            ++checked;
        }
    }
    r.seconds = timer.seconds();
    bool in_time = r.seconds < 60.0;
    r.pass = ok && in_time;
    std::ostringstream d;
    d << checked << " ideals";
    if (!ok) d << "; " << why.str();
    if (!in_time) d << "; exceeded 60 s";
    r.detail = d.str();
    return r;
}

/// Heights of the initial ideals: n for I_Kn, n-1 for I_Kmn.
inline CriterionResult heights(int n_max = 5, const Budget& budget = Budget{}) {
    detail::Timer timer;
    CriterionResult r;
    r.id = 2;
    r.name = "initial-ideal heights (n=3.." + std::to_string(n_max) + ")";
    bool ok = true;
    std::ostringstream why;
    for (int n = 3; n <= n_max; ++n) {
        RingPtr ring = make_ring(n, FieldSpec::rationals());
        int h = monomial_ideal_stats(buchberger(build_IKn(ring, n), budget).leading_monomials()).height;
        if (h != n) {
            ok = false;
            why << "ini(I_K" << n << ") height " << h << " != " << n << "; ";
        }
        for (int m = 1; m < n; ++m) {
            int hm = monomial_ideal_stats(buchberger(build_IKmn(ring, m, n), budget).leading_monomials())
                         .height;
            if (hm != n - 1) {
                ok = false;
                why << "ini(I_K" << m << "," << n - m << ") height " << hm << " != " << n - 1
                    << "; ";
            }
        }
    }
    r.seconds = timer.seconds();
    r.pass = ok;
    r.detail = ok ? "all heights match" : why.str();
    return r;
}

/// Variables are non-zero divisors: (I : v) = I for every variable.
inline CriterionResult nonzerodivisors(const Budget& budget = Budget{}) {
    detail::Timer timer;
    CriterionResult r;
    r.id = 3;
    r.name = "variables are non-zero divisors modulo I_K3, I_K4, I_K12, I_K22 (Q)";
    bool ok = true;
    std::ostringstream why;
    struct Case {
        std::string name;
        Ideal ideal;
    };
    RingPtr r3 = make_ring(3, FieldSpec::rationals());
    RingPtr r4 = make_ring(4, FieldSpec::rationals());
    std::vector<Case> cases;
    cases.push_back({"I_K3", build_IKn(r3, 3)});
    cases.push_back({"I_K4", build_IKn(r4, 4)});
    cases.push_back({"I_K{1,2}", build_IKmn(r3, 1, 3)});
    cases.push_back({"I_K{2,2}", build_IKmn(r4, 2, 4)});
    int checked = 0;
    for (const auto& c : cases) {
        for (size_t v = 0; v < c.ideal.ring->total_vars(); ++v) {
            Ideal quot = quotient_by(c.ideal, Polynomial::variable(c.ideal.ring, v), budget);
            if (!equal_ideals(quot, c.ideal, budget)) {
                ok = false;
                why << "(" << c.name << " : " << c.ideal.ring->var_name(v) << ") != " << c.name
                    << "; ";
            }
            ++checked;
        }
    }
    r.seconds = timer.seconds();
    r.pass = ok;
    std::ostringstream d;
    d << checked << " quotients";
    if (!ok) d << "; " << why.str();
    r.detail = d.str();
    return r;
}

/// Field trichotomy for I_K3: over F_5 it is the intersection of the two
/// linear primes; over F_2 it is primary with radical (x_i + y_i).
inline CriterionResult ikn_trichotomy(const Budget& budget = Budget{}) {
    detail::Timer timer;
    CriterionResult r;
    r.id = 4;
    r.name = "I_K3 over F5 splits into linear primes; F2 radical membership";
    bool ok = true;
    std::ostringstream why;

    RingPtr f5 = make_ring(3, FieldSpec::prime(5));
    FieldElem c = FieldElem::of(f5->field(), f5->field().sqrt_minus_one());
    Ideal p1{f5, {}}, p2{f5, {}};
    for (int i = 1; i <= 3; ++i) {
        Polynomial x = Polynomial::variable(f5, f5->x_index(i));
        Polynomial y = Polynomial::variable(f5, f5->y_index(i));
        p1.gens.push_back(x + y.scaled(c));
        p2.gens.push_back(x - y.scaled(c));
    }
    if (!equal_ideals(intersect(p1, p2, budget), build_IKn(f5, 3), budget)) {
        ok = false;
        why << "P1 cap P2 != I_K3 over F5; ";
    }

    RingPtr f2 = make_ring(3, FieldSpec::prime(2));
    Ideal ik3 = build_IKn(f2, 3);
    Ideal linear{f2, {}};
    for (int i = 1; i <= 3; ++i)
        linear.gens.push_back(Polynomial::variable(f2, f2->x_index(i)) +
                              Polynomial::variable(f2, f2->y_index(i)));
    if (!contains_ideal(linear, ik3, budget)) {
        ok = false;
        why << "I_K3 not inside (x_i+y_i) over F2; ";
    }
    for (const auto& gen : linear.gens)
        if (!radical_member(ik3, gen, budget)) {
            ok = false;
            why << "x_i+y_i not in rad(I_K3) over F2; ";
        }

    r.seconds = timer.seconds();
    r.pass = ok;
    r.detail = ok ? "both halves hold" : why.str();
    return r;
}

/// Combinatorial Groebner basis certification across all small graphs and
/// the named presets, over Q and F_3.
inline CriterionResult groebner_radical(int n_max = 4, const Budget& budget = Budget{}) {
    detail::Timer timer;
    CriterionResult r;
    r.id = 5;
    r.name = "combinatorial basis certifies on all graphs (n<=" +
                             std::to_string(n_max) + ") and presets, Q and F3";
    bool ok = true;
    int count = 0;
    std::ostringstream why;
    std::vector<std::pair<std::string, Graph>> instances;
    for (int n = 1; n <= n_max; ++n)
        for (const Graph& g : all_graphs(n))
            instances.push_back({"n=" + std::to_string(n), g});
    instances.push_back({"cycle:5", Graph::preset("cycle:5")});
    instances.push_back({"path:5", Graph::preset("path:5")});
    instances.push_back({"complete:4", Graph::preset("complete:4")});
    instances.push_back({"butterfly-complement", Graph::preset("butterfly").complement()});

    for (const FieldSpec& field : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
        for (const auto& [label, g] : instances) {
            RingPtr ring = make_ring(g.vertex_count(), field);
            GBCertificate cert = gb_certify(g, ring, budget);
            ++count;
            if (!cert.is_gb || !cert.initial_squarefree || !cert.reduced_match) {
                ok = false;
                why << label << " over " << field.to_string() << ": is_gb=" << cert.is_gb
                    << " sqfree=" << cert.initial_squarefree << " match=" << cert.reduced_match
                    << "; ";
            }
        }
    }
    r.seconds = timer.seconds();
    bool in_time = r.seconds < 600.0;
    r.pass = ok && in_time;
    std::ostringstream d;
    d << count << " certifications";
    if (!ok) d << "; " << why.str();
    if (!in_time) d << "; exceeded 600 s";
    r.detail = d.str();
    return r;
}

/// phi(L_G) and Pi_G have identical reduced bases over F_5.
inline CriterionResult phi_equivalence(int n_max = 4, const Budget& budget = Budget{}) {
    detail::Timer timer;
    CriterionResult r;
    r.id = 6;
    r.name = "phi(L_G) = Pi_G as reduced bases over F5 (n<=" +
                             std::to_string(n_max) + ")";
    bool ok = true;
    int count = 0;
    for (int n = 1; n <= n_max && ok; ++n) {
        FieldSpec f5 = FieldSpec::prime(5);
        RingPtr ring = make_ring(n, f5);
        FieldElem c = FieldElem::of(f5, f5.sqrt_minus_one());
        for (const Graph& g : all_graphs(n)) {
            Ideal image = phi_transform(build_LG(g, ring), c);
            if (buchberger(image, budget) != buchberger(build_PiG(g, ring), budget)) {
                ok = false;
                break;
            }
            ++count;
        }
    }
    r.seconds = timer.seconds();
    r.pass = ok;
    r.detail = std::to_string(count) + " graphs compared";
    return r;
}

/// Characteristic-2 dichotomy: witnesses for C_3 and C_5, rejection for C_4.
inline CriterionResult char2_dichotomy(const Budget& budget = Budget{}) {
    detail::Timer timer;
    CriterionResult r;
    r.id = 7;
    r.name = "char-2 non-radical witnesses for C3, C5; C4 rejected";
    bool ok = true;
    std::ostringstream why;
    for (int n : {3, 5}) {
        RingPtr ring = make_ring(n, FieldSpec::prime(2));
        auto w = char2_nonradical_witness(Graph::preset("cycle:" + std::to_string(n)), ring, -1,
                                          budget);
        if (!w.has_value()) {
            ok = false;
            why << "no witness for C" << n << " within the bound; ";
        }
    }
    RingPtr r4 = make_ring(4, FieldSpec::prime(2));
    bool rejected = false;
    try {
        char2_nonradical_witness(Graph::preset("cycle:4"), r4, -1, budget);
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    if (!rejected) {
        ok = false;
        why << "C4 not rejected; ";
    }
    r.seconds = timer.seconds();
    r.pass = ok;
    r.detail = ok ? "witnesses found, bipartite case rejected" : why.str();
    return r;
}

/// Oracle-checked primary decomposition on the named small graphs.
inline CriterionResult decomposition(const Budget& budget = Budget{}) {
    detail::Timer timer;
    CriterionResult r;
    r.id = 8;
    r.name = "L_G equals the intersection of its Q_S over M(G) (Q)";
    bool ok = true;
    std::ostringstream why;
    std::vector<std::pair<std::string, Graph>> cases = {
        {"K2", Graph::preset("complete:2")},     {"P3", Graph::preset("path:3")},
        {"C3", Graph::preset("cycle:3")},        {"C4", Graph::preset("cycle:4")},
        {"paw", detail::paw_graph()},            {"K13", Graph::preset("complete_bipartite:1,3")},
    };
    for (const auto& [name, g] : cases) {
        RingPtr ring = make_ring(g.vertex_count(), FieldSpec::rationals());
        if (!verify_decomposition(g, ring, budget)) {
            ok = false;
            why << name << " fails; ";
        }
    }
    r.seconds = timer.seconds();
    r.pass = ok;
    r.detail = ok ? std::to_string(cases.size()) + " graphs verified" : why.str();
    return r;
}

namespace detail {

/// Oracle containment matrix: contains[a][b] says Q_{S_a} subseteq Q_{S_b},
/// decided by reducing generators against reduced bases.
inline std::vector<std::vector<bool>> qs_containment_matrix(const Graph& g, const RingPtr& ring,
                                                            const Budget& budget) {
    auto sets = all_subsets(g.vertex_count());
    std::vector<Ideal> ideals;
    std::vector<ReducedGB> gbs;
    for (const auto& S : sets) {
        ideals.push_back(build_QS(g, S, ring).first);
        gbs.push_back(buchberger(ideals.back(), budget));
    }
    std::vector<std::vector<bool>> contains(sets.size(), std::vector<bool>(sets.size(), false));
    for (size_t a = 0; a < sets.size(); ++a)
        for (size_t b = 0; b < sets.size(); ++b) {
            bool inside = true;
            for (const auto& gen : ideals[a].gens)
                if (!contains_poly(gbs[b], gen)) {
                    inside = false;
                    break;
                }
            contains[a][b] = inside;
        }
    return contains;
}

}  // namespace detail

/// Figure 3 memberships plus cross-validation of M(G) against oracle
/// containment-minimality on all small graphs.
inline CriterionResult minimal_primes_check(int n_max = 4, const Budget& budget = Budget{}) {
    detail::Timer timer;
    CriterionResult r;
    r.id = 9;
    r.name = "M(G) = containment-minimal Q_S (fig3 facts; oracle sweep n<=" +
                             std::to_string(n_max) + ")";
    bool ok = true;
    std::ostringstream why;

    Graph fig3 = Graph::preset("fig3");
    auto M = enumerate_M(fig3);
    auto has = [&](std::vector<int> s) { return std::find(M.begin(), M.end(), s) != M.end(); };
    if (!has({4}) || !has({4, 5}) || !has({2, 6}) || has({3, 7})) {
        ok = false;
        why << "fig3 membership facts fail; ";
    }

    for (int n = 1; n <= n_max && ok; ++n) {
        for (const Graph& g : all_graphs(n)) {
            RingPtr ring = make_ring(n, FieldSpec::rationals());
            auto sets = detail::all_subsets(n);
            auto contains = detail::qs_containment_matrix(g, ring, budget);
            auto Mg = enumerate_M(g);
            for (size_t s = 0; s < sets.size(); ++s) {
                bool strictly_below = false;
                for (size_t w = 0; w < sets.size(); ++w)
                    if (w != s && contains[w][s] && !contains[s][w]) strictly_below = true;
                bool in_m = std::find(Mg.begin(), Mg.end(), sets[s]) != Mg.end();
                if (in_m == strictly_below) {
                    ok = false;
                    why << "mismatch at n=" << n << "; ";
                    break;
                }
            }
            if (!ok) break;
        }
    }
    r.seconds = timer.seconds();
    r.pass = ok;
    r.detail = ok ? "fig3 facts and oracle sweep agree" : why.str();
    return r;
}

/// The combinatorial containment criterion agrees with oracle containment
/// on every (S, W) pair of every small graph.
inline CriterionResult containment_criterion(int n_max = 4, const Budget& budget = Budget{}) {
    detail::Timer timer;
    CriterionResult r;
    r.id = 10;
    r.name = "qs_contains matches oracle containment on all pairs (n<=" +
                              std::to_string(n_max) + ", Q)";
    bool ok = true;
    long long pairs = 0;
    std::ostringstream why;
    for (int n = 1; n <= n_max && ok; ++n) {
        for (const Graph& g : all_graphs(n)) {
            RingPtr ring = make_ring(n, FieldSpec::rationals());
            auto sets = detail::all_subsets(n);
            auto contains = detail::qs_containment_matrix(g, ring, budget);
            for (size_t a = 0; a < sets.size() && ok; ++a)
                for (size_t b = 0; b < sets.size(); ++b) {
                    ++pairs;
                    if (qs_contains(g, sets[a], sets[b]) != contains[a][b]) {
                        ok = false;
                        why << "disagreement at n=" << n << " S={";
                        for (int v : sets[a]) why << v << ",";
                        why << "} W={";
                        for (int v : sets[b]) why << v << ",";
                        why << "}; ";
                        break;
                    }
                }
            if (!ok) break;
        }
    }
    r.seconds = timer.seconds();
    r.pass = ok;
    std::ostringstream d;
    d << pairs << " pairs compared";
    if (!ok) d << "; " << why.str();
    r.detail = d.str();
    return r;
}

/// Dimension worked examples and the lower bound dim >= n + b.
inline CriterionResult dimension(int n_max = 6) {
    detail::Timer timer;
    CriterionResult r;
    r.id = 11;
    r.name = "dimension: butterfly 6, K22 5 (not unmixed), dim >= n+b (n<=" +
                              std::to_string(n_max) + ")";
    bool ok = true;
    std::ostringstream why;
    auto butterfly = classify(Graph::preset("butterfly"), FieldSpec::rationals());
    if (butterfly.dim != 6 || butterfly.n != 5 || butterfly.b != 0) {
        ok = false;
        why << "butterfly: dim " << butterfly.dim << " n " << butterfly.n << " b " << butterfly.b
            << "; ";
    }
    auto k22 = classify(Graph::preset("complete_bipartite:2,2"), FieldSpec::rationals());
    if (k22.dim != 5 || k22.unmixed) {
        ok = false;
        why << "K22: dim " << k22.dim << " unmixed " << k22.unmixed << "; ";
    }
    for (int n = 1; n <= n_max && ok; ++n)
        for (const Graph& g : all_graphs(n)) {
            auto rep = classify(g, FieldSpec::rationals());
            if (rep.dim < rep.n + rep.b) {
                ok = false;
                why << "dim < n+b at n=" << n << "; ";
                break;
            }
        }
    r.seconds = timer.seconds();
    r.pass = ok;
    r.detail = ok ? "examples and bound hold" : why.str();
    return r;
}

/// Unmixedness tables for cycles and complete graphs.
inline CriterionResult unmixedness_tables() {
    detail::Timer timer;
    CriterionResult r;
    r.id = 12;
    r.name = "unmixedness: C_n iff n odd (3..7); K_n iff n in {2,3} (2..6)";
    bool ok = true;
    std::ostringstream why;
    for (int n = 3; n <= 7; ++n) {
        bool u = classify(Graph::preset("cycle:" + std::to_string(n)), FieldSpec::rationals())
                     .unmixed;
        if (u != (n % 2 == 1)) {
            ok = false;
            why << "C" << n << " unmixed=" << u << "; ";
        }
    }
    for (int n = 2; n <= 6; ++n) {
        bool u = classify(Graph::preset("complete:" + std::to_string(n)), FieldSpec::rationals())
                     .unmixed;
        if (u != (n == 2 || n == 3)) {
            ok = false;
            why << "K" << n << " unmixed=" << u << "; ";
        }
    }
    r.seconds = timer.seconds();
    r.pass = ok;
    r.detail = ok ? "both tables match" : why.str();
    return r;
}

/// Primeness: M(G) = {emptyset}, matching-union shape, and the complement
/// connectivity characterization coincide on all small graphs.
inline CriterionResult primeness(int n_max = 5) {
    detail::Timer timer;
    CriterionResult r;
    r.id = 13;
    r.name = "primeness: three predicates agree on all graphs (n<=" +
                              std::to_string(n_max) + ")";
    bool ok = true;
    long long graphs = 0;
    for (int n = 1; n <= n_max && ok; ++n)
        for (const Graph& g : all_graphs(n)) {
            ++graphs;
            bool single = enumerate_M(g).size() == 1;
            auto cc = connectivity_class(g);
            if (single != cc.is_matching_union ||
                single != cc.complement_is_n_minus_2_connected) {
                ok = false;
                break;
            }
        }
    r.seconds = timer.seconds();
    r.pass = ok;
    r.detail = std::to_string(graphs) + " graphs checked";
    return r;
}

/// Variety sampling: every sampled point of every V_S vanishes on all
/// generators, with the exact orthogonal-lines block structure.
inline CriterionResult variety(int n_max = 5, int seeds = 20) {
    detail::Timer timer;
    CriterionResult r;
    r.id = 14;
    r.name = "variety samples vanish (n<=" + std::to_string(n_max) + ", " +
                              std::to_string(seeds) + " seeds)";
    bool ok = true;
    long long samples = 0;
    for (int n = 1; n <= n_max && ok; ++n)
        for (const Graph& g : all_graphs(n)) {
            for (unsigned mask = 0; mask < (1u << n) && ok; ++mask) {
                std::vector<int> S;
                for (int v = 1; v <= n; ++v)
                    if (mask & (1u << (v - 1))) S.push_back(v);
                for (int seed = 1; seed <= seeds; ++seed) {
                    RepresentationSample sample = sample_VS(g, S, static_cast<uint64_t>(seed));
                    ++samples;
                    if (!check_vanishing(sample, g) || !orthogonal_lines_ok(sample)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) break;
        }
    r.seconds = timer.seconds();
    r.pass = ok;
    r.detail = std::to_string(samples) + " samples";
    return r;
}

struct SuiteOptions {
    int n_max_ik = 5;       // criteria 1-2
    int n_max_gb = 4;       // criteria 5-6
    int n_max_decomp = 4;   // criteria 9-10
    int n_max_dim = 6;      // criterion 11
    int n_max_prime = 5;    // criterion 13
    int n_max_variety = 5;  // criterion 14
    int seeds = 20;
    Budget budget;
};

/// Suites as exposed by the CLI: ikn = 1-4, gb = 5-6, char2 = 7,
/// decomp = 8-13, variety = 14, all = everything.
inline std::vector<CriterionResult> run_suite(const std::string& suite,
                                              const SuiteOptions& opt = {}) {
    std::vector<CriterionResult> out;
    bool all = suite == "all";
    if (all || suite == "ikn") {
        out.push_back(quadratic_gb(opt.n_max_ik, opt.budget));
        out.push_back(heights(opt.n_max_ik, opt.budget));
        out.push_back(nonzerodivisors(opt.budget));
        out.push_back(ikn_trichotomy(opt.budget));
    }
    if (all || suite == "gb") {
        out.push_back(groebner_radical(opt.n_max_gb, opt.budget));
        out.push_back(phi_equivalence(opt.n_max_gb, opt.budget));
    }
    if (all || suite == "char2") {
        out.push_back(char2_dichotomy(opt.budget));
    }
    if (all || suite == "decomp") {
        out.push_back(decomposition(opt.budget));
        out.push_back(minimal_primes_check(opt.n_max_decomp, opt.budget));
        out.push_back(containment_criterion(opt.n_max_decomp, opt.budget));
        out.push_back(dimension(opt.n_max_dim));
        out.push_back(unmixedness_tables());
        out.push_back(primeness(opt.n_max_prime));
    }
    if (all || suite == "variety") {
        out.push_back(variety(opt.n_max_variety, opt.seeds));
    }
    if (out.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

}  // namespace lss::verify

#endif
