#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lss/builders.hpp"
#include "lss/graph.hpp"
#include "lss/groebner.hpp"

using namespace lss;

TEST_CASE("normal form basics") {
    RingPtr ring = make_ring(3, FieldSpec::rationals());
    MonomialOrder ord = ring->default_order();
    Polynomial b12 = gens::b(ring, 1, 2);
    CHECK(normal_form(b12, {b12}, ord).is_zero());

    // path 1-3-2: S(b_13, b_23) = x3*g_12 up to sign, so x3*g_12 lies in Pi
    Graph g(3);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    Ideal pi = build_PiG(g, ring);
    Polynomial x3g12 = Polynomial::parse(ring, "x1*x3*y2 - x2*x3*y1");
    ReducedGB gb = buchberger(pi, ord);
    CHECK(contains_poly(gb, x3g12));

    // I_{K_3} has no linear forms
    Ideal ik3 = build_IKn(ring, 3);
    ReducedGB gb3 = buchberger(ik3, ord);
    CHECK_FALSE(contains_poly(gb3, Polynomial::parse(ring, "x1")));
}

TEST_CASE("s-polynomials from the quadratic generators") {
    RingPtr ring = make_ring(3, FieldSpec::rationals());
    MonomialOrder ord = ring->default_order();
    // S(h_1, f_12) = -y1 * g_12
    Polynomial s = s_polynomial(gens::h(ring, 1), gens::f(ring, 1, 2), ord);
    CHECK(s == Polynomial::parse(ring, "-1*y1") * gens::g(ring, 1, 2));
    // complete bipartite with 1 <= i <= m < j < k: S(f_ij, f_ik) = -y_i g_jk
    Polynomial s2 = s_polynomial(gens::f(ring, 1, 2), gens::f(ring, 1, 3), ord);
    CHECK(s2 == Polynomial::parse(ring, "-1*y1") * gens::g(ring, 2, 3));
    // S(f, f) = 0
    CHECK(s_polynomial(gens::f(ring, 1, 2), gens::f(ring, 1, 2), ord).is_zero());
}

TEST_CASE("buchberger on I_{K_{1,1}} and I_{K_3}") {
    RingPtr r2 = make_ring(2, FieldSpec::rationals());
    ReducedGB gb11 = buchberger(build_IKmn(r2, 1, 2));
    REQUIRE(gb11.basis.size() == 1);
    CHECK(gb11.basis[0] == gens::f(r2, 1, 2));

    RingPtr r3 = make_ring(3, FieldSpec::rationals());
    ReducedGB gb3 = buchberger(build_IKn(r3, 3));
    // leading monomials are exactly {x_i x_j : i <= j} u {x_i y_j : i < j}
    std::vector<Monomial> expect;
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) {
            Monomial m(r3->total_vars());
            m.exponent(r3->x_index(i)) += 1;
            m.exponent(r3->x_index(j)) += 1;
            expect.push_back(m);
        }
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            Monomial m(r3->total_vars());
            m.exponent(r3->x_index(i)) += 1;
            m.exponent(r3->y_index(j)) += 1;
            expect.push_back(m);
        }
    std::vector<Monomial> got = gb3.leading_monomials();
    CHECK(got.size() == expect.size());
    for (const auto& m : expect)
        CHECK(std::find(got.begin(), got.end(), m) != got.end());
}

TEST_CASE("quadratic generators already form the reduced basis (n <= 4)") {
    for (int n = 2; n <= 4; ++n) {
        RingPtr ring = make_ring(n, FieldSpec::rationals());
        MonomialOrder ord = ring->default_order();
        Ideal ikn = build_IKn(ring, n);
        for (size_t i = 0; i < ikn.gens.size(); ++i)
            for (size_t j = i + 1; j < ikn.gens.size(); ++j) {
                Polynomial s = s_polynomial(ikn.gens[i], ikn.gens[j], ord);
                CHECK(normal_form(s, ikn.gens, ord).is_zero());
            }
        ReducedGB gb = buchberger(ikn);
        CHECK(gb.basis.size() == ikn.gens.size());
        for (int m = 1; m < n; ++m) {
            Ideal ikmn = build_IKmn(ring, m, n);
            ReducedGB gbm = buchberger(ikmn);
            CHECK(gbm.basis.size() == ikmn.gens.size());
            for (const auto& p : ikmn.gens) CHECK(contains_poly(gbm, p));
        }
    }
}

TEST_CASE("buchberger under the mirrored y-first order") {
    // I_{K_n} is symmetric under swapping x and y, so the reduced basis under
    // y1 > .. > yn > x1 > .. > xn has the mirrored leading monomials
    RingPtr ring = make_ring(3, FieldSpec::rationals());
    MonomialOrder yfirst;
    for (int i = 1; i <= 3; ++i) yfirst.priority.push_back(static_cast<int>(ring->y_index(i)));
    for (int i = 1; i <= 3; ++i) yfirst.priority.push_back(static_cast<int>(ring->x_index(i)));
    ReducedGB gb = buchberger(build_IKn(ring, 3), yfirst, Budget{});
    CHECK(gb.basis.size() == 9);
    std::vector<Monomial> expect;
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) {
            Monomial m(ring->total_vars());
            m.exponent(ring->y_index(i)) += 1;
            m.exponent(ring->y_index(j)) += 1;
            expect.push_back(m);
        }
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            Monomial m(ring->total_vars());
            m.exponent(ring->y_index(i)) += 1;
            m.exponent(ring->x_index(j)) += 1;
            expect.push_back(m);
        }
    std::vector<Monomial> got = gb.leading_monomials();
    for (const auto& m : expect)
        CHECK(std::find(got.begin(), got.end(), m) != got.end());
    // x_1 divides no leading monomial here (and y_1 none under the default
    // order), which is how the variables are seen to be non-zero divisors
    for (const auto& m : got) CHECK(m.exponent(ring->x_index(1)) == 0);
    for (const auto& m : buchberger(build_IKn(ring, 3)).leading_monomials())
        CHECK(m.exponent(ring->y_index(1)) == 0);
}

TEST_CASE("reduced basis is canonical under generator shuffles") {
    RingPtr ring = make_ring(3, FieldSpec::rationals());
    Graph c3 = Graph::preset("cycle:3");
    Ideal pi = build_PiG(c3, ring);
    ReducedGB reference = buchberger(pi);
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 10; ++iter) {
        Ideal shuffled = pi;
        std::shuffle(shuffled.gens.begin(), shuffled.gens.end(), rng);
        CHECK(buchberger(shuffled) == reference);
    }
}

TEST_CASE("groebner output invariants on random small ideals") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> pick(0, 2);
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
        RingPtr ring = make_ring(3, f);
        MonomialOrder ord = ring->default_order();
        for (int iter = 0; iter < 12; ++iter) {
            Ideal ideal{ring, {}};
            for (int k = 0; k < 3; ++k) {
                int what = pick(rng);
                int i = 1 + static_cast<int>(rng() % 3);
                int j = 1 + static_cast<int>(rng() % 3);
                if (i == j) j = (j % 3) + 1;
                if (i > j) std::swap(i, j);
                if (what == 0) ideal.gens.push_back(gens::f(ring, i, j));
                if (what == 1) ideal.gens.push_back(gens::g(ring, i, j));
                if (what == 2) ideal.gens.push_back(gens::h(ring, i));
            }
            ReducedGB gb = buchberger(ideal);
            for (const auto& g : ideal.gens) CHECK(contains_poly(gb, g));
            for (size_t a = 0; a < gb.basis.size(); ++a)
                for (size_t b = a + 1; b < gb.basis.size(); ++b)
                    CHECK(normal_form(s_polynomial(gb.basis[a], gb.basis[b], ord), gb.basis, ord)
                              .is_zero());
            // fully inter-reduced: no leading monomial divides any monomial of another element
            for (size_t a = 0; a < gb.basis.size(); ++a)
                for (size_t b = 0; b < gb.basis.size(); ++b) {
                    if (a == b) continue;
                    for (const auto& t : gb.basis[b].terms())
                        CHECK_FALSE(gb.basis[a].leading_term(ord).mono.divides(t.mono));
                }
        }
    }
}

TEST_CASE("intersection, quotient, radical membership") {
    // Over F_5 (2^2 = -1): the two linear ideals intersect in I_{K_3}
    RingPtr f5 = make_ring(3, FieldSpec::prime(5));
    Ideal p1{f5, {}}, p2{f5, {}};
    for (int i = 1; i <= 3; ++i) {
        Polynomial x = Polynomial::variable(f5, f5->x_index(i));
        Polynomial y = Polynomial::variable(f5, f5->y_index(i));
        p1.gens.push_back(x + y.scaled(FieldElem::of(f5->field(), 2)));
        p2.gens.push_back(x - y.scaled(FieldElem::of(f5->field(), 2)));
    }
    Ideal inter = intersect(p1, p2);
    CHECK(equal_ideals(inter, build_IKn(f5, 3)));

    // (I_{K_3} : x_1) = I_{K_3} over Q
    RingPtr q3 = make_ring(3, FieldSpec::rationals());
    Ideal ik3 = build_IKn(q3, 3);
    Ideal quot = quotient_by(ik3, Polynomial::parse(q3, "x1"));
    CHECK(equal_ideals(quot, ik3));
    CHECK_THROWS_AS(quotient_by(ik3, Polynomial::zero(q3)), std::invalid_argument);

    // over F_2, x_1 + y_1 lies in the radical of I_{K_3}
    RingPtr f2 = make_ring(3, FieldSpec::prime(2));
    Ideal ik3_2 = build_IKn(f2, 3);
    CHECK(radical_member(ik3_2, Polynomial::parse(f2, "x1 + y1")));
    CHECK_FALSE(radical_member(ik3_2, Polynomial::parse(f2, "x1")));
}

TEST_CASE("intersection invariants on small ideals") {
    RingPtr ring = make_ring(2, FieldSpec::rationals());
    Ideal a{ring, {gens::f(ring, 1, 2)}};
    Ideal b{ring, {gens::g(ring, 1, 2), gens::h(ring, 1)}};
    Ideal inter = intersect(a, b);
    ReducedGB gba = buchberger(a);
    ReducedGB gbb = buchberger(b);
    ReducedGB gbi = buchberger(inter);
    for (const auto& p : inter.gens) {
        CHECK(contains_poly(gba, p));
        CHECK(contains_poly(gbb, p));
    }
    for (const auto& pa : a.gens)
        for (const auto& pb : b.gens) CHECK(contains_poly(gbi, pa * pb));

    // quotient correctness: f * g in I for every generator g of I : (f)
    RingPtr q3 = make_ring(3, FieldSpec::rationals());
    Ideal ideal{q3, {gens::f(q3, 1, 2), gens::h(q3, 3)}};
    Polynomial f = Polynomial::parse(q3, "x1*y3");
    ReducedGB gb = buchberger(ideal);
    for (const auto& g : quotient_by(ideal, f).gens) CHECK(contains_poly(gb, f * g));
}

TEST_CASE("budget exhaustion is an explicit error") {
    RingPtr ring = make_ring(3, FieldSpec::rationals());
    Ideal ik3 = build_IKn(ring, 3);
    Budget tiny;
    tiny.max_basis = 2;
    tiny.max_pairs = 3;
    CHECK_THROWS_AS(buchberger(ik3, ring->default_order(), tiny), BudgetExhausted);
}

TEST_CASE("zero ideal and unit ideal") {
    RingPtr ring = make_ring(2, FieldSpec::rationals());
    ReducedGB zero = buchberger(Ideal::zero(ring));
    CHECK(zero.basis.empty());
    CHECK_FALSE(zero.contains_one());
    Ideal unit{ring, {Polynomial::parse(ring, "2")}};
    CHECK(buchberger(unit).contains_one());
}
