#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lss/graph.hpp"

using namespace lss;

TEST_CASE("components and canonical bipartition blocks") {
    Graph c4 = Graph::preset("cycle:4");
    auto comps = components(c4);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].is_bipartite);
    CHECK(comps[0].blocks[0] == std::vector<int>{1, 3});
    CHECK(comps[0].blocks[1] == std::vector<int>{2, 4});

    Graph c3 = Graph::preset("cycle:3");
    auto one_removed = components(c3, {1});
    REQUIRE(one_removed.size() == 1);
    CHECK(one_removed[0].vertices == std::vector<int>{2, 3});
    CHECK(one_removed[0].is_bipartite);

    Graph butterfly = Graph::preset("butterfly");
    auto split = components(butterfly, {3});
    REQUIRE(split.size() == 2);
    CHECK(bipartite_count(split) == 2);

    // a lone vertex is bipartite with an empty second block
    Graph k1(1);
    auto single = components(k1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].is_bipartite);
    CHECK(single[0].blocks[0] == std::vector<int>{1});
    CHECK(single[0].blocks[1].empty());
}

TEST_CASE("components partition the surviving vertices; b(S) <= c(S)") {
    for (const Graph& g : all_graphs(4)) {
        for (unsigned mask = 0; mask < 16; ++mask) {
            std::vector<int> S;
            for (int v = 1; v <= 4; ++v)
                if (mask & (1u << (v - 1))) S.push_back(v);
            auto comps = components(g, S);
            std::vector<int> seen;
            for (const auto& c : comps) {
                for (int v : c.vertices) seen.push_back(v);
                if (c.is_bipartite) {
                    // every edge inside the component crosses the blocks
                    for (int side = 0; side < 2; ++side)
                        for (int a : c.blocks[side])
                            for (int b : c.blocks[side])
                                if (a < b) CHECK_FALSE(g.has_edge(a, b));
                }
            }
            std::sort(seen.begin(), seen.end());
            std::vector<int> expect;
            for (int v = 1; v <= 4; ++v)
                if (!(mask & (1u << (v - 1)))) expect.push_back(v);
            CHECK(seen == expect);
            CHECK(bipartite_count(comps) <= static_cast<int>(comps.size()));
            CHECK(static_cast<int>(comps.size()) <= static_cast<int>(expect.size()));
        }
    }
}

TEST_CASE("special points on the Figure 3 graph") {
    Graph g = Graph::preset("fig3");
    // S = {4,5}: 4 is a cut point (deleting it also splits off the bipartite
    // edge {6,7}, so the bipartite count rises as well); 5 is a bipartition
    // point but not a cut point
    auto f4 = special_points(g, {4, 5}, 4);
    CHECK(f4.is_cut_point);
    CHECK(f4.is_bipartition_point);
    auto f5 = special_points(g, {4, 5}, 5);
    CHECK_FALSE(f5.is_cut_point);
    CHECK(f5.is_bipartition_point);
    // S = {3,7}: 7 is neither
    auto f7 = special_points(g, {3, 7}, 7);
    CHECK_FALSE(f7.is_cut_point);
    CHECK_FALSE(f7.is_bipartition_point);

    CHECK_THROWS_AS(special_points(g, {4, 5}, 1), std::invalid_argument);
}

TEST_CASE("M(G) worked examples") {
    CHECK(enumerate_M(Graph::preset("complete:2")) ==
          std::vector<std::vector<int>>{{}});
    CHECK(enumerate_M(Graph::preset("cycle:3")) ==
          std::vector<std::vector<int>>{{}, {1}, {2}, {3}});
    for (int n = 4; n <= 5; ++n) {
        Graph kn = Graph::preset("complete:" + std::to_string(n));
        std::vector<int> S;
        for (int i = 1; i <= n - 2; ++i) S.push_back(i);
        auto M = enumerate_M(kn);
        CHECK(std::find(M.begin(), M.end(), S) != M.end());
    }
    // fig3 memberships from the worked example
    Graph fig3 = Graph::preset("fig3");
    auto M = enumerate_M(fig3);
    auto has = [&](std::vector<int> s) { return std::find(M.begin(), M.end(), s) != M.end(); };
    CHECK(has({4}));
    CHECK(has({4, 5}));
    CHECK(has({2, 6}));
    CHECK_FALSE(has({3, 7}));
}

TEST_CASE("M(G) agrees with an independently coded definition sweep (n <= 5)") {
    // second implementation: direct component counting, no special_points call
    auto brute = [](const Graph& g) {
        int n = g.vertex_count();
        std::vector<std::vector<int>> out;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> S;
            for (int v = 1; v <= n; ++v)
                if (mask & (1u << (v - 1))) S.push_back(v);
            bool ok = true;
            for (int i : S) {
                std::vector<int> others;
                for (int v : S)
                    if (v != i) others.push_back(v);
                std::vector<int> with_i = others;
                with_i.push_back(i);
                auto before = components(g, others);
                auto after = components(g, with_i);
                bool cut = after.size() > before.size();
                bool bip = bipartite_count(after) > bipartite_count(before);
                if (!cut && !bip) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(S);
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        return out;
    };
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n)) CHECK(enumerate_M(g) == brute(g));
}

TEST_CASE("M(G) is not closed under subsets") {
    Graph fig3 = Graph::preset("fig3");
    auto M = enumerate_M(fig3);
    auto has = [&](std::vector<int> s) { return std::find(M.begin(), M.end(), s) != M.end(); };
    CHECK(has({4, 5}));
    CHECK_FALSE(has({5}));
}

TEST_CASE("connectivity classes") {
    Graph two_edges(4);
    two_edges.add_edge(1, 2);
    two_edges.add_edge(3, 4);
    auto c = connectivity_class(two_edges);
    CHECK(c.is_matching_union);
    CHECK(c.complement_is_n_minus_2_connected);

    auto c3 = connectivity_class(Graph::preset("cycle:3"));
    CHECK_FALSE(c3.is_matching_union);
    CHECK_FALSE(c3.complement_is_n_minus_2_connected);

    // matching-union graphs have (n-2)-connected complements and vice versa
    for (const Graph& g : all_graphs(4)) {
        auto cc = connectivity_class(g);
        CHECK(cc.is_matching_union == cc.complement_is_n_minus_2_connected);
    }
}

TEST_CASE("presets and validation") {
    Graph p3 = Graph::preset("path:3");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edges().size() == 2);
    Graph kmn = Graph::preset("complete_bipartite:2,3");
    CHECK(kmn.vertex_count() == 5);
    CHECK(kmn.edges().size() == 6);
    Graph fig3 = Graph::preset("fig3");
    CHECK(fig3.vertex_count() == 7);
    CHECK(fig3.edges().size() == 9);
    CHECK_THROWS_AS(Graph::preset("hypercube:3"), std::invalid_argument);
    CHECK_THROWS_AS(Graph::preset("cycle:2"), std::invalid_argument);
    CHECK_THROWS_AS(Graph::preset("cycle:x"), std::invalid_argument);

    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 4), std::invalid_argument);
}

TEST_CASE("complement") {
    Graph butterfly = Graph::preset("butterfly");
    Graph comp = butterfly.complement();
    CHECK(comp.edges().size() == 10 - butterfly.edges().size());
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) CHECK(butterfly.has_edge(i, j) != comp.has_edge(i, j));
}
