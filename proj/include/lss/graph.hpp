#ifndef LSS_GRAPH_HPP
#define LSS_GRAPH_HPP

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lss {

/// Simple undirected graph on vertices 1..n.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        adj_.assign(n + 1, {});
    }

    int vertex_count() const { return n_; }

    void add_edge(int i, int j) {
        if (i < 1 || j < 1 || i > n_ || j > n_)
            throw std::invalid_argument("Graph: endpoint out of range");
        if (i == j) throw std::invalid_argument("Graph: loop edge");
        if (i > j) std::swap(i, j);
        if (edges_.insert({i, j}).second) {
            adj_[i].push_back(j);
            adj_[j].push_back(i);
            std::sort(adj_[i].begin(), adj_[i].end());
            std::sort(adj_[j].begin(), adj_[j].end());
        }
    }

    bool has_edge(int i, int j) const {
        if (i > j) std::swap(i, j);
        return edges_.count({i, j}) > 0;
    }

    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    Graph complement() const {
        Graph g(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (!has_edge(i, j)) g.add_edge(i, j);
        return g;
    }

    /// Named presets from the worked examples: cycle:<n>, complete:<n>,
    /// complete_bipartite:<m>,<k>, path:<n>, butterfly, fig3.
    static Graph preset(const std::string& name) {
        auto colon = name.find(':');
        std::string head = name.substr(0, colon);
        auto num = [&](const std::string& s) {
            if (s.empty()) throw std::invalid_argument("Graph preset: missing size in '" + name + "'");
            for (char c : s)
                if (c < '0' || c > '9')
                    throw std::invalid_argument("Graph preset: bad size in '" + name + "'");
            return std::stoi(s);
        };
        if (head == "cycle") {
            int n = num(name.substr(colon + 1));
            if (n < 3) throw std::invalid_argument("Graph preset: cycle needs n >= 3");
            Graph g(n);
            for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
            g.add_edge(1, n);
            return g;
        }
        if (head == "path") {
            int n = num(name.substr(colon + 1));
            if (n < 1) throw std::invalid_argument("Graph preset: path needs n >= 1");
            Graph g(n);
            for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
            return g;
        }
        if (head == "complete") {
            int n = num(name.substr(colon + 1));
            Graph g(n);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
            return g;
        }
        if (head == "complete_bipartite") {
            std::string rest = name.substr(colon + 1);
            auto comma = rest.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("Graph preset: complete_bipartite:<m>,<k>");
            int m = num(rest.substr(0, comma));
            int k = num(rest.substr(comma + 1));
            if (m < 1 || k < 1) throw std::invalid_argument("Graph preset: blocks must be nonempty");
            Graph g(m + k);
            for (int i = 1; i <= m; ++i)
                for (int j = m + 1; j <= m + k; ++j) g.add_edge(i, j);
            return g;
        }
        if (name == "butterfly") {
            Graph g(5);
            for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}})
                g.add_edge(i, j);
            return g;
        }
        if (name == "fig3") {
            Graph g(7);
            for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5},
                                {4, 6}, {5, 6}, {5, 7}, {6, 7}})
                g.add_edge(i, j);
            return g;
        }
        throw std::invalid_argument("Graph preset: unknown preset '" + name + "'");
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::set<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// One connected component of an induced subgraph, with its bipartition data.
/// A single vertex counts as bipartite with an empty second block.
struct ComponentData {
    std::vector<int> vertices;
    bool is_bipartite = false;
    std::array<std::vector<int>, 2> blocks;  // block 0 holds the smallest vertex

    int size() const { return static_cast<int>(vertices.size()); }
};

/// Connected components of the induced subgraph on [n] minus deleted, each
/// 2-colored by BFS; block 0 is the block containing the component's
/// smallest vertex.
inline std::vector<ComponentData> components(const Graph& g, const std::vector<int>& deleted = {}) {
    int n = g.vertex_count();
    std::vector<bool> removed(n + 1, false);
    for (int v : deleted) {
        if (v < 1 || v > n) throw std::invalid_argument("components: vertex out of range");
        removed[v] = true;
    }
    std::vector<int> color(n + 1, -1);
    std::vector<ComponentData> out;
    for (int start = 1; start <= n; ++start) {
        if (removed[start] || color[start] != -1) continue;
        ComponentData comp;
        comp.is_bipartite = true;
        std::deque<int> bfs{start};
        color[start] = 0;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            comp.vertices.push_back(v);
            for (int w : g.neighbors(v)) {
                if (removed[w]) continue;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    bfs.push_back(w);
                } else if (color[w] == color[v]) {
                    comp.is_bipartite = false;
                }
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        if (comp.is_bipartite) {
            int base = color[comp.vertices.front()];
            for (int v : comp.vertices)
                comp.blocks[color[v] == base ? 0 : 1].push_back(v);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

inline int bipartite_count(const std::vector<ComponentData>& comps) {
    int b = 0;
    for (const auto& c : comps)
        if (c.is_bipartite) ++b;
    return b;
}

struct SpecialPointFlags {
    bool is_cut_point = false;
    bool is_bipartition_point = false;
};

/// Cut/bipartition status of i within the graph induced on ([n] \ S) u {i}:
/// deleting i there must raise the component count / the bipartite component
/// count, respectively.
inline SpecialPointFlags special_points(const Graph& g, const std::vector<int>& S, int i) {
    if (std::find(S.begin(), S.end(), i) == S.end())
        throw std::invalid_argument("special_points: i must lie in S");
    std::vector<int> without_i;  // deleted set for the ambient graph
    for (int v : S)
        if (v != i) without_i.push_back(v);
    auto ambient = components(g, without_i);
    std::vector<int> with_i = without_i;
    with_i.push_back(i);
    auto pruned = components(g, with_i);
    SpecialPointFlags f;
    f.is_cut_point = pruned.size() > ambient.size();
    f.is_bipartition_point = bipartite_count(pruned) > bipartite_count(ambient);
    return f;
}

/// All S subseteq [n] whose every element is a cut point or bipartition point
/// of the graph induced on ([n] \ S) u {i}. Definitionally faithful subset
/// sweep; exponential in n, fine at desk scale.
inline std::vector<std::vector<int>> enumerate_M(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> result;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> S;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) S.push_back(v);
        bool ok = true;
        for (int i : S) {
            SpecialPointFlags f = special_points(g, S, i);
            if (!f.is_cut_point && !f.is_bipartition_point) {
                ok = false;
                break;
            }
        }
        if (ok) result.push_back(std::move(S));
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return result;
}

struct ConnectivityClass {
    bool is_matching_union = false;           // G is disjoint edges + isolated vertices
    bool complement_is_n_minus_2_connected = false;
};

/// Degree characterizations: G is a matching union iff max degree <= 1; the
/// complement of G is (n-2)-connected iff every vertex of the complement has
/// at most one non-neighbor there.
inline ConnectivityClass connectivity_class(const Graph& g) {
    ConnectivityClass c;
    c.is_matching_union = true;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) > 1) {
            c.is_matching_union = false;
            break;
        }
    Graph comp = g.complement();
    c.complement_is_n_minus_2_connected = true;
    for (int v = 1; v <= comp.vertex_count(); ++v) {
        int non_neighbors = comp.vertex_count() - 1 - comp.degree(v);
        if (non_neighbors > 1) {
            c.complement_is_n_minus_2_connected = false;
            break;
        }
    }
    return c;
}

/// All labeled graphs on exactly n vertices, by edge-mask enumeration.
inline std::vector<Graph> all_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) slots.push_back({i, j});
    std::vector<Graph> out;
    out.reserve(1u << slots.size());
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        Graph g(n);
        for (size_t k = 0; k < slots.size(); ++k)
            if (mask & (1u << k)) g.add_edge(slots[k].first, slots[k].second);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace lss

#endif
