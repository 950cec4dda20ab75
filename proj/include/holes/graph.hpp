#ifndef HOLES_GRAPH_HPP
#define HOLES_GRAPH_HPP

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "holes/bitset.hpp"

namespace holes {

// Simple undirected graph over dense vertex ids 0..n-1, adjacency as bitsets.
// Labels are a parallel array for provenance only, never semantic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))) {}

    int n() const { return n_; }

    void add_edge(int u, int v) {
        assert(u != v && u >= 0 && v >= 0 && u < n_ && v < n_);
        adj_[u].set(static_cast<std::size_t>(v));
        adj_[v].set(static_cast<std::size_t>(u));
    }
    void remove_edge(int u, int v) {
        adj_[u].reset(static_cast<std::size_t>(v));
        adj_[v].reset(static_cast<std::size_t>(u));
    }
    bool has_edge(int u, int v) const {
        return u != v && adj_[u].test(static_cast<std::size_t>(v));
    }
    void toggle_edge(int u, int v) {
        if (has_edge(u, v)) remove_edge(u, v); else add_edge(u, v);
    }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    Bitset closed_neighbors(int v) const {
        Bitset b = adj_[v];
        b.set(static_cast<std::size_t>(v));
        return b;
    }
    int degree(int v) const { return static_cast<int>(adj_[v].count()); }

    long long edge_count() const {
        long long m = 0;
        for (int v = 0; v < n_; ++v) m += degree(v);
        return m / 2;
    }

    Bitset all_vertices() const {
        Bitset b(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) b.set(static_cast<std::size_t>(v));
        return b;
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const { return labels_[v]; }
    void set_labels(std::vector<std::string> labels) {
        assert(static_cast<int>(labels.size()) == n_);
        labels_ = std::move(labels);
    }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
};

inline Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

// Connected components of g (anti=false) or of its complement (anti=true),
// each reported as a sorted vertex list; components ordered by minimum vertex.
inline std::vector<std::vector<int>> components(const Graph& g, bool anti = false) {
    const int n = g.n();
    std::vector<std::vector<int>> out;
    Bitset seen(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        if (seen.test(static_cast<std::size_t>(s))) continue;
        std::vector<int> comp, stack{s};
        seen.set(static_cast<std::size_t>(s));
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u = 0; u < n; ++u) {
                if (u == v || seen.test(static_cast<std::size_t>(u))) continue;
                bool adjacent = g.has_edge(v, u);
                if (anti) adjacent = !adjacent;
                if (adjacent) {
                    seen.set(static_cast<std::size_t>(u));
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }
inline bool is_anticonnected(const Graph& g) { return g.n() <= 1 || components(g, true).size() == 1; }

inline bool is_clique(const Graph& g, const Bitset& x) {
    auto xs = x.to_vector();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (!g.has_edge(xs[i], xs[j])) return false;
    return true;
}

inline bool is_stable_set(const Graph& g, const Bitset& x) {
    auto xs = x.to_vector();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (g.has_edge(xs[i], xs[j])) return false;
    return true;
}

// X is a module iff every outside vertex is complete or anticomplete to X.
inline bool is_module(const Graph& g, const Bitset& x) {
    auto xs = x.to_vector();
    if (xs.empty()) return true;
    for (int v = 0; v < g.n(); ++v) {
        if (x.test(static_cast<std::size_t>(v))) continue;
        bool first = g.has_edge(v, xs[0]);
        for (std::size_t i = 1; i < xs.size(); ++i)
            if (g.has_edge(v, xs[i]) != first) return false;
    }
    return true;
}

// Partition into maximal classes of equal closed neighborhoods.
inline std::vector<std::vector<int>> twin_classes(const Graph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> out;
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) {
        if (done[v]) continue;
        std::vector<int> cls{v};
        done[v] = true;
        Bitset nv = g.closed_neighbors(v);
        for (int u = v + 1; u < n; ++u)
            if (!done[u] && g.closed_neighbors(u) == nv) {
                done[u] = true;
                cls.push_back(u);
            }
        out.push_back(std::move(cls));
    }
    return out;
}

inline bool is_twinless(const Graph& g) {
    for (const auto& c : twin_classes(g))
        if (c.size() > 1) return false;
    return true;
}

struct UniversalIsolated {
    std::vector<int> universal;
    std::vector<int> isolated;
};

inline UniversalIsolated universal_and_isolated(const Graph& g) {
    UniversalIsolated out;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d == 0) out.isolated.push_back(v);
        if (d == g.n() - 1) out.universal.push_back(v);
    }
    return out;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;                 // local id -> parent id
    std::vector<int> to_local;                  // parent id -> local id or -1
};

inline InducedSubgraph induced(const Graph& g, const Bitset& x) {
    InducedSubgraph out;
    out.to_parent = x.to_vector();
    out.to_local.assign(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        out.to_local[out.to_parent[i]] = static_cast<int>(i);
    out.graph = Graph(static_cast<int>(out.to_parent.size()));
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        for (std::size_t j = i + 1; j < out.to_parent.size(); ++j)
            if (g.has_edge(out.to_parent[i], out.to_parent[j]))
                out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (g.has_labels()) {
        std::vector<std::string> labels;
        labels.reserve(out.to_parent.size());
        for (int p : out.to_parent) labels.push_back(g.label(p));
        out.graph.set_labels(std::move(labels));
    }
    return out;
}

inline InducedSubgraph induced(const Graph& g, const std::vector<int>& xs) {
    return induced(g, make_set(static_cast<std::size_t>(g.n()), xs));
}

// --- small named graphs used all over the tests -------------------------

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (int u = 0; u < a.n(); ++u)
        for (int v = u + 1; v < a.n(); ++v)
            if (a.has_edge(u, v)) g.add_edge(u, v);
    for (int u = 0; u < b.n(); ++u)
        for (int v = u + 1; v < b.n(); ++v)
            if (b.has_edge(u, v)) g.add_edge(a.n() + u, a.n() + v);
    return g;
}

inline Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer C5
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);              // spokes
    }
    return g;
}

} // namespace holes

#endif
