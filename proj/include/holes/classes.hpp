#ifndef HOLES_CLASSES_HPP
#define HOLES_CLASSES_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "holes/graph.hpp"
#include "holes/hypergraph.hpp"

namespace holes {

// Neighborhood domination: u <= v iff N(u)\{v} subseteq N(v)\{u}.
inline bool leq(const Graph& g, int u, int v) {
    if (u == v) return true;
    Bitset nu = g.neighbors(u);
    nu.reset(static_cast<std::size_t>(v));
    Bitset nv = g.neighbors(v);
    nv.reset(static_cast<std::size_t>(u));
    return nu.is_subset_of(nv);
}

namespace detail {

// Arrange `xs` so that leq holds along the sequence, by repeatedly picking
// an element dominated by all remaining ones. Safe even when the relation
// is not a total preorder: returns nullopt instead of misordering.
inline std::optional<std::vector<int>> domination_sort(const Graph& g, std::vector<int> xs) {
    std::vector<int> out;
    while (!xs.empty()) {
        int pick = -1;
        for (std::size_t i = 0; i < xs.size() && pick < 0; ++i) {
            bool min = true;
            for (std::size_t j = 0; j < xs.size() && min; ++j)
                if (i != j && !leq(g, xs[i], xs[j])) min = false;
            if (min) pick = static_cast<int>(i);
        }
        if (pick < 0) return std::nullopt;
        out.push_back(xs[pick]);
        xs.erase(xs.begin() + pick);
    }
    return out;
}

} // namespace detail

enum class AddFlag { Complete, Anticomplete };

struct ThresholdCertificate {
    // Build order: vertex i is added complete or anticomplete to its
    // predecessors. The first entry's flag is immaterial.
    std::vector<std::pair<int, AddFlag>> elimination;
    std::vector<int> domination;  // v_i <= v_j for i <= j
};

inline bool verify_threshold_certificate(const Graph& g, const ThresholdCertificate& c) {
    if (static_cast<int>(c.elimination.size()) != g.n()) return false;
    if (static_cast<int>(c.domination.size()) != g.n()) return false;
    Graph h(g.n());
    std::vector<int> placed;
    for (const auto& [v, flag] : c.elimination) {
        if (flag == AddFlag::Complete)
            for (int u : placed) h.add_edge(u, v);
        placed.push_back(v);
    }
    if (!(h == g)) return false;
    for (std::size_t i = 0; i < c.domination.size(); ++i)
        for (std::size_t j = i + 1; j < c.domination.size(); ++j)
            if (!leq(g, c.domination[i], c.domination[j])) return false;
    std::vector<int> seen = c.domination;
    std::sort(seen.begin(), seen.end());
    for (int v = 0; v < g.n(); ++v)
        if (seen[v] != v) return false;
    return true;
}

// Threshold: repeatedly remove an isolated-or-universal vertex.
inline std::optional<ThresholdCertificate> recognize_threshold(const Graph& g) {
    const int n = g.n();
    Bitset alive = g.all_vertices();
    std::vector<std::pair<int, AddFlag>> peel;  // removal order
    while (alive.any()) {
        const int remaining = static_cast<int>(alive.count());
        int found = -1;
        AddFlag flag = AddFlag::Anticomplete;
        alive.for_each([&](std::size_t v) {
            if (found >= 0) return;
            int deg = static_cast<int>((g.neighbors(static_cast<int>(v)) & alive).count());
            if (deg == 0) { found = static_cast<int>(v); flag = AddFlag::Anticomplete; }
            else if (deg == remaining - 1) { found = static_cast<int>(v); flag = AddFlag::Complete; }
        });
        if (found < 0) return std::nullopt;
        peel.emplace_back(found, flag);
        alive.reset(static_cast<std::size_t>(found));
    }
    ThresholdCertificate cert;
    cert.elimination.assign(peel.rbegin(), peel.rend());
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[v] = v;
    auto dom = detail::domination_sort(g, all);
    if (!dom) return std::nullopt;
    cert.domination = *dom;
    return cert;
}

struct CographNode {
    enum class Kind { Leaf, Union, Join };
    Kind kind = Kind::Leaf;
    int vertex = -1;  // for leaves, a vertex of the input graph
    std::vector<CographNode> children;
};

// Cograph: every induced subgraph on >= 2 vertices is disconnected or
// anti-disconnected. Returns the recursive split witness (cotree).
inline std::optional<CographNode> recognize_cograph(const Graph& g) {
    auto rec = [&](auto&& self, const std::vector<int>& verts) -> std::optional<CographNode> {
        if (verts.size() == 1) {
            CographNode leaf;
            leaf.vertex = verts[0];
            return leaf;
        }
        auto sub = induced(g, verts);
        bool anti = false;
        auto comps = components(sub.graph);
        if (comps.size() <= 1) {
            comps = components(sub.graph, true);
            anti = true;
            if (comps.size() <= 1) return std::nullopt;
        }
        CographNode node;
        node.kind = anti ? CographNode::Kind::Join : CographNode::Kind::Union;
        for (const auto& c : comps) {
            std::vector<int> part;
            for (int v : c) part.push_back(sub.to_parent[v]);
            auto child = self(self, part);
            if (!child) return std::nullopt;
            node.children.push_back(std::move(*child));
        }
        return node;
    };
    if (g.n() == 0) return CographNode{CographNode::Kind::Union, -1, {}};
    std::vector<int> all(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    return rec(rec, all);
}

struct SplitCertificate {
    std::vector<int> clique;
    std::vector<int> stable;
};

// Split graphs via the Hammer-Simeone degree criterion.
inline std::optional<SplitCertificate> recognize_split(const Graph& g) {
    const int n = g.n();
    std::vector<int> by_degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) by_degree[v] = v;
    std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    long long m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(by_degree[i]) >= i) m = i + 1;
    long long lhs = 0, rhs = m * (m - 1);
    for (int i = 0; i < n; ++i) {
        if (i < m) lhs += g.degree(by_degree[i]);
        else rhs += g.degree(by_degree[i]);
    }
    if (lhs != rhs) return std::nullopt;
    SplitCertificate cert;
    cert.clique.assign(by_degree.begin(), by_degree.begin() + m);
    cert.stable.assign(by_degree.begin() + m, by_degree.end());
    std::sort(cert.clique.begin(), cert.clique.end());
    std::sort(cert.stable.begin(), cert.stable.end());
    if (!is_clique(g, make_set(static_cast<std::size_t>(n), cert.clique))) return std::nullopt;
    if (!is_stable_set(g, make_set(static_cast<std::size_t>(n), cert.stable))) return std::nullopt;
    return cert;
}

// Chordal via maximum cardinality search; returns a perfect elimination
// ordering (first vertex eliminated first).
inline std::optional<std::vector<int>> recognize_chordal(const Graph& g) {
    const int n = g.n();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> order;  // MCS visit order
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
        visited[best] = true;
        order.push_back(best);
        g.neighbors(best).for_each([&](std::size_t u) {
            if (!visited[u]) ++weight[u];
        });
    }
    std::reverse(order.begin(), order.end());  // candidate PEO
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        std::vector<int> later;
        g.neighbors(order[i]).for_each([&](std::size_t u) {
            if (pos[u] > i) later.push_back(static_cast<int>(u));
        });
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b])) return std::nullopt;
    }
    return order;
}

// Quasi-threshold: every connected induced subgraph has a universal vertex.
// Returns the laminar hypergraph (one hyperedge per vertex: itself plus its
// descendants in the universal-peel forest) whose line graph is g under the
// identity bijection.
inline std::optional<Hypergraph> recognize_quasi_threshold(const Graph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> below(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, const std::vector<int>& comp) -> bool {
        if (comp.size() == 1) {
            below[comp[0]] = comp;
            return true;
        }
        auto sub = induced(g, comp);
        for (const auto& c : components(sub.graph)) {
            std::vector<int> part;
            for (int v : c) part.push_back(sub.to_parent[v]);
            if (part.size() == 1) {
                below[part[0]] = part;
                continue;
            }
            int root = -1;
            Bitset pb = make_set(static_cast<std::size_t>(n), part);
            for (int v : part) {
                if ((g.neighbors(v) & pb).count() == part.size() - 1) { root = v; break; }
            }
            if (root < 0) return false;
            std::vector<int> rest;
            for (int v : part)
                if (v != root) rest.push_back(v);
            if (!self(self, rest)) return false;
            below[root] = part;
        }
        return true;
    };
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[v] = v;
    if (n > 0 && !rec(rec, all)) return std::nullopt;
    Hypergraph h;
    h.n = n;
    for (int v = 0; v < n; ++v) h.add_edge(below[v]);
    return h;
}

struct HalfGraphCertificate {
    std::vector<int> cliqueK;
    std::vector<int> cliqueK2;
    std::vector<int> orderK;   // cliqueK sorted so leq holds along it
    std::vector<int> orderK2;
};

// Half graph: V splits into two cliques and the domination relation is
// total. Detected by 2-coloring the complement (bipartite exactly for half
// graphs), then domination-sorting each side.
inline std::optional<HalfGraphCertificate> recognize_half_graph(const Graph& g) {
    const int n = g.n();
    Graph co = complement(g);
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            bool bad = false;
            co.neighbors(v).for_each([&](std::size_t u) {
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    queue.push_back(static_cast<int>(u));
                } else if (color[u] == color[v]) {
                    bad = true;
                }
            });
            if (bad) return std::nullopt;
        }
    }
    HalfGraphCertificate cert;
    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? cert.cliqueK : cert.cliqueK2).push_back(v);
    if (!is_clique(g, make_set(static_cast<std::size_t>(n), cert.cliqueK))) return std::nullopt;
    if (!is_clique(g, make_set(static_cast<std::size_t>(n), cert.cliqueK2))) return std::nullopt;
    auto ok = detail::domination_sort(g, cert.cliqueK);
    auto ok2 = detail::domination_sort(g, cert.cliqueK2);
    if (!ok || !ok2) return std::nullopt;
    cert.orderK = *ok;
    cert.orderK2 = *ok2;
    return cert;
}

} // namespace holes

#endif
