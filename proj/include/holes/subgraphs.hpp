#ifndef HOLES_SUBGRAPHS_HPP
#define HOLES_SUBGRAPHS_HPP

#include <vector>

#include "holes/graph.hpp"

namespace holes {

// Brute-force induced-subgraph containment, meant for small patterns.
inline bool contains_induced(const Graph& g, const Graph& pattern) {
    const int k = pattern.n();
    if (k == 0) return true;
    if (k > g.n()) return false;
    std::vector<int> map(static_cast<std::size_t>(k), -1);
    std::vector<bool> used(static_cast<std::size_t>(g.n()), false);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (int v = 0; v < g.n(); ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (pattern.has_edge(j, i) != g.has_edge(map[j], v)) ok = false;
            if (!ok) continue;
            map[i] = v;
            used[v] = true;
            if (self(self, i + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

// Brute-force isomorphism, desk scale only.
inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return contains_induced(a, b);
}

inline Graph pattern_p3() { return path_graph(3); }
inline Graph pattern_p4() { return path_graph(4); }
inline Graph pattern_c4() { return cycle_graph(4); }
inline Graph pattern_c5() { return cycle_graph(5); }
inline Graph pattern_2k2() { return disjoint_union(complete_graph(2), complete_graph(2)); }
inline Graph pattern_3k1() { return Graph(3); }

inline bool free_of(const Graph& g, const std::vector<Graph>& patterns) {
    for (const auto& p : patterns)
        if (contains_induced(g, p)) return false;
    return true;
}

} // namespace holes

#endif
