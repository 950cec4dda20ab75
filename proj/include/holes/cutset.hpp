#ifndef HOLES_CUTSET_HPP
#define HOLES_CUTSET_HPP

#include <optional>
#include <set>
#include <vector>

#include "holes/graph.hpp"

namespace holes {

struct CliqueCutset {
    std::vector<int> clique;   // possibly empty (disconnected graph)
    std::vector<int> side_a;   // nonempty, disjoint from clique and side_b
    std::vector<int> side_b;   // the rest; clique + side_a + side_b = V
};

namespace detail {

// Components of g restricted to the vertices in `avail`.
inline std::vector<std::vector<int>> components_within(const Graph& g, const Bitset& avail) {
    std::vector<std::vector<int>> out;
    Bitset seen(static_cast<std::size_t>(g.n()));
    avail.for_each([&](std::size_t s) {
        if (seen.test(s)) return;
        std::vector<int> comp;
        std::vector<int> stack{static_cast<int>(s)};
        seen.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            g.neighbors(v).for_each([&](std::size_t u) {
                if (avail.test(u) && !seen.test(u)) {
                    seen.set(u);
                    stack.push_back(static_cast<int>(u));
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    });
    return out;
}

// All minimal separators (Berry-Bordat-Cogis generation), capped.
inline std::set<std::vector<int>> minimal_separators(const Graph& g, std::size_t cap = 200000) {
    std::set<std::vector<int>> seps;
    std::vector<std::vector<int>> queue;
    auto add_from = [&](const Bitset& removed) {
        for (const auto& comp : components_within(g, minus(g.all_vertices(), removed))) {
            Bitset cb = make_set(static_cast<std::size_t>(g.n()), comp);
            Bitset nb(static_cast<std::size_t>(g.n()));
            for (int v : comp) nb |= g.neighbors(v);
            nb.subtract(cb);
            auto sep = nb.to_vector();
            if (!sep.empty() && seps.insert(sep).second) queue.push_back(sep);
        }
    };
    for (int v = 0; v < g.n(); ++v) add_from(g.closed_neighbors(v));
    while (!queue.empty() && seps.size() < cap) {
        auto s = queue.back();
        queue.pop_back();
        for (int x : s) {
            Bitset removed = make_set(static_cast<std::size_t>(g.n()), s);
            removed |= g.closed_neighbors(x);
            add_from(removed);
        }
    }
    return seps;
}

} // namespace detail

// A clique (possibly empty) whose removal disconnects g, with a 2-way
// component split, or absent. Every cutset contains a minimal separator,
// so scanning minimal separators for clique-ness is complete.
inline std::optional<CliqueCutset> clique_cutset(const Graph& g) {
    if (g.n() <= 1) return std::nullopt;
    auto split_by = [&](const std::vector<int>& k) -> CliqueCutset {
        Bitset kb = make_set(static_cast<std::size_t>(g.n()), k);
        auto comps = detail::components_within(g, minus(g.all_vertices(), kb));
        CliqueCutset out;
        out.clique = k;
        out.side_a = comps[0];
        for (std::size_t i = 1; i < comps.size(); ++i)
            out.side_b.insert(out.side_b.end(), comps[i].begin(), comps[i].end());
        std::sort(out.side_b.begin(), out.side_b.end());
        return out;
    };
    if (!is_connected(g)) return split_by({});
    std::optional<std::vector<int>> best;
    for (const auto& s : detail::minimal_separators(g))
        if (is_clique(g, make_set(static_cast<std::size_t>(g.n()), s)))
            if (!best || s < *best) best = s;
    if (!best) return std::nullopt;
    return split_by(*best);
}

} // namespace holes

#endif
