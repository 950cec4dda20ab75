// Blowups of twinless templates: edge classification (solid / flat /
// optional), staircase-parameterized construction, verification of the
// blowup and preblowup condition systems, and normalization of a
// preblowup into a full blowup witness.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holes/graph.hpp"
#include "holes/hole_enum.hpp"
#include "holes/subgraphs.hpp"
#include "holes/templates.hpp"

namespace holes {

// ---------------------------------------------------------------------------
// Edge classification
// ---------------------------------------------------------------------------

enum class EdgeTag { Flat, Optional, Solid };

inline std::string to_string(EdgeTag t) {
    switch (t) {
        case EdgeTag::Flat: return "flat";
        case EdgeTag::Optional: return "optional";
        default: return "solid";
    }
}

// Tags every edge of the template relative to a fixed partition.  The
// status of an edge depends on the partition, so the classification
// stores nothing but the tags and must not outlive it.
struct EdgeClassification {
    std::map<std::pair<int, int>, EdgeTag> tags;

    EdgeTag tag(int u, int v) const {
        auto it = tags.find(std::minmax(u, v));
        if (it == tags.end()) throw std::out_of_range("not an edge of the template");
        return it->second;
    }
};

// Flat: an endpoint lies in I.  Optional: one endpoint is x in B (or
// B') and the other is a vertex of H_x isolated in G[H_x].  Solid:
// everything else.
inline EdgeClassification classify_edges(const Graph& g, const TemplatePartition& p) {
    const auto n = static_cast<std::size_t>(g.n());
    Bitset iset = make_set(n, p.I);
    EdgeClassification out;

    // Mark the optional pairs from each hyperedge vertex's H set.
    std::set<std::pair<int, int>> optional_pairs;
    for (const auto* hm : {&p.hmap, &p.hmapp}) {
        for (const auto& [x, hx] : *hm) {
            Bitset hset = make_set(n, hx);
            for (int u : hx) {
                if ((g.neighbors(u) & hset).any()) continue;  // not isolated in G[H_x]
                if (g.has_edge(u, x)) optional_pairs.insert(std::minmax(u, x));
            }
        }
    }

    for (int u = 0; u < g.n(); ++u)
        g.neighbors(u).for_each([&](std::size_t vs) {
            int v = static_cast<int>(vs);
            if (v <= u) return;
            EdgeTag t = EdgeTag::Solid;
            if (iset.test(static_cast<std::size_t>(u)) || iset.test(vs))
                t = EdgeTag::Flat;
            else if (optional_pairs.count({u, v}))
                t = EdgeTag::Optional;
            out.tags[{u, v}] = t;
        });
    return out;
}

// ---------------------------------------------------------------------------
// Blowup specification and mapping
// ---------------------------------------------------------------------------

// Per-vertex clique sizes plus, for each template edge, a "staircase":
// a nondecreasing vector over the ranks of the lower endpoint's clique
// giving how many of the topmost vertices of the other clique each rank
// sees.  Absent edges default to complete cliques.  The original vertex
// is always the top rank of its clique.
struct BlowupSpec {
    std::vector<int> sizes;
    std::map<std::pair<int, int>, std::vector<int>> stairs;

    int size_of(int u) const { return sizes[static_cast<std::size_t>(u)]; }

    // Adjacency between rank i of K_u and rank j of K_v (0-based ranks,
    // top = size-1), for a template edge uv.
    bool adjacent(int u, int i, int v, int j) const {
        if (u > v) {
            std::swap(u, v);
            std::swap(i, j);
        }
        auto it = stairs.find({u, v});
        if (it == stairs.end()) return true;  // default: complete
        return it->second[static_cast<std::size_t>(i)] >= size_of(v) - j;
    }
};

// For each blown vertex, its template vertex and rank; per template
// vertex, the blown clique in ascending rank order (top last).  The
// partition the blowup was taken against rides along, because edge
// status is only meaningful relative to it.
struct BlowupMapping {
    std::vector<int> origin;  // blown vertex -> template vertex
    std::vector<int> rank;    // blown vertex -> 0-based rank in its clique
    std::vector<std::vector<int>> cliques;
    TemplatePartition part;

    int top(int u) const { return cliques[static_cast<std::size_t>(u)].back(); }
};

struct BlowupBuild {
    Graph graph;
    BlowupMapping mapping;
};

namespace detail {

inline Bitset closed_nbhd(const Graph& g, int v) {
    Bitset b = g.neighbors(v);
    b.set(static_cast<std::size_t>(v));
    return b;
}

// Strictly increasing H-set pairs (y, x) with H_y a proper subset of
// H_x, both optional at u; used by the cascade condition.
inline std::vector<std::pair<int, int>>
cascade_pairs(const Graph& g, const std::map<int, std::vector<int>>& hm, int u) {
    std::vector<int> opts;
    const auto n = static_cast<std::size_t>(g.n());
    for (const auto& [x, hx] : hm) {
        if (!g.has_edge(u, x)) continue;
        Bitset hset = make_set(n, hx);
        if (!hset.test(static_cast<std::size_t>(u))) continue;
        if ((g.neighbors(u) & hset).any()) continue;
        opts.push_back(x);
    }
    std::vector<std::pair<int, int>> out;
    for (int y : opts)
        for (int x : opts) {
            if (x == y) continue;
            const auto& hy = hm.at(y);
            const auto& hx = hm.at(x);
            if (hy.size() >= hx.size()) continue;
            if (std::includes(hx.begin(), hx.end(), hy.begin(), hy.end()))
                out.emplace_back(y, x);
        }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Verification of the eight blowup conditions
// ---------------------------------------------------------------------------

inline std::vector<std::string> verify_blowup(const Graph& gstar, const Graph& g,
                                              const TemplatePartition& p,
                                              const BlowupMapping& m) {
    std::vector<std::string> out;
    auto fail = [&](const std::string& s) { out.push_back(s); };
    const auto ns = static_cast<std::size_t>(gstar.n());

    if (m.origin.size() != ns || m.rank.size() != ns ||
        m.cliques.size() != static_cast<std::size_t>(g.n())) {
        fail("condition (1): mapping does not cover the blown graph");
        return out;
    }
    std::vector<int> seen(ns, 0);
    for (int u = 0; u < g.n(); ++u) {
        const auto& k = m.cliques[static_cast<std::size_t>(u)];
        if (k.empty()) {
            fail("condition (1): vertex " + std::to_string(u) + " has an empty clique");
            return out;
        }
        for (std::size_t r = 0; r < k.size(); ++r) {
            int x = k[r];
            ++seen[static_cast<std::size_t>(x)];
            if (m.origin[static_cast<std::size_t>(x)] != u ||
                m.rank[static_cast<std::size_t>(x)] != static_cast<int>(r))
                fail("condition (1): inconsistent origin/rank for blown vertex " +
                     std::to_string(x));
        }
        for (std::size_t i = 0; i < k.size(); ++i)
            for (std::size_t j = i + 1; j < k.size(); ++j)
                if (!gstar.has_edge(k[i], k[j]))
                    fail("condition (1): set blown from vertex " + std::to_string(u) +
                         " is not a clique");
    }
    for (std::size_t x = 0; x < ns; ++x)
        if (seen[x] != 1) {
            fail("condition (1): cliques do not partition the blown vertex set");
            return out;
        }

    // The template embeds as the tops of the cliques.
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v) != gstar.has_edge(m.top(u), m.top(v)))
                fail("condition (1): template is not an induced subgraph at " +
                     std::to_string(u) + "," + std::to_string(v));

    // (2) nesting of closed neighborhoods along each clique.
    for (int u = 0; u < g.n(); ++u) {
        const auto& k = m.cliques[static_cast<std::size_t>(u)];
        for (std::size_t r = 0; r + 1 < k.size(); ++r)
            if (!detail::closed_nbhd(gstar, k[r]).is_subset_of(
                    detail::closed_nbhd(gstar, k[r + 1])))
                fail("condition (2): clique of vertex " + std::to_string(u) +
                     " is not neighborhood-nested at rank " + std::to_string(r + 1));
    }

    // (3) nonadjacent template vertices have anticomplete cliques.
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) continue;
            for (int a : m.cliques[static_cast<std::size_t>(u)])
                for (int b : m.cliques[static_cast<std::size_t>(v)])
                    if (gstar.has_edge(a, b))
                        fail("condition (3): cliques of nonadjacent vertices " +
                             std::to_string(u) + " and " + std::to_string(v) +
                             " are not anticomplete");
        }

    EdgeClassification cls = classify_edges(g, p);
    Bitset bset = make_set(static_cast<std::size_t>(g.n()), p.B);
    Bitset bpset = make_set(static_cast<std::size_t>(g.n()), p.Bp);
    auto complete_to = [&](int x, int v) {
        for (int b : m.cliques[static_cast<std::size_t>(v)])
            if (b != x && !gstar.has_edge(x, b)) return false;
        return true;
    };
    for (const auto& [uv, tag] : cls.tags) {
        auto [u, v] = uv;
        switch (tag) {
            case EdgeTag::Solid:
                for (int a : m.cliques[static_cast<std::size_t>(u)])
                    if (!complete_to(a, v)) {
                        fail("condition (4): solid edge " + std::to_string(u) + "," +
                             std::to_string(v) + " without complete cliques");
                        break;
                    }
                break;
            case EdgeTag::Flat:
                if (!complete_to(m.top(u), v) || !complete_to(m.top(v), u))
                    fail("condition (5): flat edge " + std::to_string(u) + "," +
                         std::to_string(v) + " with a top not complete to the other clique");
                break;
            case EdgeTag::Optional: {
                int x = (bset.test(static_cast<std::size_t>(u)) ||
                         bpset.test(static_cast<std::size_t>(u)))
                            ? u
                            : v;
                int a = x == u ? v : u;
                if (!complete_to(m.top(a), x))
                    fail("condition (6): optional edge " + std::to_string(a) + "," +
                         std::to_string(x) + " with the base vertex not complete to K_x");
                break;
            }
        }
    }

    // (7) cascade along nested optional H sets.
    for (const auto* hm : {&p.hmap, &p.hmapp}) {
        const auto& base = (hm == &p.hmap) ? p.A : p.Ap;
        for (int u : base)
            for (auto [y, x] : detail::cascade_pairs(g, *hm, u)) {
                const auto& ky = m.cliques[static_cast<std::size_t>(y)];
                for (int us : m.cliques[static_cast<std::size_t>(u)]) {
                    bool touches_y = false;
                    for (int ys : ky)
                        if (gstar.has_edge(us, ys)) touches_y = true;
                    if (touches_y && !complete_to(us, x))
                        fail("condition (7): copy of vertex " + std::to_string(u) +
                             " meets the clique of " + std::to_string(y) +
                             " but is not complete to the clique of " + std::to_string(x));
                }
            }
    }

    // (8) the universal witnesses stay universal on their blown sides.
    auto side_universal = [&](int w, const std::vector<int>& side, const char* who) {
        int wstar = m.top(w);
        for (int u : side)
            for (int b : m.cliques[static_cast<std::size_t>(u)])
                if (b != wstar && !gstar.has_edge(wstar, b)) {
                    fail(std::string("condition (8): ") + who +
                         " is not universal on its blown side");
                    return;
                }
    };
    if (p.w >= 0) side_universal(p.w, p.a_union_b(), "w");
    if (p.wp >= 0) side_universal(p.wp, p.ap_union_bp(), "w'");
    return out;
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

inline BlowupBuild build_blowup(const Graph& g, const TemplatePartition& p,
                                const BlowupSpec& spec) {
    if (!is_twinless(g)) throw std::invalid_argument("template must be twinless");
    bool proper = p.parity == Parity::Odd ? is_proper_odd(g, p) : is_proper_even(g, p);
    if (!proper) throw std::invalid_argument("partition must be proper");
    if (spec.sizes.size() != static_cast<std::size_t>(g.n()))
        throw std::invalid_argument("condition (1): one clique size per template vertex required");
    for (int k : spec.sizes)
        if (k < 1) throw std::invalid_argument("condition (1): clique sizes must be at least 1");
    for (const auto& [uv, st] : spec.stairs) {
        auto [u, v] = uv;
        if (u >= v || v >= g.n() || u < 0)
            throw std::invalid_argument("condition (3): staircase on an invalid vertex pair");
        if (!g.has_edge(u, v))
            throw std::invalid_argument("condition (3): staircase on a template non-edge");
        if (st.size() != static_cast<std::size_t>(spec.size_of(u)))
            throw std::invalid_argument("condition (2): staircase length must match the clique size");
        for (std::size_t i = 0; i < st.size(); ++i) {
            if (st[i] < 0 || st[i] > spec.size_of(v))
                throw std::invalid_argument("condition (2): staircase entry out of range");
            if (i > 0 && st[i] < st[i - 1])
                throw std::invalid_argument("condition (2): staircase must be nondecreasing");
        }
    }

    // Lay the cliques out in template-vertex order, top rank last, so
    // that the identity specification reproduces the template verbatim.
    BlowupMapping m;
    m.part = p;
    m.cliques.resize(static_cast<std::size_t>(g.n()));
    int total = 0;
    for (int u = 0; u < g.n(); ++u) total += spec.size_of(u);
    m.origin.resize(static_cast<std::size_t>(total));
    m.rank.resize(static_cast<std::size_t>(total));
    Graph gstar(total);
    int next = 0;
    for (int u = 0; u < g.n(); ++u) {
        for (int r = 0; r < spec.size_of(u); ++r, ++next) {
            m.origin[static_cast<std::size_t>(next)] = u;
            m.rank[static_cast<std::size_t>(next)] = r;
            m.cliques[static_cast<std::size_t>(u)].push_back(next);
        }
        const auto& k = m.cliques[static_cast<std::size_t>(u)];
        for (std::size_t i = 0; i < k.size(); ++i)
            for (std::size_t j = i + 1; j < k.size(); ++j) gstar.add_edge(k[i], k[j]);
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (!g.has_edge(u, v)) continue;
            for (int i = 0; i < spec.size_of(u); ++i)
                for (int j = 0; j < spec.size_of(v); ++j)
                    if (spec.adjacent(u, i, v, j))
                        gstar.add_edge(m.cliques[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)],
                                       m.cliques[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)]);
        }

    std::vector<std::string> labels;
    for (int x = 0; x < total; ++x) {
        int u = m.origin[static_cast<std::size_t>(x)];
        std::string base = g.has_labels() ? g.labels()[static_cast<std::size_t>(u)]
                                          : "v" + std::to_string(u);
        int r = m.rank[static_cast<std::size_t>(x)];
        labels.push_back(r + 1 == spec.size_of(u) ? base
                                                  : base + "*" + std::to_string(r + 1));
    }
    gstar.set_labels(std::move(labels));

    auto violations = verify_blowup(gstar, g, p, m);
    if (!violations.empty()) throw std::invalid_argument(violations.front());
    return {std::move(gstar), std::move(m)};
}

// Random valid specification: random clique sizes up to a vertex-count
// target, full staircases on solid edges, random monotone staircases on
// flat and optional edges, then constraint repair (tops, universal
// witnesses, cascade fixpoint).
inline BlowupSpec random_blowup_spec(const Graph& g, const TemplatePartition& p,
                                     std::mt19937_64& rng, int max_total) {
    BlowupSpec spec;
    spec.sizes.assign(static_cast<std::size_t>(g.n()), 1);
    int total = g.n();
    while (total < max_total && (rng() % 4) != 0) {
        spec.sizes[rng() % spec.sizes.size()] += 1;
        ++total;
    }

    EdgeClassification cls = classify_edges(g, p);
    auto random_stair = [&](int ku, int kv, int lo, bool top_full) {
        std::vector<int> st(static_cast<std::size_t>(ku));
        int cur = lo + static_cast<int>(rng() % static_cast<std::size_t>(kv - lo + 1));
        for (auto& e : st) {
            e = cur;
            if (cur < kv && (rng() & 1)) cur += static_cast<int>(rng() % static_cast<std::size_t>(kv - cur + 1));
        }
        if (top_full) st.back() = kv;
        return st;
    };
    Bitset bset = make_set(static_cast<std::size_t>(g.n()), p.B);
    Bitset bpset = make_set(static_cast<std::size_t>(g.n()), p.Bp);
    for (const auto& [uv, tag] : cls.tags) {
        auto [u, v] = uv;
        int ku = spec.size_of(u), kv = spec.size_of(v);
        if (tag == EdgeTag::Solid || (ku == 1 && kv == 1)) continue;
        if (tag == EdgeTag::Flat) {
            // Lower ranks keep at least the top neighbor on the far side.
            spec.stairs[{u, v}] = random_stair(ku, kv, 1, true);
        } else {
            bool u_is_base = !(bset.test(static_cast<std::size_t>(u)) ||
                               bpset.test(static_cast<std::size_t>(u)));
            // The base (A-side) top must be complete to the hyperedge
            // vertex's clique; seen from the stored orientation that is
            // either a full top row or an all-positive staircase.
            spec.stairs[{u, v}] =
                u_is_base ? random_stair(ku, kv, 0, true) : random_stair(ku, kv, 1, false);
        }
    }

    // Raise rank i of K_a to be complete to K_b.
    auto ensure_row_full = [&](int a, int i, int b) {
        int lo = std::min(a, b), hi = std::max(a, b);
        auto it = spec.stairs.find({lo, hi});
        if (it == spec.stairs.end()) return;  // already complete by default
        auto& st = it->second;
        if (a == lo) {
            for (std::size_t r = static_cast<std::size_t>(i); r < st.size(); ++r)
                st[r] = spec.size_of(b);
        } else {
            int need = spec.size_of(a) - i;
            for (auto& e : st) e = std::max(e, need);
        }
    };

    // Universal witnesses stay complete to their whole blown sides.
    for (auto [w, side] : {std::pair{p.w, p.a_union_b()}, {p.wp, p.ap_union_bp()}}) {
        if (w < 0) continue;
        for (int u : side)
            if (u != w && g.has_edge(u, w)) ensure_row_full(w, spec.size_of(w) - 1, u);
    }

    // Cascade fixpoint: any copy of u meeting K_y must be complete to
    // K_x whenever H_y nests strictly inside H_x.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto* hm : {&p.hmap, &p.hmapp}) {
            const auto& base = (hm == &p.hmap) ? p.A : p.Ap;
            for (int u : base)
                for (auto [y, x] : detail::cascade_pairs(g, *hm, u))
                    for (int i = 0; i < spec.size_of(u); ++i) {
                        bool touches_y = false;
                        for (int j = 0; j < spec.size_of(y); ++j)
                            if (spec.adjacent(u, i, y, j)) touches_y = true;
                        if (!touches_y) continue;
                        for (int j = 0; j < spec.size_of(x); ++j)
                            if (!spec.adjacent(u, i, x, j)) {
                                ensure_row_full(u, i, x);
                                changed = true;
                            }
                    }
        }
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Preblowups
// ---------------------------------------------------------------------------

// Cliques for the A, A', I template vertices plus loose pools B*, B'*
// that contain the template's B and B'.  embed identifies each template
// vertex inside the blown graph.
struct PreblowupMapping {
    std::vector<int> embed;                // template vertex -> blown vertex
    std::vector<std::vector<int>> cliques; // indexed by template vertex; empty on B, B'
    std::vector<int> bstar, bpstar;
};

// The identity preblowup of a template over itself.
inline PreblowupMapping identity_preblowup(const Graph& g, const TemplatePartition& p) {
    PreblowupMapping m;
    m.embed.resize(static_cast<std::size_t>(g.n()));
    m.cliques.resize(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) m.embed[static_cast<std::size_t>(v)] = v;
    for (int v : p.A) m.cliques[static_cast<std::size_t>(v)] = {v};
    for (int v : p.Ap) m.cliques[static_cast<std::size_t>(v)] = {v};
    for (int v : p.I) m.cliques[static_cast<std::size_t>(v)] = {v};
    m.bstar = p.B;
    m.bpstar = p.Bp;
    return m;
}

// View a full blowup as a preblowup: clique pools on A, A', I and the
// unions of the B-side cliques as the loose pools.
inline PreblowupMapping preblowup_of_blowup(const BlowupMapping& m) {
    PreblowupMapping out;
    out.embed.resize(m.cliques.size());
    out.cliques.resize(m.cliques.size());
    const TemplatePartition& p = m.part;
    for (std::size_t u = 0; u < m.cliques.size(); ++u)
        out.embed[u] = m.cliques[u].back();
    for (const auto& part : {p.A, p.Ap, p.I})
        for (int u : part) out.cliques[static_cast<std::size_t>(u)] = m.cliques[static_cast<std::size_t>(u)];
    for (int x : p.B)
        for (int v : m.cliques[static_cast<std::size_t>(x)]) out.bstar.push_back(v);
    for (int x : p.Bp)
        for (int v : m.cliques[static_cast<std::size_t>(x)]) out.bpstar.push_back(v);
    return out;
}

inline std::vector<std::string> verify_preblowup(const Graph& gstar, const Graph& g,
                                                 const TemplatePartition& p,
                                                 const PreblowupMapping& m) {
    std::vector<std::string> out;
    auto fail = [&](const std::string& s) { out.push_back(s); };
    const auto ns = static_cast<std::size_t>(gstar.n());
    if (m.embed.size() != static_cast<std::size_t>(g.n()) ||
        m.cliques.size() != static_cast<std::size_t>(g.n())) {
        fail("mapping does not cover the template");
        return out;
    }

    std::vector<int> seen(ns, 0);
    Bitset astar(ns), apstar(ns), bstar(ns), bpstar(ns);
    for (int u : p.A)
        for (int v : m.cliques[static_cast<std::size_t>(u)]) astar.set(static_cast<std::size_t>(v));
    for (int u : p.Ap)
        for (int v : m.cliques[static_cast<std::size_t>(u)]) apstar.set(static_cast<std::size_t>(v));
    for (int v : m.bstar) bstar.set(static_cast<std::size_t>(v));
    for (int v : m.bpstar) bpstar.set(static_cast<std::size_t>(v));
    for (const auto& part : {p.A, p.Ap, p.I})
        for (int u : part) {
            const auto& k = m.cliques[static_cast<std::size_t>(u)];
            if (k.empty() || std::find(k.begin(), k.end(), m.embed[static_cast<std::size_t>(u)]) == k.end()) {
                fail("clique of vertex " + std::to_string(u) + " does not contain its template vertex");
                return out;
            }
            for (int v : k) ++seen[static_cast<std::size_t>(v)];
            for (std::size_t i = 0; i < k.size(); ++i)
                for (std::size_t j = i + 1; j < k.size(); ++j)
                    if (!gstar.has_edge(k[i], k[j]))
                        fail("set blown from vertex " + std::to_string(u) + " is not a clique");
        }
    for (int v : m.bstar) ++seen[static_cast<std::size_t>(v)];
    for (int v : m.bpstar) ++seen[static_cast<std::size_t>(v)];
    for (std::size_t v = 0; v < ns; ++v)
        if (seen[v] != 1) {
            fail("mapping does not partition the blown vertex set");
            return out;
        }
    for (int x : p.B)
        if (!bstar.test(static_cast<std::size_t>(m.embed[static_cast<std::size_t>(x)])))
            fail("pool B* does not contain the template's B");
    for (int x : p.Bp)
        if (!bpstar.test(static_cast<std::size_t>(m.embed[static_cast<std::size_t>(x)])))
            fail("pool B'* does not contain the template's B'");
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v) != gstar.has_edge(m.embed[static_cast<std::size_t>(u)],
                                                   m.embed[static_cast<std::size_t>(v)])) {
                fail("template is not an induced subgraph of the blown graph");
                return out;
            }
    if (!out.empty()) return out;

    // Path neighbor of each base vertex (its unique neighbor in I).
    auto path_index = [&](const std::vector<int>& base, int u) {
        for (std::size_t i = 0; i < base.size(); ++i)
            if (base[i] == u) return i;
        return base.size();
    };

    auto check_side = [&](const std::vector<int>& A, const std::vector<int>& B,
                          const Bitset& aside, const Bitset& bside,
                          const std::vector<int>& bpool, int w, bool front,
                          const std::string& prime) {
        for (int u : A) {
            std::size_t idx = path_index(front ? p.A : p.Ap, u);
            const auto& path = p.paths[idx];
            int uplus = front ? path[1] : path[path.size() - 2];
            Bitset allowed = aside | bside;
            for (int v : m.cliques[static_cast<std::size_t>(uplus)])
                allowed.set(static_cast<std::size_t>(v));
            const auto& ku = m.cliques[static_cast<std::size_t>(u)];
            Bitset kuset = make_set(ns, ku);
            for (int us : ku) {
                if (minus(minus(gstar.neighbors(us), kuset), allowed).any())
                    fail("pb:A" + prime + ": clique of vertex " + std::to_string(u) +
                         " has a neighbor outside its side and its path clique");
                // Every copy sees exactly the closed template A-neighborhood.
                for (int a : A) {
                    int at = m.embed[static_cast<std::size_t>(a)];
                    bool want = a == u ? us != at : g.has_edge(u, a);
                    if (at == us) continue;
                    if (gstar.has_edge(us, at) != want) {
                        fail("pb:Acomp" + prime + ": copy of vertex " + std::to_string(u) +
                             " does not see exactly the closed neighborhood of " +
                             std::to_string(u) + " in the base");
                        break;
                    }
                }
                bool has_plus = false;
                for (int v : m.cliques[static_cast<std::size_t>(uplus)])
                    if (gstar.has_edge(us, v)) has_plus = true;
                if (!has_plus)
                    fail("pb:AI" + prime + ": copy of vertex " + std::to_string(u) +
                         " has no neighbor in the next path clique");
            }
        }

        for (int us : bpool) {
            if (minus(gstar.neighbors(us), aside | bside).any())
                fail("pb:B" + prime + ": pool vertex " + std::to_string(us) +
                     " has a neighbor outside its side");
            bool found = false;
            for (int a : A) {
                if (found) break;
                for (int b : A) {
                    if (a >= b || g.has_edge(a, b)) continue;
                    bool na = false, nb = false;
                    for (int v : m.cliques[static_cast<std::size_t>(a)])
                        if (gstar.has_edge(us, v)) na = true;
                    for (int v : m.cliques[static_cast<std::size_t>(b)])
                        if (gstar.has_edge(us, v)) nb = true;
                    if (na && nb) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found)
                fail("pb:BAN" + prime + ": pool vertex " + std::to_string(us) +
                     " has no neighbors in two nonadjacent base cliques");
        }
        Bitset bvec = make_set(static_cast<std::size_t>(g.n()), B);
        if (w >= 0 && bvec.test(static_cast<std::size_t>(w))) {
            bool found = false;
            for (int us : bpool) {
                bool complete = true;
                aside.for_each([&](std::size_t v) {
                    if (!gstar.has_edge(us, static_cast<int>(v))) complete = false;
                });
                if (complete) {
                    found = true;
                    break;
                }
            }
            if (!found)
                fail("pb:Bw" + prime + ": no pool vertex is complete to the blown base side");
        }
    };
    check_side(p.A, p.B, astar, bstar, m.bstar, p.w, true, "");
    check_side(p.Ap, p.Bp, apstar, bpstar, m.bpstar, p.wp, false, "'");

    for (int u : p.I) {
        std::vector<int> nbrs = g.neighbors(u).to_vector();
        if (nbrs.size() != 2) continue;  // template validation guards this
        Bitset allowed(ns);
        for (int a : nbrs)
            for (int v : m.cliques[static_cast<std::size_t>(a)]) allowed.set(static_cast<std::size_t>(v));
        const auto& ku = m.cliques[static_cast<std::size_t>(u)];
        Bitset kuset = make_set(ns, ku);
        for (int us : ku) {
            if (minus(minus(gstar.neighbors(us), kuset), allowed).any())
                fail("pb:I: clique of interior vertex " + std::to_string(u) +
                     " has a neighbor outside its two path cliques");
            for (int a : nbrs) {
                bool hit = false;
                for (int v : m.cliques[static_cast<std::size_t>(a)])
                    if (gstar.has_edge(us, v)) hit = true;
                if (!hit)
                    fail("pb:II: copy of interior vertex " + std::to_string(u) +
                         " misses the clique of neighbor " + std::to_string(a));
            }
        }
    }
    return out;
}

inline int domination_score(const Graph& gstar, const Graph&, const TemplatePartition& p,
                            const PreblowupMapping& m) {
    int score = 0;
    for (const auto& part : {p.A, p.Ap, p.I})
        for (int u : part) {
            Bitset top = detail::closed_nbhd(gstar, m.embed[static_cast<std::size_t>(u)]);
            for (int us : m.cliques[static_cast<std::size_t>(u)])
                if (detail::closed_nbhd(gstar, us).is_subset_of(top)) ++score;
        }
    return score;
}

struct NormalizedBlowup {
    Graph tmpl;               // the recovered twinless template (local ids)
    TemplatePartition part;   // its proper partition
    BlowupMapping mapping;    // blown-vertex -> template-local-vertex cliques
    std::vector<int> to_parent;  // template local id -> blown graph id
};

// Normalization skeleton of the preblowup-to-blowup lemma: swap each
// clique's representative up to a dominating one, split the B pools
// into equivalence classes by base neighborhood, keep the maximal
// representative of each class, and re-derive the template through the
// pretemplate reconstruction.  Any contradiction along the way signals
// a violated precondition and aborts.
inline NormalizedBlowup normalize_preblowup(const Graph& gstar, const Graph& g,
                                            const TemplatePartition& p,
                                            const PreblowupMapping& m) {
    const int ell = p.ell;
    auto spectrum = hole_spectrum(gstar, false);
    int want = p.parity == Parity::Odd ? 2 * ell + 1 : 2 * ell;
    if (spectrum.kind == SpectrumKind::Mixed ||
        (spectrum.kind == SpectrumKind::Uniform && spectrum.uniform_length() != want))
        throw std::invalid_argument("spectrum: holes must all have length " +
                                    std::to_string(want));
    {
        auto bad = verify_preblowup(gstar, g, p, m);
        if (!bad.empty()) throw std::invalid_argument("preblowup: " + bad.front());
    }
    const auto ns = static_cast<std::size_t>(gstar.n());

    // Representative swaps: inside each clique, climb to a copy whose
    // closed neighborhood strictly dominates the current representative.
    std::vector<int> rep = m.embed;
    bool changed = true;
    int guard = gstar.n() * gstar.n() + 8;
    while (changed && guard-- > 0) {
        changed = false;
        for (const auto& part : {p.A, p.Ap, p.I})
            for (int u : part) {
                Bitset cur = detail::closed_nbhd(gstar, rep[static_cast<std::size_t>(u)]);
                for (int us : m.cliques[static_cast<std::size_t>(u)]) {
                    Bitset cand = detail::closed_nbhd(gstar, us);
                    if (cur.is_subset_of(cand) && cand != cur) {
                        rep[static_cast<std::size_t>(u)] = us;
                        cur = cand;
                        changed = true;
                    }
                }
            }
    }

    // Order each clique by neighborhood inclusion; the representative
    // must now dominate every copy.
    std::vector<std::vector<int>> ordered(static_cast<std::size_t>(g.n()));
    for (const auto& part : {p.A, p.Ap, p.I})
        for (int u : part) {
            auto k = m.cliques[static_cast<std::size_t>(u)];
            std::vector<int> out;
            std::vector<char> used(k.size(), 0);
            for (std::size_t step = 0; step < k.size(); ++step) {
                // Selection by domination avoids relying on a total order.
                std::size_t pick = k.size();
                for (std::size_t i = 0; i < k.size(); ++i) {
                    if (used[i]) continue;
                    bool minimal = true;
                    for (std::size_t j = 0; j < k.size(); ++j) {
                        if (i == j || used[j]) continue;
                        if (detail::closed_nbhd(gstar, k[j]).is_subset_of(
                                detail::closed_nbhd(gstar, k[i])) &&
                            !detail::closed_nbhd(gstar, k[i]).is_subset_of(
                                detail::closed_nbhd(gstar, k[j]))) {
                            minimal = false;
                            break;
                        }
                    }
                    if (minimal) {
                        pick = i;
                        break;
                    }
                }
                used[pick] = 1;
                out.push_back(k[pick]);
            }
            for (std::size_t i = 0; i + 1 < out.size(); ++i)
                if (!detail::closed_nbhd(gstar, out[i]).is_subset_of(
                        detail::closed_nbhd(gstar, out[i + 1])))
                    throw std::runtime_error(
                        "normalization: clique of vertex " + std::to_string(u) +
                        " is not neighborhood-nested");
            if (out.back() != rep[static_cast<std::size_t>(u)]) {
                // The dominating representative must sit on top.
                auto it = std::find(out.begin(), out.end(), rep[static_cast<std::size_t>(u)]);
                std::rotate(it, it + 1, out.end());
                if (!detail::closed_nbhd(gstar, out[out.size() - 2])
                         .is_subset_of(detail::closed_nbhd(gstar, out.back())))
                    throw std::runtime_error(
                        "normalization: representative of vertex " + std::to_string(u) +
                        " does not dominate its clique");
            }
            ordered[static_cast<std::size_t>(u)] = out;
        }

    // Split each B pool into equivalence classes by neighborhood among
    // the base representatives, ordered inside by base-side inclusion.
    Bitset astar(ns), apstar(ns);
    for (int u : p.A)
        for (int v : m.cliques[static_cast<std::size_t>(u)]) astar.set(static_cast<std::size_t>(v));
    for (int u : p.Ap)
        for (int v : m.cliques[static_cast<std::size_t>(u)]) apstar.set(static_cast<std::size_t>(v));

    auto pool_classes = [&](const std::vector<int>& pool, const std::vector<int>& base,
                            const Bitset& side) {
        std::map<std::vector<int>, std::vector<int>> classes;
        for (int x : pool) {
            std::vector<int> key;
            for (int a : base)
                if (gstar.has_edge(x, rep[static_cast<std::size_t>(a)])) key.push_back(a);
            classes[key].push_back(x);
        }
        std::vector<std::vector<int>> out;
        for (auto& [key, members] : classes) {
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    if (!gstar.has_edge(members[i], members[j]))
                        throw std::runtime_error(
                            "normalization: equivalent pool vertices are not adjacent");
            std::sort(members.begin(), members.end(), [&](int x, int y) {
                return (gstar.neighbors(x) & side).count() < (gstar.neighbors(y) & side).count();
            });
            for (std::size_t i = 0; i + 1 < members.size(); ++i)
                if (!(gstar.neighbors(members[i]) & side)
                         .is_subset_of(gstar.neighbors(members[i + 1]) & side))
                    throw std::runtime_error(
                        "normalization: pool class is not nested by base neighborhoods");
            out.push_back(members);
        }
        return out;
    };
    auto bclasses = pool_classes(m.bstar, p.A, astar);
    auto bpclasses = pool_classes(m.bpstar, p.Ap, apstar);

    // Assemble the normalized template on the representatives plus the
    // maximal pool vertices, and re-derive its partition.
    std::vector<int> verts;
    for (const auto& part : {p.A, p.Ap, p.I})
        for (int u : part) verts.push_back(rep[static_cast<std::size_t>(u)]);
    for (const auto& c : bclasses) verts.push_back(c.back());
    for (const auto& c : bpclasses) verts.push_back(c.back());
    std::sort(verts.begin(), verts.end());
    auto sub = induced(gstar, verts);
    auto local = [&](int v) { return sub.to_local[static_cast<std::size_t>(v)]; };

    if (!is_twinless(sub.graph))
        throw std::runtime_error("normalization: recovered template is not twinless");

    TemplatePartition part;
    if (p.parity == Parity::Odd) {
        OddPretemplateCandidate cand;
        for (int u : p.A) cand.A.push_back(local(rep[static_cast<std::size_t>(u)]));
        for (int u : p.Ap) cand.Ap.push_back(local(rep[static_cast<std::size_t>(u)]));
        for (int u : p.I) cand.I.push_back(local(rep[static_cast<std::size_t>(u)]));
        for (const auto& c : bclasses) cand.B.push_back(local(c.back()));
        for (const auto& c : bpclasses) cand.Bp.push_back(local(c.back()));
        std::sort(cand.A.begin(), cand.A.end());
        std::sort(cand.Ap.begin(), cand.Ap.end());
        part = pretemplate_to_template(sub.graph, cand, ell);
    } else {
        EvenPretemplateCandidate cand;
        for (int i = 0; i < p.k + p.s; ++i) {
            int u = p.A[static_cast<std::size_t>(i)];
            int up = p.Ap[static_cast<std::size_t>(i)];
            if (i < p.k) {
                cand.AK.push_back(local(rep[static_cast<std::size_t>(u)]));
                cand.ApK.push_back(local(rep[static_cast<std::size_t>(up)]));
            } else {
                cand.AS.push_back(local(rep[static_cast<std::size_t>(u)]));
                cand.ApS.push_back(local(rep[static_cast<std::size_t>(up)]));
            }
        }
        for (int u : p.I) cand.I.push_back(local(rep[static_cast<std::size_t>(u)]));
        for (const auto& c : bclasses) cand.B.push_back(local(c.back()));
        for (const auto& c : bpclasses) cand.Bp.push_back(local(c.back()));
        part = even_pretemplate_to_template(sub.graph, cand, ell);
    }

    // Full blowup mapping onto the normalized template.
    BlowupMapping bm;
    bm.cliques.resize(static_cast<std::size_t>(sub.graph.n()));
    for (const auto& ppart : {p.A, p.Ap, p.I})
        for (int u : ppart)
            bm.cliques[static_cast<std::size_t>(local(rep[static_cast<std::size_t>(u)]))] =
                ordered[static_cast<std::size_t>(u)];
    for (const auto* cl : {&bclasses, &bpclasses})
        for (const auto& c : *cl) bm.cliques[static_cast<std::size_t>(local(c.back()))] = c;
    bm.origin.assign(ns, -1);
    bm.rank.assign(ns, -1);
    for (std::size_t u = 0; u < bm.cliques.size(); ++u)
        for (std::size_t r = 0; r < bm.cliques[u].size(); ++r) {
            bm.origin[static_cast<std::size_t>(bm.cliques[u][r])] = static_cast<int>(u);
            bm.rank[static_cast<std::size_t>(bm.cliques[u][r])] = static_cast<int>(r);
        }

    // The reconstruction picks a universal witness per side; if the
    // blowup's universality condition prefers a different one, try the
    // other candidates before giving up.
    std::vector<int> wcands, wpcands;
    for (int v : part.a_union_b())
        if (detail::is_universal_in(sub.graph, v, part.a_union_b())) wcands.push_back(v);
    for (int v : part.ap_union_bp())
        if (detail::is_universal_in(sub.graph, v, part.ap_union_bp())) wpcands.push_back(v);
    std::vector<std::string> last;
    for (int w : wcands)
        for (int wp : wpcands) {
            part.w = w;
            part.wp = wp;
            bm.part = part;
            last = verify_blowup(gstar, sub.graph, part, bm);
            if (last.empty())
                return {sub.graph, part, std::move(bm), sub.to_parent};
        }
    throw std::runtime_error("normalization: blowup conditions failed: " +
                             (last.empty() ? std::string("no universal witness") : last.front()));
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

inline std::string to_text(const BlowupSpec& spec) {
    std::ostringstream out;
    out << "blowup " << spec.sizes.size() << "\n";
    out << "sizes";
    for (int k : spec.sizes) out << ' ' << k;
    out << "\n";
    for (const auto& [uv, st] : spec.stairs) {
        out << "stairs " << uv.first << ' ' << uv.second;
        for (int e : st) out << ' ' << e;
        out << "\n";
    }
    return out.str();
}

inline BlowupSpec blowup_spec_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    std::size_t n = 0;
    if (!(in >> tag) || tag != "blowup" || !(in >> n))
        throw ParseError("expected 'blowup <n>' header");
    BlowupSpec spec;
    if (!(in >> tag) || tag != "sizes") throw ParseError("expected sizes line");
    spec.sizes.resize(n);
    for (auto& k : spec.sizes)
        if (!(in >> k) || k < 1) throw ParseError("invalid clique size");
    while (in >> tag) {
        if (tag != "stairs") throw ParseError("unexpected token: " + tag);
        int u = 0, v = 0;
        if (!(in >> u >> v) || u < 0 || v <= u || static_cast<std::size_t>(v) >= n)
            throw ParseError("invalid staircase vertex pair");
        std::vector<int> st(static_cast<std::size_t>(spec.sizes[static_cast<std::size_t>(u)]));
        for (auto& e : st)
            if (!(in >> e)) throw ParseError("truncated staircase");
        spec.stairs[{u, v}] = std::move(st);
    }
    return spec;
}

} // namespace holes
