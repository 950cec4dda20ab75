#ifndef HOLES_TEMPLATES_HPP
#define HOLES_TEMPLATES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "holes/classes.hpp"
#include "holes/graph.hpp"
#include "holes/hole_enum.hpp"
#include "holes/hypergraph.hpp"
#include "holes/io.hpp"

namespace holes {

enum class Parity { Odd, Even };

inline std::string to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

// A template partition. A and Ap ("A prime") are ordered in parallel:
// A[i] is linked to Ap[i] by paths[i], whose interior lies in I.
// For even templates, the first k positions of A form the clique side and the
// remaining s positions the stable side; odd templates use k = |A|, s = 0.
struct TemplatePartition {
    Parity parity = Parity::Odd;
    int ell = 0;
    int k = 0;
    int s = 0;
    std::vector<int> A, Ap;                 // ordered, |A| = |Ap| = k + s
    std::vector<int> B, Bp, I;              // sorted
    std::vector<std::vector<int>> paths;    // paths[i]: A[i] ... Ap[i]
    int w = -1, wp = -1;
    std::map<int, std::vector<int>> hmap;   // x in B  -> H_x  (vertices of A)
    std::map<int, std::vector<int>> hmapp;  // x in B' -> H'_x (vertices of A')

    std::vector<int> a_union_b() const {
        std::vector<int> out = A;
        out.insert(out.end(), B.begin(), B.end());
        return out;
    }
    std::vector<int> ap_union_bp() const {
        std::vector<int> out = Ap;
        out.insert(out.end(), Bp.begin(), Bp.end());
        return out;
    }
};

using OddPartition = TemplatePartition;
using EvenPartition = TemplatePartition;

struct TemplateBuild {
    Graph graph;
    TemplatePartition part;
};

// ---------------------------------------------------------------------------
// Small helpers
// ---------------------------------------------------------------------------

namespace detail {

inline Bitset set_of(std::size_t n, const std::vector<int>& vs) { return make_set(n, vs); }

// Closed neighborhood of a vertex set inside graph g.
inline std::vector<int> closed_neighborhood(const Graph& g, const std::vector<int>& xs) {
    Bitset out(static_cast<std::size_t>(g.n()));
    for (int x : xs) {
        out.set(static_cast<std::size_t>(x));
        out |= g.neighbors(x);
    }
    return out.to_vector();
}

inline bool is_universal_in(const Graph& g, int u, const std::vector<int>& within) {
    for (int v : within)
        if (v != u && !g.has_edge(u, v)) return false;
    return true;
}

// Smallest vertex of `within` universal in g[within], or -1.
inline int find_universal_in(const Graph& g, std::vector<int> within) {
    std::sort(within.begin(), within.end());
    for (int u : within)
        if (is_universal_in(g, u, within)) return u;
    return -1;
}

inline std::vector<int> isolated_in(const Graph& g, const std::vector<int>& within) {
    std::vector<int> out;
    for (int u : within) {
        bool iso = true;
        for (int v : within)
            if (v != u && g.has_edge(u, v)) { iso = false; break; }
        if (iso) out.push_back(u);
    }
    return out;
}

// All paths from `from` to a vertex of `targets` whose interior lies in
// `interior`. Simple DFS; the expansion budget guards degenerate inputs.
inline std::vector<std::vector<int>> paths_via_interior(const Graph& g, int from,
                                                        const Bitset& targets,
                                                        const Bitset& interior,
                                                        std::size_t budget = 100000) {
    std::vector<std::vector<int>> found;
    std::vector<int> path{from};
    Bitset used(static_cast<std::size_t>(g.n()));
    used.set(static_cast<std::size_t>(from));
    std::size_t steps = 0;
    auto rec = [&](auto&& self, int last) -> void {
        if (++steps > budget) throw BudgetExceeded("path enumeration budget exceeded");
        g.neighbors(last).for_each([&](std::size_t nx) {
            int v = static_cast<int>(nx);
            if (used.test(nx)) return;
            if (targets.test(nx)) {
                path.push_back(v);
                found.push_back(path);
                path.pop_back();
                return;
            }
            if (!interior.test(nx)) return;
            used.set(nx);
            path.push_back(v);
            self(self, v);
            path.pop_back();
            used.reset(nx);
        });
    };
    rec(rec, from);
    return found;
}

// True iff x lies in the interior of a path of g[allowed] with both ends in
// `targets`: equivalently, two paths from x to `targets` inside g[allowed]
// that are vertex-disjoint except at x (unit-capacity flow with node
// splitting).
inline bool interior_of_path_to(const Graph& g, const Bitset& allowed, int x,
                                const Bitset& targets) {
    const int n = g.n();
    // Node ids: 2v = v_in, 2v+1 = v_out, source = 2n, sink = 2n+1.
    const int src = 2 * n, snk = 2 * n + 1, nodes = 2 * n + 2;
    std::vector<std::map<int, int>> cap(static_cast<std::size_t>(nodes));
    auto add = [&](int a, int b, int c) { cap[static_cast<std::size_t>(a)][b] += c; cap[static_cast<std::size_t>(b)]; };
    for (int v = 0; v < n; ++v) {
        if (!allowed.test(static_cast<std::size_t>(v)) || v == x) continue;
        add(2 * v, 2 * v + 1, 1);
        if (targets.test(static_cast<std::size_t>(v))) add(2 * v + 1, snk, 1);
    }
    add(src, 2 * x, 2);
    add(2 * x, 2 * x + 1, 2);
    for (int u = 0; u < n; ++u) {
        if (!allowed.test(static_cast<std::size_t>(u))) continue;
        g.neighbors(u).for_each([&](std::size_t nv) {
            int v = static_cast<int>(nv);
            if (!allowed.test(nv)) return;
            add(2 * u + 1, 2 * v, 1);
        });
    }
    int flow = 0;
    while (flow < 2) {
        std::vector<int> prev(static_cast<std::size_t>(nodes), -1);
        std::vector<int> queue{src};
        prev[static_cast<std::size_t>(src)] = src;
        for (std::size_t qi = 0; qi < queue.size() && prev[static_cast<std::size_t>(snk)] < 0; ++qi) {
            int a = queue[qi];
            for (const auto& [b, c] : cap[static_cast<std::size_t>(a)]) {
                if (c <= 0 || prev[static_cast<std::size_t>(b)] >= 0) continue;
                prev[static_cast<std::size_t>(b)] = a;
                queue.push_back(b);
            }
        }
        if (prev[static_cast<std::size_t>(snk)] < 0) break;
        for (int b = snk; b != src; ) {
            int a = prev[static_cast<std::size_t>(b)];
            --cap[static_cast<std::size_t>(a)][b];
            ++cap[static_cast<std::size_t>(b)][a];
            b = a;
        }
        ++flow;
    }
    return flow >= 2;
}

inline std::string vertex_list(const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

} // namespace detail

// ---------------------------------------------------------------------------
// Odd template specs and construction
// ---------------------------------------------------------------------------

// Recipe for an odd template: a threshold base graph j on k >= 3 vertices, a
// laminar hypergraph h on the same ground set whose hyperedges are modules of
// j with at least 2 vertices, one of which is the full vertex set, and the
// half path length ell >= 2.
struct OddTemplateSpec {
    int ell = 3;
    Graph j;
    Hypergraph h;
};

inline std::vector<std::string> validate_odd_spec(const OddTemplateSpec& spec) {
    std::vector<std::string> out;
    if (spec.ell < 2) out.push_back("ell must be at least 2");
    const int k = spec.j.n();
    if (k < 3) out.push_back("base graph must have at least 3 vertices");
    if (spec.h.n != k) out.push_back("hypergraph ground set must match the base graph");
    if (!spec.h.valid()) out.push_back("hypergraph is invalid");
    if (!recognize_threshold(spec.j)) out.push_back("base graph is not a threshold graph");
    if (!is_laminar(spec.h)) out.push_back("hypergraph is not laminar");
    bool full = false;
    for (const auto& e : spec.h.edges) {
        if (spec.h.n == k && static_cast<int>(e.size()) == k) full = true;
        if (e.size() < 2 ||
            (spec.h.n == k && !is_module(spec.j, detail::set_of(static_cast<std::size_t>(k), e))))
            out.push_back("condition (a) violated: hyperedge " + detail::vertex_list(e) +
                          " is not a module of size at least 2");
    }
    if (!full) out.push_back("condition (b) violated: no hyperedge contains all vertices");
    return out;
}

// Build an odd template from a spec. Vertex layout: A (base order), then A',
// then path interiors in path-major order, then B, then B'.
inline TemplateBuild build_odd_template(const OddTemplateSpec& spec) {
    auto bad = validate_odd_spec(spec);
    if (!bad.empty()) throw std::invalid_argument(bad.front());
    const int k = spec.j.n();
    const int ell = spec.ell;
    const int inner = ell - 2;  // interior vertices per principal path

    // Hyperedge sides: v_X joins B when j[X] is anticonnected, else v'_X
    // joins B' (exactly one case holds for a module of a threshold graph).
    const std::size_t m = spec.h.edges.size();
    std::vector<bool> on_b(m);
    for (std::size_t e = 0; e < m; ++e) {
        auto sub = induced(spec.j, detail::set_of(static_cast<std::size_t>(k), spec.h.edges[e]));
        on_b[e] = is_anticonnected(sub.graph);
    }

    TemplatePartition p;
    p.parity = Parity::Odd;
    p.ell = ell;
    p.k = k;
    const int i_base = 2 * k;
    const int b_base = i_base + k * inner;
    int next = b_base;
    std::vector<int> edge_vertex(m);
    for (std::size_t e = 0; e < m; ++e)
        if (on_b[e]) edge_vertex[e] = next++;
    for (std::size_t e = 0; e < m; ++e)
        if (!on_b[e]) edge_vertex[e] = next++;
    const int n = next;

    Graph g(n);
    for (int i = 0; i < k; ++i) {
        p.A.push_back(i);
        p.Ap.push_back(k + i);
    }
    for (int i = 0; i < k; ++i)
        for (int j2 = i + 1; j2 < k; ++j2) {
            if (spec.j.has_edge(i, j2)) g.add_edge(i, j2);
            else g.add_edge(k + i, k + j2);
        }
    for (int i = 0; i < k; ++i) {
        std::vector<int> path{i};
        int prev = i;
        for (int t = 0; t < inner; ++t) {
            int v = i_base + i * inner + t;
            g.add_edge(prev, v);
            path.push_back(v);
            p.I.push_back(v);
            prev = v;
        }
        g.add_edge(prev, k + i);
        path.push_back(k + i);
        p.paths.push_back(std::move(path));
    }
    for (std::size_t e = 0; e < m; ++e) {
        int x = edge_vertex[e];
        const auto& X = spec.h.edges[e];
        for (std::size_t f = e + 1; f < m; ++f) {
            if (on_b[e] != on_b[f]) continue;
            if (!detail::disjoint(X, spec.h.edges[f])) g.add_edge(x, edge_vertex[f]);
        }
        auto nbd = detail::closed_neighborhood(on_b[e] ? spec.j : complement(spec.j), X);
        if (on_b[e]) {
            p.B.push_back(x);
            std::vector<int> hx;
            for (int i : X) hx.push_back(i);  // A[i] == i
            p.hmap[x] = hx;
            for (int i : nbd) g.add_edge(i, x);
        } else {
            p.Bp.push_back(x);
            std::vector<int> hx;
            for (int i : X) hx.push_back(k + i);
            p.hmapp[x] = hx;
            for (int i : nbd) g.add_edge(k + i, x);
        }
    }
    std::sort(p.B.begin(), p.B.end());
    std::sort(p.Bp.begin(), p.Bp.end());

    p.w = detail::find_universal_in(g, p.a_union_b());
    p.wp = detail::find_universal_in(g, p.ap_union_bp());
    if (p.w < 0 || p.wp < 0)
        throw std::logic_error("template construction produced no universal witness");

    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i) {
        labels[static_cast<std::size_t>(i)] = "A" + std::to_string(i + 1);
        labels[static_cast<std::size_t>(k + i)] = "A'" + std::to_string(i + 1);
        for (int t = 0; t < inner; ++t)
            labels[static_cast<std::size_t>(i_base + i * inner + t)] =
                "I" + std::to_string(i + 1) + "." + std::to_string(t + 1);
    }
    for (std::size_t e = 0; e < m; ++e)
        labels[static_cast<std::size_t>(edge_vertex[e])] =
            (on_b[e] ? "B" : "B'") + detail::vertex_list(spec.h.edges[e]);
    g.set_labels(std::move(labels));
    return {std::move(g), std::move(p)};
}

// ---------------------------------------------------------------------------
// Odd pretemplate validation
// ---------------------------------------------------------------------------

struct OddPretemplateCandidate {
    std::vector<int> A, B, Ap, Bp, I;
};

namespace detail {

// Shared plumbing: checks the path system (unique interior paths from each A
// vertex to A', degree-2 interiors covered by paths) and reports violations.
struct PathTrace {
    std::vector<std::vector<int>> paths;  // one per A vertex, in A order
    std::vector<int> partner;             // endpoint in A'
    bool ok = true;
};

inline PathTrace trace_paths(const Graph& g, const std::vector<int>& A,
                             const std::vector<int>& Ap, const std::vector<int>& I,
                             std::vector<std::string>& out, int condition_number) {
    const std::string tag = "condition " + std::to_string(condition_number) + ": ";
    PathTrace tr;
    Bitset targets = set_of(static_cast<std::size_t>(g.n()), Ap);
    Bitset interior = set_of(static_cast<std::size_t>(g.n()), I);
    std::map<int, int> hits;
    for (int v : A) {
        auto ps = paths_via_interior(g, v, targets, interior);
        if (ps.size() != 1) {
            out.push_back(tag + "vertex " + std::to_string(v) + " has " +
                          std::to_string(ps.size()) + " interior paths to the far side");
            tr.ok = false;
            tr.paths.emplace_back();
            tr.partner.push_back(-1);
            continue;
        }
        tr.paths.push_back(ps[0]);
        tr.partner.push_back(ps[0].back());
        ++hits[ps[0].back()];
    }
    for (int v : Ap)
        if (tr.ok && hits[v] != 1) {
            out.push_back(tag + "far-side vertex " + std::to_string(v) + " ends " +
                          std::to_string(hits[v]) + " interior paths");
            tr.ok = false;
        }
    return tr;
}

inline void check_interior(const Graph& g, const std::vector<int>& I, const PathTrace& tr,
                           std::vector<std::string>& out, int condition_number) {
    const std::string tag = "condition " + std::to_string(condition_number) + ": ";
    Bitset on_path(static_cast<std::size_t>(g.n()));
    for (const auto& path : tr.paths)
        for (int v : path) on_path.set(static_cast<std::size_t>(v));
    for (int v : I) {
        std::size_t deg = g.neighbors(v).count();
        if (deg != 2)
            out.push_back(tag + "vertex " + std::to_string(v) + " has degree " +
                          std::to_string(deg) + ", expected degree 2");
        if (tr.ok && !on_path.test(static_cast<std::size_t>(v)))
            out.push_back(tag + "vertex " + std::to_string(v) + " lies on no principal path");
    }
}

inline void check_confinement(const Graph& g, const std::vector<int>& A,
                              const std::vector<int>& B, const std::vector<int>& I,
                              std::vector<std::string>& out, int condition_number) {
    const std::string tag = "condition " + std::to_string(condition_number) + ": ";
    Bitset a = set_of(static_cast<std::size_t>(g.n()), A);
    Bitset ab = a;
    for (int x : B) ab.set(static_cast<std::size_t>(x));
    Bitset i = set_of(static_cast<std::size_t>(g.n()), I);
    for (int x : B) {
        Bitset nb = minus(g.neighbors(x), ab);
        if (nb.any())
            out.push_back(tag + "vertex " + std::to_string(x) +
                          " has neighbors outside its own side's A");
    }
    for (int x : ab.to_vector()) {
        Bitset nb = minus(minus(g.neighbors(x), ab), i);
        if (nb.any())
            out.push_back(tag + "vertex " + std::to_string(x) +
                          " has neighbors outside the side and the path interiors");
    }
}

inline void check_b_paths(const Graph& g, const std::vector<int>& A,
                          const std::vector<int>& B, std::vector<std::string>& out,
                          int condition_number) {
    const std::string tag = "condition " + std::to_string(condition_number) + ": ";
    Bitset allowed = set_of(static_cast<std::size_t>(g.n()), A);
    for (int x : B) allowed.set(static_cast<std::size_t>(x));
    Bitset targets = set_of(static_cast<std::size_t>(g.n()), A);
    for (int x : B)
        if (!interior_of_path_to(g, allowed, x, targets))
            out.push_back(tag + "vertex " + std::to_string(x) +
                          " is not in the interior of a path with both ends in A");
}

inline bool check_partition(const Graph& g, const std::vector<const std::vector<int>*>& sets,
                            std::vector<std::string>& out) {
    Bitset seen(static_cast<std::size_t>(g.n()));
    bool ok = true;
    for (const auto* s : sets)
        for (int v : *s) {
            if (v < 0 || v >= g.n() || seen.test(static_cast<std::size_t>(v))) ok = false;
            else seen.set(static_cast<std::size_t>(v));
        }
    if (seen.count() != static_cast<std::size_t>(g.n())) ok = false;
    if (!ok) out.push_back("labeling does not partition the vertex set");
    return ok;
}

} // namespace detail

inline std::vector<std::string> validate_odd_pretemplate(const Graph& g,
                                                         const OddPretemplateCandidate& cand,
                                                         int ell) {
    std::vector<std::string> out;
    if (ell < 3) out.push_back("ell must be at least 3");
    if (!detail::check_partition(g, {&cand.A, &cand.B, &cand.Ap, &cand.Bp, &cand.I}, out))
        return out;
    // 1, 2: each side's B sees only its A; the side reaches out only into I.
    detail::check_confinement(g, cand.A, cand.B, cand.I, out, 1);
    detail::check_confinement(g, cand.Ap, cand.Bp, cand.I, out, 2);
    // 3: equal side sizes, at least 3.
    if (cand.A.size() != cand.Ap.size() || cand.A.size() < 3)
        out.push_back("condition 3: |A| = " + std::to_string(cand.A.size()) +
                      " and |A'| = " + std::to_string(cand.Ap.size()) +
                      " must be equal and at least 3");
    // 4: unique interior paths pairing the two sides.
    detail::PathTrace tr = detail::trace_paths(g, cand.A, cand.Ap, cand.I, out, 4);
    // 5: interiors have degree 2 and lie on principal paths.
    detail::check_interior(g, cand.I, tr, out, 5);
    // 6: all principal paths have length ell - 1.
    if (tr.ok)
        for (std::size_t i = 0; i < tr.paths.size(); ++i)
            if (static_cast<int>(tr.paths[i].size()) != ell)
                out.push_back("condition 6: path from vertex " + std::to_string(cand.A[i]) +
                              " has length " + std::to_string(tr.paths[i].size() - 1) +
                              ", expected " + std::to_string(ell - 1));
    // 7: both sides connected.
    if (!is_connected(induced(g, detail::set_of(static_cast<std::size_t>(g.n()), cand.A) |
                                     detail::set_of(static_cast<std::size_t>(g.n()), cand.B)).graph))
        out.push_back("condition 7: A union B is not connected");
    if (!is_connected(induced(g, detail::set_of(static_cast<std::size_t>(g.n()), cand.Ap) |
                                     detail::set_of(static_cast<std::size_t>(g.n()), cand.Bp)).graph))
        out.push_back("condition 7: A' union B' is not connected");
    // 8, 9: B vertices are path interiors within their side.
    detail::check_b_paths(g, cand.A, cand.B, out, 8);
    detail::check_b_paths(g, cand.Ap, cand.Bp, out, 9);
    return out;
}

// ---------------------------------------------------------------------------
// Pretemplate -> template reconstruction
// ---------------------------------------------------------------------------

namespace detail {

// Recover H_x for x in B: the unique anticomponent of g[N_A(x)] with at
// least two vertices; also check N_A(x) = N_A[H_x].
inline std::vector<int> recover_hx(const Graph& g, int x, const std::vector<int>& A) {
    Bitset a = set_of(static_cast<std::size_t>(g.n()), A);
    Bitset na = g.neighbors(x) & a;
    auto sub = induced(g, na);
    std::vector<int> hx;
    int big = 0;
    for (const auto& comp : components(sub.graph, true)) {
        if (comp.size() < 2) continue;
        ++big;
        hx.clear();
        for (int v : comp) hx.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
    }
    if (big != 1)
        throw std::runtime_error("reconstruction: vertex " + std::to_string(x) + " has " +
                                 std::to_string(big) +
                                 " large anticomponents in its A-neighborhood, expected 1");
    std::sort(hx.begin(), hx.end());
    // N_A(x) must be exactly the closed neighborhood of H_x inside A.
    Bitset closed(static_cast<std::size_t>(g.n()));
    for (int v : hx) {
        closed.set(static_cast<std::size_t>(v));
        closed |= g.neighbors(v) & a;
    }
    if (closed.to_vector() != na.to_vector())
        throw std::runtime_error("reconstruction: vertex " + std::to_string(x) +
                                 " is not adjacent to exactly the closed neighborhood of its H set");
    return hx;
}

} // namespace detail

// Rebuild a full odd partition (ordering, H sets, witnesses) from a
// validated pretemplate labeling, and verify the graph is exactly the
// template the recovered recipe builds. Throws std::invalid_argument when a
// precondition (validation, hole spectrum) fails and std::runtime_error when
// reconstruction breaks, which signals the graph is outside the class.
inline TemplatePartition pretemplate_to_template(const Graph& g,
                                                 const OddPretemplateCandidate& cand, int ell) {
    auto spectrum = hole_spectrum(g);
    if (!(spectrum.kind == SpectrumKind::Chordal ||
          (spectrum.kind == SpectrumKind::Uniform && spectrum.uniform_length() == 2 * ell + 1)))
        throw std::invalid_argument("spectrum: holes must all have length " +
                                    std::to_string(2 * ell + 1));
    auto bad = validate_odd_pretemplate(g, cand, ell);
    if (!bad.empty()) throw std::invalid_argument(bad.front());

    TemplatePartition p;
    p.parity = Parity::Odd;
    p.ell = ell;
    p.A = cand.A;
    std::sort(p.A.begin(), p.A.end());
    p.k = static_cast<int>(p.A.size());
    p.B = cand.B;
    std::sort(p.B.begin(), p.B.end());
    p.Bp = cand.Bp;
    std::sort(p.Bp.begin(), p.Bp.end());
    p.I = cand.I;
    std::sort(p.I.begin(), p.I.end());
    std::vector<std::string> dummy;
    detail::PathTrace tr = detail::trace_paths(g, p.A, cand.Ap, cand.I, dummy, 4);
    p.paths = tr.paths;
    p.Ap = tr.partner;

    // Index of each A / A' vertex in the paired order.
    std::map<int, int> a_index, ap_index;
    for (int i = 0; i < p.k; ++i) {
        a_index[p.A[static_cast<std::size_t>(i)]] = i;
        ap_index[p.Ap[static_cast<std::size_t>(i)]] = i;
    }

    // Base graph: g restricted to A in paired order.
    Graph j(p.k);
    for (int i = 0; i < p.k; ++i)
        for (int j2 = i + 1; j2 < p.k; ++j2)
            if (g.has_edge(p.A[static_cast<std::size_t>(i)], p.A[static_cast<std::size_t>(j2)]))
                j.add_edge(i, j2);
    for (int i = 0; i < p.k; ++i)
        for (int j2 = i + 1; j2 < p.k; ++j2)
            if (g.has_edge(p.Ap[static_cast<std::size_t>(i)], p.Ap[static_cast<std::size_t>(j2)]) ==
                j.has_edge(i, j2))
                throw std::runtime_error(
                    "reconstruction: far side is not the complement of the near side");

    // Recover the hypergraph from both sides.
    Hypergraph h;
    h.n = p.k;
    std::vector<int> edge_source;  // vertex that produced each hyperedge
    for (int x : p.B) {
        auto hx = detail::recover_hx(g, x, p.A);
        p.hmap[x] = hx;
        std::vector<int> idx;
        for (int v : hx) idx.push_back(a_index[v]);
        h.add_edge(idx);
        edge_source.push_back(x);
    }
    for (int x : p.Bp) {
        auto hx = detail::recover_hx(g, x, p.Ap);
        p.hmapp[x] = hx;
        std::vector<int> idx;
        for (int v : hx) idx.push_back(ap_index[v]);
        h.add_edge(idx);
        edge_source.push_back(x);
    }

    OddTemplateSpec spec{ell, std::move(j), std::move(h)};
    auto spec_bad = validate_odd_spec(spec);
    if (!spec_bad.empty())
        throw std::runtime_error("reconstruction: recovered recipe invalid: " + spec_bad.front());
    TemplateBuild rebuilt = build_odd_template(spec);

    // Correspondence g-vertex -> rebuilt-vertex and edge-by-edge comparison.
    std::vector<int> perm(static_cast<std::size_t>(g.n()), -1);
    for (int i = 0; i < p.k; ++i) {
        perm[static_cast<std::size_t>(p.A[static_cast<std::size_t>(i)])] = rebuilt.part.A[static_cast<std::size_t>(i)];
        perm[static_cast<std::size_t>(p.Ap[static_cast<std::size_t>(i)])] = rebuilt.part.Ap[static_cast<std::size_t>(i)];
        for (std::size_t t = 0; t < p.paths[static_cast<std::size_t>(i)].size(); ++t)
            perm[static_cast<std::size_t>(p.paths[static_cast<std::size_t>(i)][t])] =
                rebuilt.part.paths[static_cast<std::size_t>(i)][t];
    }
    {
        // Rebuilt B/B' ids follow the hyperedge list order within each side.
        std::size_t bi = 0, bpi = 0;
        for (std::size_t e = 0; e < edge_source.size(); ++e) {
            int x = edge_source[e];
            bool primed = std::binary_search(p.Bp.begin(), p.Bp.end(), x);
            // Sides agree with the builder automatically: each recovered H
            // set is an anticomponent, hence anticonnected on its own side.
            if (primed ? bpi >= rebuilt.part.Bp.size() : bi >= rebuilt.part.B.size())
                throw std::runtime_error("reconstruction: vertex " + std::to_string(x) +
                                         " sits on the wrong side for its H set");
            perm[static_cast<std::size_t>(x)] = primed ? rebuilt.part.Bp[bpi++]
                                                       : rebuilt.part.B[bi++];
        }
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v) != rebuilt.graph.has_edge(perm[static_cast<std::size_t>(u)],
                                                           perm[static_cast<std::size_t>(v)]))
                throw std::runtime_error("reconstruction: adjacency mismatch between " +
                                         std::to_string(u) + " and " + std::to_string(v));

    p.w = detail::find_universal_in(g, p.a_union_b());
    p.wp = detail::find_universal_in(g, p.ap_union_bp());
    if (p.w < 0 || p.wp < 0)
        throw std::runtime_error("reconstruction: no universal witness found");
    return p;
}

// ---------------------------------------------------------------------------
// Twins and proper partitions
// ---------------------------------------------------------------------------

struct TwinlessResult {
    Graph graph;
    TemplatePartition part;
    std::vector<int> removed;  // vertices of the input graph
};

// Remove duplicate-H twins, keeping the smallest vertex of each class. All
// non-singleton twin classes of a template live inside B or B' with equal
// H sets; anything else is rejected.
inline TwinlessResult make_twinless(const Graph& g, const TemplatePartition& p) {
    Bitset b = detail::set_of(static_cast<std::size_t>(g.n()), p.B);
    Bitset bp = detail::set_of(static_cast<std::size_t>(g.n()), p.Bp);
    Bitset keep = g.all_vertices();
    std::vector<int> removed;
    for (const auto& cls : twin_classes(g)) {
        if (cls.size() < 2) continue;
        bool in_b = b.test(static_cast<std::size_t>(cls[0]));
        bool in_bp = bp.test(static_cast<std::size_t>(cls[0]));
        if (!in_b && !in_bp)
            throw std::runtime_error("twin class outside B and B'");
        for (std::size_t i = 0; i < cls.size(); ++i) {
            const auto& hx = in_b ? p.hmap : p.hmapp;
            auto it = hx.find(cls[i]);
            auto it0 = hx.find(cls[0]);
            if (it == hx.end() || it0 == hx.end() || it->second != it0->second)
                throw std::runtime_error("twin class with mismatched H sets");
            if (i > 0) {
                keep.reset(static_cast<std::size_t>(cls[i]));
                removed.push_back(cls[i]);
            }
        }
    }
    auto sub = induced(g, keep);
    std::sort(removed.begin(), removed.end());

    TemplatePartition q;
    q.parity = p.parity;
    q.ell = p.ell;
    q.k = p.k;
    q.s = p.s;
    auto remap = [&](int v) { return sub.to_local[static_cast<std::size_t>(v)]; };
    for (int v : p.A) q.A.push_back(remap(v));
    for (int v : p.Ap) q.Ap.push_back(remap(v));
    for (int v : p.I) q.I.push_back(remap(v));
    for (int v : p.B)
        if (keep.test(static_cast<std::size_t>(v))) q.B.push_back(remap(v));
    for (int v : p.Bp)
        if (keep.test(static_cast<std::size_t>(v))) q.Bp.push_back(remap(v));
    std::sort(q.B.begin(), q.B.end());
    std::sort(q.Bp.begin(), q.Bp.end());
    std::sort(q.I.begin(), q.I.end());
    for (const auto& path : p.paths) {
        std::vector<int> np;
        for (int v : path) np.push_back(remap(v));
        q.paths.push_back(np);
    }
    for (const auto& [x, hx] : p.hmap) {
        if (!keep.test(static_cast<std::size_t>(x))) continue;
        std::vector<int> nh;
        for (int v : hx) nh.push_back(remap(v));
        std::sort(nh.begin(), nh.end());
        q.hmap[remap(x)] = nh;
    }
    for (const auto& [x, hx] : p.hmapp) {
        if (!keep.test(static_cast<std::size_t>(x))) continue;
        std::vector<int> nh;
        for (int v : hx) nh.push_back(remap(v));
        std::sort(nh.begin(), nh.end());
        q.hmapp[remap(x)] = nh;
    }
    q.w = detail::find_universal_in(sub.graph, q.a_union_b());
    q.wp = detail::find_universal_in(sub.graph, q.ap_union_bp());
    return {std::move(sub.graph), std::move(q), std::move(removed)};
}

// Swap the two sides of a partition.
inline TemplatePartition swap_sides(const TemplatePartition& p) {
    TemplatePartition q = p;
    std::swap(q.A, q.Ap);
    std::swap(q.B, q.Bp);
    std::swap(q.w, q.wp);
    std::swap(q.hmap, q.hmapp);
    for (auto& path : q.paths) std::reverse(path.begin(), path.end());
    return q;
}

inline bool is_proper_odd(const Graph& g, const TemplatePartition& p) {
    return detail::isolated_in(g, p.A).size() >= 2 ||
           detail::isolated_in(g, p.Ap).size() >= 2;
}

// Transform an odd partition of a twinless template into a proper one (at
// least two isolated vertices on one side of the base pair). If neither side
// qualifies, the side with a single isolated vertex is re-labeled: its
// isolated vertex moves into the interiors, the side's universal B witness
// takes its place, and the far endpoint shifts accordingly.
inline TemplatePartition to_proper_partition(const Graph& g, const TemplatePartition& p) {
    if (p.parity != Parity::Odd) throw std::invalid_argument("odd partition required");
    if (p.ell < 3) throw std::invalid_argument("ell must be at least 3");
    if (!is_twinless(g)) throw std::invalid_argument("graph must be twinless");
    if (is_proper_odd(g, p)) return p;

    TemplatePartition q = p;
    auto iso_a = detail::isolated_in(g, q.A);
    if (iso_a.size() != 1) {
        q = swap_sides(q);
        iso_a = detail::isolated_in(g, q.A);
    }
    if (iso_a.size() != 1)
        throw std::runtime_error("no side with exactly one isolated vertex");
    int v1 = iso_a[0];
    std::size_t idx = static_cast<std::size_t>(
        std::find(q.A.begin(), q.A.end(), v1) - q.A.begin());
    int w = detail::find_universal_in(g, q.a_union_b());
    if (w < 0 || detail::set_of(static_cast<std::size_t>(g.n()), q.A).test(static_cast<std::size_t>(w)))
        throw std::runtime_error("expected the universal witness in B");
    const auto& path = q.paths[idx];
    int v1p = q.Ap[idx];                       // far endpoint
    int v1p_minus = path[path.size() - 2];     // its interior neighbor

    OddPretemplateCandidate cand;
    // New near side: swap roles so the far side (which gains two isolated
    // vertices) becomes A.
    for (int v : q.Ap)
        if (v != v1p) cand.A.push_back(v);
    cand.A.push_back(v1p_minus);
    cand.B = q.Bp;
    cand.B.push_back(v1p);
    for (int v : q.A)
        if (v != v1) cand.Ap.push_back(v);
    cand.Ap.push_back(w);
    for (int v : q.B)
        if (v != w) cand.Bp.push_back(v);
    for (int v : q.I)
        if (v != v1p_minus) cand.I.push_back(v);
    cand.I.push_back(v1);
    std::sort(cand.A.begin(), cand.A.end());
    std::sort(cand.B.begin(), cand.B.end());
    std::sort(cand.Ap.begin(), cand.Ap.end());
    std::sort(cand.Bp.begin(), cand.Bp.end());
    std::sort(cand.I.begin(), cand.I.end());
    TemplatePartition out = pretemplate_to_template(g, cand, p.ell);
    if (detail::isolated_in(g, out.A).size() < 2)
        throw std::runtime_error("re-labeling did not produce two isolated vertices");
    return out;
}

// ---------------------------------------------------------------------------
// Hyper cycles
// ---------------------------------------------------------------------------

struct HyperCycle {
    std::vector<int> vertices;       // j_1, ..., j_t
    std::vector<std::size_t> edges;  // e_1, ..., e_t (indices into the hypergraph)
    std::size_t length() const { return vertices.size(); }
};

// Search for a hyper cycle of length > 2: a circular alternation of distinct
// vertices and distinct hyperedges where each vertex lies in exactly its two
// incident cycle edges and same-side cycle edges are pairwise disjoint.
inline std::optional<HyperCycle> has_hyper_cycle_gt2(const Hypergraph& hg) {
    if (hg.sides.size() != hg.edges.size())
        throw std::invalid_argument("every hyperedge must carry a side tag");
    for (EdgeSide s : hg.sides)
        if (s == EdgeSide::None)
            throw std::invalid_argument("every hyperedge must carry a side tag");
    if (hg.n > 20) throw BudgetExceeded("hyper cycle search limited to 20 ground vertices");

    const std::size_t m = hg.edges.size();
    auto contains = [&](std::size_t e, int v) {
        return std::binary_search(hg.edges[e].begin(), hg.edges[e].end(), v);
    };
    std::vector<int> vseq;
    std::vector<std::size_t> eseq;
    std::vector<bool> vused(static_cast<std::size_t>(hg.n)), eused(m);
    std::optional<HyperCycle> found;

    auto valid_cycle = [&]() {
        const std::size_t t = vseq.size();
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t e = 0; e < t; ++e) {
                bool incident = (e == i || e == (i + t - 1) % t);
                if (contains(eseq[e], vseq[i]) != incident) return false;
            }
        for (std::size_t a = 0; a < t; ++a)
            for (std::size_t b = a + 1; b < t; ++b)
                if (hg.sides[eseq[a]] == hg.sides[eseq[b]] &&
                    !detail::disjoint(hg.edges[eseq[a]], hg.edges[eseq[b]]))
                    return false;
        return true;
    };
    std::size_t steps = 0;
    auto rec = [&](auto&& self) -> void {
        if (found) return;
        if (++steps > 2000000) throw BudgetExceeded("hyper cycle search budget exceeded");
        int cur = vseq.back();
        for (std::size_t e = 0; e < m && !found; ++e) {
            if (eused[e] || !contains(e, cur)) continue;
            // Closing edge: must also contain the start vertex.
            if (vseq.size() > 2 && contains(e, vseq.front())) {
                eseq.push_back(e);
                if (valid_cycle()) found = HyperCycle{vseq, eseq};
                eseq.pop_back();
                if (found) return;
            }
            for (int v : hg.edges[e]) {
                if (vused[static_cast<std::size_t>(v)]) continue;
                eused[e] = true;
                vused[static_cast<std::size_t>(v)] = true;
                eseq.push_back(e);
                vseq.push_back(v);
                self(self);
                vseq.pop_back();
                eseq.pop_back();
                vused[static_cast<std::size_t>(v)] = false;
                eused[e] = false;
                if (found) return;
            }
        }
    };
    for (int start = 0; start < hg.n && !found; ++start) {
        vused[static_cast<std::size_t>(start)] = true;
        vseq.push_back(start);
        rec(rec);
        vseq.pop_back();
        vused[static_cast<std::size_t>(start)] = false;
    }
    return found;
}

// ---------------------------------------------------------------------------
// Even template specs and construction
// ---------------------------------------------------------------------------

// Recipe for an even template. The near base graph has a clique part (k
// vertices), a stable part (s vertices) and nested clique-stable edges given
// by ks_edges; the far base graph carries the complementary clique-stable
// edges. Each side has its own laminar hypergraph of anticonnected modules.
struct EvenTemplateSpec {
    int ell = 4;
    int k = 0;
    int s = 0;
    std::vector<std::vector<bool>> ks_edges;  // k rows, s columns
    Hypergraph h;   // on {0..k+s-1}, modules of the near base graph
    Hypergraph hp;  // on {0..k+s-1}, modules of the far base graph
};

namespace detail {

inline Graph even_base_graph(const EvenTemplateSpec& spec, bool primed) {
    Graph g(spec.k + spec.s);
    for (int i = 0; i < spec.k; ++i)
        for (int j = i + 1; j < spec.k; ++j) g.add_edge(i, j);
    for (int i = 0; i < spec.k; ++i)
        for (int j = 0; j < spec.s; ++j)
            if (spec.ks_edges[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != primed)
                g.add_edge(i, spec.k + j);
    return g;
}

inline void check_even_hypergraph(const Graph& base, const Hypergraph& h,
                                  const std::string& which, std::vector<std::string>& out) {
    const int n = base.n();
    if (h.n != n) {
        out.push_back(which + " hypergraph ground set must match the base graph");
        return;
    }
    if (!h.valid()) {
        out.push_back(which + " hypergraph is invalid");
        return;
    }
    if (!is_laminar(h)) out.push_back(which + " hypergraph is not laminar");
    for (const auto& e : h.edges) {
        bool mod = e.size() >= 2 && is_module(base, set_of(static_cast<std::size_t>(n), e));
        bool anti = mod && is_anticonnected(induced(base, set_of(static_cast<std::size_t>(n), e)).graph);
        if (!mod || !anti)
            out.push_back(which + " hyperedge " + vertex_list(e) +
                          " is not an anticonnected module of size at least 2");
    }
    if (!is_connected(base)) {
        bool full = false;
        for (const auto& e : h.edges)
            if (static_cast<int>(e.size()) == n) full = true;
        if (!full)
            out.push_back(which +
                          " base graph is disconnected but no hyperedge contains all vertices");
    }
}

// The extended hypergraph on a base graph: the given hyperedges plus, for
// each vertex v, its closed neighborhood restricted to vertices it dominates.
inline Hypergraph extended_hypergraph(const Graph& base, const Hypergraph& h) {
    Hypergraph out = h;
    out.sides.clear();
    for (int v = 0; v < base.n(); ++v) {
        std::vector<int> hv{v};
        for (int u = 0; u < base.n(); ++u)
            if (u != v && base.has_edge(u, v) && leq(base, u, v)) hv.push_back(u);
        out.add_edge(hv);
    }
    return out;
}

// The stable-part trace hypergraph used for the strong condition: restrict
// every extended hyperedge of both sides to stable-part indices.
inline Hypergraph stable_trace(const Graph& base, const Graph& basep, const Hypergraph& h,
                               const Hypergraph& hp, int k) {
    Hypergraph out;
    out.n = base.n();
    for (const auto& side : {std::pair<const Graph&, const Hypergraph&>{base, h},
                             std::pair<const Graph&, const Hypergraph&>{basep, hp}}) {
        Hypergraph ext = extended_hypergraph(side.first, side.second);
        bool primed = &side.first == &basep;
        for (const auto& e : ext.edges) {
            std::vector<int> tr;
            for (int v : e)
                if (v >= k) tr.push_back(v);
            if (!tr.empty()) out.add_edge(tr, primed ? EdgeSide::APrime : EdgeSide::A);
        }
    }
    return out;
}

} // namespace detail

inline std::vector<std::string> validate_even_spec(const EvenTemplateSpec& spec) {
    std::vector<std::string> out;
    if (spec.ell < 4) out.push_back("ell must be at least 4");
    if (spec.k < 0 || spec.s < 0 || spec.k + spec.s < 3)
        out.push_back("base graph must have at least 3 vertices");
    if (static_cast<int>(spec.ks_edges.size()) != spec.k)
        out.push_back("clique-stable edge matrix must have k rows");
    for (const auto& row : spec.ks_edges)
        if (static_cast<int>(row.size()) != spec.s)
            out.push_back("clique-stable edge matrix must have s columns");
    if (!out.empty()) return out;
    Graph base = detail::even_base_graph(spec, false);
    Graph basep = detail::even_base_graph(spec, true);
    if (!recognize_threshold(base)) out.push_back("near base graph is not a threshold graph");
    if (!recognize_threshold(basep)) out.push_back("far base graph is not a threshold graph");
    detail::check_even_hypergraph(base, spec.h, "near", out);
    detail::check_even_hypergraph(basep, spec.hp, "far", out);
    if (out.empty()) {
        auto trace = detail::stable_trace(base, basep, spec.h, spec.hp, spec.k);
        if (auto hc = has_hyper_cycle_gt2(trace))
            out.push_back("hyper cycle of length " + std::to_string(hc->length()) +
                          " in the stable-part trace");
    }
    return out;
}

// Build an even template from a spec. Vertex layout: A (clique part then
// stable part), then A', then path interiors in path-major order, then B,
// then B'. Clique-indexed paths have length ell-1, stable-indexed ell-2.
inline TemplateBuild build_even_template(const EvenTemplateSpec& spec) {
    auto bad = validate_even_spec(spec);
    if (!bad.empty()) throw std::invalid_argument(bad.front());
    const int k = spec.k, s = spec.s, ks = k + s, ell = spec.ell;
    Graph base = detail::even_base_graph(spec, false);
    Graph basep = detail::even_base_graph(spec, true);

    TemplatePartition p;
    p.parity = Parity::Even;
    p.ell = ell;
    p.k = k;
    p.s = s;
    const int i_base = 2 * ks;
    const int n_interior = k * (ell - 2) + s * (ell - 3);
    const int b_base = i_base + n_interior;
    const int n = b_base + static_cast<int>(spec.h.edges.size() + spec.hp.edges.size());

    Graph g(n);
    for (int i = 0; i < ks; ++i) {
        p.A.push_back(i);
        p.Ap.push_back(ks + i);
    }
    for (int i = 0; i < ks; ++i)
        for (int j = i + 1; j < ks; ++j) {
            if (base.has_edge(i, j)) g.add_edge(i, j);
            if (basep.has_edge(i, j)) g.add_edge(ks + i, ks + j);
        }
    int islot = i_base;
    for (int i = 0; i < ks; ++i) {
        int inner = (i < k) ? ell - 2 : ell - 3;
        std::vector<int> path{i};
        int prev = i;
        for (int t = 0; t < inner; ++t) {
            g.add_edge(prev, islot);
            path.push_back(islot);
            p.I.push_back(islot);
            prev = islot++;
        }
        g.add_edge(prev, ks + i);
        path.push_back(ks + i);
        p.paths.push_back(std::move(path));
    }
    int next = b_base;
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (const auto* hg : {&spec.h, &spec.hp}) {
        bool primed = hg == &spec.hp;
        for (std::size_t e = 0; e < hg->edges.size(); ++e) {
            int x = next++;
            const auto& X = hg->edges[e];
            (primed ? p.Bp : p.B).push_back(x);
            std::vector<int> hx;
            for (int i : X) hx.push_back(primed ? ks + i : i);
            (primed ? p.hmapp : p.hmap)[x] = hx;
            auto nbd = detail::closed_neighborhood(primed ? basep : base, X);
            for (int i : nbd) g.add_edge(primed ? ks + i : i, x);
            for (std::size_t f = 0; f < e; ++f)
                if (!detail::disjoint(X, hg->edges[f]))
                    g.add_edge(x, x - static_cast<int>(e - f));
            labels[static_cast<std::size_t>(x)] =
                (primed ? "B'" : "B") + detail::vertex_list(X);
        }
    }
    p.w = detail::find_universal_in(g, p.a_union_b());
    p.wp = detail::find_universal_in(g, p.ap_union_bp());
    if (p.w < 0 || p.wp < 0)
        throw std::logic_error("template construction produced no universal witness");

    for (int i = 0; i < ks; ++i) {
        labels[static_cast<std::size_t>(i)] = "A" + std::to_string(i + 1);
        labels[static_cast<std::size_t>(ks + i)] = "A'" + std::to_string(i + 1);
    }
    for (int i = 0; i < ks; ++i)
        for (std::size_t t = 1; t + 1 < p.paths[static_cast<std::size_t>(i)].size(); ++t)
            labels[static_cast<std::size_t>(p.paths[static_cast<std::size_t>(i)][t])] =
                "I" + std::to_string(i + 1) + "." + std::to_string(t);
    g.set_labels(std::move(labels));
    return {std::move(g), std::move(p)};
}

// ---------------------------------------------------------------------------
// Even pretemplate validation and reconstruction
// ---------------------------------------------------------------------------

struct EvenPretemplateCandidate {
    std::vector<int> AK, AS, B, ApK, ApS, Bp, I;
};

inline std::vector<std::string> validate_even_pretemplate(const Graph& g,
                                                          const EvenPretemplateCandidate& cand,
                                                          int ell) {
    std::vector<std::string> out;
    if (ell < 4) out.push_back("ell must be at least 4");
    if (!detail::check_partition(
            g, {&cand.AK, &cand.AS, &cand.B, &cand.ApK, &cand.ApS, &cand.Bp, &cand.I}, out))
        return out;
    std::vector<int> A = cand.AK, Ap = cand.ApK;
    A.insert(A.end(), cand.AS.begin(), cand.AS.end());
    Ap.insert(Ap.end(), cand.ApS.begin(), cand.ApS.end());
    // 1, 2: side confinement.
    detail::check_confinement(g, A, cand.B, cand.I, out, 1);
    detail::check_confinement(g, Ap, cand.Bp, cand.I, out, 2);
    // 3: equal clique-part sizes.
    if (cand.AK.size() != cand.ApK.size())
        out.push_back("condition 3: clique parts have sizes " + std::to_string(cand.AK.size()) +
                      " and " + std::to_string(cand.ApK.size()));
    // 4: equal stable-part sizes, stable, total at least 3.
    if (cand.AS.size() != cand.ApS.size())
        out.push_back("condition 4: stable parts have sizes " + std::to_string(cand.AS.size()) +
                      " and " + std::to_string(cand.ApS.size()));
    for (const auto* part : {&cand.AS, &cand.ApS})
        if (!is_stable_set(g, detail::set_of(static_cast<std::size_t>(g.n()), *part)))
            out.push_back("condition 4: stable part contains an edge");
    if (A.size() < 3) out.push_back("condition 4: fewer than 3 base vertices");
    // 5: unique interior paths, with clique parts pairing to clique parts.
    detail::PathTrace tr = detail::trace_paths(g, A, Ap, cand.I, out, 5);
    if (tr.ok) {
        Bitset apk = detail::set_of(static_cast<std::size_t>(g.n()), cand.ApK);
        for (std::size_t i = 0; i < A.size(); ++i) {
            bool from_k = i < cand.AK.size();
            if (apk.test(static_cast<std::size_t>(tr.partner[i])) != from_k)
                out.push_back("condition 5: path from vertex " + std::to_string(A[i]) +
                              " crosses between the clique and stable parts");
        }
    }
    // 6: interiors have degree 2 and lie on principal paths.
    detail::check_interior(g, cand.I, tr, out, 6);
    // 7: clique-part paths have length ell-1, stable-part paths ell-2.
    if (tr.ok)
        for (std::size_t i = 0; i < tr.paths.size(); ++i) {
            int want = (i < cand.AK.size()) ? ell : ell - 1;  // vertices, not edges
            if (static_cast<int>(tr.paths[i].size()) != want)
                out.push_back("condition 7: path from vertex " + std::to_string(A[i]) +
                              " has length " + std::to_string(tr.paths[i].size() - 1) +
                              ", expected " + std::to_string(want - 1));
        }
    // 8: both sides connected.
    if (!is_connected(induced(g, detail::set_of(static_cast<std::size_t>(g.n()), A) |
                                     detail::set_of(static_cast<std::size_t>(g.n()), cand.B)).graph))
        out.push_back("condition 8: A union B is not connected");
    if (!is_connected(induced(g, detail::set_of(static_cast<std::size_t>(g.n()), Ap) |
                                     detail::set_of(static_cast<std::size_t>(g.n()), cand.Bp)).graph))
        out.push_back("condition 8: A' union B' is not connected");
    // 9, 10: B vertices are path interiors within their side.
    detail::check_b_paths(g, A, cand.B, out, 9);
    detail::check_b_paths(g, Ap, cand.Bp, out, 10);
    return out;
}

// Rebuild a full even partition from a validated pretemplate labeling, with
// the same contract as the odd reconstruction.
inline TemplatePartition even_pretemplate_to_template(const Graph& g,
                                                      const EvenPretemplateCandidate& cand,
                                                      int ell) {
    auto spectrum = hole_spectrum(g);
    if (!(spectrum.kind == SpectrumKind::Chordal ||
          (spectrum.kind == SpectrumKind::Uniform && spectrum.uniform_length() == 2 * ell)))
        throw std::invalid_argument("spectrum: holes must all have length " +
                                    std::to_string(2 * ell));
    auto bad = validate_even_pretemplate(g, cand, ell);
    if (!bad.empty()) throw std::invalid_argument(bad.front());

    TemplatePartition p;
    p.parity = Parity::Even;
    p.ell = ell;
    p.k = static_cast<int>(cand.AK.size());
    p.s = static_cast<int>(cand.AS.size());
    p.A = cand.AK;
    std::sort(p.A.begin(), p.A.begin() + p.k);
    {
        std::vector<int> as = cand.AS;
        std::sort(as.begin(), as.end());
        p.A.insert(p.A.end(), as.begin(), as.end());
    }
    p.B = cand.B;
    p.Bp = cand.Bp;
    p.I = cand.I;
    std::sort(p.B.begin(), p.B.end());
    std::sort(p.Bp.begin(), p.Bp.end());
    std::sort(p.I.begin(), p.I.end());
    std::vector<int> apAll = cand.ApK;
    apAll.insert(apAll.end(), cand.ApS.begin(), cand.ApS.end());
    std::vector<std::string> dummy;
    detail::PathTrace tr = detail::trace_paths(g, p.A, apAll, cand.I, dummy, 5);
    p.paths = tr.paths;
    p.Ap = tr.partner;

    std::map<int, int> a_index, ap_index;
    for (int i = 0; i < p.k + p.s; ++i) {
        a_index[p.A[static_cast<std::size_t>(i)]] = i;
        ap_index[p.Ap[static_cast<std::size_t>(i)]] = i;
    }
    // Clique-stable structure: exactly one of each cross pair is an edge.
    for (int i = 0; i < p.k; ++i)
        for (int j = p.k; j < p.k + p.s; ++j) {
            bool near = g.has_edge(p.A[static_cast<std::size_t>(i)], p.A[static_cast<std::size_t>(j)]);
            bool far = g.has_edge(p.Ap[static_cast<std::size_t>(i)], p.Ap[static_cast<std::size_t>(j)]);
            if (near == far)
                throw std::runtime_error(
                    "reconstruction: cross pair must have exactly one edge across the two sides");
        }
    for (int i = 0; i < p.k; ++i)
        for (int j = i + 1; j < p.k; ++j)
            if (!g.has_edge(p.A[static_cast<std::size_t>(i)], p.A[static_cast<std::size_t>(j)]) ||
                !g.has_edge(p.Ap[static_cast<std::size_t>(i)], p.Ap[static_cast<std::size_t>(j)]))
                throw std::runtime_error("reconstruction: clique part is not complete");

    EvenTemplateSpec spec;
    spec.ell = ell;
    spec.k = p.k;
    spec.s = p.s;
    spec.ks_edges.assign(static_cast<std::size_t>(p.k),
                         std::vector<bool>(static_cast<std::size_t>(p.s), false));
    for (int i = 0; i < p.k; ++i)
        for (int j = 0; j < p.s; ++j)
            spec.ks_edges[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                g.has_edge(p.A[static_cast<std::size_t>(i)], p.A[static_cast<std::size_t>(p.k + j)]);
    spec.h.n = spec.hp.n = p.k + p.s;
    for (int x : p.B) {
        auto hx = detail::recover_hx(g, x, p.A);
        p.hmap[x] = hx;
        std::vector<int> idx;
        for (int v : hx) idx.push_back(a_index[v]);
        spec.h.add_edge(idx);
    }
    for (int x : p.Bp) {
        auto hx = detail::recover_hx(g, x, p.Ap);
        p.hmapp[x] = hx;
        std::vector<int> idx;
        for (int v : hx) idx.push_back(ap_index[v]);
        spec.hp.add_edge(idx);
    }
    auto spec_bad = validate_even_spec(spec);
    if (!spec_bad.empty())
        throw std::runtime_error("reconstruction: recovered recipe invalid: " + spec_bad.front());
    TemplateBuild rebuilt = build_even_template(spec);

    std::vector<int> perm(static_cast<std::size_t>(g.n()), -1);
    for (int i = 0; i < p.k + p.s; ++i)
        for (std::size_t t = 0; t < p.paths[static_cast<std::size_t>(i)].size(); ++t)
            perm[static_cast<std::size_t>(p.paths[static_cast<std::size_t>(i)][t])] =
                rebuilt.part.paths[static_cast<std::size_t>(i)][t];
    for (std::size_t e = 0; e < p.B.size(); ++e)
        perm[static_cast<std::size_t>(p.B[e])] = rebuilt.part.B[e];
    for (std::size_t e = 0; e < p.Bp.size(); ++e)
        perm[static_cast<std::size_t>(p.Bp[e])] = rebuilt.part.Bp[e];
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v) != rebuilt.graph.has_edge(perm[static_cast<std::size_t>(u)],
                                                           perm[static_cast<std::size_t>(v)]))
                throw std::runtime_error("reconstruction: adjacency mismatch between " +
                                         std::to_string(u) + " and " + std::to_string(v));

    p.w = detail::find_universal_in(g, p.a_union_b());
    p.wp = detail::find_universal_in(g, p.ap_union_bp());
    if (p.w < 0 || p.wp < 0)
        throw std::runtime_error("reconstruction: no universal witness found");
    return p;
}

inline bool is_proper_even(const Graph& g, const TemplatePartition& p) {
    Bitset a = detail::set_of(static_cast<std::size_t>(g.n()), p.A);
    Bitset ap = detail::set_of(static_cast<std::size_t>(g.n()), p.Ap);
    for (int u : p.a_union_b())
        if (a.test(static_cast<std::size_t>(u)) && detail::is_universal_in(g, u, p.a_union_b()))
            return false;
    for (int u : p.ap_union_bp())
        if (ap.test(static_cast<std::size_t>(u)) && detail::is_universal_in(g, u, p.ap_union_bp()))
            return false;
    return true;
}

// Transform an even partition into a proper one (all universal vertices of
// each side sit in B / B'). A universal base vertex is moved into B; its
// interior neighbor replaces it on the stable part and its far partner moves
// to the far stable part.
inline TemplatePartition even_to_proper(const Graph& g, const TemplatePartition& p) {
    if (p.parity != Parity::Even) throw std::invalid_argument("even partition required");
    if (p.ell < 4) throw std::invalid_argument("ell must be at least 4");
    TemplatePartition q = p;
    for (int round = 0; round < 2 * g.n() + 2; ++round) {
        bool near_bad = false;
        int w = -1;
        Bitset a = detail::set_of(static_cast<std::size_t>(g.n()), q.A);
        for (int u : q.a_union_b())
            if (a.test(static_cast<std::size_t>(u)) &&
                detail::is_universal_in(g, u, q.a_union_b())) {
                near_bad = true;
                w = u;
                break;
            }
        if (!near_bad) {
            Bitset ap = detail::set_of(static_cast<std::size_t>(g.n()), q.Ap);
            for (int u : q.ap_union_bp())
                if (ap.test(static_cast<std::size_t>(u)) &&
                    detail::is_universal_in(g, u, q.ap_union_bp())) {
                    q = swap_sides(q);
                    near_bad = true;
                    w = u;
                    break;
                }
        }
        if (!near_bad) return q;
        std::size_t idx = static_cast<std::size_t>(
            std::find(q.A.begin(), q.A.end(), w) - q.A.begin());
        if (static_cast<int>(idx) >= q.k)
            throw std::runtime_error("universal base vertex outside the clique part");
        int w_plus = q.paths[idx][1];
        int w_far = q.Ap[idx];
        EvenPretemplateCandidate cand;
        for (int i = 0; i < q.k + q.s; ++i) {
            if (i == static_cast<int>(idx)) continue;
            if (i < q.k) {
                cand.AK.push_back(q.A[static_cast<std::size_t>(i)]);
                cand.ApK.push_back(q.Ap[static_cast<std::size_t>(i)]);
            } else {
                cand.AS.push_back(q.A[static_cast<std::size_t>(i)]);
                cand.ApS.push_back(q.Ap[static_cast<std::size_t>(i)]);
            }
        }
        cand.AS.push_back(w_plus);
        cand.ApS.push_back(w_far);
        cand.B = q.B;
        cand.B.push_back(w);
        cand.Bp = q.Bp;
        for (int v : q.I)
            if (v != w_plus) cand.I.push_back(v);
        q = even_pretemplate_to_template(g, cand, p.ell);
    }
    throw std::runtime_error("proper transformation did not converge");
}

// ---------------------------------------------------------------------------
// Extended side hypergraph of a built template (used by audits and blowups)
// ---------------------------------------------------------------------------

// Hyperedges over the chosen side's base vertices: the H sets of that side's
// B vertices plus each base vertex's dominated closed neighborhood. The line
// graph of the result is exactly g[A union B] of that side.
inline Hypergraph side_hypergraph(const Graph& g, const TemplatePartition& p, bool primed) {
    const auto& A = primed ? p.Ap : p.A;
    const auto& B = primed ? p.Bp : p.B;
    const auto& hmap = primed ? p.hmapp : p.hmap;
    auto sub = induced(g, A);  // A sorted? A is ordered; build index map
    std::map<int, int> local;
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
        local[sub.to_parent[i]] = static_cast<int>(i);
    Hypergraph out;
    out.n = static_cast<int>(A.size());
    for (int x : B) {
        std::vector<int> e;
        for (int v : hmap.at(x)) e.push_back(local.at(v));
        out.add_edge(e);
    }
    for (int v : A) {
        int lv = local.at(v);
        std::vector<int> hv{lv};
        for (int u = 0; u < sub.graph.n(); ++u)
            if (u != lv && sub.graph.has_edge(u, lv) && leq(sub.graph, u, lv)) hv.push_back(u);
        out.add_edge(hv);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Random specs
// ---------------------------------------------------------------------------

// Threshold graph from a random growth word (each new vertex joins complete
// or anticomplete to the existing ones).
inline Graph random_threshold_graph(int k, std::mt19937_64& rng) {
    Graph g(k);
    for (int v = 1; v < k; ++v)
        if (rng() & 1)
            for (int u = 0; u < v; ++u) g.add_edge(u, v);
    return g;
}

namespace detail {

// Random laminar family of modules: recursively partition a block, keeping
// sub-blocks that are modules of the base graph with >= 2 vertices.
inline void random_laminar_modules(const Graph& base, std::vector<int> block, bool require_anti,
                                   std::mt19937_64& rng, std::vector<std::vector<int>>& out,
                                   int depth = 0) {
    if (block.size() < 2 || depth > 6) return;
    std::shuffle(block.begin(), block.end(), rng);
    std::size_t cut = 1 + rng() % (block.size() - 1);
    std::vector<int> left(block.begin(), block.begin() + static_cast<long>(cut));
    std::vector<int> right(block.begin() + static_cast<long>(cut), block.end());
    for (auto& part : {left, right}) {
        std::vector<int> sorted = part;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.size() >= 2 &&
            is_module(base, set_of(static_cast<std::size_t>(base.n()), sorted)) &&
            (!require_anti ||
             is_anticonnected(induced(base, set_of(static_cast<std::size_t>(base.n()), sorted)).graph)) &&
            (rng() % 100) < 70)
            out.push_back(sorted);
        random_laminar_modules(base, part, require_anti, rng, out, depth + 1);
    }
}

} // namespace detail

inline OddTemplateSpec random_odd_spec(int ell, int k, std::mt19937_64& rng) {
    OddTemplateSpec spec;
    spec.ell = ell;
    spec.j = random_threshold_graph(k, rng);
    spec.h.n = k;
    std::vector<int> all(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) all[static_cast<std::size_t>(i)] = i;
    spec.h.add_edge(all);
    std::vector<std::vector<int>> extra;
    detail::random_laminar_modules(spec.j, all, false, rng, extra);
    std::sort(extra.begin(), extra.end());
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
    for (auto& e : extra) spec.h.add_edge(e);
    return spec;
}

inline EvenTemplateSpec random_even_spec(int ell, int k, int s, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        EvenTemplateSpec spec;
        spec.ell = ell;
        spec.k = k;
        spec.s = s;
        spec.ks_edges.assign(static_cast<std::size_t>(k),
                             std::vector<bool>(static_cast<std::size_t>(s), false));
        if (attempt < 100) {
            // Fair coins, rejected below unless the base graph is threshold.
            for (auto& row : spec.ks_edges)
                for (std::size_t j = 0; j < row.size(); ++j) row[j] = rng() & 1;
        } else {
            // Fallback: explicitly nested neighborhoods.
            for (int j = 0; j < s; ++j) {
                int t = static_cast<int>(rng() % static_cast<std::size_t>(k + 1));
                for (int i = 0; i < t; ++i) spec.ks_edges[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
            }
        }
        Graph base = detail::even_base_graph(spec, false);
        Graph basep = detail::even_base_graph(spec, true);
        if (!recognize_threshold(base) || !recognize_threshold(basep)) continue;
        spec.h.n = spec.hp.n = k + s;
        std::vector<int> all(static_cast<std::size_t>(k + s));
        for (int i = 0; i < k + s; ++i) all[static_cast<std::size_t>(i)] = i;
        for (auto [hg, bg] : {std::pair<Hypergraph*, const Graph*>{&spec.h, &base},
                              std::pair<Hypergraph*, const Graph*>{&spec.hp, &basep}}) {
            if (!is_connected(*bg)) hg->add_edge(all);
            std::vector<std::vector<int>> extra;
            detail::random_laminar_modules(*bg, all, true, rng, extra);
            std::sort(extra.begin(), extra.end());
            extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
            for (auto& e : extra)
                if (static_cast<int>(e.size()) < k + s || hg->edges.empty() ||
                    hg->edges.front() != e)
                    hg->add_edge(e);
        }
        if (validate_even_spec(spec).empty()) return spec;
    }
    throw std::runtime_error("could not sample a valid even template recipe");
}

// ---------------------------------------------------------------------------
// Spec text format
// ---------------------------------------------------------------------------

// Odd:  "odd <ell> <k>", then "j <word>" where word has k-1 C/A tokens
// (vertex i joins complete/anticomplete to vertices 0..i-1), then the
// hypergraph in its own text format.
inline std::string to_text(const OddTemplateSpec& spec) {
    auto cert = recognize_threshold(spec.j);
    if (!cert) throw std::invalid_argument("base graph is not a threshold graph");
    const int k = spec.j.n();
    // Normalize: relabel vertices into growth order so the word alone
    // reconstructs the base graph.
    std::vector<int> order;
    std::string word;
    for (std::size_t i = 0; i < cert->elimination.size(); ++i) {
        order.push_back(cert->elimination[i].first);
        if (i > 0)
            word += cert->elimination[i].second == AddFlag::Complete ? 'C' : 'A';
    }
    std::vector<int> pos(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::ostringstream out;
    out << "odd " << spec.ell << " " << k << "\n";
    out << "j " << (word.empty() ? "-" : word) << "\n";
    Hypergraph relabeled;
    relabeled.n = spec.h.n;
    for (const auto& e : spec.h.edges) {
        std::vector<int> ne;
        for (int v : e) ne.push_back(pos[static_cast<std::size_t>(v)]);
        relabeled.add_edge(ne);
    }
    out << to_text(relabeled);
    return out.str();
}

namespace detail {

inline Graph graph_from_word(int k, const std::string& word) {
    if (static_cast<int>(word.size()) != std::max(0, k - 1))
        throw ParseError("growth word must have k-1 tokens");
    Graph g(k);
    for (int v = 1; v < k; ++v) {
        char c = word[static_cast<std::size_t>(v - 1)];
        if (c == 'C')
            for (int u = 0; u < v; ++u) g.add_edge(u, v);
        else if (c != 'A')
            throw ParseError("growth word tokens must be C or A");
    }
    return g;
}

} // namespace detail

inline OddTemplateSpec odd_spec_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    OddTemplateSpec spec;
    int k = 0;
    if (!(in >> tag >> spec.ell >> k) || tag != "odd") throw ParseError("expected 'odd ell k'");
    std::string jtag, word;
    if (!(in >> jtag >> word) || jtag != "j") throw ParseError("expected 'j <word>'");
    if (word == "-") word.clear();
    spec.j = detail::graph_from_word(k, word);
    std::string rest;
    std::getline(in, rest);
    std::ostringstream remainder;
    remainder << in.rdbuf();
    spec.h = hypergraph_from_text(remainder.str());
    return spec;
}

// Even: "even <ell> <k> <s>", then k rows of s bits (1 = near-side cross
// edge), then the two hypergraphs.
inline std::string to_text(const EvenTemplateSpec& spec) {
    std::ostringstream out;
    out << "even " << spec.ell << " " << spec.k << " " << spec.s << "\n";
    for (const auto& row : spec.ks_edges) {
        if (row.empty()) out << "-";
        for (bool bit : row) out << (bit ? '1' : '0');
        out << "\n";
    }
    out << to_text(spec.h);
    out << to_text(spec.hp);
    return out.str();
}

inline EvenTemplateSpec even_spec_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    EvenTemplateSpec spec;
    if (!(in >> tag >> spec.ell >> spec.k >> spec.s) || tag != "even")
        throw ParseError("expected 'even ell k s'");
    for (int i = 0; i < spec.k; ++i) {
        std::string row;
        if (!(in >> row)) throw ParseError("missing cross-edge row");
        if (row == "-") row.clear();
        if (static_cast<int>(row.size()) != spec.s) throw ParseError("cross-edge row has wrong width");
        std::vector<bool> bits;
        for (char c : row) {
            if (c != '0' && c != '1') throw ParseError("cross-edge rows must be 0/1");
            bits.push_back(c == '1');
        }
        spec.ks_edges.push_back(std::move(bits));
    }
    std::string rest;
    std::getline(in, rest);
    // Two hypergraph blocks follow; the first is sized by its own header.
    std::ostringstream remainder;
    remainder << in.rdbuf();
    std::istringstream hin(remainder.str());
    int hn = 0, he = 0;
    if (!(hin >> hn >> he)) throw ParseError("missing hypergraph header");
    std::string line;
    std::getline(hin, line);
    std::ostringstream first;
    first << hn << " " << he << "\n";
    for (int e = 0; e < he; ++e) {
        if (!std::getline(hin, line)) throw ParseError("missing hyperedge line");
        first << line << "\n";
    }
    spec.h = hypergraph_from_text(first.str());
    std::ostringstream second;
    second << hin.rdbuf();
    spec.hp = hypergraph_from_text(second.str());
    return spec;
}

} // namespace holes

#endif
