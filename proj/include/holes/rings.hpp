#ifndef HOLES_RINGS_HPP
#define HOLES_RINGS_HPP

#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "holes/classes.hpp"
#include "holes/graph.hpp"
#include "holes/hole_enum.hpp"
#include "holes/io.hpp"

namespace holes {

struct RingPartition {
    int k = 0;
    std::vector<std::vector<int>> cliques;  // circular, disjoint, covering V
};

// Construction parameters. staircases[i] couples K_i to K_{i+1 mod k}:
// vertex of rank j in K_i (rank 0 highest) is adjacent to the top
// staircases[i][j] vertices of K_{i+1}. Monotone nonincreasing with
// t[0] = |K_{i+1}| and every entry >= 1, which forces the top vertex of
// each clique to be complete to both neighbouring cliques.
struct RingSpec {
    int k = 0;
    std::vector<int> sizes;
    std::vector<std::vector<int>> staircases;
};

struct RingBuild {
    Graph graph;
    RingPartition partition;
};

inline RingBuild build_ring(const RingSpec& spec) {
    const int k = spec.k;
    if (k < 4) throw std::invalid_argument("ring: k must be >= 4");
    if (static_cast<int>(spec.sizes.size()) != k || static_cast<int>(spec.staircases.size()) != k)
        throw std::invalid_argument("ring: need k sizes and k staircases");
    int n = 0;
    std::vector<int> offset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        if (spec.sizes[i] < 1) throw std::invalid_argument("ring: sizes must be >= 1");
        offset[i] = n;
        n += spec.sizes[i];
    }
    for (int i = 0; i < k; ++i) {
        const auto& t = spec.staircases[i];
        const int next = (i + 1) % k;
        if (static_cast<int>(t.size()) != spec.sizes[i])
            throw std::invalid_argument("ring: staircase length mismatch");
        if (t[0] != spec.sizes[next])
            throw std::invalid_argument("ring: top vertex must be complete to the next clique");
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (t[j] < 1 || t[j] > spec.sizes[next])
                throw std::invalid_argument("ring: staircase entry out of range");
            if (j > 0 && t[j] > t[j - 1])
                throw std::invalid_argument("ring: staircase must be nonincreasing");
        }
    }
    Graph g(n);
    RingPartition part;
    part.k = k;
    part.cliques.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        for (int a = 0; a < spec.sizes[i]; ++a) {
            part.cliques[i].push_back(offset[i] + a);
            for (int b = a + 1; b < spec.sizes[i]; ++b) g.add_edge(offset[i] + a, offset[i] + b);
        }
    }
    for (int i = 0; i < k; ++i) {
        const int next = (i + 1) % k;
        for (int j = 0; j < spec.sizes[i]; ++j)
            for (int r = 0; r < spec.staircases[i][j]; ++r)
                g.add_edge(offset[i] + j, offset[next] + r);
    }
    return {std::move(g), std::move(part)};
}

// Empty result iff the partition witnesses a ring; also checks the derived
// half-graph property of consecutive clique unions.
inline std::vector<std::string> verify_ring(const Graph& g, const RingPartition& p) {
    std::vector<std::string> bad;
    const int k = p.k;
    if (k < 4 || static_cast<int>(p.cliques.size()) != k) {
        bad.push_back("shape: need k >= 4 cliques");
        return bad;
    }
    std::vector<int> owner(static_cast<std::size_t>(g.n()), -1);
    for (int i = 0; i < k; ++i) {
        if (p.cliques[i].empty()) bad.push_back("shape: empty clique " + std::to_string(i));
        for (int v : p.cliques[i]) {
            if (v < 0 || v >= g.n() || owner[v] != -1) {
                bad.push_back("shape: bad cover at vertex " + std::to_string(v));
                return bad;
            }
            owner[v] = i;
        }
    }
    for (int v = 0; v < g.n(); ++v)
        if (owner[v] < 0) {
            bad.push_back("shape: vertex " + std::to_string(v) + " uncovered");
            return bad;
        }
    for (int i = 0; i < k; ++i)
        if (!is_clique(g, make_set(static_cast<std::size_t>(g.n()), p.cliques[i])))
            bad.push_back("condition 1: set " + std::to_string(i) + " is not a clique");
    for (int u = 0; u < g.n(); ++u) {
        g.neighbors(u).for_each([&](std::size_t w) {
            int v = static_cast<int>(w);
            if (v < u) return;
            int d = std::abs(owner[u] - owner[v]);
            if (d != 0 && d != 1 && d != k - 1)
                bad.push_back("condition 2: edge " + std::to_string(u) + "-" + std::to_string(v) +
                              " joins distant cliques");
        });
    }
    for (int i = 0; i < k; ++i) {
        Bitset both(static_cast<std::size_t>(g.n()));
        for (int v : p.cliques[(i + k - 1) % k]) both.set(static_cast<std::size_t>(v));
        for (int v : p.cliques[(i + 1) % k]) both.set(static_cast<std::size_t>(v));
        bool found = false;
        for (int v : p.cliques[i])
            if (both.is_subset_of(g.neighbors(v))) found = true;
        if (!found)
            bad.push_back("condition 3: no vertex of clique " + std::to_string(i) +
                          " is complete to both neighbours");
    }
    for (int i = 0; i < k; ++i)
        for (std::size_t a = 0; a < p.cliques[i].size(); ++a)
            for (std::size_t b = a + 1; b < p.cliques[i].size(); ++b) {
                int x = p.cliques[i][a], y = p.cliques[i][b];
                if (!leq(g, x, y) && !leq(g, y, x))
                    bad.push_back("condition 4: incomparable pair " + std::to_string(x) + "," +
                                  std::to_string(y) + " in clique " + std::to_string(i));
            }
    if (bad.empty()) {
        for (int i = 0; i < k; ++i) {
            std::vector<int> uni = p.cliques[i];
            const auto& nx = p.cliques[(i + 1) % k];
            uni.insert(uni.end(), nx.begin(), nx.end());
            auto sub = induced(g, uni);
            if (!recognize_half_graph(sub.graph))
                bad.push_back("half-graph: union of cliques " + std::to_string(i) + "," +
                              std::to_string((i + 1) % k) + " is not a half graph");
        }
    }
    return bad;
}

namespace detail {

// Try to complete a seed hole (one vertex per clique) into a full partition.
// Ambiguous vertices (seed window of size 2) are resolved by bounded branching.
inline std::optional<RingPartition> grow_ring_from_seed(const Graph& g,
                                                        const std::vector<int>& hole) {
    const int k = static_cast<int>(hole.size());
    const int n = g.n();
    std::vector<int> pos_of(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < k; ++i) pos_of[hole[i]] = i;
    std::vector<int> rest;
    std::vector<std::vector<int>> options;
    for (int u = 0; u < n; ++u) {
        if (pos_of[u] >= 0) continue;
        std::vector<int> hits;
        for (int i = 0; i < k; ++i)
            if (g.has_edge(u, hole[i])) hits.push_back(i);
        // u must see its own clique's seed, so candidate positions are seed
        // neighbours whose window {i-1, i, i+1} covers all hits.
        std::vector<int> cand;
        for (int i : hits) {
            bool ok = true;
            for (int h : hits) {
                int d = std::abs(h - i);
                if (d != 0 && d != 1 && d != k - 1) ok = false;
            }
            if (ok) cand.push_back(i);
        }
        if (cand.empty()) return std::nullopt;
        rest.push_back(u);
        options.push_back(std::move(cand));
    }
    long long attempts = 0;
    std::vector<int> chosen(rest.size(), -1);
    auto rec = [&](auto&& self, std::size_t idx) -> std::optional<RingPartition> {
        if (idx == rest.size()) {
            RingPartition part;
            part.k = k;
            part.cliques.resize(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) part.cliques[i].push_back(hole[i]);
            for (std::size_t j = 0; j < rest.size(); ++j)
                part.cliques[chosen[j]].push_back(rest[j]);
            for (auto& c : part.cliques) std::sort(c.begin(), c.end());
            if (verify_ring(g, part).empty()) return part;
            return std::nullopt;
        }
        for (int c : options[idx]) {
            if (++attempts > 4096) return std::nullopt;
            chosen[idx] = c;
            // Cheap local pruning: u must be adjacent to everything already
            // assigned to the same clique.
            bool ok = true;
            for (std::size_t j = 0; j < idx && ok; ++j)
                if (chosen[j] == c && !g.has_edge(rest[j], rest[idx])) ok = false;
            if (!ok) continue;
            if (auto r = self(self, idx + 1)) return r;
        }
        return std::nullopt;
    };
    return rec(rec, 0);
}

} // namespace detail

// Recover some ring partition, or absent. Seeds are holes of the uniform
// spectrum length, capped at 64.
inline std::optional<RingPartition> recognize_ring(const Graph& g,
                                                   long long budget = 10'000'000) {
    auto spectrum = hole_spectrum(g, true, budget);
    if (spectrum.kind != SpectrumKind::Uniform) return std::nullopt;
    const int k = spectrum.uniform_length();
    if (k < 4) return std::nullopt;
    HoleEnumOptions opt;
    opt.min_len = k;
    opt.max_len = k;
    opt.cap = 64;
    opt.budget = budget;
    for (const auto& hole : enumerate_holes(g, opt))
        if (auto part = detail::grow_ring_from_seed(g, hole.cycle)) return part;
    return std::nullopt;
}

// Ring spec text: "ring k" / "sizes s1 .. sk" / k staircase lines.
inline std::string to_text(const RingSpec& spec) {
    std::ostringstream os;
    os << "ring " << spec.k << "\nsizes";
    for (int s : spec.sizes) os << ' ' << s;
    os << '\n';
    for (const auto& t : spec.staircases) {
        for (std::size_t j = 0; j < t.size(); ++j) os << (j ? " " : "") << t[j];
        os << '\n';
    }
    return os.str();
}

inline RingSpec ring_spec_from_text(std::istream& in) {
    RingSpec spec;
    std::string word;
    if (!(in >> word) || word != "ring" || !(in >> spec.k) || spec.k < 4)
        throw ParseError("ring spec: bad header");
    if (!(in >> word) || word != "sizes") throw ParseError("ring spec: missing sizes");
    spec.sizes.resize(static_cast<std::size_t>(spec.k));
    for (int& s : spec.sizes)
        if (!(in >> s) || s < 1) throw ParseError("ring spec: bad size");
    spec.staircases.resize(static_cast<std::size_t>(spec.k));
    for (int i = 0; i < spec.k; ++i) {
        spec.staircases[i].resize(static_cast<std::size_t>(spec.sizes[i]));
        for (int& t : spec.staircases[i])
            if (!(in >> t)) throw ParseError("ring spec: bad staircase entry");
    }
    return spec;
}

inline RingSpec ring_spec_from_text(const std::string& text) {
    std::istringstream is(text);
    return ring_spec_from_text(is);
}

// Seeded random valid spec: sizes in [1, max_size], random monotone
// staircases respecting the construction constraints.
inline RingSpec random_ring_spec(int k, int max_size, std::mt19937_64& rng) {
    RingSpec spec;
    spec.k = k;
    std::uniform_int_distribution<int> size_dist(1, max_size);
    for (int i = 0; i < k; ++i) spec.sizes.push_back(size_dist(rng));
    for (int i = 0; i < k; ++i) {
        const int next_size = spec.sizes[(i + 1) % k];
        std::vector<int> t(static_cast<std::size_t>(spec.sizes[i]));
        t[0] = next_size;
        for (std::size_t j = 1; j < t.size(); ++j)
            t[j] = std::uniform_int_distribution<int>(1, t[j - 1])(rng);
        spec.staircases.push_back(std::move(t));
    }
    return spec;
}

} // namespace holes

#endif
