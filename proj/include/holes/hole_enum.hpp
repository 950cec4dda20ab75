#ifndef HOLES_HOLE_ENUM_HPP
#define HOLES_HOLE_ENUM_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "holes/graph.hpp"

namespace holes {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("enumeration budget exceeded") {}
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Induced cycle of length >= 4, stored in canonical form: starts at the
// minimum vertex, second element is the smaller of that vertex's two
// cycle neighbors.
struct Hole {
    std::vector<int> cycle;
    int length() const { return static_cast<int>(cycle.size()); }

    bool operator==(const Hole& o) const = default;
    bool operator<(const Hole& o) const { return cycle < o.cycle; }
};

inline Hole canonical_hole(std::vector<int> cycle) {
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
    if (cycle.size() >= 3 && cycle.back() < cycle[1])
        std::reverse(cycle.begin() + 1, cycle.end());
    return Hole{std::move(cycle)};
}

inline bool is_hole_of(const Graph& g, const std::vector<int>& cycle) {
    const int len = static_cast<int>(cycle.size());
    if (len < 4) return false;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

struct HoleEnumOptions {
    int min_len = 4;
    int max_len = -1;                  // -1: unbounded
    long long cap = -1;                // -1: all holes
    long long budget = 10'000'000;     // DFS node expansions; <=0: unbounded
    bool stop_after_two_lengths = false;
};

namespace detail {

struct HoleDfs {
    const Graph& g;
    const HoleEnumOptions& opt;
    std::vector<Hole>& out;
    long long expansions = 0;
    std::set<int> lengths;

    bool done() const {
        if (opt.cap >= 0 && static_cast<long long>(out.size()) >= opt.cap) return true;
        if (opt.stop_after_two_lengths && lengths.size() >= 2) return true;
        return false;
    }

    void emit(const std::vector<int>& path) {
        out.push_back(canonical_hole(path));
        lengths.insert(static_cast<int>(path.size()));
    }

    // path[0] is the anchor (minimum vertex of any hole reported from it);
    // blocked marks vertices adjacent to an internal path vertex.
    void extend(std::vector<int>& path, Bitset& blocked) {
        if (done()) return;
        if (opt.budget > 0 && ++expansions > opt.budget) throw BudgetExceeded{};
        const int anchor = path[0];
        const int last = path.back();
        const int len = static_cast<int>(path.size());
        if (opt.max_len > 0 && len >= opt.max_len + 1) return;
        for (int x = anchor + 1; x < g.n(); ++x) {
            if (done()) return;
            if (!g.has_edge(last, x)) continue;
            if (blocked.test(static_cast<std::size_t>(x))) continue;
            bool closes = g.has_edge(x, anchor);
            if (closes) {
                // x can only close the cycle; going further would leave a chord.
                if (len >= 3 && len + 1 >= opt.min_len && x > path[1] &&
                    (opt.max_len <= 0 || len + 1 <= opt.max_len)) {
                    path.push_back(x);
                    emit(path);
                    path.pop_back();
                }
                continue;
            }
            std::vector<std::size_t> marked;
            g.neighbors(last).for_each([&](std::size_t y) {
                if (!blocked.test(y)) { blocked.set(y); marked.push_back(y); }
            });
            bool self_marked = !blocked.test(static_cast<std::size_t>(x));
            if (self_marked) blocked.set(static_cast<std::size_t>(x));
            path.push_back(x);
            extend(path, blocked);
            path.pop_back();
            if (self_marked) blocked.reset(static_cast<std::size_t>(x));
            for (auto y : marked) blocked.reset(y);
        }
    }

    void run() {
        for (int v = 0; v < g.n() && !done(); ++v) {
            auto nb = g.neighbors(v).to_vector();
            for (int a : nb) {
                if (done()) break;
                if (a < v) continue;
                std::vector<int> path{v, a};
                Bitset blocked(static_cast<std::size_t>(g.n()));
                blocked.set(static_cast<std::size_t>(v));
                blocked.set(static_cast<std::size_t>(a));
                extend(path, blocked);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
};

} // namespace detail

// All holes in canonical form, deterministic lexicographic order.
inline std::vector<Hole> enumerate_holes(const Graph& g, HoleEnumOptions opt = {}) {
    std::vector<Hole> out;
    detail::HoleDfs dfs{g, opt, out};
    dfs.run();
    return out;
}

enum class SpectrumKind { Chordal, Uniform, Mixed };

struct HoleSpectrum {
    SpectrumKind kind = SpectrumKind::Chordal;
    std::vector<int> witness_lengths;  // sorted distinct lengths observed
    std::vector<Hole> witnesses;       // up to two holes demonstrating kind
    int uniform_length() const { return witness_lengths.size() == 1 ? witness_lengths[0] : -1; }
};

inline HoleSpectrum hole_spectrum(const Graph& g, bool early_exit = true,
                                  long long budget = 10'000'000) {
    HoleEnumOptions opt;
    opt.budget = budget;
    opt.stop_after_two_lengths = early_exit;
    auto hs = enumerate_holes(g, opt);
    HoleSpectrum s;
    std::set<int> lens;
    for (const auto& h : hs) lens.insert(h.length());
    s.witness_lengths.assign(lens.begin(), lens.end());
    if (lens.empty()) {
        s.kind = SpectrumKind::Chordal;
    } else if (lens.size() == 1) {
        s.kind = SpectrumKind::Uniform;
        s.witnesses.push_back(hs.front());
    } else {
        s.kind = SpectrumKind::Mixed;
        for (int len : {s.witness_lengths[0], s.witness_lengths[1]})
            for (const auto& h : hs)
                if (h.length() == len) { s.witnesses.push_back(h); break; }
    }
    return s;
}

inline bool is_chordal_by_holes(const Graph& g) {
    HoleEnumOptions opt;
    opt.cap = 1;
    return enumerate_holes(g, opt).empty();
}

// Membership in C_k: every hole has length exactly k (chordal is vacuous).
inline bool in_class_ck(const Graph& g, int k, long long budget = 10'000'000) {
    auto s = hole_spectrum(g, true, budget);
    return s.kind == SpectrumKind::Chordal ||
           (s.kind == SpectrumKind::Uniform && s.uniform_length() == k);
}

} // namespace holes

#endif
