#ifndef HOLES_TRUEMPER_HPP
#define HOLES_TRUEMPER_HPP

#include <array>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "holes/graph.hpp"
#include "holes/hole_enum.hpp"

namespace holes {

enum class ConfigKind { Prism, Pyramid, Theta, Wheel };
enum class WheelKind { Twin, Universal, Proper };

inline const char* to_string(ConfigKind k) {
    switch (k) {
        case ConfigKind::Prism: return "prism";
        case ConfigKind::Pyramid: return "pyramid";
        case ConfigKind::Theta: return "theta";
        case ConfigKind::Wheel: return "wheel";
    }
    return "?";
}

inline const char* to_string(WheelKind k) {
    switch (k) {
        case WheelKind::Twin: return "twin";
        case WheelKind::Universal: return "universal";
        case WheelKind::Proper: return "proper";
    }
    return "?";
}

struct TruemperConfig {
    ConfigKind kind = ConfigKind::Wheel;
    // prism: three paths a_i..b_i; pyramid: three paths apex..b_i;
    // theta: three paths a..b; wheel: single entry, the rim cycle.
    std::vector<std::vector<int>> paths;
    int apex = -1;  // pyramid apex or wheel center
    std::vector<std::array<int, 3>> triangles;
    std::optional<bool> balanced;
    std::optional<WheelKind> wheel_kind;

    std::vector<int> vertices() const {
        std::vector<int> out;
        for (const auto& p : paths) out.insert(out.end(), p.begin(), p.end());
        if (kind == ConfigKind::Wheel && apex >= 0) out.push_back(apex);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::string describe() const {
        std::ostringstream os;
        os << to_string(kind);
        if (wheel_kind) os << ' ' << to_string(*wheel_kind);
        if (balanced) os << (*balanced ? " balanced" : " unbalanced");
        os << " |";
        for (const auto& p : paths) {
            for (int v : p) os << ' ' << v;
            os << " |";
        }
        if (apex >= 0) os << " apex/center " << apex;
        return os.str();
    }
};

inline WheelKind classify_wheel(const Graph& g, const Hole& rim, int center) {
    if (!is_hole_of(g, rim.cycle))
        throw std::invalid_argument("classify_wheel: rim is not a hole");
    const int len = rim.length();
    std::vector<int> hits;
    for (int i = 0; i < len; ++i)
        if (g.has_edge(center, rim.cycle[i])) hits.push_back(i);
    if (static_cast<int>(hits.size()) < 3)
        throw std::invalid_argument("classify_wheel: center has fewer than 3 rim neighbors");
    if (static_cast<int>(hits.size()) == len) return WheelKind::Universal;
    if (hits.size() == 3) {
        // Twin iff the three rim neighbors are consecutive on the rim.
        for (int s = 0; s < len; ++s) {
            if (g.has_edge(center, rim.cycle[s]) &&
                g.has_edge(center, rim.cycle[(s + 1) % len]) &&
                g.has_edge(center, rim.cycle[(s + 2) % len]))
                return WheelKind::Twin;
        }
    }
    return WheelKind::Proper;
}

namespace detail {

struct ConfigSearch {
    const Graph& g;
    long long budget;
    long long expansions = 0;

    void tick() {
        if (budget > 0 && ++expansions > budget) throw BudgetExceeded{};
    }

    // Chordless paths s..t whose internal vertices lie in `allowed`.
    // Length (edge count) within [min_len, max_len]; capped.
    std::vector<std::vector<int>> chordless_paths(int s, int t, const Bitset& allowed,
                                                  int min_len, int max_len,
                                                  std::size_t cap = 4096) {
        std::vector<std::vector<int>> out;
        std::vector<int> path{s};
        Bitset on_path(static_cast<std::size_t>(g.n()));
        on_path.set(static_cast<std::size_t>(s));
        auto rec = [&](auto&& self) -> void {
            if (out.size() >= cap) return;
            tick();
            const int last = path.back();
            const int len = static_cast<int>(path.size()) - 1;
            if (g.has_edge(last, t) && last != s) {
                // t must see only the last path vertex.
                bool chord = false;
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    if (g.has_edge(path[i], t)) chord = true;
                if (!chord && len + 1 >= min_len && (max_len <= 0 || len + 1 <= max_len)) {
                    path.push_back(t);
                    out.push_back(path);
                    path.pop_back();
                }
            }
            if (max_len > 0 && len + 1 >= max_len) return;
            for (int x = 0; x < g.n(); ++x) {
                if (out.size() >= cap) return;
                if (x == t || !allowed.test(static_cast<std::size_t>(x))) continue;
                if (on_path.test(static_cast<std::size_t>(x))) continue;
                if (!g.has_edge(last, x)) continue;
                bool chord = false;
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    if (g.has_edge(path[i], x)) chord = true;
                if (chord) continue;
                path.push_back(x);
                on_path.set(static_cast<std::size_t>(x));
                self(self);
                on_path.reset(static_cast<std::size_t>(x));
                path.pop_back();
            }
        };
        if (s != t) {
            if (g.has_edge(s, t) && min_len <= 1 && (max_len <= 0 || max_len >= 1))
                out.push_back({s, t});
            rec(rec);
        }
        return out;
    }
};

// The union of the given paths plus the listed extra edges must induce
// exactly that edge set in g.
inline bool induces_exactly(const Graph& g, const std::vector<std::vector<int>>& paths,
                            const std::vector<std::pair<int, int>>& extra_edges) {
    std::vector<int> verts;
    std::set<std::pair<int, int>> expected;
    auto norm = [](int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
    for (const auto& p : paths) {
        verts.insert(verts.end(), p.begin(), p.end());
        for (std::size_t i = 0; i + 1 < p.size(); ++i) expected.insert(norm(p[i], p[i + 1]));
    }
    for (auto [a, b] : extra_edges) expected.insert(norm(a, b));
    std::sort(verts.begin(), verts.end());
    auto unique_end = std::unique(verts.begin(), verts.end());
    // Paths sharing interior vertices would have collapsed here; require
    // exact vertex multiplicity checks at the call sites instead.
    verts.erase(unique_end, verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j]) != expected.count(norm(verts[i], verts[j])))
                return false;
    return true;
}

inline bool internally_compatible(const std::vector<int>& p, const std::vector<int>& q,
                                  bool share_first, bool share_last) {
    // Vertex-disjointness up to the declared shared endpoints.
    std::set<int> ps(p.begin() + (share_first ? 1 : 0), p.end() - (share_last ? 1 : 0));
    for (std::size_t i = (share_first ? 1 : 0); i + (share_last ? 1 : 0) < q.size(); ++i)
        if (ps.count(q[i])) return false;
    return true;
}

} // namespace detail

struct FindConfigOptions {
    long long budget = 10'000'000;
    std::size_t cap = 10'000;  // max configurations reported
};

inline std::vector<TruemperConfig> find_configs(const Graph& g,
                                                const std::set<ConfigKind>& kinds,
                                                FindConfigOptions opt = {}) {
    const int n = g.n();
    detail::ConfigSearch search{g, opt.budget};
    std::vector<TruemperConfig> out;
    std::set<std::vector<int>> seen;  // canonical keys

    auto emit = [&](TruemperConfig cfg, std::vector<int> key) {
        key.insert(key.begin(), static_cast<int>(cfg.kind));
        if (seen.insert(std::move(key)).second) out.push_back(std::move(cfg));
    };
    auto full = [&]() { return out.size() >= opt.cap; };

    if (kinds.count(ConfigKind::Wheel)) {
        HoleEnumOptions hopt;
        hopt.budget = opt.budget;
        for (const auto& hole : enumerate_holes(g, hopt)) {
            if (full()) break;
            Bitset rimset = make_set(static_cast<std::size_t>(n), hole.cycle);
            for (int c = 0; c < n && !full(); ++c) {
                if (rimset.test(static_cast<std::size_t>(c))) continue;
                if (static_cast<int>((g.neighbors(c) & rimset).count()) < 3) continue;
                TruemperConfig cfg;
                cfg.kind = ConfigKind::Wheel;
                cfg.paths = {hole.cycle};
                cfg.apex = c;
                cfg.wheel_kind = classify_wheel(g, hole, c);
                std::vector<int> key = hole.cycle;
                key.push_back(c);
                emit(std::move(cfg), std::move(key));
            }
        }
    }

    if (kinds.count(ConfigKind::Theta)) {
        for (int a = 0; a < n && !full(); ++a)
            for (int b = a + 1; b < n && !full(); ++b) {
                if (g.has_edge(a, b)) continue;
                Bitset allowed = g.all_vertices();
                allowed.reset(static_cast<std::size_t>(a));
                allowed.reset(static_cast<std::size_t>(b));
                auto paths = search.chordless_paths(a, b, allowed, 2, -1);
                for (std::size_t i = 0; i < paths.size() && !full(); ++i)
                    for (std::size_t j = i + 1; j < paths.size() && !full(); ++j) {
                        if (!detail::internally_compatible(paths[i], paths[j], true, true)) continue;
                        for (std::size_t l = j + 1; l < paths.size() && !full(); ++l) {
                            search.tick();
                            if (!detail::internally_compatible(paths[i], paths[l], true, true)) continue;
                            if (!detail::internally_compatible(paths[j], paths[l], true, true)) continue;
                            if (!detail::induces_exactly(g, {paths[i], paths[j], paths[l]}, {}))
                                continue;
                            TruemperConfig cfg;
                            cfg.kind = ConfigKind::Theta;
                            cfg.paths = {paths[i], paths[j], paths[l]};
                            std::sort(cfg.paths.begin(), cfg.paths.end());
                            cfg.balanced = paths[i].size() == paths[j].size() &&
                                           paths[j].size() == paths[l].size();
                            std::vector<int> key;
                            for (const auto& p : cfg.paths) {
                                key.insert(key.end(), p.begin(), p.end());
                                key.push_back(-1);
                            }
                            emit(std::move(cfg), std::move(key));
                        }
                    }
            }
    }

    auto triangles = [&]() {
        std::vector<std::array<int, 3>> tris;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (!g.has_edge(a, b)) continue;
                for (int c = b + 1; c < n; ++c)
                    if (g.has_edge(a, c) && g.has_edge(b, c)) tris.push_back({a, b, c});
            }
        return tris;
    };

    if (kinds.count(ConfigKind::Pyramid)) {
        for (const auto& tri : triangles()) {
            if (full()) break;
            for (int a = 0; a < n && !full(); ++a) {
                if (a == tri[0] || a == tri[1] || a == tri[2]) continue;
                Bitset branch = make_set(static_cast<std::size_t>(n), {tri[0], tri[1], tri[2], a});
                std::array<std::vector<std::vector<int>>, 3> cand;
                for (int i = 0; i < 3; ++i) {
                    Bitset allowed = minus(g.all_vertices(), branch);
                    // Internal vertices may touch no branch vertex but their own ends.
                    for (int j = 0; j < 3; ++j)
                        if (j != i) allowed.subtract(g.neighbors(tri[j]));
                    cand[i] = search.chordless_paths(a, tri[i], allowed, 1, -1);
                }
                for (const auto& p0 : cand[0]) {
                    if (full()) break;
                    for (const auto& p1 : cand[1]) {
                        if (full()) break;
                        if (!detail::internally_compatible(p0, p1, true, false)) continue;
                        if (p0.size() == 2 && p1.size() == 2) continue;  // at most one length-1
                        for (const auto& p2 : cand[2]) {
                            if (full()) break;
                            search.tick();
                            if ((p0.size() == 2 || p1.size() == 2) && p2.size() == 2) continue;
                            if (!detail::internally_compatible(p0, p2, true, false)) continue;
                            if (!detail::internally_compatible(p1, p2, true, false)) continue;
                            if (!detail::induces_exactly(g, {p0, p1, p2},
                                                         {{tri[0], tri[1]}, {tri[0], tri[2]}, {tri[1], tri[2]}}))
                                continue;
                            TruemperConfig cfg;
                            cfg.kind = ConfigKind::Pyramid;
                            cfg.paths = {p0, p1, p2};
                            cfg.apex = a;
                            cfg.triangles = {tri};
                            cfg.balanced = p0.size() == p1.size() && p1.size() == p2.size();
                            std::vector<int> key{a};
                            for (const auto& p : cfg.paths) {
                                key.insert(key.end(), p.begin(), p.end());
                                key.push_back(-1);
                            }
                            emit(std::move(cfg), std::move(key));
                        }
                    }
                }
            }
        }
    }

    if (kinds.count(ConfigKind::Prism)) {
        auto tris = triangles();
        for (std::size_t ti = 0; ti < tris.size() && !full(); ++ti)
            for (std::size_t tj = 0; tj < tris.size() && !full(); ++tj) {
                if (ti == tj) continue;
                // Orient: report each prism once, with the lexicographically
                // smaller triangle first.
                if (tris[ti] > tris[tj]) continue;
                const auto& A = tris[ti];
                std::array<int, 3> B = tris[tj];
                bool disjoint = true;
                for (int x : A)
                    for (int y : B)
                        if (x == y) disjoint = false;
                if (!disjoint) continue;
                std::sort(B.begin(), B.end());
                do {
                    if (full()) break;
                    Bitset branch = make_set(static_cast<std::size_t>(n),
                                             {A[0], A[1], A[2], B[0], B[1], B[2]});
                    std::array<std::vector<std::vector<int>>, 3> cand;
                    for (int i = 0; i < 3; ++i) {
                        Bitset allowed = minus(g.all_vertices(), branch);
                        for (int j = 0; j < 3; ++j)
                            if (j != i) {
                                allowed.subtract(g.neighbors(A[j]));
                                allowed.subtract(g.neighbors(B[j]));
                            }
                        cand[i] = search.chordless_paths(A[i], B[i], allowed, 1, -1);
                    }
                    for (const auto& p0 : cand[0]) {
                        if (full()) break;
                        for (const auto& p1 : cand[1]) {
                            if (full()) break;
                            if (!detail::internally_compatible(p0, p1, false, false)) continue;
                            for (const auto& p2 : cand[2]) {
                                if (full()) break;
                                search.tick();
                                if (!detail::internally_compatible(p0, p2, false, false)) continue;
                                if (!detail::internally_compatible(p1, p2, false, false)) continue;
                                if (!detail::induces_exactly(
                                        g, {p0, p1, p2},
                                        {{A[0], A[1]}, {A[0], A[2]}, {A[1], A[2]},
                                         {B[0], B[1]}, {B[0], B[2]}, {B[1], B[2]}}))
                                    continue;
                                TruemperConfig cfg;
                                cfg.kind = ConfigKind::Prism;
                                cfg.paths = {p0, p1, p2};
                                std::sort(cfg.paths.begin(), cfg.paths.end());
                                cfg.triangles = {A, B};
                                cfg.balanced = p0.size() == p1.size() && p1.size() == p2.size();
                                std::vector<int> key;
                                for (const auto& p : cfg.paths) {
                                    key.insert(key.end(), p.begin(), p.end());
                                    key.push_back(-1);
                                }
                                emit(std::move(cfg), std::move(key));
                            }
                        }
                    }
                } while (std::next_permutation(B.begin(), B.end()));
            }
    }

    std::sort(out.begin(), out.end(), [](const TruemperConfig& x, const TruemperConfig& y) {
        if (x.kind != y.kind) return x.kind < y.kind;
        if (x.paths != y.paths) return x.paths < y.paths;
        return x.apex < y.apex;
    });
    return out;
}

inline std::set<ConfigKind> all_config_kinds() {
    return {ConfigKind::Prism, ConfigKind::Pyramid, ConfigKind::Theta, ConfigKind::Wheel};
}

struct AuditReport {
    std::vector<std::string> violations;
    std::size_t configs_checked = 0;
    bool ok() const { return violations.empty(); }
};

// For a graph whose holes all have length k, every Truemper configuration
// must fall into the short list allowed for C_k.
inline AuditReport audit_configs_for_class(const Graph& g, int k, FindConfigOptions opt = {}) {
    auto spectrum = hole_spectrum(g, true, opt.budget);
    if (spectrum.kind == SpectrumKind::Mixed ||
        (spectrum.kind == SpectrumKind::Uniform && spectrum.uniform_length() != k))
        throw std::invalid_argument("audit_configs_for_class: hole spectrum not {chordal, uniform(k)}");
    AuditReport report;
    auto configs = find_configs(g, all_config_kinds(), opt);
    report.configs_checked = configs.size();
    const bool odd = (k % 2) == 1;
    const int ell = odd ? (k - 1) / 2 : k / 2;
    for (const auto& c : configs) {
        auto path_len = [&](int i) { return static_cast<int>(c.paths[i].size()) - 1; };
        bool fine = false;
        switch (c.kind) {
            case ConfigKind::Wheel:
                fine = c.wheel_kind == WheelKind::Twin || c.wheel_kind == WheelKind::Universal;
                break;
            case ConfigKind::Pyramid:
                fine = odd && *c.balanced && path_len(0) == ell;
                break;
            case ConfigKind::Theta:
                fine = !odd && *c.balanced && path_len(0) == ell;
                break;
            case ConfigKind::Prism:
                fine = !odd && *c.balanced && path_len(0) == ell - 1;
                break;
        }
        if (!fine) report.violations.push_back(c.describe());
    }
    return report;
}

} // namespace holes

#endif
