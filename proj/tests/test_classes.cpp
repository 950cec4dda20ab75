#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holes/classes.hpp"
#include "holes/hole_enum.hpp"
#include "holes/subgraphs.hpp"
#include "test_util.hpp"

using namespace holes;

TEST_CASE("leq basics") {
    Graph p3 = path_graph(3);
    CHECK(leq(p3, 0, 1));
    CHECK_FALSE(leq(p3, 1, 0));

    Graph c4 = cycle_graph(4);
    CHECK(leq(c4, 0, 2));
    CHECK(leq(c4, 2, 0));

    Graph k2 = complete_graph(2);
    CHECK(leq(k2, 0, 1));
    CHECK(leq(k2, 1, 0));
    CHECK(leq(k2, 0, 0));
}

TEST_CASE("leq is transitive") {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + t % 6;  // up to 7
        Graph g = random_graph(n, 0.5, rng);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (leq(g, a, b) && leq(g, b, c)) CHECK(leq(g, a, c));
    }
}

TEST_CASE("threshold recognition examples") {
    auto k3 = recognize_threshold(complete_graph(3));
    REQUIRE(k3);
    CHECK(verify_threshold_certificate(complete_graph(3), *k3));
    for (std::size_t i = 1; i < k3->elimination.size(); ++i)
        CHECK(k3->elimination[i].second == AddFlag::Complete);

    CHECK_FALSE(recognize_threshold(path_graph(4)));

    Graph star(4);
    for (int leaf = 1; leaf < 4; ++leaf) star.add_edge(0, leaf);
    auto s = recognize_threshold(star);
    REQUIRE(s);
    CHECK(verify_threshold_certificate(star, *s));
}

TEST_CASE("threshold iff (P4,C4,2K2)-free") {
    std::mt19937_64 rng(11);
    std::vector<Graph> patterns{pattern_p4(), pattern_c4(), pattern_2k2()};
    for (int t = 0; t < 600; ++t) {
        int n = 1 + t % 7;
        Graph g = random_graph(n, 0.5, rng);
        auto cert = recognize_threshold(g);
        CHECK(static_cast<bool>(cert) == free_of(g, patterns));
        if (cert) CHECK(verify_threshold_certificate(g, *cert));
    }
}

TEST_CASE("threshold complement: domination reverses, elimination survives") {
    std::mt19937_64 rng(12);
    int used = 0;
    for (int t = 0; t < 400 && used < 60; ++t) {
        Graph g = random_graph(2 + t % 6, 0.5, rng);
        auto cert = recognize_threshold(g);
        if (!cert) continue;
        ++used;
        Graph co = complement(g);
        REQUIRE(recognize_threshold(co));
        std::vector<int> rev(cert->domination.rbegin(), cert->domination.rend());
        for (std::size_t i = 0; i < rev.size(); ++i)
            for (std::size_t j = i + 1; j < rev.size(); ++j)
                CHECK(leq(co, rev[i], rev[j]));
        // The peel sequence replayed on the complement with flipped flags
        // rebuilds the complement: same elimination order works for both.
        Graph rebuilt(co.n());
        std::vector<int> placed;
        for (const auto& [v, flag] : cert->elimination) {
            if (flag == AddFlag::Anticomplete)
                for (int u : placed) rebuilt.add_edge(u, v);
            placed.push_back(v);
        }
        CHECK(rebuilt == co);
    }
    CHECK(used >= 40);
}

TEST_CASE("cograph recognition") {
    CHECK_FALSE(recognize_cograph(cycle_graph(5)));
    CHECK_FALSE(recognize_cograph(path_graph(4)));
    CHECK(recognize_cograph(complete_graph(4)));
    std::mt19937_64 rng(13);
    for (int t = 0; t < 400; ++t) {
        Graph g = random_graph(1 + t % 7, 0.5, rng);
        CHECK(static_cast<bool>(recognize_cograph(g)) == !contains_induced(g, pattern_p4()));
    }
}

TEST_CASE("split recognition") {
    CHECK_FALSE(recognize_split(cycle_graph(5)));
    CHECK_FALSE(recognize_split(pattern_2k2()));
    auto k4 = recognize_split(complete_graph(4));
    REQUIRE(k4);
    std::mt19937_64 rng(14);
    std::vector<Graph> patterns{pattern_c4(), pattern_c5(), pattern_2k2()};
    for (int t = 0; t < 500; ++t) {
        Graph g = random_graph(1 + t % 7, 0.5, rng);
        auto cert = recognize_split(g);
        CHECK(static_cast<bool>(cert) == free_of(g, patterns));
        if (cert) {
            CHECK(is_clique(g, make_set(static_cast<std::size_t>(g.n()), cert->clique)));
            CHECK(is_stable_set(g, make_set(static_cast<std::size_t>(g.n()), cert->stable)));
            CHECK(cert->clique.size() + cert->stable.size() == static_cast<std::size_t>(g.n()));
        }
    }
}

TEST_CASE("chordal recognition") {
    CHECK_FALSE(recognize_chordal(cycle_graph(5)));
    CHECK(recognize_chordal(complete_graph(4)));
    CHECK(recognize_chordal(pattern_2k2()));
    std::mt19937_64 rng(15);
    for (int t = 0; t < 400; ++t) {
        Graph g = random_graph(1 + t % 7, 0.5, rng);
        auto peo = recognize_chordal(g);
        CHECK(static_cast<bool>(peo) == is_chordal_by_holes(g));
        CHECK(static_cast<bool>(peo) == (hole_spectrum(g).kind == SpectrumKind::Chordal));
    }
}

TEST_CASE("quasi-threshold recognition") {
    auto k3 = recognize_quasi_threshold(complete_graph(3));
    REQUIRE(k3);
    CHECK(is_laminar(*k3));
    CHECK(line_graph(*k3) == complete_graph(3));
    // Peeling universals of K3 yields a nested chain.
    std::vector<std::size_t> sizes;
    for (const auto& e : k3->edges) sizes.push_back(e.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});

    CHECK_FALSE(recognize_quasi_threshold(path_graph(4)));

    auto two = recognize_quasi_threshold(pattern_2k2());
    REQUIRE(two);
    CHECK(is_laminar(*two));
    CHECK(line_graph(*two) == pattern_2k2());

    std::mt19937_64 rng(16);
    std::vector<Graph> patterns{pattern_p4(), pattern_c4()};
    for (int t = 0; t < 500; ++t) {
        Graph g = random_graph(1 + t % 7, 0.5, rng);
        auto h = recognize_quasi_threshold(g);
        CHECK(static_cast<bool>(h) == free_of(g, patterns));
        if (h) {
            CHECK(is_laminar(*h));
            // One hyperedge per vertex; identity bijection.
            CHECK(h->edges.size() == static_cast<std::size_t>(g.n()));
            CHECK(line_graph(*h) == g);
        }
    }
}

TEST_CASE("half graph recognition") {
    auto k4 = recognize_half_graph(complete_graph(4));
    REQUIRE(k4);

    CHECK_FALSE(recognize_half_graph(cycle_graph(4)));
    CHECK_FALSE(recognize_half_graph(cycle_graph(5)));
    CHECK_FALSE(recognize_half_graph(pattern_3k1()));

    auto p3 = recognize_half_graph(path_graph(3));
    REQUIRE(p3);

    std::mt19937_64 rng(17);
    std::vector<Graph> patterns{pattern_3k1(), pattern_c4(), pattern_c5()};
    for (int t = 0; t < 500; ++t) {
        Graph g = random_graph(1 + t % 7, 0.5, rng);
        auto cert = recognize_half_graph(g);
        CHECK(static_cast<bool>(cert) == free_of(g, patterns));
        if (cert) {
            CHECK(is_clique(g, make_set(static_cast<std::size_t>(g.n()), cert->cliqueK)));
            CHECK(is_clique(g, make_set(static_cast<std::size_t>(g.n()), cert->cliqueK2)));
            CHECK(cert->cliqueK.size() + cert->cliqueK2.size() == static_cast<std::size_t>(g.n()));
            for (const auto* chain : {&cert->orderK, &cert->orderK2})
                for (std::size_t i = 0; i + 1 < chain->size(); ++i)
                    CHECK(leq(g, (*chain)[i], (*chain)[i + 1]));
        }
    }
}

TEST_CASE("neighbourhood of anticonnected modules in threshold graphs") {
    // For a threshold graph and any anticonnected module X with |X| >= 2,
    // N(X) is a clique complete to X and dominates X.
    std::mt19937_64 rng(18);
    int modules_seen = 0;
    for (int t = 0; t < 600; ++t) {
        int n = 2 + t % 6;
        Graph g = random_graph(n, 0.5, rng);
        if (!recognize_threshold(g)) continue;
        for (int mask = 1; mask < (1 << n); ++mask) {
            Bitset x(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                if (mask & (1 << v)) x.set(static_cast<std::size_t>(v));
            if (x.count() < 2 || !is_module(g, x)) continue;
            auto sub = induced(g, x);
            if (!is_anticonnected(sub.graph)) continue;
            ++modules_seen;
            Bitset nx(static_cast<std::size_t>(n));
            x.for_each([&](std::size_t v) { nx |= g.neighbors(static_cast<int>(v)); });
            nx.subtract(x);
            CHECK(is_clique(g, nx));
            nx.for_each([&](std::size_t y) {
                x.for_each([&](std::size_t v) {
                    CHECK(g.has_edge(static_cast<int>(y), static_cast<int>(v)));
                    CHECK(leq(g, static_cast<int>(v), static_cast<int>(y)));
                });
            });
        }
    }
    CHECK(modules_seen > 50);
}

TEST_CASE("modules containing an isolated vertex") {
    // In a threshold graph, such a module consists of isolated vertices
    // only, or contains every non-isolated vertex.
    std::mt19937_64 rng(19);
    for (int t = 0; t < 600; ++t) {
        int n = 2 + t % 5;
        Graph g = random_graph(n, 0.3, rng);
        if (!recognize_threshold(g)) continue;
        auto ui = universal_and_isolated(g);
        if (ui.isolated.empty()) continue;
        Bitset iso = make_set(static_cast<std::size_t>(n), ui.isolated);
        for (int mask = 1; mask < (1 << n); ++mask) {
            Bitset x(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                if (mask & (1 << v)) x.set(static_cast<std::size_t>(v));
            if (!x.intersects(iso) || !is_module(g, x)) continue;
            bool only_isolated = x.is_subset_of(iso);
            Bitset non_iso = minus(g.all_vertices(), iso);
            bool all_non_isolated = non_iso.is_subset_of(x);
            CHECK((only_isolated || all_non_isolated));
        }
    }
}
