#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holes/cutset.hpp"
#include "holes/graph.hpp"
#include "holes/hole_enum.hpp"
#include "holes/hypergraph.hpp"
#include "holes/io.hpp"
#include "holes/subgraphs.hpp"
#include "test_util.hpp"

using namespace holes;

TEST_CASE("complement basics") {
    CHECK(complement(Graph(3)) == complete_graph(3));
    CHECK(is_isomorphic(complement(cycle_graph(4)), pattern_2k2()));
    CHECK(is_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(1 + t % 9, 0.4, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("components and anticomponents") {
    Graph g = disjoint_union(complete_graph(2), complete_graph(2));
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 2);
    CHECK(comps[1].size() == 2);

    CHECK(components(complete_graph(3), true).size() == 3);

    auto anti = components(cycle_graph(4), true);  // diagonals {0,2}, {1,3}
    REQUIRE(anti.size() == 2);
    CHECK(anti[0] == std::vector<int>{0, 2});
    CHECK(anti[1] == std::vector<int>{1, 3});
}

TEST_CASE("modules") {
    Graph p3 = path_graph(3);
    CHECK(is_module(p3, make_set(3, {1})));
    CHECK(is_module(p3, make_set(3, {0, 2})));
    Graph p4 = path_graph(4);
    CHECK_FALSE(is_module(p4, make_set(4, {0, 2})));

    // Module-complement symmetry, exhaustive over subsets of sampled graphs.
    std::mt19937_64 rng(2);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + t % 7;
        Graph g = random_graph(n, 0.5, rng);
        Graph co = complement(g);
        for (int mask = 0; mask < (1 << n); ++mask) {
            Bitset x(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                if (mask & (1 << v)) x.set(static_cast<std::size_t>(v));
            CHECK(is_module(g, x) == is_module(co, x));
        }
    }
}

TEST_CASE("twin classes") {
    auto k2 = twin_classes(complete_graph(2));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].size() == 2);
    CHECK(twin_classes(cycle_graph(5)).size() == 5);
    CHECK(twin_classes(cycle_graph(4)).size() == 4);  // diagonals: open equal, closed not
    CHECK(is_twinless(cycle_graph(5)));
    CHECK_FALSE(is_twinless(complete_graph(2)));
}

TEST_CASE("universal and isolated vertices") {
    auto k4 = universal_and_isolated(complete_graph(4));
    CHECK(k4.universal.size() == 4);
    CHECK(k4.isolated.empty());

    Graph star(4);
    for (int leaf = 1; leaf < 4; ++leaf) star.add_edge(0, leaf);
    auto s = universal_and_isolated(star);
    CHECK(s.universal == std::vector<int>{0});
    CHECK(s.isolated.empty());

    auto one = universal_and_isolated(Graph(1));
    CHECK(one.universal == std::vector<int>{0});
    CHECK(one.isolated == std::vector<int>{0});
}

TEST_CASE("hole enumeration") {
    auto c7 = enumerate_holes(cycle_graph(7));
    REQUIRE(c7.size() == 1);
    CHECK(c7[0].length() == 7);

    CHECK(enumerate_holes(complete_graph(5)).empty());

    // 12 pentagons plus 10 induced hexagons (any chord of a 6-cycle would
    // create a cycle shorter than the girth).
    auto pet = enumerate_holes(petersen_graph());
    CHECK(pet.size() == 22);
    std::size_t pentagons = 0;
    for (const auto& h : pet) {
        CHECK((h.length() == 5 || h.length() == 6));
        if (h.length() == 5) ++pentagons;
    }
    CHECK(pentagons == 12);

    // Canonical form: idempotent under rotation/reflection, chordless.
    std::mt19937_64 rng(3);
    for (const auto& h : pet) {
        CHECK(is_hole_of(petersen_graph(), h.cycle));
        std::vector<int> rot = h.cycle;
        std::rotate(rot.begin(), rot.begin() + rng() % rot.size(), rot.end());
        if (rng() & 1) std::reverse(rot.begin(), rot.end());
        CHECK(canonical_hole(rot) == h);
    }
}

TEST_CASE("hole enumeration budget") {
    HoleEnumOptions opt;
    opt.budget = 5;
    CHECK_THROWS_AS(enumerate_holes(petersen_graph(), opt), BudgetExceeded);
}

TEST_CASE("hole spectrum") {
    auto c7 = hole_spectrum(cycle_graph(7));
    CHECK(c7.kind == SpectrumKind::Uniform);
    CHECK(c7.uniform_length() == 7);

    CHECK(hole_spectrum(path_graph(6)).kind == SpectrumKind::Chordal);

    auto mixed = hole_spectrum(disjoint_union(cycle_graph(5), cycle_graph(6)), false);
    CHECK(mixed.kind == SpectrumKind::Mixed);
    CHECK(mixed.witness_lengths == std::vector<int>{5, 6});
    REQUIRE(mixed.witnesses.size() == 2);

    CHECK(in_class_ck(cycle_graph(7), 7));
    CHECK_FALSE(in_class_ck(cycle_graph(7), 8));
    CHECK(in_class_ck(complete_graph(6), 7));  // chordal is vacuous
}

TEST_CASE("clique cutset") {
    Graph bowtie(5);  // two triangles sharing vertex 0
    bowtie.add_edge(0, 1);
    bowtie.add_edge(0, 2);
    bowtie.add_edge(1, 2);
    bowtie.add_edge(0, 3);
    bowtie.add_edge(0, 4);
    bowtie.add_edge(3, 4);
    auto cut = clique_cutset(bowtie);
    REQUIRE(cut);
    CHECK(cut->clique == std::vector<int>{0});

    auto disc = clique_cutset(disjoint_union(complete_graph(2), complete_graph(2)));
    REQUIRE(disc);
    CHECK(disc->clique.empty());

    CHECK_FALSE(clique_cutset(cycle_graph(5)));
}

namespace {
bool has_clique_cutset_exhaustive(const Graph& g) {
    if (g.n() <= 1) return false;
    if (!is_connected(g)) return true;
    const int n = g.n();
    for (int mask = 1; mask < (1 << n); ++mask) {
        Bitset k(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            if (mask & (1 << v)) k.set(static_cast<std::size_t>(v));
        if (static_cast<int>(k.count()) >= n - 1) continue;
        if (!is_clique(g, k)) continue;
        auto rest = induced(g, minus(g.all_vertices(), k));
        if (!is_connected(rest.graph)) return true;
    }
    return false;
}
} // namespace

TEST_CASE("clique cutset vs exhaustive search") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 150; ++t) {
        int n = 2 + t % 7;  // up to 8
        Graph g = random_graph(n, 0.45, rng);
        auto cut = clique_cutset(g);
        CHECK(static_cast<bool>(cut) == has_clique_cutset_exhaustive(g));
        if (cut) {
            CHECK(is_clique(g, make_set(static_cast<std::size_t>(n), cut->clique)));
            CHECK_FALSE(cut->side_a.empty());
            CHECK_FALSE(cut->side_b.empty());
            Bitset rest = g.all_vertices();
            for (int v : cut->clique) rest.reset(static_cast<std::size_t>(v));
            auto sub = induced(g, rest);
            CHECK_FALSE(is_connected(sub.graph));
            // No edges between the two sides.
            for (int a : cut->side_a)
                for (int b : cut->side_b) CHECK_FALSE(g.has_edge(a, b));
        }
    }
}

TEST_CASE("induced subgraphs") {
    auto all = induced(cycle_graph(5), std::vector<int>{0, 1, 2, 3, 4});
    CHECK(all.graph == cycle_graph(5));

    auto k3 = induced(complete_graph(4), std::vector<int>{0, 2, 3});
    CHECK(k3.graph == complete_graph(3));

    auto p4 = induced(path_graph(4), std::vector<int>{0, 1, 3});
    CHECK(p4.graph.edge_count() == 1);
    CHECK(p4.graph.has_edge(0, 1));
    CHECK(p4.to_parent == std::vector<int>{0, 1, 3});
}

TEST_CASE("graph6 round trip") {
    CHECK(to_graph6(complete_graph(5)) == "D~{");
    CHECK(to_graph6(path_graph(4)) == "Ch");
    CHECK(from_graph6("Ch") == path_graph(4));
    CHECK(from_graph6(">>graph6<<D~{") == complete_graph(5));
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(1 + t % 70, 0.3, rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    CHECK_THROWS_AS(from_graph6(""), ParseError);
    CHECK_THROWS_AS(from_graph6("D"), ParseError);
}

TEST_CASE("edge list round trip") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(1 + t % 12, 0.4, rng);
        CHECK(from_edge_list(to_edge_list(g)) == g);
    }
    CHECK_THROWS_AS(from_edge_list("2 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(from_edge_list("2 1\n"), ParseError);
}

TEST_CASE("dot output") {
    auto dot = to_dot(complete_graph(2));
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
}

TEST_CASE("hypergraph laminarity and line graphs") {
    Hypergraph h;
    h.n = 5;
    h.add_edge({1, 2});
    h.add_edge({1, 2, 3});
    h.add_edge({4});
    CHECK(h.valid());
    CHECK(is_laminar(h));

    Hypergraph cross;
    cross.n = 4;
    cross.add_edge({1, 2});
    cross.add_edge({2, 3});
    CHECK_FALSE(is_laminar(cross));

    Hypergraph dup;
    dup.n = 3;
    dup.add_edge({1, 2});
    dup.add_edge({1, 2});
    CHECK(is_laminar(dup));

    Hypergraph two;
    two.n = 3;
    two.add_edge({1});
    two.add_edge({1});
    two.add_edge({2});
    Graph lg = line_graph(two);
    CHECK(lg.n() == 3);
    CHECK(lg.edge_count() == 1);
    CHECK(lg.has_edge(0, 1));

    Hypergraph chain;
    chain.n = 3;
    chain.add_edge({0});
    chain.add_edge({0, 1});
    chain.add_edge({0, 1, 2});
    CHECK(line_graph(chain) == complete_graph(3));

    CHECK(line_graph(cross).edge_count() == 1);
}

TEST_CASE("hypergraph text round trip") {
    Hypergraph h;
    h.n = 4;
    h.add_edge({0, 1}, EdgeSide::A);
    h.add_edge({2}, EdgeSide::APrime);
    h.add_edge({3});
    Hypergraph back = hypergraph_from_text(to_text(h));
    CHECK(back.n == h.n);
    CHECK(back.edges == h.edges);
    CHECK(back.sides == h.sides);
    CHECK_THROWS_AS(hypergraph_from_text("2 1\n0\n"), ParseError);
    CHECK_THROWS_AS(hypergraph_from_text("2 1\n1 5\n"), ParseError);
}
