#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "holes/decompose.hpp"
#include "holes/hole_enum.hpp"
#include "holes/templates.hpp"
#include "test_util.hpp"

using namespace holes;

namespace {

OddTemplateSpec pyramid_spec(int ell = 3) {
    OddTemplateSpec spec;
    spec.ell = ell;
    spec.j = Graph(3);
    spec.h.n = 3;
    spec.h.add_edge({0, 1, 2});
    return spec;
}

void collect_kinds(const DecompositionNode& node, std::multiset<std::string>& out) {
    switch (node.kind) {
        case DecompositionNode::Kind::Peel: out.insert("peel"); break;
        case DecompositionNode::Kind::Split: out.insert("split"); break;
        case DecompositionNode::Kind::Leaf: out.insert(to_string(node.cert.kind)); break;
    }
    for (const auto& c : node.children) collect_kinds(*c, out);
}

std::multiset<std::string> tree_kinds(const DecompositionTree& t) {
    std::multiset<std::string> out;
    if (t.root) collect_kinds(*t.root, out);
    return out;
}

} // namespace

TEST_CASE("membership check accepts uniform and chordal graphs only") {
    CHECK(check_membership(cycle_graph(9), 9));
    CHECK_FALSE(check_membership(cycle_graph(9), 7));
    CHECK(check_membership(complete_graph(5), 7));   // chordal: vacuous member
    CHECK(check_membership(path_graph(6), 11));
    CHECK_FALSE(check_membership(petersen_graph(), 7));
    CHECK_FALSE(check_membership(petersen_graph(), 5));  // mixed 5- and 6-holes
}

TEST_CASE("a long hole decomposes into a single ring leaf") {
    Graph g = cycle_graph(9);
    auto t = decompose(g, 9);
    REQUIRE(t.root);
    CHECK(t.root->kind == DecompositionNode::Kind::Leaf);
    CHECK(t.root->cert.kind == LeafKind::Ring);
    CHECK(t.root->cert.ring.k == 9);
    CHECK(verify_tree(g, t));
}

TEST_CASE("the pyramid decomposes into a single blowup leaf") {
    auto built = build_odd_template(pyramid_spec());
    auto t = decompose(built.graph, 7);
    REQUIRE(t.root);
    CHECK(t.root->kind == DecompositionNode::Kind::Leaf);
    CHECK(t.root->cert.kind == LeafKind::OddBlowup);
    CHECK(t.root->cert.blowup.ell == 3);
    CHECK(verify_tree(built.graph, t));

    auto text = to_text(t);
    auto parsed = tree_from_text(text);
    CHECK(verify_tree(built.graph, parsed));
    CHECK(to_text(parsed) == text);
}

TEST_CASE("chordal graphs decompose into complete and tiny leaves") {
    auto t = decompose(path_graph(5), 7);
    CHECK(verify_tree(path_graph(5), t));
    auto kinds = tree_kinds(t);
    CHECK(kinds.count("split") >= 1);
    CHECK(kinds.count("ring") == 0);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_threshold_graph(6 + static_cast<int>(rng() % 4), rng);
        auto tree = decompose(g, 7);
        CHECK(verify_tree(g, tree));
    }
}

TEST_CASE("spec composite: blowup plus cover vertex plus pendant triangle") {
    auto built = build_odd_template(pyramid_spec());
    Graph b = built.graph;
    // One vertex complete to the blowup, then a triangle glued on the
    // edge between that vertex and vertex 0.
    Graph g(b.n() + 2);
    for (int u = 0; u < b.n(); ++u)
        b.neighbors(u).for_each([&](std::size_t v) {
            if (static_cast<int>(v) > u) g.add_edge(u, static_cast<int>(v));
        });
    int cover = b.n(), tip = b.n() + 1;
    for (int u = 0; u < b.n(); ++u) g.add_edge(u, cover);
    g.add_edge(0, tip);
    g.add_edge(cover, tip);

    auto t = decompose(g, 7);
    CHECK(verify_tree(g, t));
    auto kinds = tree_kinds(t);
    CHECK(kinds.count("split") >= 1);
    CHECK(kinds.count("peel") >= 1);
    CHECK(kinds.count("blowup odd") == 1);
}

TEST_CASE("decompose rejects non-members and short lengths") {
    CHECK_THROWS_AS(decompose(cycle_graph(6), 7), std::invalid_argument);
    CHECK_THROWS_AS(decompose(petersen_graph(), 7), std::invalid_argument);
    CHECK_THROWS_AS(decompose(cycle_graph(5), 5), std::invalid_argument);
}

TEST_CASE("tree verification rejects tampered certificates") {
    Graph g = cycle_graph(9);
    auto t = decompose(g, 9);
    REQUIRE(verify_tree(g, t));

    SUBCASE("wrong ring length") {
        t.root->cert.ring.k = 7;
        CHECK_FALSE(verify_tree(g, t));
    }
    SUBCASE("clique moved out of the ring partition") {
        t.root->cert.ring.cliques[0].push_back(t.root->cert.ring.cliques[1].back());
        t.root->cert.ring.cliques[1].pop_back();
        CHECK_FALSE(verify_tree(g, t));
    }

    auto built = build_odd_template(pyramid_spec());
    auto bt = decompose(built.graph, 7);
    REQUIRE(verify_tree(built.graph, bt));
    SUBCASE("blowup partition role swapped") {
        auto& blow = bt.root->cert.blowup;
        std::swap(blow.A[0], blow.I[0]);
        CHECK_FALSE(verify_tree(built.graph, bt));
    }
    SUBCASE("blowup clique vertex dropped") {
        auto& blow = bt.root->cert.blowup;
        blow.cliques[0].clear();
        CHECK_FALSE(verify_tree(built.graph, bt));
    }
}

TEST_CASE("random odd composites decompose with exact reassembly") {
    std::mt19937_64 rng(20260823);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = random_composite(7, rng, 30);
        CAPTURE(trial);
        REQUIRE(check_membership(g, 7));
        auto t = decompose(g, 7);
        CHECK(verify_tree(g, t));
        auto parsed = tree_from_text(to_text(t));
        CHECK(verify_tree(g, parsed));
    }
}

TEST_CASE("random even composites decompose with exact reassembly") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = random_composite(8, rng, 30);
        CAPTURE(trial);
        REQUIRE(check_membership(g, 8));
        auto t = decompose(g, 8);
        CHECK(verify_tree(g, t));
        auto parsed = tree_from_text(to_text(t));
        CHECK(verify_tree(g, parsed));
    }
}

TEST_CASE("blown templates decompose into blowup leaves") {
    std::mt19937_64 rng(99);
    int odd_done = 0;
    while (odd_done < 6) {
        OddTemplateSpec spec = random_odd_spec(3 + static_cast<int>(rng() % 2), 3, rng);
        auto built = build_odd_template(spec);
        auto tw = make_twinless(built.graph, built.part);
        auto proper = to_proper_partition(tw.graph, tw.part);
        auto bs = random_blowup_spec(tw.graph, proper, rng, tw.graph.n() + 4);
        Graph g = build_blowup(tw.graph, proper, bs).graph;
        int k = 2 * built.part.ell + 1;
        auto cert = certify_leaf(g, k);
        REQUIRE(cert.has_value());
        CHECK(cert->kind == LeafKind::OddBlowup);
        ++odd_done;
    }
    int even_done = 0;
    while (even_done < 4) {
        EvenTemplateSpec spec = random_even_spec(4, 2, 1, rng);
        auto built = build_even_template(spec);
        auto tw = make_twinless(built.graph, built.part);
        auto proper = even_to_proper(tw.graph, tw.part);
        auto bs = random_blowup_spec(tw.graph, proper, rng, tw.graph.n() + 4);
        Graph g = build_blowup(tw.graph, proper, bs).graph;
        auto cert = certify_leaf(g, 8);
        REQUIRE(cert.has_value());
        CHECK(cert->kind == LeafKind::EvenBlowup);
        ++even_done;
    }
}

TEST_CASE("tree text parsing rejects malformed input") {
    CHECK_THROWS_AS(tree_from_text(""), ParseError);
    CHECK_THROWS_AS(tree_from_text("peel 0\n"), ParseError);
    CHECK_THROWS_AS(tree_from_text("tree k=7\nbogus 1\n"), ParseError);
    CHECK_THROWS_AS(tree_from_text("tree k=7\npeel 0\n"), ParseError);
    CHECK_THROWS_AS(tree_from_text("tree k=7\n   leaf tiny\n"), ParseError);
}
