#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "dsq/canonical.hpp"
#include "dsq/graph.hpp"
#include "dsq/graph6.hpp"

using dsq::Graph;

namespace {

Graph rand_graph(std::mt19937& rng, int n, unsigned pm) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 1000 < pm) edges.push_back({i, j});
    return Graph::from_edges(n, edges);
}

std::vector<int> rand_perm(std::mt19937& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng() % (i + 1)]);
    return p;
}

}  // namespace

TEST_CASE("graph construction and accessors") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {1, 2}});  // duplicate merged
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 3));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.degree_multiset() == std::vector<int>{1, 1, 2, 2});

    CHECK_THROWS(Graph::from_edges(3, {{0, 0}}));
    CHECK_THROWS(Graph::from_edges(2, {{0, 2}}));
    CHECK(Graph::edgeless(5).size() == 0);
}

TEST_CASE("family builders") {
    CHECK(dsq::build(dsq::Family::path, 4).degree_multiset() == std::vector<int>{1, 1, 2, 2});
    CHECK(dsq::build(dsq::Family::cycle, 5).degree_multiset() == std::vector<int>{2, 2, 2, 2, 2});
    CHECK(dsq::build(dsq::Family::star, 4).degree_multiset() == std::vector<int>{1, 1, 1, 3});
    CHECK(dsq::build(dsq::Family::complete, 4).size() == 6);
    CHECK(dsq::build(dsq::Family::triangle, 3) == dsq::build(dsq::Family::cycle, 3));
    CHECK(dsq::build(dsq::Family::empty, 3).size() == 0);

    // smallest members: a bare edge, then the star on four vertices
    CHECK(dsq::isomorphic(dsq::build(dsq::Family::centipede, 2),
                          dsq::build(dsq::Family::path, 2)));
    CHECK(dsq::isomorphic(dsq::build(dsq::Family::centipede, 4),
                          dsq::build(dsq::Family::star, 4)));
    Graph c8 = dsq::build(dsq::Family::centipede, 8);
    CHECK(c8.degree_multiset() == std::vector<int>{1, 1, 1, 1, 1, 3, 3, 3});
    CHECK(dsq::is_tree(c8));
    CHECK_THROWS(dsq::build(dsq::Family::centipede, 7));

    CHECK(dsq::family_from_string("centipede") == dsq::Family::centipede);
    CHECK(!dsq::family_from_string("nope").has_value());
    CHECK(dsq::family_from_string(dsq::family_name(dsq::Family::cycle)) == dsq::Family::cycle);
}

TEST_CASE("derived graphs") {
    Graph p4 = dsq::build(dsq::Family::path, 4);
    CHECK(dsq::isomorphic(dsq::line_graph(p4), dsq::build(dsq::Family::path, 3)));
    CHECK(dsq::isomorphic(dsq::line_graph(dsq::build(dsq::Family::star, 4)),
                          dsq::build(dsq::Family::triangle, 3)));
    CHECK(dsq::isomorphic(dsq::line_graph(dsq::build(dsq::Family::cycle, 5)),
                          dsq::build(dsq::Family::cycle, 5)));

    Graph comp = dsq::complement(p4);
    CHECK(comp.size() == 6 - 3);
    CHECK(dsq::isomorphic(dsq::complement(comp), p4));

    Graph bowtie = dsq::graph6_decode("D{c");
    CHECK(dsq::isomorphic(dsq::clique_graph(bowtie), dsq::build(dsq::Family::path, 2)));
    auto cliques = dsq::maximal_cliques(bowtie);
    CHECK(cliques.size() == 2);
    CHECK(cliques[0].size() == 3);
}

TEST_CASE("structure queries") {
    Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(dsq::component_count(two) == 2);
    CHECK(!dsq::is_connected(two));
    CHECK(dsq::is_forest(two));
    CHECK(!dsq::is_tree(two));
    CHECK(dsq::is_tree(dsq::build(dsq::Family::star, 5)));
    CHECK(dsq::triangle_count(dsq::build(dsq::Family::complete, 5)) == 10);
    CHECK(dsq::triangle_count(dsq::build(dsq::Family::cycle, 5)) == 0);

    Graph bowtie = dsq::graph6_decode("D{c");
    auto blk = dsq::blocks(bowtie);
    CHECK(blk.size() == 2);
    CHECK(blk[0].size() == 3);
    CHECK(blk[1].size() == 3);
}

TEST_CASE("graph6 frozen codes") {
    CHECK(dsq::graph6_encode(Graph::edgeless(1)) == "@");
    CHECK(dsq::graph6_encode(dsq::build(dsq::Family::triangle, 3)) == "Bw");
    CHECK(dsq::graph6_encode(dsq::build(dsq::Family::path, 3)) == "Bg");
    CHECK(dsq::graph6_encode(dsq::build(dsq::Family::path, 4)) == "Ch");
    CHECK(dsq::graph6_encode(dsq::build(dsq::Family::star, 4)) == "Cs");
    CHECK(dsq::graph6_encode(dsq::build(dsq::Family::complete, 4)) == "C~");
    CHECK(dsq::graph6_encode(dsq::build(dsq::Family::centipede, 8)) == "GhD@?_");

    CHECK(dsq::graph6_decode(">>graph6<<Bw") == dsq::build(dsq::Family::triangle, 3));
    Graph bowtie = dsq::graph6_decode("D{c");
    CHECK(bowtie.order() == 5);
    CHECK(bowtie.size() == 6);
    CHECK(dsq::triangle_count(bowtie) == 2);
}

TEST_CASE("graph6 error reporting") {
    CHECK_THROWS_AS(dsq::graph6_decode(""), dsq::Graph6Error);
    CHECK_THROWS_AS(dsq::graph6_decode("B"), dsq::Graph6Error);       // truncated
    CHECK_THROWS_AS(dsq::graph6_decode("B\x1fw"), dsq::Graph6Error);  // byte out of range
    CHECK_THROWS_AS(dsq::graph6_decode("Bww"), dsq::Graph6Error);     // trailing garbage
    CHECK_THROWS_AS(dsq::graph6_decode("Bx"), dsq::Graph6Error);      // nonzero padding

    try {
        dsq::graph6_decode("Bww");
        CHECK(false);
    } catch (const dsq::Graph6Error& e) {
        CHECK(e.byte_offset() == 2);
    }
}

TEST_CASE("graph6 round trip, random graphs up to n=30") {
    std::mt19937 rng(7701);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 30);
        Graph g = rand_graph(rng, n, 100 + rng() % 800);
        CHECK(dsq::graph6_decode(dsq::graph6_encode(g)) == g);
    }
    // the long order form starts at n = 63
    Graph big = rand_graph(rng, 70, 300);
    std::string code = dsq::graph6_encode(big);
    CHECK(code[0] == '~');
    CHECK(dsq::graph6_decode(code) == big);
}

TEST_CASE("canonical labels separate and unify") {
    Graph p5 = dsq::build(dsq::Family::path, 5);
    Graph c5 = dsq::build(dsq::Family::cycle, 5);
    CHECK(dsq::canonical_label(p5) != dsq::canonical_label(c5));
    CHECK(dsq::isomorphic(p5, p5));
    CHECK(!dsq::isomorphic(p5, c5));

    // same degree multiset, different trees
    Graph spider113 = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    Graph spider122 = Graph::from_edges(6, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}});
    CHECK(spider113.degree_multiset() == spider122.degree_multiset());
    CHECK(!dsq::isomorphic(spider113, spider122));
}

TEST_CASE("canonical labels are relabeling invariant") {
    std::mt19937 rng(8802);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = rand_graph(rng, n, 150 + rng() % 700);
        Graph h = dsq::relabel(g, rand_perm(rng, n));
        CHECK(dsq::canonical_label(g) == dsq::canonical_label(h));
        CHECK(dsq::isomorphic(g, h));
    }
}

TEST_CASE("forest labels are component-order invariant") {
    Graph f1 = Graph::from_edges(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}});
    Graph f2 = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}});
    CHECK(dsq::canonical_label(f1) == dsq::canonical_label(f2));
    Graph f3 = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 4}});
    CHECK(dsq::canonical_label(f1) != dsq::canonical_label(f3));
}
