#include <doctest.h>

#include <random>
#include <vector>

#include "dsq/canonical.hpp"
#include "dsq/graph.hpp"
#include "dsq/graph6.hpp"
#include "dsq/matrix.hpp"
#include "dsq/motifs.hpp"
#include "dsq/subgraph.hpp"
#include "dsq/tchain.hpp"
#include "dsq/trees.hpp"
#include "dsq/walks.hpp"
#include "oracles.hpp"

using dsq::Graph;

namespace {

Graph rand_graph(std::mt19937& rng, int n, unsigned pm) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 1000 < pm) edges.push_back({i, j});
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("motif shapes") {
    CHECK(dsq::motif(dsq::MotifKind::triangle).order() == 3);
    CHECK(dsq::motif(dsq::MotifKind::paw).size() == 4);
    CHECK(dsq::motif(dsq::MotifKind::cricket).degree_multiset() ==
          std::vector<int>{1, 1, 2, 2, 4});
    CHECK(dsq::motif(dsq::MotifKind::bull).degree_multiset() ==
          std::vector<int>{1, 1, 2, 3, 3});
    CHECK(dsq::motif(dsq::MotifKind::tadpole).degree_multiset() ==
          std::vector<int>{1, 2, 2, 2, 3});
    for (auto kind : dsq::kAllMotifs) CHECK(dsq::triangle_count(dsq::motif(kind)) == 1);
}

TEST_CASE("automorphism and embedding counts") {
    CHECK(dsq::automorphism_count(dsq::build(dsq::Family::triangle, 3)) == 6);
    CHECK(dsq::automorphism_count(dsq::build(dsq::Family::path, 4)) == 2);
    CHECK(dsq::automorphism_count(dsq::build(dsq::Family::star, 4)) == 6);
    CHECK(dsq::automorphism_count(dsq::build(dsq::Family::cycle, 5)) == 10);
    CHECK(dsq::automorphism_count(dsq::motif(dsq::MotifKind::paw)) == 2);
    CHECK(dsq::automorphism_count(dsq::motif(dsq::MotifKind::cricket)) == 4);
    CHECK(dsq::automorphism_count(dsq::motif(dsq::MotifKind::bull)) == 2);

    Graph k5 = dsq::build(dsq::Family::complete, 5);
    CHECK(dsq::count_subgraphs(k5, dsq::build(dsq::Family::triangle, 3)) == 10);
    CHECK(dsq::count_subgraphs(k5, dsq::build(dsq::Family::path, 3)) == 30);
    CHECK(dsq::count_subgraphs(dsq::build(dsq::Family::path, 5),
                               dsq::build(dsq::Family::path, 2)) == 4);
    CHECK(dsq::count_subgraphs(dsq::build(dsq::Family::cycle, 4),
                               dsq::build(dsq::Family::triangle, 3)) == 0);
    CHECK_THROWS(dsq::count_subgraphs(k5, Graph::edgeless(0)));
}

TEST_CASE("subgraph counts match the permutation oracle") {
    std::mt19937 rng(6001);
    std::vector<Graph> patterns;
    for (auto kind : dsq::kAllMotifs) patterns.push_back(dsq::motif(kind));
    patterns.push_back(dsq::build(dsq::Family::path, 2));
    patterns.push_back(dsq::build(dsq::Family::path, 3));
    patterns.push_back(dsq::build(dsq::Family::star, 4));
    patterns.push_back(dsq::build(dsq::Family::cycle, 4));
    for (int trial = 0; trial < 25; ++trial) {
        Graph host = rand_graph(rng, 6 + static_cast<int>(rng() % 2), 250 + rng() % 450);
        for (const Graph& p : patterns)
            CHECK(dsq::count_subgraphs(host, p) == oracle::brute_subgraph_count(host, p));
    }
}

TEST_CASE("covering walk counts match the enumeration oracle") {
    std::vector<Graph> shapes;
    for (auto kind : dsq::kAllMotifs) shapes.push_back(dsq::motif(kind));
    shapes.push_back(dsq::build(dsq::Family::path, 2));
    shapes.push_back(dsq::build(dsq::Family::path, 3));
    shapes.push_back(dsq::build(dsq::Family::cycle, 4));
    for (const Graph& s : shapes)
        for (int k = 0; k <= 8; ++k)
            CHECK(dsq::covering_walk_count(s, k) == oracle::naive_covering_walks(s, k));
}

TEST_CASE("covering walk counts, pinned values and edges of the domain") {
    CHECK(dsq::covering_walk_count(dsq::motif(dsq::MotifKind::triangle), 7) == 126);
    CHECK(dsq::covering_walk_count(dsq::motif(dsq::MotifKind::paw), 7) == 84);
    CHECK(dsq::covering_walk_count(dsq::motif(dsq::MotifKind::cricket), 7) == 28);
    CHECK(dsq::covering_walk_count(dsq::motif(dsq::MotifKind::bull), 7) == 14);
    CHECK(dsq::covering_walk_count(dsq::motif(dsq::MotifKind::tadpole), 7) == 14);

    Graph p2 = dsq::build(dsq::Family::path, 2);
    CHECK(dsq::covering_walk_count(p2, 2) == 2);
    CHECK(dsq::covering_walk_count(p2, 3) == 0);
    CHECK(dsq::covering_walk_count(p2, 1) == 0);  // odd walks cannot close on one edge
    CHECK(dsq::covering_walk_count(Graph::edgeless(1), 0) == 1);
    CHECK(dsq::covering_walk_count(dsq::build(dsq::Family::triangle, 3), 0) == 0);
    CHECK_THROWS(dsq::covering_walk_count(p2, 13));  // beyond the supported length
    CHECK_THROWS(dsq::covering_walk_count(Graph::from_edges(4, {{0, 1}, {2, 3}}), 4));
}

TEST_CASE("chains and trees convert both ways") {
    Graph k3 = dsq::build(dsq::Family::triangle, 3);
    CHECK(dsq::is_triangle_chain(k3));
    CHECK(dsq::chain_to_tree(k3).order() == 1);
    CHECK(dsq::isomorphic(dsq::tree_to_chain(Graph::edgeless(1)), k3));

    Graph bowtie = dsq::graph6_decode("D{c");
    auto chain = dsq::as_triangle_chain(bowtie);
    REQUIRE(chain.has_value());
    CHECK(chain->profile.t == 2);
    CHECK(chain->profile.t1 == 2);
    CHECK(chain->profile.t2 == 0);
    CHECK(chain->profile.t3 == 0);
    CHECK(dsq::isomorphic(chain->witness_tree, dsq::build(dsq::Family::path, 2)));

    CHECK(!dsq::is_triangle_chain(dsq::build(dsq::Family::path, 4)));
    CHECK(!dsq::is_triangle_chain(dsq::build(dsq::Family::cycle, 4)));
    CHECK(!dsq::is_triangle_chain(dsq::build(dsq::Family::complete, 4)));
    // three triangles through one vertex: not a chain
    Graph friendship = Graph::from_edges(
        7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {0, 5}, {0, 6}, {5, 6}});
    CHECK(!dsq::is_triangle_chain(friendship));
    CHECK_THROWS(dsq::chain_to_tree(friendship));

    for (int t = 1; t <= 8; ++t)
        for (const Graph& tree : dsq::all_trees(t, 3)) {
            Graph c = dsq::tree_to_chain(tree);
            CHECK(c.order() == 2 * t + 1);
            CHECK(c.size() == 3 * t);
            CHECK(dsq::isomorphic(dsq::chain_to_tree(c), tree));
        }

    // degree-4 trees have no chain image
    CHECK_THROWS(dsq::tree_to_chain(dsq::build(dsq::Family::star, 5)));
}

TEST_CASE("chains are the line graphs of centipedes") {
    for (int t = 1; t <= 6; ++t) {
        Graph chain = dsq::tree_to_chain(dsq::build(dsq::Family::path, t));
        Graph cent = dsq::build(dsq::Family::centipede, 2 * t + 2);
        CHECK(dsq::isomorphic(chain, dsq::line_graph(cent)));
    }
}

TEST_CASE("motif census of chains") {
    auto census = dsq::census_of(dsq::build(dsq::Family::triangle, 3));
    CHECK(census.counted == std::array<long long, 5>{1, 0, 0, 0, 0});
    CHECK(census.counted == census.predicted);

    auto bowtie = dsq::census_of(dsq::graph6_decode("D{c"));
    CHECK(bowtie.counted == std::array<long long, 5>{2, 4, 2, 0, 4});

    // every chain with up to six triangles, against the brute-force counter
    for (int t = 2; t <= 6; ++t)
        for (const Graph& tree : dsq::all_trees(t, 3)) {
            Graph chain = dsq::tree_to_chain(tree);
            auto c = dsq::census_of(chain);
            for (int i = 0; i < 5; ++i)
                CHECK(c.counted[i] ==
                      oracle::brute_subgraph_count(chain, dsq::motif(dsq::kAllMotifs[i])));
        }

    CHECK_THROWS(dsq::census_of(dsq::build(dsq::Family::path, 4)));
}

TEST_CASE("seventh moment closed form") {
    CHECK(dsq::seventh_walk_sum(2, 0) == 700);
    Graph bowtie = dsq::graph6_decode("D{c");
    CHECK(dsq::power_traces(dsq::matrix_of(bowtie, dsq::MatrixKind::adjacency), 7)[7] == 700);
    CHECK_THROWS(dsq::seventh_walk_sum(1, 0));
    CHECK_THROWS(dsq::seventh_walk_sum(3, -1));
}

TEST_CASE("walk decomposition residual") {
    std::vector<Graph> shapes;
    for (auto kind : dsq::kAllMotifs) shapes.push_back(dsq::motif(kind));
    for (int t = 2; t <= 5; ++t)
        for (const Graph& tree : dsq::all_trees(t, 3))
            CHECK(dsq::walk_decomposition_residual(dsq::tree_to_chain(tree), 7, shapes) == 0);

    // K4 supports seventh covering walks of shapes beyond the five, so the
    // same decomposition must overshoot or undershoot there
    CHECK(dsq::walk_decomposition_residual(dsq::build(dsq::Family::complete, 4), 7, shapes) != 0);
}
