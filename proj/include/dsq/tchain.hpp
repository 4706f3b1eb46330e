#pragma once

#include <optional>

#include "dsq/graph.hpp"

namespace dsq {

// degree profile of the witness tree: t triangles, t_i of them meeting i others
struct TriangleChainProfile {
    long long t = 0;
    long long t1 = 0;
    long long t2 = 0;
    long long t3 = 0;

    bool operator==(const TriangleChainProfile&) const = default;
};

struct TriangleChain {
    Graph graph;
    Graph witness_tree;  // the clique graph
    TriangleChainProfile profile;
};

// a triangle chain is connected, every block is a triangle, and no vertex
// lies in more than two blocks; nullopt otherwise
std::optional<TriangleChain> as_triangle_chain(const Graph& g);

bool is_triangle_chain(const Graph& g);

// the clique graph of a chain; throws on non-members
Graph chain_to_tree(const Graph& g);

// the chain whose clique graph is the given tree (max degree up to 3):
// one triangle per tree vertex, one shared corner per tree edge
Graph tree_to_chain(const Graph& tree);

}  // namespace dsq
