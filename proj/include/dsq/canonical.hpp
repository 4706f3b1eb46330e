#pragma once

#include <string>
#include <vector>

#include "dsq/graph.hpp"

namespace dsq {

// Relabeling-invariant byte string: two graphs get equal labels iff they are
// isomorphic. Forests take a linear-time level-sequence path; everything else
// goes through colour refinement with backtracking (intended for n <= ~24).
struct CanonicalLabel {
    std::string bytes;
    auto operator<=>(const CanonicalLabel&) const = default;
};

CanonicalLabel canonical_label(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// ---- tree helpers (shared with the free-tree enumerator) ----

// Centroid(s) of the tree spanned by the component containing `root`;
// one or two vertices, sorted.
std::vector<int> tree_centroids(const std::vector<std::vector<int>>& adj, int root);

// Canonical level sequence of the tree component containing `root`, rooted
// there: lexicographically maximal among all sibling orders, levels from 1.
std::vector<int> canonical_level_sequence(const std::vector<std::vector<int>>& adj,
                                          int root);

// Canonical level sequence of the underlying free tree: the lex-max
// canonical rooted sequence over the centroid(s).
std::vector<int> free_canonical_sequence(const std::vector<std::vector<int>>& adj,
                                         int any_vertex);

}  // namespace dsq
