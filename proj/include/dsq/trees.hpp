#pragma once

#include <optional>
#include <vector>

#include "dsq/graph.hpp"

namespace dsq {

// streams every free tree on n vertices exactly once, in the descending
// lexicographic order of canonical rooted level sequences restricted to
// centroid-canonical representatives; optional max-degree filter
class TreeStream {
  public:
    explicit TreeStream(int n, std::optional<int> max_degree = std::nullopt);

    std::optional<Graph> next();

    // trees emitted so far
    long long emitted() const { return emitted_; }

  private:
    bool advance();
    bool accept() const;

    int n_;
    std::optional<int> max_degree_;
    std::vector<int> seq_;
    bool fresh_ = true;
    bool done_ = false;
    long long emitted_ = 0;
};

Graph tree_from_level_sequence(const std::vector<int>& seq);

// all trees on n vertices up to isomorphism, materialized
std::vector<Graph> all_trees(int n, std::optional<int> max_degree = std::nullopt);

bool is_centipede(const Graph& g);

// tree on n vertices from a sequence of n-2 labels in [0, n)
Graph tree_from_pruefer(int n, const std::vector<int>& code);

// a tree avoids the spider obstruction iff no vertex has three or more
// neighbors that are themselves non-leaves; throws on non-trees
bool contains_branching_obstruction(const Graph& g);

}  // namespace dsq
