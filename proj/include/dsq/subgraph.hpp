#pragma once

#include "dsq/graph.hpp"

namespace dsq {

// injective vertex maps pattern -> host carrying every pattern edge to a host edge
long long count_embeddings(const Graph& host, const Graph& pattern);

long long automorphism_count(const Graph& g);

// embeddings divided by |Aut(pattern)|, i.e. distinct subgraph copies
long long count_subgraphs(const Graph& host, const Graph& pattern);

}  // namespace dsq
