#pragma once

#include <gmpxx.h>

#include <array>
#include <vector>

#include "dsq/graph.hpp"
#include "dsq/motifs.hpp"
#include "dsq/tchain.hpp"

namespace dsq {

// closed walks of length k that traverse every edge of m at least once,
// counted over all starting vertices; dynamic programming over
// (current vertex, set of edges already used)
mpz_class covering_walk_count(const Graph& m, int k);

struct MotifCensus {
    std::array<long long, 5> counted{};    // subgraph copies of T..T4, in kAllMotifs order
    std::array<long long, 5> predicted{};  // closed forms from the chain profile
    TriangleChainProfile profile;
};

// counts the five motifs inside a triangle chain and checks them against the
// profile closed forms; throws when the two disagree or g is not a chain
MotifCensus census_of(const Graph& g);

// tr(A^k) minus the motif-weighted subgraph counts; zero certifies that the
// given motifs exhaust the closed k-walk shapes inside g
mpz_class walk_decomposition_residual(const Graph& g, int k, const std::vector<Graph>& motifs);

// closed form for the seventh spectral moment of a chain with t triangles,
// t3 of them meeting three others
mpz_class seventh_walk_sum(long long t, long long t3);

}  // namespace dsq
