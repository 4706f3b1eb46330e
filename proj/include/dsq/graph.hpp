#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dsq {

// Immutable undirected simple graph on vertices 0..n-1, stored as sorted
// adjacency lists. Symmetry and loop-freeness are checked on construction.
class Graph {
public:
    Graph() = default;

    // Builds a graph from an edge list. Duplicate edges are merged,
    // self-loops rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    static Graph edgeless(int n);

    int order() const { return n_; }
    int size() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    int max_degree() const;
    std::vector<int> degrees() const;
    // sorted degree multiset, handy as an isomorphism pre-filter
    std::vector<int> degree_multiset() const;

    // edges in lexicographic (u,v) order, u < v
    std::vector<std::pair<int, int>> edges() const;

    // labelled equality (same vertex set, same edge set)
    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// ---- canonical builders ----

enum class Family { path, cycle, star, triangle, centipede, empty, complete };

std::optional<Family> family_from_string(const std::string& name);
const char* family_name(Family f);

// build(Family::centipede, n): path on n/2+1 vertices with a pendant vertex
// appended to each of its n/2-1 internal vertices; requires n even, n >= 2.
// centipede(2) is P2 (the path has no internal vertex to decorate).
Graph build(Family f, int size);

// ---- derived graphs ----

Graph complement(const Graph& g);

// Vertices are the edges of g in lexicographic order; two are adjacent iff
// the edges share an endpoint.
Graph line_graph(const Graph& g);

// One vertex per maximal clique (Bron-Kerbosch discovery order); adjacent iff
// the cliques intersect.
Graph clique_graph(const Graph& g);

// Maximal cliques by pivoting Bron-Kerbosch, in deterministic discovery
// order; each clique is sorted.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

// result has edge (perm[u], perm[v]) for each edge (u,v) of g
Graph relabel(const Graph& g, const std::vector<int>& perm);

// ---- structure queries ----

int component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
long long triangle_count(const Graph& g);

// Vertex sets of the biconnected components (a bridge is a 2-vertex block).
// Isolated vertices yield no block.
std::vector<std::vector<int>> blocks(const Graph& g);

}  // namespace dsq
