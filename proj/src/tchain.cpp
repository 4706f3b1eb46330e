#include "dsq/tchain.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace dsq {

std::optional<TriangleChain> as_triangle_chain(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return std::nullopt;
    auto blks = blocks(g);
    std::vector<int> membership(g.order(), 0);
    for (auto& b : blks) {
        if (b.size() != 3) return std::nullopt;
        if (!g.has_edge(b[0], b[1]) || !g.has_edge(b[0], b[2]) || !g.has_edge(b[1], b[2]))
            return std::nullopt;
        for (int v : b)
            if (++membership[v] > 2) return std::nullopt;
    }
    TriangleChain chain{g, clique_graph(g), {}};
    const Graph& k = chain.witness_tree;
    if (!is_tree(k) || k.max_degree() > 3)
        throw std::logic_error("clique graph of a chain must be a small-degree tree");
    chain.profile.t = k.order();
    for (int v = 0; v < k.order(); ++v) {
        switch (k.degree(v)) {
            case 1: ++chain.profile.t1; break;
            case 2: ++chain.profile.t2; break;
            case 3: ++chain.profile.t3; break;
            default: break;
        }
    }
    return chain;
}

bool is_triangle_chain(const Graph& g) { return as_triangle_chain(g).has_value(); }

Graph chain_to_tree(const Graph& g) {
    auto chain = as_triangle_chain(g);
    if (!chain) throw std::invalid_argument("graph is not a chain of triangles");
    return chain->witness_tree;
}

Graph tree_to_chain(const Graph& tree) {
    if (!is_tree(tree)) throw std::invalid_argument("input must be a tree");
    if (tree.max_degree() > 3) throw std::invalid_argument("degree above 3 has no chain");
    int t = tree.order();
    std::vector<int> parent(3 * t);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::vector<int> next_slot(t, 0);
    for (auto [u, v] : tree.edges()) {
        int a = 3 * u + next_slot[u]++;
        int b = 3 * v + next_slot[v]++;
        parent[find(a)] = find(b);
    }
    std::vector<int> label(3 * t, -1);
    int fresh = 0;
    auto vertex = [&](int slot) {
        int r = find(slot);
        if (label[r] == -1) label[r] = fresh++;
        return label[r];
    };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(3 * t);
    for (int v = 0; v < t; ++v) {
        int a = vertex(3 * v), b = vertex(3 * v + 1), c = vertex(3 * v + 2);
        edges.push_back({a, b});
        edges.push_back({a, c});
        edges.push_back({b, c});
    }
    return Graph::from_edges(fresh, edges);
}

}  // namespace dsq
