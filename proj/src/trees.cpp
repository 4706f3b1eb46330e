#include "dsq/trees.hpp"

#include <set>
#include <stdexcept>

#include "dsq/canonical.hpp"

namespace dsq {

TreeStream::TreeStream(int n, std::optional<int> max_degree) : n_(n), max_degree_(max_degree) {
    if (n < 1 || n > 26) throw std::invalid_argument("order outside the supported range");
    if (max_degree && *max_degree < 2 && n > 2)
        throw std::invalid_argument("max degree below 2 admits no tree of that order");
    seq_.resize(n);
    for (int i = 0; i < n; ++i) seq_[i] = i + 1;  // the path, rooted at an end
}

Graph tree_from_level_sequence(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    std::vector<int> stack;  // stack[d] = latest vertex at level d+1
    for (int i = 0; i < n; ++i) {
        int level = seq[i];
        stack.resize(level);
        stack[level - 1] = i;
        if (level > 1) edges.push_back({stack[level - 2], i});
    }
    return Graph::from_edges(n, edges);
}

// successor in descending lexicographic order over canonical rooted sequences
bool TreeStream::advance() {
    int p = -1;
    for (int i = n_ - 1; i >= 0; --i)
        if (seq_[i] > 2) {
            p = i;
            break;
        }
    if (p == -1) return false;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
        if (seq_[i] == seq_[p] - 1) {
            q = i;
            break;
        }
    for (int i = p; i < n_; ++i) seq_[i] = seq_[i - (p - q)];
    return true;
}

bool TreeStream::accept() const {
    if (n_ == 1) return true;
    std::vector<std::vector<int>> adj(n_);
    {
        std::vector<int> stack;
        for (int i = 0; i < n_; ++i) {
            int level = seq_[i];
            stack.resize(level);
            stack[level - 1] = i;
            if (level > 1) {
                adj[stack[level - 2]].push_back(i);
                adj[i].push_back(stack[level - 2]);
            }
        }
    }
    if (max_degree_)
        for (int v = 0; v < n_; ++v)
            if (static_cast<int>(adj[v].size()) > *max_degree_) return false;
    return free_canonical_sequence(adj, 0) == seq_;
}

std::optional<Graph> TreeStream::next() {
    while (!done_) {
        if (!fresh_ && !advance()) {
            done_ = true;
            break;
        }
        fresh_ = false;
        if (accept()) {
            ++emitted_;
            return tree_from_level_sequence(seq_);
        }
    }
    return std::nullopt;
}

std::vector<Graph> all_trees(int n, std::optional<int> max_degree) {
    TreeStream stream(n, max_degree);
    std::vector<Graph> out;
    while (auto t = stream.next()) out.push_back(std::move(*t));
    return out;
}

Graph tree_from_pruefer(int n, const std::vector<int>& code) {
    if (n < 2 || static_cast<int>(code.size()) != n - 2)
        throw std::invalid_argument("code length must be order minus two");
    std::vector<int> degree(n, 1);
    for (int v : code) {
        if (v < 0 || v >= n) throw std::invalid_argument("label out of range");
        ++degree[v];
    }
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int v : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({leaf, v});
        if (--degree[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.push_back({a, b});
    return Graph::from_edges(n, edges);
}

bool is_centipede(const Graph& g) {
    int n = g.order();
    if (n < 2 || n % 2 != 0) return false;
    return isomorphic(g, build(Family::centipede, n));
}

bool contains_branching_obstruction(const Graph& g) {
    if (!is_tree(g)) throw std::invalid_argument("obstruction check expects a tree");
    for (int v = 0; v < g.order(); ++v) {
        int inner = 0;
        for (int w : g.neighbors(v))
            if (g.degree(w) >= 2) ++inner;
        if (inner >= 3) return true;
    }
    return false;
}

}  // namespace dsq
