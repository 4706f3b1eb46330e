#include "dsq/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dsq {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative order");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    int m2 = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        m2 += static_cast<int>(nb.size());
    }
    g.m_ = m2 / 2;
    return g;
}

Graph Graph::edgeless(int n) { return from_edges(n, {}); }

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

std::vector<int> Graph::degree_multiset() const {
    auto d = degrees();
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) e.emplace_back(u, v);
    return e;
}

std::optional<Family> family_from_string(const std::string& name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "star") return Family::star;
    if (name == "triangle") return Family::triangle;
    if (name == "centipede") return Family::centipede;
    if (name == "empty") return Family::empty;
    if (name == "complete") return Family::complete;
    return std::nullopt;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::triangle: return "triangle";
        case Family::centipede: return "centipede";
        case Family::empty: return "empty";
        case Family::complete: return "complete";
    }
    return "?";
}

Graph build(Family f, int size) {
    std::vector<std::pair<int, int>> e;
    switch (f) {
        case Family::path:
            if (size < 1) throw std::invalid_argument("path needs size >= 1");
            for (int i = 0; i + 1 < size; ++i) e.emplace_back(i, i + 1);
            return Graph::from_edges(size, e);
        case Family::cycle:
            if (size < 3) throw std::invalid_argument("cycle needs size >= 3");
            for (int i = 0; i < size; ++i) e.emplace_back(i, (i + 1) % size);
            return Graph::from_edges(size, e);
        case Family::star:
            if (size < 2) throw std::invalid_argument("star needs size >= 2");
            for (int i = 1; i < size; ++i) e.emplace_back(0, i);
            return Graph::from_edges(size, e);
        case Family::triangle:
            if (size != 3) throw std::invalid_argument("triangle has size 3");
            return build(Family::cycle, 3);
        case Family::centipede: {
            if (size < 2 || size % 2 != 0)
                throw std::invalid_argument("centipede needs even size >= 2");
            int spine = size / 2 + 1;
            for (int i = 0; i + 1 < spine; ++i) e.emplace_back(i, i + 1);
            // pendant on each internal spine vertex
            int next = spine;
            for (int i = 1; i + 1 < spine; ++i) e.emplace_back(i, next++);
            return Graph::from_edges(size, e);
        }
        case Family::empty:
            if (size < 1) throw std::invalid_argument("empty graph needs size >= 1");
            return Graph::edgeless(size);
        case Family::complete:
            if (size < 1) throw std::invalid_argument("complete graph needs size >= 1");
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j) e.emplace_back(i, j);
            return Graph::from_edges(size, e);
    }
    throw std::invalid_argument("unknown family");
}

Graph complement(const Graph& g) {
    int n = g.order();
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph line_graph(const Graph& g) {
    auto ge = g.edges();
    int k = static_cast<int>(ge.size());
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            auto [u1, v1] = ge[a];
            auto [u2, v2] = ge[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) e.emplace_back(a, b);
        }
    return Graph::from_edges(k, e);
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<int>& R, std::vector<int> P,
                   std::vector<int> X, std::vector<std::vector<int>>& out) {
    if (P.empty() && X.empty()) {
        out.push_back(R);
        return;
    }
    // pivot: vertex of P∪X with most neighbours in P
    int pivot = -1, best = -1;
    for (const auto* S : {&P, &X})
        for (int u : *S) {
            int c = 0;
            for (int w : P)
                if (g.has_edge(u, w)) ++c;
            if (c > best) best = c, pivot = u;
        }
    std::vector<int> cand;
    for (int v : P)
        if (pivot < 0 || !g.has_edge(pivot, v)) cand.push_back(v);
    for (int v : cand) {
        std::vector<int> P2, X2;
        for (int w : P)
            if (g.has_edge(v, w)) P2.push_back(w);
        for (int w : X)
            if (g.has_edge(v, w)) X2.push_back(w);
        R.push_back(v);
        bron_kerbosch(g, R, std::move(P2), std::move(X2), out);
        R.pop_back();
        P.erase(std::find(P.begin(), P.end(), v));
        X.insert(std::lower_bound(X.begin(), X.end(), v), v);
    }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    std::vector<int> P(g.order());
    for (int v = 0; v < g.order(); ++v) P[v] = v;
    std::vector<int> R;
    std::vector<std::vector<int>> out;
    bron_kerbosch(g, R, std::move(P), {}, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    return out;
}

Graph clique_graph(const Graph& g) {
    auto cliques = maximal_cliques(g);
    int k = static_cast<int>(cliques.size());
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            bool meet = false;
            for (int v : cliques[a]) {
                if (std::binary_search(cliques[b].begin(), cliques[b].end(), v)) {
                    meet = true;
                    break;
                }
            }
            if (meet) e.emplace_back(a, b);
        }
    return Graph::from_edges(k, e);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.order(), e);
}

int component_count(const Graph& g) {
    int n = g.order();
    std::vector<int> seen(n, 0);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++c;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[w]) seen[w] = 1, stack.push_back(w);
        }
    }
    return c;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || component_count(g) == 1; }

bool is_forest(const Graph& g) {
    return g.size() == g.order() - component_count(g);
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && is_connected(g) && g.size() == g.order() - 1;
}

long long triangle_count(const Graph& g) {
    long long c = 0;
    for (auto [u, v] : g.edges())
        for (int w : g.neighbors(u))
            if (w > v && g.has_edge(v, w)) ++c;
    return c;
}

std::vector<std::vector<int>> blocks(const Graph& g) {
    int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<int>> out;
    int timer = 0;

    auto emit = [&](int u, int v) {
        std::vector<int> verts;
        while (true) {
            auto [a, b] = estack.back();
            estack.pop_back();
            verts.push_back(a);
            verts.push_back(b);
            if (a == u && b == v) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        out.push_back(std::move(verts));
    };

    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = timer++;
        for (int w : g.neighbors(v)) {
            if (w == parent) continue;
            if (disc[w] == -1) {
                estack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) emit(v, w);
            } else if (disc[w] < disc[v]) {
                estack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };

    for (int s = 0; s < n; ++s)
        if (disc[s] == -1) dfs(s, -1);
    return out;
}

}  // namespace dsq
