#include "dsq/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace dsq {

// ---------- tree machinery ----------

std::vector<int> tree_centroids(const std::vector<std::vector<int>>& adj, int root) {
    // iterative DFS order over the component
    std::vector<int> order, parent(adj.size(), -2);
    order.reserve(adj.size());
    parent[root] = -1;
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : adj[v])
            if (parent[w] == -2) {
                parent[w] = v;
                order.push_back(w);
            }
    }
    int total = static_cast<int>(order.size());
    std::vector<int> size(adj.size(), 1), down(adj.size(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        for (int w : adj[v])
            if (w != parent[v]) {
                size[v] += size[w];
                down[v] = std::max(down[v], size[w]);
            }
    }
    std::vector<int> cent;
    int best = total + 1;
    for (int v : order) {
        int heaviest = std::max(down[v], total - size[v]);
        if (heaviest < best) {
            best = heaviest;
            cent.assign(1, v);
        } else if (heaviest == best) {
            cent.push_back(v);
        }
    }
    std::sort(cent.begin(), cent.end());
    return cent;
}

namespace {

// canonical sequence of the subtree at v (away from parent), levels from `depth`
void canon_subtree(const std::vector<std::vector<int>>& adj, int v, int parent,
                   int depth, std::vector<int>& out) {
    std::vector<std::vector<int>> child_seqs;
    for (int w : adj[v])
        if (w != parent) {
            std::vector<int> s;
            canon_subtree(adj, w, v, depth + 1, s);
            child_seqs.push_back(std::move(s));
        }
    std::sort(child_seqs.begin(), child_seqs.end(), std::greater<>());
    out.push_back(depth);
    for (auto& s : child_seqs) out.insert(out.end(), s.begin(), s.end());
}

}  // namespace

std::vector<int> canonical_level_sequence(const std::vector<std::vector<int>>& adj,
                                          int root) {
    std::vector<int> seq;
    canon_subtree(adj, root, -1, 1, seq);
    return seq;
}

std::vector<int> free_canonical_sequence(const std::vector<std::vector<int>>& adj,
                                         int any_vertex) {
    auto cents = tree_centroids(adj, any_vertex);
    std::vector<int> best;
    for (int c : cents) {
        auto s = canonical_level_sequence(adj, c);
        if (s > best) best = std::move(s);
    }
    return best;
}

// ---------- general canonical form ----------

namespace {

using Cells = std::vector<std::vector<int>>;

// 1-WL colour refinement; cell order is determined by split signatures only,
// so it is relabeling-invariant.
void refine(const Graph& g, Cells& cells) {
    int n = g.order();
    std::vector<int> color(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci)
            for (int v : cells[ci]) color[v] = ci;
        Cells next;
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> by_sig;
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(g.degree(v));
                for (int w : g.neighbors(v)) sig.push_back(color[w]);
                std::sort(sig.begin(), sig.end());
                by_sig[sig].push_back(v);
            }
            if (by_sig.size() > 1) changed = true;
            for (auto& [sig, verts] : by_sig) next.push_back(verts);
        }
        cells.swap(next);
    }
}

std::string bits_for_order(const Graph& g, const std::vector<int>& order) {
    int n = g.order();
    std::string out;
    out.reserve((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8);
    int acc = 0, nb = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            acc = (acc << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0);
            if (++nb == 8) {
                out.push_back(static_cast<char>(acc));
                acc = nb = 0;
            }
        }
    if (nb) out.push_back(static_cast<char>(acc << (8 - nb)));
    return out;
}

struct CanonSearch {
    const Graph& g;
    std::string best;
    bool have = false;
    long long nodes = 0;

    explicit CanonSearch(const Graph& gr) : g(gr) {}

    void run(Cells cells) {
        if (++nodes > 4'000'000)
            throw std::runtime_error("canonical labeling search exploded");
        refine(g, cells);
        int split = -1;
        for (int i = 0; i < static_cast<int>(cells.size()); ++i)
            if (cells[i].size() > 1) {
                split = i;
                break;
            }
        if (split == -1) {
            std::vector<int> order;
            for (auto& c : cells) order.push_back(c[0]);
            auto bits = bits_for_order(g, order);
            if (!have || bits < best) {
                best = std::move(bits);
                have = true;
            }
            return;
        }
        for (int v : cells[split]) {
            Cells next;
            next.reserve(cells.size() + 1);
            for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
                if (i != split) {
                    next.push_back(cells[i]);
                    continue;
                }
                next.push_back({v});
                std::vector<int> rest;
                for (int w : cells[i])
                    if (w != v) rest.push_back(w);
                next.push_back(std::move(rest));
            }
            run(std::move(next));
        }
    }
};

std::string forest_label(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    std::vector<int> seen(n, 0);
    std::vector<std::string> comp_codes;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        auto seq = free_canonical_sequence(adj, s);
        std::string code;
        code.reserve(seq.size());
        for (int lvl : seq) {
            if (lvl > 250) throw std::invalid_argument("component too deep to label");
            code.push_back(static_cast<char>(lvl));
        }
        comp_codes.push_back(std::move(code));
        // mark the component visited
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) seen[w] = 1, stack.push_back(w);
        }
    }
    std::sort(comp_codes.begin(), comp_codes.end(), std::greater<>());
    std::string out;
    out.push_back('F');
    out.push_back(static_cast<char>(n & 0xff));
    out.push_back(static_cast<char>((n >> 8) & 0xff));
    for (auto& c : comp_codes) {
        out.push_back('\x01');
        out += c;
    }
    return out;
}

}  // namespace

CanonicalLabel canonical_label(const Graph& g) {
    if (is_forest(g)) return {forest_label(g)};
    CanonSearch s(g);
    Cells cells;
    if (g.order() > 0) {
        std::vector<int> all(g.order());
        for (int v = 0; v < g.order(); ++v) all[v] = v;
        cells.push_back(std::move(all));
    }
    s.run(std::move(cells));
    std::string out;
    out.push_back('G');
    out.push_back(static_cast<char>(g.order() & 0xff));
    out.push_back(static_cast<char>((g.order() >> 8) & 0xff));
    out += s.best;
    return {out};
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (a.degree_multiset() != b.degree_multiset()) return false;
    return canonical_label(a) == canonical_label(b);
}

}  // namespace dsq
