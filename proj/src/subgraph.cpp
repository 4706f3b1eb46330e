#include "dsq/subgraph.hpp"

#include <stdexcept>
#include <vector>

namespace dsq {

namespace {

// visit pattern vertices so each one after the first touches an earlier one
// when the pattern is connected; falls back to plain order otherwise
std::vector<int> matching_order(const Graph& p) {
    int n = p.order();
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    order.reserve(n);
    while (static_cast<int>(order.size()) < n) {
        int pick = -1;
        for (int v = 0; v < n && pick == -1; ++v) {
            if (placed[v]) continue;
            for (int w : p.neighbors(v))
                if (placed[w]) {
                    pick = v;
                    break;
                }
        }
        if (pick == -1)
            for (int v = 0; v < n; ++v)
                if (!placed[v]) {
                    pick = v;
                    break;
                }
        placed[pick] = 1;
        order.push_back(pick);
    }
    return order;
}

struct Matcher {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;
    std::vector<std::vector<int>> back;  // earlier-mapped pattern neighbours per depth
    std::vector<int> image;
    std::vector<char> used;
    long long found = 0;

    Matcher(const Graph& h, const Graph& p)
        : host(h), pattern(p), order(matching_order(p)),
          back(p.order()), image(p.order(), -1), used(h.order(), 0) {
        std::vector<int> pos(p.order());
        for (int i = 0; i < p.order(); ++i) pos[order[i]] = i;
        for (int i = 0; i < p.order(); ++i)
            for (int w : pattern.neighbors(order[i]))
                if (pos[w] < i) back[i].push_back(w);
    }

    void extend(int depth) {
        if (depth == pattern.order()) {
            ++found;
            return;
        }
        int v = order[depth];
        for (int c = 0; c < host.order(); ++c) {
            if (used[c] || host.degree(c) < pattern.degree(v)) continue;
            bool ok = true;
            for (int w : back[depth])
                if (!host.has_edge(c, image[w])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[v] = c;
            used[c] = 1;
            extend(depth + 1);
            used[c] = 0;
            image[v] = -1;
        }
    }
};

}  // namespace

long long count_embeddings(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return 0;
    Matcher m(host, pattern);
    m.extend(0);
    return m.found;
}

long long automorphism_count(const Graph& g) { return count_embeddings(g, g); }

long long count_subgraphs(const Graph& host, const Graph& pattern) {
    if (pattern.order() == 0) throw std::invalid_argument("empty pattern");
    long long emb = count_embeddings(host, pattern);
    long long aut = automorphism_count(pattern);
    if (emb % aut != 0) throw std::logic_error("embedding count not divisible by automorphisms");
    return emb / aut;
}

}  // namespace dsq
