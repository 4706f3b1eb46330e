#include "dsq/walks.hpp"

#include <cstdint>
#include <stdexcept>

#include "dsq/matrix.hpp"
#include "dsq/subgraph.hpp"

namespace dsq {

mpz_class covering_walk_count(const Graph& m, int k) {
    int n = m.order();
    long long e = m.size();
    if (n == 0 || !is_connected(m)) throw std::invalid_argument("walks need a connected graph");
    if (k < 0 || k > 12) throw std::invalid_argument("walk length beyond supported range");
    if (e > 12) throw std::invalid_argument("edge set beyond supported range");
    if (k < e) return 0;
    if (e == 0) return k == 0 ? n : 0;  // only the empty walk covers an empty edge set

    // edge indices aligned with the lexicographic edge list
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // neighbor, edge index
    {
        auto edges = m.edges();
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            auto [u, v] = edges[i];
            adj[u].push_back({v, i});
            adj[v].push_back({u, i});
        }
    }
    std::uint32_t full = (1u << e) - 1;
    mpz_class total = 0;
    std::vector<std::uint64_t> cur(static_cast<std::size_t>(n) << e, 0);
    std::vector<std::uint64_t> next(cur.size());
    for (int start = 0; start < n; ++start) {
        std::fill(cur.begin(), cur.end(), 0);
        cur[static_cast<std::size_t>(start) << e] = 1;
        for (int step = 0; step < k; ++step) {
            std::fill(next.begin(), next.end(), 0);
            for (int v = 0; v < n; ++v)
                for (std::uint32_t mask = 0; mask <= full; ++mask) {
                    std::uint64_t ways = cur[(static_cast<std::size_t>(v) << e) | mask];
                    if (!ways) continue;
                    for (auto [w, idx] : adj[v]) {
                        auto& slot = next[(static_cast<std::size_t>(w) << e) | (mask | (1u << idx))];
                        if (slot > UINT64_MAX - ways)
                            throw std::overflow_error("walk count exceeds the counter width");
                        slot += ways;
                    }
                }
            cur.swap(next);
        }
        total += static_cast<unsigned long>(cur[(static_cast<std::size_t>(start) << e) | full]);
    }
    return total;
}

MotifCensus census_of(const Graph& g) {
    auto chain = as_triangle_chain(g);
    if (!chain) throw std::invalid_argument("census requires a chain of triangles");
    MotifCensus census;
    census.profile = chain->profile;
    for (int i = 0; i < 5; ++i) census.counted[i] = count_subgraphs(g, motif(kAllMotifs[i]));
    long long t = census.profile.t, t3 = census.profile.t3;
    if (t >= 2) {
        census.predicted = {t, 2 * (2 * t - 2), 2 * t - 2, 4 * (t - 2) + 4 * t3,
                            4 * (2 * t - 3 + t3)};
    } else {
        census.predicted = {1, 0, 0, 0, 0};
    }
    if (census.counted != census.predicted)
        throw std::logic_error("motif counts disagree with the profile closed forms");
    return census;
}

mpz_class walk_decomposition_residual(const Graph& g, int k, const std::vector<Graph>& motifs) {
    if (k < 1) throw std::invalid_argument("walk length must be positive");
    mpz_class residual = power_traces(matrix_of(g, MatrixKind::adjacency), k)[k];
    for (const Graph& m : motifs)
        residual -= covering_walk_count(m, k) * mpz_class(static_cast<long>(count_subgraphs(g, m)));
    return residual;
}

mpz_class seventh_walk_sum(long long t, long long t3) {
    if (t < 2) throw std::invalid_argument("closed form needs at least two triangles");
    if (t3 < 0) throw std::invalid_argument("negative branching count");
    return mpz_class(686) * static_cast<long>(t) - 672 + mpz_class(112) * static_cast<long>(t3);
}

}  // namespace dsq
