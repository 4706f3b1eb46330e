#include "dsq/graph6.hpp"

#include <vector>

namespace dsq {

namespace {
constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";
}  // namespace

std::string graph6_encode(const Graph& g) {
    long long n = g.order();
    if (n > 258047) throw std::invalid_argument("graph6: order too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kBias + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(kBias + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kBias + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kBias + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(kBias + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - nbits))));
    return out;
}

Graph graph6_decode(std::string_view line) {
    std::size_t pos = 0;
    if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    // strip one trailing newline, if any
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);

    auto need = [&](std::size_t k) {
        if (pos + k > line.size())
            throw Graph6Error(line.size(), "graph6: truncated record");
    };
    auto sixbits = [&]() {
        need(1);
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < kBias || c > 126) throw Graph6Error(pos, "graph6: byte out of range");
        ++pos;
        return static_cast<int>(c) - kBias;
    };

    need(1);
    long long n;
    int first = sixbits();
    if (first < 63) {
        n = first;
    } else {
        // 126 introduces the 3-byte order form
        need(3);
        long long a = sixbits(), b = sixbits(), c = sixbits();
        if (a == 63) throw Graph6Error(pos - 1, "graph6: unsupported 8-byte order form");
        n = (a << 12) | (b << 6) | c;
    }

    std::vector<std::pair<int, int>> edges;
    int acc = 0, have = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (have == 0) {
                acc = sixbits();
                have = 6;
            }
            if (acc & (1 << (have - 1))) edges.emplace_back(u, v);
            --have;
        }
    if (have > 0 && (acc & ((1 << have) - 1)) != 0)
        throw Graph6Error(pos - 1, "graph6: nonzero padding bits");
    if (pos != line.size()) throw Graph6Error(pos, "graph6: trailing garbage");
    return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace dsq
