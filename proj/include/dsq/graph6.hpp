#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dsq/graph.hpp"

namespace dsq {

// Decode failure with the byte offset of the offending character.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(std::size_t offset, const std::string& what)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Standard graph6: order in 1 byte (n <= 62) or 0x7E + 3 bytes, then the
// upper triangle in column order (0,1),(0,2),(1,2),(0,3),... packed 6 bits
// per byte, each byte offset by 63. Encoding always uses the shortest order
// form and zero padding.
std::string graph6_encode(const Graph& g);

// Accepts an optional leading ">>graph6<<" header. Rejects out-of-range
// bytes, wrong length, nonzero padding and trailing garbage.
Graph graph6_decode(std::string_view line);

}  // namespace dsq
