#include "dsq/motifs.hpp"

#include <stdexcept>

namespace dsq {

Graph motif(MotifKind kind) {
    switch (kind) {
        case MotifKind::triangle:
            return Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
        case MotifKind::paw:
            return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
        case MotifKind::cricket:
            return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}});
        case MotifKind::bull:
            return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
        case MotifKind::tadpole:
            return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
    }
    throw std::invalid_argument("unknown motif");
}

std::string motif_name(MotifKind kind) {
    switch (kind) {
        case MotifKind::triangle: return "triangle";
        case MotifKind::paw: return "paw";
        case MotifKind::cricket: return "cricket";
        case MotifKind::bull: return "bull";
        case MotifKind::tadpole: return "tadpole";
    }
    throw std::invalid_argument("unknown motif");
}

}  // namespace dsq
