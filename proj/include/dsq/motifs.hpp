#pragma once

#include <string>

#include "dsq/graph.hpp"

namespace dsq {

// the five closed-walk shapes of length seven that contain a triangle
enum class MotifKind { triangle, paw, cricket, bull, tadpole };

inline constexpr MotifKind kAllMotifs[] = {
    MotifKind::triangle, MotifKind::paw, MotifKind::cricket,
    MotifKind::bull, MotifKind::tadpole,
};

Graph motif(MotifKind kind);
std::string motif_name(MotifKind kind);

}  // namespace dsq
