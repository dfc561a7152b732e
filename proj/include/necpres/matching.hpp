#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace necpres {

// Bipartite graph given as adjacency from left vertices to right vertices.
struct BipartiteGraph {
    int left = 0;
    int right = 0;
    std::vector<std::pair<int, int>> edges;  // (left index, right index)
};

// A matching saturating every required vertex on both sides, or nullopt when
// infeasible. Modeled as unit-capacity flow with lower bound 1 on required
// vertices via the usual excess/deficit transformation.
std::optional<std::vector<std::pair<int, int>>> saturating_matching(
    const BipartiteGraph& graph, const std::vector<int>& required_left,
    const std::vector<int>& required_right);

}  // namespace necpres
