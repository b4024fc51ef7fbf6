#pragma once

#include <utility>
#include <vector>

#include "minorpack/graph.hpp"

namespace minorpack {

// Maximum-cardinality bipartite matching over index sets [0, n_left) and
// [0, n_right); deterministic for a fixed edge order.
std::vector<std::pair<int, int>> max_bipartite_matching(
    int n_left, int n_right, const std::vector<std::pair<int, int>>& edges);

struct MengerResult {
    std::vector<Path> paths;   // fully vertex-disjoint source->sink paths
    VertexSet separator;       // |separator| == |paths|, meets every source->sink path
};

// Vertex-capacity Menger via unit max-flow on the split digraph. Sources and
// sinks may intersect; a common vertex yields a length-0 path.
MengerResult menger(const Graph& g, const VertexSet& sources, const VertexSet& sinks);

}  // namespace minorpack
