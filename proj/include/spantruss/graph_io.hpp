#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "spantruss/temporal_graph.hpp"

namespace spantruss {

struct LoadedGraph {
    TemporalGraph graph;
    std::vector<std::string> vertex_labels;  // empty when the file carries none
};

/// Internal JSON snapshot format:
///   {"num_vertices": N, "t_max": T,
///    "edges_at": [[[u,v], ...], ...],      // one list per timestamp
///    "labels": ["a", ...]}                  // optional
/// Round-trips a TemporalGraph exactly.
void save_graph_json(const TemporalGraph& g, const std::vector<std::string>& labels,
                     std::ostream& out);

LoadedGraph load_graph_json(std::istream& in);

}  // namespace spantruss
