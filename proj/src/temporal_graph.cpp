#include "spantruss/temporal_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spantruss {

TemporalGraph::TemporalGraph(std::size_t num_vertices,
                             std::vector<std::vector<Edge>> edges_at)
    : num_vertices_(num_vertices), edges_at_(std::move(edges_at)) {
    if (edges_at_.empty()) {
        throw std::invalid_argument("temporal graph needs at least one timestamp");
    }
    for (auto& edges : edges_at_) {
        for (const Edge& e : edges) {
            if (e.u == e.v) {
                throw std::invalid_argument("self-loop (" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + ") rejected");
            }
            if (e.v >= num_vertices_) {
                throw std::invalid_argument("edge endpoint " + std::to_string(e.v) +
                                            " out of range for " +
                                            std::to_string(num_vertices_) + " vertices");
            }
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
            throw std::invalid_argument("duplicate edge within one timestamp");
        }
    }
}

const std::vector<Edge>& TemporalGraph::edges_at(Timestamp t) const {
    if (t < 0 || t > t_max()) {
        throw std::out_of_range("timestamp " + std::to_string(t) + " outside [0," +
                                std::to_string(t_max()) + "]");
    }
    return edges_at_[static_cast<std::size_t>(t)];
}

bool TemporalGraph::edge_active_at(const Edge& e, Timestamp t) const {
    const auto& edges = edges_at(t);
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::size_t TemporalGraph::total_edge_instances() const {
    std::size_t total = 0;
    for (const auto& edges : edges_at_) total += edges.size();
    return total;
}

std::vector<Edge> intersect_edges(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    std::vector<Edge> out;
    out.reserve(std::min(a.size(), b.size()));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Edge> interval_edges(const TemporalGraph& g, const Interval& d) {
    if (!g.valid_interval(d)) {
        throw std::out_of_range("interval [" + std::to_string(d.t_start) + "," +
                                std::to_string(d.t_end) + "] outside the time domain");
    }
    std::vector<Edge> current = g.edges_at(d.t_start);
    for (Timestamp t = d.t_start + 1; t <= d.t_end && !current.empty(); ++t) {
        current = intersect_edges(current, g.edges_at(t));
    }
    return current;
}

std::optional<Timestamp> max_nonempty_end(const TemporalGraph& g, Timestamp t_start) {
    std::vector<Edge> current = g.edges_at(t_start);
    if (current.empty()) return std::nullopt;
    Timestamp t_end = t_start;
    while (t_end + 1 <= g.t_max()) {
        std::vector<Edge> next = intersect_edges(current, g.edges_at(t_end + 1));
        if (next.empty()) break;
        current = std::move(next);
        ++t_end;
    }
    return t_end;
}

}  // namespace spantruss
