#pragma once

#include <optional>
#include <vector>

#include "spantruss/edge.hpp"
#include "spantruss/interval.hpp"

namespace spantruss {

/// A graph over a discrete time domain [0, t_max]: one edge set per
/// timestamp. Immutable after construction; safe to share across threads.
///
/// Per-timestamp edge sets are kept as sorted vectors, which makes the
/// interval intersections cheap merges. Construction sorts its input and
/// rejects self-loops, out-of-range endpoints and duplicate edges.
class TemporalGraph {
public:
    TemporalGraph(std::size_t num_vertices, std::vector<std::vector<Edge>> edges_at);

    std::size_t num_vertices() const { return num_vertices_; }
    Timestamp t_max() const { return static_cast<Timestamp>(edges_at_.size()) - 1; }
    std::size_t num_timestamps() const { return edges_at_.size(); }

    /// Sorted edge set active at timestamp t.
    const std::vector<Edge>& edges_at(Timestamp t) const;

    bool edge_active_at(const Edge& e, Timestamp t) const;

    bool valid_interval(const Interval& d) const {
        return d.t_start >= 0 && d.t_start <= d.t_end && d.t_end <= t_max();
    }

    /// Total number of (edge, timestamp) instances.
    std::size_t total_edge_instances() const;

    bool operator==(const TemporalGraph&) const = default;

private:
    std::size_t num_vertices_;
    std::vector<std::vector<Edge>> edges_at_;
};

/// Edges present at every timestamp of d (set intersection). May be empty.
/// Throws std::out_of_range if d is outside the graph's time domain.
std::vector<Edge> interval_edges(const TemporalGraph& g, const Interval& d);

/// Largest t_e >= t_start with a non-empty intersection over [t_start, t_e],
/// or nullopt when edges_at(t_start) is itself empty (every longer interval
/// is then empty too).
std::optional<Timestamp> max_nonempty_end(const TemporalGraph& g, Timestamp t_start);

/// Sorted-vector set intersection.
std::vector<Edge> intersect_edges(const std::vector<Edge>& a, const std::vector<Edge>& b);

}  // namespace spantruss
