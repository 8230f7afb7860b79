#pragma once

#include <span>
#include <unordered_set>
#include <vector>

#include "spantruss/edge.hpp"

namespace spantruss {

/// Mutable static graph with per-vertex neighbor sets and expected O(1)
/// edge membership. Grows by edge insertion only; the mining loops never
/// delete edges.
class Snapshot {
public:
    explicit Snapshot(std::size_t num_vertices);
    Snapshot(std::size_t num_vertices, std::span<const Edge> edges);

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool has_edge(const Edge& e) const;

    /// Throws std::invalid_argument on self-loops, out-of-range endpoints
    /// and already-present edges.
    void add_edge(const Edge& e);

    std::size_t degree(Vertex u) const { return adj_[u].size(); }
    const std::unordered_set<Vertex>& neighbors(Vertex u) const { return adj_[u]; }

    /// All edges in canonical sorted order.
    std::vector<Edge> edges() const;

private:
    std::vector<std::unordered_set<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

}  // namespace spantruss
