#pragma once

#include <span>
#include <unordered_map>

#include "spantruss/snapshot.hpp"

namespace spantruss {

/// Triangle count per edge. Keys are exactly the edges of the snapshot the
/// map was computed against.
class SupportMap {
public:
    using Map = std::unordered_map<Edge, int, EdgeHash>;

    int support(const Edge& e) const;  // throws std::out_of_range on unknown edge
    bool contains(const Edge& e) const { return map_.contains(e); }
    void set(const Edge& e, int value) { map_[e] = value; }
    void increment(const Edge& e);  // throws std::out_of_range on unknown edge

    std::size_t size() const { return map_.size(); }

    /// Number of edges with support strictly greater than threshold.
    std::size_t count_above(int threshold) const;

    Map::const_iterator begin() const { return map_.begin(); }
    Map::const_iterator end() const { return map_.end(); }

    bool operator==(const SupportMap&) const = default;

private:
    Map map_;
};

/// Support of every edge from scratch. Each edge (u,v) is resolved by
/// scanning the smaller of the two neighbor sets and testing membership in
/// the larger.
SupportMap compute_supports(const Snapshot& s);

/// Inserts new_edges into s and updates sup in place: every new edge starts
/// at 0 and each common neighbor of its endpoints bumps the three edges of
/// the triangle it closes. Edges are applied in order, so triangles formed
/// between batch members are counted. Throws std::invalid_argument when an
/// edge is already present.
void insert_edges_update(Snapshot& s, SupportMap& sup, std::span<const Edge> new_edges);

}  // namespace spantruss
