#pragma once

#include <vector>

#include "spantruss/temporal_graph.hpp"

namespace spantruss {

/// For a fixed t_start, the O(|E|)-space representation of all shrinking
/// intervals [t_start, t_e]:
///
///   base            = edges alive throughout [t_start, t_star]
///   removed_at(t_e) = edges alive throughout [t_start, t_e] but gone at
///                     t_e + 1, for t_e in [t_start, t_star - 1]
///
/// where t_star is the largest end with a non-empty intersection. The edge
/// set of [t_start, t_e] is the union of base and every removed_at(t) with
/// t >= t_e, so a consumer walking t_e downwards only ever inserts edges.
/// All stored sets are pairwise disjoint and sorted.
class DeltaEdgeSets {
public:
    DeltaEdgeSets(Timestamp t_start, Timestamp t_star, std::vector<Edge> base,
                  std::vector<std::vector<Edge>> removed);

    Timestamp t_start() const { return t_start_; }
    Timestamp t_star() const { return t_star_; }
    const std::vector<Edge>& base() const { return base_; }

    /// E⁻(t_e); valid for t_e in [t_start, t_star - 1].
    const std::vector<Edge>& removed_at(Timestamp t_e) const;

private:
    Timestamp t_start_;
    Timestamp t_star_;
    std::vector<Edge> base_;
    std::vector<std::vector<Edge>> removed_;  // removed_[i] holds E⁻(t_start + i)
};

/// Builds the delta sets for t_start in O(|T| x |E|) total work.
/// Throws std::invalid_argument when edges_at(t_start) is empty.
DeltaEdgeSets build_delta_sets(const TemporalGraph& g, Timestamp t_start);

}  // namespace spantruss
