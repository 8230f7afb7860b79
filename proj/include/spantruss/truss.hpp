#pragma once

#include <unordered_map>
#include <vector>

#include "spantruss/support.hpp"

namespace spantruss {

/// Trussness per edge: the largest k such that the edge survives in the
/// k-truss. Every present edge has trussness >= 2.
class TrussLabels {
public:
    using Map = std::unordered_map<Edge, int, EdgeHash>;

    TrussLabels() = default;
    TrussLabels(Map labels, int max_order)
        : labels_(std::move(labels)), max_order_(max_order) {}

    int trussness(const Edge& e) const;  // throws std::out_of_range on unknown edge

    /// Largest trussness present; 0 for an empty edge set.
    int max_order() const { return max_order_; }

    std::size_t size() const { return labels_.size(); }
    const Map& entries() const { return labels_; }

private:
    Map labels_;
    int max_order_ = 0;
};

/// Peeling decomposition: repeatedly remove a minimum-support edge,
/// label it min-support + 2 (clamped non-decreasing over the removal
/// order), and decrement the two companion edges of every triangle it
/// still closes. Support values are bucketed into bins with lazy position
/// updates. Inputs are not modified; the caller's snapshot and supports
/// stay valid for further streaming.
TrussLabels truss_decomposition(const Snapshot& s, const SupportMap& sup);

struct InnermostTruss {
    int order = 0;
    std::vector<Edge> edges;  // canonical sorted
};

/// The non-empty truss with the largest order. Throws std::invalid_argument
/// when labels are empty (no truss in an empty graph).
InnermostTruss innermost_truss(const TrussLabels& labels);

}  // namespace spantruss
