#pragma once

#include <vector>

#include "spantruss/edge.hpp"
#include "spantruss/interval.hpp"

namespace spantruss {

/// A truss of the given order over the snapshot of `span`, together with
/// that span. Edges are canonical and sorted.
struct SpanTruss {
    int order = 0;
    Interval span;
    std::vector<Edge> edges;

    bool operator==(const SpanTruss&) const = default;
};

/// `a` dominates `b` when a is a different (order, span) pair with
/// a.order >= b.order and a.span containing b.span.
bool dominates(const SpanTruss& a, const SpanTruss& b);

/// An antichain of span-trusses under (order, span-containment), kept in
/// emission order: t_start ascending, then t_end descending, then order
/// descending.
class MaximalSet {
public:
    MaximalSet() = default;
    explicit MaximalSet(std::vector<SpanTruss> results);

    const std::vector<SpanTruss>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    bool operator==(const MaximalSet&) const = default;

private:
    std::vector<SpanTruss> items_;
};

/// Drops every candidate dominated by another candidate. Callers pass at
/// most one candidate per interval (the innermost truss of that interval).
MaximalSet filter_maximal(std::vector<SpanTruss> candidates);

}  // namespace spantruss
