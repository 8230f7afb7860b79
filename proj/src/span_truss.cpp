#include "spantruss/span_truss.hpp"

#include <algorithm>

namespace spantruss {

namespace {

bool emission_order(const SpanTruss& a, const SpanTruss& b) {
    if (a.span.t_start != b.span.t_start) return a.span.t_start < b.span.t_start;
    if (a.span.t_end != b.span.t_end) return a.span.t_end > b.span.t_end;
    return a.order > b.order;
}

}  // namespace

bool dominates(const SpanTruss& a, const SpanTruss& b) {
    if (a.order == b.order && a.span == b.span) return false;  // same pair
    return a.order >= b.order && interval_contains(a.span, b.span);
}

MaximalSet::MaximalSet(std::vector<SpanTruss> results) : items_(std::move(results)) {
    std::sort(items_.begin(), items_.end(), emission_order);
}

MaximalSet filter_maximal(std::vector<SpanTruss> candidates) {
    std::vector<SpanTruss> kept;
    kept.reserve(candidates.size());
    for (const SpanTruss& c : candidates) {
        bool dominated = false;
        for (const SpanTruss& other : candidates) {
            if (dominates(other, c)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(c);
    }
    return MaximalSet(std::move(kept));
}

}  // namespace spantruss
