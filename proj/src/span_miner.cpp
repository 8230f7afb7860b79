#include "spantruss/span_miner.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "spantruss/snapshot.hpp"
#include "spantruss/support.hpp"
#include "spantruss/truss.hpp"

namespace spantruss {

namespace {

struct NullStats {
    MinerStats stats;
};

MinerStats& stats_ref(const MineOptions& options, NullStats& fallback) {
    return options.stats ? *options.stats : fallback.stats;
}

void record_step(const MineOptions& options, Timestamp t_start, Timestamp t_end,
                 int lower_bound, int k_star, bool emitted, bool skipped) {
    if (options.trace) {
        options.trace->push_back({t_start, t_end, lower_bound, k_star, emitted, skipped});
    }
}

InnermostTruss decompose_innermost(const Snapshot& snap, const SupportMap& sup,
                                   MinerStats& stats) {
    ++stats.decompositions;
    return innermost_truss(truss_decomposition(snap, sup));
}

}  // namespace

MaximalSet mine_naive(const TemporalGraph& g, const MineOptions& options) {
    NullStats fallback;
    MinerStats& stats = stats_ref(options, fallback);

    std::vector<SpanTruss> candidates;
    for (Timestamp t_start = 0; t_start <= g.t_max(); ++t_start) {
        std::vector<Edge> current = g.edges_at(t_start);
        for (Timestamp t_end = t_start; t_end <= g.t_max(); ++t_end) {
            if (t_end > t_start) current = intersect_edges(current, g.edges_at(t_end));
            if (current.empty()) break;  // intersections only shrink from here
            Snapshot snap(g.num_vertices(), current);
            SupportMap sup = compute_supports(snap);
            ++stats.support_builds;
            InnermostTruss inner = decompose_innermost(snap, sup, stats);
            candidates.push_back(
                {inner.order, Interval{t_start, t_end}, std::move(inner.edges)});
        }
    }
    return filter_maximal(std::move(candidates));
}

MaximalSet mine_baseline(const TemporalGraph& g, const MineOptions& options) {
    NullStats fallback;
    MinerStats& stats = stats_ref(options, fallback);

    std::vector<SpanTruss> results;
    LowerBoundState bounds(g.num_timestamps());
    for (Timestamp t_start = 0; t_start <= g.t_max(); ++t_start) {
        if (g.edges_at(t_start).empty()) continue;
        DeltaEdgeSets deltas = build_delta_sets(g, t_start);
        bounds.begin_pass();

        Snapshot snap(g.num_vertices(), deltas.base());
        for (Timestamp t_end = deltas.t_star(); t_end >= t_start; --t_end) {
            if (t_end < deltas.t_star()) {
                for (const Edge& e : deltas.removed_at(t_end)) snap.add_edge(e);
            }
            const int lb = bounds.lower_bound(t_end);
            SupportMap sup = compute_supports(snap);
            ++stats.support_builds;
            InnermostTruss inner = decompose_innermost(snap, sup, stats);
            const bool emit = inner.order > lb;
            if (emit) {
                results.push_back(
                    {inner.order, Interval{t_start, t_end}, std::move(inner.edges)});
            }
            record_step(options, t_start, t_end, lb, inner.order, emit, false);
            bounds.record_order(t_end, inner.order);
        }
    }
    return MaximalSet(std::move(results));
}

MaximalSet mine_streaming(const TemporalGraph& g, const MineOptions& options) {
    NullStats fallback;
    MinerStats& stats = stats_ref(options, fallback);

    std::vector<SpanTruss> results;
    LowerBoundState bounds(g.num_timestamps());
    for (Timestamp t_start = 0; t_start <= g.t_max(); ++t_start) {
        if (g.edges_at(t_start).empty()) continue;
        DeltaEdgeSets deltas = build_delta_sets(g, t_start);
        bounds.begin_pass();

        // one support build per pass; shrinking the interval only inserts
        Snapshot snap(g.num_vertices(), deltas.base());
        SupportMap sup = compute_supports(snap);
        ++stats.support_builds;
        for (Timestamp t_end = deltas.t_star(); t_end >= t_start; --t_end) {
            if (t_end < deltas.t_star()) {
                insert_edges_update(snap, sup, deltas.removed_at(t_end));
            }
            const int lb = bounds.lower_bound(t_end);
            InnermostTruss inner = decompose_innermost(snap, sup, stats);
            const bool emit = inner.order > lb;
            if (emit) {
                results.push_back(
                    {inner.order, Interval{t_start, t_end}, std::move(inner.edges)});
            }
            record_step(options, t_start, t_end, lb, inner.order, emit, false);
            bounds.record_order(t_end, inner.order);
        }
    }
    return MaximalSet(std::move(results));
}

MaximalSet mine_heuristic(const TemporalGraph& g, const MineOptions& options) {
    NullStats fallback;
    MinerStats& stats = stats_ref(options, fallback);

    std::vector<SpanTruss> results;
    LowerBoundState bounds(g.num_timestamps());
    for (Timestamp t_start = 0; t_start <= g.t_max(); ++t_start) {
        if (g.edges_at(t_start).empty()) continue;
        DeltaEdgeSets deltas = build_delta_sets(g, t_start);
        bounds.begin_pass();

        Snapshot snap(g.num_vertices(), deltas.base());
        SupportMap sup = compute_supports(snap);
        ++stats.support_builds;
        int prev_order = 0;
        for (Timestamp t_end = deltas.t_star(); t_end >= t_start; --t_end) {
            int k_star = 0;
            bool skipped = false;
            InnermostTruss inner;
            if (t_end == deltas.t_star()) {
                inner = decompose_innermost(snap, sup, stats);
                k_star = inner.order;
            } else {
                // if no edge crosses the support threshold prev_order - 2
                // when the interval shrinks, the innermost order is carried
                // over and the decomposition is skipped
                const std::size_t before = sup.count_above(prev_order - 2);
                insert_edges_update(snap, sup, deltas.removed_at(t_end));
                const std::size_t after = sup.count_above(prev_order - 2);
                if (after == before) {
                    skipped = true;
                    ++stats.skips;
                    k_star = prev_order;
                    if (options.paranoid) {
                        InnermostTruss check = decompose_innermost(snap, sup, stats);
                        if (check.order != prev_order) {
                            throw std::logic_error(
                                "skip rule mispredicted order " + std::to_string(prev_order) +
                                " vs " + std::to_string(check.order) + " on interval [" +
                                std::to_string(t_start) + "," + std::to_string(t_end) + "]");
                        }
                    }
                } else {
                    inner = decompose_innermost(snap, sup, stats);
                    k_star = inner.order;
                }
            }

            const int lb = bounds.lower_bound(t_end);
            // a skipped interval repeats the previous order, which the lower
            // bound already holds, so it can never be emitted
            const bool emit = k_star > lb;
            if (emit) {
                results.push_back({k_star, Interval{t_start, t_end}, std::move(inner.edges)});
            }
            record_step(options, t_start, t_end, lb, k_star, emit, skipped);
            bounds.record_order(t_end, k_star);
            prev_order = k_star;
        }
    }
    return MaximalSet(std::move(results));
}

}  // namespace spantruss
