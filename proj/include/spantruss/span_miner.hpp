#pragma once

#include <cstddef>
#include <vector>

#include "spantruss/delta_edge_sets.hpp"
#include "spantruss/span_truss.hpp"
#include "spantruss/temporal_graph.hpp"

namespace spantruss {

/// Counters the miners fill in when asked to; skips is only touched by the
/// heuristic miner.
struct MinerStats {
    std::size_t decompositions = 0;
    std::size_t support_builds = 0;
    std::size_t skips = 0;
};

/// One inner-loop step of the pruned miners, recorded for inspection.
struct MineStep {
    Timestamp t_start = 0;
    Timestamp t_end = 0;
    int lower_bound = 0;
    int k_star = 0;
    bool emitted = false;
    bool skipped = false;
};

struct MineOptions {
    /// Heuristic only: re-run the decomposition on skipped intervals and
    /// fail loudly if the skip rule mispredicted the order.
    bool paranoid = false;
    MinerStats* stats = nullptr;
    std::vector<MineStep>* trace = nullptr;
};

/// Pruning state shared across the start-timestamp passes: k_prime_per_end[t]
/// carries the innermost order of [t_start - 1, t] from the previous pass,
/// k_double_prime the order of [t_start, t_end + 1] from the previous inner
/// step. Their max lower-bounds the order any truss must beat to be maximal.
class LowerBoundState {
public:
    explicit LowerBoundState(std::size_t num_timestamps)
        : k_prime_per_end_(num_timestamps, 0) {}

    void begin_pass() { k_double_prime_ = 0; }

    int lower_bound(Timestamp t_end) const {
        int kp = k_prime_per_end_[static_cast<std::size_t>(t_end)];
        return kp > k_double_prime_ ? kp : k_double_prime_;
    }

    /// After an interval: k'' takes its order, K'[t_end] keeps the max.
    void record_order(Timestamp t_end, int k_star) {
        k_double_prime_ = k_star;
        auto& kp = k_prime_per_end_[static_cast<std::size_t>(t_end)];
        if (k_star > kp) kp = k_star;
    }

    const std::vector<int>& k_prime_per_end() const { return k_prime_per_end_; }
    int k_double_prime() const { return k_double_prime_; }

private:
    std::vector<int> k_prime_per_end_;
    int k_double_prime_ = 0;
};

/// Exhaustive reference miner: decomposes every interval with a non-empty
/// edge intersection, keeps the innermost truss of each as a candidate, and
/// filters out dominated candidates at the end. Quadratic interval memory;
/// intended as the correctness oracle for the pruned miners.
MaximalSet mine_naive(const TemporalGraph& g, const MineOptions& options = {});

/// Lower-bound-pruned miner: walks t_start ascending and t_end descending
/// from the largest non-empty end, rebuilds supports from scratch for every
/// interval, and emits an innermost truss only when its order beats the
/// lower bound. Output equals mine_naive.
MaximalSet mine_baseline(const TemporalGraph& g, const MineOptions& options = {});

/// Like mine_baseline but maintains supports incrementally: one support
/// build per t_start, then pure edge insertions as the interval shrinks.
MaximalSet mine_streaming(const TemporalGraph& g, const MineOptions& options = {});

/// Like mine_streaming but skips the decomposition of a shrunk interval
/// when the count of edges with support above (previous order - 2) did not
/// change; the previous order then carries over unchanged.
MaximalSet mine_heuristic(const TemporalGraph& g, const MineOptions& options = {});

}  // namespace spantruss
