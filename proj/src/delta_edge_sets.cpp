#include "spantruss/delta_edge_sets.hpp"

#include <stdexcept>
#include <string>

namespace spantruss {

DeltaEdgeSets::DeltaEdgeSets(Timestamp t_start, Timestamp t_star, std::vector<Edge> base,
                             std::vector<std::vector<Edge>> removed)
    : t_start_(t_start),
      t_star_(t_star),
      base_(std::move(base)),
      removed_(std::move(removed)) {
    if (base_.empty()) {
        throw std::invalid_argument("delta sets need a non-empty base edge set");
    }
    if (removed_.size() != static_cast<std::size_t>(t_star_ - t_start_)) {
        throw std::invalid_argument("delta sets need one removal set per end in "
                                    "[t_start, t_star)");
    }
}

const std::vector<Edge>& DeltaEdgeSets::removed_at(Timestamp t_e) const {
    if (t_e < t_start_ || t_e >= t_star_) {
        throw std::out_of_range("removal set index " + std::to_string(t_e) +
                                " outside [" + std::to_string(t_start_) + "," +
                                std::to_string(t_star_) + ")");
    }
    return removed_[static_cast<std::size_t>(t_e - t_start_)];
}

DeltaEdgeSets build_delta_sets(const TemporalGraph& g, Timestamp t_start) {
    std::vector<Edge> current = g.edges_at(t_start);
    if (current.empty()) {
        throw std::invalid_argument("empty start: no edges at timestamp " +
                                    std::to_string(t_start));
    }

    // Walk t_e upward; at each step split the running intersection into the
    // edges that survive timestamp t_e + 1 and the ones that vanish there.
    std::vector<std::vector<Edge>> removed;
    Timestamp t_e = t_start;
    while (t_e + 1 <= g.t_max()) {
        const std::vector<Edge>& next_ts = g.edges_at(t_e + 1);
        std::vector<Edge> kept;
        std::vector<Edge> gone;
        kept.reserve(current.size());
        std::size_t j = 0;
        for (const Edge& e : current) {
            while (j < next_ts.size() && next_ts[j] < e) ++j;
            if (j < next_ts.size() && next_ts[j] == e) {
                kept.push_back(e);
            } else {
                gone.push_back(e);
            }
        }
        if (kept.empty()) break;  // t_e is the last non-empty end
        removed.push_back(std::move(gone));
        current = std::move(kept);
        ++t_e;
    }

    return DeltaEdgeSets(t_start, t_e, std::move(current), std::move(removed));
}

}  // namespace spantruss
