#include "spantruss/truss.hpp"

#include <algorithm>
#include <stdexcept>

namespace spantruss {

int TrussLabels::trussness(const Edge& e) const {
    auto it = labels_.find(e);
    if (it == labels_.end()) {
        throw std::out_of_range("no trussness for edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ")");
    }
    return it->second;
}

TrussLabels truss_decomposition(const Snapshot& s, const SupportMap& sup) {
    const std::vector<Edge> edges = s.edges();  // canonical order fixes the tie-break
    const std::size_t m = edges.size();
    if (m == 0) return TrussLabels{};

    std::unordered_map<std::uint64_t, std::uint32_t> edge_id;
    edge_id.reserve(m * 2);
    for (std::uint32_t i = 0; i < m; ++i) edge_id.emplace(edges[i].packed(), i);

    // working copy of supports; the caller's map stays untouched
    std::vector<int> work(m);
    int max_sup = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
        work[i] = sup.support(edges[i]);
        max_sup = std::max(max_sup, work[i]);
    }

    std::vector<std::vector<std::uint32_t>> bins(static_cast<std::size_t>(max_sup) + 1);
    for (std::uint32_t i = 0; i < m; ++i) bins[static_cast<std::size_t>(work[i])].push_back(i);

    std::vector<char> removed(m, 0);
    std::vector<int> truss(m, 2);
    int max_order = 2;

    for (int level = 0; level <= max_sup; ++level) {
        auto& bin = bins[static_cast<std::size_t>(level)];
        // the bin grows while we drain it: decremented edges land here
        for (std::size_t idx = 0; idx < bin.size(); ++idx) {
            std::uint32_t eid = bin[idx];
            if (removed[eid] || work[eid] != level) continue;  // stale entry
            removed[eid] = 1;
            truss[eid] = level + 2;
            max_order = std::max(max_order, level + 2);

            const Edge& e = edges[eid];
            Vertex a = e.u, b = e.v;
            if (s.degree(a) > s.degree(b)) std::swap(a, b);
            const auto& probe = s.neighbors(b);
            for (Vertex w : s.neighbors(a)) {
                if (w == b || !probe.contains(w)) continue;
                std::uint32_t e1 = edge_id.at(Edge(e.u, w).packed());
                std::uint32_t e2 = edge_id.at(Edge(e.v, w).packed());
                if (removed[e1] || removed[e2]) continue;  // triangle already broken
                // supports never drop below the current level: edges caught
                // up in cascades peel at this level, not an earlier one
                if (work[e1] > level) bins[static_cast<std::size_t>(--work[e1])].push_back(e1);
                if (work[e2] > level) bins[static_cast<std::size_t>(--work[e2])].push_back(e2);
            }
        }
    }

    TrussLabels::Map labels;
    labels.reserve(m * 2);
    for (std::uint32_t i = 0; i < m; ++i) labels.emplace(edges[i], truss[i]);
    return TrussLabels(std::move(labels), max_order);
}

InnermostTruss innermost_truss(const TrussLabels& labels) {
    if (labels.size() == 0) {
        throw std::invalid_argument("no truss: the snapshot has no edges");
    }
    InnermostTruss result;
    result.order = labels.max_order();
    for (const auto& [edge, k] : labels.entries()) {
        if (k >= result.order) result.edges.push_back(edge);
    }
    std::sort(result.edges.begin(), result.edges.end());
    return result;
}

}  // namespace spantruss
