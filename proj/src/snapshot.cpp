#include "spantruss/snapshot.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spantruss {

Snapshot::Snapshot(std::size_t num_vertices) : adj_(num_vertices) {}

Snapshot::Snapshot(std::size_t num_vertices, std::span<const Edge> edges)
    : adj_(num_vertices) {
    for (const Edge& e : edges) add_edge(e);
}

bool Snapshot::has_edge(const Edge& e) const {
    if (e.v >= adj_.size()) return false;
    return adj_[e.u].contains(e.v);
}

void Snapshot::add_edge(const Edge& e) {
    if (e.u == e.v) {
        throw std::invalid_argument("self-loop (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") rejected");
    }
    if (e.v >= adj_.size()) {
        throw std::invalid_argument("edge endpoint " + std::to_string(e.v) +
                                    " out of range");
    }
    if (!adj_[e.u].insert(e.v).second) {
        throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") already present");
    }
    adj_[e.v].insert(e.u);
    ++edge_count_;
}

std::vector<Edge> Snapshot::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace spantruss
