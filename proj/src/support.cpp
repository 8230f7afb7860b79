#include "spantruss/support.hpp"

#include <stdexcept>
#include <string>

namespace spantruss {

namespace {

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

int SupportMap::support(const Edge& e) const {
    auto it = map_.find(e);
    if (it == map_.end()) {
        throw std::out_of_range("no support entry for edge " + edge_str(e));
    }
    return it->second;
}

void SupportMap::increment(const Edge& e) {
    auto it = map_.find(e);
    if (it == map_.end()) {
        throw std::out_of_range("no support entry for edge " + edge_str(e));
    }
    ++it->second;
}

std::size_t SupportMap::count_above(int threshold) const {
    std::size_t count = 0;
    for (const auto& [edge, value] : map_) {
        if (value > threshold) ++count;
    }
    return count;
}

SupportMap compute_supports(const Snapshot& s) {
    SupportMap sup;
    for (Vertex u = 0; u < s.num_vertices(); ++u) {
        for (Vertex v : s.neighbors(u)) {
            if (v < u) continue;
            // scan the smaller endpoint's neighbors, probe the larger's
            Vertex a = u, b = v;
            if (s.degree(a) > s.degree(b)) std::swap(a, b);
            int count = 0;
            const auto& probe = s.neighbors(b);
            for (Vertex w : s.neighbors(a)) {
                if (w != b && probe.contains(w)) ++count;
            }
            sup.set(Edge(u, v), count);
        }
    }
    return sup;
}

void insert_edges_update(Snapshot& s, SupportMap& sup, std::span<const Edge> new_edges) {
    for (const Edge& e : new_edges) {
        s.add_edge(e);  // throws if already present
        sup.set(e, 0);
        Vertex a = e.u, b = e.v;
        if (s.degree(a) > s.degree(b)) std::swap(a, b);
        const auto& probe = s.neighbors(b);
        for (Vertex w : s.neighbors(a)) {
            if (w == b || !probe.contains(w)) continue;
            // (a,b,w) is a new triangle: all three edges gain one
            sup.increment(e);
            sup.increment(Edge(e.u, w));
            sup.increment(Edge(e.v, w));
        }
    }
}

}  // namespace spantruss
