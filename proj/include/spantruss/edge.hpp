#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>

namespace spantruss {

using Vertex = std::uint32_t;
using Timestamp = std::int32_t;

/// Undirected edge stored canonically with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;

    std::uint64_t packed() const { return (std::uint64_t{u} << 32) | v; }
};

struct EdgeHash {
    std::size_t operator()(const Edge& e) const {
        // splitmix64 finalizer on the packed pair
        std::uint64_t x = e.packed();
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};

}  // namespace spantruss
