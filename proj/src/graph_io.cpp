#include "spantruss/graph_io.hpp"

#include <json.hpp>

namespace spantruss {

void save_graph_json(const TemporalGraph& g, const std::vector<std::string>& labels,
                     std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["num_vertices"] = g.num_vertices();
    doc["t_max"] = g.t_max();
    auto& edges_at = doc["edges_at"] = nlohmann::ordered_json::array();
    for (Timestamp t = 0; t <= g.t_max(); ++t) {
        auto& list = edges_at.emplace_back(nlohmann::ordered_json::array());
        for (const Edge& e : g.edges_at(t)) {
            list.push_back({e.u, e.v});
        }
    }
    if (!labels.empty()) doc["labels"] = labels;
    out << doc.dump() << '\n';
}

LoadedGraph load_graph_json(std::istream& in) {
    nlohmann::json doc = nlohmann::json::parse(in);
    const auto num_vertices = doc.at("num_vertices").get<std::size_t>();
    const auto t_max = doc.at("t_max").get<Timestamp>();
    const auto& edges_at_json = doc.at("edges_at");
    if (static_cast<Timestamp>(edges_at_json.size()) != t_max + 1) {
        throw std::invalid_argument("edges_at must have t_max + 1 entries");
    }
    std::vector<std::vector<Edge>> edges_at;
    edges_at.reserve(edges_at_json.size());
    for (const auto& list : edges_at_json) {
        std::vector<Edge> edges;
        edges.reserve(list.size());
        for (const auto& pair : list) {
            edges.emplace_back(pair.at(0).get<Vertex>(), pair.at(1).get<Vertex>());
        }
        edges_at.push_back(std::move(edges));
    }
    LoadedGraph loaded{TemporalGraph(num_vertices, std::move(edges_at)), {}};
    if (doc.contains("labels")) {
        loaded.vertex_labels = doc.at("labels").get<std::vector<std::string>>();
    }
    return loaded;
}

}  // namespace spantruss
