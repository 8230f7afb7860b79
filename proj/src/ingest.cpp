#include "spantruss/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

namespace spantruss {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '%' || c == '#';
    }
    return true;  // blank
}

std::vector<std::string> split_fields(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    if (sep == ' ') {
        while (ss >> field) fields.push_back(field);
    } else {
        while (std::getline(ss, field, sep)) {
            // trim surrounding whitespace
            auto b = field.find_first_not_of(" \t\r");
            auto e = field.find_last_not_of(" \t\r");
            fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
        }
    }
    return fields;
}

std::int64_t parse_timestamp(const std::string& field, std::size_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(line_no, "bad timestamp '" + field + "'");
    }
    if (value < 0) {
        throw ParseError(line_no, "negative timestamp '" + field + "'");
    }
    return value;
}

// konect and snap carry numeric vertex ids; anything else is corruption
void require_numeric_id(const std::string& field, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(line_no, "bad vertex id '" + field + "'");
    }
}

}  // namespace

std::vector<RawTemporalEdge> parse_edges(std::istream& input, EdgeListFormat format) {
    std::vector<RawTemporalEdge> edges;
    std::string line;
    std::size_t line_no = 0;
    bool csv_header_seen = false;

    while (std::getline(input, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;

        const char sep = format == EdgeListFormat::csv ? ',' : ' ';
        std::vector<std::string> fields = split_fields(line, sep);

        if (format == EdgeListFormat::csv && !csv_header_seen) {
            if (fields.size() != 3 || fields[0] != "u" || fields[1] != "v" ||
                fields[2] != "timestamp") {
                throw ParseError(line_no, "expected csv header 'u,v,timestamp'");
            }
            csv_header_seen = true;
            continue;
        }

        RawTemporalEdge edge;
        switch (format) {
            case EdgeListFormat::konect:
                // u v weight timestamp; the weight is ignored
                if (fields.size() != 4) {
                    throw ParseError(line_no, "expected 'u v weight timestamp', got " +
                                                  std::to_string(fields.size()) + " fields");
                }
                require_numeric_id(fields[0], line_no);
                require_numeric_id(fields[1], line_no);
                edge.u = fields[0];
                edge.v = fields[1];
                edge.timestamp = parse_timestamp(fields[3], line_no);
                break;
            case EdgeListFormat::snap:
            case EdgeListFormat::csv:
                if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
                    throw ParseError(line_no, "expected 'u v timestamp', got " +
                                                  std::to_string(fields.size()) + " fields");
                }
                if (format == EdgeListFormat::snap) {
                    require_numeric_id(fields[0], line_no);
                    require_numeric_id(fields[1], line_no);
                }
                edge.u = fields[0];
                edge.v = fields[1];
                edge.timestamp = parse_timestamp(fields[2], line_no);
                break;
        }
        edges.push_back(std::move(edge));
    }
    return edges;
}

IngestResult build_temporal_graph(std::span<const RawTemporalEdge> edges,
                                  const IngestConfig& cfg) {
    if (cfg.window_seconds <= 0) {
        throw std::invalid_argument("window_seconds must be positive");
    }

    std::int64_t min_ts = std::numeric_limits<std::int64_t>::max();
    bool any = false;
    for (const RawTemporalEdge& e : edges) {
        if (cfg.drop_self_loops && e.u == e.v) continue;
        min_ts = std::min(min_ts, e.timestamp);
        any = true;
    }
    if (!any) {
        throw EmptyGraphError("empty graph: no edges survive filtering");
    }

    // dense vertex ids in first-appearance order
    std::unordered_map<std::string, Vertex> ids;
    std::vector<std::string> labels;
    auto vertex_of = [&](const std::string& label) {
        auto [it, inserted] = ids.emplace(label, static_cast<Vertex>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    Timestamp t_max = 0;
    std::set<std::pair<Timestamp, Edge>> seen;  // collapses same-window duplicates
    for (const RawTemporalEdge& e : edges) {
        if (cfg.drop_self_loops && e.u == e.v) continue;
        Vertex u = vertex_of(e.u);
        Vertex v = vertex_of(e.v);
        auto t = static_cast<Timestamp>((e.timestamp - min_ts) / cfg.window_seconds);
        t_max = std::max(t_max, t);
        seen.emplace(t, Edge(u, v));
    }

    std::vector<std::vector<Edge>> edges_at(static_cast<std::size_t>(t_max) + 1);
    for (const auto& [t, edge] : seen) {
        edges_at[static_cast<std::size_t>(t)].push_back(edge);
    }

    return IngestResult{TemporalGraph(labels.size(), std::move(edges_at)),
                        std::move(labels)};
}

}  // namespace spantruss
