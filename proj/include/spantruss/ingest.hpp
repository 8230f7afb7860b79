#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spantruss/temporal_graph.hpp"

namespace spantruss {

/// One line of a timestamped edge list, before any normalization.
struct RawTemporalEdge {
    std::string u;
    std::string v;
    std::int64_t timestamp = 0;  // seconds since epoch

    bool operator==(const RawTemporalEdge&) const = default;
};

enum class EdgeListFormat { konect, snap, csv };

struct IngestConfig {
    std::int64_t window_seconds = 1;
    EdgeListFormat format = EdgeListFormat::snap;
    bool drop_self_loops = true;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class EmptyGraphError : public std::runtime_error {
public:
    explicit EmptyGraphError(const std::string& message) : std::runtime_error(message) {}
};

/// Reads a timestamped edge list. Lines starting with '%' or '#' and blank
/// lines are skipped. Field layout per format:
///   konect:  u v weight timestamp   (weight ignored)
///   snap:    u v timestamp
///   csv:     u,v,timestamp          (one required "u,v,timestamp" header)
/// konect and snap vertex ids must be numeric; csv labels are free-form.
/// Throws ParseError with the 1-based line number on malformed input.
std::vector<RawTemporalEdge> parse_edges(std::istream& input, EdgeListFormat format);

struct IngestResult {
    TemporalGraph graph;
    std::vector<std::string> vertex_labels;  // dense index -> source label
};

/// Discretizes timestamps into windows of cfg.window_seconds anchored at the
/// minimum timestamp seen, remaps labels to dense indices in first-appearance
/// order, collapses duplicates within a window, and drops self-loops when
/// configured. Throws EmptyGraphError when no edge survives.
IngestResult build_temporal_graph(std::span<const RawTemporalEdge> edges,
                                  const IngestConfig& cfg);

}  // namespace spantruss
