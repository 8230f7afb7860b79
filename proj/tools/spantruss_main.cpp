#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "spantruss/ingest.hpp"
#include "spantruss/snapshot.hpp"
#include "spantruss/span_miner.hpp"
#include "spantruss/support.hpp"
#include "spantruss/truss.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace spantruss;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

int log_level() {
    static int level = [] {
        const char* env = std::getenv("SPANTRUSS_LOG");
        if (!env) return 1;
        std::string v(env);
        if (v == "error") return 0;
        if (v == "warn") return 1;
        if (v == "info") return 2;
        if (v == "debug") return 3;
        return 1;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= 2) std::cerr << "[spantruss] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= 3) std::cerr << "[spantruss] " << msg << "\n";
}

struct IngestArgs {
    std::string input;
    EdgeListFormat format = EdgeListFormat::snap;
    std::int64_t window_seconds = 1;
};

void add_ingest_options(CLI::App* cmd, IngestArgs& args) {
    cmd->add_option("--input", args.input, "timestamped edge list")->required();
    cmd->add_option("--format", args.format, "input format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, EdgeListFormat>{{"konect", EdgeListFormat::konect},
                                                  {"snap", EdgeListFormat::snap},
                                                  {"csv", EdgeListFormat::csv}}))
        ->required();
    cmd->add_option("--window-seconds", args.window_seconds,
                    "width of one discrete timestamp")
        ->check(CLI::PositiveNumber)
        ->required();
}

IngestResult load_dataset(const IngestArgs& args) {
    std::ifstream in(args.input);
    if (!in) {
        throw std::runtime_error("cannot open '" + args.input + "'");
    }
    auto edges = parse_edges(in, args.format);
    IngestConfig cfg;
    cfg.format = args.format;
    cfg.window_seconds = args.window_seconds;
    IngestResult result = build_temporal_graph(edges, cfg);
    log_info("loaded " + args.input + ": " + std::to_string(result.graph.num_vertices()) +
             " vertices, " + std::to_string(result.graph.num_timestamps()) +
             " timestamps, " + std::to_string(result.graph.total_edge_instances()) +
             " edge instances");
    return result;
}

std::string dataset_name(const std::string& path) {
    auto slash = path.find_last_of("/\\");
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

using MinerFn = std::function<MaximalSet(const TemporalGraph&, const MineOptions&)>;

const std::map<std::string, MinerFn>& miner_registry() {
    static const std::map<std::string, MinerFn> registry = {
        {"naive", mine_naive},
        {"baseline", mine_baseline},
        {"streaming", mine_streaming},
        {"heuristic", mine_heuristic},
    };
    return registry;
}

json truss_to_json(const SpanTruss& st, bool emit_edges) {
    json obj;
    obj["k"] = st.order;
    obj["t_start"] = st.span.t_start;
    obj["t_end"] = st.span.t_end;
    obj["num_edges"] = st.edges.size();
    if (emit_edges) {
        auto& edges = obj["edges"] = json::array();
        for (const Edge& e : st.edges) edges.push_back({e.u, e.v});
    }
    return obj;
}

struct RunReport {
    std::string dataset;
    std::string algorithm;
    double wall_time_seconds = 0.0;
    std::size_t result_count = 0;
    bool has_skips = false;
    std::size_t skip_count = 0;
};

int cmd_mine(const IngestArgs& ingest_args, const std::string& algo, int min_k,
             bool emit_edges, bool paranoid, const std::string& mapping_out) {
    IngestResult data = load_dataset(ingest_args);

    MineOptions options;
    options.paranoid = paranoid;
    MinerStats stats;
    options.stats = &stats;
    MaximalSet result = miner_registry().at(algo)(data.graph, options);
    log_debug("decompositions=" + std::to_string(stats.decompositions) +
              " skips=" + std::to_string(stats.skips));

    for (const SpanTruss& st : result.items()) {
        if (st.order < min_k) continue;
        std::cout << truss_to_json(st, emit_edges).dump() << "\n";
    }

    if (!mapping_out.empty()) {
        std::ofstream out(mapping_out);
        if (!out) throw std::runtime_error("cannot write '" + mapping_out + "'");
        json mapping;
        mapping["labels"] = data.vertex_labels;
        out << mapping.dump() << "\n";
    }
    return kExitOk;
}

int cmd_bench(const IngestArgs& ingest_args, const std::vector<std::string>& algos,
              const std::string& output) {
    IngestResult data = load_dataset(ingest_args);
    const std::string name = dataset_name(ingest_args.input);

    // test hook: corrupt one strategy's results to exercise the mismatch path
    const char* mangle_env = std::getenv("SPANTRUSS_TEST_MANGLE");
    const std::string mangle = mangle_env ? mangle_env : "";

    std::vector<RunReport> reports;
    std::vector<MaximalSet> results;
    for (const std::string& algo : algos) {
        MinerStats stats;
        MineOptions options;
        options.stats = &stats;
        auto start = std::chrono::steady_clock::now();
        MaximalSet result = miner_registry().at(algo)(data.graph, options);
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

        if (algo == mangle && !result.items().empty()) {
            std::vector<SpanTruss> items = result.items();
            items.pop_back();
            result = MaximalSet(std::move(items));
        }

        RunReport report;
        report.dataset = name;
        report.algorithm = algo;
        report.wall_time_seconds = elapsed.count();
        report.result_count = result.size();
        report.has_skips = algo == "heuristic";
        report.skip_count = stats.skips;
        reports.push_back(report);
        results.push_back(std::move(result));
    }

    for (std::size_t i = 1; i < results.size(); ++i) {
        if (!(results[i] == results[0])) {
            std::cerr << "result mismatch: " << algos[0] << " found " << results[0].size()
                      << " maximal span-trusses, " << algos[i] << " found "
                      << results[i].size() << " (or differing contents)\n";
            return kExitMismatch;
        }
    }

    if (output == "csv") {
        std::cout << "dataset,algorithm,wall_time_seconds,result_count,skip_count\n";
        for (const RunReport& r : reports) {
            std::cout << r.dataset << "," << r.algorithm << "," << r.wall_time_seconds
                      << "," << r.result_count << ",";
            if (r.has_skips) std::cout << r.skip_count;
            std::cout << "\n";
        }
    } else {
        for (const RunReport& r : reports) {
            json obj;
            obj["dataset"] = r.dataset;
            obj["algorithm"] = r.algorithm;
            obj["wall_time_seconds"] = r.wall_time_seconds;
            obj["result_count"] = r.result_count;
            if (r.has_skips) obj["skip_count"] = r.skip_count;
            std::cout << obj.dump() << "\n";
        }
    }
    return kExitOk;
}

int cmd_decompose(const IngestArgs& ingest_args, Timestamp t_start, Timestamp t_end) {
    IngestResult data = load_dataset(ingest_args);
    const Interval span{t_start, t_end};
    if (!data.graph.valid_interval(span)) {
        throw std::runtime_error("interval [" + std::to_string(t_start) + "," +
                                 std::to_string(t_end) + "] outside time domain [0," +
                                 std::to_string(data.graph.t_max()) + "]");
    }
    std::vector<Edge> edges = interval_edges(data.graph, span);
    if (edges.empty()) {
        std::cerr << "no edges exist across the whole interval [" << t_start << ","
                  << t_end << "]\n";
        return kExitOk;
    }
    Snapshot snap(data.graph.num_vertices(), edges);
    TrussLabels labels = truss_decomposition(snap, compute_supports(snap));
    for (const Edge& e : edges) {
        json obj;
        obj["u"] = e.u;
        obj["v"] = e.v;
        obj["trussness"] = labels.trussness(e);
        std::cout << obj.dump() << "\n";
    }
    json summary;
    summary["innermost_k"] = labels.max_order();
    summary["num_edges"] = edges.size();
    std::cout << summary.dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal span-truss mining over temporal graphs"};
    app.require_subcommand(1);

    IngestArgs mine_input;
    std::string mine_algo;
    int min_k = 0;
    bool emit_edges = false;
    bool paranoid = false;
    std::string mapping_out;
    CLI::App* mine = app.add_subcommand("mine", "mine all maximal span-trusses");
    add_ingest_options(mine, mine_input);
    mine->add_option("--algo", mine_algo, "mining strategy")
        ->check(CLI::IsMember({"naive", "baseline", "streaming", "heuristic"}))
        ->required();
    mine->add_option("--min-k", min_k, "drop results below this order");
    mine->add_flag("--emit-edges", emit_edges, "include edge lists in the output");
    mine->add_flag("--paranoid", paranoid,
                   "heuristic only: re-verify every skipped decomposition");
    mine->add_option("--mapping-out", mapping_out,
                     "write the dense-index-to-label table to this file");

    IngestArgs bench_input;
    std::vector<std::string> bench_algos;
    std::string bench_output = "json";
    CLI::App* bench = app.add_subcommand("bench", "time strategies and cross-check results");
    add_ingest_options(bench, bench_input);
    bench->add_option("--algos", bench_algos, "comma-separated strategies")
        ->delimiter(',')
        ->required()
        ->check(CLI::IsMember({"naive", "baseline", "streaming", "heuristic"}));
    bench->add_option("--output", bench_output, "report format")
        ->check(CLI::IsMember({"json", "csv"}));

    IngestArgs dec_input;
    Timestamp dec_start = 0;
    Timestamp dec_end = 0;
    CLI::App* decompose =
        app.add_subcommand("decompose", "truss decomposition of one interval snapshot");
    add_ingest_options(decompose, dec_input);
    decompose->add_option("--t-start", dec_start, "interval start")->required();
    decompose->add_option("--t-end", dec_end, "interval end")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            return app.exit(e);
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (mine->parsed()) {
            return cmd_mine(mine_input, mine_algo, min_k, emit_edges, paranoid, mapping_out);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_input, bench_algos, bench_output);
        }
        if (decompose->parsed()) {
            return cmd_decompose(dec_input, dec_start, dec_end);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
