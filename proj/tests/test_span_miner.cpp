#include <doctest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "spantruss/snapshot.hpp"
#include "spantruss/span_miner.hpp"
#include "spantruss/support.hpp"
#include "spantruss/truss.hpp"

using namespace spantruss;

namespace {

TemporalGraph random_case(std::mt19937& rng, int trial) {
    std::uniform_int_distribution<std::size_t> n_dist(2, 14);
    std::uniform_int_distribution<std::size_t> t_dist(1, 6);
    const double probs[] = {0.05, 0.1, 0.2, 0.5};
    std::size_t n = n_dist(rng);
    std::size_t num_t = t_dist(rng);
    double p = probs[trial % 4];
    if (trial % 3 == 0) {
        return testutil::random_persistent_temporal_graph(rng, n, num_t, 2.5 * p);
    }
    return testutil::random_temporal_graph(rng, n, num_t, p);
}

bool matches_oracle(const MaximalSet& set,
                    const std::vector<testutil::OracleSpanTruss>& oracle) {
    if (set.size() != oracle.size()) return false;
    for (std::size_t i = 0; i < oracle.size(); ++i) {
        const SpanTruss& a = set.items()[i];
        const testutil::OracleSpanTruss& b = oracle[i];
        if (a.order != b.order || a.span != b.span || a.edges != b.edges) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("filter_maximal on hand cases") {
    std::vector<Edge> tri = {{0, 1}, {0, 2}, {1, 2}};

    SUBCASE("same order, nested span: the wider one wins") {
        MaximalSet out = filter_maximal({{3, {0, 1}, tri}, {3, {0, 2}, tri}});
        REQUIRE(out.size() == 1);
        CHECK(out.items()[0].span == Interval{0, 2});
    }
    SUBCASE("incomparable on the two axes: both stay") {
        MaximalSet out = filter_maximal({{3, {0, 1}, tri}, {2, {0, 2}, {{0, 1}}}});
        CHECK(out.size() == 2);
    }
    SUBCASE("a single candidate is maximal") {
        MaximalSet out = filter_maximal({{3, {1, 1}, tri}});
        CHECK(out.size() == 1);
    }
    SUBCASE("emission order: t_start up, t_end down") {
        MaximalSet out = filter_maximal({{3, {0, 1}, tri}, {2, {0, 2}, {{0, 1}}}});
        CHECK(out.items()[0].span == Interval{0, 2});
        CHECK(out.items()[1].span == Interval{0, 1});
    }
}

TEST_CASE("mine_naive on fixed graphs") {
    SUBCASE("edgeless graph mines nothing") {
        TemporalGraph g(4, {{}, {}, {}});
        CHECK(mine_naive(g).empty());
    }
    SUBCASE("shrinking triangle fixture") {
        MaximalSet out = mine_naive(testutil::triangle_then_edge());
        REQUIRE(out.size() == 2);
        CHECK(out.items()[0].order == 2);
        CHECK(out.items()[0].span == Interval{0, 2});
        CHECK(out.items()[0].edges == std::vector<Edge>{{0, 1}});
        CHECK(out.items()[1].order == 3);
        CHECK(out.items()[1].span == Interval{0, 1});
        CHECK(out.items()[1].edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    }
    SUBCASE("one triangle at one timestamp") {
        TemporalGraph g(3, {{}, {{0, 1}, {1, 2}, {0, 2}}, {}});
        MaximalSet out = mine_naive(g);
        REQUIRE(out.size() == 1);
        CHECK(out.items()[0].order == 3);
        CHECK(out.items()[0].span == Interval{1, 1});
    }
}

TEST_CASE("mine_naive equals the from-definitions oracle") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        TemporalGraph g = random_case(rng, trial);
        CHECK(matches_oracle(mine_naive(g), testutil::oracle_maximal_span_trusses(g)));
    }
}

TEST_CASE("all four miners agree with the naive one") {
    std::mt19937 rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        TemporalGraph g = random_case(rng, trial);
        MaximalSet expected = mine_naive(g);
        CHECK(mine_baseline(g) == expected);
        CHECK(mine_streaming(g) == expected);
        CHECK(mine_heuristic(g) == expected);
    }
}

TEST_CASE("miners on degenerate graphs") {
    SUBCASE("constant graph keeps only full-span trusses") {
        auto k4 = testutil::complete_graph_edges(4);
        TemporalGraph g(4, {k4, k4, k4});
        MaximalSet expected = mine_naive(g);
        REQUIRE(expected.size() == 1);
        CHECK(expected.items()[0].order == 4);
        CHECK(expected.items()[0].span == Interval{0, 2});
        CHECK(expected.items()[0].edges == k4);
        CHECK(mine_baseline(g) == expected);
        CHECK(mine_streaming(g) == expected);
        CHECK(mine_heuristic(g) == expected);
    }
    SUBCASE("single active timestamp") {
        TemporalGraph g(3, {{}, {{0, 1}, {1, 2}, {0, 2}}});
        MaximalSet expected = mine_naive(g);
        REQUIRE(expected.size() == 1);
        CHECK(expected.items()[0].span == Interval{1, 1});
        CHECK(mine_baseline(g) == expected);
        CHECK(mine_streaming(g) == expected);
        CHECK(mine_heuristic(g) == expected);
    }
}

TEST_CASE("results are sound span-trusses") {
    std::mt19937 rng(303);
    for (int trial = 0; trial < 40; ++trial) {
        TemporalGraph g = random_case(rng, trial);
        MaximalSet out = mine_streaming(g);

        for (const SpanTruss& st : out.items()) {
            CHECK(!st.edges.empty());
            CHECK(st.order >= 2);

            // members live in the interval's edge set
            std::vector<Edge> in_interval = interval_edges(g, st.span);
            CHECK(std::includes(in_interval.begin(), in_interval.end(), st.edges.begin(),
                                st.edges.end()));

            // in-subgraph support clears order - 2
            auto sub_sup = testutil::subgraph_supports(g.num_vertices(), st.edges);
            for (const auto& [edge, count] : sub_sup) {
                CHECK(count >= st.order - 2);
            }

            // each result is the innermost truss of its own interval
            Snapshot snap(g.num_vertices(), in_interval);
            InnermostTruss inner = innermost_truss(truss_decomposition(snap, compute_supports(snap)));
            CHECK(inner.order == st.order);
            CHECK(inner.edges == st.edges);
        }

        // antichain: no result dominates another
        for (const SpanTruss& a : out.items()) {
            for (const SpanTruss& b : out.items()) {
                CHECK_FALSE(dominates(a, b));
            }
        }
    }
}

TEST_CASE("span-truss containment across orders and spans") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        TemporalGraph g = testutil::random_persistent_temporal_graph(rng, 10, 5, 0.5);
        // T_{k,D} as the set of edges with trussness >= k in the snapshot of D
        auto truss_edges = [&](const Interval& d, int k) {
            std::vector<Edge> edges = interval_edges(g, d);
            std::vector<Edge> kept;
            if (edges.empty()) return kept;
            Snapshot snap(g.num_vertices(), edges);
            TrussLabels labels = truss_decomposition(snap, compute_supports(snap));
            for (const auto& [edge, t] : labels.entries()) {
                if (t >= k) kept.push_back(edge);
            }
            std::sort(kept.begin(), kept.end());
            return kept;
        };
        for (Timestamp ts = 0; ts <= g.t_max(); ++ts) {
            for (Timestamp te = ts; te <= g.t_max(); ++te) {
                Interval narrow_span{ts, te};
                Interval wide_span{std::max<Timestamp>(0, ts - 1),
                                   std::min<Timestamp>(g.t_max(), te + 1)};
                for (int k = 3; k <= 5; ++k) {
                    // the higher-order truss of the wider span nests inside
                    // the lower-order truss of any contained span
                    std::vector<Edge> tight = truss_edges(wide_span, k);
                    std::vector<Edge> loose = truss_edges(narrow_span, k - 1);
                    CHECK(std::includes(loose.begin(), loose.end(), tight.begin(),
                                        tight.end()));
                }
            }
        }
    }
}

TEST_CASE("lower bounds behave along each pass") {
    std::mt19937 rng(505);
    for (int trial = 0; trial < 50; ++trial) {
        TemporalGraph g = random_case(rng, trial);
        for (auto miner : {mine_baseline, mine_streaming, mine_heuristic}) {
            std::vector<MineStep> trace;
            MineOptions options;
            options.trace = &trace;
            miner(g, options);

            for (std::size_t i = 0; i < trace.size(); ++i) {
                const MineStep& step = trace[i];
                CHECK(step.k_star >= step.lower_bound);  // bound never overshoots
                CHECK(step.emitted == (step.k_star > step.lower_bound));
                if (i > 0 && trace[i - 1].t_start == step.t_start) {
                    CHECK(trace[i - 1].t_end == step.t_end + 1);  // descending walk
                    CHECK(step.lower_bound >= trace[i - 1].lower_bound);
                    CHECK(step.lower_bound >= trace[i - 1].k_star);
                }
            }
        }
    }
}

TEST_CASE("streaming builds supports once per pass") {
    std::mt19937 rng(606);
    TemporalGraph g = testutil::random_persistent_temporal_graph(rng, 12, 6, 0.5);
    MinerStats stats;
    MineOptions options;
    options.stats = &stats;
    mine_streaming(g, options);

    std::size_t passes = 0;
    for (Timestamp ts = 0; ts <= g.t_max(); ++ts) {
        passes += !g.edges_at(ts).empty();
    }
    CHECK(stats.support_builds == passes);
}

TEST_CASE("heuristic skips every repeat of a constant graph") {
    auto k4 = testutil::complete_graph_edges(4);
    TemporalGraph g(4, {k4, k4, k4, k4});
    MinerStats stats;
    MineOptions options;
    options.stats = &stats;
    MaximalSet out = mine_heuristic(g, options);
    REQUIRE(out.size() == 1);

    // per pass only the widest interval is decomposed; the rest carry over
    std::size_t num_t = g.num_timestamps();
    CHECK(stats.skips == num_t * (num_t - 1) / 2);
    CHECK(stats.decompositions == num_t);
}

TEST_CASE("heuristic has no skips on a single-timestamp graph") {
    TemporalGraph g(4, {testutil::complete_graph_edges(4)});
    MinerStats stats;
    MineOptions options;
    options.stats = &stats;
    MaximalSet out = mine_heuristic(g, options);
    CHECK(stats.skips == 0);
    CHECK(out == mine_baseline(g));
}

TEST_CASE("paranoid heuristic validates every skip") {
    std::mt19937 rng(707);
    MineOptions options;
    options.paranoid = true;
    MinerStats stats;
    options.stats = &stats;
    for (int trial = 0; trial < 80; ++trial) {
        TemporalGraph g = random_case(rng, trial);
        MaximalSet expected = mine_naive(g);
        CHECK(mine_heuristic(g, options) == expected);  // throws on a bad skip
    }
    CHECK(stats.skips > 0);  // the sweep must actually exercise the skip path
}
