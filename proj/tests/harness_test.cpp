#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "circum/harness/runner.hpp"

using namespace circum;

namespace {

std::string dump_reports(const Corpus& corpus, const RunOptions& opts, RunSummary* summary = nullptr) {
    std::ostringstream out;
    RunSummary s = run_verify(corpus, opts, [&](const BoundReport& r) { out << to_json(r).dump() << '\n'; });
    out << s.to_json().dump() << '\n';
    if (summary) *summary = s;
    return out.str();
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST(Corpus, ExhaustiveSizesAndOrder) {
    const Corpus c(CorpusSpec::exhaustive_of(5));
    EXPECT_EQ(c.size(), 1024U);
    EXPECT_EQ(c.item(0).graph.edge_count(), 0);
    EXPECT_EQ(c.item(1023).graph.edge_count(), 10);
    EXPECT_THROW(Corpus(CorpusSpec::exhaustive_of(9)), ArgumentError);
}

TEST(Corpus, RandomItemsDependOnlyOnSeedAndIndex) {
    const Corpus a(CorpusSpec::gnp_of(10, 0.4, 50, 9));
    const Corpus b(CorpusSpec::gnp_of(10, 0.4, 50, 9));
    const Corpus other(CorpusSpec::gnp_of(10, 0.4, 50, 10));
    int differing = 0;
    for (std::size_t i = 0; i < 50; ++i) {
        EXPECT_EQ(a.item(i).graph, b.item(i).graph);
        differing += a.item(i).graph == other.item(i).graph ? 0 : 1;
    }
    EXPECT_GT(differing, 40);
}

TEST(Corpus, RegularGraphsAreRegular) {
    const Corpus c(CorpusSpec::regular_of(10, 3, 40, 7));
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Graph g = c.item(i).graph;
        for (Vertex v = 0; v < g.order(); ++v) ASSERT_EQ(g.degree(v), 3);
    }
    EXPECT_THROW(Corpus(CorpusSpec::regular_of(7, 3, 1, 1)), ArgumentError);
}

TEST(Corpus, ExtremalRange) {
    const Corpus c(CorpusSpec::extremal_of(1, 3, 1, 5));
    // kappa 1: delta 1..5, kappa 2: 2..5, kappa 3: 3..5.
    EXPECT_EQ(c.size(), 12U);
}

TEST(Verify, ExhaustiveFiveIsClean) {
    RunOptions opts;
    const RunSummary s = run_verify(Corpus(CorpusSpec::exhaustive_of(5)), opts);
    EXPECT_EQ(s.total, 1024U);
    EXPECT_EQ(s.violations, 0U);
    EXPECT_EQ(s.processed + s.skipped() + s.errored, s.total);
    EXPECT_EQ(s.errored, 0U);
    EXPECT_GT(s.sharp1, 0U);
}

TEST(Verify, ExtremalReportsAreSharp) {
    RunOptions opts;
    opts.level = CheckLevel::all;
    opts.lemma = LemmaOptions::sampled();
    std::vector<BoundReport> reports;
    const RunSummary s = run_verify(Corpus(CorpusSpec::extremal_of(1, 3, 1, 5)), opts,
                                    [&](const BoundReport& r) { reports.push_back(r); });
    EXPECT_EQ(s.violations, 0U);
    for (const auto& r : reports) {
        if (r.status != GraphStatus::main) continue;
        for (const auto& e : r.entries) {
            EXPECT_TRUE(e.sharp1()) << r.graph_id;
            EXPECT_TRUE(e.sharp2()) << r.graph_id;
        }
    }
}

TEST(Verify, SingleEdgeGoesToDegenerateTrack) {
    CorpusSpec spec;
    spec.kind = CorpusKind::file;
    spec.path = temp_file("circum_single_edge.edges", "0 1\n").string();
    spec.format = GraphFormat::edge_list;
    std::vector<BoundReport> reports;
    const RunSummary s = run_verify(Corpus(spec), RunOptions{}, [&](const BoundReport& r) { reports.push_back(r); });
    ASSERT_EQ(reports.size(), 1U);
    EXPECT_EQ(reports[0].status, GraphStatus::degenerate);
    EXPECT_EQ(reports[0].circumference, 2);
    EXPECT_EQ(s.processed, 0U);
    EXPECT_EQ(s.skipped_degenerate, 1U);
    EXPECT_EQ(s.checks.count("theorem1"), 0U);
    EXPECT_EQ(s.violations, 0U);
}

TEST(Verify, CapacityErrorsAreRecorded) {
    RunOptions opts;
    opts.limits.max_dp_n = 4;
    opts.limits.max_oracle_n = 4;
    const RunSummary s = run_verify(Corpus(CorpusSpec::exhaustive_of(5)), opts);
    EXPECT_GT(s.errored, 0U);
    EXPECT_EQ(s.processed + s.skipped() + s.errored, 1024U);
}

TEST(Verify, ConnectedOnlyFilter) {
    CorpusSpec spec = CorpusSpec::exhaustive_of(4);
    spec.connected_only = true;
    const RunSummary s = run_verify(Corpus(spec), RunOptions{});
    // 38 of the 64 labeled graphs on 4 vertices are connected.
    EXPECT_EQ(s.total - s.skipped_filtered, 38U);
}

TEST(Verify, LemmaLevelOnFourVertices) {
    RunOptions opts;
    opts.level = CheckLevel::all;
    const RunSummary s = run_verify(Corpus(CorpusSpec::exhaustive_of(4)), opts);
    EXPECT_EQ(s.violations, 0U);
    for (const auto& [name, c] : s.checks) {
        EXPECT_EQ(c.failed, 0U) << name;
        EXPECT_EQ(c.hypothesis_error, 0U) << name;
    }
    EXPECT_GT(s.checks.at("lemma1").passed, 0U);
    EXPECT_GT(s.checks.at("lemma3").passed, 0U);
    EXPECT_GT(s.checks.at("a2").passed, 0U);
}

TEST(Verify, ReportsIndependentOfWorkerCount) {
    const Corpus corpus(CorpusSpec::gnp_of(9, 0.45, 300, 5));
    RunOptions one;
    one.block_size = 64;
    RunOptions four = one;
    four.jobs = 4;
    EXPECT_EQ(dump_reports(corpus, one), dump_reports(corpus, four));
    EXPECT_EQ(dump_reports(corpus, one), dump_reports(corpus, one));
}

TEST(Hunt, RejectsExhaustiveCorpus) {
    EXPECT_THROW(hunt(Corpus(CorpusSpec::exhaustive_of(4)), RunOptions{}, nullptr), ArgumentError);
}

TEST(Hunt, SmallRandomCorporaExitClean) {
    std::ostringstream violations;
    const HuntOutcome a = hunt(Corpus(CorpusSpec::gnp_of(12, 0.3, 200, 42)), RunOptions{}, &violations);
    EXPECT_EQ(a.exit_status, 0);
    const HuntOutcome b = hunt(Corpus(CorpusSpec::regular_of(10, 3, 100, 7)), RunOptions{}, &violations);
    EXPECT_EQ(b.exit_status, 0);
    EXPECT_TRUE(violations.str().empty());
}

TEST(Report, CsvRowsPerCycleSet) {
    RunOptions opts;
    std::vector<BoundReport> reports;
    CorpusSpec spec = CorpusSpec::extremal_of(1, 1, 2, 2);
    run_verify(Corpus(spec), opts, [&](const BoundReport& r) { reports.push_back(r); });
    ASSERT_EQ(reports.size(), 1U);
    const std::string rows = csv_rows(reports[0]);
    EXPECT_EQ(std::count(rows.begin(), rows.end(), '\n'), 2);
    EXPECT_NE(rows.find("\"D{c\""), std::string::npos);
    const auto j = to_json(reports[0]);
    EXPECT_EQ(j["entries"].size(), 2U);
    EXPECT_EQ(parse_graph6(j["graph_id"].get<std::string>()), build_extremal({1, 2}));
}
