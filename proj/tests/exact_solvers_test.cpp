#include <gtest/gtest.h>

#include <random>

#include "circum/oracle.hpp"
#include "circum/solvers.hpp"

using namespace circum;

namespace {

Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

Graph petersen() {
    return Graph(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                      {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
}

Graph complete(int n) {
    Graph g(n);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<std::vector<Vertex>> as_lists(const std::vector<VertexSet>& sets) {
    std::vector<std::vector<Vertex>> out;
    for (VertexSet s : sets) out.push_back(s.to_vector());
    std::sort(out.begin(), out.end());
    return out;
}

void expect_agreement(const Graph& g, const SolveLimits& limits) {
    ASSERT_EQ(longest_path_length(g, limits), oracle::longest_path_length(g, limits));
    const LongestCycles lc = longest_cycles(g, limits);
    ASSERT_EQ(lc.circumference, oracle::longest_cycle_length(g, limits));
    if (lc.circumference >= 3) {
        ASSERT_EQ(as_lists(lc.vertex_sets), oracle::longest_cycle_vertex_sets(g, limits));
    }
}

} // namespace

TEST(Conventions, EmptyAndTinyGraphs) {
    EXPECT_EQ(longest_path_length(Graph(0)), -1);
    EXPECT_EQ(longest_cycle_length(Graph(0)), 0);
    EXPECT_EQ(longest_path_length(Graph(1)), 0);
    EXPECT_EQ(longest_cycle_length(Graph(1)), 1);
    EXPECT_EQ(longest_path_length(complete(2)), 1);
    EXPECT_EQ(longest_cycle_length(complete(2)), 2);
    EXPECT_EQ(oracle::longest_path_length(Graph(0)), -1);
    EXPECT_EQ(oracle::longest_cycle_length(Graph(1)), 1);
    EXPECT_EQ(oracle::longest_cycle_length(complete(2)), 2);
}

TEST(Conventions, DegenerateCycleSets) {
    const LongestCycles edges = longest_cycles(Graph(3, {{0, 1}, {1, 2}}));
    EXPECT_EQ(edges.circumference, 2);
    EXPECT_EQ(edges.vertex_sets, (std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{1, 2}}));
    const LongestCycles points = longest_cycles(Graph(2));
    EXPECT_EQ(points.circumference, 1);
    EXPECT_EQ(points.vertex_sets.size(), 2U);
    EXPECT_THROW(all_longest_cycle_vertex_sets(Graph(3, {{0, 1}})), DegenerateCircumferenceError);
}

TEST(Solvers, NamedGraphs) {
    EXPECT_EQ(longest_path_length(petersen()), 9);
    EXPECT_EQ(longest_cycle_length(petersen()), 9);
    EXPECT_EQ(all_longest_cycle_vertex_sets(petersen()).size(), 10U);

    EXPECT_EQ(longest_path_length(bowtie()), 4);
    EXPECT_EQ(all_longest_cycle_vertex_sets(bowtie()),
              (std::vector<VertexSet>{VertexSet{0, 1, 2}, VertexSet{0, 3, 4}}));

    EXPECT_EQ(all_longest_cycle_vertex_sets(complete(4)), (std::vector<VertexSet>{VertexSet{0, 1, 2, 3}}));
    EXPECT_EQ(longest_cycle_length(complete(12)), 12);

    std::vector<std::pair<Vertex, Vertex>> cycle;
    for (int v = 0; v < 20; ++v) cycle.emplace_back(v, (v + 1) % 20);
    EXPECT_EQ(longest_cycle_length(Graph(20, cycle)), 20);
    EXPECT_EQ(longest_path_length(Graph(20, cycle)), 19);
}

TEST(Solvers, DisconnectedGraphsUseBestComponent) {
    // Triangle plus a disjoint 4-cycle.
    const Graph g(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
    EXPECT_EQ(longest_cycle_length(g), 4);
    EXPECT_EQ(longest_path_length(g), 3);
    EXPECT_EQ(all_longest_cycle_vertex_sets(g), (std::vector<VertexSet>{VertexSet{3, 4, 5, 6}}));
}

TEST(Solvers, CapacityLimits) {
    SolveLimits small;
    small.max_dp_n = 5;
    small.max_oracle_n = 5;
    EXPECT_THROW(longest_cycle_length(complete(6), small), CapacityError);
    EXPECT_THROW(oracle::longest_cycle_length(complete(6), small), CapacityError);
    // Capacity applies per component.
    EXPECT_EQ(longest_cycle_length(Graph(10, {{0, 1}, {1, 2}, {2, 0}, {5, 6}}), small), 3);
    SolveLimits bad;
    bad.max_oracle_n = 25;
    EXPECT_THROW(bad.validate(), ArgumentError);
}

TEST(Solvers, EnvironmentOverridesLimits) {
    ::setenv("CIRCUM_MAX_DP_N", "12", 1);
    ::setenv("CIRCUM_MAX_ORACLE_N", "7", 1);
    const SolveLimits l = SolveLimits::from_env();
    ::unsetenv("CIRCUM_MAX_DP_N");
    ::unsetenv("CIRCUM_MAX_ORACLE_N");
    EXPECT_EQ(l.max_dp_n, 12);
    EXPECT_EQ(l.max_oracle_n, 7);
}

TEST(OracleAgreement, ExhaustiveUpToFive) {
    for (int n = 0; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask)
            expect_agreement(Graph::from_edge_mask(n, mask), {});
}

TEST(OracleAgreement, RandomUpToNine) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> order(1, 9);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int trial = 0; trial < 1000; ++trial) expect_agreement(random_graph(rng, order(rng), density(rng)), {});
}

TEST(Solvers, AddingAnEdgeNeverShrinks) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_graph(rng, n, 0.35);
        const int p = longest_path_length(g), c = longest_cycle_length(g);
        const Vertex u = static_cast<Vertex>(rng() % n);
        Vertex v = static_cast<Vertex>(rng() % n);
        if (u == v) v = (v + 1) % n;
        auto edges = g.edges();
        edges.emplace_back(std::min(u, v), std::max(u, v));
        const Graph h(n, edges);
        EXPECT_GE(longest_path_length(h), p);
        EXPECT_GE(longest_cycle_length(h), c);
        EXPECT_LE(longest_cycle_length(h), n);
        EXPECT_LE(longest_path_length(h), n - 1);
    }
}
