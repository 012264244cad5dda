#include <gtest/gtest.h>

#include <random>

#include "circum/graph.hpp"
#include "circum/io.hpp"

using namespace circum;

namespace {

Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

Graph petersen() {
    return Graph(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                      {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
}

} // namespace

TEST(VertexSet, BasicOperations) {
    VertexSet s{1, 3, 5};
    EXPECT_EQ(s.size(), 3);
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(2));
    EXPECT_EQ(s.min(), 1);
    EXPECT_EQ((s - VertexSet{3}).to_vector(), (std::vector<Vertex>{1, 5}));
    EXPECT_EQ((s | VertexSet{0}).to_string(), "{0,1,3,5}");
    EXPECT_TRUE((VertexSet{1, 5}.subset_of(s)));
    EXPECT_EQ(VertexSet::range(64).size(), 64);
    EXPECT_EQ(VertexSet::range(0).size(), 0);
}

TEST(Graph, RejectsLoopsAndBadIds) {
    EXPECT_THROW(Graph(3, {{1, 1}}), ArgumentError);
    EXPECT_THROW(Graph(3, {{0, 3}}), ArgumentError);
    EXPECT_THROW(Graph(65), CapacityError);
    std::vector<VertexSet> rows{VertexSet{1}, VertexSet{}};
    EXPECT_THROW(Graph::from_adjacency(2, rows), ArgumentError);
}

TEST(Graph, DegreeSumIsTwiceEdgeCount) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const std::uint64_t pairs = n * (n - 1) / 2;
        const Graph g = Graph::from_edge_mask(n, pairs ? rng() & ((std::uint64_t{1} << pairs) - 1) : 0);
        int sum = 0;
        for (Vertex v = 0; v < n; ++v) sum += g.degree(v);
        EXPECT_EQ(sum, 2 * g.edge_count());
        EXPECT_EQ(static_cast<int>(g.edges().size()), g.edge_count());
    }
}

TEST(Graph, MinDegree) {
    EXPECT_EQ(min_degree(bowtie()), 2);
    EXPECT_EQ(min_degree(petersen()), 3);
    EXPECT_EQ(min_degree(Graph(1)), 0);
    EXPECT_THROW(min_degree(Graph(0)), UndefinedValueError);
}

TEST(Graph, RemoveVerticesKeepsBackMapping) {
    const auto sub = remove_vertices(bowtie(), VertexSet{0, 1, 2});
    EXPECT_EQ(sub.graph.order(), 2);
    EXPECT_EQ(sub.graph.edge_count(), 1);
    EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{3, 4}));
    EXPECT_EQ(sub.lift(VertexSet{0, 1}), (VertexSet{3, 4}));

    const auto center = remove_vertices(bowtie(), VertexSet{0});
    EXPECT_EQ(center.graph.edge_count(), 2);
    EXPECT_EQ(components(center.graph).size(), 2U);

    EXPECT_EQ(remove_vertices(bowtie(), bowtie().vertices()).graph.order(), 0);
    EXPECT_THROW(remove_vertices(bowtie(), VertexSet{7}), ArgumentError);
}

TEST(Graph, Connectivity) {
    EXPECT_TRUE(is_connected(petersen()));
    EXPECT_TRUE(is_connected(Graph(0)));
    EXPECT_TRUE(is_connected(Graph(1)));
    EXPECT_FALSE(is_connected(Graph(2)));
}

TEST(Sequences, PathValidation) {
    const Graph g = bowtie();
    PathSeq p(g, {1, 0, 3, 4});
    EXPECT_EQ(p.length(), 3);
    EXPECT_EQ(p.successor(0), 3);
    EXPECT_EQ(p.predecessor(0), 1);
    EXPECT_EQ(p.segment(0, 4), (std::vector<Vertex>{0, 3, 4}));
    EXPECT_THROW(p.successor(4), ArgumentError);
    EXPECT_THROW(PathSeq(g, {1, 3}), ArgumentError);
    EXPECT_THROW(PathSeq(g, {1, 0, 1}), ArgumentError);
    EXPECT_EQ(PathSeq(g, {}).length(), -1);
    EXPECT_EQ(PathSeq(g, {2}).length(), 0);
}

TEST(Sequences, CycleConventionsAndSegments) {
    const Graph g = petersen();
    CycleSeq c(g, {0, 1, 2, 3, 4});
    EXPECT_EQ(c.length(), 5);
    EXPECT_EQ(segment_length(c, 0, 0), 0);
    EXPECT_EQ(segment_length(c, 0, 3), 3);
    EXPECT_EQ(segment_length(c, 3, 0), 2);
    EXPECT_EQ(c.successor(4), 0);
    EXPECT_EQ(CycleSeq(g, {5}).length(), 1);
    EXPECT_EQ(CycleSeq(g, {0, 5}).length(), 2);
    EXPECT_THROW(CycleSeq(g, {0, 2}), ArgumentError);
    EXPECT_THROW(CycleSeq(g, {0, 1, 2}), ArgumentError);
    EXPECT_THROW(segment_length(CycleSeq(g, {0, 5}), 0, 5), ArgumentError);
}

TEST(Graph6, KnownEncodings) {
    EXPECT_EQ(serialize_graph6(bowtie()), "D{c");
    EXPECT_EQ(serialize_graph6(petersen()), "IheA@GUAo");
    EXPECT_EQ(serialize_graph6(Graph(1)), "@");
    EXPECT_EQ(serialize_graph6(Graph(3, {{0, 1}})), "B_");
    EXPECT_EQ(serialize_graph6(Graph(3, {{0, 1}, {1, 2}})), "Bg");

    const Graph star = parse_graph6("D?{");
    EXPECT_EQ(star.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
    EXPECT_EQ(parse_graph6("@").order(), 1);
    EXPECT_EQ(parse_graph6(">>graph6<<D{c\n"), bowtie());
}

TEST(Graph6, LongOrderForm) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 0; v + 1 < 64; ++v) edges.emplace_back(v, v + 1);
    const Graph path(64, edges);
    const std::string text = serialize_graph6(path);
    EXPECT_EQ(text.substr(0, 10), "~?@?hCGGC@");
    EXPECT_EQ(parse_graph6(text), path);
}

TEST(Graph6, Errors) {
    EXPECT_THROW(parse_graph6(""), ParseError);
    try {
        parse_graph6("D{");
        FAIL() << "truncated input accepted";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 2U);
    }
    // Bowtie body with a padding bit set.
    EXPECT_THROW(parse_graph6("D{d"), ParseError);
    EXPECT_THROW(parse_graph6("D{c?"), ParseError);
    EXPECT_THROW(parse_graph6("D{\x01"), ParseError);
}

TEST(Graph6, RoundTripEveryGraphOnFiveVertices) {
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
        const Graph g = Graph::from_edge_mask(5, mask);
        ASSERT_EQ(parse_graph6(serialize_graph6(g)), g) << mask;
    }
}

TEST(EdgeList, ParseAndRoundTrip) {
    const Graph g = parse_edge_list("# bowtie\n0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n");
    EXPECT_EQ(g, bowtie());
    const Graph with_isolated = parse_edge_list("# order: 4\n0 1\n");
    EXPECT_EQ(with_isolated.order(), 4);
    EXPECT_EQ(parse_edge_list(serialize_edge_list(with_isolated)), with_isolated);
    EXPECT_EQ(parse_edge_list("").order(), 0);
    EXPECT_THROW(parse_edge_list("0 1\n2\n"), ParseError);
    EXPECT_THROW(parse_edge_list("0 0\n"), ParseError);
    EXPECT_THROW(parse_edge_list("0 x\n"), ParseError);
}
