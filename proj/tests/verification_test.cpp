#include <gtest/gtest.h>

#include "circum/extremal.hpp"
#include "circum/verification.hpp"
#include "circum/walks.hpp"

using namespace circum;

namespace {

Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

Graph petersen() {
    return Graph(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                      {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
}

Graph complete(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph claw() { return Graph(4, {{0, 1}, {1, 2}, {1, 3}}); }

} // namespace

TEST(Lemma1, PetersenOffCycleVertex) {
    const Graph g = petersen();
    const VertexSet on_cycle = g.vertices() - VertexSet{9};
    const auto cycles = collect_cycles(g, on_cycle, 9, 1);
    ASSERT_EQ(cycles.size(), 1U);
    const auto cfg = make_lemma1_config(g, CycleSeq(g, cycles[0]), PathSeq(g, {9}), {PathSeq(g, {9})});
    EXPECT_EQ(cfg.z_sum(), 3);
    EXPECT_EQ(cfg.t(), 3);
    EXPECT_EQ(cfg.gaps, (std::vector<int>{3, 3, 3}));
    EXPECT_EQ(check_lemma1(g, cfg).status, CheckStatus::passed);
    EXPECT_EQ(check_lemma1_segments(g, cfg).status, CheckStatus::passed);
    EXPECT_EQ(check_lemma1_identities(cfg).status, CheckStatus::passed);
}

TEST(Lemma1, BowtieIsTightWithOneAttackPoint) {
    const Graph g = bowtie();
    const auto cfg = make_lemma1_config(g, CycleSeq(g, {0, 1, 2}), PathSeq(g, {3, 4}),
                                        {PathSeq(g, {3}), PathSeq(g, {4})});
    EXPECT_EQ(cfg.z_sum(), 2);
    EXPECT_EQ(cfg.t(), 1);
    EXPECT_EQ(check_lemma1(g, cfg).status, CheckStatus::passed);
    EXPECT_EQ(check_lemma1_segments(g, cfg).status, CheckStatus::not_applicable);
}

TEST(Lemma1, EmptyAttackSetPasses) {
    // Triangle plus a disjoint edge.
    const Graph g(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    const auto cfg = make_lemma1_config(g, CycleSeq(g, {0, 1, 2}), PathSeq(g, {3, 4}), {PathSeq(g, {3}), PathSeq(g, {4})});
    EXPECT_EQ(cfg.t(), 0);
    EXPECT_EQ(check_lemma1(g, cfg).status, CheckStatus::passed);
}

TEST(Lemma1, ExtremalSixCycleSegments) {
    const Graph g = build_extremal({2, 3});
    // Hubs 0 and 1; cliques {2,3}, {4,5}, {6,7}.
    const auto cfg = make_lemma1_config(g, CycleSeq(g, {0, 2, 3, 1, 4, 5}), PathSeq(g, {6, 7}),
                                        {PathSeq(g, {6}), PathSeq(g, {7})});
    EXPECT_EQ(cfg.t(), 2);
    EXPECT_EQ(cfg.gaps, (std::vector<int>{3, 3}));
    EXPECT_EQ(check_lemma1(g, cfg).status, CheckStatus::passed);
    EXPECT_EQ(check_lemma1_segments(g, cfg).status, CheckStatus::passed);
    EXPECT_EQ(check_lemma1_identities(cfg).status, CheckStatus::passed);
}

TEST(Lemma1, RefusesShortCycleAndBadConfigs) {
    const Graph g = petersen();
    const auto cfg = make_lemma1_config(g, CycleSeq(g, {0, 1, 2, 3, 4}), PathSeq(g, {9}), {PathSeq(g, {9})});
    EXPECT_EQ(check_lemma1(g, cfg).status, CheckStatus::hypothesis_error);
    EXPECT_THROW(make_lemma1_config(g, CycleSeq(g, {0, 1, 2, 3, 4}), PathSeq(g, {4, 9}), {}), ArgumentError);
    EXPECT_THROW(make_lemma1_config(g, CycleSeq(g, {0, 1, 2, 3, 4}), PathSeq(g, {9}), {PathSeq(g, {6, 9})}),
                 ArgumentError);
}

TEST(Lemma3, ClawMinimalSpreading) {
    const Graph g = claw();
    const Host l = Host::path(g, {0, 1, 2});
    Spreading s = trivial_spreading(VertexSet{}, l);
    s.paths[1] = {1, 3};
    const CheckResult r = check_lemma3(g, VertexSet{}, l, s);
    EXPECT_EQ(r.status, CheckStatus::passed);
    EXPECT_EQ(r.name, "lemma3");
}

TEST(Lemma3, CorruptedSpreadingIsAHypothesisError) {
    const Graph g = claw();
    const Host l = Host::path(g, {0, 1, 2});
    EXPECT_EQ(check_lemma3(g, VertexSet{}, l, trivial_spreading(VertexSet{}, l)).status,
              CheckStatus::hypothesis_error);
    Spreading broken = trivial_spreading(VertexSet{}, l);
    broken.paths[0] = {0, 3};
    EXPECT_EQ(check_lemma3(g, VertexSet{}, l, broken).status, CheckStatus::hypothesis_error);
    // A path that is not longest in G - H.
    const Host shorter = Host::path(g, {0, 1});
    Spreading s = trivial_spreading(VertexSet{}, shorter);
    s.paths[1] = {1, 2};
    EXPECT_EQ(check_lemma3(g, VertexSet{}, shorter, s).status, CheckStatus::hypothesis_error);
}

TEST(Lemma2, VacuousAndRefusedCases) {
    const Graph g = complete(4);
    const Host m = Host::cycle(g, {0, 1, 2, 3});
    const Spreading s = trivial_spreading(VertexSet{}, m);
    EXPECT_EQ(check_lemma2(g, VertexSet{}, m, s).status, CheckStatus::passed);
    const Host p = Host::path(g, {0, 1, 2, 3});
    EXPECT_EQ(check_lemma2(g, VertexSet{}, p, trivial_spreading(VertexSet{}, p)).status,
              CheckStatus::hypothesis_error);
}

TEST(Lemma2, ExhaustiveSmallInstances) {
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
        const Graph g = Graph::from_edge_mask(5, mask);
        const int c = longest_cycle_length(g);
        if (c < 3) continue;
        for (const auto& seq : collect_cycles(g, g.vertices(), c)) {
            const Host m = Host::cycle(g, seq);
            for (const auto& s : find_minimal_spreadings(g, VertexSet{}, m, MinimalityOrder::u0).spreadings) {
                ASSERT_EQ(check_lemma2(g, VertexSet{}, m, s).status, CheckStatus::passed) << mask;
                ASSERT_EQ(check_double_counting(g, s).status, CheckStatus::passed) << mask;
            }
        }
    }
}

TEST(Claim2, AppliesToPathsWithTwoEdges) {
    // 4-cycle host with a vertex 4 seeing 1 and 3.
    const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 1}, {4, 3}});
    const Host m = Host::cycle(g, {0, 1, 2, 3});
    Spreading s = trivial_spreading(VertexSet{}, m);
    s.paths[1] = {1, 4};
    ASSERT_TRUE(is_u0_minimal(g, s));
    EXPECT_EQ(check_claim2(g, s).status, CheckStatus::passed);
    // A one-edge path may see a trivial root: the end 4 sees root 3.
    const auto cls = classify(g, s);
    EXPECT_TRUE(cls.at(1).phi.intersects(cls.u0));
}

TEST(Containment, ClawAndCorruption) {
    const Graph g = claw();
    Spreading s = trivial_spreading(VertexSet{}, Host::path(g, {0, 1, 2}));
    s.paths[1] = {1, 3};
    EXPECT_EQ(check_containment(g, s, "a1").status, CheckStatus::passed);
    EXPECT_EQ(check_containment(g, trivial_spreading(VertexSet{}, s.host), "a1").status,
              CheckStatus::hypothesis_error);
}

TEST(ProofClaims, BowtiePathMode) {
    const Graph g = bowtie();
    const CycleSeq c(g, {0, 1, 2});
    const Host m = Host::path(g, {3, 4});
    const Spreading s = trivial_spreading(c.vertex_set(), m);
    const auto results = check_proof_claims(g, c, m, s, ClaimMode::path);
    std::vector<std::string> names;
    for (const auto& r : results) {
        names.push_back(r.name);
        EXPECT_EQ(r.status, CheckStatus::passed) << r.name;
    }
    EXPECT_EQ(names, (std::vector<std::string>{"a1", "a2", "a3", "phi_sum", "degree_split", "double_counting"}));
}

TEST(ProofClaims, ExtremalCycleMode) {
    const Graph g = build_extremal({2, 3});
    const CycleSeq c(g, {0, 2, 3, 1, 4, 5});
    const Host m = Host::cycle(g, {6, 7});
    const Spreading s = trivial_spreading(c.vertex_set(), m);
    for (const auto& r : check_proof_claims(g, c, m, s, ClaimMode::cycle))
        EXPECT_EQ(r.status, CheckStatus::passed) << r.name;
}

TEST(ProofClaims, RefusesWrongModeAndShortHost) {
    // Triangle with a pendant path 2-3-4.
    const Graph tri(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
    const CycleSeq c(tri, {0, 1, 2});
    const Host m = Host::path(tri, {3, 4});
    Spreading s = trivial_spreading(c.vertex_set(), m);
    const auto ok = check_proof_claims(tri, c, m, s, ClaimMode::path);
    for (const auto& r : ok) EXPECT_EQ(r.status, CheckStatus::passed) << r.name;
    const auto wrong_mode = check_proof_claims(tri, c, m, s, ClaimMode::cycle);
    ASSERT_EQ(wrong_mode.size(), 1U);
    EXPECT_EQ(wrong_mode[0].status, CheckStatus::hypothesis_error);

    // The single vertex 4 is not a longest path of G - C.
    const Host shorter = Host::path(tri, {4});
    const auto refused = check_proof_claims(tri, c, shorter, trivial_spreading(c.vertex_set(), shorter),
                                            ClaimMode::path);
    ASSERT_EQ(refused.size(), 1U);
    EXPECT_EQ(refused[0].status, CheckStatus::hypothesis_error);
}

TEST(Theorems, NamedGraphs) {
    const auto k5 = analyze_bounds(complete(5));
    ASSERT_EQ(k5.entries.size(), 1U);
    EXPECT_EQ(k5.entries[0].p_bar, -1);
    EXPECT_EQ(k5.entries[0].c_bar, 0);
    EXPECT_EQ(k5.entries[0].bound1, 5);
    EXPECT_EQ(k5.entries[0].bound2, 5);
    EXPECT_TRUE(k5.entries[0].sharp1() && k5.entries[0].sharp2());

    const auto bt = analyze_bounds(bowtie());
    ASSERT_EQ(bt.entries.size(), 2U);
    for (const auto& e : bt.entries) {
        EXPECT_EQ(e.p_bar, 1);
        EXPECT_EQ(e.c_bar, 2);
        EXPECT_EQ(e.bound1, 3);
        EXPECT_EQ(e.bound2, 3);
        EXPECT_TRUE(e.sharp1() && e.sharp2());
    }

    const auto pe = analyze_bounds(petersen());
    EXPECT_EQ(pe.circumference, 9);
    EXPECT_EQ(pe.delta, 3);
    ASSERT_EQ(pe.entries.size(), 10U);
    for (const auto& e : pe.entries) {
        EXPECT_EQ(e.p_bar, 0);
        EXPECT_EQ(e.c_bar, 1);
        EXPECT_EQ(e.bound1, 6);
        EXPECT_EQ(e.bound2, 6);
        EXPECT_EQ(e.slack1, 3);
    }
}

TEST(Theorems, VerifyFunctions) {
    for (const auto& r : verify_theorem1(petersen())) EXPECT_EQ(r.status, CheckStatus::passed);
    for (const auto& r : verify_theorem2(bowtie())) {
        EXPECT_EQ(r.status, CheckStatus::passed);
        EXPECT_TRUE(r.context["sharp"].get<bool>());
    }
    EXPECT_THROW(verify_theorem1(Graph(3, {{0, 1}, {1, 2}})), DegenerateCircumferenceError);
    EXPECT_THROW(verify_theorem2(Graph(0)), UndefinedValueError);
}

TEST(Theorems, BoundFormulas) {
    EXPECT_EQ(theorem1_bound(-1, 4), 5);
    EXPECT_EQ(theorem1_bound(1, 2), 3);
    EXPECT_EQ(theorem2_bound(0, 4), 5);
    EXPECT_EQ(theorem2_bound(2, 2), 3);
}

TEST(Theorems, OracleRecheckAgrees) {
    const Graph g = petersen();
    const auto a = analyze_bounds(g);
    const auto re = recheck_with_oracle(g, a.entries[0], a.circumference);
    EXPECT_TRUE(re.available);
    EXPECT_TRUE(re.solver_agrees);
}
