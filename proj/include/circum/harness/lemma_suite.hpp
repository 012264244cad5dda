#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "circum/graph.hpp"
#include "circum/solvers.hpp"
#include "circum/spreading.hpp"
#include "circum/verification.hpp"
#include "circum/walks.hpp"

// Generates certified lemma and claim instances from one graph and runs every check
// on them: longest cycles C, longest paths and cycles M of G - C (and of G itself
// with H empty), their minimal spreadings and saturations, and Lemma 1
// configurations built from spreadings of paths in G - C.

namespace circum {

struct CheckCounts {
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t not_applicable = 0;
    std::uint64_t hypothesis_error = 0;

    void add(CheckStatus s) {
        switch (s) {
        case CheckStatus::passed: ++passed; break;
        case CheckStatus::failed: ++failed; break;
        case CheckStatus::not_applicable: ++not_applicable; break;
        case CheckStatus::hypothesis_error: ++hypothesis_error; break;
        }
    }
    CheckCounts& operator+=(const CheckCounts& o) {
        passed += o.passed;
        failed += o.failed;
        not_applicable += o.not_applicable;
        hypothesis_error += o.hypothesis_error;
        return *this;
    }
    std::uint64_t total() const { return passed + failed + not_applicable + hypothesis_error; }
};

inline nlohmann::json to_json(const CheckCounts& c) {
    return {{"passed", c.passed}, {"failed", c.failed}, {"not_applicable", c.not_applicable},
            {"hypothesis_error", c.hypothesis_error}};
}

/// Tally of check outcomes keyed by check name, keeping the failing results.
struct CheckTally {
    std::map<std::string, CheckCounts> counts;
    std::vector<CheckResult> problems; ///< failures and hypothesis errors, capped
    std::size_t max_problems = 16;

    void record(const CheckResult& r) {
        counts[r.name].add(r.status);
        if ((r.status == CheckStatus::failed || r.status == CheckStatus::hypothesis_error) &&
            problems.size() < max_problems)
            problems.push_back(r);
    }
    void merge(const CheckTally& o) {
        for (const auto& [name, c] : o.counts) counts[name] += c;
        for (const auto& p : o.problems)
            if (problems.size() < max_problems) problems.push_back(p);
    }
    std::uint64_t failures() const {
        std::uint64_t k = 0;
        for (const auto& [name, c] : counts) k += c.failed;
        return k;
    }
    std::uint64_t hypothesis_errors() const {
        std::uint64_t k = 0;
        for (const auto& [name, c] : counts) k += c.hypothesis_error;
        return k;
    }
};

struct LemmaOptions {
    bool lemmas = true;                 ///< Lemmas 1-3, Claim 2, containment, double counting
    bool claims = true;                 ///< the theorem-proof claims
    bool include_empty_h = true;        ///< also use H = empty with M longest in G
    bool lemma1_all_paths = true;       ///< every path of G - C as M, else longest paths only
    bool lemma1_all_spreadings = true;  ///< every spreading as the L_i, else minimal ones
    std::size_t max_cycle_sets = 0;     ///< 0 = every longest-cycle vertex set
    std::size_t max_cycles_per_set = 0; ///< cycle orders per vertex set; 0 = all
    std::size_t max_hosts = 0;          ///< hosts M per (H, kind); 0 = all
    std::size_t max_root_subsets = 64;  ///< Lemma 1 root subsets per spreading
    std::uint64_t spread_budget = kDefaultSpreadingBudget;

    /// True when some cap may have cut the instance space.
    bool capped() const { return max_cycle_sets || max_cycles_per_set || max_hosts; }

    /// Caps for randomized corpora of larger graphs.
    static LemmaOptions sampled() {
        LemmaOptions o;
        o.lemma1_all_paths = false;
        o.lemma1_all_spreadings = false;
        o.max_cycle_sets = 2;
        o.max_cycles_per_set = 2;
        o.max_hosts = 2;
        o.max_root_subsets = 8;
        o.spread_budget = 200'000;
        return o;
    }
};

namespace detail {

inline std::size_t cap_or_all(std::size_t cap) { return cap == 0 ? SIZE_MAX : cap; }

class LemmaSuiteRun {
public:
    LemmaSuiteRun(const Graph& g, const SolveLimits& limits, const LemmaOptions& opts, CheckTally& tally)
        : g_(g), limits_(limits), opts_(opts), tally_(tally) {}

    void run() {
        if (g_.order() == 0) return;
        const LongestCycles lc = longest_cycles(g_, limits_);
        circumference_ = lc.circumference;
        if (lc.circumference >= 3) {
            std::size_t k = std::min(lc.vertex_sets.size(), cap_or_all(opts_.max_cycle_sets));
            for (std::size_t i = 0; i < k; ++i) run_cycle_set(lc.vertex_sets[i]);
        }
        if (opts_.include_empty_h && opts_.lemmas) run_empty_h();
    }

private:
    void run_cycle_set(VertexSet on_cycle) {
        const auto cycles =
            collect_cycles(g_, on_cycle, on_cycle.size(), cap_or_all(opts_.max_cycles_per_set));
        const VertexSet rest = g_.vertices() - on_cycle;
        if (rest.empty() || cycles.empty()) return;
        const CycleSeq first_cycle(g_, cycles.front());
        const Graph rest_graph = remove_vertices(g_, on_cycle).graph;

        const int p_bar = longest_path_length(rest_graph, limits_);
        for (const auto& seq : collect_paths(g_, rest, p_bar, cap_or_all(opts_.max_hosts)))
            run_host(on_cycle, Host::path(g_, seq), p_bar, &first_cycle);

        const int c_bar = longest_cycle_length(rest_graph, limits_);
        for (const auto& seq : collect_cycles(g_, rest, c_bar, cap_or_all(opts_.max_hosts)))
            run_host(on_cycle, Host::cycle(g_, seq), c_bar, &first_cycle);

        if (opts_.lemmas)
            for (const auto& seq : cycles) run_lemma1(CycleSeq(g_, seq), rest, p_bar);
    }

    void run_empty_h() {
        const int p = longest_path_length(g_, limits_);
        for (const auto& seq : collect_paths(g_, g_.vertices(), p, cap_or_all(opts_.max_hosts)))
            run_host(VertexSet{}, Host::path(g_, seq), p, nullptr);
        for (const auto& seq : collect_cycles(g_, g_.vertices(), circumference_, cap_or_all(opts_.max_hosts)))
            run_host(VertexSet{}, Host::cycle(g_, seq), circumference_, nullptr);
    }

    // `cycle` is set when H = V(C) for a longest cycle C, enabling the proof claims.
    void run_host(VertexSet h, const Host& m, int optimum, const CycleSeq* cycle) {
        const bool path = m.kind() == HostKind::path;
        const int matching_min = min_u0_via_matching(g_, h, m);
        MinimalSpreadings minimal =
            find_minimal_spreadings(g_, h, m, MinimalityOrder::u0, opts_.spread_budget);

        CheckResult cross{"min_u0_matching", CheckStatus::passed, nullptr, {}};
        if (minimal.min_u0 != matching_min) {
            cross.status = CheckStatus::failed;
            cross.witness = {{"enumerated", minimal.min_u0}, {"matching", matching_min},
                             {"host", m.vertices()}, {"removed", to_json(h)}};
        }
        tally_.record(cross);

        Certified cert{circumference_, optimum, matching_min};
        if (opts_.lemmas) {
            for (const auto& s : minimal.spreadings) {
                tally_.record(path ? check_lemma3(g_, h, m, s, cert, limits_)
                                   : check_lemma2(g_, h, m, s, cert, limits_));
                tally_.record(check_claim2(g_, s, cert, limits_));
                tally_.record(check_containment(g_, s, path ? "a1" : "b1", cert, limits_));
                tally_.record(check_double_counting(g_, s));
            }
        }
        if (!opts_.claims || cycle == nullptr) return;

        // Path mode uses all (U0)-minimal spreadings; cycle mode those that are also
        // minimal in |U*|. Either way the saturations are what the claims see.
        std::vector<const Spreading*> bases;
        if (path) {
            for (const auto& s : minimal.spreadings) bases.push_back(&s);
        } else {
            std::vector<int> ustar;
            int best = INT32_MAX;
            for (const auto& s : minimal.spreadings) {
                ustar.push_back(classify(g_, s).u_star.size());
                best = std::min(best, ustar.back());
            }
            for (std::size_t i = 0; i < minimal.spreadings.size(); ++i)
                if (ustar[i] == best) bases.push_back(&minimal.spreadings[i]);
        }
        std::set<std::vector<std::vector<Vertex>>> seen;
        for (const Spreading* base : bases) {
            Spreading sat = saturate(g_, *base);
            CheckResult keep{"saturation_keeps_u0", CheckStatus::passed, nullptr, {}};
            if (sat.trivial_count() != base->trivial_count()) {
                keep.status = CheckStatus::failed;
                keep.witness = {{"before", to_json(*base)}, {"after", to_json(sat)}};
            }
            tally_.record(keep);
            if (!seen.insert(sat.paths).second) continue;
            for (auto& r : check_proof_claims(g_, *cycle, m, sat, path ? ClaimMode::path : ClaimMode::cycle,
                                              cert, limits_))
                tally_.record(r);
        }
    }

    void run_lemma1(const CycleSeq& cycle, VertexSet rest, int p_bar) {
        Certified cert{circumference_, std::nullopt, std::nullopt};
        auto run_path = [&](const std::vector<Vertex>& seq) {
            const PathSeq m(g_, seq);
            const Host host(m);
            auto on_spreading = [&](const Spreading& s) {
                const int roots = m.size();
                const std::uint64_t all = (roots >= 63) ? ~0ULL : (1ULL << roots) - 1;
                // Full root set first, then the proper subsets in increasing order.
                std::vector<std::uint64_t> masks{all};
                for (std::uint64_t mask = 1; mask < all && masks.size() < opts_.max_root_subsets; ++mask)
                    masks.push_back(mask);
                for (std::uint64_t mask : masks) {
                    std::vector<PathSeq> rooted;
                    for (int i = 0; i < roots; ++i)
                        if ((mask >> i) & 1U) rooted.emplace_back(g_, s.paths[i]);
                    Lemma1Config cfg = make_lemma1_config(g_, cycle, m, std::move(rooted));
                    tally_.record(check_lemma1(g_, cfg, cert, limits_));
                    tally_.record(check_lemma1_segments(g_, cfg, cert, limits_));
                    tally_.record(check_lemma1_identities(cfg));
                }
            };
            if (opts_.lemma1_all_spreadings) {
                for_each_spreading(g_, cycle.vertex_set(), host, on_spreading, opts_.spread_budget);
            } else {
                auto minimal = find_minimal_spreadings(g_, cycle.vertex_set(), host, MinimalityOrder::u0,
                                                       opts_.spread_budget);
                for (const auto& s : minimal.spreadings) on_spreading(saturate(g_, s));
            }
            return true;
        };
        if (opts_.lemma1_all_paths) {
            for_each_simple_path(g_, rest, run_path);
        } else {
            for (const auto& seq : collect_paths(g_, rest, p_bar, cap_or_all(opts_.max_hosts))) run_path(seq);
        }
    }

    const Graph& g_;
    const SolveLimits& limits_;
    const LemmaOptions& opts_;
    CheckTally& tally_;
    int circumference_ = 0;
};

} // namespace detail

/// Runs every lemma and claim check generated from `g` into `tally`.
inline void run_lemma_suite(const Graph& g, const SolveLimits& limits, const LemmaOptions& opts,
                            CheckTally& tally) {
    detail::LemmaSuiteRun(g, limits, opts, tally).run();
}

} // namespace circum
