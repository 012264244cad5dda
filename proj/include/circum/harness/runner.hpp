#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "circum/errors.hpp"
#include "circum/harness/corpus.hpp"
#include "circum/harness/lemma_suite.hpp"
#include "circum/harness/report.hpp"
#include "circum/io.hpp"
#include "circum/solvers.hpp"
#include "circum/verification.hpp"

namespace circum {

enum class CheckLevel { theorems, lemmas, claims, all };

inline const char* to_string(CheckLevel l) {
    switch (l) {
    case CheckLevel::theorems: return "theorems";
    case CheckLevel::lemmas: return "lemmas";
    case CheckLevel::claims: return "claims";
    case CheckLevel::all: return "all";
    }
    return "?";
}

inline CheckLevel parse_level(const std::string& s) {
    if (s == "theorems") return CheckLevel::theorems;
    if (s == "lemmas") return CheckLevel::lemmas;
    if (s == "claims") return CheckLevel::claims;
    if (s == "all") return CheckLevel::all;
    throw ArgumentError("unknown check level '" + s + "'");
}

struct RunOptions {
    SolveLimits limits;
    CheckLevel level = CheckLevel::theorems;
    LemmaOptions lemma;
    int jobs = 1;
    std::size_t max_cycle_sets = 0; ///< theorem quantification cap; 0 = every set
    std::size_t block_size = 2048;
    bool stop_on_violation = false;
};

/// Evaluates one corpus graph. Capacity errors are recorded, not thrown.
inline BoundReport evaluate_graph(const CorpusItem& item, std::size_t index, const CorpusSpec& spec,
                                  const RunOptions& opts) {
    const Graph& g = item.graph;
    BoundReport r;
    r.index = index;
    r.graph_id = serialize_graph6(g);
    r.n = g.order();
    r.edges = g.edge_count();
    r.generator = item.generator;
    if (g.order() == 0) {
        r.status = GraphStatus::empty;
        return r;
    }
    r.delta = min_degree(g);
    if (spec.connected_only && !is_connected(g)) {
        r.status = GraphStatus::filtered;
        return r;
    }
    try {
        BoundAnalysis a = analyze_bounds(g, opts.limits, opts.max_cycle_sets);
        r.circumference = a.circumference;
        r.partial = a.partial;
        r.cycle_set_total = a.cycle_set_total;
        if (a.degenerate) {
            r.status = spec.degenerate_track ? GraphStatus::degenerate : GraphStatus::filtered;
            if (spec.degenerate_track) r.entries = std::move(a.entries);
        } else {
            r.status = GraphStatus::main;
            r.entries = std::move(a.entries);
            for (const auto& e : r.entries) {
                CheckResult t1{"theorem1", e.slack1 < 0 ? CheckStatus::failed : CheckStatus::passed, nullptr, {}};
                CheckResult t2{"theorem2", e.slack2 < 0 ? CheckStatus::failed : CheckStatus::passed, nullptr, {}};
                r.checks.counts["theorem1"].add(t1.status);
                r.checks.counts["theorem2"].add(t2.status);
                if (e.slack1 >= 0 && e.slack2 >= 0) continue;
                // Confirm with the oracle before recording; a disagreement is a solver bug
                // and is recorded as such.
                OracleRecheck re = recheck_with_oracle(g, e, a.circumference, opts.limits);
                nlohmann::json v = {{"check", e.slack1 < 0 ? "theorem1" : "theorem2"},
                                    {"graph6", r.graph_id},
                                    {"entry", to_json(e)},
                                    {"circumference", a.circumference},
                                    {"delta", a.delta}};
                if (e.slack1 < 0 && e.slack2 < 0) v["check"] = "theorem1+theorem2";
                v["oracle"] = re.available ? nlohmann::json{{"circumference", re.circumference},
                                                            {"p_bar", re.p_bar},
                                                            {"c_bar", re.c_bar},
                                                            {"solver_agrees", re.solver_agrees}}
                                           : nlohmann::json("unavailable");
                r.violations.push_back(std::move(v));
            }
        }
        if (opts.level != CheckLevel::theorems && r.status != GraphStatus::filtered) {
            LemmaOptions lo = opts.lemma;
            lo.lemmas = opts.level == CheckLevel::lemmas || opts.level == CheckLevel::all;
            lo.claims = opts.level == CheckLevel::claims || opts.level == CheckLevel::all;
            CheckTally tally;
            run_lemma_suite(g, opts.limits, lo, tally);
            if (lo.capped()) r.partial = true;
            r.checks.merge(tally);
            for (const auto& p : tally.problems)
                r.violations.push_back({{"check", p.name},
                                        {"status", to_string(p.status)},
                                        {"graph6", r.graph_id},
                                        {"witness", p.witness},
                                        {"context", p.context}});
        }
    } catch (const CapacityError& e) {
        r.status = GraphStatus::capacity_error;
        r.error = e.what();
        r.entries.clear();
    }
    return r;
}

using ReportSink = std::function<void(const BoundReport&)>;

/// Evaluates every corpus graph and feeds reports to `sink` in corpus order. The
/// result does not depend on `opts.jobs`.
inline RunSummary run_verify(const Corpus& corpus, const RunOptions& opts, const ReportSink& sink = {}) {
    opts.limits.validate();
    RunSummary summary;
    summary.corpus = corpus.describe();
    summary.level = to_string(opts.level);

    const std::size_t total = corpus.size();
    const std::size_t block = std::max<std::size_t>(opts.block_size, 1);
    const int jobs = std::max(opts.jobs, 1);
    std::vector<BoundReport> results;

    for (std::size_t start = 0; start < total; start += block) {
        const std::size_t stop = std::min(total, start + block);
        results.assign(stop - start, BoundReport{});
        auto work = [&](std::size_t i) {
            results[i - start] = evaluate_graph(corpus.item(i), i, corpus.spec(), opts);
        };
        if (jobs == 1) {
            for (std::size_t i = start; i < stop; ++i) work(i);
        } else {
            std::atomic<std::size_t> next{start};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t)
                pool.emplace_back([&] {
                    for (std::size_t i; (i = next.fetch_add(1)) < stop;) {
                        try {
                            work(i);
                        } catch (...) {
                            std::lock_guard lock(failure_mutex);
                            if (!failure) failure = std::current_exception();
                        }
                    }
                });
            for (auto& th : pool) th.join();
            if (failure) std::rethrow_exception(failure);
        }
        for (const auto& r : results) {
            summary.add(r);
            if (sink) sink(r);
            if (opts.stop_on_violation && !r.violations.empty()) {
                summary.stopped_early = summary.total < total;
                return summary;
            }
        }
    }
    return summary;
}

struct HuntOutcome {
    RunSummary summary;
    int exit_status = 0;
};

/// Runs a randomized corpus and writes one JSON line per violating graph to
/// `violations_out`, including everything needed to regenerate the graph.
inline HuntOutcome hunt(const Corpus& corpus, const RunOptions& opts, std::ostream* violations_out,
                        const ReportSink& sink = {}) {
    if (!corpus.spec().randomized())
        throw ArgumentError("hunt needs a randomized corpus (gnp or regular); use verify for " +
                            std::string(to_string(corpus.spec().kind)));
    HuntOutcome out;
    out.summary = run_verify(corpus, opts, [&](const BoundReport& r) {
        if (sink) sink(r);
        if (r.violations.empty() || violations_out == nullptr) return;
        nlohmann::json rec = {{"graph6", r.graph_id},
                              {"witness", r.violations},
                              {"seed", corpus.spec().seed},
                              {"generator", r.generator}};
        *violations_out << rec.dump() << '\n';
    });
    out.exit_status = out.summary.violations == 0 ? 0 : 1;
    return out;
}

} // namespace circum
