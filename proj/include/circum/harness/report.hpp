#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "circum/harness/lemma_suite.hpp"
#include "circum/serialize.hpp"
#include "circum/verification.hpp"

namespace circum {

inline constexpr int kReportSchemaVersion = 1;

enum class GraphStatus {
    main,           ///< circumference >= 3, theorems checked
    degenerate,     ///< circumference < 3, reported on the degenerate track
    filtered,       ///< dropped by a corpus filter
    empty,          ///< no vertices
    capacity_error, ///< exceeded a solver or enumeration limit
};

inline const char* to_string(GraphStatus s) {
    switch (s) {
    case GraphStatus::main: return "main";
    case GraphStatus::degenerate: return "degenerate";
    case GraphStatus::filtered: return "filtered";
    case GraphStatus::empty: return "empty";
    case GraphStatus::capacity_error: return "capacity_error";
    }
    return "?";
}

/// Per-graph record of the bounds, lemma checks and any violations.
struct BoundReport {
    std::size_t index = 0;
    std::string graph_id; ///< graph6
    GraphStatus status = GraphStatus::main;
    std::string error;
    int n = 0;
    int edges = 0;
    int delta = 0;
    int circumference = 0;
    bool partial = false;
    int cycle_set_total = 0;
    std::vector<CycleSetBound> entries;
    CheckTally checks;
    std::vector<nlohmann::json> violations;
    nlohmann::json generator;

    bool skipped() const {
        return status == GraphStatus::degenerate || status == GraphStatus::filtered ||
               status == GraphStatus::empty;
    }
};

inline nlohmann::json to_json(const CycleSetBound& e) {
    return {{"vertex_set", to_json(e.cycle_set)}, {"p_bar", e.p_bar},     {"c_bar", e.c_bar},
            {"bound1", e.bound1},                 {"bound2", e.bound2},   {"slack1", e.slack1},
            {"slack2", e.slack2},                 {"sharp1", e.sharp1()}, {"sharp2", e.sharp2()}};
}

inline nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.entries) entries.push_back(to_json(e));
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [name, c] : r.checks.counts) checks[name] = to_json(c);
    nlohmann::json out = {
        {"index", r.index},
        {"graph_id", r.graph_id},
        {"status", to_string(r.status)},
        {"n", r.n},
        {"m", r.edges},
        {"delta", r.delta},
        {"circumference", r.circumference},
        {"degenerate", r.status == GraphStatus::degenerate},
        {"partial_quantification", r.partial},
        {"cycle_set_total", r.cycle_set_total},
        {"entries", entries},
        {"checks", checks},
        {"violations", r.violations},
        {"c_bar_empty_convention", 0},
    };
    if (!r.error.empty()) out["error"] = r.error;
    return out;
}

inline std::string csv_header() {
    return "index,graph_id,status,n,m,delta,circumference,vertex_set,p_bar,c_bar,bound1,bound2,"
           "slack1,slack2,sharp1,sharp2\n";
}

/// One row per longest-cycle vertex set; graphs without entries get a single row.
inline std::string csv_rows(const BoundReport& r) {
    std::ostringstream out;
    auto prefix = [&] {
        // graph6 may contain commas and quotes, so it is always quoted.
        std::string quoted = "\"";
        for (char ch : r.graph_id) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        quoted += '"';
        out << r.index << ',' << quoted << ',' << to_string(r.status) << ',' << r.n << ',' << r.edges
            << ',' << r.delta << ',' << r.circumference << ',';
    };
    if (r.entries.empty()) {
        prefix();
        out << ",,,,,,,,\n";
    }
    for (const auto& e : r.entries) {
        prefix();
        std::string ids;
        for (Vertex v : e.cycle_set) ids += (ids.empty() ? "" : " ") + std::to_string(v);
        out << ids << ',' << e.p_bar << ',' << e.c_bar << ',' << e.bound1 << ',' << e.bound2 << ','
            << e.slack1 << ',' << e.slack2 << ',' << (e.sharp1() ? 1 : 0) << ',' << (e.sharp2() ? 1 : 0)
            << '\n';
    }
    return out.str();
}

/// Aggregate over a run; folded in corpus order so it is independent of scheduling.
struct RunSummary {
    nlohmann::json corpus;
    std::string level;
    std::size_t total = 0;
    std::size_t processed = 0;
    std::size_t skipped_degenerate = 0;
    std::size_t skipped_filtered = 0;
    std::size_t skipped_empty = 0;
    std::size_t errored = 0;
    std::size_t cycle_sets = 0;
    std::size_t sharp1 = 0;
    std::size_t sharp2 = 0;
    int max_slack1 = INT_MIN;
    int max_slack2 = INT_MIN;
    std::size_t degenerate_track_failures = 0;
    std::size_t partial_graphs = 0;
    std::size_t violation_graphs = 0;
    std::size_t violations = 0;
    std::map<std::string, CheckCounts> checks;
    bool stopped_early = false;

    std::size_t skipped() const { return skipped_degenerate + skipped_filtered + skipped_empty; }

    void add(const BoundReport& r) {
        ++total;
        switch (r.status) {
        case GraphStatus::main: ++processed; break;
        case GraphStatus::degenerate: ++skipped_degenerate; break;
        case GraphStatus::filtered: ++skipped_filtered; break;
        case GraphStatus::empty: ++skipped_empty; break;
        case GraphStatus::capacity_error: ++errored; break;
        }
        if (r.partial) ++partial_graphs;
        for (const auto& e : r.entries) {
            if (r.status == GraphStatus::degenerate) {
                if (e.slack1 < 0 || e.slack2 < 0) ++degenerate_track_failures;
                continue;
            }
            ++cycle_sets;
            sharp1 += e.sharp1() ? 1 : 0;
            sharp2 += e.sharp2() ? 1 : 0;
            max_slack1 = std::max(max_slack1, e.slack1);
            max_slack2 = std::max(max_slack2, e.slack2);
        }
        for (const auto& [name, c] : r.checks.counts) checks[name] += c;
        if (!r.violations.empty()) ++violation_graphs;
        violations += r.violations.size();
    }

    nlohmann::json to_json() const {
        nlohmann::json c = nlohmann::json::object();
        for (const auto& [name, counts] : checks) c[name] = circum::to_json(counts);
        nlohmann::json out = {
            {"schema_version", kReportSchemaVersion},
            {"corpus", corpus},
            {"level", level},
            {"total", total},
            {"processed", processed},
            {"skipped", {{"degenerate", skipped_degenerate}, {"filtered", skipped_filtered},
                         {"empty", skipped_empty}, {"total", skipped()}}},
            {"errored", errored},
            {"cycle_sets", cycle_sets},
            {"sharp1", sharp1},
            {"sharp2", sharp2},
            {"degenerate_track_failures", degenerate_track_failures},
            {"partial_quantification_graphs", partial_graphs},
            {"violation_graphs", violation_graphs},
            {"violations", violations},
            {"checks", c},
            {"stopped_early", stopped_early},
            {"c_bar_empty_convention", 0},
        };
        out["max_slack1"] = cycle_sets ? nlohmann::json(max_slack1) : nlohmann::json(nullptr);
        out["max_slack2"] = cycle_sets ? nlohmann::json(max_slack2) : nlohmann::json(nullptr);
        return out;
    }
};

} // namespace circum
