#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "circum/errors.hpp"
#include "circum/graph.hpp"

namespace circum {

/// Size limits for the exact solvers.
struct SolveLimits {
    int max_dp_n = 22;     ///< largest component handed to the subset DP
    int max_oracle_n = 10; ///< largest graph handed to the brute-force oracle

    void validate() const {
        if (max_oracle_n > max_dp_n)
            throw ArgumentError("max_oracle_n must not exceed max_dp_n");
        if (max_dp_n < 1 || max_dp_n > 30) throw ArgumentError("max_dp_n must lie in [1, 30]");
        if (max_oracle_n < 0) throw ArgumentError("max_oracle_n must be non-negative");
    }

    /// Defaults, overridden by CIRCUM_MAX_DP_N / CIRCUM_MAX_ORACLE_N when set.
    static SolveLimits from_env() {
        SolveLimits limits;
        if (const char* s = std::getenv("CIRCUM_MAX_DP_N")) limits.max_dp_n = std::atoi(s);
        if (const char* s = std::getenv("CIRCUM_MAX_ORACLE_N")) limits.max_oracle_n = std::atoi(s);
        limits.validate();
        return limits;
    }
};

/// Circumference together with every vertex set carrying a longest cycle.
/// For circumference 2 the sets are the edges, for 1 the single vertices.
struct LongestCycles {
    int circumference = 0;
    std::vector<VertexSet> vertex_sets;
};

namespace detail {

// One connected component relabelled to ids 0..k-1 with 32-bit adjacency masks.
struct LocalComponent {
    int k = 0;
    std::vector<std::uint32_t> adj;
    std::vector<Vertex> to_parent;
};

inline LocalComponent localize(const Graph& g, VertexSet comp) {
    LocalComponent c;
    c.k = comp.size();
    std::array<int, kMaxVertices> local{};
    for (Vertex v : comp) {
        local[v] = static_cast<int>(c.to_parent.size());
        c.to_parent.push_back(v);
    }
    c.adj.assign(c.k, 0);
    for (int i = 0; i < c.k; ++i)
        for (Vertex w : g.neighbors(c.to_parent[i]) & comp) c.adj[i] |= std::uint32_t{1} << local[w];
    return c;
}

inline void check_capacity(int k, const SolveLimits& limits) {
    if (k > limits.max_dp_n)
        throw CapacityError("component of order " + std::to_string(k) + " exceeds max_dp_n = " +
                            std::to_string(limits.max_dp_n));
}

inline std::vector<std::uint32_t>& dp_scratch(std::size_t size) {
    thread_local std::vector<std::uint32_t> table;
    table.assign(size, 0);
    return table;
}

// reach[S] holds the possible last vertices of a path whose vertex set is exactly S.
inline int longest_path_in_component(const LocalComponent& c) {
    if (c.k == 1) return 0;
    const std::uint32_t full = (std::uint32_t{1} << c.k) - 1;
    auto& reach = dp_scratch(std::size_t{1} << c.k);
    for (int v = 0; v < c.k; ++v) reach[std::uint32_t{1} << v] = std::uint32_t{1} << v;
    int best = 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint32_t ends = reach[s];
        if (!ends) continue;
        best = std::max(best, std::popcount(s));
        while (ends) {
            const int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t ext = c.adj[v] & ~s;
            while (ext) {
                const int w = std::countr_zero(ext);
                ext &= ext - 1;
                reach[s | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
        if (best == c.k) break;
    }
    return best - 1;
}

// Paths are anchored at min(S) and may only grow through larger ids, so each cycle
// is discovered from its least vertex. Collects the sets of maximum size >= 3.
inline void longest_cycles_in_component(const LocalComponent& c, int& best,
                                        std::vector<std::uint32_t>& best_sets) {
    if (c.k < 3) return;
    const std::uint32_t full = (std::uint32_t{1} << c.k) - 1;
    auto& reach = dp_scratch(std::size_t{1} << c.k);
    for (int v = 0; v < c.k; ++v) reach[std::uint32_t{1} << v] = std::uint32_t{1} << v;
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint32_t ends = reach[s];
        if (!ends) continue;
        const int anchor = std::countr_zero(s);
        const int size = std::popcount(s);
        if (size >= 3 && size >= best && (ends & c.adj[anchor])) {
            if (size > best) {
                best = size;
                best_sets.clear();
            }
            best_sets.push_back(s);
        }
        const std::uint32_t above = ~((std::uint32_t{2} << anchor) - 1);
        while (ends) {
            const int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t ext = c.adj[v] & ~s & above;
            while (ext) {
                const int w = std::countr_zero(ext);
                ext &= ext - 1;
                reach[s | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
    }
}

} // namespace detail

/// Length of a longest path: -1 for the empty graph, 0 when there are no edges.
inline int longest_path_length(const Graph& g, const SolveLimits& limits = {}) {
    int best = -1;
    for (VertexSet comp : components(g)) {
        detail::check_capacity(comp.size(), limits);
        best = std::max(best, detail::longest_path_in_component(detail::localize(g, comp)));
        if (best == g.order() - 1) break;
    }
    return best;
}

/// Circumference and all longest-cycle vertex sets (sorted), with the conventions
/// that an edge is a cycle of length 2 and a vertex one of length 1.
inline LongestCycles longest_cycles(const Graph& g, const SolveLimits& limits = {}) {
    LongestCycles out;
    int best = 0;
    std::vector<VertexSet> sets;
    for (VertexSet comp : components(g)) {
        detail::check_capacity(comp.size(), limits);
        if (comp.size() < best) continue;
        auto local = detail::localize(g, comp);
        int comp_best = 0;
        std::vector<std::uint32_t> local_sets;
        detail::longest_cycles_in_component(local, comp_best, local_sets);
        if (comp_best == 0) continue;
        if (comp_best > best) {
            best = comp_best;
            sets.clear();
        }
        for (std::uint32_t s : local_sets) {
            VertexSet lifted;
            for (std::uint32_t rest = s; rest; rest &= rest - 1)
                lifted.insert(local.to_parent[std::countr_zero(rest)]);
            sets.push_back(lifted);
        }
    }
    if (best >= 3) {
        out.circumference = best;
        out.vertex_sets = std::move(sets);
    } else if (g.edge_count() > 0) {
        out.circumference = 2;
        for (auto [u, v] : g.edges()) out.vertex_sets.push_back(VertexSet{u, v});
    } else if (g.order() > 0) {
        out.circumference = 1;
        for (Vertex v : g.vertices()) out.vertex_sets.push_back(VertexSet::single(v));
    }
    std::sort(out.vertex_sets.begin(), out.vertex_sets.end());
    return out;
}

/// Circumference: 0 for the empty graph, 1 without edges, 2 for a forest with an edge.
inline int longest_cycle_length(const Graph& g, const SolveLimits& limits = {}) {
    return longest_cycles(g, limits).circumference;
}

/// Distinct vertex sets of longest cycles. Requires circumference >= 3.
inline std::vector<VertexSet> all_longest_cycle_vertex_sets(const Graph& g,
                                                            const SolveLimits& limits = {}) {
    LongestCycles lc = longest_cycles(g, limits);
    if (lc.circumference < 3)
        throw DegenerateCircumferenceError("circumference " + std::to_string(lc.circumference) +
                                           " < 3 has no proper longest cycle");
    return std::move(lc.vertex_sets);
}

} // namespace circum
