#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "circum/errors.hpp"
#include "circum/graph.hpp"
#include "circum/solvers.hpp"

// Brute-force reference values by depth-first search over simple paths. Shares no
// code with the subset DP in solvers.hpp; used to cross-check it.

namespace circum::oracle {

namespace detail {

inline void check_oracle_capacity(const Graph& g, const SolveLimits& limits) {
    if (g.order() > limits.max_oracle_n)
        throw CapacityError("graph of order " + std::to_string(g.order()) +
                            " exceeds max_oracle_n = " + std::to_string(limits.max_oracle_n));
}

struct PathSearch {
    const Graph& g;
    std::vector<bool> on_path;
    int best = -1;

    // Returns true once a Hamilton path is seen; nothing can beat it.
    bool extend(Vertex end, int length) {
        best = std::max(best, length);
        if (best == g.order() - 1) return true;
        for (Vertex w = 0; w < g.order(); ++w) {
            if (on_path[w] || !g.adjacent(end, w)) continue;
            on_path[w] = true;
            bool done = extend(w, length + 1);
            on_path[w] = false;
            if (done) return true;
        }
        return false;
    }
};

struct CycleSearch {
    const Graph& g;
    Vertex start = 0;
    std::vector<bool> on_path;
    std::vector<Vertex> path;
    int best = 0;
    bool collect = false;
    std::set<std::vector<Vertex>> sets;

    void record() {
        const int len = static_cast<int>(path.size());
        if (len > best) {
            best = len;
            sets.clear();
        }
        if (collect && len == best) {
            std::vector<Vertex> key = path;
            std::sort(key.begin(), key.end());
            sets.insert(key);
        }
    }

    // Paths start at `start` and only visit larger ids.
    bool extend(Vertex end) {
        if (path.size() >= 3 && g.adjacent(end, start)) {
            record();
            if (!collect && best == g.order()) return true;
        }
        for (Vertex w = start + 1; w < g.order(); ++w) {
            if (on_path[w] || !g.adjacent(end, w)) continue;
            on_path[w] = true;
            path.push_back(w);
            bool done = extend(w);
            path.pop_back();
            on_path[w] = false;
            if (done) return true;
        }
        return false;
    }
};

inline CycleSearch run_cycle_search(const Graph& g, bool collect) {
    CycleSearch search{g};
    search.collect = collect;
    search.on_path.assign(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        search.start = s;
        search.on_path[s] = true;
        search.path = {s};
        bool done = search.extend(s);
        search.on_path[s] = false;
        if (done) break;
    }
    return search;
}

} // namespace detail

inline int longest_path_length(const Graph& g, const SolveLimits& limits = {}) {
    detail::check_oracle_capacity(g, limits);
    detail::PathSearch search{g};
    search.on_path.assign(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        search.on_path[s] = true;
        bool done = search.extend(s, 0);
        search.on_path[s] = false;
        if (done) break;
    }
    return search.best;
}

inline int longest_cycle_length(const Graph& g, const SolveLimits& limits = {}) {
    detail::check_oracle_capacity(g, limits);
    int best = detail::run_cycle_search(g, false).best;
    if (best >= 3) return best;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) return 2;
    return g.order() > 0 ? 1 : 0;
}

/// Vertex sets of longest cycles of length >= 3, each as a sorted id list.
inline std::vector<std::vector<Vertex>> longest_cycle_vertex_sets(const Graph& g,
                                                                  const SolveLimits& limits = {}) {
    detail::check_oracle_capacity(g, limits);
    auto search = detail::run_cycle_search(g, true);
    return {search.sets.begin(), search.sets.end()};
}

} // namespace circum::oracle
