#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "circum/graph.hpp"

// Enumeration of concrete paths and cycles as vertex sequences, restricted to a
// vertex subset. Used to build lemma instances; the solvers only produce lengths and
// vertex sets.

namespace circum {

/// Sequence visitor; return false to stop the enumeration.
using SequenceVisitor = std::function<bool(const std::vector<Vertex>&)>;

namespace detail {

struct SequenceDfs {
    const Graph& g;
    VertexSet within;
    int target_size;
    const SequenceVisitor& visit;
    std::vector<Vertex> seq;
    VertexSet used;
    bool cycles = false;
    bool stopped = false;

    void grow() {
        if (stopped) return;
        const Vertex end = seq.back();
        if (static_cast<int>(seq.size()) == target_size) {
            if (cycles) {
                // Anchored at its least vertex; second < last removes the mirror image.
                if (!g.adjacent(end, seq.front()) || seq[1] > end) return;
            } else if (seq.front() > end) {
                return;
            }
            if (!visit(seq)) stopped = true;
            return;
        }
        VertexSet next = g.neighbors(end) & within;
        next -= used;
        for (Vertex w : next) {
            if (cycles && w < seq.front()) continue;
            seq.push_back(w);
            used.insert(w);
            grow();
            used.erase(w);
            seq.pop_back();
            if (stopped) return;
        }
    }
};

} // namespace detail

/// Every path of G[within] with `length` edges, once per unordered path (first id
/// below last id). Length 0 gives the single vertices.
inline void for_each_path(const Graph& g, VertexSet within, int length, const SequenceVisitor& visit) {
    if (length < 0) return;
    for (Vertex s : within) {
        detail::SequenceDfs dfs{g, within, length + 1, visit};
        dfs.seq = {s};
        dfs.used = VertexSet::single(s);
        if (length == 0) {
            if (!visit(dfs.seq)) return;
            continue;
        }
        dfs.grow();
        if (dfs.stopped) return;
    }
}

/// Every cycle of G[within] of the given length, once up to rotation and reflection,
/// starting from its least vertex. Lengths 1 and 2 give vertices and edges.
inline void for_each_cycle(const Graph& g, VertexSet within, int length, const SequenceVisitor& visit) {
    if (length <= 0) return;
    if (length <= 2) {
        for (Vertex u : within) {
            if (length == 1) {
                if (!visit({u})) return;
                continue;
            }
            for (Vertex v : g.neighbors(u) & within)
                if (u < v && !visit({u, v})) return;
        }
        return;
    }
    for (Vertex s : within) {
        detail::SequenceDfs dfs{g, within, length, visit};
        dfs.cycles = true;
        dfs.seq = {s};
        dfs.used = VertexSet::single(s);
        dfs.grow();
        if (dfs.stopped) return;
    }
}

/// Up to `limit` paths / cycles collected into a vector.
inline std::vector<std::vector<Vertex>> collect_paths(const Graph& g, VertexSet within, int length,
                                                      std::size_t limit = SIZE_MAX) {
    std::vector<std::vector<Vertex>> out;
    if (limit == 0) return out;
    for_each_path(g, within, length, [&](const std::vector<Vertex>& p) {
        out.push_back(p);
        return out.size() < limit;
    });
    return out;
}

inline std::vector<std::vector<Vertex>> collect_cycles(const Graph& g, VertexSet within, int length,
                                                       std::size_t limit = SIZE_MAX) {
    std::vector<std::vector<Vertex>> out;
    if (limit == 0) return out;
    for_each_cycle(g, within, length, [&](const std::vector<Vertex>& c) {
        out.push_back(c);
        return out.size() < limit;
    });
    return out;
}

/// Every simple path of G[within], of any length, once per unordered path.
inline void for_each_simple_path(const Graph& g, VertexSet within, const SequenceVisitor& visit) {
    for (int len = 0; len < within.size(); ++len) {
        bool go = true;
        for_each_path(g, within, len, [&](const std::vector<Vertex>& p) { return go = visit(p); });
        if (!go) return;
    }
}

} // namespace circum
