#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "circum/errors.hpp"
#include "circum/vertex_set.hpp"

namespace circum {

/// Undirected simple graph on vertices 0..n-1 with one adjacency bitmask per vertex.
/// Immutable once constructed.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw CapacityError("graph order " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxVertices) + "]");
    }

    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
        for (auto [u, v] : edges) {
            check_vertex(u);
            check_vertex(v);
            if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
            adj_[u].insert(v);
            adj_[v].insert(u);
        }
    }

    /// Build from rows of an adjacency relation. Rejects loops and asymmetric input.
    static Graph from_adjacency(int n, const std::vector<VertexSet>& rows) {
        Graph g(n);
        if (static_cast<int>(rows.size()) != n)
            throw ArgumentError("adjacency has " + std::to_string(rows.size()) + " rows, expected " +
                                std::to_string(n));
        for (int v = 0; v < n; ++v) {
            if (!rows[v].subset_of(VertexSet::range(n)))
                throw ArgumentError("adjacency row " + std::to_string(v) + " out of range");
            if (rows[v].contains(v)) throw ArgumentError("self-loop at vertex " + std::to_string(v));
            g.adj_[v] = rows[v];
        }
        for (int u = 0; u < n; ++u)
            for (Vertex v : rows[u])
                if (!rows[v].contains(u))
                    throw ArgumentError("adjacency not symmetric at " + std::to_string(u) + "," +
                                        std::to_string(v));
        return g;
    }

    /// Graph whose edges are the set bits of `mask` over the pairs (i,j), i<j, in
    /// column order (0,1),(0,2),(1,2),(0,3),... (the graph6 bit order).
    static Graph from_edge_mask(int n, std::uint64_t mask) {
        Graph g(n);
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((mask >> bit) & 1U) {
                    g.adj_[i].insert(j);
                    g.adj_[j].insert(i);
                }
        return g;
    }

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    int degree(Vertex v) const { return adj_[v].size(); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += adj_[v].size();
        return twice / 2;
    }

    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (int u = 0; u < n_; ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw ArgumentError("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
    }

    void check_subset(VertexSet s) const {
        if (!s.subset_of(vertices()))
            throw ArgumentError("vertex set " + s.to_string() + " not contained in graph of order " +
                                std::to_string(n_));
    }

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[v] != o.adj_[v]) return false;
        return true;
    }

private:
    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

/// Induced subgraph together with the map from its ids back to the parent's ids.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;

    VertexSet lift(VertexSet s) const {
        VertexSet out;
        for (Vertex v : s) out.insert(to_parent[v]);
        return out;
    }
};

/// Subgraph induced by `keep`, relabelled densely in increasing id order.
inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
    g.check_subset(keep);
    std::array<int, kMaxVertices> local{};
    InducedSubgraph out{Graph(keep.size()), {}};
    out.to_parent.reserve(keep.size());
    for (Vertex v : keep) {
        local[v] = static_cast<int>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    std::vector<VertexSet> rows(keep.size());
    for (Vertex v : keep)
        for (Vertex w : g.neighbors(v) & keep) rows[local[v]].insert(local[w]);
    out.graph = Graph::from_adjacency(keep.size(), rows);
    return out;
}

/// G - S: the maximal subgraph on V(G) - S.
inline InducedSubgraph remove_vertices(const Graph& g, VertexSet s) {
    g.check_subset(s);
    return induced_subgraph(g, g.vertices() - s);
}

/// Minimum degree. Undefined for the empty graph.
inline int min_degree(const Graph& g) {
    if (g.order() == 0) throw UndefinedValueError("minimum degree of the empty graph");
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

/// Vertex sets of the connected components inside `within`, ordered by least vertex.
inline std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet comp = VertexSet::single(left.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            next = (next & within) - comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// A path as an oriented sequence of distinct, consecutively adjacent vertices.
/// The empty path has length -1.
class PathSeq {
public:
    PathSeq() = default;
    PathSeq(const Graph& g, std::vector<Vertex> vs) : vs_(std::move(vs)) {
        VertexSet seen;
        for (std::size_t i = 0; i < vs_.size(); ++i) {
            g.check_vertex(vs_[i]);
            if (seen.contains(vs_[i]))
                throw ArgumentError("path repeats vertex " + std::to_string(vs_[i]));
            seen.insert(vs_[i]);
            if (i > 0 && !g.adjacent(vs_[i - 1], vs_[i]))
                throw ArgumentError("path step " + std::to_string(vs_[i - 1]) + "-" +
                                    std::to_string(vs_[i]) + " is not an edge");
        }
        set_ = seen;
    }

    const std::vector<Vertex>& vertices() const { return vs_; }
    VertexSet vertex_set() const { return set_; }
    int size() const { return static_cast<int>(vs_.size()); }
    int length() const { return size() - 1; }
    bool empty() const { return vs_.empty(); }
    Vertex front() const { return vs_.front(); }
    Vertex back() const { return vs_.back(); }

    int position(Vertex v) const {
        auto it = std::find(vs_.begin(), vs_.end(), v);
        if (it == vs_.end()) throw ArgumentError("vertex " + std::to_string(v) + " not on path");
        return static_cast<int>(it - vs_.begin());
    }
    /// u^+ along the orientation; u must not be the last vertex.
    Vertex successor(Vertex u) const {
        int i = position(u);
        if (i + 1 >= size()) throw ArgumentError("last vertex of a path has no successor");
        return vs_[i + 1];
    }
    Vertex predecessor(Vertex u) const {
        int i = position(u);
        if (i == 0) throw ArgumentError("first vertex of a path has no predecessor");
        return vs_[i - 1];
    }
    /// Vertices of u->L->v, u before v.
    std::vector<Vertex> segment(Vertex u, Vertex v) const {
        int i = position(u), j = position(v);
        if (i > j) throw ArgumentError("segment endpoints out of order");
        return {vs_.begin() + i, vs_.begin() + j + 1};
    }

    bool operator==(const PathSeq& o) const { return vs_ == o.vs_; }

private:
    std::vector<Vertex> vs_;
    VertexSet set_;
};

/// A cycle as a cyclically ordered vertex sequence. A single vertex is a cycle of
/// length 1 and an edge one of length 2; otherwise the length is the vertex count.
class CycleSeq {
public:
    CycleSeq() = default;
    CycleSeq(const Graph& g, std::vector<Vertex> vs) : vs_(std::move(vs)) {
        if (vs_.empty()) throw ArgumentError("cycle needs at least one vertex");
        VertexSet seen;
        const std::size_t k = vs_.size();
        for (std::size_t i = 0; i < k; ++i) {
            g.check_vertex(vs_[i]);
            if (seen.contains(vs_[i]))
                throw ArgumentError("cycle repeats vertex " + std::to_string(vs_[i]));
            seen.insert(vs_[i]);
        }
        // Size 2 needs the single edge; size 1 needs nothing.
        const std::size_t steps = k >= 3 ? k : k - 1;
        for (std::size_t i = 0; i < steps; ++i) {
            Vertex a = vs_[i], b = vs_[(i + 1) % k];
            if (!g.adjacent(a, b))
                throw ArgumentError("cycle step " + std::to_string(a) + "-" + std::to_string(b) +
                                    " is not an edge");
        }
        set_ = seen;
    }

    const std::vector<Vertex>& vertices() const { return vs_; }
    VertexSet vertex_set() const { return set_; }
    int size() const { return static_cast<int>(vs_.size()); }
    int length() const { return size(); }

    int position(Vertex v) const {
        auto it = std::find(vs_.begin(), vs_.end(), v);
        if (it == vs_.end()) throw ArgumentError("vertex " + std::to_string(v) + " not on cycle");
        return static_cast<int>(it - vs_.begin());
    }
    Vertex successor(Vertex u) const { return vs_[(position(u) + 1) % size()]; }
    Vertex predecessor(Vertex u) const { return vs_[(position(u) + size() - 1) % size()]; }

    bool operator==(const CycleSeq& o) const { return vs_ == o.vs_; }

private:
    std::vector<Vertex> vs_;
    VertexSet set_;
};

/// |u->C->v|: edges walked from u to v along the orientation of c. Requires |c| >= 3.
inline int segment_length(const CycleSeq& c, Vertex u, Vertex v) {
    if (c.size() < 3) throw ArgumentError("segment length needs a cycle on at least 3 vertices");
    int i = c.position(u), j = c.position(v);
    return (j - i + c.size()) % c.size();
}

} // namespace circum
