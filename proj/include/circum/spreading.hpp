#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circum/errors.hpp"
#include "circum/graph.hpp"

// M_H-spreadings: for a vertex set H and a path or cycle M in G - H, a family of
// pairwise disjoint paths in G - H, one starting at each vertex of M.

namespace circum {

enum class HostKind { path, cycle };

/// The path or cycle M that roots a spreading, with its own length convention.
class Host {
public:
    Host() = default;
    explicit Host(const PathSeq& p) : kind_(HostKind::path), vs_(p.vertices()), set_(p.vertex_set()) {}
    explicit Host(const CycleSeq& c) : kind_(HostKind::cycle), vs_(c.vertices()), set_(c.vertex_set()) {}

    static Host path(const Graph& g, std::vector<Vertex> vs) { return Host(PathSeq(g, std::move(vs))); }
    static Host cycle(const Graph& g, std::vector<Vertex> vs) { return Host(CycleSeq(g, std::move(vs))); }

    HostKind kind() const { return kind_; }
    const std::vector<Vertex>& vertices() const { return vs_; }
    VertexSet vertex_set() const { return set_; }
    int size() const { return static_cast<int>(vs_.size()); }
    /// |M|: edges of a path, or the cycle length (1 and 2 for a vertex and an edge).
    int length() const { return kind_ == HostKind::path ? size() - 1 : size(); }

    bool operator==(const Host&) const = default;

private:
    HostKind kind_ = HostKind::path;
    std::vector<Vertex> vs_;
    VertexSet set_;
};

struct Spreading {
    VertexSet removed;                      ///< V(H)
    Host host;                              ///< M
    std::vector<std::vector<Vertex>> paths; ///< paths[i] starts at host.vertices()[i]

    /// V(Upsilon): every vertex on some path.
    VertexSet covered() const {
        VertexSet s;
        for (const auto& p : paths) s |= VertexSet::of(p);
        return s;
    }
    VertexSet path_set(int i) const { return VertexSet::of(paths[i]); }
    Vertex root(int i) const { return paths[i].front(); }
    Vertex end(int i) const { return paths[i].back(); }
    bool trivial(int i) const { return paths[i].size() == 1; }
    std::optional<Vertex> successor(int i) const {
        if (trivial(i)) return std::nullopt;
        return paths[i][1];
    }
    int index_of(Vertex root) const {
        const auto& vs = host.vertices();
        auto it = std::find(vs.begin(), vs.end(), root);
        if (it == vs.end()) throw ArgumentError("vertex " + std::to_string(root) + " is not a root");
        return static_cast<int>(it - vs.begin());
    }
    int trivial_count() const {
        int k = 0;
        for (std::size_t i = 0; i < paths.size(); ++i) k += trivial(static_cast<int>(i)) ? 1 : 0;
        return k;
    }

    bool operator==(const Spreading&) const = default;
};

inline Spreading trivial_spreading(VertexSet removed, const Host& host) {
    Spreading s{removed, host, {}};
    for (Vertex u : host.vertices()) s.paths.push_back({u});
    return s;
}

inline void check_host(const Graph& g, VertexSet h, const Host& m) {
    g.check_subset(h);
    g.check_subset(m.vertex_set());
    if (m.vertex_set().intersects(h))
        throw ArgumentError("host " + m.vertex_set().to_string() + " meets the removed set " +
                            h.to_string());
}

/// Throws ArgumentError unless `s` is an M_H-spreading of g: one path per root, each a
/// path of G - H starting at its root, pairwise disjoint.
inline void validate_spreading(const Graph& g, const Spreading& s) {
    check_host(g, s.removed, s.host);
    if (s.paths.size() != s.host.vertices().size())
        throw ArgumentError("spreading has " + std::to_string(s.paths.size()) + " paths for " +
                            std::to_string(s.host.size()) + " roots");
    VertexSet seen;
    for (std::size_t i = 0; i < s.paths.size(); ++i) {
        const auto& p = s.paths[i];
        if (p.empty() || p.front() != s.host.vertices()[i])
            throw ArgumentError("path " + std::to_string(i) + " does not start at its root");
        PathSeq checked(g, p);
        if (checked.vertex_set().intersects(s.removed))
            throw ArgumentError("path from " + std::to_string(p.front()) + " enters H");
        if (checked.vertex_set().intersects(seen))
            throw ArgumentError("path from " + std::to_string(p.front()) + " is not disjoint");
        seen |= checked.vertex_set();
    }
}

// ---------------------------------------------------------------------------
// Enumeration

/// Default cap on partial states visited by the enumerator.
inline constexpr std::uint64_t kDefaultSpreadingBudget = 1'000'000;

/// Visits every spreading once, extending roots in host order and paths through
/// neighbours in increasing id order. Returns the number of spreadings visited.
inline std::uint64_t for_each_spreading(const Graph& g, VertexSet h, const Host& m,
                                        const std::function<void(const Spreading&)>& visit,
                                        std::uint64_t budget = kDefaultSpreadingBudget) {
    check_host(g, h, m);
    const VertexSet free_pool = g.vertices() - h - m.vertex_set();
    Spreading cur = trivial_spreading(h, m);
    std::uint64_t states = 0, produced = 0;

    std::function<void(int, VertexSet)> place;
    std::function<void(int, VertexSet)> grow = [&](int i, VertexSet used) {
        if (++states > budget)
            throw CapacityError("spreading enumeration exceeded budget of " + std::to_string(budget) +
                                " partial states after " + std::to_string(produced) + " spreadings");
        place(i + 1, used);
        for (Vertex w : g.neighbors(cur.paths[i].back()) & (free_pool - used)) {
            cur.paths[i].push_back(w);
            VertexSet with = used;
            with.insert(w);
            grow(i, with);
            cur.paths[i].pop_back();
        }
    };
    place = [&](int i, VertexSet used) {
        if (i == m.size()) {
            ++produced;
            visit(cur);
            return;
        }
        grow(i, used);
    };
    place(0, VertexSet{});
    return produced;
}

inline std::vector<Spreading> enumerate_spreadings(const Graph& g, VertexSet h, const Host& m,
                                                   std::uint64_t budget = kDefaultSpreadingBudget) {
    std::vector<Spreading> out;
    for_each_spreading(g, h, m, [&](const Spreading& s) { out.push_back(s); }, budget);
    return out;
}

// ---------------------------------------------------------------------------
// Minimum |U0| by bipartite matching

/// Minimum number of trivial paths over all spreadings. A nontrivial path can be cut
/// back to its first edge without changing U0, so this is |V(M)| minus a maximum
/// matching between V(M) and the rest of G - H.
inline int min_u0_via_matching(const Graph& g, VertexSet h, const Host& m) {
    check_host(g, h, m);
    const VertexSet right = g.vertices() - h - m.vertex_set();
    std::array<int, kMaxVertices> match_of{};
    match_of.fill(-1);

    std::function<bool(Vertex, VertexSet&)> augment = [&](Vertex u, VertexSet& seen) {
        for (Vertex w : g.neighbors(u) & right) {
            if (seen.contains(w)) continue;
            seen.insert(w);
            if (match_of[w] < 0 || augment(match_of[w], seen)) {
                match_of[w] = u;
                return true;
            }
        }
        return false;
    };

    int matched = 0;
    for (Vertex u : m.vertices()) {
        VertexSet seen;
        if (augment(u, seen)) ++matched;
    }
    return m.size() - matched;
}

// ---------------------------------------------------------------------------
// Classification

struct RootRecord {
    Vertex root = -1;
    Vertex end = -1;                   ///< last vertex of the path
    std::optional<Vertex> successor;   ///< second vertex, when the path is nontrivial
    VertexSet phi;                     ///< N(end) inside V(Upsilon)
    VertexSet psi;                     ///< N(end) inside V(H)
    VertexSet b;                       ///< trivial roots adjacent to the successor
    VertexSet b_star;                  ///< for trivial roots: nontrivial roots whose successor is adjacent

    int phi_count() const { return phi.size(); }
    int psi_count() const { return psi.size(); }
    int b_count() const { return b.size(); }
    int b_star_count() const { return b_star.size(); }
};

struct SpreadingClassification {
    HostKind kind = HostKind::path;
    int host_length = 0;
    VertexSet u0;      ///< trivial roots
    VertexSet u0_bar;  ///< nontrivial roots
    VertexSet u_star;  ///< nontrivial roots whose end sees only its own path inside V(Upsilon)
    VertexSet u1;      ///< the remaining roots
    VertexSet u_star1; ///< cycle hosts: U* members with 2*phi <= |M|
    VertexSet u_star2; ///< cycle hosts: U* members with 2*phi >= |M| + 1
    std::vector<RootRecord> roots; ///< in host order

    const RootRecord& at(Vertex u) const {
        for (const auto& r : roots)
            if (r.root == u) return r;
        throw ArgumentError("vertex " + std::to_string(u) + " is not a root");
    }
};

inline SpreadingClassification classify(const Graph& g, const Spreading& s) {
    SpreadingClassification c;
    c.kind = s.host.kind();
    c.host_length = s.host.length();
    const VertexSet covered = s.covered();
    const int m = s.host.size();

    for (int i = 0; i < m; ++i) (s.trivial(i) ? c.u0 : c.u0_bar).insert(s.root(i));

    c.roots.resize(m);
    for (int i = 0; i < m; ++i) {
        RootRecord& r = c.roots[i];
        r.root = s.root(i);
        r.end = s.end(i);
        r.successor = s.successor(i);
        r.phi = g.neighbors(r.end) & covered;
        r.psi = g.neighbors(r.end) & s.removed;
        if (r.successor) {
            r.b = g.neighbors(*r.successor) & c.u0;
            if (r.phi.subset_of(s.path_set(i))) c.u_star.insert(r.root);
        }
    }
    c.u1 = s.host.vertex_set() - c.u0 - c.u_star;

    for (int i = 0; i < m; ++i) {
        RootRecord& r = c.roots[i];
        if (!c.u0.contains(r.root)) continue;
        for (int j = 0; j < m; ++j)
            if (auto succ = s.successor(j); succ && g.adjacent(r.root, *succ)) r.b_star.insert(s.root(j));
    }

    if (c.kind == HostKind::cycle) {
        for (Vertex u : c.u_star) {
            const int phi = c.at(u).phi_count();
            (2 * phi <= c.host_length ? c.u_star1 : c.u_star2).insert(u);
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Minimal spreadings

enum class MinimalityOrder { u0, u0_then_ustar };

struct MinimalSpreadings {
    int min_u0 = 0;
    int min_ustar = -1; ///< set only for MinimalityOrder::u0_then_ustar
    std::vector<Spreading> spreadings;
};

/// Every spreading minimising |U0| and, for the second order, then |U*|.
inline MinimalSpreadings find_minimal_spreadings(const Graph& g, VertexSet h, const Host& m,
                                                 MinimalityOrder order,
                                                 std::uint64_t budget = kDefaultSpreadingBudget) {
    MinimalSpreadings out;
    out.min_u0 = m.size() + 1;
    for_each_spreading(
        g, h, m,
        [&](const Spreading& s) {
            const int u0 = s.trivial_count();
            if (u0 > out.min_u0) return;
            if (u0 < out.min_u0) {
                out.min_u0 = u0;
                out.spreadings.clear();
            }
            out.spreadings.push_back(s);
        },
        budget);

    if (order == MinimalityOrder::u0_then_ustar) {
        std::vector<int> ustar;
        ustar.reserve(out.spreadings.size());
        for (const auto& s : out.spreadings) ustar.push_back(classify(g, s).u_star.size());
        out.min_ustar = ustar.empty() ? 0 : *std::min_element(ustar.begin(), ustar.end());
        std::vector<Spreading> kept;
        for (std::size_t i = 0; i < out.spreadings.size(); ++i)
            if (ustar[i] == out.min_ustar) kept.push_back(std::move(out.spreadings[i]));
        out.spreadings = std::move(kept);
    }
    return out;
}

/// True when |U0(s)| equals the matching lower bound, i.e. s is (U0)-minimal.
inline bool is_u0_minimal(const Graph& g, const Spreading& s) {
    return s.trivial_count() == min_u0_via_matching(g, s.removed, s.host);
}

// ---------------------------------------------------------------------------
// Saturation

/// Extends paths whose end has a neighbour outside V(Upsilon) and V(H), lowest id
/// first, until every end satisfies N(end) within V(Upsilon) + V(H).
inline Spreading saturate(const Graph& g, Spreading s) {
    VertexSet blocked = s.covered() | s.removed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& p : s.paths) {
            VertexSet open = g.neighbors(p.back()) - blocked;
            while (!open.empty()) {
                const Vertex w = open.min();
                p.push_back(w);
                blocked.insert(w);
                open = g.neighbors(w) - blocked;
                changed = true;
            }
        }
    }
    return s;
}

inline bool is_saturated(const Graph& g, const Spreading& s) {
    const VertexSet blocked = s.covered() | s.removed;
    for (const auto& p : s.paths)
        if (!(g.neighbors(p.back()) - blocked).empty()) return false;
    return true;
}

} // namespace circum
