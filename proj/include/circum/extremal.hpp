#pragma once

#include <string>
#include <vector>

#include "circum/errors.hpp"
#include "circum/graph.hpp"

namespace circum {

/// Parameters of the join of kappa+1 disjoint cliques K_{delta-kappa+1} with a hub
/// clique K_kappa.
struct ExtremalParams {
    int kappa = 1;
    int delta = 1;

    int clique_size() const { return delta - kappa + 1; }
    int order() const { return (kappa + 1) * clique_size() + kappa; }

    void validate() const {
        if (kappa < 1) throw ArgumentError("kappa must be at least 1");
        if (delta < kappa) throw ArgumentError("delta must be at least kappa");
        if (order() > kMaxVertices)
            throw CapacityError("extremal graph of order " + std::to_string(order()) + " exceeds " +
                                std::to_string(kMaxVertices));
    }
};

/// Hubs take ids 0..kappa-1; clique j occupies the next block of delta-kappa+1 ids.
inline Graph build_extremal(const ExtremalParams& p) {
    p.validate();
    const int n = p.order();
    const int k = p.clique_size();
    std::vector<VertexSet> rows(n);
    auto join = [&](Vertex u, Vertex v) {
        rows[u].insert(v);
        rows[v].insert(u);
    };
    for (Vertex h = 0; h < p.kappa; ++h)
        for (Vertex v = h + 1; v < n; ++v) join(h, v);
    for (int block = 0; block <= p.kappa; ++block) {
        const Vertex first = p.kappa + block * k;
        for (Vertex u = first; u < first + k; ++u)
            for (Vertex v = u + 1; v < first + k; ++v) join(u, v);
    }
    return Graph::from_adjacency(n, rows);
}

/// Closed-form values the construction is expected to have. Predictions only; the
/// exact solvers confirm them.
struct ExtremalPrediction {
    int n = 0;
    int delta = 0;
    int circumference = 0;
    int p_bar = 0;
    int c_bar = 0;
    int bound1 = 0;
    int bound2 = 0;
};

inline ExtremalPrediction predicted_invariants(const ExtremalParams& p) {
    p.validate();
    ExtremalPrediction out;
    out.n = p.order();
    out.delta = p.delta;
    // Each hub links two full cliques, so a longest cycle runs through kappa cliques.
    out.circumference = p.kappa * (p.delta - p.kappa + 2);
    out.p_bar = p.delta - p.kappa;
    out.c_bar = p.delta - p.kappa + 1;
    out.bound1 = (out.p_bar + 2) * (p.delta - out.p_bar);
    out.bound2 = (out.c_bar + 1) * (p.delta - out.c_bar + 1);
    return out;
}

/// All (kappa, delta) with 1 <= kappa <= delta whose graph has at most max_n vertices.
inline std::vector<ExtremalParams> extremal_params_up_to(int max_n) {
    std::vector<ExtremalParams> out;
    for (int kappa = 1; kappa <= max_n; ++kappa)
        for (int delta = kappa;; ++delta) {
            ExtremalParams p{kappa, delta};
            if (p.order() > max_n) break;
            out.push_back(p);
        }
    return out;
}

} // namespace circum
