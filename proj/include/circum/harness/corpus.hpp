#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "circum/errors.hpp"
#include "circum/extremal.hpp"
#include "circum/graph.hpp"
#include "circum/io.hpp"

namespace circum {

enum class CorpusKind { exhaustive, gnp, regular, extremal, file };

inline const char* to_string(CorpusKind k) {
    switch (k) {
    case CorpusKind::exhaustive: return "exhaustive";
    case CorpusKind::gnp: return "gnp";
    case CorpusKind::regular: return "regular";
    case CorpusKind::extremal: return "extremal";
    case CorpusKind::file: return "file";
    }
    return "?";
}

struct CorpusSpec {
    CorpusKind kind = CorpusKind::exhaustive;
    int n = 5;
    double p = 0.5;           ///< gnp edge probability
    int d = 3;                ///< regular degree
    std::size_t count = 100;  ///< randomized corpora
    std::uint64_t seed = 1;
    int kappa_min = 1, kappa_max = 3;
    int delta_min = 1, delta_max = 5;
    int extremal_max_n = kMaxVertices;
    std::string path;
    GraphFormat format = GraphFormat::graph6;

    bool connected_only = false;
    bool degenerate_track = true; ///< report graphs with circumference < 3 on their own track

    bool randomized() const { return kind == CorpusKind::gnp || kind == CorpusKind::regular; }

    static CorpusSpec exhaustive_of(int n) {
        CorpusSpec s;
        s.kind = CorpusKind::exhaustive;
        s.n = n;
        return s;
    }
    static CorpusSpec gnp_of(int n, double p, std::size_t count, std::uint64_t seed) {
        CorpusSpec s;
        s.kind = CorpusKind::gnp;
        s.n = n;
        s.p = p;
        s.count = count;
        s.seed = seed;
        return s;
    }
    static CorpusSpec regular_of(int n, int d, std::size_t count, std::uint64_t seed) {
        CorpusSpec s;
        s.kind = CorpusKind::regular;
        s.n = n;
        s.d = d;
        s.count = count;
        s.seed = seed;
        return s;
    }
    static CorpusSpec extremal_of(int kappa_min, int kappa_max, int delta_min, int delta_max) {
        CorpusSpec s;
        s.kind = CorpusKind::extremal;
        s.kappa_min = kappa_min;
        s.kappa_max = kappa_max;
        s.delta_min = delta_min;
        s.delta_max = delta_max;
        return s;
    }
};

struct CorpusItem {
    Graph graph;
    nlohmann::json generator; ///< enough to regenerate the graph
};

/// Random-access view of a corpus: item(i) depends only on the spec and i.
class Corpus {
public:
    explicit Corpus(CorpusSpec spec) : spec_(std::move(spec)) {
        switch (spec_.kind) {
        case CorpusKind::exhaustive: {
            if (spec_.n < 0 || spec_.n > 8) throw ArgumentError("exhaustive corpora support n in [0, 8]");
            size_ = std::size_t{1} << (spec_.n * (spec_.n - 1) / 2);
            break;
        }
        case CorpusKind::gnp:
            if (spec_.p < 0.0 || spec_.p > 1.0) throw ArgumentError("gnp probability outside [0, 1]");
            check_random_order();
            size_ = spec_.count;
            break;
        case CorpusKind::regular:
            check_random_order();
            if (spec_.d < 0 || spec_.d >= std::max(spec_.n, 1) || (spec_.n * spec_.d) % 2 != 0)
                throw ArgumentError("no simple " + std::to_string(spec_.d) + "-regular graph on " +
                                    std::to_string(spec_.n) + " vertices");
            size_ = spec_.count;
            break;
        case CorpusKind::extremal:
            for (int kappa = spec_.kappa_min; kappa <= spec_.kappa_max; ++kappa)
                for (int delta = std::max(kappa, spec_.delta_min); delta <= spec_.delta_max; ++delta) {
                    ExtremalParams p{kappa, delta};
                    if (p.order() > spec_.extremal_max_n) continue;
                    p.validate();
                    params_.push_back(p);
                }
            size_ = params_.size();
            break;
        case CorpusKind::file:
            graphs_ = read_graphs(spec_.path, spec_.format);
            size_ = graphs_.size();
            break;
        }
    }

    const CorpusSpec& spec() const { return spec_; }
    std::size_t size() const { return size_; }

    CorpusItem item(std::size_t i) const {
        switch (spec_.kind) {
        case CorpusKind::exhaustive:
            return {Graph::from_edge_mask(spec_.n, i), {{"kind", "exhaustive"}, {"edge_mask", i}}};
        case CorpusKind::gnp: return gnp_item(i);
        case CorpusKind::regular: return regular_item(i);
        case CorpusKind::extremal:
            return {build_extremal(params_[i]),
                    {{"kind", "extremal"}, {"kappa", params_[i].kappa}, {"delta", params_[i].delta}}};
        case CorpusKind::file:
            return {graphs_[i], {{"kind", "file"}, {"path", spec_.path}, {"index", i}}};
        }
        throw ArgumentError("unknown corpus kind");
    }

    nlohmann::json describe() const {
        nlohmann::json d = {{"kind", to_string(spec_.kind)},
                            {"size", size_},
                            {"connected_only", spec_.connected_only},
                            {"degenerate_track", spec_.degenerate_track}};
        switch (spec_.kind) {
        case CorpusKind::exhaustive: d["n"] = spec_.n; break;
        case CorpusKind::gnp:
            d["n"] = spec_.n;
            d["p"] = spec_.p;
            d["count"] = spec_.count;
            d["seed"] = spec_.seed;
            break;
        case CorpusKind::regular:
            d["n"] = spec_.n;
            d["d"] = spec_.d;
            d["count"] = spec_.count;
            d["seed"] = spec_.seed;
            break;
        case CorpusKind::extremal:
            d["kappa"] = {spec_.kappa_min, spec_.kappa_max};
            d["delta"] = {spec_.delta_min, spec_.delta_max};
            break;
        case CorpusKind::file: d["path"] = spec_.path; break;
        }
        return d;
    }

private:
    void check_random_order() const {
        if (spec_.n < 0 || spec_.n > kMaxVertices)
            throw ArgumentError("random graph order outside [0, " + std::to_string(kMaxVertices) + "]");
    }

    // Each item gets its own engine seeded from (seed, index), so items can be
    // produced in any order by any worker.
    std::mt19937_64 engine_for(std::size_t i) const {
        std::seed_seq seq{static_cast<std::uint32_t>(spec_.seed), static_cast<std::uint32_t>(spec_.seed >> 32),
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(std::uint64_t{i} >> 32)};
        return std::mt19937_64(seq);
    }

    CorpusItem gnp_item(std::size_t i) const {
        auto rng = engine_for(i);
        std::bernoulli_distribution coin(spec_.p);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int v = 1; v < spec_.n; ++v)
            for (int u = 0; u < v; ++u)
                if (coin(rng)) edges.emplace_back(u, v);
        return {Graph(spec_.n, edges),
                {{"kind", "gnp"}, {"seed", spec_.seed}, {"index", i}, {"n", spec_.n}, {"p", spec_.p}}};
    }

    // Pairing model: shuffle n*d half-edges, pair neighbours, reject loops and
    // repeated pairs and start over.
    CorpusItem regular_item(std::size_t i) const {
        auto rng = engine_for(i);
        const int points = spec_.n * spec_.d;
        std::vector<int> owner(points);
        for (int k = 0; k < points; ++k) owner[k] = k / std::max(spec_.d, 1);
        for (int attempt = 1; attempt <= 100000; ++attempt) {
            std::shuffle(owner.begin(), owner.end(), rng);
            std::vector<VertexSet> rows(spec_.n);
            bool ok = true;
            for (int k = 0; k + 1 < points && ok; k += 2) {
                const int u = owner[k], v = owner[k + 1];
                if (u == v || rows[u].contains(v)) ok = false;
                else {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
            if (ok)
                return {Graph::from_adjacency(spec_.n, rows),
                        {{"kind", "regular"}, {"seed", spec_.seed}, {"index", i}, {"n", spec_.n},
                         {"d", spec_.d}, {"attempts", attempt}}};
        }
        throw CapacityError("pairing model found no simple graph in 100000 attempts");
    }

    CorpusSpec spec_;
    std::size_t size_ = 0;
    std::vector<ExtremalParams> params_;
    std::vector<Graph> graphs_;
};

} // namespace circum
