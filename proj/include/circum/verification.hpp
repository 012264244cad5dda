#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "circum/errors.hpp"
#include "circum/graph.hpp"
#include "circum/io.hpp"
#include "circum/oracle.hpp"
#include "circum/serialize.hpp"
#include "circum/solvers.hpp"
#include "circum/spreading.hpp"

// Executable checks of the circumference bounds, the three lemmas behind them and
// the intermediate claims of their proofs. A check whose hypotheses cannot be
// certified reports hypothesis_error and never failed.

namespace circum {

enum class CheckStatus { passed, failed, not_applicable, hypothesis_error };

inline const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::not_applicable: return "not_applicable";
    case CheckStatus::hypothesis_error: return "hypothesis_error";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::passed;
    nlohmann::json witness;  ///< null on pass
    nlohmann::json context;

    bool passed() const { return status == CheckStatus::passed; }
    bool failed() const { return status == CheckStatus::failed; }
};

namespace detail {

inline CheckResult refuse(std::string name, std::string reason, nlohmann::json context = {}) {
    return {std::move(name), CheckStatus::hypothesis_error, {{"reason", std::move(reason)}},
            std::move(context)};
}

} // namespace detail

/// Values the caller has already certified, so checks need not re-solve. Any field
/// left empty is computed.
struct Certified {
    std::optional<int> circumference;       ///< of G
    std::optional<int> remainder_optimum;   ///< longest path / cycle length of G - H
    std::optional<int> min_u0;              ///< minimum |U0| for (H, M)
};

// ---------------------------------------------------------------------------
// Lemma 1

/// A longest cycle C, a path M of G - C and disjoint paths L_i of G - C that meet M
/// only in their first vertex, with the derived attack structure on C.
struct Lemma1Config {
    CycleSeq cycle;
    PathSeq m;
    std::vector<PathSeq> rooted_paths;

    std::vector<Vertex> ends;           ///< w_i
    std::vector<VertexSet> z;           ///< Z_i = N(w_i) on C
    VertexSet z_union;
    std::vector<Vertex> attack;         ///< the union of the Z_i in cycle order
    std::vector<VertexSet> f;           ///< F_i = N(attack_i) among the ends
    std::vector<int> gaps;              ///< |attack_i -> C -> attack_{i+1}|, when t >= 2

    int t() const { return z_union.size(); }
    int z_sum() const {
        int s = 0;
        for (VertexSet zi : z) s += zi.size();
        return s;
    }
};

inline Lemma1Config make_lemma1_config(const Graph& g, CycleSeq cycle, PathSeq m,
                                       std::vector<PathSeq> rooted_paths) {
    if (cycle.size() < 3) throw ArgumentError("Lemma 1 needs a cycle on at least 3 vertices");
    const VertexSet on_cycle = cycle.vertex_set();
    if (m.vertex_set().intersects(on_cycle)) throw ArgumentError("M meets the cycle");
    VertexSet used;
    for (const auto& l : rooted_paths) {
        if (l.empty()) throw ArgumentError("empty rooted path");
        if (l.vertex_set().intersects(on_cycle)) throw ArgumentError("rooted path meets the cycle");
        if (l.vertex_set().intersects(used)) throw ArgumentError("rooted paths are not disjoint");
        if ((l.vertex_set() & m.vertex_set()) != VertexSet::single(l.front()))
            throw ArgumentError("rooted path from " + std::to_string(l.front()) +
                                " must meet M exactly in its first vertex");
        used |= l.vertex_set();
    }

    Lemma1Config cfg{std::move(cycle), std::move(m), std::move(rooted_paths)};
    VertexSet ends;
    for (const auto& l : cfg.rooted_paths) {
        cfg.ends.push_back(l.back());
        ends.insert(l.back());
        VertexSet zi = g.neighbors(l.back()) & on_cycle;
        cfg.z.push_back(zi);
        cfg.z_union |= zi;
    }
    for (Vertex x : cfg.cycle.vertices())
        if (cfg.z_union.contains(x)) {
            cfg.attack.push_back(x);
            cfg.f.push_back(g.neighbors(x) & ends);
        }
    const int t = static_cast<int>(cfg.attack.size());
    if (t >= 2)
        for (int i = 0; i < t; ++i)
            cfg.gaps.push_back(segment_length(cfg.cycle, cfg.attack[i], cfg.attack[(i + 1) % t]));
    return cfg;
}

inline nlohmann::json lemma1_context(const Lemma1Config& cfg) {
    nlohmann::json paths = nlohmann::json::array();
    for (const auto& l : cfg.rooted_paths) paths.push_back(l.vertices());
    return {{"cycle", cfg.cycle.vertices()}, {"m", cfg.m.vertices()}, {"rooted_paths", paths}};
}

namespace detail {

inline std::optional<CheckResult> lemma1_hypothesis(const Graph& g, const Lemma1Config& cfg,
                                                    const std::string& name, const Certified& cert,
                                                    const SolveLimits& limits) {
    const int circ = cert.circumference ? *cert.circumference : longest_cycle_length(g, limits);
    if (cfg.cycle.length() != circ)
        return refuse(name, "cycle of length " + std::to_string(cfg.cycle.length()) +
                                " is not longest (circumference " + std::to_string(circ) + ")",
                      lemma1_context(cfg));
    return std::nullopt;
}

} // namespace detail

/// |C| >= sum |Z_i| + |union Z_i|.
inline CheckResult check_lemma1(const Graph& g, const Lemma1Config& cfg, const Certified& cert = {},
                                const SolveLimits& limits = {}) {
    if (auto refused = detail::lemma1_hypothesis(g, cfg, "lemma1", cert, limits)) return *refused;
    CheckResult r{"lemma1", CheckStatus::passed, nullptr, lemma1_context(cfg)};
    const int rhs = cfg.z_sum() + cfg.t();
    if (cfg.cycle.length() < rhs) {
        r.status = CheckStatus::failed;
        r.witness = {{"cycle_length", cfg.cycle.length()}, {"z_sum", cfg.z_sum()}, {"t", cfg.t()}};
    }
    return r;
}

/// Every gap between consecutive attack points satisfies 2 f >= |F_i| + |F_{i+1}| + 2.
inline CheckResult check_lemma1_segments(const Graph& g, const Lemma1Config& cfg,
                                         const Certified& cert = {}, const SolveLimits& limits = {}) {
    if (auto refused = detail::lemma1_hypothesis(g, cfg, "lemma1_segments", cert, limits))
        return *refused;
    CheckResult r{"lemma1_segments", CheckStatus::passed, nullptr, lemma1_context(cfg)};
    const int t = cfg.t();
    if (t < 2) {
        r.status = CheckStatus::not_applicable;
        return r;
    }
    for (int i = 0; i < t; ++i) {
        const int fi = cfg.f[i].size(), fnext = cfg.f[(i + 1) % t].size();
        if (2 * cfg.gaps[i] < fi + fnext + 2) {
            r.status = CheckStatus::failed;
            r.witness = {{"from", cfg.attack[i]}, {"to", cfg.attack[(i + 1) % t]},
                         {"gap", cfg.gaps[i]}, {"F_from", fi}, {"F_to", fnext}};
            break;
        }
    }
    return r;
}

/// Sum of gaps = |C|, sum |F_i| = sum |Z_i|, and t = |union Z_i|.
inline CheckResult check_lemma1_identities(const Lemma1Config& cfg) {
    CheckResult r{"lemma1_identities", CheckStatus::passed, nullptr, lemma1_context(cfg)};
    const int t = cfg.t();
    if (t < 2) {
        r.status = CheckStatus::not_applicable;
        return r;
    }
    int gap_sum = 0, f_sum = 0;
    for (int gi : cfg.gaps) gap_sum += gi;
    for (VertexSet fi : cfg.f) f_sum += fi.size();
    if (gap_sum != cfg.cycle.length() || f_sum != cfg.z_sum() ||
        static_cast<int>(cfg.attack.size()) != t) {
        r.status = CheckStatus::failed;
        r.witness = {{"gap_sum", gap_sum}, {"cycle_length", cfg.cycle.length()},
                     {"f_sum", f_sum}, {"z_sum", cfg.z_sum()}, {"t", t}};
    }
    return r;
}

// ---------------------------------------------------------------------------
// Lemmas 2 and 3 and the spreading-level claims

namespace detail {

inline nlohmann::json spreading_context(const Spreading& s, const SpreadingClassification& c) {
    return {{"spreading", to_json(s)}, {"classification", to_json(c)}};
}

// Certifies that `s` is a (U0)-minimal spreading over `m` in G - h and that `m` is a
// longest path / cycle of G - h.
inline std::optional<CheckResult> spreading_hypothesis(const Graph& g, VertexSet h, const Host& m,
                                                       const Spreading& s, const std::string& name,
                                                       const Certified& cert,
                                                       const SolveLimits& limits,
                                                       bool require_longest = true) {
    try {
        validate_spreading(g, s);
    } catch (const ArgumentError& e) {
        return refuse(name, std::string("invalid spreading: ") + e.what(), {{"spreading", to_json(s)}});
    }
    if (s.removed != h || !(s.host == m))
        return refuse(name, "spreading is over a different (H, M)", {{"spreading", to_json(s)}});
    if (require_longest) {
        int best;
        if (cert.remainder_optimum) {
            best = *cert.remainder_optimum;
        } else {
            const Graph rest = remove_vertices(g, h).graph;
            best = m.kind() == HostKind::path ? longest_path_length(rest, limits)
                                              : longest_cycle_length(rest, limits);
        }
        if (m.length() != best)
            return refuse(name, "host of length " + std::to_string(m.length()) +
                                    " is not longest in G - H (" + std::to_string(best) + ")",
                          {{"spreading", to_json(s)}});
    }
    const int min_u0 = cert.min_u0 ? *cert.min_u0 : min_u0_via_matching(g, h, m);
    if (s.trivial_count() != min_u0)
        return refuse(name, "spreading has |U0| = " + std::to_string(s.trivial_count()) +
                                " but the minimum is " + std::to_string(min_u0),
                      {{"spreading", to_json(s)}});
    return std::nullopt;
}

inline nlohmann::json root_witness(const RootRecord& r) {
    return {{"u", r.root}, {"phi", r.phi_count()}, {"b", r.b_count()}, {"b_star", r.b_star_count()},
            {"Phi", to_json(r.phi)}, {"B", to_json(r.b)}};
}

// Runs `holds` over the roots in `domain`; first failure becomes the witness.
template <class Pred>
CheckResult quantify(std::string name, const SpreadingClassification& c, VertexSet domain,
                     const nlohmann::json& context, Pred holds) {
    CheckResult r{std::move(name), CheckStatus::passed, nullptr, context};
    for (Vertex u : domain) {
        const RootRecord& rec = c.at(u);
        if (!holds(rec)) {
            r.status = CheckStatus::failed;
            r.witness = root_witness(rec);
            r.witness["host_length"] = c.host_length;
            break;
        }
    }
    return r;
}

} // namespace detail

/// For M a longest cycle of G - H and a (U0)-minimal spreading: |M| >= phi_u + b_u + 1
/// for every u in U1.
inline CheckResult check_lemma2(const Graph& g, VertexSet h, const Host& m, const Spreading& s,
                                const Certified& cert = {}, const SolveLimits& limits = {}) {
    if (m.kind() != HostKind::cycle) return detail::refuse("lemma2", "host is not a cycle");
    if (auto refused = detail::spreading_hypothesis(g, h, m, s, "lemma2", cert, limits)) return *refused;
    const auto c = classify(g, s);
    return detail::quantify("lemma2", c, c.u1, detail::spreading_context(s, c), [&](const RootRecord& r) {
        return m.length() >= r.phi_count() + r.b_count() + 1;
    });
}

/// For L a longest path of G - H and a (U0)-minimal spreading: |L| >= phi_u + b_u for
/// every nontrivial root u.
inline CheckResult check_lemma3(const Graph& g, VertexSet h, const Host& l, const Spreading& s,
                                const Certified& cert = {}, const SolveLimits& limits = {}) {
    if (l.kind() != HostKind::path) return detail::refuse("lemma3", "host is not a path");
    if (auto refused = detail::spreading_hypothesis(g, h, l, s, "lemma3", cert, limits)) return *refused;
    const auto c = classify(g, s);
    return detail::quantify("lemma3", c, c.u0_bar, detail::spreading_context(s, c), [&](const RootRecord& r) {
        return l.length() >= r.phi_count() + r.b_count();
    });
}

/// In a (U0)-minimal spreading, a path with at least two edges has an end with no
/// neighbour among the trivial roots. M need not be longest.
inline CheckResult check_claim2(const Graph& g, const Spreading& s, const Certified& cert = {},
                                const SolveLimits& limits = {}) {
    if (auto refused = detail::spreading_hypothesis(g, s.removed, s.host, s, "claim2", cert, limits,
                                                    /*require_longest=*/false))
        return *refused;
    const auto c = classify(g, s);
    VertexSet long_roots;
    for (int i = 0; i < s.host.size(); ++i)
        if (s.paths[i].size() >= 3) long_roots.insert(s.root(i));
    return detail::quantify("claim2", c, long_roots, detail::spreading_context(s, c),
                            [&](const RootRecord& r) { return !r.phi.intersects(c.u0); });
}

/// For u in U0 and v in the nontrivial roots, Phi_u meets Upsilon(v) only in {v, v'}
/// where v' is the successor of v. M need not be longest.
inline CheckResult check_containment(const Graph& g, const Spreading& s, const std::string& name = "a1",
                                     const Certified& cert = {}, const SolveLimits& limits = {}) {
    if (auto refused = detail::spreading_hypothesis(g, s.removed, s.host, s, name, cert, limits,
                                                    /*require_longest=*/false))
        return *refused;
    const auto c = classify(g, s);
    CheckResult r{name, CheckStatus::passed, nullptr, detail::spreading_context(s, c)};
    for (Vertex u : c.u0) {
        const VertexSet phi = c.at(u).phi;
        for (int j = 0; j < s.host.size(); ++j) {
            if (s.trivial(j)) continue;
            const VertexSet allowed{s.root(j), *s.successor(j)};
            const VertexSet hit = phi & s.path_set(j);
            if (!hit.subset_of(allowed)) {
                r.status = CheckStatus::failed;
                r.witness = {{"u", u}, {"v", s.root(j)}, {"hit", to_json(hit)}};
                return r;
            }
        }
    }
    return r;
}

/// Sum over trivial roots of b*_u equals the sum over nontrivial roots of b_u.
inline CheckResult check_double_counting(const Graph& g, const Spreading& s) {
    const auto c = classify(g, s);
    int lhs = 0, rhs = 0;
    for (Vertex u : c.u0) lhs += c.at(u).b_star_count();
    for (Vertex u : c.u0_bar) rhs += c.at(u).b_count();
    CheckResult r{"double_counting", CheckStatus::passed, nullptr, detail::spreading_context(s, c)};
    if (lhs != rhs) {
        r.status = CheckStatus::failed;
        r.witness = {{"sum_b_star", lhs}, {"sum_b", rhs}};
    }
    return r;
}

enum class ClaimMode { path, cycle };

/// The intermediate inequalities of the two theorem proofs, for C a longest cycle of
/// G, M a longest path (path mode) or cycle (cycle mode) of G - C, and a saturated
/// (U0)-minimal spreading over M.
inline std::vector<CheckResult> check_proof_claims(const Graph& g, const CycleSeq& c, const Host& m,
                                                   const Spreading& s, ClaimMode mode,
                                                   const Certified& cert = {},
                                                   const SolveLimits& limits = {}) {
    const bool path_mode = mode == ClaimMode::path;
    const std::string tag = path_mode ? "a" : "b";
    const char* group = path_mode ? "claims_path" : "claims_cycle";

    if ((m.kind() == HostKind::path) != path_mode)
        return {detail::refuse(group, "host kind does not match the claim mode")};
    const int circ = cert.circumference ? *cert.circumference : longest_cycle_length(g, limits);
    if (c.length() != circ) return {detail::refuse(group, "C is not a longest cycle")};
    if (auto refused = detail::spreading_hypothesis(g, c.vertex_set(), m, s, group, cert, limits))
        return {*refused};
    if (!is_saturated(g, s)) return {detail::refuse(group, "spreading is not saturated")};

    const auto cl = classify(g, s);
    const auto ctx = detail::spreading_context(s, cl);
    const int len = m.length(); // p-bar or c-bar
    std::vector<CheckResult> out;

    CheckResult contain = check_containment(g, s, tag + "1", {.min_u0 = s.trivial_count()}, limits);
    out.push_back(std::move(contain));

    if (path_mode) {
        out.push_back(detail::quantify("a2", cl, cl.u0, ctx, [&](const RootRecord& r) {
            return r.phi_count() <= len + r.b_star_count();
        }));
        out.push_back(detail::quantify("a3", cl, cl.u0_bar, ctx, [&](const RootRecord& r) {
            return r.phi_count() <= len - r.b_count();
        }));
    } else {
        // Halves are cleared by doubling both sides.
        out.push_back(detail::quantify("b2", cl, cl.u0, ctx, [&](const RootRecord& r) {
            return r.phi_count() <= len - 1 + r.b_star_count();
        }));
        out.push_back(detail::quantify("b3", cl, cl.u1, ctx, [&](const RootRecord& r) {
            return r.phi_count() <= len - 1 - r.b_count();
        }));
        out.push_back(detail::quantify("b4", cl, cl.u_star, ctx, [&](const RootRecord& r) {
            return 2 * r.phi_count() <= 2 * (len - 1 - r.b_count()) + 2 * r.phi_count() - len;
        }));
        out.push_back(detail::quantify("b5", cl, cl.u1 | cl.u_star1, ctx, [&](const RootRecord& r) {
            return r.phi_count() <= len - 1 - r.b_count();
        }));
        int phi_v = 0;
        for (Vertex u : cl.u_star2) phi_v = std::max(phi_v, cl.at(u).phi_count());
        CheckResult b6 = detail::quantify("b6", cl, cl.u_star2, ctx, [&](const RootRecord& r) {
            return 2 * r.phi_count() <= 2 * (len - 1 - r.b_count()) + 2 * phi_v - len;
        });
        if (b6.failed()) b6.witness["phi_v"] = phi_v;
        out.push_back(std::move(b6));

        CheckResult part{"u_star_partition", CheckStatus::passed, nullptr, ctx};
        if ((cl.u_star1 | cl.u_star2) != cl.u_star || cl.u_star1.intersects(cl.u_star2)) {
            part.status = CheckStatus::failed;
            part.witness = {{"U_star", to_json(cl.u_star)}, {"U_star1", to_json(cl.u_star1)},
                            {"U_star2", to_json(cl.u_star2)}};
        }
        out.push_back(std::move(part));
    }

    // Summing the per-root bounds with the double-counting identity.
    {
        int phi_sum = 0;
        for (const auto& r : cl.roots) phi_sum += r.phi_count();
        long long twice_bound;
        if (path_mode) {
            twice_bound = 2LL * len * (len + 1);
        } else {
            int phi_v = 0;
            for (Vertex u : cl.u_star2) phi_v = std::max(phi_v, cl.at(u).phi_count());
            twice_bound = 2LL * len * (len - 1) +
                          (cl.u_star2.empty() ? 0LL : 1LL * cl.u_star2.size() * (2 * phi_v - len));
        }
        CheckResult sum{"phi_sum", CheckStatus::passed, nullptr, ctx};
        if (2LL * phi_sum > twice_bound) {
            sum.status = CheckStatus::failed;
            sum.witness = {{"phi_sum", phi_sum}, {"twice_bound", twice_bound}};
        }
        out.push_back(std::move(sum));
    }

    CheckResult split{"degree_split", CheckStatus::passed, nullptr, ctx};
    for (const auto& r : cl.roots)
        if (g.degree(r.end) != r.phi_count() + r.psi_count()) {
            split.status = CheckStatus::failed;
            split.witness = {{"u", r.root}, {"degree", g.degree(r.end)}, {"phi", r.phi_count()},
                             {"psi", r.psi_count()}};
            break;
        }
    out.push_back(std::move(split));

    out.push_back(check_double_counting(g, s));
    return out;
}

// ---------------------------------------------------------------------------
// Theorems

/// Bound values for one longest-cycle vertex set S.
struct CycleSetBound {
    VertexSet cycle_set;
    int p_bar = 0;  ///< longest path of G - S, -1 when empty
    int c_bar = 0;  ///< longest cycle of G - S, 0 when empty
    int bound1 = 0; ///< (p+2)(delta-p)
    int bound2 = 0; ///< (c+1)(delta-c+1)
    int slack1 = 0;
    int slack2 = 0;
    bool sharp1() const { return slack1 == 0; }
    bool sharp2() const { return slack2 == 0; }
};

struct BoundAnalysis {
    int n = 0;
    int edges = 0;
    int delta = 0;
    int circumference = 0;
    bool degenerate = false;  ///< circumference < 3
    bool partial = false;     ///< not every longest-cycle vertex set was examined
    int cycle_set_total = 0;
    std::vector<CycleSetBound> entries;
};

inline int theorem1_bound(int p_bar, int delta) { return (p_bar + 2) * (delta - p_bar); }
inline int theorem2_bound(int c_bar, int delta) { return (c_bar + 1) * (delta - c_bar + 1); }

inline CycleSetBound bound_for_set(const Graph& g, VertexSet cycle_set, int circumference, int delta,
                                   const SolveLimits& limits = {}) {
    CycleSetBound e;
    e.cycle_set = cycle_set;
    const Graph rest = remove_vertices(g, cycle_set).graph;
    e.p_bar = longest_path_length(rest, limits);
    e.c_bar = longest_cycle_length(rest, limits);
    e.bound1 = theorem1_bound(e.p_bar, delta);
    e.bound2 = theorem2_bound(e.c_bar, delta);
    e.slack1 = circumference - e.bound1;
    e.slack2 = circumference - e.bound2;
    return e;
}

/// Circumference, minimum degree and both bounds for every longest-cycle vertex set
/// (the first `max_sets` when positive). Degenerate circumferences use edges or
/// vertices as the longest cycles.
inline BoundAnalysis analyze_bounds(const Graph& g, const SolveLimits& limits = {},
                                    std::size_t max_sets = 0) {
    BoundAnalysis a;
    a.n = g.order();
    a.edges = g.edge_count();
    a.delta = min_degree(g);
    LongestCycles lc = longest_cycles(g, limits);
    a.circumference = lc.circumference;
    a.degenerate = lc.circumference < 3;
    a.cycle_set_total = static_cast<int>(lc.vertex_sets.size());
    std::size_t take = lc.vertex_sets.size();
    if (max_sets > 0 && take > max_sets) {
        take = max_sets;
        a.partial = true;
    }
    for (std::size_t i = 0; i < take; ++i)
        a.entries.push_back(bound_for_set(g, lc.vertex_sets[i], a.circumference, a.delta, limits));
    return a;
}

namespace detail {

inline std::vector<CheckResult> theorem_results(const Graph& g, int which, const SolveLimits& limits) {
    if (g.order() == 0) throw UndefinedValueError("theorems need a nonempty graph");
    BoundAnalysis a = analyze_bounds(g, limits);
    if (a.degenerate)
        throw DegenerateCircumferenceError("circumference " + std::to_string(a.circumference) + " < 3");
    std::vector<CheckResult> out;
    for (const auto& e : a.entries) {
        const int bound = which == 1 ? e.bound1 : e.bound2;
        const int slack = which == 1 ? e.slack1 : e.slack2;
        CheckResult r{which == 1 ? "theorem1" : "theorem2", CheckStatus::passed, nullptr,
                      {{"graph6", serialize_graph6(g)},
                       {"cycle_set", to_json(e.cycle_set)},
                       {"circumference", a.circumference},
                       {"delta", a.delta},
                       {"p_bar", e.p_bar},
                       {"c_bar", e.c_bar},
                       {"bound", bound},
                       {"slack", slack},
                       {"sharp", slack == 0}}};
        if (slack < 0) {
            r.status = CheckStatus::failed;
            r.witness = r.context;
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace detail

/// |C| >= (p+2)(delta-p) for every longest cycle C, p the longest path of G - C.
inline std::vector<CheckResult> verify_theorem1(const Graph& g, const SolveLimits& limits = {}) {
    return detail::theorem_results(g, 1, limits);
}

/// |C| >= (c+1)(delta-c+1) for every longest cycle C, c the longest cycle of G - C.
inline std::vector<CheckResult> verify_theorem2(const Graph& g, const SolveLimits& limits = {}) {
    return detail::theorem_results(g, 2, limits);
}

/// Recomputes one entry with the brute-force oracle. Returns the oracle's view so a
/// suspected violation can be confirmed or blamed on the solver.
struct OracleRecheck {
    bool available = false;
    bool solver_agrees = false;
    int circumference = 0;
    int p_bar = 0;
    int c_bar = 0;
};

inline OracleRecheck recheck_with_oracle(const Graph& g, const CycleSetBound& e, int circumference,
                                         const SolveLimits& limits = {}) {
    OracleRecheck out;
    if (g.order() > limits.max_oracle_n) return out;
    out.available = true;
    const Graph rest = remove_vertices(g, e.cycle_set).graph;
    out.circumference = oracle::longest_cycle_length(g, limits);
    out.p_bar = oracle::longest_path_length(rest, limits);
    out.c_bar = oracle::longest_cycle_length(rest, limits);
    out.solver_agrees = out.circumference == circumference && out.p_bar == e.p_bar && out.c_bar == e.c_bar;
    return out;
}

} // namespace circum
