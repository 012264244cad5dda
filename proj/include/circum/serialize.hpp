#pragma once

#include "json.hpp"

#include "circum/graph.hpp"
#include "circum/io.hpp"
#include "circum/spreading.hpp"

namespace circum {

inline nlohmann::json to_json(VertexSet s) { return s.to_vector(); }

inline nlohmann::json to_json(const Spreading& s) {
    nlohmann::json paths = nlohmann::json::array();
    for (const auto& p : s.paths) paths.push_back(p);
    return {
        {"removed", to_json(s.removed)},
        {"host", s.host.vertices()},
        {"host_kind", s.host.kind() == HostKind::path ? "path" : "cycle"},
        {"paths", paths},
    };
}

inline nlohmann::json to_json(const SpreadingClassification& c) {
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : c.roots) {
        nlohmann::json rec = {
            {"root", r.root},
            {"end", r.end},
            {"phi", to_json(r.phi)},
            {"psi", to_json(r.psi)},
            {"b", to_json(r.b)},
            {"b_star", to_json(r.b_star)},
        };
        rec["successor"] = r.successor ? nlohmann::json(*r.successor) : nlohmann::json(nullptr);
        roots.push_back(std::move(rec));
    }
    nlohmann::json out = {
        {"host_length", c.host_length},
        {"U0", to_json(c.u0)},
        {"U0_bar", to_json(c.u0_bar)},
        {"U_star", to_json(c.u_star)},
        {"U1", to_json(c.u1)},
        {"roots", roots},
    };
    if (c.kind == HostKind::cycle) {
        out["U_star1"] = to_json(c.u_star1);
        out["U_star2"] = to_json(c.u_star2);
    }
    return out;
}

} // namespace circum
