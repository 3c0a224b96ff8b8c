#pragma once

#include <string>

#include <json.hpp>

#include "pmin/checkers.hpp"
#include "pmin/graph.hpp"
#include "pmin/oracle.hpp"
#include "pmin/pmin.hpp"

namespace pmin {

using Json = nlohmann::ordered_json;

inline Json edge_to_json(const Edge& e) { return Json::array({e.u, e.v, e.w}); }

inline Json violation_to_json(const Violation& violation) {
    Json out;
    out["tag"] = std::string(violation_tag(violation));
    struct Payload {
        Json& out;
        void operator()(const StarViolation& s) const {
            out["center"] = s.center;
            Json edges = Json::array();
            for (const Edge& e : s.edges) edges.push_back(edge_to_json(e));
            out["edges"] = std::move(edges);
        }
        void operator()(const PathViolation& p) const {
            out["vertices"] = p.vertices;
            out["i"] = p.i;
            out["j"] = p.j;
            out["k"] = p.k;
        }
        void operator()(const CycleViolation& c) const {
            out["cycle"] = c.vertices;
            out["rule"] = c.rule == CycleRule::Weak          ? "weak"
                          : c.rule == CycleRule::Intermediary ? "intermediary"
                                                              : "full";
        }
        void operator()(const AdjacentCyclesViolation& a) const {
            out["cycle_a"] = a.cycle_a;
            out["cycle_b"] = a.cycle_b;
            Json shared = Json::array();
            for (const Edge& e : a.shared) shared.push_back(edge_to_json(e));
            out["shared"] = std::move(shared);
        }
        void operator()(const PanViolation& p) const {
            out["cycle"] = p.cycle;
            out["apex"] = p.apex;
            out["sigma"] = p.sigma;
            if (!p.path.empty()) {
                out["attach"] = p.attach;
                out["path"] = p.path;
            }
        }
    };
    std::visit(Payload{out}, violation);
    return out;
}

inline Json check_report_to_json(const WeightedGraph& g, const DecisionReport& report) {
    Json out;
    out["verdict"] = report.inherits ? "INHERITS" : "VIOLATES";
    Json stages = Json::array();
    for (const StageResult& s : report.stages) {
        Json stage;
        stage["name"] = s.name;
        stage["status"] = s.status == StageStatus::Pass   ? "pass"
                          : s.status == StageStatus::Fail ? "fail"
                                                          : "skipped";
        stage["millis"] = s.millis;
        stages.push_back(std::move(stage));
    }
    out["stages"] = std::move(stages);
    out["violation"] = report.violation ? violation_to_json(*report.violation) : Json(nullptr);
    out["graph"] = Json{{"n", g.vertex_count()}, {"m", g.edge_count()}};
    return out;
}

inline std::string check_report_to_text(const WeightedGraph& g, const DecisionReport& report) {
    std::string out = "verdict: ";
    out += report.inherits ? "INHERITS" : "VIOLATES";
    out += "\n";
    for (const StageResult& s : report.stages) {
        out += "stage " + s.name + ": ";
        out += s.status == StageStatus::Pass   ? "pass"
               : s.status == StageStatus::Fail ? "fail"
                                               : "skipped";
        if (s.status != StageStatus::Skipped) out += " (" + std::to_string(s.millis) + " ms)";
        out += "\n";
    }
    if (report.violation)
        out += "violation: " + violation_to_json(*report.violation).dump() + "\n";
    out += "graph: n=" + std::to_string(g.vertex_count()) +
           " m=" + std::to_string(g.edge_count()) + "\n";
    return out;
}

inline Json oracle_report_to_json(const WeightedGraph& g,
                                  const std::optional<oracle::InheritanceWitness>& witness,
                                  bool theorem2_pass) {
    Json out;
    out["verdict"] = witness ? "VIOLATES" : "INHERITS";
    if (witness) {
        out["s"] = witness->s;
        out["witness"] = Json{{"a", witness->witness.a},
                              {"b", witness->witness.b},
                              {"delta", witness->witness.delta}};
    } else {
        out["s"] = Json(nullptr);
        out["witness"] = Json(nullptr);
    }
    out["theorem2"] = theorem2_pass ? "pass" : "fail";
    out["graph"] = Json{{"n", g.vertex_count()}, {"m", g.edge_count()}};
    return out;
}

inline std::string oracle_report_to_text(const WeightedGraph& g,
                                         const std::optional<oracle::InheritanceWitness>& witness,
                                         bool theorem2_pass) {
    std::string out = "verdict: ";
    out += witness ? "VIOLATES" : "INHERITS";
    out += "\n";
    if (witness) {
        Json j = oracle_report_to_json(g, witness, theorem2_pass);
        out += "s: " + j["s"].dump() + "\n";
        out += "witness: " + j["witness"].dump() + "\n";
    }
    out += std::string("theorem2: ") + (theorem2_pass ? "pass" : "fail") + "\n";
    out += "graph: n=" + std::to_string(g.vertex_count()) +
           " m=" + std::to_string(g.edge_count()) + "\n";
    return out;
}

inline Json partition_report_to_json(const WeightedGraph& g, const VertexSet& subset,
                                     const std::optional<VertexSet>& unanimity) {
    Json out;
    Json sigma = Json::array();
    for (const Edge& e : min_weight_edges(g, subset)) sigma.push_back(edge_to_json(e));
    out["subset"] = subset;
    out["min_weight_edges"] = std::move(sigma);
    Json blocks = Json::array();
    for (const VertexSet& b : pmin_partition(g, subset).blocks) blocks.push_back(b);
    out["blocks"] = std::move(blocks);
    if (unanimity) {
        out["unanimity"] = *unanimity;
        out["restricted_value"] =
            restricted_value(g, Game::unanimity(g.vertex_count(), *unanimity), subset);
    } else {
        out["unanimity"] = Json(nullptr);
        out["restricted_value"] = Json(nullptr);
    }
    return out;
}

inline std::string partition_report_to_text(const WeightedGraph& g, const VertexSet& subset,
                                            const std::optional<VertexSet>& unanimity) {
    Json j = partition_report_to_json(g, subset, unanimity);
    std::string out = "subset: " + j["subset"].dump() + "\n";
    out += "min_weight_edges: " + j["min_weight_edges"].dump() + "\n";
    out += "blocks: " + j["blocks"].dump() + "\n";
    if (unanimity) {
        out += "unanimity: " + j["unanimity"].dump() + "\n";
        out += "restricted_value: " + j["restricted_value"].dump() + "\n";
    }
    return out;
}

}  // namespace pmin
