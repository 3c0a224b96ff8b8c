#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "pmin/graph.hpp"
#include "pmin/mst.hpp"
#include "pmin/violation.hpp"

namespace pmin {

enum class StageStatus { Pass, Fail, Skipped };

struct StageResult {
    std::string name;
    StageStatus status = StageStatus::Skipped;
    long long millis = 0;
};

struct DecisionReport {
    bool inherits = false;
    std::vector<StageResult> stages;
    std::optional<Violation> violation;
};

// Star condition: every vertex keeps a (min, max) register pair while scanning
// its incident edges; a second sub-maximum weight stops the scan.
inline std::optional<Violation> check_star(const WeightedGraph& g) {
    const int n = g.vertex_count();
    for (int c = 1; c <= n; ++c) {
        std::vector<Edge> inc;
        g.for_neighbors(c, [&](int v, Weight w) { inc.push_back(make_edge(c, v, w)); });
        if (inc.size() < 3) continue;
        Edge lo = inc[0], hi = inc[1];
        if (lo.w > hi.w) std::swap(lo, hi);
        for (size_t k = 2; k < inc.size(); ++k) {
            const Edge e = inc[k];
            if (lo.w == hi.w) {
                if (e.w <= hi.w) {
                    lo = e;
                    continue;
                }
            } else if (e.w == hi.w) {
                continue;
            }
            std::array<Edge, 3> triple{lo, hi, e};
            std::sort(triple.begin(), triple.end());
            return Violation{StarViolation{c, triple}};
        }
    }
    return std::nullopt;
}

namespace detail {

// tree adjacency restricted to one spanning tree
inline std::vector<std::vector<int>> tree_adjacency(const WeightedGraph& g,
                                                    const SpanningTree& t) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()) + 1);
    for (const Edge& e : t.edges) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

inline Violation path_witness(const WeightedGraph& g, const std::vector<int>& verts) {
    const int m = static_cast<int>(verts.size()) - 1;
    auto wt = [&](int idx) {
        return g.weight(verts[static_cast<size_t>(idx - 1)], verts[static_cast<size_t>(idx)]);
    };
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (wt(j) > wt(i) && wt(j) > wt(m)) return Violation{PathViolation{verts, i, j, m}};
    // callers only reach this with a genuine increase-then-decrease prefix
    return Violation{PathViolation{verts, 1, 2, m}};
}

inline bool weak_cycle_violation(const WeightedGraph& g, const Cycle& cycle) {
    CycleView view = make_cycle_view(g, cycle.vertices);
    return !weak_cycle_ok(view);
}

}  // namespace detail

// Path condition via one minimum spanning tree per component: label-checked
// root paths in T plus the Weak Cycle test on every fundamental cycle.
inline std::optional<Violation> check_path(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<SpanningTree> forest = prim_mst(g);
    for (const SpanningTree& tree : forest) {
        auto adj = detail::tree_adjacency(g, tree);
        for (int root : tree.vertices) {
            // BFS arborescence; a weight drop after any strict rise breaks the condition
            std::vector<int> parent(static_cast<size_t>(n) + 1, 0);
            std::vector<Weight> in_w(static_cast<size_t>(n) + 1, 0);
            std::vector<char> rose(static_cast<size_t>(n) + 1, 0);
            std::vector<int> queue{root};
            parent[static_cast<size_t>(root)] = root;
            for (size_t head = 0; head < queue.size(); ++head) {
                int u = queue[head];
                for (int v : adj[static_cast<size_t>(u)]) {
                    if (parent[static_cast<size_t>(v)] != 0) continue;
                    Weight w = g.weight(u, v);
                    parent[static_cast<size_t>(v)] = u;
                    if (u == root) {
                        in_w[static_cast<size_t>(v)] = w;
                        rose[static_cast<size_t>(v)] = 0;
                    } else {
                        if (w < in_w[static_cast<size_t>(u)] && rose[static_cast<size_t>(u)]) {
                            std::vector<int> rev{v};
                            while (rev.back() != root)
                                rev.push_back(parent[static_cast<size_t>(rev.back())]);
                            std::reverse(rev.begin(), rev.end());
                            return detail::path_witness(g, rev);
                        }
                        in_w[static_cast<size_t>(v)] = w;
                        rose[static_cast<size_t>(v)] =
                            w > in_w[static_cast<size_t>(u)] ? 1 : rose[static_cast<size_t>(u)];
                    }
                    queue.push_back(v);
                }
            }
        }
        for (const Edge& e : g.edges()) {
            if (!tree.contains(e.u) || !tree.contains(e.v)) continue;
            if (tree.has_tree_edge(e.u, e.v)) continue;
            Cycle cycle = fundamental_cycle(tree, e);
            if (detail::weak_cycle_violation(g, cycle))
                return Violation{CycleViolation{cycle.vertices, CycleRule::Weak}};
        }
    }
    return std::nullopt;
}

// First part of the adjacent cycles condition: for each adjacent edge pair,
// look for two vertex-separated heavy return paths between the outer ends.
inline std::optional<Violation> check_adjacent_part1(const WeightedGraph& g) {
    const int n = g.vertex_count();
    VertexSet all = g.vertices();
    for (int b = 1; b <= n; ++b) {
        std::vector<int> nbrs;
        g.for_neighbors(b, [&](int v, Weight) { nbrs.push_back(v); });
        VertexSet without_b;
        for (int v : all)
            if (v != b) without_b.push_back(v);
        for (size_t ia = 0; ia < nbrs.size(); ++ia) {
            for (size_t ic = ia + 1; ic < nbrs.size(); ++ic) {
                int v1 = nbrs[ia], v3 = nbrs[ic];
                Weight w_ab = g.weight(v1, b), w_bc = g.weight(b, v3);
                if (w_ab > w_bc) std::swap(v1, v3);
                const Weight wmax = std::max(w_ab, w_bc);
                auto gamma = shortest_path(g, v1, v3, without_b, EdgeFilter::weight_above(wmax));
                if (!gamma) continue;
                const std::vector<int>& gv = gamma->vertices;
                const int hops = gamma->edge_count();

                std::vector<int> chord_pos;  // γ positions adjacent to b
                for (int q = 1; q < hops; ++q)
                    if (g.has_edge(b, gv[static_cast<size_t>(q)])) chord_pos.push_back(q);

                auto report = [&](std::vector<int> c_verts, std::vector<int> cp_verts, int e1u,
                                  int e2u) {
                    std::vector<Edge> shared{make_edge(b, e1u, g.weight(b, e1u)),
                                             make_edge(b, e2u, g.weight(b, e2u))};
                    std::sort(shared.begin(), shared.end());
                    return Violation{AdjacentCyclesViolation{
                        canonical_cycle(std::move(c_verts)).vertices,
                        canonical_cycle(std::move(cp_verts)).vertices, shared, false}};
                };

                if (chord_pos.empty()) {
                    for (int q = 1; q < hops; ++q) {
                        VertexSet allowed;
                        for (int v : without_b)
                            if (v != gv[static_cast<size_t>(q)]) allowed.push_back(v);
                        auto gamma2 =
                            shortest_path(g, v1, v3, allowed, EdgeFilter::weight_above(wmax));
                        if (!gamma2) continue;
                        std::vector<int> c_verts{b};
                        c_verts.insert(c_verts.end(), gv.begin(), gv.end());
                        std::vector<int> cp_verts{b};
                        cp_verts.insert(cp_verts.end(), gamma2->vertices.begin(),
                                        gamma2->vertices.end());
                        return report(std::move(c_verts), std::move(cp_verts), v1, v3);
                    }
                } else {
                    // re-center on the chord with the lowest vertex index and its
                    // nearest chords (or the original edges) on either side
                    int qi = chord_pos.front();
                    for (int q : chord_pos)
                        if (gv[static_cast<size_t>(q)] < gv[static_cast<size_t>(qi)]) qi = q;
                    int qk = 0;
                    for (int q = qi - 1; q >= 1; --q)
                        if (g.has_edge(b, gv[static_cast<size_t>(q)])) {
                            qk = q;
                            break;
                        }
                    int qj = hops;
                    for (int q = qi + 1; q < hops; ++q)
                        if (g.has_edge(b, gv[static_cast<size_t>(q)])) {
                            qj = q;
                            break;
                        }
                    VertexSet allowed;
                    for (int v : without_b)
                        if (v != gv[static_cast<size_t>(qi)]) allowed.push_back(v);
                    auto gamma2 = shortest_path(g, gv[static_cast<size_t>(qk)],
                                                gv[static_cast<size_t>(qj)], allowed,
                                                EdgeFilter::weight_above(wmax));
                    if (gamma2) {
                        std::vector<int> c_verts{b};
                        for (int q = qk; q <= qj; ++q) c_verts.push_back(gv[static_cast<size_t>(q)]);
                        std::vector<int> cp_verts{b};
                        cp_verts.insert(cp_verts.end(), gamma2->vertices.begin(),
                                        gamma2->vertices.end());
                        return report(std::move(c_verts), std::move(cp_verts),
                                      gv[static_cast<size_t>(qk)], gv[static_cast<size_t>(qj)]);
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// Weak second part: removing one edge and one interior vertex of a shortest
// return path must leave a weight-w1 edge next to the removed edge.
inline std::optional<Violation> check_adjacent_part2_weak(const WeightedGraph& g) {
    VertexSet all = g.vertices();
    for (const Edge& e1 : g.edges()) {
        auto gamma = shortest_path(g, e1.u, e1.v, all, EdgeFilter::excluding(e1.u, e1.v));
        if (!gamma) continue;
        const std::vector<int>& gv = gamma->vertices;
        for (size_t q = 1; q + 1 < gv.size(); ++q) {
            VertexSet allowed;
            for (int v : all)
                if (v != gv[q]) allowed.push_back(v);
            auto gamma2 = shortest_path(g, e1.u, e1.v, allowed, EdgeFilter::excluding(e1.u, e1.v));
            if (!gamma2) continue;
            bool found_w1 = false;
            bool lighter = false;
            auto inspect = [&](const std::vector<int>& p) {
                for (size_t t = 0; t + 1 < p.size(); ++t) {
                    Weight w = g.weight(p[t], p[t + 1]);
                    if (w < e1.w) lighter = true;
                    bool touches = p[t] == e1.u || p[t] == e1.v || p[t + 1] == e1.u ||
                                   p[t + 1] == e1.v;
                    if (touches && w == e1.w) found_w1 = true;
                }
            };
            inspect(gv);
            inspect(gamma2->vertices);
            if (!found_w1 || lighter)
                return Violation{AdjacentCyclesViolation{canonical_cycle(gv).vertices,
                                                         canonical_cycle(gamma2->vertices).vertices,
                                                         {e1},
                                                         true}};
        }
    }
    return std::nullopt;
}

// Pan condition after all other stages: equal-weight adjacent pairs must close
// only into cycles whose weight equals w1 or whose component minimum is w1.
inline std::optional<Violation> check_pan(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp = component_ids(g);
    std::vector<Weight> comp_min(static_cast<size_t>(n) + 2, 0);
    for (const Edge& e : g.edges()) {
        Weight& slot = comp_min[static_cast<size_t>(comp[static_cast<size_t>(e.u)])];
        slot = slot == 0 ? e.w : std::min(slot, e.w);
    }
    VertexSet all = g.vertices();
    for (int b = 1; b <= n; ++b) {
        std::vector<int> nbrs;
        g.for_neighbors(b, [&](int v, Weight) { nbrs.push_back(v); });
        VertexSet without_b;
        for (int v : all)
            if (v != b) without_b.push_back(v);
        for (size_t ia = 0; ia < nbrs.size(); ++ia) {
            for (size_t ic = ia + 1; ic < nbrs.size(); ++ic) {
                int v1 = nbrs[ia], v3 = nbrs[ic];
                const Weight w1 = g.weight(v1, b);
                if (w1 != g.weight(b, v3)) continue;
                auto gamma = shortest_path(g, v1, v3, without_b, EdgeFilter::weight_at_least(w1));
                if (!gamma || gamma->edge_count() < 2) continue;
                Weight m = 0;
                for (size_t t = 0; t + 1 < gamma->vertices.size(); ++t)
                    m = std::max(m, g.weight(gamma->vertices[t], gamma->vertices[t + 1]));
                if (w1 == m) continue;
                if (w1 == comp_min[static_cast<size_t>(comp[static_cast<size_t>(v1)])]) continue;
                std::vector<int> c_verts{b};
                c_verts.insert(c_verts.end(), gamma->vertices.begin(), gamma->vertices.end());
                return Violation{PanViolation{
                    canonical_cycle(std::move(c_verts)).vertices, b,
                    comp_min[static_cast<size_t>(comp[static_cast<size_t>(v1)])], 0, {}}};
            }
        }
    }
    return std::nullopt;
}

// Full pipeline; later stages assume the earlier conditions and are skipped
// after the first failure.
inline DecisionReport decide_inheritance(const WeightedGraph& g) {
    using Clock = std::chrono::steady_clock;
    struct Stage {
        const char* name;
        std::optional<Violation> (*run)(const WeightedGraph&);
    };
    static constexpr Stage kStages[] = {
        {"star", check_star},
        {"path", check_path},
        {"adjacent1", check_adjacent_part1},
        {"adjacent2weak", check_adjacent_part2_weak},
        {"pan", check_pan},
    };
    DecisionReport report;
    report.inherits = true;
    for (const Stage& stage : kStages) {
        StageResult result;
        result.name = stage.name;
        if (!report.inherits) {
            result.status = StageStatus::Skipped;
            report.stages.push_back(std::move(result));
            continue;
        }
        auto t0 = Clock::now();
        std::optional<Violation> violation = stage.run(g);
        auto t1 = Clock::now();
        result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        if (violation) {
            result.status = StageStatus::Fail;
            report.inherits = false;
            report.violation = std::move(violation);
        } else {
            result.status = StageStatus::Pass;
        }
        report.stages.push_back(std::move(result));
    }
    return report;
}

}  // namespace pmin
