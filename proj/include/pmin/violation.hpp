#pragma once

#include <array>
#include <string_view>
#include <variant>
#include <vector>

#include "pmin/graph.hpp"

namespace pmin {

// ---- literal weight-condition evaluators -----------------------------------
// These work directly on graph objects and are the re-verification ground for
// every emitted certificate; the polynomial checkers never call them.

// a star triple is fine when its two largest weights are equal
inline bool star_triple_ok(Weight a, Weight b, Weight c) {
    Weight hi = std::max({a, b, c});
    int at_hi = (a == hi) + (b == hi) + (c == hi);
    return at_hi >= 2;
}

inline bool is_simple_cycle_of(const WeightedGraph& g, const std::vector<int>& verts) {
    const int m = static_cast<int>(verts.size());
    if (m < 3) return false;
    VertexSet sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (sorted.front() < 1 || sorted.back() > g.vertex_count()) return false;
    for (int i = 0; i < m; ++i)
        if (!g.has_edge(verts[static_cast<size_t>(i)], verts[static_cast<size_t>((i + 1) % m)]))
            return false;
    return true;
}

inline bool is_elementary_path_of(const WeightedGraph& g, const std::vector<int>& verts) {
    if (verts.size() < 2) return verts.size() == 1;
    VertexSet sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (sorted.front() < 1 || sorted.back() > g.vertex_count()) return false;
    for (size_t i = 0; i + 1 < verts.size(); ++i)
        if (!g.has_edge(verts[i], verts[i + 1])) return false;
    return true;
}

// a cycle together with its weights, chords, M and M̂
struct CycleView {
    std::vector<int> verts;
    std::vector<Weight> wts;    // wts[i] = w(verts[i], verts[i+1 mod m])
    std::vector<Edge> chords;   // graph edges between non-consecutive cycle vertices
    Weight max_edge = 0;        // M
    Weight max_hat = 0;         // M̂ over cycle edges and chords
};

inline CycleView make_cycle_view(const WeightedGraph& g, const std::vector<int>& verts) {
    CycleView c;
    c.verts = verts;
    const int m = static_cast<int>(verts.size());
    for (int i = 0; i < m; ++i) {
        Weight w = g.weight(verts[static_cast<size_t>(i)], verts[static_cast<size_t>((i + 1) % m)]);
        c.wts.push_back(w);
        c.max_edge = std::max(c.max_edge, w);
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
            if (consecutive) continue;
            int u = verts[static_cast<size_t>(i)], v = verts[static_cast<size_t>(j)];
            if (g.has_edge(u, v)) c.chords.push_back(make_edge(u, v, g.weight(u, v)));
        }
    std::sort(c.chords.begin(), c.chords.end());
    c.max_hat = c.max_edge;
    for (const Edge& e : c.chords) c.max_hat = std::max(c.max_hat, e.w);
    return c;
}

// Weak Cycle condition: at most two non-maximum weight edges, and two only if
// they are consecutive on the cycle
inline bool weak_cycle_ok(const CycleView& c) {
    const int m = static_cast<int>(c.wts.size());
    std::vector<int> low;
    for (int i = 0; i < m; ++i)
        if (c.wts[static_cast<size_t>(i)] < c.max_edge) low.push_back(i);
    if (low.size() > 2) return false;
    if (low.size() == 2) {
        int d = low[1] - low[0];
        return d == 1 || d == m - 1;
    }
    return true;
}

namespace detail {

// try every apex/direction renumbering with w1 <= w2 <= w3 = ... = wm and test
// the chord clauses there; `full` switches the equalities of the Cycle condition
inline bool chorded_cycle_ok(const CycleView& c, bool full) {
    const int m = static_cast<int>(c.wts.size());
    auto wt = [&](int i) { return c.wts[static_cast<size_t>(((i % m) + m) % m)]; };
    for (int p = 0; p < m; ++p) {
        for (int dir : {-1, +1}) {
            // apex verts[p]; e1 joins it backward, e2 forward along `dir`
            Weight w1 = dir == 1 ? wt(p - 1) : wt(p);
            Weight w2 = dir == 1 ? wt(p) : wt(p - 1);
            if (w1 > w2) continue;
            Weight rest = 0;
            bool uniform = true;
            for (int k = 0; k < m; ++k) {
                if (k == p || k == ((p - 1 + m) % m)) continue;
                if (rest == 0)
                    rest = wt(k);
                else if (wt(k) != rest)
                    uniform = false;
            }
            if (!uniform) continue;
            if (rest != 0 && w2 > rest) continue;  // needs w2 <= M
            if (rest != 0 && rest != c.max_edge) continue;
            int apex = c.verts[static_cast<size_t>(p)];
            bool ok = true;
            for (const Edge& e : c.chords) {
                bool incident = e.u == apex || e.v == apex;
                if (full) {
                    if (incident ? (e.w != w2) : (e.w != c.max_hat)) ok = false;
                } else {
                    if (incident && e.w > w2) ok = false;
                    if (w2 < c.max_hat) {
                        if (!incident && e.w != c.max_hat) ok = false;
                        if (incident && !(e.w == w2 || (e.w < w1 && w1 == w2))) ok = false;
                    } else if (w1 < w2) {  // w2 == M̂
                        if (e.w != c.max_hat) ok = false;
                    }
                }
                if (!ok) break;
            }
            if (ok && (full || w2 < c.max_hat)) {
                // cycle edges away from the apex must reach M̂ as well
                for (int k = 0; ok && k < m; ++k) {
                    if (k == p || k == ((p - 1 + m) % m)) continue;
                    if (wt(k) != c.max_hat) ok = false;
                }
            }
            if (ok) return true;
        }
    }
    return false;
}

}  // namespace detail

inline bool intermediary_cycle_ok(const CycleView& c) {
    return detail::chorded_cycle_ok(c, false);
}

inline bool full_cycle_ok(const CycleView& c) { return detail::chorded_cycle_ok(c, true); }

// ---- violation certificates -------------------------------------------------

enum class CycleRule { Weak, Intermediary, Full };

struct StarViolation {
    int center = 0;
    std::array<Edge, 3> edges{};
};

struct PathViolation {
    std::vector<int> vertices;
    int i = 0, j = 0, k = 0;  // 1-based edge indices with w_j > max(w_i, w_k)
};

struct CycleViolation {
    std::vector<int> vertices;
    CycleRule rule = CycleRule::Weak;
};

struct AdjacentCyclesViolation {
    std::vector<int> cycle_a;
    std::vector<int> cycle_b;
    std::vector<Edge> shared;  // the common non-maximum weight edges (2 or 1)
    bool second_part = false;
};

// Two certificate forms share this payload.  The lemma form (empty `path`)
// states that the cycle has the two-light-edges shape, no admissible {1,3}
// chord, and a component edge strictly below w1.  The pair form carries an
// explicit offending path attached at `attach`.
struct PanViolation {
    std::vector<int> cycle;
    int apex = 0;      // common vertex of the two light edges, 0 when shapeless
    Weight sigma = 0;  // minimum edge weight of the cycle's component
    int attach = 0;    // pair form: vertex shared by cycle and path
    std::vector<int> path;  // pair form: path vertices starting at attach
};

using Violation =
    std::variant<StarViolation, PathViolation, CycleViolation, AdjacentCyclesViolation, PanViolation>;

inline std::string_view violation_tag(const Violation& v) {
    struct Tagger {
        std::string_view operator()(const StarViolation&) const { return "star"; }
        std::string_view operator()(const PathViolation&) const { return "path"; }
        std::string_view operator()(const CycleViolation&) const { return "fundamental-cycle"; }
        std::string_view operator()(const AdjacentCyclesViolation& a) const {
            return a.second_part ? "adjacent-cycles-2" : "adjacent-cycles-1";
        }
        std::string_view operator()(const PanViolation&) const { return "pan"; }
    };
    return std::visit(Tagger{}, v);
}

// ---- independent re-verifier -------------------------------------------------

namespace detail {

inline bool edge_in_cycle(const std::vector<int>& verts, const Edge& e) {
    const int m = static_cast<int>(verts.size());
    for (int i = 0; i < m; ++i) {
        int a = verts[static_cast<size_t>(i)], b = verts[static_cast<size_t>((i + 1) % m)];
        if (a > b) std::swap(a, b);
        if (a == e.u && b == e.v) return true;
    }
    return false;
}

inline std::vector<Edge> common_edges(const std::vector<int>& a, const std::vector<int>& b,
                                      const WeightedGraph& g) {
    std::vector<Edge> out;
    const int m = static_cast<int>(a.size());
    for (int i = 0; i < m; ++i) {
        Edge e = make_edge(a[static_cast<size_t>(i)], a[static_cast<size_t>((i + 1) % m)], 0);
        e.w = g.weight(e.u, e.v);
        if (edge_in_cycle(b, e)) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// premises (a)-(d) of the adjacent-cycles condition; (b) is tested on `first`
inline bool adjacent_premises_hold(const WeightedGraph& g, const CycleView& first,
                                   const CycleView& second) {
    VertexSet va = canonical_set(first.verts), vb = canonical_set(second.verts);
    bool a_minus = false, b_minus = false;
    for (int v : va)
        if (!set_contains(vb, v)) a_minus = true;
    for (int v : vb)
        if (!set_contains(va, v)) b_minus = true;
    if (!a_minus || !b_minus) return false;  // (a)
    int low_chords = 0;
    for (const Edge& e : first.chords)
        if (e.w < first.max_hat) ++low_chords;
    if (low_chords > 1) return false;  // (b)
    for (const Edge& e : first.chords)
        if (e.w == first.max_hat) return false;  // (c)
    for (const Edge& e : second.chords)
        if (e.w == second.max_hat) return false;  // (c)
    for (const Edge& e : first.chords)
        for (const Edge& f : second.chords)
            if (e.u == f.u && e.v == f.v) return false;  // (d)
    (void)g;
    return true;
}

}  // namespace detail

inline bool verify_violation(const WeightedGraph& g, const Violation& violation) {
    struct Verifier {
        const WeightedGraph& g;

        bool operator()(const StarViolation& s) const {
            if (s.center < 1 || s.center > g.vertex_count()) return false;
            std::vector<Edge> es(s.edges.begin(), s.edges.end());
            std::sort(es.begin(), es.end());
            if (es[0] == es[1] || es[1] == es[2]) return false;
            for (const Edge& e : es) {
                if (e.u != s.center && e.v != s.center) return false;
                if (!g.has_edge(e.u, e.v) || g.weight(e.u, e.v) != e.w) return false;
            }
            return !star_triple_ok(es[0].w, es[1].w, es[2].w);
        }

        bool operator()(const PathViolation& p) const {
            if (!is_elementary_path_of(g, p.vertices)) return false;
            int m = static_cast<int>(p.vertices.size()) - 1;
            if (!(1 <= p.i && p.i < p.j && p.j < p.k && p.k <= m)) return false;
            auto wt = [&](int idx) {
                return g.weight(p.vertices[static_cast<size_t>(idx - 1)],
                                p.vertices[static_cast<size_t>(idx)]);
            };
            return wt(p.j) > std::max(wt(p.i), wt(p.k));
        }

        bool operator()(const CycleViolation& c) const {
            if (!is_simple_cycle_of(g, c.vertices)) return false;
            CycleView view = make_cycle_view(g, c.vertices);
            switch (c.rule) {
                case CycleRule::Weak: return !weak_cycle_ok(view);
                case CycleRule::Intermediary: return !intermediary_cycle_ok(view);
                case CycleRule::Full: return !full_cycle_ok(view);
            }
            return false;
        }

        bool operator()(const AdjacentCyclesViolation& a) const {
            if (!is_simple_cycle_of(g, a.cycle_a) || !is_simple_cycle_of(g, a.cycle_b)) return false;
            CycleView ca = make_cycle_view(g, a.cycle_a);
            CycleView cb = make_cycle_view(g, a.cycle_b);
            if (!detail::adjacent_premises_hold(g, ca, cb) &&
                !detail::adjacent_premises_hold(g, cb, ca))
                return false;
            std::vector<Edge> common = detail::common_edges(a.cycle_a, a.cycle_b, g);
            std::vector<Edge> common_low;
            for (const Edge& e : common)
                if (e.w < ca.max_edge && e.w < cb.max_edge) common_low.push_back(e);
            for (const Edge& e : a.shared) {
                if (!g.has_edge(e.u, e.v) || g.weight(e.u, e.v) != e.w) return false;
                bool found = false;
                for (const Edge& f : common_low)
                    if (f.u == e.u && f.v == e.v) found = true;
                if (!found) return false;
            }
            if (!a.second_part) return a.shared.size() == 2 && common_low.size() >= 2;
            if (a.shared.size() != 1 || common_low.size() != 1) return false;
            const Edge e1 = common_low.front();
            // no adjacent non-maximum (e2, e2') pair may satisfy even the weak
            // relation w1 = w2 >= w2' or w1 = w2' >= w2
            for (int x : {e1.u, e1.v}) {
                for (const Edge& e2 : edges_at(ca, a.cycle_b, x, e1)) {
                    for (const Edge& e2p : edges_at(cb, a.cycle_a, x, e1)) {
                        Weight w2 = e2.w, w2p = e2p.w;
                        if ((e1.w == w2 && w2 >= w2p) || (e1.w == w2p && w2p >= w2)) return false;
                    }
                }
            }
            return true;
        }

        // non-maximum edges of `c` incident to x and absent from the other cycle
        std::vector<Edge> edges_at(const CycleView& c, const std::vector<int>& other, int x,
                                   const Edge& skip) const {
            std::vector<Edge> out;
            const int m = static_cast<int>(c.verts.size());
            for (int i = 0; i < m; ++i) {
                Edge e = make_edge(c.verts[static_cast<size_t>(i)],
                                   c.verts[static_cast<size_t>((i + 1) % m)], 0);
                e.w = g.weight(e.u, e.v);
                if (e.u == skip.u && e.v == skip.v) continue;
                if (e.u != x && e.v != x) continue;
                if (e.w >= c.max_edge) continue;
                if (detail::edge_in_cycle(other, e)) continue;
                out.push_back(e);
            }
            return out;
        }

        bool operator()(const PanViolation& p) const {
            if (!is_simple_cycle_of(g, p.cycle)) return false;
            const int m = static_cast<int>(p.cycle.size());
            CycleView view = make_cycle_view(g, p.cycle);
            // shape of the cycle against the pan claims
            std::vector<int> low;
            for (int i = 0; i < m; ++i)
                if (view.wts[static_cast<size_t>(i)] < view.max_hat) low.push_back(i);
            bool shape_a = low.empty();
            bool shape_b = false;
            int apex = 0;
            Weight w1 = 0;
            if (low.size() == 2) {
                int d = low[1] - low[0];
                bool adjacent = d == 1 || d == m - 1;
                if (adjacent &&
                    view.wts[static_cast<size_t>(low[0])] == view.wts[static_cast<size_t>(low[1])]) {
                    shape_b = true;
                    apex = d == 1 ? p.cycle[static_cast<size_t>(low[1])] : p.cycle[0];
                    w1 = view.wts[static_cast<size_t>(low[0])];
                }
            }
            if (p.path.empty()) {
                // lemma form: two-light shape, no {1,3} chord of weight >= w1,
                // and a strictly lighter edge elsewhere in the component
                if (!shape_b || p.apex != apex) return false;
                int at = 0;
                for (int i = 0; i < m; ++i)
                    if (p.cycle[static_cast<size_t>(i)] == apex) at = i;
                int prev = p.cycle[static_cast<size_t>((at - 1 + m) % m)];
                int next = p.cycle[static_cast<size_t>((at + 1) % m)];
                if (g.has_edge(prev, next) && g.weight(prev, next) >= w1) return false;
                std::vector<int> comp = component_ids(g);
                Weight sigma = 0;
                for (const Edge& e : g.edges())
                    if (comp[static_cast<size_t>(e.u)] == comp[static_cast<size_t>(apex)])
                        sigma = sigma == 0 ? e.w : std::min(sigma, e.w);
                return sigma == p.sigma && sigma < w1;
            }
            // pair form: an explicit path meeting the cycle exactly at `attach`
            // and carrying a qualifying light edge
            if (shape_a) return false;
            if (!is_elementary_path_of(g, p.path)) return false;
            if (p.path.size() < 2 || p.path.front() != p.attach) return false;
            VertexSet cyc = canonical_set(p.cycle);
            int met = 0;
            for (int v : p.path)
                if (set_contains(cyc, v)) ++met;
            if (met != 1 || !set_contains(cyc, p.attach)) return false;
            Weight sigma_c = view.wts[0];
            for (Weight w : view.wts) sigma_c = std::min(sigma_c, w);
            Weight lightest = g.weight(p.path[0], p.path[1]);
            for (size_t t = 0; t + 1 < p.path.size(); ++t)
                lightest = std::min(lightest, g.weight(p.path[t], p.path[t + 1]));
            if (lightest > sigma_c) return false;
            if (!shape_b) return true;            // weak pan broken outright
            if (p.attach != apex) return true;    // attach must be the apex
            // full pan clause: strictly lighter handle and no maximum {1,3} chord
            if (lightest >= w1) return false;
            int at = 0;
            for (int i = 0; i < m; ++i)
                if (p.cycle[static_cast<size_t>(i)] == apex) at = i;
            int prev = p.cycle[static_cast<size_t>((at - 1 + m) % m)];
            int next = p.cycle[static_cast<size_t>((at + 1) % m)];
            return !(g.has_edge(prev, next) && g.weight(prev, next) == view.max_hat);
        }
    };
    return std::visit(Verifier{g}, violation);
}

}  // namespace pmin
