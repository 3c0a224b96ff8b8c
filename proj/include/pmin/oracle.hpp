#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pmin/graph.hpp"
#include "pmin/pmin.hpp"
#include "pmin/violation.hpp"

namespace pmin::oracle {

inline constexpr int kSubsetCap = 12;  // subset-pair enumerations
inline constexpr int kCycleCap = 9;    // cycle/path enumerations

struct ConvexityWitness {
    VertexSet a;
    VertexSet b;
    long long delta = 0;
};

struct InheritanceWitness {
    VertexSet s;
    ConvexityWitness witness;
};

struct Theorem2Witness {
    int pivot = 0;  // the added vertex i
    VertexSet a;
    VertexSet b;
    VertexSet a_prime;
};

struct SuperadditivityWitness {
    VertexSet a;
    VertexSet b;
};

enum class Condition { Star, Path, WeakCycle, IntermediaryCycle, Cycle, WeakPan, Pan, AdjacentCycles };

// Δv̄(A,B) = v̄(A∪B) + v̄(A∩B) − v̄(A) − v̄(B)
inline long long delta(const WeightedGraph& g, const Game& v, const VertexSet& a,
                       const VertexSet& b) {
    return restricted_value(g, v, set_union(a, b)) + restricted_value(g, v, set_intersection(a, b)) -
           restricted_value(g, v, a) - restricted_value(g, v, b);
}

namespace detail {

// per-subset tables over bitmasks (vertex v <-> bit v-1)
struct MaskContext {
    int n = 0;
    uint32_t full = 0;
    std::vector<uint32_t> nbr;                   // neighbor mask per vertex
    std::vector<char> connected;                 // nonempty + induced-connected
    std::vector<std::vector<uint32_t>> blocks;   // P_min blocks per mask
};

inline VertexSet mask_to_set(uint32_t mask) {
    VertexSet s;
    for (int v = 1; mask; ++v, mask >>= 1)
        if (mask & 1u) s.push_back(v);
    return s;
}

inline uint32_t set_to_mask(const VertexSet& s) {
    uint32_t m = 0;
    for (int v : s) m |= 1u << (v - 1);
    return m;
}

inline MaskContext build_context(const WeightedGraph& g) {
    const int n = g.vertex_count();
    if (n > kSubsetCap) throw std::invalid_argument("oracle subset enumeration capped at n <= 12");
    MaskContext ctx;
    ctx.n = n;
    ctx.full = n == 0 ? 0 : ((1u << n) - 1);
    ctx.nbr.assign(static_cast<size_t>(n) + 1, 0);
    for (const Edge& e : g.edges()) {
        ctx.nbr[static_cast<size_t>(e.u)] |= 1u << (e.v - 1);
        ctx.nbr[static_cast<size_t>(e.v)] |= 1u << (e.u - 1);
    }
    const size_t count = size_t{1} << n;
    ctx.connected.assign(count, 0);
    ctx.blocks.assign(count, {});
    for (uint32_t mask = 1; mask < count; ++mask) {
        // connectivity by flood fill inside the mask
        uint32_t seed = mask & (~mask + 1);
        uint32_t reach = seed;
        while (true) {
            uint32_t grow = reach;
            for (int v = 1; v <= n; ++v)
                if (reach & (1u << (v - 1))) grow |= ctx.nbr[static_cast<size_t>(v)] & mask;
            if (grow == reach) break;
            reach = grow;
        }
        ctx.connected[mask] = (reach == mask);

        // P_min blocks: drop minimum-weight edges of E(mask), flood what remains
        Weight lo = 0;
        for (const Edge& e : g.edges())
            if ((mask & (1u << (e.u - 1))) && (mask & (1u << (e.v - 1))))
                lo = lo == 0 ? e.w : std::min(lo, e.w);
        uint32_t left = mask;
        while (left) {
            uint32_t s = left & (~left + 1);
            uint32_t comp = s;
            while (true) {
                uint32_t grow = comp;
                for (int v = 1; v <= n; ++v) {
                    if (!(comp & (1u << (v - 1)))) continue;
                    for (int u = 1; u <= n; ++u) {
                        if (!(mask & (1u << (u - 1))) || u == v) continue;
                        Weight w = g.weight(std::min(u, v), std::max(u, v));
                        if (w > lo) grow |= 1u << (u - 1);
                    }
                }
                grow &= mask;
                if (grow == comp) break;
                comp = grow;
            }
            ctx.blocks[mask].push_back(comp);
            left &= ~comp;
        }
    }
    return ctx;
}

inline long long restricted_mask_value(const MaskContext& ctx, const Game& game, uint32_t mask) {
    if (mask == 0) return 0;
    long long total = 0;
    for (uint32_t b : ctx.blocks[mask]) total += game.value(mask_to_set(b));
    return total;
}

inline std::optional<ConvexityWitness> f_convex_witness(const MaskContext& ctx,
                                                        const std::vector<long long>& vbar) {
    const uint32_t count = ctx.full;
    for (uint32_t a = 1; a <= count; ++a) {
        if (!ctx.connected[a]) continue;
        for (uint32_t b = 1; b <= count; ++b) {
            if (!ctx.connected[b]) continue;
            uint32_t inter = a & b;
            if (inter == 0 || !ctx.connected[inter]) continue;
            long long d = vbar[a | b] + vbar[inter] - vbar[a] - vbar[b];
            if (d < 0) return ConvexityWitness{mask_to_set(a), mask_to_set(b), d};
        }
    }
    return std::nullopt;
}

}  // namespace detail

// pass iff Δv̄(A,B) ≥ 0 for all connected A, B with nonempty connected A∩B;
// otherwise the first witness in ascending bitmask order
inline std::optional<ConvexityWitness> is_f_convex_restricted(const WeightedGraph& g,
                                                              const Game& game) {
    detail::MaskContext ctx = detail::build_context(g);
    std::vector<long long> vbar(size_t{1} << ctx.n, 0);
    for (uint32_t mask = 1; mask <= ctx.full && ctx.full; ++mask)
        vbar[mask] = detail::restricted_mask_value(ctx, game, mask);
    return detail::f_convex_witness(ctx, vbar);
}

// pass iff every restricted unanimity game is F-convex
inline std::optional<InheritanceWitness> inheritance_oracle(const WeightedGraph& g) {
    detail::MaskContext ctx = detail::build_context(g);
    std::vector<long long> ubar(size_t{1} << ctx.n, 0);
    for (uint32_t s = 1; s <= ctx.full && ctx.full; ++s) {
        for (uint32_t mask = 1; mask <= ctx.full; ++mask) {
            long long val = 0;
            for (uint32_t b : ctx.blocks[mask])
                if ((b & s) == s) val = 1;
            ubar[mask] = val;
        }
        if (auto w = detail::f_convex_witness(ctx, ubar))
            return InheritanceWitness{detail::mask_to_set(s), *w};
    }
    return std::nullopt;
}

// pass iff for all i and all connected A ⊆ B ⊆ N\{i} with A∪{i} connected,
// the restrictions of P_min(A) and P_min(B) agree on every block of P_min(A∪{i})
inline std::optional<Theorem2Witness> theorem2_criterion(const WeightedGraph& g) {
    detail::MaskContext ctx = detail::build_context(g);
    auto restriction = [&](uint32_t mask, uint32_t to) {
        std::vector<uint32_t> out;
        for (uint32_t b : ctx.blocks[mask])
            if (uint32_t cut = b & to) out.push_back(cut);
        std::sort(out.begin(), out.end());
        return out;
    };
    for (int i = 1; i <= ctx.n; ++i) {
        const uint32_t ibit = 1u << (i - 1);
        const uint32_t rest = ctx.full & ~ibit;
        for (uint32_t a = 1; a <= rest; ++a) {
            if (a & ibit) continue;
            if (!ctx.connected[a] || !ctx.connected[a | ibit]) continue;
            const uint32_t slack = rest & ~a;
            uint32_t extra = 0;
            while (true) {  // supersets of a inside rest, ascending
                uint32_t b = a | extra;
                if (ctx.connected[b]) {
                    for (uint32_t aprime : ctx.blocks[a | ibit]) {
                        if (restriction(a, aprime) != restriction(b, aprime))
                            return Theorem2Witness{i, detail::mask_to_set(a), detail::mask_to_set(b),
                                                   detail::mask_to_set(aprime)};
                    }
                }
                if (extra == slack) break;
                extra = (extra - slack) & slack;
            }
        }
    }
    return std::nullopt;
}

// pass iff v̄(A∪B) ≥ v̄(A) + v̄(B) for all disjoint A, B
inline std::optional<SuperadditivityWitness> superadditivity_check(const WeightedGraph& g,
                                                                   const Game& game) {
    detail::MaskContext ctx = detail::build_context(g);
    std::vector<long long> vbar(size_t{1} << ctx.n, 0);
    for (uint32_t mask = 1; mask <= ctx.full && ctx.full; ++mask)
        vbar[mask] = detail::restricted_mask_value(ctx, game, mask);
    for (uint32_t a = 1; a <= ctx.full && ctx.full; ++a)
        for (uint32_t b = 1; b <= ctx.full; ++b) {
            if (a & b) continue;
            if (vbar[a | b] < vbar[a] + vbar[b])
                return SuperadditivityWitness{detail::mask_to_set(a), detail::mask_to_set(b)};
        }
    return std::nullopt;
}

// ---- literal enumeration of the weight conditions ---------------------------

namespace detail {

inline void check_cycle_cap(const WeightedGraph& g) {
    if (g.vertex_count() > kCycleCap)
        throw std::invalid_argument("oracle cycle/path enumeration capped at n <= 9");
}

// all simple cycles, canonical, each exactly once; f returns false to stop
template <class F>
void for_each_cycle(const WeightedGraph& g, F&& f) {
    const int n = g.vertex_count();
    std::vector<int> path;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    bool stop = false;

    auto dfs = [&](auto&& self, int start, int u) -> void {
        if (stop) return;
        g.for_neighbors(u, [&](int v, Weight) {
            if (stop || v < start) return;
            if (v == start) {
                if (path.size() >= 3 && path[1] < path.back())
                    if (!f(path)) stop = true;
                return;
            }
            if (used[static_cast<size_t>(v)]) return;
            used[static_cast<size_t>(v)] = 1;
            path.push_back(v);
            self(self, start, v);
            path.pop_back();
            used[static_cast<size_t>(v)] = 0;
        });
    };

    for (int s = 1; s <= n && !stop; ++s) {
        path.assign(1, s);
        std::fill(used.begin(), used.end(), 0);
        used[static_cast<size_t>(s)] = 1;
        dfs(dfs, s, s);
    }
}

struct CycleInfo {
    std::vector<int> verts;
    uint32_t vmask = 0;
    uint64_t emask = 0;  // bit per index into g.edges()
    CycleView view;
};

inline std::vector<CycleInfo> collect_cycles(const WeightedGraph& g) {
    std::vector<CycleInfo> out;
    auto edge_index = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        const auto& es = g.edges();
        for (size_t k = 0; k < es.size(); ++k)
            if (es[k].u == u && es[k].v == v) return k;
        return es.size();
    };
    for_each_cycle(g, [&](const std::vector<int>& verts) {
        CycleInfo info;
        info.verts = verts;
        for (size_t i = 0; i < verts.size(); ++i) {
            info.vmask |= 1u << (verts[i] - 1);
            info.emask |= uint64_t{1} << edge_index(verts[i], verts[(i + 1) % verts.size()]);
        }
        info.view = make_cycle_view(g, verts);
        out.push_back(std::move(info));
        return true;
    });
    return out;
}

inline std::optional<Violation> enumerate_star(const WeightedGraph& g) {
    const int n = g.vertex_count();
    for (int c = 1; c <= n; ++c) {
        std::vector<Edge> inc;
        g.for_neighbors(c, [&](int v, Weight w) { inc.push_back(make_edge(c, v, w)); });
        const size_t d = inc.size();
        for (size_t i = 0; i < d; ++i)
            for (size_t j = i + 1; j < d; ++j)
                for (size_t k = j + 1; k < d; ++k)
                    if (!star_triple_ok(inc[i].w, inc[j].w, inc[k].w))
                        return Violation{StarViolation{c, {inc[i], inc[j], inc[k]}}};
    }
    return std::nullopt;
}

inline std::optional<Violation> enumerate_path(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::optional<Violation> found;
    std::vector<int> path;
    std::vector<Weight> wts;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);

    // prefix state: has any earlier edge strictly below w_j, and the largest such w_j
    std::vector<char> ascended;
    std::vector<Weight> prefix_min;

    auto dfs = [&](auto&& self, int u) -> void {
        if (found) return;
        g.for_neighbors(u, [&](int v, Weight w) {
            if (found || used[static_cast<size_t>(v)]) return;
            Weight peak = 0;
            for (size_t j = 0; j < wts.size(); ++j)
                if (ascended[j]) peak = std::max(peak, wts[j]);
            if (peak > w) {
                // explicit witness triple on the extended path
                path.push_back(v);
                int kk = static_cast<int>(wts.size()) + 1;
                for (int jj = 1; jj < kk && !found; ++jj) {
                    if (wts[static_cast<size_t>(jj - 1)] <= w) continue;
                    for (int ii = 1; ii < jj && !found; ++ii)
                        if (wts[static_cast<size_t>(ii - 1)] < wts[static_cast<size_t>(jj - 1)])
                            found = Violation{PathViolation{path, ii, jj, kk}};
                }
                path.pop_back();
                return;
            }
            bool asc = !wts.empty() && prefix_min.back() < w;
            Weight pmin_next = wts.empty() ? w : std::min(prefix_min.back(), w);
            used[static_cast<size_t>(v)] = 1;
            path.push_back(v);
            wts.push_back(w);
            ascended.push_back(asc ? 1 : 0);
            prefix_min.push_back(pmin_next);
            self(self, v);
            prefix_min.pop_back();
            ascended.pop_back();
            wts.pop_back();
            path.pop_back();
            used[static_cast<size_t>(v)] = 0;
        });
    };

    for (int s = 1; s <= n && !found; ++s) {
        path.assign(1, s);
        wts.clear();
        ascended.clear();
        prefix_min.clear();
        std::fill(used.begin(), used.end(), 0);
        used[static_cast<size_t>(s)] = 1;
        dfs(dfs, s);
    }
    return found;
}

inline std::optional<Violation> enumerate_cycle_rule(const WeightedGraph& g, CycleRule rule) {
    std::optional<Violation> found;
    for_each_cycle(g, [&](const std::vector<int>& verts) {
        CycleView view = make_cycle_view(g, verts);
        bool ok = rule == CycleRule::Weak          ? weak_cycle_ok(view)
                  : rule == CycleRule::Intermediary ? intermediary_cycle_ok(view)
                                                    : full_cycle_ok(view);
        if (!ok) {
            found = Violation{CycleViolation{verts, rule}};
            return false;
        }
        return true;
    });
    return found;
}

// path from x that leaves the cycle immediately and passes through an edge of
// weight <= bound (strictly below when `strict`); empty when none exists
inline std::vector<int> attached_light_path(const WeightedGraph& g, const std::vector<int>& cycle,
                                            int x, Weight bound, bool strict) {
    const int n = g.vertex_count();
    std::vector<char> blocked(static_cast<size_t>(n) + 1, 0);
    for (int v : cycle) blocked[static_cast<size_t>(v)] = 1;
    blocked[static_cast<size_t>(x)] = 0;
    std::vector<int> parent(static_cast<size_t>(n) + 1, 0);
    std::vector<int> queue{x};
    parent[static_cast<size_t>(x)] = x;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        g.for_neighbors(u, [&](int v, Weight) {
            if (blocked[static_cast<size_t>(v)] || parent[static_cast<size_t>(v)] != 0) return;
            parent[static_cast<size_t>(v)] = u;
            queue.push_back(v);
        });
    }
    auto walk = [&](int to) {
        std::vector<int> rev{to};
        while (rev.back() != x) rev.push_back(parent[static_cast<size_t>(rev.back())]);
        std::reverse(rev.begin(), rev.end());
        return rev;
    };
    for (const Edge& e : g.edges()) {
        if (blocked[static_cast<size_t>(e.u)] || blocked[static_cast<size_t>(e.v)]) continue;
        if (strict ? e.w >= bound : e.w > bound) continue;
        bool ru = parent[static_cast<size_t>(e.u)] != 0;
        bool rv = parent[static_cast<size_t>(e.v)] != 0;
        if (!ru && !rv) continue;
        int near = ru ? e.u : e.v;
        int far = ru ? e.v : e.u;
        std::vector<int> p = walk(near);
        if (std::find(p.begin(), p.end(), far) != p.end()) {
            // the far endpoint sits on the walk already; stop the path there
            p = walk(far);
            p.push_back(near);
        } else {
            p.push_back(far);
        }
        return p;
    }
    return {};
}

inline std::optional<Violation> enumerate_pan(const WeightedGraph& g, bool full) {
    std::optional<Violation> found;
    std::vector<int> comp = component_ids(g);
    std::vector<Weight> comp_min(comp.size(), 0);
    for (const Edge& e : g.edges()) {
        Weight& slot = comp_min[static_cast<size_t>(comp[static_cast<size_t>(e.u)])];
        slot = slot == 0 ? e.w : std::min(slot, e.w);
    }
    for_each_cycle(g, [&](const std::vector<int>& verts) {
        CycleView view = make_cycle_view(g, verts);
        const int m = static_cast<int>(verts.size());
        Weight sigma_c = view.wts[0];
        for (Weight w : view.wts) sigma_c = std::min(sigma_c, w);
        std::vector<int> low;
        for (int i = 0; i < m; ++i)
            if (view.wts[static_cast<size_t>(i)] < view.max_hat) low.push_back(i);
        bool shape_a = low.empty();
        int apex = 0;
        Weight w1 = 0;
        bool shape_b = false;
        if (low.size() == 2) {
            int d = low[1] - low[0];
            bool adjacent = d == 1 || d == m - 1;
            if (adjacent && view.wts[static_cast<size_t>(low[0])] == view.wts[static_cast<size_t>(low[1])]) {
                shape_b = true;
                apex = d == 1 ? verts[static_cast<size_t>(low[1])] : verts[0];
                w1 = view.wts[static_cast<size_t>(low[0])];
            }
        }
        if (shape_a) return true;
        Weight sigma = comp_min[static_cast<size_t>(comp[static_cast<size_t>(verts[0])])];
        for (int x : verts) {
            if (shape_b && x == apex) continue;
            std::vector<int> p = attached_light_path(g, verts, x, sigma_c, false);
            if (!p.empty()) {
                found = Violation{PanViolation{verts, shape_b ? apex : 0, sigma, x, p}};
                return false;
            }
        }
        if (full && shape_b) {
            std::vector<int> p = attached_light_path(g, verts, apex, w1, true);
            if (!p.empty()) {
                int at = 0;
                for (int i = 0; i < m; ++i)
                    if (verts[static_cast<size_t>(i)] == apex) at = i;
                int prev = verts[static_cast<size_t>((at - 1 + m) % m)];
                int next = verts[static_cast<size_t>((at + 1) % m)];
                bool max_chord = g.has_edge(prev, next) && g.weight(prev, next) == view.max_hat;
                if (!max_chord) {
                    found = Violation{PanViolation{verts, apex, sigma, apex, p}};
                    return false;
                }
            }
        }
        return true;
    });
    return found;
}

struct SecondPartQuery {
    bool weak = false;  // weak relation accepted regardless of cycle sizes
};

inline std::optional<Violation> enumerate_adjacent(const WeightedGraph& g,
                                                   std::optional<SecondPartQuery> second_only) {
    std::vector<CycleInfo> cycles = collect_cycles(g);
    const size_t cnt = cycles.size();
    for (size_t i = 0; i < cnt; ++i) {
        for (size_t j = i + 1; j < cnt; ++j) {
            if ((cycles[i].emask & cycles[j].emask) == 0) continue;
            for (int order = 0; order < 2; ++order) {
                const CycleInfo& ca = order == 0 ? cycles[i] : cycles[j];
                const CycleInfo& cb = order == 0 ? cycles[j] : cycles[i];
                if (!pmin::detail::adjacent_premises_hold(g, ca.view, cb.view)) continue;
                std::vector<Edge> common = pmin::detail::common_edges(ca.verts, cb.verts, g);
                std::vector<Edge> common_low;
                for (const Edge& e : common)
                    if (e.w < ca.view.max_edge && e.w < cb.view.max_edge) common_low.push_back(e);
                if (common_low.size() >= 2 && !second_only)
                    return Violation{AdjacentCyclesViolation{
                        ca.verts, cb.verts, {common_low[0], common_low[1]}, false}};
                if (common_low.size() != 1) continue;
                const Edge e1 = common_low.front();
                bool weak_rel = second_only && second_only->weak;
                bool small = ca.verts.size() == 3 || cb.verts.size() == 3;
                bool satisfied = false;
                for (int x : {e1.u, e1.v}) {
                    auto cands = [&](const CycleInfo& c, const CycleInfo& other) {
                        std::vector<Edge> out;
                        const int mm = static_cast<int>(c.verts.size());
                        for (int t = 0; t < mm; ++t) {
                            Edge e = make_edge(c.verts[static_cast<size_t>(t)],
                                               c.verts[static_cast<size_t>((t + 1) % mm)], 0);
                            e.w = g.weight(e.u, e.v);
                            if (e.u == e1.u && e.v == e1.v) continue;
                            if (e.u != x && e.v != x) continue;
                            if (e.w >= c.view.max_edge) continue;
                            if (pmin::detail::edge_in_cycle(other.verts, e)) continue;
                            out.push_back(e);
                        }
                        return out;
                    };
                    for (const Edge& e2 : cands(ca, cb))
                        for (const Edge& e2p : cands(cb, ca)) {
                            if (weak_rel || small) {
                                if ((e1.w == e2.w && e2.w >= e2p.w) ||
                                    (e1.w == e2p.w && e2p.w >= e2.w))
                                    satisfied = true;
                            } else if (e1.w == e2.w && e2.w == e2p.w) {
                                satisfied = true;
                            }
                        }
                }
                if (!satisfied)
                    return Violation{AdjacentCyclesViolation{ca.verts, cb.verts, {e1}, true}};
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline std::optional<Violation> enumerate_condition(const WeightedGraph& g, Condition which) {
    detail::check_cycle_cap(g);
    switch (which) {
        case Condition::Star: return detail::enumerate_star(g);
        case Condition::Path: return detail::enumerate_path(g);
        case Condition::WeakCycle: return detail::enumerate_cycle_rule(g, CycleRule::Weak);
        case Condition::IntermediaryCycle:
            return detail::enumerate_cycle_rule(g, CycleRule::Intermediary);
        case Condition::Cycle: return detail::enumerate_cycle_rule(g, CycleRule::Full);
        case Condition::WeakPan: return detail::enumerate_pan(g, false);
        case Condition::Pan: return detail::enumerate_pan(g, true);
        case Condition::AdjacentCycles: return detail::enumerate_adjacent(g, std::nullopt);
    }
    return std::nullopt;
}

// audit hook: the weak second-part relation on every qualifying pair
inline std::optional<Violation> enumerate_weak_second_part(const WeightedGraph& g) {
    detail::check_cycle_cap(g);
    return detail::enumerate_adjacent(g, detail::SecondPartQuery{true});
}

// audit hook: max over E and Ê agrees across every pair of adjacent simple cycles
inline bool adjacent_cycle_maxima_equal(const WeightedGraph& g) {
    detail::check_cycle_cap(g);
    std::vector<detail::CycleInfo> cycles = detail::collect_cycles(g);
    for (size_t i = 0; i < cycles.size(); ++i)
        for (size_t j = i + 1; j < cycles.size(); ++j) {
            if ((cycles[i].emask & cycles[j].emask) == 0) continue;
            const CycleView& a = cycles[i].view;
            const CycleView& b = cycles[j].view;
            if (!(a.max_hat == a.max_edge && a.max_edge == b.max_edge && b.max_edge == b.max_hat))
                return false;
        }
    return true;
}

inline std::vector<Cycle> enumerate_simple_cycles(const WeightedGraph& g) {
    detail::check_cycle_cap(g);
    std::vector<Cycle> out;
    detail::for_each_cycle(g, [&](const std::vector<int>& verts) {
        out.push_back(canonical_cycle(verts));
        return true;
    });
    return out;
}

}  // namespace pmin::oracle
