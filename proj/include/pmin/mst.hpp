#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "pmin/graph.hpp"

namespace pmin {

// spanning tree of one connected component, rooted at its smallest vertex
struct SpanningTree {
    int root = 0;
    VertexSet vertices;
    std::vector<int> parent;  // indexed by vertex, 0 for the root and for outsiders
    std::vector<int> depth;
    std::vector<Edge> edges;  // sorted canonically
    Weight total_weight = 0;

    bool contains(int v) const {
        return v >= 1 && v < static_cast<int>(depth.size()) && (v == root || parent[static_cast<size_t>(v)] != 0);
    }

    bool has_tree_edge(int u, int v) const {
        if (!contains(u) || !contains(v)) return false;
        return parent[static_cast<size_t>(u)] == v || parent[static_cast<size_t>(v)] == u;
    }

    // unique tree path between two vertices of the component
    std::vector<int> path_between(int u, int v) const {
        std::vector<int> from_u{u}, from_v{v};
        int a = u, b = v;
        while (a != b) {
            if (depth[static_cast<size_t>(a)] >= depth[static_cast<size_t>(b)]) {
                a = parent[static_cast<size_t>(a)];
                from_u.push_back(a);
            } else {
                b = parent[static_cast<size_t>(b)];
                from_v.push_back(b);
            }
        }
        from_u.pop_back();
        for (auto it = from_v.rbegin(); it != from_v.rend(); ++it) from_u.push_back(*it);
        return from_u;
    }
};

// Prim per component, array form: a vertex key is overwritten whenever a new
// candidate edge is no heavier, and the pending vertex with the smallest
// (key, index) enters next.  Deterministic for equal-weight alternatives.
inline std::vector<SpanningTree> prim_mst(const WeightedGraph& g) {
    const int n = g.vertex_count();
    constexpr Weight kInf = std::numeric_limits<Weight>::max();
    std::vector<char> in_tree(static_cast<size_t>(n) + 1, 0);
    std::vector<SpanningTree> forest;

    for (int start = 1; start <= n; ++start) {
        if (in_tree[static_cast<size_t>(start)]) continue;
        SpanningTree tree;
        tree.root = start;
        tree.parent.assign(static_cast<size_t>(n) + 1, 0);
        tree.depth.assign(static_cast<size_t>(n) + 1, 0);

        std::vector<Weight> key(static_cast<size_t>(n) + 1, kInf);
        std::vector<int> via(static_cast<size_t>(n) + 1, 0);
        std::vector<char> pending(static_cast<size_t>(n) + 1, 0);
        key[static_cast<size_t>(start)] = 0;
        pending[static_cast<size_t>(start)] = 1;

        while (true) {
            int u = 0;
            for (int v = 1; v <= n; ++v)
                if (pending[static_cast<size_t>(v)] && !in_tree[static_cast<size_t>(v)] &&
                    (u == 0 || key[static_cast<size_t>(v)] < key[static_cast<size_t>(u)]))
                    u = v;
            if (u == 0) break;
            pending[static_cast<size_t>(u)] = 0;
            in_tree[static_cast<size_t>(u)] = 1;
            tree.vertices.push_back(u);
            if (via[static_cast<size_t>(u)] != 0) {
                tree.parent[static_cast<size_t>(u)] = via[static_cast<size_t>(u)];
                tree.depth[static_cast<size_t>(u)] =
                    tree.depth[static_cast<size_t>(via[static_cast<size_t>(u)])] + 1;
                tree.edges.push_back(make_edge(u, via[static_cast<size_t>(u)],
                                               g.weight(u, via[static_cast<size_t>(u)])));
                tree.total_weight += g.weight(u, via[static_cast<size_t>(u)]);
            }
            g.for_neighbors(u, [&](int v, Weight w) {
                if (in_tree[static_cast<size_t>(v)]) return;
                if (w <= key[static_cast<size_t>(v)]) {
                    key[static_cast<size_t>(v)] = w;
                    via[static_cast<size_t>(v)] = u;
                    pending[static_cast<size_t>(v)] = 1;
                }
            });
        }
        std::sort(tree.vertices.begin(), tree.vertices.end());
        std::sort(tree.edges.begin(), tree.edges.end());
        forest.push_back(std::move(tree));
    }
    return forest;
}

// the unique simple cycle of T ∪ {e}; the result contains e
inline Cycle fundamental_cycle(const SpanningTree& t, const Edge& e) {
    if (!t.contains(e.u) || !t.contains(e.v))
        throw std::invalid_argument("edge endpoints outside the tree's component");
    if (t.has_tree_edge(e.u, e.v)) throw std::invalid_argument("edge already in the tree");
    std::vector<int> verts = t.path_between(std::min(e.u, e.v), std::max(e.u, e.v));
    return canonical_cycle(std::move(verts));
}

}  // namespace pmin
