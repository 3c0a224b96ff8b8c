#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pmin {

using Weight = long long;

// undirected edge, stored with u < v
struct Edge {
    int u = 0;
    int v = 0;
    Weight w = 0;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.u == b.u && a.v == b.v && a.w == b.w;
    }
    friend bool operator<(const Edge& a, const Edge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.w < b.w;
    }
};

inline Edge make_edge(int u, int v, Weight w) {
    if (u > v) std::swap(u, v);
    return Edge{u, v, w};
}

// subset of 1..n, kept sorted without duplicates
using VertexSet = std::vector<int>;

inline VertexSet canonical_set(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet full_vertex_set(int n) {
    VertexSet s(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) s[static_cast<size_t>(v) - 1] = v;
    return s;
}

// disjoint blocks covering `owner`; blocks sorted by smallest element
struct Partition {
    VertexSet owner;
    std::vector<VertexSet> blocks;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.owner == b.owner && a.blocks == b.blocks;
    }
};

inline void sort_blocks(std::vector<VertexSet>& blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
}

// elementary path as its vertex sequence
struct Path {
    std::vector<int> vertices;

    int edge_count() const { return static_cast<int>(vertices.size()) - 1; }
};

// simple cycle as its vertex sequence; canonical form starts at the smallest
// vertex and runs toward its smaller neighbor
struct Cycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }

    friend bool operator==(const Cycle& a, const Cycle& b) { return a.vertices == b.vertices; }
};

inline Cycle canonical_cycle(std::vector<int> verts) {
    auto min_it = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), min_it, verts.end());
    if (verts.size() >= 3 && verts[1] > verts.back())
        std::reverse(verts.begin() + 1, verts.end());
    return Cycle{std::move(verts)};
}

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Simple undirected graph with strictly positive integer weights.
// Vertices are 1..n; the adjacency matrix stores 0 for absent edges.
class WeightedGraph {
public:
    WeightedGraph() = default;

    WeightedGraph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
        adj_.assign(static_cast<size_t>(n + 1) * static_cast<size_t>(n + 1), 0);
        edges_.reserve(edges.size());
        for (Edge e : edges) {
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u < 1 || e.v > n) throw std::invalid_argument("vertex index out of range");
            if (e.u == e.v) throw std::invalid_argument("self-loop");
            if (e.w < 1) throw std::invalid_argument("weight must be >= 1");
            if (at(e.u, e.v) != 0) throw std::invalid_argument("duplicate edge");
            at(e.u, e.v) = at(e.v, e.u) = e.w;
            edges_.push_back(e);
        }
        std::sort(edges_.begin(), edges_.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    Weight weight(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<size_t>(u) * (n_ + 1) + v];
    }

    bool has_edge(int u, int v) const { return u != v && weight(u, v) != 0; }

    // neighbors visited in increasing vertex order
    template <class F>
    void for_neighbors(int u, F&& f) const {
        check_vertex(u);
        const Weight* row = adj_.data() + static_cast<size_t>(u) * (n_ + 1);
        for (int v = 1; v <= n_; ++v)
            if (row[v] != 0) f(v, row[v]);
    }

    VertexSet vertices() const { return full_vertex_set(n_); }

private:
    Weight& at(int u, int v) { return adj_[static_cast<size_t>(u) * (n_ + 1) + v]; }

    void check_vertex(int v) const {
        if (v < 1 || v > n_) throw std::out_of_range("vertex index out of range");
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Weight> adj_;
};

// Edge-list format: first line "n m", then m lines "u v w".
// '#' starts a comment line; blank lines are ignored; LF or CRLF.
inline WeightedGraph parse_graph(std::string_view text) {
    struct Line {
        int number;
        std::string_view body;
    };
    std::vector<Line> lines;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view raw = (eol == std::string_view::npos)
                                   ? text.substr(pos)
                                   : text.substr(pos, eol - pos);
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        size_t a = raw.find_first_not_of(" \t");
        if (a != std::string_view::npos && raw[a] != '#') {
            size_t b = raw.find_last_not_of(" \t");
            lines.push_back(Line{line_no, raw.substr(a, b - a + 1)});
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (lines.empty()) throw ParseError(line_no, "missing header line \"n m\"");

    auto parse_ints = [](const Line& ln, size_t count) {
        std::vector<long long> out;
        size_t i = 0;
        const std::string_view s = ln.body;
        while (i < s.size()) {
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
            if (i >= s.size()) break;
            bool neg = false;
            if (s[i] == '-') {
                neg = true;
                ++i;
            }
            if (i >= s.size() || s[i] < '0' || s[i] > '9')
                throw ParseError(ln.number, "malformed integer");
            long long val = 0;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
                val = val * 10 + (s[i] - '0');
                if (val > (1LL << 60)) throw ParseError(ln.number, "integer too large");
                ++i;
            }
            out.push_back(neg ? -val : val);
        }
        if (out.size() != count)
            throw ParseError(ln.number,
                             "expected " + std::to_string(count) + " integers, got " +
                                 std::to_string(out.size()));
        return out;
    };

    auto header = parse_ints(lines[0], 2);
    long long n = header[0], m = header[1];
    if (n < 0 || n > 100000) throw ParseError(lines[0].number, "invalid vertex count");
    if (m < 0) throw ParseError(lines[0].number, "invalid edge count");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError(lines.back().number,
                         "expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    WeightedGraph probe(static_cast<int>(n), {});
    for (size_t k = 1; k < lines.size(); ++k) {
        auto t = parse_ints(lines[k], 3);
        long long u = t[0], v = t[1], w = t[2];
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(lines[k].number, "vertex index out of range");
        if (u == v) throw ParseError(lines[k].number, "self-loop");
        if (w < 1) throw ParseError(lines[k].number, "weight must be >= 1");
        int a = static_cast<int>(std::min(u, v));
        int b = static_cast<int>(std::max(u, v));
        for (const Edge& e : edges)
            if (e.u == a && e.v == b) throw ParseError(lines[k].number, "duplicate edge");
        edges.push_back(Edge{a, b, w});
    }
    return WeightedGraph(static_cast<int>(n), std::move(edges));
}

inline std::string to_edge_list(const WeightedGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(e.w) + "\n";
    return out;
}

// E(A): edges with both ends in a
inline std::vector<Edge> edges_within(const WeightedGraph& g, const VertexSet& a) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (set_contains(a, e.u) && set_contains(a, e.v)) out.push_back(e);
    return out;
}

// Σ(A): minimum-weight edges of E(A); empty when E(A) is empty
inline std::vector<Edge> min_weight_edges(const WeightedGraph& g, const VertexSet& a) {
    std::vector<Edge> inside = edges_within(g, a);
    if (inside.empty()) return {};
    Weight lo = inside.front().w;
    for (const Edge& e : inside) lo = std::min(lo, e.w);
    std::vector<Edge> out;
    for (const Edge& e : inside)
        if (e.w == lo) out.push_back(e);
    return out;
}

// components of (A, E(A) \ excluded); isolated vertices become singleton blocks
inline Partition connected_components(const WeightedGraph& g, const VertexSet& a,
                                      const std::vector<Edge>& excluded) {
    const int n = g.vertex_count();
    std::vector<char> in_a(static_cast<size_t>(n) + 1, 0);
    for (int v : a) in_a[static_cast<size_t>(v)] = 1;
    auto is_excluded = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        for (const Edge& e : excluded)
            if (e.u == u && e.v == v) return true;
        return false;
    };
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    Partition p;
    p.owner = a;
    for (int s : a) {
        if (seen[static_cast<size_t>(s)]) continue;
        VertexSet block;
        std::vector<int> stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            block.push_back(u);
            g.for_neighbors(u, [&](int v, Weight) {
                if (in_a[static_cast<size_t>(v)] && !seen[static_cast<size_t>(v)] &&
                    !is_excluded(u, v)) {
                    seen[static_cast<size_t>(v)] = 1;
                    stack.push_back(v);
                }
            });
        }
        std::sort(block.begin(), block.end());
        p.blocks.push_back(std::move(block));
    }
    sort_blocks(p.blocks);
    return p;
}

inline bool is_connected_subset(const WeightedGraph& g, const VertexSet& a) {
    if (a.empty()) return false;
    return connected_components(g, a, {}).blocks.size() == 1;
}

// edge admission for BFS: everything, weight thresholds, or one forbidden edge
struct EdgeFilter {
    enum class Kind { All, WeightAbove, WeightAtLeast, ExcludeEdge };

    Kind kind = Kind::All;
    Weight threshold = 0;
    int skip_u = 0, skip_v = 0;

    static EdgeFilter all() { return {}; }
    static EdgeFilter weight_above(Weight t) { return {Kind::WeightAbove, t, 0, 0}; }
    static EdgeFilter weight_at_least(Weight t) { return {Kind::WeightAtLeast, t, 0, 0}; }
    static EdgeFilter excluding(int u, int v) {
        if (u > v) std::swap(u, v);
        return {Kind::ExcludeEdge, 0, u, v};
    }

    bool admits(int u, int v, Weight w) const {
        switch (kind) {
            case Kind::All: return true;
            case Kind::WeightAbove: return w > threshold;
            case Kind::WeightAtLeast: return w >= threshold;
            case Kind::ExcludeEdge: {
                if (u > v) std::swap(u, v);
                return !(u == skip_u && v == skip_v);
            }
        }
        return true;
    }
};

// minimum-hop path from s to t inside `allowed`, neighbors expanded in
// increasing vertex order so ties break toward lower indices
inline std::optional<Path> shortest_path(const WeightedGraph& g, int s, int t,
                                         const VertexSet& allowed,
                                         const EdgeFilter& filter = EdgeFilter::all()) {
    const int n = g.vertex_count();
    std::vector<char> ok(static_cast<size_t>(n) + 1, 0);
    for (int v : allowed) ok[static_cast<size_t>(v)] = 1;
    if (s < 1 || s > n || t < 1 || t > n || !ok[static_cast<size_t>(s)] ||
        !ok[static_cast<size_t>(t)])
        return std::nullopt;
    if (s == t) return Path{{s}};
    std::vector<int> parent(static_cast<size_t>(n) + 1, 0);
    std::vector<int> queue{s};
    parent[static_cast<size_t>(s)] = s;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        bool done = false;
        g.for_neighbors(u, [&](int v, Weight w) {
            if (done || !ok[static_cast<size_t>(v)] || parent[static_cast<size_t>(v)] != 0)
                return;
            if (!filter.admits(u, v, w)) return;
            parent[static_cast<size_t>(v)] = u;
            if (v == t) {
                done = true;
                return;
            }
            queue.push_back(v);
        });
        if (done) break;
    }
    if (parent[static_cast<size_t>(t)] == 0) return std::nullopt;
    std::vector<int> rev{t};
    while (rev.back() != s) rev.push_back(parent[static_cast<size_t>(rev.back())]);
    std::reverse(rev.begin(), rev.end());
    return Path{std::move(rev)};
}

// component ids (1-based, by smallest contained vertex order) for the full graph
inline std::vector<int> component_ids(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> id(static_cast<size_t>(n) + 1, 0);
    int next = 0;
    for (int s = 1; s <= n; ++s) {
        if (id[static_cast<size_t>(s)] != 0) continue;
        ++next;
        std::vector<int> stack{s};
        id[static_cast<size_t>(s)] = next;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            g.for_neighbors(u, [&](int v, Weight) {
                if (id[static_cast<size_t>(v)] == 0) {
                    id[static_cast<size_t>(v)] = next;
                    stack.push_back(v);
                }
            });
        }
    }
    return id;
}

}  // namespace pmin
