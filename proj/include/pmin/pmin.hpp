#pragma once

#include <stdexcept>
#include <vector>

#include "pmin/graph.hpp"

namespace pmin {

// characteristic function: either an explicit 2^n table or a unanimity game u_S
class Game {
public:
    static Game unanimity(int n, VertexSet s) {
        s = canonical_set(std::move(s));
        if (s.empty()) throw std::invalid_argument("unanimity set must be nonempty");
        if (s.front() < 1 || s.back() > n) throw std::invalid_argument("unanimity set out of range");
        Game g;
        g.n_ = n;
        g.unanimity_ = std::move(s);
        return g;
    }

    // values indexed by subset bitmask (vertex v <-> bit v-1); values[0] must be 0
    static Game table(int n, std::vector<long long> values) {
        if (n < 0 || n > 20) throw std::invalid_argument("table games support n <= 20");
        if (values.size() != (size_t{1} << n)) throw std::invalid_argument("table size must be 2^n");
        if (values[0] != 0) throw std::invalid_argument("v(empty) must be 0");
        Game g;
        g.n_ = n;
        g.table_ = std::move(values);
        return g;
    }

    int player_count() const { return n_; }
    bool is_unanimity() const { return !unanimity_.empty(); }
    const VertexSet& unanimity_set() const { return unanimity_; }

    long long value(const VertexSet& a) const {
        if (is_unanimity()) return is_subset(unanimity_, a) ? 1 : 0;
        uint32_t mask = 0;
        for (int v : a) mask |= 1u << (v - 1);
        return table_[mask];
    }

private:
    int n_ = 0;
    VertexSet unanimity_;
    std::vector<long long> table_;
};

// P_min(A): components of A after deleting the minimum-weight edges of E(A)
inline Partition pmin_partition(const WeightedGraph& g, const VertexSet& a) {
    return connected_components(g, a, min_weight_edges(g, a));
}

// v̄(A) = sum of v over the blocks of P_min(A); v̄(∅) = 0
inline long long restricted_value(const WeightedGraph& g, const Game& v, const VertexSet& a) {
    if (a.empty()) return 0;
    long long total = 0;
    for (const VertexSet& block : pmin_partition(g, a).blocks) total += v.value(block);
    return total;
}

// nonempty intersections of p's blocks with a_prime
inline Partition restrict_partition(const Partition& p, const VertexSet& a_prime) {
    if (!is_subset(a_prime, p.owner))
        throw std::invalid_argument("restriction set must lie inside the partition owner");
    Partition out;
    out.owner = a_prime;
    for (const VertexSet& block : p.blocks) {
        VertexSet cut = set_intersection(block, a_prime);
        if (!cut.empty()) out.blocks.push_back(std::move(cut));
    }
    sort_blocks(out.blocks);
    return out;
}

}  // namespace pmin
