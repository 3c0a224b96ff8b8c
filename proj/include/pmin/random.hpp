#pragma once

#include <cstdint>
#include <vector>

#include "pmin/graph.hpp"

namespace pmin {

// splitmix64: tiny, portable, identical streams on every platform
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Erdős–Rényi-style sample; connectivity is not forced
inline WeightedGraph random_graph(SplitMix64& rng, int n, double edge_prob,
                                  const std::vector<Weight>& palette) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.unit() < edge_prob)
                edges.push_back(Edge{u, v, palette[rng.below(palette.size())]});
    return WeightedGraph(n, std::move(edges));
}

// connected sample: random spanning tree first, then extra edges up to ~m
inline WeightedGraph random_connected_graph(SplitMix64& rng, int n, int m,
                                            const std::vector<Weight>& palette) {
    std::vector<Edge> edges;
    std::vector<char> pair_used(static_cast<size_t>(n + 1) * static_cast<size_t>(n + 1), 0);
    auto add = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        size_t key = static_cast<size_t>(u) * static_cast<size_t>(n + 1) + static_cast<size_t>(v);
        if (pair_used[key]) return false;
        pair_used[key] = 1;
        edges.push_back(Edge{u, v, palette[rng.below(palette.size())]});
        return true;
    };
    for (int v = 2; v <= n; ++v) add(1 + static_cast<int>(rng.below(static_cast<uint64_t>(v - 1))), v);
    long long cap = static_cast<long long>(n) * (n - 1) / 2;
    int want = static_cast<int>(std::min<long long>(m, cap));
    int guard = 0;
    while (static_cast<int>(edges.size()) < want && guard < 50 * want) {
        ++guard;
        int u = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        int v = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        if (u != v) add(u, v);
    }
    return WeightedGraph(n, std::move(edges));
}

}  // namespace pmin
