#pragma once

#include <cstdint>
#include <vector>

#include "pmin/checkers.hpp"
#include "pmin/oracle.hpp"
#include "pmin/random.hpp"

namespace pmin {

struct DiffConfig {
    int trials = 100;
    int cap = 9;  // upper bound for sampled n
    uint64_t seed = 1;
    std::vector<Weight> palette = {1, 2, 3};
};

struct DiffDisagreement {
    int trial = 0;
    WeightedGraph graph;
    bool checker_inherits = false;
    bool oracle_inherits = false;
    DecisionReport report;
};

struct DiffSummary {
    int trials = 0;
    int agreements = 0;
    std::vector<DiffDisagreement> disagreements;
};

// one seeded trial graph; the probability sweep cycles through {0.3, 0.5, 0.8}
inline WeightedGraph diff_trial_graph(const DiffConfig& cfg, int trial) {
    static constexpr double kProbs[] = {0.3, 0.5, 0.8};
    SplitMix64 rng(cfg.seed * 0x100000001b3ULL + static_cast<uint64_t>(trial));
    int n = 3 + static_cast<int>(rng.below(static_cast<uint64_t>(cfg.cap - 2)));
    return random_graph(rng, n, kProbs[trial % 3], cfg.palette);
}

// runs the polynomial decision against the exponential oracle on seeded
// random graphs; `decide` is injectable so the harness itself can be tested
template <class DecideFn>
DiffSummary run_diff(const DiffConfig& cfg, DecideFn&& decide) {
    DiffSummary summary;
    summary.trials = cfg.trials;
    for (int t = 0; t < cfg.trials; ++t) {
        WeightedGraph g = diff_trial_graph(cfg, t);
        DecisionReport report = decide(g);
        bool oracle_pass = !oracle::inheritance_oracle(g).has_value();
        if (report.inherits == oracle_pass) {
            ++summary.agreements;
        } else {
            summary.disagreements.push_back(
                DiffDisagreement{t, g, report.inherits, oracle_pass, report});
        }
    }
    return summary;
}

inline DiffSummary run_diff(const DiffConfig& cfg) {
    return run_diff(cfg, [](const WeightedGraph& g) { return decide_inheritance(g); });
}

}  // namespace pmin
