#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pmin/checkers.hpp"
#include "pmin/diff.hpp"
#include "pmin/graph.hpp"
#include "pmin/oracle.hpp"
#include "pmin/report.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

pmin::WeightedGraph load_graph(const std::string& path) {
    return pmin::parse_graph(read_input(path));
}

int run_check(const std::string& input, const std::string& format) {
    pmin::WeightedGraph g = load_graph(input);
    pmin::DecisionReport report = pmin::decide_inheritance(g);
    if (format == "json")
        std::cout << pmin::check_report_to_json(g, report).dump(2) << "\n";
    else
        std::cout << pmin::check_report_to_text(g, report);
    return report.inherits ? 0 : 1;
}

int run_oracle(const std::string& input, const std::string& format, int cap) {
    pmin::WeightedGraph g = load_graph(input);
    if (g.vertex_count() > cap)
        throw std::runtime_error("graph has n = " + std::to_string(g.vertex_count()) +
                                 " but the oracle cap is " + std::to_string(cap));
    auto witness = pmin::oracle::inheritance_oracle(g);
    bool theorem2_pass = !pmin::oracle::theorem2_criterion(g).has_value();
    if (format == "json")
        std::cout << pmin::oracle_report_to_json(g, witness, theorem2_pass).dump(2) << "\n";
    else
        std::cout << pmin::oracle_report_to_text(g, witness, theorem2_pass);
    return witness ? 1 : 0;
}

int run_partition(const std::string& input, const std::string& format,
                  std::vector<int> subset_in, std::vector<int> unanimity_in) {
    pmin::WeightedGraph g = load_graph(input);
    pmin::VertexSet subset = pmin::canonical_set(std::move(subset_in));
    if (subset.empty() || subset.front() < 1 || subset.back() > g.vertex_count())
        throw std::runtime_error("subset vertex out of range");
    std::optional<pmin::VertexSet> unanimity;
    if (!unanimity_in.empty()) {
        pmin::VertexSet s = pmin::canonical_set(std::move(unanimity_in));
        if (s.front() < 1 || s.back() > g.vertex_count())
            throw std::runtime_error("unanimity vertex out of range");
        unanimity = std::move(s);
    }
    if (format == "json")
        std::cout << pmin::partition_report_to_json(g, subset, unanimity).dump(2) << "\n";
    else
        std::cout << pmin::partition_report_to_text(g, subset, unanimity);
    return 0;
}

int run_diff(const std::string& format, int trials, int cap, uint64_t seed,
             std::vector<long long> palette_in) {
    pmin::DiffConfig cfg;
    cfg.trials = trials;
    cfg.cap = cap;
    cfg.seed = seed;
    if (!palette_in.empty()) {
        cfg.palette.clear();
        for (long long w : palette_in) {
            if (w < 1) throw std::runtime_error("palette weights must be >= 1");
            cfg.palette.push_back(w);
        }
    }
    if (cfg.cap < 3) throw std::runtime_error("cap must be >= 3");
    if (cfg.trials < 1) throw std::runtime_error("trials must be >= 1");
    pmin::DiffSummary summary = pmin::run_diff(cfg);

    std::vector<std::string> dumps;
    for (const pmin::DiffDisagreement& d : summary.disagreements) {
        std::string name = "diff-disagreement-" + std::to_string(d.trial) + ".edgelist";
        std::ofstream out(name, std::ios::binary);
        out << "# seed " << seed << " trial " << d.trial << "\n";
        out << "# checker " << (d.checker_inherits ? "INHERITS" : "VIOLATES") << ", oracle "
            << (d.oracle_inherits ? "INHERITS" : "VIOLATES") << "\n";
        out << "# checker report: " << pmin::check_report_to_json(d.graph, d.report).dump() << "\n";
        out << pmin::to_edge_list(d.graph);
        dumps.push_back(std::move(name));
    }
    if (format == "json") {
        pmin::Json out;
        out["trials"] = summary.trials;
        out["agreements"] = summary.agreements;
        pmin::Json bad = pmin::Json::array();
        for (size_t i = 0; i < summary.disagreements.size(); ++i) {
            pmin::Json item;
            item["trial"] = summary.disagreements[i].trial;
            item["checker"] = summary.disagreements[i].checker_inherits ? "INHERITS" : "VIOLATES";
            item["oracle"] = summary.disagreements[i].oracle_inherits ? "INHERITS" : "VIOLATES";
            item["dump"] = dumps[i];
            bad.push_back(std::move(item));
        }
        out["disagreements"] = std::move(bad);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << summary.agreements << "/" << summary.trials << " agree\n";
        for (const std::string& name : dumps) std::cout << "disagreement dumped to " << name << "\n";
    }
    return summary.agreements == summary.trials ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decides inheritance of F-convexity for min-edge-deletion restricted games"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "text";
    int cap = 9;
    int trials = 100;
    uint64_t seed = 1;
    std::vector<long long> palette;
    std::vector<int> subset, unanimity;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        if (needs_input)
            cmd->add_option("--input", input, "edge-list file, or - for stdin")->required();
    };

    CLI::App* check = app.add_subcommand("check", "polynomial inheritance decision");
    add_common(check, true);

    CLI::App* oracle = app.add_subcommand("oracle", "exponential brute-force decision");
    add_common(oracle, true);
    oracle->add_option("--cap", cap, "largest n the oracle accepts");

    CLI::App* diff = app.add_subcommand("diff", "random differential test of check vs oracle");
    add_common(diff, false);
    diff->add_option("--trials", trials, "number of random graphs");
    diff->add_option("--cap", cap, "largest sampled n");
    diff->add_option("--seed", seed, "rng seed");
    diff->add_option("--palette", palette, "weight palette")->delimiter(',');

    CLI::App* partition = app.add_subcommand("partition", "min-edge-deletion partition of a subset");
    add_common(partition, true);
    partition->add_option("--subset", subset, "coalition vertices")->delimiter(',')->required();
    partition->add_option("--unanimity", unanimity, "unanimity set for the restricted value")
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(input, format);
        if (oracle->parsed()) return run_oracle(input, format, cap);
        if (diff->parsed()) return run_diff(format, trials, cap, seed, palette);
        if (partition->parsed()) return run_partition(input, format, subset, unanimity);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
