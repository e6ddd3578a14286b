// Command line front end: compute / check / gen / gm-dump over edge-list
// files. Exit codes: 0 ok, 1 internal invariant violation or oracle
// mismatch, 2 input error, 3 oracle budget exceeded.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "maxgenus/cli.hpp"

namespace {

void add_tree_options(CLI::App* cmd, maxgenus::RunConfig& cfg,
                      std::string& tree_name, bool* seed_given) {
    cmd->add_option("--tree", tree_name, "spanning tree strategy: dfs|random")
        ->check(CLI::IsMember({"dfs", "random"}));
    cmd->add_option("--seed", cfg.seed, "seed for randomized strategies")
        ->each([seed_given](const std::string&) { *seed_given = true; });
}

void add_format_options(CLI::App* cmd, maxgenus::RunConfig& cfg,
                        std::string& format_name, bool& json_flag) {
    cmd->add_option("--format", format_name, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--json", json_flag, "shorthand for --format json");
    cmd->add_flag("--verbose,-v", cfg.verbose, "more detail in text output");
}

void add_budget_options(CLI::App* cmd, maxgenus::RunConfig& cfg) {
    cmd->add_option("--budget-trees", cfg.budget.max_trees,
                    "max spanning trees the oracle may enumerate");
    cmd->add_option("--budget-vertices", cfg.budget.max_vertices,
                    "max vertices for oracle input");
    cmd->add_option("--budget-edges", cfg.budget.max_edges,
                    "max edges for oracle input");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum orientable genus of a connected multigraph"};
    app.require_subcommand(1);

    maxgenus::RunConfig cfg;
    std::string tree_name = "dfs";
    std::string format_name = "text";
    bool seed_given = false;
    bool json_flag = false;

    CLI::App* compute = app.add_subcommand(
        "compute", "run the genus pipeline on edge-list files");
    compute->add_option("inputs", cfg.inputs, "edge list files")->required();
    add_tree_options(compute, cfg, tree_name, &seed_given);
    add_format_options(compute, cfg, format_name, json_flag);

    CLI::App* check = app.add_subcommand(
        "check", "cross-validate the pipeline against the spanning-tree oracle");
    check->add_option("inputs", cfg.inputs, "edge list files")->required();
    add_tree_options(check, cfg, tree_name, &seed_given);
    add_format_options(check, cfg, format_name, json_flag);
    add_budget_options(check, cfg);
    check->add_option("--bundle-dir", cfg.bundle_dir,
                      "where to write counterexample bundles");

    CLI::App* gen = app.add_subcommand("gen", "generate a graph family instance");
    gen->add_option("family", cfg.family,
                    "cartesian-path|hypercube|gen-petersen|halin-composition|"
                    "bouquet|dumbbell|complete|complete-bipartite|random-connected")
        ->required();
    gen->add_option("params", cfg.params, "family parameters");
    gen->add_option("--factor", cfg.factor_path,
                    "edge list file with the cartesian-path factor graph");
    gen->add_flag("--loops", cfg.loops, "allow loops in random-connected");
    gen->add_option("--seed", cfg.seed, "generator seed")
        ->each([&seed_given](const std::string&) { seed_given = true; });
    gen->add_option("-o,--output", cfg.output_path, "output file (default stdout)");

    CLI::App* gm = app.add_subcommand(
        "gm-dump", "dump the cycle intersection graph as an edge list");
    gm->add_option("inputs", cfg.inputs, "edge list files")->required();
    add_tree_options(gm, cfg, tree_name, &seed_given);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : maxgenus::kExitInput;
    }

    cfg.seed_set = seed_given;
    cfg.tree = tree_name == "random" ? maxgenus::TreeStrategy::SeededRandom
                                     : maxgenus::TreeStrategy::DeterministicDfs;
    cfg.format = (format_name == "json" || json_flag)
                     ? maxgenus::OutputFormat::Json
                     : maxgenus::OutputFormat::Text;

    if (compute->parsed()) return maxgenus::run_compute(cfg, std::cout, std::cerr);
    if (check->parsed()) return maxgenus::run_check(cfg, std::cout, std::cerr);
    if (gen->parsed()) return maxgenus::run_gen(cfg, std::cout, std::cerr);
    if (gm->parsed()) return maxgenus::run_gm_dump(cfg, std::cout, std::cerr);
    return maxgenus::kExitInput;
}
