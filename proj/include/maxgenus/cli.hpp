#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "maxgenus/edge_list.hpp"
#include "maxgenus/genus.hpp"
#include "maxgenus/oracle.hpp"
#include "maxgenus/spanning_tree.hpp"

namespace maxgenus {

enum class OutputFormat { Text, Json };

// Exit codes shared by every subcommand.
enum ExitCode {
    kExitOk = 0,
    kExitInvariant = 1,  // internal invariant violation / oracle mismatch
    kExitInput = 2,      // parse error, disconnected graph, bad parameters
    kExitBudget = 3,
};

struct RunConfig {
    std::vector<std::string> inputs;
    OutputFormat format = OutputFormat::Text;
    bool verbose = false;

    TreeStrategy tree = TreeStrategy::DeterministicDfs;
    uint64_t seed = 0;
    bool seed_set = false;

    OracleBudget budget;

    // gen
    std::string family;
    std::vector<long long> params;
    std::string factor_path;  // cartesian-path factor graph
    bool loops = false;
    std::string output_path;  // empty = stdout

    // check
    std::string bundle_dir = ".";
};

// Pipeline over each input file; one report per file, in input order.
// Files are processed concurrently.
int run_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Pipeline and spanning-tree oracle side by side; exit 0 iff they agree on
// every input. A mismatch writes a counterexample bundle.
int run_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Emits a family instance as an edge list.
int run_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Emits the cycle intersection graph of each input as an edge list.
int run_gm_dump(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Everything needed to replay a pipeline/oracle disagreement by hand:
// the graph, the pipeline report (tree and matching certificate), the
// intersection graph, the oracle's answer, and the xi of every spanning
// tree. Returns the file path written under cfg.bundle_dir.
std::string write_counterexample_bundle(const RunConfig& cfg,
                                        const std::string& input,
                                        const ParsedGraph& pg,
                                        const GenusReport& report,
                                        const XiOracleResult& oracle);

}  // namespace maxgenus
