#include "maxgenus/cli.hpp"

#include <algorithm>
#include <cctype>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "maxgenus/edge_list.hpp"
#include "maxgenus/errors.hpp"
#include "maxgenus/generators.hpp"
#include "maxgenus/genus.hpp"

namespace maxgenus {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int code_for_current_exception(std::ostream& err, const std::string& context) {
    try {
        throw;
    } catch (const BudgetExceeded& e) {
        err << context << ": budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const DisconnectedGraph&) {
        err << context << ": graph is disconnected\n";
        return kExitInput;
    } catch (const ParseError& e) {
        err << context << ": parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const NotSimple& e) {
        err << context << ": " << e.what() << "\n";
        return kExitInput;
    } catch (const NotATwoComponentCut& e) {
        err << context << ": " << e.what() << "\n";
        return kExitInput;
    } catch (const PreconditionFailed& e) {
        err << context << ": " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << context << ": " << e.what() << "\n";
        return kExitInput;
    } catch (const InvariantViolation& e) {
        err << context << ": invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        err << context << ": internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}

ordered_json certificate_json(const GenusReport& r) {
    ordered_json arr = ordered_json::array();
    for (const CertificatePair& p : r.certificate) {
        ordered_json e;
        e["cycle_a"] = p.cycle_a;
        e["cycle_b"] = p.cycle_b;
        e["witness_vertex"] = p.witness_vertex;
        e["cotree_edge_a"] = p.cotree_edge_a;
        e["cotree_edge_b"] = p.cotree_edge_b;
        arr.push_back(std::move(e));
    }
    return arr;
}

ordered_json report_json(const std::string& input, const ParsedGraph& pg,
                         const GenusReport& r) {
    ordered_json j;
    j["input"] = input;
    j["n_vertices"] = pg.graph.vertex_count();
    j["n_edges"] = pg.graph.edge_count();
    j["beta"] = r.beta;
    j["gamma_max"] = r.gamma_max;
    j["xi"] = r.xi;
    j["upper_embeddable"] = r.upper_embeddable;
    j["xi_of_tree"] = r.xi_of_tree_used;
    j["tree_edges"] = r.tree_used.tree_edges.to_vector();
    j["certificate"] = certificate_json(r);
    j["vertex_labels"] = pg.vertex_labels;
    return j;
}

void report_text(std::ostream& out, const std::string& input,
                 const ParsedGraph& pg, const GenusReport& r, bool verbose) {
    out << input << ": beta=" << r.beta << " gamma_max=" << r.gamma_max
        << " xi=" << r.xi
        << " upper_embeddable=" << (r.upper_embeddable ? "yes" : "no") << "\n";
    if (!verbose) return;
    out << "  xi of the tree actually used: " << r.xi_of_tree_used << "\n";
    out << "  tree_edges:";
    r.tree_used.tree_edges.for_each([&](int e) { out << ' ' << e; });
    out << "\n";
    for (const CertificatePair& p : r.certificate)
        out << "  pair cycles (" << p.cycle_a << "," << p.cycle_b
            << ") witness vertex " << p.witness_vertex << " cotree edges "
            << p.cotree_edge_a << "," << p.cotree_edge_b << "\n";
    bool identity = true;
    for (size_t i = 0; i < pg.vertex_labels.size(); ++i)
        if (pg.vertex_labels[i] != static_cast<long long>(i)) identity = false;
    if (!identity) {
        out << "  vertex_labels:";
        for (size_t i = 0; i < pg.vertex_labels.size(); ++i)
            out << ' ' << i << "->" << pg.vertex_labels[i];
        out << "\n";
    }
}

struct FileResult {
    int code = kExitOk;
    std::string out;
    std::string err;
};

int require_seed_if_random(const RunConfig& cfg, std::ostream& err) {
    if (cfg.tree == TreeStrategy::SeededRandom && !cfg.seed_set) {
        err << "--tree random requires --seed\n";
        return kExitInput;
    }
    return kExitOk;
}

template <typename PerFile>
int over_inputs(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                PerFile&& per_file) {
    if (cfg.inputs.empty()) {
        err << "no input files\n";
        return kExitInput;
    }
    std::vector<FileResult> results(cfg.inputs.size());
    int count = static_cast<int>(cfg.inputs.size());
    // independent files; output is reassembled in input order below
#pragma omp parallel for schedule(dynamic) if (count > 1)
    for (int i = 0; i < count; ++i) {
        std::ostringstream o, e;
        int code;
        try {
            code = per_file(cfg.inputs[i], o, e);
        } catch (...) {
            code = code_for_current_exception(e, cfg.inputs[i]);
        }
        results[i] = {code, o.str(), e.str()};
    }
    int overall = kExitOk;
    for (const FileResult& r : results) {
        out << r.out;
        err << r.err;
        overall = std::max(overall, r.code);
    }
    return overall;
}

}  // namespace

int run_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (int c = require_seed_if_random(cfg, err)) return c;
    return over_inputs(cfg, out, err,
                       [&](const std::string& path, std::ostream& o,
                           std::ostream&) {
        ParsedGraph pg = parse_edge_list(read_file(path));
        GenusReport r = maximum_genus(pg.graph, cfg.tree, cfg.seed);
        if (cfg.format == OutputFormat::Json)
            o << report_json(path, pg, r).dump(2) << "\n";
        else
            report_text(o, path, pg, r, cfg.verbose);
        return kExitOk;
    });
}

namespace {

std::string bundle_path(const RunConfig& cfg, const std::string& input) {
    std::string base = input;
    if (size_t slash = base.find_last_of("/\\"); slash != std::string::npos)
        base = base.substr(slash + 1);
    for (char& c : base)
        if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
    return cfg.bundle_dir + "/counterexample_" + base + ".json";
}

}  // namespace

std::string write_counterexample_bundle(const RunConfig& cfg,
                                        const std::string& input,
                                        const ParsedGraph& pg,
                                        const GenusReport& r,
                                        const XiOracleResult& oracle) {
    ordered_json j;
    j["input"] = input;
    ordered_json graph = ordered_json::array();
    for (const Edge& e : pg.graph.edges())
        graph.push_back(ordered_json::array({e.u, e.v}));
    j["graph_edges"] = std::move(graph);
    j["pipeline"] = report_json(input, pg, r);

    IntersectionGraph ig =
        build_intersection_graph(fundamental_cycles(pg.graph, r.tree_used));
    ordered_json gm = ordered_json::array();
    for (auto [a, b] : ig.edges) gm.push_back(ordered_json::array({a, b}));
    j["gm_edges"] = std::move(gm);

    ordered_json orc;
    orc["xi"] = oracle.xi;
    orc["gamma"] = (betti(pg.graph) - oracle.xi) / 2;
    orc["optimal_tree_edges"] = oracle.optimal_tree.tree_edges.to_vector();
    orc["trees_enumerated"] = oracle.trees_enumerated;
    j["oracle"] = std::move(orc);

    ordered_json table = ordered_json::array();
    for_each_spanning_tree(pg.graph, cfg.budget, [&](const EdgeSubset& te) {
        SpanningTree t = tree_from_edges(pg.graph, te);
        ordered_json row;
        row["tree_edges"] = te.to_vector();
        row["xi"] = xi_of_tree(pg.graph, t);
        table.push_back(std::move(row));
    });
    j["xi_table"] = std::move(table);

    std::string path = bundle_path(cfg, input);
    std::ofstream f(path, std::ios::binary);
    f << j.dump(2) << "\n";
    return path;
}

int run_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (int c = require_seed_if_random(cfg, err)) return c;
    return over_inputs(cfg, out, err,
                       [&](const std::string& path, std::ostream& o,
                           std::ostream&) {
        ParsedGraph pg = parse_edge_list(read_file(path));
        GenusReport r = maximum_genus(pg.graph, cfg.tree, cfg.seed);
        XiOracleResult oracle = xi_oracle(pg.graph, cfg.budget);
        int oracle_gamma = (betti(pg.graph) - oracle.xi) / 2;
        if (r.gamma_max == oracle_gamma) {
            o << path << ": gamma_max=" << r.gamma_max
              << " oracle agrees (xi=" << oracle.xi << ", "
              << oracle.trees_enumerated << " spanning trees)\n";
            return kExitOk;
        }
        o << path << ": MISMATCH pipeline gamma_max=" << r.gamma_max
          << " oracle gamma_max=" << oracle_gamma << "\n";
        o << "  counterexample bundle written to "
          << write_counterexample_bundle(cfg, path, pg, r, oracle) << "\n";
        return kExitInvariant;
    });
}

namespace {

Multigraph generate_family(const RunConfig& cfg) {
    const std::string& fam = cfg.family;
    const std::vector<long long>& p = cfg.params;
    auto want = [&](size_t k) {
        if (p.size() != k)
            throw std::invalid_argument("family '" + fam + "' takes " +
                                        std::to_string(k) + " parameter(s)");
    };
    auto need_seed = [&] {
        if (!cfg.seed_set)
            throw std::invalid_argument("family '" + fam + "' requires --seed");
    };

    if (fam == "hypercube") {
        want(1);
        return hypercube(static_cast<int>(p[0]));
    }
    if (fam == "gen-petersen") {
        want(2);
        return generalized_petersen(static_cast<int>(p[0]),
                                    static_cast<int>(p[1]));
    }
    if (fam == "bouquet") {
        want(1);
        return bouquet(static_cast<int>(p[0]));
    }
    if (fam == "dumbbell") {
        want(0);
        return dumbbell();
    }
    if (fam == "complete") {
        want(1);
        return complete_graph(static_cast<int>(p[0]));
    }
    if (fam == "complete-bipartite") {
        want(2);
        return complete_bipartite(static_cast<int>(p[0]),
                                  static_cast<int>(p[1]));
    }
    if (fam == "cartesian-path") {
        want(1);
        if (cfg.factor_path.empty())
            throw std::invalid_argument(
                "cartesian-path requires --factor <edge list file>");
        ParsedGraph factor = parse_edge_list(read_file(cfg.factor_path));
        return cartesian_path_product(factor.graph, static_cast<int>(p[0]));
    }
    if (fam == "halin-composition") {
        want(3);
        need_seed();
        return halin_composition(static_cast<int>(p[0]),
                                 static_cast<int>(p[1]),
                                 static_cast<int>(p[2]), cfg.seed);
    }
    if (fam == "random-connected") {
        want(2);
        need_seed();
        return random_connected(static_cast<int>(p[0]),
                                static_cast<int>(p[1]), cfg.loops, cfg.seed);
    }
    throw std::invalid_argument("unknown family '" + fam + "'");
}

}  // namespace

int run_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Multigraph g = generate_family(cfg);
        std::string text = format_edge_list(g);
        if (cfg.output_path.empty()) {
            out << text;
        } else {
            std::ofstream f(cfg.output_path, std::ios::binary);
            if (!f)
                throw std::invalid_argument("cannot write '" +
                                            cfg.output_path + "'");
            f << text;
        }
        return kExitOk;
    } catch (...) {
        return code_for_current_exception(err, "gen " + cfg.family);
    }
}

int run_gm_dump(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (int c = require_seed_if_random(cfg, err)) return c;
    return over_inputs(cfg, out, err,
                       [&](const std::string& path, std::ostream& o,
                           std::ostream&) {
        ParsedGraph pg = parse_edge_list(read_file(path));
        SpanningTree t = spanning_tree(pg.graph, cfg.tree, cfg.seed);
        IntersectionGraph ig =
            build_intersection_graph(fundamental_cycles(pg.graph, t));
        o << "# " << path << " n_cycles=" << ig.n_cycles << "\n";
        for (auto [a, b] : ig.edges) o << a << ' ' << b << '\n';
        return kExitOk;
    });
}

}  // namespace maxgenus
