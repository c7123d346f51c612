#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ce/generators.hpp"
#include "ce/io.hpp"
#include "ce/oracle.hpp"
#include "ce/reduction.hpp"
#include "ce/solver.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct ParamFlags {
    int add = 0;
    int del = 0;
    int min_size = 1;
    std::optional<int> budget;

    ce::Params params() const { return ce::Params{add, del, min_size, budget}; }
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags, bool budget_too = true) {
    cmd->add_option("-a,--add", flags.add, "max additions per vertex")->required();
    cmd->add_option("-d,--delete", flags.del, "max deletions per vertex")->required();
    cmd->add_option("-s,--min-size", flags.min_size, "minimum cluster size")->required();
    if (budget_too) cmd->add_option("-k,--budget", flags.budget, "global edit budget");
}

const char* rule_action_name(ce::TraceAction a) {
    switch (a) {
        case ce::TraceAction::AddEdge: return "add";
        case ce::TraceAction::DeleteEdge: return "delete";
        case ce::TraceAction::MakePermanent: return "permanent";
        case ce::TraceAction::MakeForbidden: return "forbidden";
        case ce::TraceAction::CapDelBudget: return "cap-delta";
        case ce::TraceAction::RemoveClique: return "remove";
        case ce::TraceAction::NoInstance: return "no-instance";
    }
    return "?";
}

void print_trace(const ce::RuleTrace& trace) {
    for (const auto& e : trace) {
        std::cerr << "rule " << e.rule << ": " << rule_action_name(e.action);
        if (e.action == ce::TraceAction::RemoveClique) {
            for (int v : e.vertices) std::cerr << " " << v;
        } else if (e.action == ce::TraceAction::CapDelBudget) {
            std::cerr << " " << e.u << " -> " << e.value;
        } else if (e.u >= 0) {
            std::cerr << " " << e.u << " " << e.v;
        }
        std::cerr << "\n";
    }
}

int run_solve(const std::string& path, const ParamFlags& flags, const std::string& mode) {
    ce::ParsedInstance parsed = ce::parse_instance(read_file(path));
    ce::Instance inst(parsed.graph, flags.params(), parsed.overrides);

    std::string chosen = mode;
    const ce::Params p = flags.params();
    if (chosen == "auto") {
        if (p.min_cluster > 2 * (p.add_limit + p.del_limit) && p.add_limit > 0 && p.del_limit > 0)
            chosen = "poly";
        else if (p.add_limit == 0 && p.del_limit == 1 && p.min_cluster <= 2)
            chosen = "zero-one";
        else
            chosen = "branch";
    }

    ce::SolveStats stats;
    ce::Solution sol;
    if (chosen == "poly")
        sol = ce::solve_large_clusters(inst, &stats);
    else if (chosen == "zero-one")
        sol = ce::solve_zero_one(inst, &stats);
    else if (flags.budget)
        sol = ce::solve_decision(inst, &stats);
    else
        sol = ce::solve_minimum(inst, &stats);

    std::cout << ce::serialize_solution(sol);
    std::cerr << "mode " << chosen << ", nodes " << stats.nodes_expanded << ", reductions "
              << stats.reductions_applied << (stats.branch_free ? ", branch-free" : "") << "\n";
    return sol.verdict == ce::Verdict::Yes ? kExitYes : kExitNo;
}

int run_reduce(const std::string& path, const ParamFlags& flags) {
    ce::ParsedInstance parsed = ce::parse_instance(read_file(path));
    ce::Instance inst(parsed.graph, flags.params(), parsed.overrides);
    ce::ReductionOutcome out = ce::reduce(inst);
    print_trace(out.trace);
    if (!out.ok()) {
        std::cout << "s no " << out.no_reason << "\n";
        return kExitNo;
    }
    const ce::Instance& red = *out.reduced;

    std::vector<int> actives = red.active_vertices();
    std::map<int, int> relabel;
    for (int i = 0; i < static_cast<int>(actives.size()); ++i) relabel[actives[i]] = i;

    ce::Graph kernel;
    kernel.n = static_cast<int>(actives.size());
    std::vector<std::pair<int, int>> permanent, forbidden;
    for (size_t i = 0; i < actives.size(); ++i)
        for (size_t j = i + 1; j < actives.size(); ++j) {
            ce::PairState st = red.pair_state(actives[i], actives[j]);
            if (ce::state_is_edge(st)) kernel.add_edge(static_cast<int>(i), static_cast<int>(j));
            if (st == ce::PairState::Permanent)
                permanent.emplace_back(static_cast<int>(i), static_cast<int>(j));
            if (st == ce::PairState::Forbidden)
                forbidden.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    ce::BudgetOverrides caps;
    for (size_t i = 0; i < actives.size(); ++i) {
        caps.add[static_cast<int>(i)] = red.add_budget(actives[i]);
        caps.del[static_cast<int>(i)] = red.del_budget(actives[i]);
    }

    std::cout << "c reduced instance: " << kernel.n << " of " << red.vertex_count()
              << " vertices, " << kernel.edges.size() << " edges, " << red.edit_log().size()
              << " charged edits, " << red.removed_clusters().size() << " removed clusters\n";
    if (red.residual_budget()) {
        const ce::Params p = flags.params();
        long big = std::max(p.add_limit, 2 * p.del_limit);
        long k = *flags.budget;
        long vertex_bound = 5 * k * big / 2;
        long edge_bound = 5 * k * big * (p.add_limit + 3 * p.del_limit) / 4;
        std::cout << "c residual budget " << *red.residual_budget() << "\n";
        std::cout << "c kernel order " << kernel.n << " bound " << vertex_bound << "\n";
        std::cout << "c kernel size " << kernel.edges.size() << " bound " << edge_bound << "\n";
    }
    for (int v : actives) std::cout << "c map " << relabel[v] << " " << v << "\n";
    std::cout << ce::serialize_instance(kernel, caps);
    for (auto [u, v] : permanent) std::cout << "c permanent " << u << " " << v << "\n";
    for (auto [u, v] : forbidden) std::cout << "c forbidden " << u << " " << v << "\n";
    for (const auto& cluster : red.removed_clusters()) {
        std::cout << "c removed";
        for (int v : cluster) std::cout << " " << v;
        std::cout << "\n";
    }
    return kExitYes;
}

int run_oracle(const std::string& path, const ParamFlags& flags) {
    ce::ParsedInstance parsed = ce::parse_instance(read_file(path));
    ce::OracleResult res = ce::oracle_minimum(parsed.graph, flags.params(), parsed.overrides);
    if (!res.feasible) {
        std::cout << "s no infeasible\n";
        return kExitNo;
    }
    std::cout << "s yes " << *res.min_cost << "\n";
    std::cout << "c witnesses " << res.witnesses.size() << "\n";
    for (const auto& cluster : res.witnesses.front()) {
        std::cout << "k";
        for (int v : cluster) std::cout << " " << v;
        std::cout << "\n";
    }
    return kExitYes;
}

int run_verify(const std::string& instance_path, const std::string& solution_path,
               const ParamFlags& flags) {
    ce::ParsedInstance parsed = ce::parse_instance(read_file(instance_path));
    ce::Solution sol = ce::parse_solution(read_file(solution_path));
    if (sol.verdict == ce::Verdict::No) {
        std::cout << "nothing to verify: solution reports a no-instance\n";
        return kExitYes;
    }
    std::vector<bool> seen(parsed.graph.n, false);
    for (const auto& cluster : sol.clusters)
        for (int v : cluster) {
            if (v >= parsed.graph.n || seen[v]) {
                std::cout << "invalid: cluster lines do not partition the vertices\n";
                return kExitNo;
            }
            seen[v] = true;
        }
    for (bool s : seen)
        if (!s) {
            std::cout << "invalid: cluster lines do not partition the vertices\n";
            return kExitNo;
        }
    ce::Validation v =
        ce::validate_solution(parsed.graph, flags.params(), sol.script, parsed.overrides);
    if (!v.valid) {
        std::cout << "invalid: " << v.issue << "\n";
        return kExitNo;
    }
    std::cout << "valid\n";
    return kExitYes;
}

int run_stats(const std::string& path) {
    ce::ParsedInstance parsed = ce::parse_instance(read_file(path));
    const int n = parsed.graph.n;
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : parsed.graph.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    auto comps = ce::graph_components(parsed.graph);
    bool cluster_graph = true;
    for (const auto& block : comps)
        for (size_t i = 0; i < block.size() && cluster_graph; ++i)
            for (size_t j = i + 1; j < block.size(); ++j)
                if (!parsed.graph.has_edge(block[i], block[j])) {
                    cluster_graph = false;
                    break;
                }
    int max_deg = 0, min_deg = n == 0 ? 0 : n;
    for (int v = 0; v < n; ++v) {
        max_deg = std::max(max_deg, static_cast<int>(adj[v].size()));
        min_deg = std::min(min_deg, static_cast<int>(adj[v].size()));
    }
    int triples = 0;
    for (int u = 0; u < n; ++u)
        for (size_t i = 0; i < adj[u].size(); ++i)
            for (size_t j = i + 1; j < adj[u].size(); ++j)
                if (!parsed.graph.has_edge(adj[u][i], adj[u][j])) ++triples;
    std::cout << "vertices " << n << "\n"
              << "edges " << parsed.graph.edges.size() << "\n"
              << "components " << comps.size() << "\n"
              << "cluster-graph " << (cluster_graph ? "yes" : "no") << "\n"
              << "conflict-triples " << triples << "\n"
              << "min-degree " << min_deg << "\n"
              << "max-degree " << max_deg << "\n";
    return kExitYes;
}

std::array<int, 3> parse_clause_spec(const std::string& spec) {
    std::istringstream in(spec);
    std::array<int, 3> c{};
    char comma1, comma2;
    if (!(in >> c[0] >> comma1 >> c[1] >> comma2 >> c[2]) || comma1 != ',' || comma2 != ',' ||
        !(in >> std::ws).eof())
        throw std::runtime_error("clause must look like '0,1,2'");
    return c;
}

std::vector<int> parse_size_spec(const std::string& spec) {
    std::vector<int> sizes;
    std::istringstream in(spec);
    std::string part;
    while (std::getline(in, part, ',')) sizes.push_back(std::stoi(part));
    if (sizes.empty()) throw std::runtime_error("expected comma-separated sizes");
    return sizes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multi-parameterized cluster editing"};
    app.require_subcommand(1);

    ParamFlags solve_flags, reduce_flags, oracle_flags, verify_flags;
    std::string solve_path, reduce_path, oracle_path, verify_instance, verify_solution, stats_path;
    std::string mode = "auto";

    CLI::App* solve = app.add_subcommand("solve", "solve an instance");
    solve->add_option("instance", solve_path)->required();
    add_param_flags(solve, solve_flags);
    solve->add_option("--mode", mode)->check(CLI::IsMember({"auto", "branch", "poly", "zero-one"}));

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "kernelize an instance");
    reduce_cmd->add_option("instance", reduce_path)->required();
    add_param_flags(reduce_cmd, reduce_flags);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force minimum (n <= 12)");
    oracle_cmd->add_option("instance", oracle_path)->required();
    add_param_flags(oracle_cmd, oracle_flags);

    CLI::App* verify = app.add_subcommand("verify", "check a solution file");
    verify->add_option("instance", verify_instance)->required();
    verify->add_option("solution", verify_solution)->required();
    add_param_flags(verify, verify_flags);

    CLI::App* stats_cmd = app.add_subcommand("stats", "print instance statistics");
    stats_cmd->add_option("instance", stats_path)->required();

    CLI::App* generate = app.add_subcommand("generate", "emit generated instances");
    generate->require_subcommand(1);

    int gen_vars = 0;
    std::vector<std::string> gen_clauses;
    CLI::App* gen_sat = generate->add_subcommand("sat", "one-in-three SAT reduction");
    gen_sat->add_option("--vars", gen_vars, "number of variables")->required();
    gen_sat->add_option("--clause", gen_clauses, "clause as 'x,y,z'")->required();

    std::string gen_sizes;
    int gen_flips = 0;
    std::uint64_t gen_seed = 0;
    CLI::App* gen_planted = generate->add_subcommand("planted", "planted partition with flips");
    gen_planted->add_option("--sizes", gen_sizes, "comma-separated cluster sizes")->required();
    gen_planted->add_option("--flips", gen_flips, "number of toggled pairs")->required();
    gen_planted->add_option("--seed", gen_seed, "rng seed")->required();

    generate->add_subcommand("clause-gadget", "the clause gadget graph");
    generate->add_subcommand("variable-gadget", "the variable gadget graph");

    try {
        app.parse(argc, argv);

        if (*solve) return run_solve(solve_path, solve_flags, mode);
        if (*reduce_cmd) return run_reduce(reduce_path, reduce_flags);
        if (*oracle_cmd) return run_oracle(oracle_path, oracle_flags);
        if (*verify) return run_verify(verify_instance, verify_solution, verify_flags);
        if (*stats_cmd) return run_stats(stats_path);

        if (*generate) {
            if (*generate->get_subcommand("sat")) {
                ce::Formula f;
                f.num_vars = gen_vars;
                for (const auto& spec : gen_clauses) f.clauses.push_back(parse_clause_spec(spec));
                ce::GadgetLayout layout = ce::build_sat_reduction(f);
                std::cout << "c one-in-three SAT reduction, a=2 d=1 s=1\n";
                for (int j = 0; j < static_cast<int>(f.clauses.size()); ++j) {
                    std::cout << "c clause " << j << " vertex " << layout.clause_vertex[j]
                              << " edges";
                    for (auto [u, v] : layout.clause_edge[j]) std::cout << " " << u << "-" << v;
                    std::cout << "\n";
                }
                for (int x = 0; x < f.num_vars; ++x) {
                    std::cout << "c variable " << x << " slots";
                    for (int t = 0; t < 4; ++t) std::cout << " " << layout.var_slot[x][t];
                    std::cout << "\n";
                }
                std::cout << ce::serialize_instance(layout.graph);
            } else if (*generate->get_subcommand("planted")) {
                ce::PlantedInstance planted =
                    ce::planted_instance(parse_size_spec(gen_sizes), gen_flips, gen_seed);
                std::cout << "c planted partition, flips " << gen_flips << ", seed " << gen_seed
                          << "\n";
                for (const auto& block : planted.planted) {
                    std::cout << "c planted";
                    for (int v : block) std::cout << " " << v;
                    std::cout << "\n";
                }
                std::cout << ce::serialize_instance(planted.graph);
            } else if (*generate->get_subcommand("clause-gadget")) {
                std::cout << "c clause gadget: K4 {0,1,2,3}, bridge 3-4, clause vertex 5\n"
                          << ce::serialize_instance(ce::clause_gadget());
            } else {
                std::cout << "c variable gadget: cycle {0,1,2,3}, occurrence slots {4,5,6,7}\n"
                          << ce::serialize_instance(ce::variable_gadget());
            }
            return kExitYes;
        }
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitYes : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
