#include "ce/solution.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace ce {

namespace {
std::string pair_str(int u, int v) { return std::to_string(u) + " " + std::to_string(v); }
}  // namespace

Validation validate_solution(const Graph& g, const Params& p, const std::vector<Edit>& script,
                             const BudgetOverrides& ov) {
    p.validate();
    std::vector<std::vector<bool>> adj(g.n, std::vector<bool>(g.n, false));
    for (auto [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v)
            throw std::invalid_argument("validate_solution: malformed input graph");
        adj[u][v] = adj[v][u] = true;
    }

    std::vector<int> adds(g.n, 0), dels(g.n, 0);
    std::set<std::pair<int, int>> touched;
    for (const Edit& e : script) {
        if (e.u < 0 || e.v >= g.n)
            throw std::invalid_argument("validate_solution: edit endpoint out of range");
        if (!touched.insert({e.u, e.v}).second)
            return {false, "pair " + pair_str(e.u, e.v) + " edited twice"};
        if (e.kind == EditKind::Add) {
            if (adj[e.u][e.v]) return {false, "addition of existing edge " + pair_str(e.u, e.v)};
            adj[e.u][e.v] = adj[e.v][e.u] = true;
            ++adds[e.u];
            ++adds[e.v];
        } else {
            if (!adj[e.u][e.v]) return {false, "deletion of missing edge " + pair_str(e.u, e.v)};
            adj[e.u][e.v] = adj[e.v][e.u] = false;
            ++dels[e.u];
            ++dels[e.v];
        }
    }

    Graph edited;
    edited.n = g.n;
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u)
            if (adj[u][v]) edited.edges.emplace_back(u, v);

    auto blocks = graph_components(edited);
    for (const auto& block : blocks)
        for (size_t i = 0; i < block.size(); ++i)
            for (size_t j = i + 1; j < block.size(); ++j)
                if (!adj[block[i]][block[j]])
                    return {false, "result is not a cluster graph: " +
                                       pair_str(block[i], block[j]) + " missing inside a component"};

    for (const auto& block : blocks)
        if (static_cast<int>(block.size()) < p.min_cluster)
            return {false, "cluster containing vertex " + std::to_string(block.front()) +
                               " is below the minimum size"};

    auto budget_of = [](const std::map<int, int>& m, int v, int dflt) {
        auto it = m.find(v);
        return it == m.end() ? dflt : it->second;
    };
    for (int v = 0; v < g.n; ++v) {
        if (adds[v] > budget_of(ov.add, v, p.add_limit))
            return {false, "alpha exceeded at vertex " + std::to_string(v)};
        if (dels[v] > budget_of(ov.del, v, p.del_limit))
            return {false, "delta exceeded at vertex " + std::to_string(v)};
    }

    if (p.edit_budget && static_cast<int>(script.size()) > *p.edit_budget)
        return {false, "edit budget exceeded"};

    return {true, ""};
}

}  // namespace ce
