#include "ce/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace ce {

Graph clause_gadget() {
    return make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
}

Graph variable_gadget() {
    return make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

GadgetLayout build_sat_reduction(const Formula& f) {
    f.validate();
    GadgetLayout layout;
    layout.params = Params{2, 1, 1, std::nullopt};
    const int num_clauses = static_cast<int>(f.clauses.size());
    Graph& g = layout.graph;
    g.n = 6 * num_clauses + 8 * f.num_vars;

    layout.clause_vertex.resize(num_clauses);
    layout.clause_edge.resize(num_clauses);
    for (int j = 0; j < num_clauses; ++j) {
        const int base = 6 * j;
        for (auto [u, v] : clause_gadget().edges) g.add_edge(base + u, base + v);
        layout.clause_vertex[j] = base + 5;
    }
    layout.var_slot.resize(f.num_vars);
    for (int x = 0; x < f.num_vars; ++x) {
        const int base = 6 * num_clauses + 8 * x;
        for (auto [u, v] : variable_gadget().edges) g.add_edge(base + u, base + v);
        for (int t = 0; t < 4; ++t) layout.var_slot[x][t] = base + 4 + t;
    }

    // Wire every clause vertex to the next free occurrence slot of each of its
    // variables, in clause order; unused slots stay pendant.
    std::vector<int> next_slot(f.num_vars, 0);
    for (int j = 0; j < num_clauses; ++j)
        for (int pos = 0; pos < 3; ++pos) {
            int x = f.clauses[j][pos];
            int slot = layout.var_slot[x][next_slot[x]++];
            g.add_edge(layout.clause_vertex[j], slot);
            layout.clause_edge[j][pos] = {std::min(layout.clause_vertex[j], slot),
                                          std::max(layout.clause_vertex[j], slot)};
        }
    return layout;
}

int satisfying_layout_cost(const Formula& f, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != f.num_vars)
        throw std::invalid_argument("layout cost: assignment size mismatch");
    int cost = 5 * static_cast<int>(f.clauses.size());
    for (bool value : assignment) cost += value ? 8 : 6;
    return cost;
}

std::optional<std::vector<bool>> recover_assignment(const GadgetLayout& layout, const Formula& f,
                                                    const std::vector<Edit>& script) {
    std::map<std::pair<int, int>, std::pair<int, int>> edge_to_slot;  // pair -> (clause, pos)
    for (int j = 0; j < static_cast<int>(layout.clause_edge.size()); ++j)
        for (int pos = 0; pos < 3; ++pos) edge_to_slot[layout.clause_edge[j][pos]] = {j, pos};

    std::vector<int> deleted_per_clause(f.clauses.size(), 0);
    std::vector<int> value(f.num_vars, -1);
    for (const Edit& e : script) {
        if (e.kind != EditKind::Delete) continue;
        auto it = edge_to_slot.find({e.u, e.v});
        if (it == edge_to_slot.end()) continue;
        auto [j, pos] = it->second;
        ++deleted_per_clause[j];
        int x = f.clauses[j][pos];
        if (value[x] == 0) return std::nullopt;
        value[x] = 1;
    }
    for (size_t j = 0; j < f.clauses.size(); ++j) {
        if (deleted_per_clause[j] != 1) return std::nullopt;
        for (int pos = 0; pos < 3; ++pos) {
            int x = f.clauses[j][pos];
            if (value[x] == -1) value[x] = 0;
        }
    }
    std::vector<bool> assignment(f.num_vars, false);
    for (int x = 0; x < f.num_vars; ++x) assignment[x] = value[x] == 1;
    return assignment;
}

PlantedInstance planted_instance(const std::vector<int>& sizes, int flips, std::uint64_t seed) {
    PlantedInstance out;
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("planted_instance: cluster sizes must be >= 1");
        n += s;
    }
    out.graph.n = n;
    int base = 0;
    for (int s : sizes) {
        std::vector<int> block;
        for (int v = base; v < base + s; ++v) block.push_back(v);
        for (size_t i = 0; i < block.size(); ++i)
            for (size_t j = i + 1; j < block.size(); ++j)
                out.graph.add_edge(block[i], block[j]);
        out.planted.push_back(std::move(block));
        base += s;
    }

    const int total_pairs = n * (n - 1) / 2;
    if (flips < 0 || flips > total_pairs)
        throw std::invalid_argument("planted_instance: flip count out of range");

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(total_pairs);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);

    // Partial Fisher-Yates picks `flips` distinct pairs deterministically.
    std::mt19937_64 rng(seed);
    std::vector<bool> flipped(total_pairs, false);
    for (int i = 0; i < flips; ++i) {
        int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(total_pairs - i));
        std::swap(pairs[i], pairs[j]);
        auto [u, v] = pairs[i];
        auto it = std::find(out.graph.edges.begin(), out.graph.edges.end(), std::make_pair(u, v));
        if (it == out.graph.edges.end())
            out.graph.edges.emplace_back(u, v);
        else
            out.graph.edges.erase(it);
    }
    std::sort(out.graph.edges.begin(), out.graph.edges.end());
    return out;
}

}  // namespace ce
