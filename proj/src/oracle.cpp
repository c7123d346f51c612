#include "ce/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ce {

void for_each_feasible_partition(
    const Instance& inst,
    const std::function<void(const std::vector<std::vector<int>>&, int cost)>& visit) {
    const std::vector<int> verts = inst.active_vertices();
    const int m = static_cast<int>(verts.size());
    if (m > 12) throw std::invalid_argument("oracle: refusing more than 12 active vertices");

    const Params& p = inst.params();
    std::vector<int> label(std::max(m, 1), 0);

    auto evaluate = [&]() {
        int blocks = *std::max_element(label.begin(), label.begin() + std::max(m, 1)) + 1;
        if (m == 0) blocks = 0;
        std::vector<int> block_size(blocks, 0);
        std::vector<int> adds(m, 0), dels(m, 0);
        int total = 0;
        for (int i = 0; i < m; ++i) ++block_size[label[i]];
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                PairState st = inst.pair_state(verts[i], verts[j]);
                if (label[i] == label[j]) {
                    if (st == PairState::Forbidden) return;
                    if (!state_is_edge(st)) {
                        ++adds[i];
                        ++adds[j];
                        ++total;
                    }
                } else {
                    if (st == PairState::Permanent) return;
                    if (state_is_edge(st)) {
                        ++dels[i];
                        ++dels[j];
                        ++total;
                    }
                }
            }
        for (int b = 0; b < blocks; ++b)
            if (block_size[b] < p.min_cluster) return;
        for (int i = 0; i < m; ++i)
            if (adds[i] > inst.add_budget(verts[i]) || dels[i] > inst.del_budget(verts[i])) return;
        if (inst.residual_budget() && total > *inst.residual_budget()) return;

        std::vector<std::vector<int>> partition(blocks);
        for (int i = 0; i < m; ++i) partition[label[i]].push_back(verts[i]);
        visit(partition, total);
    };

    if (m == 0) {
        visit({}, 0);
        return;
    }

    // Restricted growth strings: label[i] <= 1 + max(label[0..i-1]).
    for (;;) {
        evaluate();
        int i = m - 1;
        while (i > 0) {
            int prefix_max = *std::max_element(label.begin(), label.begin() + i);
            if (label[i] <= prefix_max) break;
            --i;
        }
        if (i == 0) return;
        ++label[i];
        std::fill(label.begin() + i + 1, label.end(), 0);
    }
}

OracleResult oracle_minimum(const Instance& inst) {
    OracleResult res;
    for_each_feasible_partition(inst, [&](const std::vector<std::vector<int>>& part, int cost) {
        if (!res.min_cost || cost < *res.min_cost) {
            res.min_cost = cost;
            res.witnesses.clear();
        }
        if (cost == *res.min_cost) res.witnesses.push_back(part);
    });
    res.feasible = res.min_cost.has_value();
    return res;
}

OracleResult oracle_minimum(const Graph& g, const Params& p, const BudgetOverrides& ov) {
    return oracle_minimum(Instance(g, p, ov));
}

void Formula::validate() const {
    std::vector<int> occurrences(num_vars, 0);
    for (const auto& clause : clauses) {
        for (int v : clause) {
            if (v < 0 || v >= num_vars)
                throw std::invalid_argument("formula: variable id out of range");
            if (++occurrences[v] > 4)
                throw std::invalid_argument("formula: variable occurs in more than four clauses");
        }
        if (clause[0] == clause[1] || clause[0] == clause[2] || clause[1] == clause[2])
            throw std::invalid_argument("formula: clause variables must be distinct");
    }
}

std::optional<std::vector<bool>> sat_one_in_three(const Formula& f) {
    f.validate();
    if (f.num_vars > 20) throw std::invalid_argument("sat oracle: more than 20 variables");
    const int v = f.num_vars;
    for (std::uint64_t mask = (std::uint64_t{1} << v); mask-- > 0;) {
        std::vector<bool> assignment(v);
        for (int i = 0; i < v; ++i) assignment[i] = (mask >> (v - 1 - i)) & 1u;
        bool ok = true;
        for (const auto& clause : f.clauses) {
            int trues = assignment[clause[0]] + assignment[clause[1]] + assignment[clause[2]];
            if (trues != 1) {
                ok = false;
                break;
            }
        }
        if (ok) return assignment;
    }
    return std::nullopt;
}

}  // namespace ce
