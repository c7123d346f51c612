#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ce/formula.hpp"
#include "ce/instance.hpp"

namespace ce {

// Ground truth for everything else in the project: exhaustive enumeration of
// set partitions of the (active) vertices. Feasibility of a partition is
// checked directly against the problem definition plus any pair commitments
// and residual budgets carried by the instance.
struct OracleResult {
    bool feasible = false;
    std::optional<int> min_cost;
    std::vector<std::vector<std::vector<int>>> witnesses;  // all partitions achieving min_cost
};

// Visits every feasible partition (blocks ordered by smallest member) with its
// edit cost. Throws if more than 12 vertices are active.
void for_each_feasible_partition(
    const Instance& inst,
    const std::function<void(const std::vector<std::vector<int>>&, int cost)>& visit);

OracleResult oracle_minimum(const Instance& inst);
OracleResult oracle_minimum(const Graph& g, const Params& p, const BudgetOverrides& ov = {});

// Exhaustive one-in-three satisfiability: returns the first assignment (in the
// order that sets earlier variables true first) where every clause has exactly
// one true variable, or nullopt. Limited to 20 variables.
std::optional<std::vector<bool>> sat_one_in_three(const Formula& f);

}  // namespace ce
