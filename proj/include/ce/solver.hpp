#pragma once

#include "ce/reduction.hpp"
#include "ce/solution.hpp"

namespace ce {

struct SolveStats {
    long nodes_expanded = 0;      // search nodes visited, root included
    long reductions_applied = 0;  // reduction actions across the whole run
    bool branch_free = true;      // true iff no branching occurred
};

// Bounded search: reduce, branch three ways on a conflict triple, and grow
// undersized cluster-graph components by deciding one outgoing pair at a time.
// Requires an edit budget.
Solution solve_decision(const Instance& inst, SolveStats* stats = nullptr);

// Optimization mode: iterative deepening over k. Requires the budget absent;
// the returned script is minimum-length.
Solution solve_minimum(const Instance& inst, SolveStats* stats = nullptr);

// Polynomial path for s > 2(a+d) with a > 0 and d > 0: the reduction alone
// decides every pair. Never branches.
Solution solve_large_clusters(const Instance& inst, SolveStats* stats = nullptr);

// Polynomial path for a = 0, d = 1, s <= 2: after reduction the graph is a
// union of paths and cycles, solved by maximum matching with cover
// constraints.
Solution solve_zero_one(const Instance& inst, SolveStats* stats = nullptr);

}  // namespace ce
