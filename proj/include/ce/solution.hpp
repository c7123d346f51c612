#pragma once

#include <string>
#include <vector>

#include "ce/instance.hpp"

namespace ce {

enum class Verdict : std::uint8_t { Yes, No };

// Solver output: for Yes, the edit script and the final clustering (a
// partition of all original vertices); for No, a diagnostic tag naming the
// reason (e.g. the reduction rule that fired).
struct Solution {
    Verdict verdict = Verdict::No;
    std::vector<Edit> script;
    std::vector<std::vector<int>> clusters;
    std::string no_reason;
};

struct Validation {
    bool valid = false;
    std::string issue;  // first violated check, empty when valid
};

// Checks, in order: the script applies cleanly (adds on non-edges, deletes on
// edges, no pair edited twice), the result is a cluster graph, every component
// has size >= s, per-vertex edit counts respect alpha/delta, and the total is
// within the budget when one is set. Violations are returned, not thrown.
Validation validate_solution(const Graph& g, const Params& p, const std::vector<Edit>& script,
                             const BudgetOverrides& ov = {});

}  // namespace ce
