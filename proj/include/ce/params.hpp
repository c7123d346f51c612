#pragma once

#include <map>
#include <optional>

namespace ce {

// Problem parameters: per-vertex edit capacities, the cluster size floor,
// and the optional global edit budget (absent in optimization mode).
struct Params {
    int add_limit = 0;               // a: max edge additions incident to one vertex
    int del_limit = 0;               // d: max edge deletions incident to one vertex
    int min_cluster = 1;             // s: every final cluster has at least this many vertices
    std::optional<int> edit_budget;  // k: global bound on the number of edits

    void validate() const;  // throws std::invalid_argument
    bool operator==(const Params&) const = default;
};

// Per-vertex overrides for the initial capacities alpha(v)/delta(v).
// Values must lie in [0, add_limit] / [0, del_limit].
struct BudgetOverrides {
    std::map<int, int> add;
    std::map<int, int> del;
};

}  // namespace ce
