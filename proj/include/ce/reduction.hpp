#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ce/instance.hpp"

namespace ce {

enum class TraceAction : std::uint8_t {
    AddEdge,
    DeleteEdge,
    MakePermanent,
    MakeForbidden,
    CapDelBudget,
    RemoveClique,
    NoInstance,
};

// One applied reduction action. Replaying a trace against the original
// instance reproduces the reduced instance, no conditions re-evaluated.
struct TraceEntry {
    int rule = 0;
    TraceAction action;
    int u = -1;
    int v = -1;
    int value = 0;              // CapDelBudget: the new delta(v)
    std::vector<int> vertices;  // RemoveClique: the removed set
};

using RuleTrace = std::vector<TraceEntry>;

struct ReductionOutcome {
    std::optional<Instance> reduced;  // nullopt: no-instance
    std::string no_reason;            // "ruleN" naming the trigger when no-instance
    RuleTrace trace;

    bool ok() const { return reduced.has_value(); }
};

// Full cascade: rule groups run in order (1-3, 4-5, 6-8, 9-12, 13-15, 16-17);
// a group only runs while all earlier groups are at fixpoint, and the scan
// restarts from the first group after every change. Terminates at a certified
// fixpoint or with a no-instance.
ReductionOutcome reduce(const Instance& inst);

// Single rule groups, each run to its own fixpoint. Within a pass, conditions
// are collected from a snapshot and re-validated before each application.
ReductionOutcome apply_base_rules(const Instance& inst);             // rules 1-3
ReductionOutcome apply_triple_rules(const Instance& inst);           // rules 4-5
ReductionOutcome apply_common_neighbor_rules(const Instance& inst);  // rules 6-8
ReductionOutcome apply_cluster_size_rules(const Instance& inst);     // rules 9-12
ReductionOutcome apply_permanent_clique_rules(const Instance& inst); // rules 13-15
ReductionOutcome apply_isolated_clique_rules(const Instance& inst);  // rules 16-17

// Reapplies the recorded actions of a successful reduction.
void replay_trace(Instance& inst, const RuleTrace& trace);

// Actions applied (NoInstance entries excluded).
int trace_action_count(const RuleTrace& trace);

}  // namespace ce
