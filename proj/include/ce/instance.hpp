#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ce/graph.hpp"
#include "ce/params.hpp"

namespace ce {

// State of an unordered vertex pair. Plain Edge/NonEdge are still undecided;
// Permanent and Forbidden record commitments about the solution graph. A pair
// can never be committed both ways: that contradiction is reported as a
// no-instance by whoever detects it, never stored.
enum class PairState : std::uint8_t { NonEdge, Forbidden, Edge, Permanent };

inline bool state_is_edge(PairState s) {
    return s == PairState::Edge || s == PairState::Permanent;
}
inline bool state_is_decided(PairState s) {
    return s == PairState::Forbidden || s == PairState::Permanent;
}

enum class EditKind : std::uint8_t { Add, Delete };

// One edge-edit operation. Endpoints are normalized to u < v.
struct Edit {
    EditKind kind;
    int u;
    int v;

    Edit(EditKind k, int a, int b);
    bool operator==(const Edit&) const = default;
};

// Induced path on three vertices: edges u-v and u-w, non-edge v-w.
struct ConflictTriple {
    int u;  // center
    int v;
    int w;
};

struct ComponentInfo {
    std::vector<std::vector<int>> blocks;  // sorted blocks, ordered by min member
    bool is_cluster_graph = false;         // true iff every block induces a clique
};

// A cluster-editing instance annotated with pair commitments, residual
// per-vertex budgets, the residual global budget, the accumulated edit log,
// and clusters already split off by the reduction. Instances are
// self-contained values: copying one yields an independent search node.
class Instance {
public:
    Instance(const Graph& g, const Params& p, const BudgetOverrides& ov = {});

    int vertex_count() const { return n_; }
    int active_count() const { return active_count_; }
    bool is_active(int v) const { return active_[v]; }
    std::vector<int> active_vertices() const;
    const Params& params() const { return params_; }

    PairState pair_state(int u, int v) const;  // symmetric; throws on u == v or out of range
    bool has_edge(int u, int v) const { return state_is_edge(pair_state(u, v)); }

    int add_budget(int v) const { return add_budget_[v]; }  // residual alpha(v)
    int del_budget(int v) const { return del_budget_[v]; }  // residual delta(v)
    int initial_add_budget(int v) const { return initial_add_[v]; }
    int initial_del_budget(int v) const { return initial_del_[v]; }
    std::optional<int> residual_budget() const { return residual_k_; }

    const std::vector<Edit>& edit_log() const { return edit_log_; }
    const std::vector<std::vector<int>>& removed_clusters() const { return removed_clusters_; }

    // Structural queries over the current edge set (Permanent counts as edge),
    // restricted to active vertices.
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<int> permanent_neighbors(int v) const;
    std::vector<int> forbidden_partners(int v) const;
    int common_neighbors(int u, int v) const;
    int exclusive_neighbors(int u, int v) const;  // |N(u) \ N(v)| excluding v itself
    int undecided_pair_count() const;

    std::optional<ConflictTriple> find_conflict_triple() const;
    ComponentInfo components() const;

    // Charged mutation. Add requires state NonEdge, Delete requires state Edge
    // (anything else but Delete-on-Permanent is a logic error). Returns false
    // for a detected no-instance: budget underflow or Delete on Permanent.
    [[nodiscard]] bool apply_edit(const Edit& e);

    // Uncharged annotation moves used by the reduction.
    void set_permanent(int u, int v);              // Edge -> Permanent
    void set_forbidden(int u, int v);              // NonEdge -> Forbidden
    void cap_del_budget(int v, int value);         // lowers delta(v)
    void remove_cluster(const std::vector<int>& vs);

    // Resets the global budget; the residual becomes k - |edit_log|. Used by
    // iterative deepening and by fault-injection tests.
    void set_edit_budget(std::optional<int> k);

    bool operator==(const Instance& other) const;

private:
    int pair_index(int u, int v) const;
    void check_pair(int u, int v) const;
    void set_state(int u, int v, PairState s);

    int n_ = 0;
    int words_ = 0;
    Params params_;
    std::vector<PairState> pairs_;
    std::vector<int> add_budget_, del_budget_;
    std::vector<int> initial_add_, initial_del_;
    std::optional<int> residual_k_;
    std::vector<Edit> edit_log_;
    std::vector<std::vector<int>> removed_clusters_;
    std::vector<bool> active_;
    int active_count_ = 0;

    // Bit-packed incidence rows kept in sync with pairs_, one row per vertex:
    // current edges, permanent edges, forbidden pairs.
    std::vector<std::uint64_t> adj_, perm_, forb_;
    bool row_bit(const std::vector<std::uint64_t>& rows, int u, int v) const {
        return (rows[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }
    void set_row_bit(std::vector<std::uint64_t>& rows, int u, int v, bool on);
};

// Builds a fresh instance; throws std::invalid_argument on self-loops,
// duplicate edges, out-of-range ids, or overrides exceeding the limits.
Instance build_instance(int n, const std::vector<std::pair<int, int>>& edges, const Params& p,
                        const BudgetOverrides& ov = {});

}  // namespace ce
