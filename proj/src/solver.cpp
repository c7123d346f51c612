#include "ce/solver.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <optional>
#include <stdexcept>

namespace ce {

namespace {

Solution make_yes(const Instance& inst) {
    Solution sol;
    sol.verdict = Verdict::Yes;
    sol.script = inst.edit_log();
    sol.clusters = inst.components().blocks;
    for (const auto& rc : inst.removed_clusters()) sol.clusters.push_back(rc);
    std::sort(sol.clusters.begin(), sol.clusters.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return sol;
}

// Cross-checks a solver result against the plain problem definition. Only
// meaningful when the solve started from an unedited instance.
void verify_yes(const Instance& root, const Solution& sol) {
    if (!root.edit_log().empty()) return;
    Graph g;
    g.n = root.vertex_count();
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u)
            if (state_is_edge(root.pair_state(u, v))) g.edges.emplace_back(u, v);
    BudgetOverrides ov;
    for (int v = 0; v < g.n; ++v) {
        if (root.initial_add_budget(v) != root.params().add_limit)
            ov.add[v] = root.initial_add_budget(v);
        if (root.initial_del_budget(v) != root.params().del_limit)
            ov.del[v] = root.initial_del_budget(v);
    }
    Validation check = validate_solution(g, root.params(), sol.script, ov);
    if (!check.valid) throw std::logic_error("solver produced an invalid script: " + check.issue);
}

struct SearchCtx {
    SolveStats stats;
    Solution result;
    std::string last_reason = "exhausted";
};

bool search(const Instance& node, SearchCtx& ctx) {
    ++ctx.stats.nodes_expanded;
    ReductionOutcome red = reduce(node);
    ctx.stats.reductions_applied += trace_action_count(red.trace);
    if (!red.ok()) {
        ctx.last_reason = red.no_reason;
        return false;
    }
    const Instance& cur = *red.reduced;

    if (auto t = cur.find_conflict_triple()) {
        ctx.stats.branch_free = false;
        const std::array<Edit, 3> branches = {Edit(EditKind::Delete, t->u, t->v),
                                              Edit(EditKind::Delete, t->u, t->w),
                                              Edit(EditKind::Add, t->v, t->w)};
        for (const Edit& e : branches) {
            PairState st = cur.pair_state(e.u, e.v);
            // An already committed pair leaves nothing to branch on here.
            if (e.kind == EditKind::Add ? st != PairState::NonEdge : st != PairState::Edge)
                continue;
            Instance child = cur;
            if (!child.apply_edit(e)) continue;
            if (search(child, ctx)) return true;
        }
        ctx.last_reason = "exhausted";
        return false;
    }

    // Cluster graph on the active vertices. Components below the size floor
    // can only be fixed by merging across components; decide one outgoing
    // pair at a time (in or out), which is exhaustive.
    const int s = cur.params().min_cluster;
    for (const auto& block : cur.components().blocks) {
        if (static_cast<int>(block.size()) >= s) continue;
        std::optional<std::pair<int, int>> open;
        for (int u : block) {
            for (int v : cur.active_vertices())
                if (v != u && cur.pair_state(u, v) == PairState::NonEdge) {
                    open = {u, v};
                    break;
                }
            if (open) break;
        }
        if (!open) {
            ctx.last_reason = "exhausted";  // every escape pair is forbidden
            return false;
        }
        ctx.stats.branch_free = false;
        {
            Instance child = cur;
            if (child.apply_edit(Edit(EditKind::Add, open->first, open->second)) &&
                search(child, ctx))
                return true;
        }
        {
            Instance child = cur;
            child.set_forbidden(open->first, open->second);
            if (search(child, ctx)) return true;
        }
        ctx.last_reason = "exhausted";
        return false;
    }

    ctx.result = make_yes(cur);
    return true;
}

}  // namespace

Solution solve_decision(const Instance& inst, SolveStats* stats) {
    if (!inst.residual_budget())
        throw std::invalid_argument("solve_decision: requires an edit budget");
    SearchCtx ctx;
    bool found = search(inst, ctx);
    if (stats) *stats = ctx.stats;
    if (!found) {
        Solution sol;
        sol.verdict = Verdict::No;
        sol.no_reason = ctx.last_reason;
        return sol;
    }
    verify_yes(inst, ctx.result);
    return ctx.result;
}

Solution solve_minimum(const Instance& inst, SolveStats* stats) {
    if (inst.params().edit_budget)
        throw std::invalid_argument("solve_minimum: edit budget must be absent");
    if (!inst.edit_log().empty())
        throw std::invalid_argument("solve_minimum: expects a fresh instance");
    const int m = inst.active_count();
    const int max_k = m * (m - 1) / 2;
    Solution last;
    last.verdict = Verdict::No;
    last.no_reason = "exhausted";
    for (int k = 0; k <= max_k; ++k) {
        Instance probe = inst;
        probe.set_edit_budget(k);
        SolveStats run;
        Solution sol = solve_decision(probe, &run);
        if (stats) *stats = run;
        if (sol.verdict == Verdict::Yes) return sol;
        last = sol;
    }
    return last;
}

Solution solve_large_clusters(const Instance& inst, SolveStats* stats) {
    const Params& p = inst.params();
    if (!(p.min_cluster > 2 * (p.add_limit + p.del_limit) && p.add_limit > 0 && p.del_limit > 0))
        throw std::invalid_argument(
            "solve_large_clusters: requires s > 2(a+d) and a,d > 0; use solve_decision instead");
    SolveStats st;
    st.nodes_expanded = 1;
    ReductionOutcome red = reduce(inst);
    st.reductions_applied = trace_action_count(red.trace);
    if (stats) *stats = st;
    if (!red.ok()) {
        Solution sol;
        sol.verdict = Verdict::No;
        sol.no_reason = red.no_reason;
        return sol;
    }
    const Instance& cur = *red.reduced;
    if (cur.undecided_pair_count() != 0)
        throw std::logic_error("large-cluster path: reduction left an undecided pair");
    ComponentInfo comps = cur.components();
    bool sized = true;
    for (const auto& block : comps.blocks)
        sized = sized && static_cast<int>(block.size()) >= p.min_cluster;
    if (!comps.is_cluster_graph || !sized) {
        Solution sol;
        sol.verdict = Verdict::No;
        sol.no_reason = "min_size";
        return sol;
    }
    Solution sol = make_yes(cur);
    verify_yes(inst, sol);
    return sol;
}

namespace {

// Maximum matching on one path/cycle component in which permanent edges are
// forced, every vertex may lose at most delta(v) incident edges, and an
// unmatched vertex becomes a singleton cluster (legal only when s = 1).
// Returns the edges to delete, or nullopt when no valid matching exists.
std::optional<std::vector<std::pair<int, int>>> component_deletions(const Instance& inst,
                                                                    const std::vector<int>& block) {
    const int s = inst.params().min_cluster;
    auto can_uncover = [&](int v) { return s == 1 && inst.degree(v) <= inst.del_budget(v); };
    auto can_cover = [&](int v) { return inst.degree(v) - 1 <= inst.del_budget(v); };

    if (block.size() == 1) {
        if (!can_uncover(block.front())) return std::nullopt;
        return std::vector<std::pair<int, int>>{};
    }

    // Lay the component out as a walk.
    std::vector<int> endpoints;
    for (int v : block)
        if (inst.degree(v) == 1) endpoints.push_back(v);
    const bool cycle = endpoints.empty();
    std::vector<int> order;
    order.reserve(block.size());
    int start = cycle ? block.front() : *std::min_element(endpoints.begin(), endpoints.end());
    int prev = -1, at = start;
    for (;;) {
        order.push_back(at);
        if (order.size() == block.size()) break;
        std::vector<int> ns = inst.neighbors(at);
        int next = -1;
        for (int w : ns)
            if (w != prev && (next == -1 || w < next)) next = w;
        prev = at;
        at = next;
    }
    const int m = static_cast<int>(order.size());
    const int num_edges = cycle ? m : m - 1;
    std::vector<bool> forced(num_edges);
    for (int i = 0; i < num_edges; ++i)
        forced[i] = inst.pair_state(order[i], order[(i + 1) % m]) == PairState::Permanent;

    const int NEG = INT_MIN / 2;
    struct Parent {
        int prev_state = -1;
        bool took = false;
    };

    std::optional<std::vector<bool>> best_taken;
    int best_value = NEG;

    auto consider = [&](int take0) {  // take0 < 0: plain path
        const bool is_cycle = take0 >= 0;
        const int first_edge = is_cycle ? 1 : 0;
        std::vector<std::array<int, 2>> value(m, {NEG, NEG});
        std::vector<std::array<Parent, 2>> parent(m);
        if (is_cycle)
            value[1][take0] = take0;
        else
            value[0][0] = 0;

        for (int i = first_edge; i < (is_cycle ? m - 1 : num_edges); ++i) {
            int v = order[i];
            for (int c = 0; c < 2; ++c) {
                if (value[i][c] == NEG) continue;
                if (!forced[i] && (c ? can_cover(v) : can_uncover(v)) &&
                    value[i][c] > value[i + 1][0]) {
                    value[i + 1][0] = value[i][c];
                    parent[i + 1][0] = {c, false};
                }
                if (c == 0 && can_cover(v) && value[i][0] + 1 > value[i + 1][1]) {
                    value[i + 1][1] = value[i][0] + 1;
                    parent[i + 1][1] = {0, true};
                }
            }
        }

        int final_state = -1, total = NEG;
        bool wrap_taken = false;
        if (!is_cycle) {
            int v = order[m - 1];
            for (int c = 1; c >= 0; --c) {
                if (value[m - 1][c] == NEG) continue;
                if (!(c ? can_cover(v) : can_uncover(v))) continue;
                if (value[m - 1][c] > total) {
                    total = value[m - 1][c];
                    final_state = c;
                }
            }
        } else {
            int vl = order[m - 1], v0 = order[0];
            for (int c = 1; c >= 0; --c) {
                if (value[m - 1][c] == NEG) continue;
                // skip the wrap edge
                if (!forced[m - 1] && (c ? can_cover(vl) : can_uncover(vl)) &&
                    (take0 ? can_cover(v0) : can_uncover(v0)) && value[m - 1][c] > total) {
                    total = value[m - 1][c];
                    final_state = c;
                    wrap_taken = false;
                }
                // take the wrap edge
                if (c == 0 && take0 == 0 && can_cover(vl) && can_cover(v0) &&
                    value[m - 1][0] + 1 > total) {
                    total = value[m - 1][0] + 1;
                    final_state = 0;
                    wrap_taken = true;
                }
            }
        }
        if (final_state < 0 || total <= best_value) return;

        std::vector<bool> taken(num_edges, false);
        if (is_cycle) {
            taken[0] = take0 == 1;
            taken[m - 1] = wrap_taken;
        }
        int state = final_state;
        for (int i = m - 1; i > first_edge; --i) {
            Parent pa = parent[i][state];
            taken[i - 1] = pa.took;
            state = pa.prev_state;
        }
        best_value = total;
        best_taken = std::move(taken);
    };

    if (cycle) {
        if (!forced[0]) consider(0);
        consider(1);
    } else {
        consider(-1);
    }

    if (!best_taken) return std::nullopt;
    std::vector<std::pair<int, int>> deletions;
    for (int i = 0; i < num_edges; ++i)
        if (!(*best_taken)[i]) {
            int a = order[i], b = order[(i + 1) % m];
            deletions.emplace_back(std::min(a, b), std::max(a, b));
        }
    std::sort(deletions.begin(), deletions.end());
    return deletions;
}

}  // namespace

Solution solve_zero_one(const Instance& inst, SolveStats* stats) {
    const Params& p = inst.params();
    if (!(p.add_limit == 0 && p.del_limit == 1 && p.min_cluster <= 2))
        throw std::invalid_argument(
            "solve_zero_one: requires a = 0, d = 1, s <= 2; use solve_decision instead");
    SolveStats st;
    st.nodes_expanded = 1;
    ReductionOutcome red = reduce(inst);
    st.reductions_applied = trace_action_count(red.trace);
    if (stats) *stats = st;
    Solution sol;
    sol.verdict = Verdict::No;
    if (!red.ok()) {
        sol.no_reason = red.no_reason;
        return sol;
    }
    Instance cur = *red.reduced;

    // The reduced instance is triangle-free, so degree three would force an
    // impossible clique of size three or more.
    for (int v : cur.active_vertices())
        if (cur.degree(v) >= 3) {
            sol.no_reason = "zero_one_degree";
            return sol;
        }

    std::vector<std::pair<int, int>> deletions;
    for (const auto& block : cur.components().blocks) {
        auto dels = component_deletions(cur, block);
        if (!dels) {
            sol.no_reason = "zero_one_matching";
            return sol;
        }
        deletions.insert(deletions.end(), dels->begin(), dels->end());
    }
    if (cur.residual_budget() &&
        static_cast<int>(deletions.size()) > *cur.residual_budget()) {
        sol.no_reason = "budget";
        return sol;
    }
    for (auto [u, v] : deletions)
        if (!cur.apply_edit(Edit(EditKind::Delete, u, v)))
            throw std::logic_error("zero-one path: matching violates a budget");

    sol = make_yes(cur);
    verify_yes(inst, sol);
    return sol;
}

}  // namespace ce
