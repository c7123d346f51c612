#include "ce/reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ce {

namespace {

struct PassResult {
    bool changed = false;
    bool dead = false;
    int rule = 0;
};

struct Ctx {
    Instance& inst;
    RuleTrace& trace;
    PassResult res;

    bool die(int rule) {
        trace.push_back({rule, TraceAction::NoInstance, -1, -1, 0, {}});
        res.dead = true;
        res.rule = rule;
        return false;
    }
    bool charged_add(int rule, int u, int v) {
        if (!inst.apply_edit(Edit(EditKind::Add, u, v))) return die(rule);
        trace.push_back({rule, TraceAction::AddEdge, std::min(u, v), std::max(u, v), 0, {}});
        res.changed = true;
        return true;
    }
    bool charged_del(int rule, int u, int v) {
        if (!inst.apply_edit(Edit(EditKind::Delete, u, v))) return die(rule);
        trace.push_back({rule, TraceAction::DeleteEdge, std::min(u, v), std::max(u, v), 0, {}});
        res.changed = true;
        return true;
    }
    void mark_permanent(int rule, int u, int v) {
        inst.set_permanent(u, v);
        trace.push_back({rule, TraceAction::MakePermanent, std::min(u, v), std::max(u, v), 0, {}});
        res.changed = true;
    }
    void mark_forbidden(int rule, int u, int v) {
        inst.set_forbidden(u, v);
        trace.push_back({rule, TraceAction::MakeForbidden, std::min(u, v), std::max(u, v), 0, {}});
        res.changed = true;
    }
};

// ---- rules 1-3 -------------------------------------------------------------

// Rule 2 fires only when cliquifying N(v) or marking N[v] permanent would
// change something. delta(v) = 0 pins every current edge at v, so N[v] must
// end up as one cluster; the permanent marks inside N[v] are forced.
bool rule2_applicable(const Instance& inst, int v) {
    std::vector<int> ns = inst.neighbors(v);
    for (size_t i = 0; i < ns.size(); ++i) {
        if (inst.pair_state(v, ns[i]) == PairState::Edge) return true;
        for (size_t j = i + 1; j < ns.size(); ++j)
            if (inst.pair_state(ns[i], ns[j]) != PairState::Permanent) return true;
    }
    return false;
}

bool apply_rule2(Ctx& c, int v) {
    if (!c.inst.is_active(v) || c.inst.del_budget(v) != 0) return true;
    std::vector<int> ns = c.inst.neighbors(v);
    for (size_t i = 0; i < ns.size(); ++i)
        for (size_t j = i + 1; j < ns.size(); ++j) {
            switch (c.inst.pair_state(ns[i], ns[j])) {
                case PairState::NonEdge:
                    if (!c.charged_add(2, ns[i], ns[j])) return false;
                    break;
                case PairState::Edge:
                    c.mark_permanent(2, ns[i], ns[j]);
                    break;
                case PairState::Forbidden:
                    return c.die(2);
                case PairState::Permanent:
                    break;
            }
        }
    for (int x : ns)
        if (c.inst.pair_state(v, x) == PairState::Edge) c.mark_permanent(2, v, x);
    return true;
}

PassResult pass_base(Instance& inst, RuleTrace& trace) {
    Ctx c{inst, trace, {}};
    if (inst.residual_budget() && *inst.residual_budget() < 0) {
        c.die(1);
        return c.res;
    }
    for (int v : inst.active_vertices())
        if (inst.add_budget(v) < 0 || inst.del_budget(v) < 0) {
            c.die(1);
            return c.res;
        }

    std::vector<int> rule2, rule3;
    for (int v : inst.active_vertices()) {
        if (inst.del_budget(v) == 0 && rule2_applicable(inst, v)) rule2.push_back(v);
        if (inst.add_budget(v) == 0) {
            for (int w : inst.active_vertices())
                if (w != v && inst.pair_state(v, w) == PairState::NonEdge) {
                    rule3.push_back(v);
                    break;
                }
        }
    }
    for (int v : rule2)
        if (!apply_rule2(c, v)) return c.res;
    for (int u : rule3) {
        if (c.inst.add_budget(u) != 0) continue;
        for (int w : c.inst.active_vertices())
            if (w != u && c.inst.pair_state(u, w) == PairState::NonEdge) c.mark_forbidden(3, u, w);
    }
    return c.res;
}

// ---- rules 4-5 -------------------------------------------------------------

PassResult pass_triples(Instance& inst, RuleTrace& trace) {
    Ctx c{inst, trace, {}};
    struct Trig {
        int u, v, w;
    };
    std::vector<Trig> t4, t5;
    for (int u : inst.active_vertices()) {
        std::vector<int> pn = inst.permanent_neighbors(u);
        for (size_t i = 0; i < pn.size(); ++i)
            for (size_t j = i + 1; j < pn.size(); ++j)
                if (inst.pair_state(pn[i], pn[j]) != PairState::Permanent)
                    t4.push_back({u, pn[i], pn[j]});
        std::vector<int> fb = inst.forbidden_partners(u);
        for (int v : pn)
            for (int w : fb)
                if (v != w && inst.pair_state(v, w) != PairState::Forbidden)
                    t5.push_back({u, v, w});
    }
    for (const Trig& t : t4) {
        switch (c.inst.pair_state(t.v, t.w)) {
            case PairState::NonEdge:
                if (!c.charged_add(4, t.v, t.w)) return c.res;
                break;
            case PairState::Edge:
                c.mark_permanent(4, t.v, t.w);
                break;
            case PairState::Forbidden:
                c.die(4);
                return c.res;
            case PairState::Permanent:
                break;
        }
    }
    for (const Trig& t : t5) {
        switch (c.inst.pair_state(t.v, t.w)) {
            case PairState::Edge:
                if (!c.charged_del(5, t.v, t.w)) return c.res;
                break;
            case PairState::NonEdge:
                c.mark_forbidden(5, t.v, t.w);
                break;
            case PairState::Permanent:
                c.die(5);
                return c.res;
            case PairState::Forbidden:
                break;
        }
    }
    return c.res;
}

// ---- rules 6-8 -------------------------------------------------------------

PassResult pass_common_neighbors(Instance& inst, RuleTrace& trace) {
    Ctx c{inst, trace, {}};
    const Params& p = inst.params();
    const std::vector<int> verts = inst.active_vertices();
    struct Pair {
        int u, v;
    };
    std::vector<Pair> t6, t7, t8;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            int u = verts[i], v = verts[j];
            PairState st = inst.pair_state(u, v);
            int cn = inst.common_neighbors(u, v);
            if (!state_is_edge(st) && cn > inst.del_budget(u) + inst.del_budget(v))
                t6.push_back({u, v});
            if (st == PairState::Edge && cn >= 2 * p.del_limit - 1) t7.push_back({u, v});
            if (st != PairState::Forbidden &&
                (inst.exclusive_neighbors(u, v) > p.add_limit + p.del_limit ||
                 inst.exclusive_neighbors(v, u) > p.add_limit + p.del_limit))
                t8.push_back({u, v});
        }

    for (auto [u, v] : t6) {
        if (c.inst.common_neighbors(u, v) <= c.inst.del_budget(u) + c.inst.del_budget(v)) continue;
        PairState st = c.inst.pair_state(u, v);
        if (st == PairState::NonEdge) {
            if (!c.charged_add(6, u, v)) return c.res;
        } else if (st == PairState::Forbidden) {
            c.die(6);
            return c.res;
        }
    }
    for (auto [u, v] : t7) {
        if (c.inst.pair_state(u, v) != PairState::Edge) continue;
        if (c.inst.common_neighbors(u, v) >= 2 * p.del_limit - 1) c.mark_permanent(7, u, v);
    }
    for (auto [u, v] : t8) {
        if (c.inst.exclusive_neighbors(u, v) <= p.add_limit + p.del_limit &&
            c.inst.exclusive_neighbors(v, u) <= p.add_limit + p.del_limit)
            continue;
        switch (c.inst.pair_state(u, v)) {
            case PairState::Edge:
                if (!c.charged_del(8, u, v)) return c.res;
                break;
            case PairState::NonEdge:
                c.mark_forbidden(8, u, v);
                break;
            case PairState::Permanent:
                c.die(8);
                return c.res;
            case PairState::Forbidden:
                break;
        }
    }
    return c.res;
}

// ---- rules 9-12 ------------------------------------------------------------

PassResult pass_cluster_size(Instance& inst, RuleTrace& trace) {
    Ctx c{inst, trace, {}};
    const Params& p = inst.params();
    const int s = p.min_cluster;
    for (int v : inst.active_vertices())
        if (s - 1 > inst.degree(v) + inst.add_budget(v)) {
            c.die(9);
            return c.res;
        }

    const std::vector<int> verts = inst.active_vertices();
    std::vector<int> t10;
    struct Pair {
        int u, v;
    };
    std::vector<Pair> t11, t12;
    for (int v : verts)
        if (inst.del_budget(v) > inst.degree(v) + inst.add_budget(v) - (s - 1)) t10.push_back(v);
    if (s > 2) {
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j) {
                int u = verts[i], v = verts[j];
                PairState st = inst.pair_state(u, v);
                int cn = inst.common_neighbors(u, v);
                if (st == PairState::NonEdge && cn < s - inst.add_budget(u) - inst.add_budget(v))
                    t11.push_back({u, v});
                if (state_is_edge(st) && cn < s - 2 * p.add_limit - 2) t12.push_back({u, v});
            }
    }

    for (int v : t10) {
        int bound = c.inst.degree(v) + c.inst.add_budget(v) - (s - 1);
        if (bound < 0) {
            c.die(9);
            return c.res;
        }
        if (c.inst.del_budget(v) > bound) {
            c.inst.cap_del_budget(v, bound);
            c.trace.push_back({10, TraceAction::CapDelBudget, v, -1, bound, {}});
            c.res.changed = true;
        }
    }
    for (auto [u, v] : t11) {
        if (c.inst.pair_state(u, v) != PairState::NonEdge) continue;
        if (c.inst.common_neighbors(u, v) < s - c.inst.add_budget(u) - c.inst.add_budget(v))
            c.mark_forbidden(11, u, v);
    }
    for (auto [u, v] : t12) {
        PairState st = c.inst.pair_state(u, v);
        if (!state_is_edge(st)) continue;
        if (c.inst.common_neighbors(u, v) >= s - 2 * p.add_limit - 2) continue;
        if (st == PairState::Permanent) {
            c.die(12);
            return c.res;
        }
        if (!c.charged_del(12, u, v)) return c.res;
    }
    return c.res;
}

// ---- rules 13-15 -----------------------------------------------------------

// Connected components of the permanent-edge relation that are cliques
// (pairwise permanent). A permanent component that is not yet a clique is
// left for rule 4 to complete on a later sweep.
std::vector<std::vector<int>> permanent_cliques(const Instance& inst) {
    std::vector<std::vector<int>> cliques;
    std::vector<bool> seen(inst.vertex_count(), false);
    for (int start : inst.active_vertices()) {
        if (seen[start]) continue;
        std::vector<int> stack{start}, comp;
        seen[start] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : inst.permanent_neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        bool clique = true;
        for (size_t i = 0; i < comp.size() && clique; ++i)
            for (size_t j = i + 1; j < comp.size(); ++j)
                if (inst.pair_state(comp[i], comp[j]) != PairState::Permanent) {
                    clique = false;
                    break;
                }
        if (clique) cliques.push_back(std::move(comp));
    }
    return cliques;
}

std::optional<std::vector<int>> current_clique_of(const Instance& inst, int anchor) {
    if (!inst.is_active(anchor)) return std::nullopt;
    for (auto& c : permanent_cliques(inst))
        if (std::binary_search(c.begin(), c.end(), anchor)) return c;
    return std::nullopt;
}

bool is_isolated(const Instance& inst, const std::vector<int>& comp) {
    for (int v : comp)
        if (inst.degree(v) != static_cast<int>(comp.size()) - 1) return false;
    return true;
}

int neighbors_in(const Instance& inst, int v, const std::vector<int>& set) {
    int nb = 0;
    for (int x : set)
        if (inst.has_edge(v, x)) ++nb;
    return nb;
}

PassResult pass_permanent_cliques(Instance& inst, RuleTrace& trace) {
    Ctx c{inst, trace, {}};
    const Params& p = inst.params();
    const int big = std::max(p.add_limit, 2 * p.del_limit);

    struct Trig {
        int rule, v, anchor;
    };
    std::vector<Trig> t13, t14, t15;
    for (const auto& clique : permanent_cliques(inst)) {
        int size = static_cast<int>(clique.size());
        if (size > big && is_isolated(inst, clique)) t13.push_back({13, -1, clique.front()});
        for (int v : inst.active_vertices()) {
            if (std::binary_search(clique.begin(), clique.end(), v)) continue;
            int nb = neighbors_in(inst, v, clique);
            if (nb > p.del_limit)
                t14.push_back({14, v, clique.front()});
            else if (size > p.add_limit && nb >= 1 && nb < size - p.add_limit)
                t15.push_back({15, v, clique.front()});
        }
    }

    for (const Trig& t : t13) {
        auto clique = current_clique_of(inst, t.anchor);
        if (!clique || static_cast<int>(clique->size()) <= big || !is_isolated(inst, *clique))
            continue;
        if (static_cast<int>(clique->size()) < p.min_cluster) {
            // Nothing can join or leave a clique this large, so it would be a
            // final cluster below the size floor.
            c.die(13);
            return c.res;
        }
        c.inst.remove_cluster(*clique);
        c.trace.push_back({13, TraceAction::RemoveClique, -1, -1, 0, *clique});
        c.res.changed = true;
    }
    for (const Trig& t : t14) {
        if (!c.inst.is_active(t.v)) continue;
        auto clique = current_clique_of(c.inst, t.anchor);
        if (!clique || std::binary_search(clique->begin(), clique->end(), t.v)) continue;
        if (neighbors_in(c.inst, t.v, *clique) <= p.del_limit) continue;
        for (int x : *clique) {
            switch (c.inst.pair_state(t.v, x)) {
                case PairState::NonEdge:
                    if (!c.charged_add(14, t.v, x)) return c.res;
                    break;
                case PairState::Edge:
                    c.mark_permanent(14, t.v, x);
                    break;
                case PairState::Forbidden:
                    c.die(14);
                    return c.res;
                case PairState::Permanent:
                    break;
            }
        }
    }
    for (const Trig& t : t15) {
        if (!c.inst.is_active(t.v)) continue;
        auto clique = current_clique_of(c.inst, t.anchor);
        if (!clique || std::binary_search(clique->begin(), clique->end(), t.v)) continue;
        int size = static_cast<int>(clique->size());
        int nb = neighbors_in(c.inst, t.v, *clique);
        if (size <= p.add_limit || nb < 1 || nb >= size - p.add_limit) continue;
        for (int x : *clique)
            if (c.inst.pair_state(t.v, x) == PairState::Edge)
                if (!c.charged_del(15, t.v, x)) return c.res;
    }
    return c.res;
}

// ---- rules 16-17 -----------------------------------------------------------

PassResult pass_isolated_cliques(Instance& inst, RuleTrace& trace) {
    Ctx c{inst, trace, {}};
    if (!inst.residual_budget()) return c.res;  // inert in optimization mode
    const int k = *inst.residual_budget();
    const int s = inst.params().min_cluster;

    ComponentInfo comps = inst.components();
    std::vector<std::vector<int>> small, nonsmall;
    for (auto& block : comps.blocks) {
        bool clique = true;
        for (size_t i = 0; i < block.size() && clique; ++i)
            for (size_t j = i + 1; j < block.size(); ++j)
                if (!inst.has_edge(block[i], block[j])) {
                    clique = false;
                    break;
                }
        if (!clique) continue;
        (static_cast<int>(block.size()) < s ? small : nonsmall).push_back(block);
    }

    int small_total = 0;
    for (auto& b : small) small_total += static_cast<int>(b.size());
    if (small_total > 2 * k) {
        c.die(16);
        return c.res;
    }

    if (static_cast<int>(nonsmall.size()) > k) {
        // Keep the cheapest merge targets. With s = 1 no cluster ever needs to
        // grow, so none are kept.
        int keep = s > 1 ? (k + 1) / 2 : 0;
        std::sort(nonsmall.begin(), nonsmall.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a.front() < b.front();
        });
        for (size_t i = keep; i < nonsmall.size(); ++i) {
            c.inst.remove_cluster(nonsmall[i]);
            c.trace.push_back({17, TraceAction::RemoveClique, -1, -1, 0, nonsmall[i]});
            c.res.changed = true;
        }
    }
    return c.res;
}

PassResult run_group_pass(Instance& inst, int group, RuleTrace& trace) {
    switch (group) {
        case 0: return pass_base(inst, trace);
        case 1: return pass_triples(inst, trace);
        case 2: return pass_common_neighbors(inst, trace);
        case 3: return pass_cluster_size(inst, trace);
        case 4: return pass_permanent_cliques(inst, trace);
        case 5: return pass_isolated_cliques(inst, trace);
        default: throw std::logic_error("unknown rule group");
    }
}

ReductionOutcome run_single_group(const Instance& input, int group) {
    ReductionOutcome out;
    Instance inst = input;
    for (;;) {
        PassResult r = run_group_pass(inst, group, out.trace);
        if (r.dead) {
            out.no_reason = "rule" + std::to_string(r.rule);
            return out;
        }
        if (!r.changed) break;
    }
    out.reduced = std::move(inst);
    return out;
}

}  // namespace

ReductionOutcome reduce(const Instance& input) {
    ReductionOutcome out;
    Instance inst = input;
    for (;;) {
        bool any = false;
        for (int g = 0; g < 6; ++g) {
            PassResult r = run_group_pass(inst, g, out.trace);
            if (r.dead) {
                out.no_reason = "rule" + std::to_string(r.rule);
                return out;
            }
            if (r.changed) {  // restart so earlier groups stay exhausted first
                any = true;
                break;
            }
        }
        if (!any) break;
    }
    out.reduced = std::move(inst);
    return out;
}

ReductionOutcome apply_base_rules(const Instance& inst) { return run_single_group(inst, 0); }
ReductionOutcome apply_triple_rules(const Instance& inst) { return run_single_group(inst, 1); }
ReductionOutcome apply_common_neighbor_rules(const Instance& inst) {
    return run_single_group(inst, 2);
}
ReductionOutcome apply_cluster_size_rules(const Instance& inst) {
    return run_single_group(inst, 3);
}
ReductionOutcome apply_permanent_clique_rules(const Instance& inst) {
    return run_single_group(inst, 4);
}
ReductionOutcome apply_isolated_clique_rules(const Instance& inst) {
    return run_single_group(inst, 5);
}

void replay_trace(Instance& inst, const RuleTrace& trace) {
    for (const TraceEntry& e : trace) {
        switch (e.action) {
            case TraceAction::AddEdge:
                if (!inst.apply_edit(Edit(EditKind::Add, e.u, e.v)))
                    throw std::logic_error("replay: addition rejected");
                break;
            case TraceAction::DeleteEdge:
                if (!inst.apply_edit(Edit(EditKind::Delete, e.u, e.v)))
                    throw std::logic_error("replay: deletion rejected");
                break;
            case TraceAction::MakePermanent:
                inst.set_permanent(e.u, e.v);
                break;
            case TraceAction::MakeForbidden:
                inst.set_forbidden(e.u, e.v);
                break;
            case TraceAction::CapDelBudget:
                inst.cap_del_budget(e.u, e.value);
                break;
            case TraceAction::RemoveClique:
                inst.remove_cluster(e.vertices);
                break;
            case TraceAction::NoInstance:
                throw std::logic_error("replay: trace records a no-instance");
        }
    }
}

int trace_action_count(const RuleTrace& trace) {
    int n = 0;
    for (const TraceEntry& e : trace)
        if (e.action != TraceAction::NoInstance) ++n;
    return n;
}

}  // namespace ce
