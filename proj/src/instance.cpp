#include "ce/instance.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace ce {

void Params::validate() const {
    if (add_limit < 0) throw std::invalid_argument("params: add limit must be non-negative");
    if (del_limit < 0) throw std::invalid_argument("params: delete limit must be non-negative");
    if (min_cluster < 1) throw std::invalid_argument("params: minimum cluster size must be >= 1");
    if (edit_budget && *edit_budget < 0)
        throw std::invalid_argument("params: edit budget must be non-negative");
}

Edit::Edit(EditKind k, int a, int b) : kind(k), u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("edit: endpoints must be distinct");
}

Instance::Instance(const Graph& g, const Params& p, const BudgetOverrides& ov)
    : n_(g.n), words_((g.n + 63) / 64), params_(p) {
    p.validate();
    if (n_ < 0) throw std::invalid_argument("instance: negative vertex count");

    pairs_.assign(static_cast<size_t>(n_) * (n_ - 1) / 2, PairState::NonEdge);
    adj_.assign(static_cast<size_t>(n_) * words_, 0);
    perm_.assign(static_cast<size_t>(n_) * words_, 0);
    forb_.assign(static_cast<size_t>(n_) * words_, 0);
    active_.assign(n_, true);
    active_count_ = n_;

    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u == v) throw std::invalid_argument("instance: self-loop on vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_) throw std::invalid_argument("instance: edge endpoint out of range");
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("instance: duplicate edge " + std::to_string(u) + " " +
                                        std::to_string(v));
        pairs_[pair_index(u, v)] = PairState::Edge;
        set_row_bit(adj_, u, v, true);
        set_row_bit(adj_, v, u, true);
    }

    add_budget_.assign(n_, p.add_limit);
    del_budget_.assign(n_, p.del_limit);
    for (auto [v, a] : ov.add) {
        if (v < 0 || v >= n_) throw std::invalid_argument("instance: override vertex out of range");
        if (a < 0 || a > p.add_limit)
            throw std::invalid_argument("instance: addition override outside [0, a]");
        add_budget_[v] = a;
    }
    for (auto [v, d] : ov.del) {
        if (v < 0 || v >= n_) throw std::invalid_argument("instance: override vertex out of range");
        if (d < 0 || d > p.del_limit)
            throw std::invalid_argument("instance: deletion override outside [0, d]");
        del_budget_[v] = d;
    }
    initial_add_ = add_budget_;
    initial_del_ = del_budget_;
    residual_k_ = p.edit_budget;
}

int Instance::pair_index(int u, int v) const {
    // u < v assumed; lower-triangular layout indexed by the larger endpoint.
    return v * (v - 1) / 2 + u;
}

void Instance::check_pair(int u, int v) const {
    if (u == v) throw std::invalid_argument("pair query: endpoints must be distinct");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("pair query: vertex out of range");
}

void Instance::set_row_bit(std::vector<std::uint64_t>& rows, int u, int v, bool on) {
    auto& word = rows[static_cast<size_t>(u) * words_ + v / 64];
    if (on)
        word |= std::uint64_t{1} << (v % 64);
    else
        word &= ~(std::uint64_t{1} << (v % 64));
}

PairState Instance::pair_state(int u, int v) const {
    check_pair(u, v);
    if (u > v) std::swap(u, v);
    return pairs_[pair_index(u, v)];
}

void Instance::set_state(int u, int v, PairState s) {
    if (u > v) std::swap(u, v);
    pairs_[pair_index(u, v)] = s;
    bool edge = state_is_edge(s);
    set_row_bit(adj_, u, v, edge);
    set_row_bit(adj_, v, u, edge);
    bool perm = s == PairState::Permanent;
    set_row_bit(perm_, u, v, perm);
    set_row_bit(perm_, v, u, perm);
    bool forb = s == PairState::Forbidden;
    set_row_bit(forb_, u, v, forb);
    set_row_bit(forb_, v, u, forb);
}

std::vector<int> Instance::active_vertices() const {
    std::vector<int> out;
    out.reserve(active_count_);
    for (int v = 0; v < n_; ++v)
        if (active_[v]) out.push_back(v);
    return out;
}

int Instance::degree(int v) const {
    int d = 0;
    const std::uint64_t* row = adj_.data() + static_cast<size_t>(v) * words_;
    for (int w = 0; w < words_; ++w) d += std::popcount(row[w]);
    return d;
}

static std::vector<int> row_members(const std::uint64_t* row, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if ((row[v / 64] >> (v % 64)) & 1u) out.push_back(v);
    return out;
}

std::vector<int> Instance::neighbors(int v) const {
    return row_members(adj_.data() + static_cast<size_t>(v) * words_, n_);
}

std::vector<int> Instance::permanent_neighbors(int v) const {
    return row_members(perm_.data() + static_cast<size_t>(v) * words_, n_);
}

std::vector<int> Instance::forbidden_partners(int v) const {
    return row_members(forb_.data() + static_cast<size_t>(v) * words_, n_);
}

int Instance::common_neighbors(int u, int v) const {
    const std::uint64_t* ru = adj_.data() + static_cast<size_t>(u) * words_;
    const std::uint64_t* rv = adj_.data() + static_cast<size_t>(v) * words_;
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(ru[w] & rv[w]);
    return c;
}

int Instance::exclusive_neighbors(int u, int v) const {
    const std::uint64_t* ru = adj_.data() + static_cast<size_t>(u) * words_;
    const std::uint64_t* rv = adj_.data() + static_cast<size_t>(v) * words_;
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(ru[w] & ~rv[w]);
    if (row_bit(adj_, u, v)) --c;  // v itself is never counted
    return c;
}

int Instance::undecided_pair_count() const {
    int c = 0;
    for (int v = 1; v < n_; ++v) {
        if (!active_[v]) continue;
        for (int u = 0; u < v; ++u) {
            if (!active_[u]) continue;
            PairState s = pairs_[pair_index(u, v)];
            if (!state_is_decided(s)) ++c;
        }
    }
    return c;
}

std::optional<ConflictTriple> Instance::find_conflict_triple() const {
    for (int u = 0; u < n_; ++u) {
        if (!active_[u]) continue;
        std::vector<int> ns = neighbors(u);
        for (size_t i = 0; i < ns.size(); ++i)
            for (size_t j = i + 1; j < ns.size(); ++j)
                if (!row_bit(adj_, ns[i], ns[j])) return ConflictTriple{u, ns[i], ns[j]};
    }
    return std::nullopt;
}

ComponentInfo Instance::components() const {
    ComponentInfo info;
    std::vector<bool> seen(n_, false);
    for (int start = 0; start < n_; ++start) {
        if (!active_[start] || seen[start]) continue;
        std::vector<int> stack{start}, block;
        seen[start] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            block.push_back(u);
            for (int w : neighbors(u)) {
                if (seen[w]) continue;
                seen[w] = true;
                stack.push_back(w);
            }
        }
        std::sort(block.begin(), block.end());
        info.blocks.push_back(std::move(block));
    }
    info.is_cluster_graph = true;
    for (const auto& block : info.blocks)
        for (size_t i = 0; i < block.size() && info.is_cluster_graph; ++i)
            for (size_t j = i + 1; j < block.size(); ++j)
                if (!row_bit(adj_, block[i], block[j])) {
                    info.is_cluster_graph = false;
                    break;
                }
    return info;
}

bool Instance::apply_edit(const Edit& e) {
    check_pair(e.u, e.v);
    if (!active_[e.u] || !active_[e.v])
        throw std::logic_error("apply_edit: endpoint already removed");
    PairState st = pair_state(e.u, e.v);
    if (e.kind == EditKind::Add) {
        if (st != PairState::NonEdge)
            throw std::logic_error("apply_edit: addition requires a plain non-edge");
        if (add_budget_[e.u] <= 0 || add_budget_[e.v] <= 0) return false;
        if (residual_k_ && *residual_k_ <= 0) return false;
        --add_budget_[e.u];
        --add_budget_[e.v];
        set_state(e.u, e.v, PairState::Permanent);  // added edges are permanent
    } else {
        if (st == PairState::Permanent) return false;  // contradiction, not a logic error
        if (st != PairState::Edge)
            throw std::logic_error("apply_edit: deletion requires an existing edge");
        if (del_budget_[e.u] <= 0 || del_budget_[e.v] <= 0) return false;
        if (residual_k_ && *residual_k_ <= 0) return false;
        --del_budget_[e.u];
        --del_budget_[e.v];
        set_state(e.u, e.v, PairState::Forbidden);
    }
    if (residual_k_) --*residual_k_;
    edit_log_.push_back(e);
    return true;
}

void Instance::set_permanent(int u, int v) {
    check_pair(u, v);
    if (pair_state(u, v) != PairState::Edge)
        throw std::logic_error("set_permanent: pair is not a plain edge");
    set_state(u, v, PairState::Permanent);
}

void Instance::set_forbidden(int u, int v) {
    check_pair(u, v);
    if (pair_state(u, v) != PairState::NonEdge)
        throw std::logic_error("set_forbidden: pair is not a plain non-edge");
    set_state(u, v, PairState::Forbidden);
}

void Instance::cap_del_budget(int v, int value) {
    if (value < 0 || value > del_budget_[v])
        throw std::logic_error("cap_del_budget: cap must lower the budget and stay non-negative");
    del_budget_[v] = value;
}

void Instance::remove_cluster(const std::vector<int>& vs) {
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) {
        if (v < 0 || v >= n_ || !active_[v])
            throw std::logic_error("remove_cluster: vertex not active");
        for (int w : neighbors(v))
            if (!std::binary_search(sorted.begin(), sorted.end(), w))
                throw std::logic_error("remove_cluster: set is not isolated");
    }
    for (int v : sorted) {
        active_[v] = false;
        --active_count_;
    }
    // Freeze incidence so structural queries skip the removed set.
    for (int v : sorted)
        for (int w = 0; w < n_; ++w) {
            set_row_bit(adj_, v, w, false);
            set_row_bit(adj_, w, v, false);
            set_row_bit(perm_, v, w, false);
            set_row_bit(perm_, w, v, false);
            set_row_bit(forb_, v, w, false);
            set_row_bit(forb_, w, v, false);
        }
    removed_clusters_.push_back(std::move(sorted));
}

void Instance::set_edit_budget(std::optional<int> k) {
    params_.edit_budget = k;
    if (k)
        residual_k_ = *k - static_cast<int>(edit_log_.size());
    else
        residual_k_ = std::nullopt;
}

bool Instance::operator==(const Instance& other) const {
    return n_ == other.n_ && params_ == other.params_ && pairs_ == other.pairs_ &&
           add_budget_ == other.add_budget_ && del_budget_ == other.del_budget_ &&
           residual_k_ == other.residual_k_ && edit_log_ == other.edit_log_ &&
           removed_clusters_ == other.removed_clusters_ && active_ == other.active_;
}

Instance build_instance(int n, const std::vector<std::pair<int, int>>& edges, const Params& p,
                        const BudgetOverrides& ov) {
    Graph g;
    g.n = n;
    g.edges = edges;
    return Instance(g, p, ov);
}

}  // namespace ce
