#pragma once

#include <random>
#include <vector>

#include "ce/instance.hpp"

namespace test_util {

// G(n, 1/2) driven entirely by the seed.
inline ce::Graph random_graph(int n, std::uint64_t seed) {
    ce::Graph g;
    g.n = n;
    std::mt19937_64 rng(seed);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (rng() & 1u) g.edges.emplace_back(u, v);
    return g;
}

// The script realizing a partition on a plain graph: additions for missing
// intra-block pairs, deletions for cross-block edges, ascending pair order.
inline std::vector<ce::Edit> script_for_partition(const ce::Graph& g,
                                                  const std::vector<std::vector<int>>& blocks) {
    std::vector<int> block_of(g.n, -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b]) block_of[v] = static_cast<int>(b);
    std::vector<std::vector<bool>> adj(g.n, std::vector<bool>(g.n, false));
    for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = true;
    std::vector<ce::Edit> script;
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u) {
            if (block_of[u] == block_of[v] && !adj[u][v])
                script.emplace_back(ce::EditKind::Add, u, v);
            if (block_of[u] != block_of[v] && adj[u][v])
                script.emplace_back(ce::EditKind::Delete, u, v);
        }
    return script;
}

}  // namespace test_util
