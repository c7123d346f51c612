#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ce/graph.hpp"

namespace test_util {

// Edge masks use the same lower-triangular pair layout as the instance:
// bit(u, v) = v(v-1)/2 + u for u < v.
inline int pair_bit(int u, int v) { return v * (v - 1) / 2 + u; }

inline std::uint64_t relabel_mask(std::uint64_t mask, int n, const std::vector<int>& perm) {
    std::uint64_t mapped = 0;
    while (mask) {
        int bit = __builtin_ctzll(mask);
        mask &= mask - 1;
        // invert pair_bit
        int v = 1;
        while (pair_bit(0, v + 1) <= bit) ++v;
        int u = bit - pair_bit(0, v);
        int pu = perm[u], pv = perm[v];
        if (pu > pv) std::swap(pu, pv);
        mapped |= std::uint64_t{1} << pair_bit(pu, pv);
    }
    (void)n;
    return mapped;
}

inline std::uint64_t canonical_mask(std::uint64_t mask, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, relabel_mask(mask, n, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All non-isomorphic graphs on exactly n vertices (n <= 7), grown by vertex
// extension from the (n-1)-vertex set and deduplicated by canonical form.
inline const std::vector<std::uint64_t>& nonisomorphic_graphs(int n) {
    static std::map<int, std::vector<std::uint64_t>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::uint64_t> out;
    if (n == 1) {
        out.push_back(0);
    } else {
        std::set<std::uint64_t> seen;
        for (std::uint64_t base : nonisomorphic_graphs(n - 1))
            for (std::uint64_t nbhd = 0; nbhd < (std::uint64_t{1} << (n - 1)); ++nbhd) {
                std::uint64_t mask = base;
                for (int u = 0; u < n - 1; ++u)
                    if ((nbhd >> u) & 1u) mask |= std::uint64_t{1} << pair_bit(u, n - 1);
                seen.insert(canonical_mask(mask, n));
            }
        out.assign(seen.begin(), seen.end());
    }
    return cache.emplace(n, std::move(out)).first->second;
}

inline ce::Graph graph_from_mask(std::uint64_t mask, int n) {
    ce::Graph g;
    g.n = n;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((mask >> pair_bit(u, v)) & 1u) g.edges.emplace_back(u, v);
    return g;
}

}  // namespace test_util
