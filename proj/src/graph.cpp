#include "ce/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ce {

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g;
    g.n = n;
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::vector<std::vector<int>> graph_components(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> blocks;
    for (int start = 0; start < g.n; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> stack{start};
        comp[start] = static_cast<int>(blocks.size());
        std::vector<int> block{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u]) {
                if (comp[w] >= 0) continue;
                comp[w] = comp[start];
                block.push_back(w);
                stack.push_back(w);
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace ce
