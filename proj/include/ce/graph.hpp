#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

namespace ce {

// Plain simple undirected graph on vertex ids [0, n).
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // normalized to u < v

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
};

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);

// Connected components as sorted blocks, ordered by smallest member.
std::vector<std::vector<int>> graph_components(const Graph& g);

}  // namespace ce
