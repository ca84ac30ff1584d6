#pragma once

// Small undirected simple graphs over vertex indices, and the usual traversals.

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "drep/complex.hpp"

namespace drep {

using Edge = std::pair<int, int>;

struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(static_cast<std::size_t>(vertices)) {}

    Graph(int vertices, const std::vector<Edge>& edges) : Graph(vertices)
    {
        for (auto [a, b] : edges)
            add_edge(a, b);
        finalize();
    }

    void add_edge(int a, int b)
    {
        if (a == b)
            return;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    void finalize()
    {
        for (auto& l : adj) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
    }

    bool has_edge(int a, int b) const
    {
        if (a < 0 || b < 0 || a >= n || b >= n)
            return false;
        return std::binary_search(adj[a].begin(), adj[a].end(), b);
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (int a = 0; a < n; ++a)
            for (int b : adj[a])
                if (a < b)
                    out.emplace_back(a, b);
        return out;
    }

    std::size_t num_edges() const
    {
        std::size_t m = 0;
        for (const auto& l : adj)
            m += l.size();
        return m / 2;
    }
};

/// The 1-skeleton of K on K's vertex indices.
inline Graph one_skeleton(const SimplicialComplex& K)
{
    Graph G(static_cast<int>(K.num_vertices()));
    for (const auto& J : K.facets())
        for (std::size_t i = 0; i < J.size(); ++i)
            for (std::size_t j = i + 1; j < J.size(); ++j)
                G.add_edge(J[i], J[j]);
    G.finalize();
    return G;
}

/// Connected components restricted to vertices with `allowed[v]`; -1 elsewhere.
inline std::vector<int> component_ids(const Graph& G, const std::vector<bool>& allowed, int* count = nullptr)
{
    std::vector<int> comp(G.n, -1);
    int c = 0;
    for (int s = 0; s < G.n; ++s) {
        if (!allowed[s] || comp[s] >= 0)
            continue;
        std::deque<int> queue{s};
        comp[s] = c;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : G.adj[v])
                if (allowed[u] && comp[u] < 0) {
                    comp[u] = c;
                    queue.push_back(u);
                }
        }
        ++c;
    }
    if (count)
        *count = c;
    return comp;
}

inline std::vector<int> component_ids(const Graph& G, int* count = nullptr)
{
    return component_ids(G, std::vector<bool>(G.n, true), count);
}

/// Shortest path from s to t through vertices with `allowed[v]` (s and t are
/// always allowed); ties broken toward smaller indices.
inline std::optional<std::vector<int>> shortest_path(const Graph& G, int s, int t, const std::vector<bool>& allowed)
{
    std::vector<int> parent(G.n, -1);
    std::vector<bool> seen(G.n, false);
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == t)
            break;
        for (int u : G.adj[v]) {
            if (seen[u] || (!allowed[u] && u != t))
                continue;
            seen[u] = true;
            parent[u] = v;
            queue.push_back(u);
        }
    }
    if (!seen[t])
        return std::nullopt;
    std::vector<int> path;
    for (int v = t; v != -1; v = parent[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

/// Biconnected components as edge lists (bridges form their own blocks).
inline std::vector<std::vector<Edge>> biconnected_blocks(const Graph& G)
{
    std::vector<int> disc(G.n, -1), low(G.n, 0);
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> blocks;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = timer++;
        for (int u : G.adj[v]) {
            if (u == parent)
                continue;
            if (disc[u] < 0) {
                stack.emplace_back(v, u);
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= disc[v]) {
                    std::vector<Edge> block;
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
                        if (e == Edge{v, u})
                            break;
                    }
                    std::sort(block.begin(), block.end());
                    blocks.push_back(std::move(block));
                }
            } else if (disc[u] < disc[v]) {
                stack.emplace_back(v, u);
                low[v] = std::min(low[v], disc[u]);
            }
        }
    };
    for (int v = 0; v < G.n; ++v)
        if (disc[v] < 0)
            dfs(v, -1);
    return blocks;
}

} // namespace drep
