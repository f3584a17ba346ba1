// Test-only reference implementations, kept independent of the library under
// test. Everything here is written the slow obvious way: plain BFS, full
// subset enumeration, O(m^2) line graph construction. Usable up to roughly
// 16 vertices; the tests stay within that.
#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Edge = std::pair<int, int>;

inline std::vector<std::vector<int>> adjacency(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

inline std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

inline std::vector<std::vector<int>> all_distances(int n, const std::vector<Edge>& edges) {
    auto adj = adjacency(n, edges);
    std::vector<std::vector<int>> d;
    d.reserve(n);
    for (int v = 0; v < n; ++v) d.push_back(bfs(adj, v));
    return d;
}

// d(w, uv) = min(d(w,u), d(w,v))
inline int edge_distance(const std::vector<std::vector<int>>& d, int w, const Edge& e) {
    return std::min(d[w][e.first], d[w][e.second]);
}

inline bool resolves_edges(const std::vector<std::vector<int>>& d,
                           const std::vector<Edge>& edges, const std::vector<int>& s) {
    std::set<std::vector<int>> seen;
    for (const Edge& e : edges) {
        std::vector<int> rep;
        for (int w : s) rep.push_back(edge_distance(d, w, e));
        if (!seen.insert(rep).second) return false;
    }
    return true;
}

inline bool resolves_vertices(const std::vector<std::vector<int>>& d,
                              const std::vector<int>& s) {
    std::set<std::vector<int>> seen;
    for (size_t v = 0; v < d.size(); ++v) {
        std::vector<int> rep;
        for (int w : s) rep.push_back(d[v][w]);
        if (!seen.insert(rep).second) return false;
    }
    return true;
}

// Every k-subset of {0..n-1} in lexicographic order, smallest first.
template <typename Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    if (k > n) return false;
    while (true) {
        if (fn(pick)) return true;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

struct DimResult {
    int dimension;
    std::vector<int> witness;  // lexicographically first
};

inline DimResult edge_metric_dimension(int n, const std::vector<Edge>& edges) {
    auto d = all_distances(n, edges);
    for (int k = 1; k <= n; ++k) {
        DimResult out{k, {}};
        if (for_each_subset(n, k, [&](const std::vector<int>& s) {
                if (!resolves_edges(d, edges, s)) return false;
                out.witness = s;
                return true;
            }))
            return out;
    }
    return {n, {}};
}

inline DimResult metric_dimension(int n, const std::vector<Edge>& edges) {
    auto d = all_distances(n, edges);
    for (int k = 1; k <= n; ++k) {
        DimResult out{k, {}};
        if (for_each_subset(n, k, [&](const std::vector<int>& s) {
                if (!resolves_vertices(d, s)) return false;
                out.witness = s;
                return true;
            }))
            return out;
    }
    return {n, {}};
}

// Vertices of the line graph are edge indices; two are adjacent when the
// edges share an endpoint.
inline std::vector<Edge> line_graph_edges(const std::vector<Edge>& edges) {
    std::vector<Edge> out;
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, e] = edges[j];
            if (a == c || a == e || b == c || b == e)
                out.push_back({int(i), int(j)});
        }
    return out;
}

// GP(n, k) straight from the definition, with its own vertex numbering.
struct GP {
    int n;
    std::vector<Edge> edges;  // u_i = i, v_i = n + i
};

inline GP petersen(int n, int k) {
    GP g{n, {}};
    for (int i = 0; i < n; ++i) {
        g.edges.push_back({i, (i + 1) % n});
        g.edges.push_back({i, n + i});
        g.edges.push_back({n + i, n + (i + k) % n});
    }
    for (auto& [a, b] : g.edges)
        if (a > b) std::swap(a, b);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

}  // namespace oracle
