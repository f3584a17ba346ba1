#include "edgedim/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "edgedim/errors.hpp"

namespace edgedim {

std::string Graph::edge_label(int edge_id) const {
    const auto& [a, b] = edges[edge_id];
    return labels[a] + labels[b];
}

int Graph::vertex_by_label(const std::string& label) const {
    for (int v = 0; v < vertex_count; ++v)
        if (labels[v] == label) return v;
    return -1;
}

int Graph::edge_by_labels(const std::string& a, const std::string& b) const {
    int va = vertex_by_label(a), vb = vertex_by_label(b);
    if (va < 0 || vb < 0) return -1;
    if (va > vb) std::swap(va, vb);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(va, vb));
    if (it == edges.end() || *it != std::make_pair(va, vb)) return -1;
    return static_cast<int>(it - edges.begin());
}

int Graph::edge_by_label(const std::string& label) const {
    for (int e = 0; e < edge_count(); ++e) {
        const auto& [a, b] = edges[e];
        if (labels[a] + labels[b] == label || labels[b] + labels[a] == label)
            return e;
    }
    return -1;
}

Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges,
                 std::vector<std::string> labels) {
    if (vertex_count < 1)
        throw InvalidSpec("graph needs at least one vertex");
    if (labels.empty()) {
        labels.reserve(vertex_count);
        for (int v = 0; v < vertex_count; ++v) labels.push_back(std::to_string(v));
    }
    if (static_cast<int>(labels.size()) != vertex_count)
        throw InvalidSpec("label count does not match vertex count");

    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            throw InvalidSpec("edge endpoint out of range");
        if (a == b)
            throw SelfLoop("vertex " + labels[a] + " joined to itself");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw DuplicateEdge("edge " + labels[dup->first] + "-" + labels[dup->second] +
                            " listed more than once");

    Graph g;
    g.vertex_count = vertex_count;
    g.labels = std::move(labels);
    g.edges = std::move(edges);
    g.adjacency.assign(vertex_count, {});
    for (const auto& [a, b] : g.edges) {
        g.adjacency[a].push_back(b);
        g.adjacency[b].push_back(a);
    }
    for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());

    // Connectivity is a construction-time invariant.
    std::vector<char> seen(vertex_count, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.adjacency[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                queue.push_back(y);
            }
    }
    if (reached != vertex_count)
        throw Disconnected("graph has " + std::to_string(vertex_count - reached) +
                           " vertices unreachable from " + g.labels[0]);
    return g;
}

Graph build_generalized_petersen(const GPSpec& spec) {
    const int n = spec.n, k = spec.k;
    if (n < 3 || k < 1 || 2 * k >= n)
        throw InvalidSpec("GP(n,k) needs n >= 3 and 1 <= k < n/2, got n=" +
                          std::to_string(n) + " k=" + std::to_string(k));
    std::vector<std::string> labels(2 * n);
    for (int i = 0; i < n; ++i) {
        labels[i] = "u" + std::to_string(i);
        labels[n + i] = "v" + std::to_string(i);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(3 * n);
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);          // outer cycle
        edges.emplace_back(i, n + i);                // spoke
        edges.emplace_back(n + i, n + (i + k) % n);  // inner chords
    }
    return make_graph(2 * n, std::move(edges), std::move(labels));
}

Graph build_generalized_petersen(int n, int k) {
    return build_generalized_petersen(GPSpec{n, k});
}

Graph build_named(const std::string& family, int n) {
    if (family == "path") {
        if (n < 1) throw InvalidSpec("path needs n >= 1");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        return make_graph(n, std::move(edges));
    }
    if (family == "cycle") {
        if (n < 3) throw InvalidSpec("cycle needs n >= 3");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        return make_graph(n, std::move(edges));
    }
    if (family == "complete") {
        if (n < 3) throw InvalidSpec("complete needs n >= 3");
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
        return make_graph(n, std::move(edges));
    }
    if (family == "figure3_G1") {
        return make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}},
                          {"v0", "v1", "v2", "v3"});
    }
    throw InvalidSpec("unknown family '" + family +
                      "' (expected path, cycle, complete, or figure3_G1)");
}

Graph load_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen_pairs;

    std::string line;
    int line_no = 0;
    auto id_of = [&](const std::string& token) {
        for (int i = 0; i < static_cast<int>(labels.size()); ++i)
            if (labels[i] == token) return i;
        labels.push_back(token);
        return static_cast<int>(labels.size()) - 1;
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        std::string a, b, extra;
        if (!(row >> a)) continue;      // blank
        if (a[0] == '#') continue;      // comment
        if (!(row >> b))
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected two vertex tokens, got one");
        if (row >> extra)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected two vertex tokens, got more");
        if (a == b)
            throw SelfLoop("line " + std::to_string(line_no) + ": " + a + " " + b);
        int ia = id_of(a), ib = id_of(b);
        auto pair = std::minmax(ia, ib);
        if (!seen_pairs.insert({pair.first, pair.second}).second)
            throw DuplicateEdge("line " + std::to_string(line_no) + ": " + a + " " + b);
        edges.emplace_back(ia, ib);
    }
    if (labels.empty()) throw ParseError("no edges in input");
    const int vertex_count = static_cast<int>(labels.size());
    return make_graph(vertex_count, std::move(edges), std::move(labels));
}

Graph load_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return load_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (const auto& [a, b] : g.edges)
        out += g.labels[a] + " " + g.labels[b] + "\n";
    return out;
}

std::string to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (const auto& [a, b] : g.edges)
        out += "  \"" + g.labels[a] + "\" -- \"" + g.labels[b] + "\";\n";
    out += "}\n";
    return out;
}

std::string to_json(const Graph& g) {
    nlohmann::json doc;
    doc["labels"] = g.labels;
    auto& edges = doc["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    return doc.dump();
}

Graph line_graph(const Graph& g) {
    const int m = g.edge_count();
    if (m < 2) throw TooSmall("line graph needs a graph with at least 2 edges");

    // Edges incident to a common vertex become pairwise-adjacent line vertices.
    // A simple graph never shares two endpoints, so no pair repeats.
    std::vector<std::vector<int>> incident(g.vertex_count);
    for (int e = 0; e < m; ++e) {
        incident[g.edges[e].first].push_back(e);
        incident[g.edges[e].second].push_back(e);
    }
    std::vector<std::pair<int, int>> line_edges;
    for (const auto& around : incident)
        for (size_t i = 0; i < around.size(); ++i)
            for (size_t j = i + 1; j < around.size(); ++j)
                line_edges.emplace_back(around[i], around[j]);

    std::vector<std::string> labels(m);
    for (int e = 0; e < m; ++e) labels[e] = g.edge_label(e);
    return make_graph(m, std::move(line_edges), std::move(labels));
}

DegreeSummary degree_summary(const Graph& g) {
    DegreeSummary s;
    s.degrees.reserve(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) s.degrees.push_back(g.degree(v));
    auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
    s.min_degree = *lo;
    s.max_degree = *hi;
    return s;
}

namespace {

void bfs_row(const Graph& g, int source, int* row) {
    std::fill(row, row + g.vertex_count, -1);
    row[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.adjacency[x])
            if (row[y] < 0) {
                row[y] = row[x] + 1;
                queue.push_back(y);
            }
    }
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count;
    DistanceMatrix d;
    d.vertex_count = n;
    d.dist.assign(static_cast<size_t>(n) * n, -1);

    unsigned workers = std::thread::hardware_concurrency();
    if (n >= 512 && workers > 1) {
        std::vector<std::thread> pool;
        std::vector<int> starts;
        unsigned used = std::min<unsigned>(workers, n);
        for (unsigned w = 0; w <= used; ++w)
            starts.push_back(static_cast<int>(static_cast<long long>(n) * w / used));
        for (unsigned w = 0; w < used; ++w)
            pool.emplace_back([&, w] {
                for (int s = starts[w]; s < starts[w + 1]; ++s)
                    bfs_row(g, s, d.dist.data() + static_cast<size_t>(s) * n);
            });
        for (auto& t : pool) t.join();
    } else {
        for (int s = 0; s < n; ++s)
            bfs_row(g, s, d.dist.data() + static_cast<size_t>(s) * n);
    }
    return d;
}

int DistanceMatrix::diameter() const {
    int best = 0;
    for (int v : dist) best = std::max(best, v);
    return best;
}

}  // namespace edgedim
