#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace edgedim {

// Simple connected undirected graph. Vertices are 0..vertex_count-1; the edge
// list is sorted lexicographically with a < b per pair, and the index of an
// edge in that list is its canonical EdgeId. Immutable after construction.
struct Graph {
    int vertex_count = 0;
    std::vector<std::string> labels;            // one display name per vertex
    std::vector<std::vector<int>> adjacency;    // sorted neighbor ids
    std::vector<std::pair<int, int>> edges;     // sorted, a < b

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }

    // Display name of an edge: endpoint labels concatenated ("u0u1").
    std::string edge_label(int edge_id) const;

    // Lookup by label; -1 when absent.
    int vertex_by_label(const std::string& label) const;
    // Lookup by endpoint labels in either order; -1 when absent.
    int edge_by_labels(const std::string& a, const std::string& b) const;
    // Lookup by concatenated edge label ("u0u1" or "u1u0"); -1 when absent.
    int edge_by_label(const std::string& label) const;
};

struct GPSpec {
    int n = 0;  // >= 3
    int k = 0;  // 1 <= k < n/2
};

// Dense all-pairs hop-count table (row-major).
struct DistanceMatrix {
    int vertex_count = 0;
    std::vector<int> dist;

    int at(int a, int b) const {
        return dist[static_cast<size_t>(a) * vertex_count + b];
    }
    int diameter() const;
};

struct DegreeSummary {
    std::vector<int> degrees;
    int max_degree = 0;
    int min_degree = 0;
};

// Validates and canonicalizes: sorts edge pairs and the edge list, builds
// adjacency, rejects loops, duplicates, and disconnected input. Empty label
// vector defaults to "0".."N-1".
Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges,
                 std::vector<std::string> labels = {});

// GP(n,k): 2n vertices (u_i = i, v_i = n+i, labels "u<i>"/"v<i>"), 3n edges
// u_i u_{i+1}, u_i v_i, v_i v_{i+k}, indices mod n. Always 3-regular.
Graph build_generalized_petersen(const GPSpec& spec);
Graph build_generalized_petersen(int n, int k);

// family: "path" (n >= 1), "cycle" (n >= 3), "complete" (n >= 3, and the
// trivial n in {1,2} accepted for paths only), or "figure3_G1" (n ignored):
// the 4-vertex, 5-edge graph with edges v0v1, v1v2, v0v2, v1v3, v2v3.
Graph build_named(const std::string& family, int n = 0);

// One edge per line, two whitespace-separated tokens; tokens become labels and
// get ids in first-appearance order. Blank lines and '#'-lines are skipped.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_text(const std::string& text);
Graph load_edge_list_file(const std::string& path);

// Serializations. Edge-list text round-trips through load_edge_list as the
// same labeled graph (labels and label-level edges are preserved; canonical
// ids may be renumbered to first-appearance order).
std::string to_edge_list(const Graph& g);
std::string to_dot(const Graph& g);
std::string to_json(const Graph& g);  // {"labels": [...], "edges": [[a,b],...]}

// Vertices of the result are the EdgeIds of g (labels carry endpoint names);
// two edge-vertices are adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);

DegreeSummary degree_summary(const Graph& g);

// BFS from every vertex. Sources may be processed in parallel; the result is
// identical to sequential execution.
DistanceMatrix all_pairs_distances(const Graph& g);

}  // namespace edgedim
