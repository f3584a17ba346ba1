#pragma once

#include <utility>
#include <vector>

#include "edgedim/graph.hpp"

namespace edgedim {

// Distance tuple of one item (edge or vertex) to each landmark, landmark
// order = ascending vertex id.
using Representation = std::vector<int>;

// Sorted, duplicate-free vertex ids.
using VertexSet = std::vector<int>;

struct BoundReport {
    int delta_bound = 0;       // 1 + ceil(log2(min degree))
    int max_degree_bound = 0;  // ceil(log2(max degree))
    int combined = 0;          // max(1, both)
    bool path_exception = false;  // paths have edge dimension exactly 1
};

// Outcome of a generator check; on failure carries the first colliding pair
// (ids of edges or vertices, in canonical order) and their shared tuple.
struct GeneratorCheck {
    bool ok = false;
    int first_a = -1;
    int first_b = -1;
    Representation shared;
};

// d(w, uv) = min(d(w,u), d(w,v)).
int edge_vertex_distance(const DistanceMatrix& d, int w, int u, int v);
int edge_vertex_distance(const Graph& g, const DistanceMatrix& d, int w, int edge_id);

Representation edge_representation(const Graph& g, const DistanceMatrix& d,
                                   int edge_id, const VertexSet& s);
Representation vertex_representation(const DistanceMatrix& d, int v,
                                     const VertexSet& s);

// True iff all edge representations (resp. vertex representations) with
// respect to s are pairwise distinct. The check_* forms report the first
// colliding pair.
GeneratorCheck check_edge_metric_generator(const Graph& g, const DistanceMatrix& d,
                                           const VertexSet& s);
GeneratorCheck check_metric_generator(const Graph& g, const DistanceMatrix& d,
                                      const VertexSet& s);
bool is_edge_metric_generator(const Graph& g, const DistanceMatrix& d,
                              const VertexSet& s);
bool is_metric_generator(const Graph& g, const DistanceMatrix& d,
                         const VertexSet& s);

// True for graphs whose edges form a single simple path (including the
// one-vertex and one-edge cases).
bool is_path_graph(const Graph& g);

// Lower bounds on the edge metric dimension from vertex degrees, plus the
// path special case. Requires >= 2 vertices.
BoundReport lower_bound_edge_dim(const Graph& g);

// Vertices that can appear in an edge metric generator of cardinality k:
// those with degree <= 2^(k-1). A landmark's incident edges all carry
// coordinate 0 at the landmark and at most 2 distinct values per remaining
// coordinate, so higher-degree vertices can never be part of one.
VertexSet prune_candidates(const Graph& g, int k);

}  // namespace edgedim
