#pragma once

#include <optional>
#include <string>

#include "edgedim/graph.hpp"
#include "edgedim/resolve.hpp"

namespace edgedim {

enum class SolveKind {
    edge_dim,       // minimum edge metric generator
    vertex_dim,     // minimum metric generator
    line_edge_dim,  // vertex_dim of the line graph
};

std::string kind_name(SolveKind kind);
std::optional<SolveKind> kind_from_name(const std::string& name);

struct SolveOptions {
    bool use_pruning = true;  // degree pruning (edge_dim only)
    int parallelism = 0;      // worker count; 0 = all available cores
    std::optional<int> max_cardinality;  // default: vertex count - 1
};

struct SolveResult {
    SolveKind kind = SolveKind::edge_dim;
    int dimension = 0;
    VertexSet basis;  // for line_edge_dim these are line-vertex ids = EdgeIds of g
    std::vector<std::string> basis_labels;
    unsigned long long subsets_examined = 0;
    int pruned_vertices = 0;
    double elapsed_seconds = 0.0;
};

// Exhaustive search in increasing cardinality; within a cardinality, subsets
// of the candidate pool are taken in lexicographic order of vertex ids and
// the first generator wins, so the witness is the lexicographically smallest
// basis of minimum cardinality. edge_dim starts at the degree lower bound
// (paths start at 1); vertex kinds start at 1.
//
// Workers split the subset stream into contiguous combination-rank ranges and
// reduce to the minimum-rank success, so dimension and basis are independent
// of the worker count. subsets_examined reports the sequential-equivalent
// count (every exhausted cardinality in full, plus the winner's rank + 1) and
// is likewise deterministic. pruned_vertices counts the vertices excluded
// from the pool at the successful cardinality.
SolveResult solve(const Graph& g, SolveKind kind, const SolveOptions& options = {});

// True iff s is a generator of the requested kind; for line_edge_dim, s holds
// EdgeIds of g checked against the line graph.
bool verify_basis(const Graph& g, SolveKind kind, const VertexSet& s);

// {"kind", "dimension", "basis" (labels), "subsets_examined",
//  "pruned_vertices", "elapsed_ms"}
std::string to_json(const SolveResult& r);

}  // namespace edgedim
