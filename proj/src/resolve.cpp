#include "edgedim/resolve.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "edgedim/errors.hpp"

namespace edgedim {

int edge_vertex_distance(const DistanceMatrix& d, int w, int u, int v) {
    return std::min(d.at(w, u), d.at(w, v));
}

int edge_vertex_distance(const Graph& g, const DistanceMatrix& d, int w, int edge_id) {
    const auto& [u, v] = g.edges[edge_id];
    return edge_vertex_distance(d, w, u, v);
}

Representation edge_representation(const Graph& g, const DistanceMatrix& d,
                                   int edge_id, const VertexSet& s) {
    const auto& [u, v] = g.edges[edge_id];
    Representation r;
    r.reserve(s.size());
    for (int w : s) r.push_back(edge_vertex_distance(d, w, u, v));
    return r;
}

Representation vertex_representation(const DistanceMatrix& d, int v,
                                     const VertexSet& s) {
    Representation r;
    r.reserve(s.size());
    for (int w : s) r.push_back(d.at(w, v));
    return r;
}

namespace {

// First collision in item order: the earliest item whose tuple repeats an
// earlier one, paired with that earlier item.
template <typename RepOf>
GeneratorCheck scan_for_collision(int item_count, RepOf&& rep_of) {
    std::map<Representation, int> first_seen;
    for (int item = 0; item < item_count; ++item) {
        Representation r = rep_of(item);
        auto [it, inserted] = first_seen.try_emplace(std::move(r), item);
        if (!inserted)
            return {false, it->second, item, it->first};
    }
    return {true, -1, -1, {}};
}

}  // namespace

GeneratorCheck check_edge_metric_generator(const Graph& g, const DistanceMatrix& d,
                                           const VertexSet& s) {
    return scan_for_collision(g.edge_count(), [&](int e) {
        return edge_representation(g, d, e, s);
    });
}

GeneratorCheck check_metric_generator(const Graph& g, const DistanceMatrix& d,
                                      const VertexSet& s) {
    return scan_for_collision(g.vertex_count, [&](int v) {
        return vertex_representation(d, v, s);
    });
}

bool is_edge_metric_generator(const Graph& g, const DistanceMatrix& d,
                              const VertexSet& s) {
    return check_edge_metric_generator(g, d, s).ok;
}

bool is_metric_generator(const Graph& g, const DistanceMatrix& d,
                         const VertexSet& s) {
    return check_metric_generator(g, d, s).ok;
}

bool is_path_graph(const Graph& g) {
    if (g.vertex_count == 1) return true;
    if (g.edge_count() != g.vertex_count - 1) return false;  // connected, so: tree
    for (int v = 0; v < g.vertex_count; ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

namespace {

int ceil_log2(int x) {
    return std::bit_width(static_cast<unsigned>(x) - 1);
}

}  // namespace

BoundReport lower_bound_edge_dim(const Graph& g) {
    if (g.vertex_count < 2)
        throw InvalidSpec("lower bound needs >= 2 vertices");
    DegreeSummary deg = degree_summary(g);
    BoundReport r;
    r.delta_bound = 1 + ceil_log2(deg.min_degree);
    r.max_degree_bound = ceil_log2(deg.max_degree);
    r.combined = std::max({1, r.delta_bound, r.max_degree_bound});
    r.path_exception = is_path_graph(g);
    return r;
}

VertexSet prune_candidates(const Graph& g, int k) {
    if (k < 1) throw InvalidSpec("cardinality must be >= 1");
    // 2^(k-1) saturated; degrees can't exceed vertex_count anyway.
    long long cap = k - 1 >= 62 ? -1 : (1LL << (k - 1));
    VertexSet pool;
    for (int v = 0; v < g.vertex_count; ++v)
        if (cap < 0 || g.degree(v) <= cap) pool.push_back(v);
    return pool;
}

}  // namespace edgedim
