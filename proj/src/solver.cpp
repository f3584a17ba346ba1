#include "edgedim/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "edgedim/errors.hpp"

namespace edgedim {

std::string kind_name(SolveKind kind) {
    switch (kind) {
        case SolveKind::edge_dim: return "edge_dim";
        case SolveKind::vertex_dim: return "vertex_dim";
        case SolveKind::line_edge_dim: return "line_edge_dim";
    }
    return "?";
}

std::optional<SolveKind> kind_from_name(const std::string& name) {
    if (name == "edge_dim" || name == "edim") return SolveKind::edge_dim;
    if (name == "vertex_dim" || name == "mdim") return SolveKind::vertex_dim;
    if (name == "line_edge_dim" || name == "ledim") return SolveKind::line_edge_dim;
    return std::nullopt;
}

namespace {

constexpr unsigned long long kNoRank = std::numeric_limits<unsigned long long>::max();

// Saturating binomial coefficient; kNoRank means "too large to enumerate".
unsigned long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > static_cast<unsigned __int128>(kNoRank / 2)) return kNoRank;
    }
    return static_cast<unsigned long long>(r);
}

// Per-landmark distance rows to every item (edge or vertex), so the subset
// loop is a plain table walk.
struct ItemTable {
    int item_count = 0;
    std::vector<int> rows;  // vertex-major: rows[w * item_count + item]

    const int* row(int w) const { return rows.data() + static_cast<size_t>(w) * item_count; }
};

ItemTable build_item_table(const Graph& g, const DistanceMatrix& d, bool edge_items) {
    ItemTable t;
    t.item_count = edge_items ? g.edge_count() : g.vertex_count;
    t.rows.resize(static_cast<size_t>(g.vertex_count) * t.item_count);
    for (int w = 0; w < g.vertex_count; ++w) {
        int* row = t.rows.data() + static_cast<size_t>(w) * t.item_count;
        if (edge_items) {
            for (int e = 0; e < t.item_count; ++e)
                row[e] = edge_vertex_distance(d, w, g.edges[e].first, g.edges[e].second);
        } else {
            for (int v = 0; v < t.item_count; ++v) row[v] = d.at(w, v);
        }
    }
    return t;
}

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Open-addressed duplicate detector for packed tuples, reset by epoch stamps.
class PackedDistinct {
public:
    explicit PackedDistinct(int items)
        : mask_(std::bit_ceil(static_cast<unsigned>(2 * items + 2)) - 1),
          keys_(mask_ + 1),
          stamp_(mask_ + 1, 0) {}

    bool all_distinct(const uint64_t* reps, int count) {
        ++epoch_;
        for (int i = 0; i < count; ++i) {
            uint64_t key = reps[i];
            size_t at = mix64(key) & mask_;
            while (stamp_[at] == epoch_) {
                if (keys_[at] == key) return false;  // exact tuple equality
                at = (at + 1) & mask_;
            }
            keys_[at] = key;
            stamp_[at] = epoch_;
        }
        return true;
    }

private:
    size_t mask_;
    std::vector<uint64_t> keys_;
    std::vector<uint64_t> stamp_;
    uint64_t epoch_ = 0;
};

// One worker's scratch state for testing subsets of a fixed cardinality.
struct SubsetTester {
    const ItemTable* table;
    int cardinality;
    bool packed;  // tuples fit one u64: cardinality <= 8 and distances <= 255
    std::vector<uint64_t> packed_reps;
    std::vector<Representation> plain_reps;
    PackedDistinct dup;

    SubsetTester(const ItemTable& t, int c, bool fits)
        : table(&t), cardinality(c), packed(fits), dup(t.item_count) {
        if (packed)
            packed_reps.resize(t.item_count);
        else
            plain_reps.assign(t.item_count, Representation(c));
    }

    // subset = vertex ids, ascending.
    bool is_generator(const int* subset) {
        const int m = table->item_count;
        if (packed) {
            std::fill(packed_reps.begin(), packed_reps.end(), 0);
            for (int j = 0; j < cardinality; ++j) {
                const int* row = table->row(subset[j]);
                const int shift = 8 * j;
                for (int i = 0; i < m; ++i)
                    packed_reps[i] |= static_cast<uint64_t>(row[i]) << shift;
            }
            return dup.all_distinct(packed_reps.data(), m);
        }
        for (int j = 0; j < cardinality; ++j) {
            const int* row = table->row(subset[j]);
            for (int i = 0; i < m; ++i) plain_reps[i][j] = row[i];
        }
        auto reps = plain_reps;
        std::sort(reps.begin(), reps.end());
        return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
    }
};

// comb holds positions into the pool, ascending. Standard lexicographic
// successor; false when exhausted.
bool next_combination(std::vector<int>& comb, int pool_size) {
    const int c = static_cast<int>(comb.size());
    int i = c - 1;
    while (i >= 0 && comb[i] == pool_size - c + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < c; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

// Combination at the given lexicographic rank (combinatorial number system).
void unrank_combination(unsigned long long rank, int pool_size, int c,
                        std::vector<int>& comb) {
    comb.resize(c);
    int x = 0;
    for (int pos = 0; pos < c; ++pos) {
        for (;; ++x) {
            unsigned long long block = binom(pool_size - 1 - x, c - 1 - pos);
            if (rank < block) break;
            rank -= block;
        }
        comb[pos] = x++;
    }
}

struct CardinalityOutcome {
    unsigned long long winner_rank = kNoRank;
    VertexSet basis;
};

// Scan all cardinality-c subsets of pool in rank order; return the first
// generator (minimum rank) if any. Deterministic for any worker count.
CardinalityOutcome scan_cardinality(const ItemTable& table, const VertexSet& pool,
                                    int c, bool packed, int workers) {
    const int p = static_cast<int>(pool.size());
    CardinalityOutcome out;
    if (p < c) return out;
    const unsigned long long total = binom(p, c);

    if (workers <= 1 || total == kNoRank || total <= 4096) {
        SubsetTester tester(table, c, packed);
        std::vector<int> comb(c);
        for (int j = 0; j < c; ++j) comb[j] = j;
        VertexSet ids(c);
        unsigned long long rank = 0;
        do {
            for (int j = 0; j < c; ++j) ids[j] = pool[comb[j]];
            if (tester.is_generator(ids.data())) {
                out.winner_rank = rank;
                out.basis = ids;
                return out;
            }
            ++rank;
        } while (next_combination(comb, p));
        return out;
    }

    const int used = static_cast<int>(std::min<unsigned long long>(workers, total));
    std::atomic<unsigned long long> best{kNoRank};
    std::mutex win_mutex;
    VertexSet win_basis;

    auto run_chunk = [&](unsigned long long start, unsigned long long end) {
        if (start >= best.load(std::memory_order_relaxed)) return;
        SubsetTester tester(table, c, packed);
        std::vector<int> comb;
        unrank_combination(start, p, c, comb);
        VertexSet ids(c);
        for (unsigned long long rank = start; rank < end; ++rank) {
            if (rank >= best.load(std::memory_order_relaxed)) return;
            for (int j = 0; j < c; ++j) ids[j] = pool[comb[j]];
            if (tester.is_generator(ids.data())) {
                std::lock_guard<std::mutex> lock(win_mutex);
                if (rank < best.load(std::memory_order_relaxed)) {
                    best.store(rank, std::memory_order_relaxed);
                    win_basis = ids;
                }
                return;
            }
            next_combination(comb, p);
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(used);
    for (int w = 0; w < used; ++w) {
        unsigned long long start = total / used * w + std::min<unsigned long long>(w, total % used);
        unsigned long long size = total / used + (static_cast<unsigned long long>(w) < total % used ? 1 : 0);
        threads.emplace_back(run_chunk, start, start + size);
    }
    for (auto& t : threads) t.join();

    out.winner_rank = best.load();
    out.basis = std::move(win_basis);
    return out;
}

}  // namespace

SolveResult solve(const Graph& g, SolveKind kind, const SolveOptions& options) {
    if (kind == SolveKind::line_edge_dim) {
        SolveResult r = solve(line_graph(g), SolveKind::vertex_dim, options);
        r.kind = SolveKind::line_edge_dim;
        return r;
    }

    const auto t0 = std::chrono::steady_clock::now();
    const bool edge_items = kind == SolveKind::edge_dim;
    const DistanceMatrix dist = all_pairs_distances(g);
    const ItemTable table = build_item_table(g, dist, edge_items);

    int start = 1;
    if (edge_items) {
        BoundReport bounds = lower_bound_edge_dim(g);
        start = bounds.path_exception ? 1 : bounds.combined;
    }
    const int cap = options.max_cardinality.value_or(std::max(1, g.vertex_count - 1));
    if (cap < 1) throw InvalidSpec("max_cardinality must be >= 1");
    int workers = options.parallelism > 0
                      ? options.parallelism
                      : std::max(1u, std::thread::hardware_concurrency());

    VertexSet everyone(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) everyone[v] = v;

    SolveResult result;
    result.kind = kind;
    for (int c = start; c <= cap; ++c) {
        const VertexSet pool = (edge_items && options.use_pruning)
                                   ? prune_candidates(g, c)
                                   : everyone;
        const bool packed = c <= 8 && dist.diameter() <= 255;
        CardinalityOutcome outcome =
            scan_cardinality(table, pool, c, packed, workers);
        if (outcome.winner_rank != kNoRank) {
            result.dimension = c;
            result.basis = std::move(outcome.basis);
            result.subsets_examined += outcome.winner_rank + 1;
            result.pruned_vertices = g.vertex_count - static_cast<int>(pool.size());
            for (int v : result.basis) result.basis_labels.push_back(g.labels[v]);
            result.elapsed_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
            return result;
        }
        result.subsets_examined += binom(static_cast<int>(pool.size()), c);
    }
    throw CardinalityCapExceeded("no " + kind_name(kind) + " generator of size <= " +
                                 std::to_string(cap));
}

bool verify_basis(const Graph& g, SolveKind kind, const VertexSet& s) {
    if (s.empty()) throw InvalidSpec("basis must be non-empty");
    if (kind == SolveKind::line_edge_dim) {
        Graph line = line_graph(g);
        return verify_basis(line, SolveKind::vertex_dim, s);
    }
    for (int v : s)
        if (v < 0 || v >= g.vertex_count)
            throw InvalidSpec("basis vertex id out of range");
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    DistanceMatrix d = all_pairs_distances(g);
    return kind == SolveKind::edge_dim ? is_edge_metric_generator(g, d, sorted)
                                       : is_metric_generator(g, d, sorted);
}

std::string to_json(const SolveResult& r) {
    nlohmann::json doc;
    doc["kind"] = kind_name(r.kind);
    doc["dimension"] = r.dimension;
    doc["basis"] = r.basis_labels;
    doc["subsets_examined"] = r.subsets_examined;
    doc["pruned_vertices"] = r.pruned_vertices;
    doc["elapsed_ms"] = r.elapsed_seconds * 1000.0;
    return doc.dump();
}

}  // namespace edgedim
