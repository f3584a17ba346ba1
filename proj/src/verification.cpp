#include "edgedim/verification.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "edgedim/errors.hpp"
#include "edgedim/solver.hpp"

namespace edgedim {

namespace {

std::string set_label(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += g.labels[s[i]];
    }
    return out + "}";
}

std::string triple_text(const std::array<int, 3>& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]) + ")";
}

}  // namespace

VerificationReport verify_gp_formulas(int n, int k) {
    const auto cells = formula_cells(n, k);  // OutOfScope passthrough
    const int t = case_parameter_t(n, k);
    const Graph g = build_generalized_petersen(n, k);
    const DistanceMatrix d = all_pairs_distances(g);
    const VertexSet landmarks = landmark_set_gp(n, k);

    VerificationReport report;
    report.n = n;
    report.k = k;
    report.cells_checked = g.edge_count();

    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [a, b] = g.edges[e];
        const Representation oracle = edge_representation(g, d, e, landmarks);
        const EdgeClass ec = classify_gp_edge(n, k, a, b);
        const FormulaCell& cell = matching_cell(cells, n, k, ec);
        const int i = ec.index / cell.stride;
        std::array<int, 3> formula{};
        for (int c = 0; c < 3; ++c) formula[c] = cell.triple[c].eval(i, t);
        if (!std::equal(formula.begin(), formula.end(), oracle.begin())) {
            report.mismatches.push_back(
                {g.edge_label(e), formula,
                 {oracle[0], oracle[1], oracle[2]},
                 cell.source + " " + cell.family_text + " " + cell.range_text()});
        }
    }

    const GeneratorCheck distinct = check_edge_metric_generator(g, d, landmarks);
    report.distinctness_ok = distinct.ok;
    if (!distinct.ok)
        report.collision = CollisionPair{g.edge_label(distinct.first_a),
                                         g.edge_label(distinct.first_b),
                                         distinct.shared};
    report.pass = report.mismatches.empty() && report.distinctness_ok;

    if (!report.pass && k == 2) {
        const auto matches = recover_matching_landmarks(n);
        std::string sets;
        for (const auto& s : matches) {
            if (!sets.empty()) sets += ", ";
            sets += set_label(g, s);
        }
        report.note = "transcribed landmark set " + set_label(g, landmarks) +
                      (report.distinctness_ok ? " disagrees with the formulas"
                                              : " is not an edge metric generator") +
                      "; " +
                      (matches.empty()
                           ? "no landmark set {u0,x,y} reproduces every formula cell"
                           : "every formula cell is reproduced exactly by " + sets);
    }
    return report;
}

std::vector<VertexSet> recover_matching_landmarks(int n) {
    const int k = 2;
    const auto cells = formula_cells(n, k);
    const int t = case_parameter_t(n, k);
    const Graph g = build_generalized_petersen(n, k);
    const DistanceMatrix d = all_pairs_distances(g);

    // Expected triple per edge, precomputed once.
    std::vector<std::array<int, 3>> expected(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [a, b] = g.edges[e];
        const EdgeClass ec = classify_gp_edge(n, k, a, b);
        const FormulaCell& cell = matching_cell(cells, n, k, ec);
        const int i = ec.index / cell.stride;
        for (int c = 0; c < 3; ++c) expected[e][c] = cell.triple[c].eval(i, t);
    }

    std::vector<VertexSet> found;
    for (int x = 1; x < g.vertex_count; ++x) {
        for (int y = x + 1; y < g.vertex_count; ++y) {
            bool all = true;
            for (int e = 0; e < g.edge_count() && all; ++e) {
                const auto& [a, b] = g.edges[e];
                all = expected[e][0] == edge_vertex_distance(d, 0, a, b) &&
                      expected[e][1] == edge_vertex_distance(d, x, a, b) &&
                      expected[e][2] == edge_vertex_distance(d, y, a, b);
            }
            if (all) found.push_back({0, x, y});
        }
    }
    return found;
}

std::vector<Table5Row> reproduce_table5(int lo, int hi) {
    std::vector<Table5Row> rows;
    for (int n = lo; n <= hi; ++n) {
        const auto known = known_dimension_gp(n, 2);
        if (!known)
            throw OutOfScope("no known dimension for GP(" + std::to_string(n) + ",2)");
        const Graph g = build_generalized_petersen(n, 2);
        const SolveResult solved = solve(g, SolveKind::edge_dim);
        rows.push_back({n, solved.dimension, known->dimension,
                        verify_basis(g, SolveKind::edge_dim, known->basis)});
    }
    return rows;
}

namespace {

int dimension_of(const Graph& g, SolveKind kind) {
    return solve(g, kind).dimension;
}

Graph relabeled_copy(const Graph& g, std::mt19937& rng) {
    std::vector<int> perm(g.vertex_count);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) edges.emplace_back(perm[a], perm[b]);
    std::vector<std::string> labels(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) labels[perm[v]] = g.labels[v];
    return make_graph(g.vertex_count, std::move(edges), std::move(labels));
}

}  // namespace

std::vector<RealizationRow> realization_table(
    const std::vector<std::pair<int, int>>& instances, unsigned seed) {
    std::vector<RealizationRow> rows;
    for (const auto& [n, k] : instances) {
        const Graph g = build_generalized_petersen(n, k);
        RealizationRow row;
        row.n = n;
        row.k = k;
        row.beta = dimension_of(g, SolveKind::vertex_dim);
        row.beta_E = dimension_of(g, SolveKind::edge_dim);
        row.beta_E_line = dimension_of(g, SolveKind::line_edge_dim);
        row.relation = row.beta_E < row.beta ? '<'
                       : row.beta_E > row.beta ? '>'
                                               : '=';

        std::mt19937 rng(seed * 1000003u + static_cast<unsigned>(16 * n + k));
        const Graph shuffled = relabeled_copy(g, rng);
        if (dimension_of(shuffled, SolveKind::vertex_dim) != row.beta ||
            dimension_of(shuffled, SolveKind::edge_dim) != row.beta_E ||
            dimension_of(shuffled, SolveKind::line_edge_dim) != row.beta_E_line)
            throw Error("RelabelInvarianceViolated",
                        "dimension changed under relabeling of GP(" +
                            std::to_string(n) + "," + std::to_string(k) + ")");
        rows.push_back(row);
    }
    return rows;
}

std::string to_json(const VerificationReport& r) {
    nlohmann::json doc;
    doc["instance"] = {{"n", r.n}, {"k", r.k}};
    doc["cells_checked"] = r.cells_checked;
    auto& mm = doc["mismatches"] = nlohmann::json::array();
    for (const auto& m : r.mismatches)
        mm.push_back({{"edge", m.edge},
                      {"formula", m.formula},
                      {"oracle", m.oracle},
                      {"source", m.source}});
    doc["distinctness_ok"] = r.distinctness_ok;
    if (r.collision)
        doc["first_collision"] = {{"edge_a", r.collision->edge_a},
                                  {"edge_b", r.collision->edge_b},
                                  {"representation", r.collision->shared}};
    else
        doc["first_collision"] = nullptr;
    doc["verdict"] = r.pass ? "pass" : "fail";
    doc["note"] = r.note;
    return doc.dump();
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "GP(" << r.n << "," << r.k << "): " << r.cells_checked << " cells, "
        << r.mismatches.size() << " mismatches, distinct="
        << (r.distinctness_ok ? "yes" : "no") << " -> "
        << (r.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& m : r.mismatches)
        out << "  mismatch " << m.edge << ": formula " << triple_text(m.formula)
            << " oracle " << triple_text(m.oracle) << "  [" << m.source << "]\n";
    if (r.collision) {
        out << "  collision: " << r.collision->edge_a << " and "
            << r.collision->edge_b << " share (";
        for (size_t i = 0; i < r.collision->shared.size(); ++i)
            out << (i ? "," : "") << r.collision->shared[i];
        out << ")\n";
    }
    if (!r.note.empty()) out << "  note: " << r.note << "\n";
    return out.str();
}

std::string to_json(const std::vector<Table5Row>& rows) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : rows)
        doc.push_back({{"n", r.n},
                       {"solver_dimension", r.solver_dimension},
                       {"known_dimension", r.known_dimension},
                       {"basis_valid", r.basis_valid},
                       {"matches", r.matches()}});
    return doc.dump();
}

std::string to_text(const std::vector<Table5Row>& rows) {
    std::ostringstream out;
    out << "  n  solver  known  basis_valid\n";
    for (const auto& r : rows)
        out << (r.n < 10 ? "  " : " ") << r.n << "  " << r.solver_dimension
            << "       " << r.known_dimension << "      "
            << (r.basis_valid ? "yes" : "NO") << (r.matches() ? "" : "   <- MISMATCH")
            << "\n";
    return out.str();
}

std::string to_json(const std::vector<RealizationRow>& rows) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : rows)
        doc.push_back({{"n", r.n},
                       {"k", r.k},
                       {"beta", r.beta},
                       {"beta_E", r.beta_E},
                       {"beta_E_line", r.beta_E_line},
                       {"relation", std::string(1, r.relation)}});
    return doc.dump();
}

std::string to_text(const std::vector<RealizationRow>& rows) {
    std::ostringstream out;
    out << "  n  k  beta  beta_E  beta_E_line  relation\n";
    for (const auto& r : rows)
        out << (r.n < 10 ? "  " : " ") << r.n << "  " << r.k << "  " << r.beta
            << "     " << r.beta_E << "       " << r.beta_E_line
            << "            beta_E " << r.relation << " beta\n";
    return out.str();
}

}  // namespace edgedim
