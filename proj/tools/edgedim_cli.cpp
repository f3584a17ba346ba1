#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgedim/closed_forms.hpp"
#include "edgedim/errors.hpp"
#include "edgedim/graph.hpp"
#include "edgedim/resolve.hpp"
#include "edgedim/solver.hpp"
#include "edgedim/verification.hpp"

namespace {

using namespace edgedim;

std::string rep_text(const Representation& r) {
    std::string out = "(";
    for (size_t i = 0; i < r.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(r[i]);
    }
    return out + ")";
}

struct Common {
    std::string format = "text";
    int jobs = 0;        // 0 = solver default (all cores)
    unsigned seed = 1;   // relabeling checks in the verification harness
    bool json() const { return format == "json"; }
};

SolveOptions solve_options(const Common& common) {
    SolveOptions opt;
    opt.parallelism = common.jobs;
    return opt;
}

// Exactly one graph source: --gp N K, --input FILE, or --family NAME --n N.
struct GraphSource {
    std::vector<int> gp;
    std::string input;
    std::string family;
    int family_n = 0;

    void attach(CLI::App* cmd, bool with_family) {
        cmd->add_option("--gp", gp, "generalized Petersen parameters N K")
            ->expected(2);
        cmd->add_option("--input", input, "edge-list file");
        if (with_family) {
            cmd->add_option("--family", family, "path, cycle, complete, or figure3_G1");
            cmd->add_option("--n", family_n, "family size n");
        }
    }

    Graph build() const {
        const int sources = !gp.empty() + !input.empty() + !family.empty();
        if (sources != 1)
            throw CLI::ValidationError(
                "graph source", "give exactly one of --gp, --input, --family");
        if (!gp.empty()) return build_generalized_petersen(gp[0], gp[1]);
        if (!input.empty()) return load_edge_list_file(input);
        return build_named(family, family_n);
    }
};

int run_gp(int n, int k, bool dot, bool json) {
    const Graph g = build_generalized_petersen(n, k);
    if (dot)
        std::cout << to_dot(g);
    else if (json)
        std::cout << to_json(g) << "\n";
    else
        std::cout << to_edge_list(g);
    return 0;
}

int run_solve(const GraphSource& source, const std::string& kind_flag,
              bool no_prune, int max_card, const Common& common) {
    const auto kind = kind_from_name(kind_flag);
    if (!kind)
        throw CLI::ValidationError("--kind", "expected edim, mdim, or ledim");
    const Graph g = source.build();
    SolveOptions opt = solve_options(common);
    opt.use_pruning = !no_prune;
    if (max_card > 0) opt.max_cardinality = max_card;
    const SolveResult r = solve(g, *kind, opt);
    if (common.json()) {
        std::cout << to_json(r) << "\n";
    } else {
        std::cout << "kind " << kind_name(r.kind) << "\n"
                  << "dimension " << r.dimension << "\n"
                  << "basis {";
        for (size_t i = 0; i < r.basis_labels.size(); ++i)
            std::cout << (i ? "," : "") << r.basis_labels[i];
        std::cout << "}\n"
                  << "subsets_examined " << r.subsets_examined << "\n"
                  << "pruned_vertices " << r.pruned_vertices << "\n"
                  << "elapsed_ms " << r.elapsed_seconds * 1000.0 << "\n";
    }
    return 0;
}

int run_bound(const GraphSource& source, const Common& common) {
    const Graph g = source.build();
    const BoundReport r = lower_bound_edge_dim(g);
    if (common.json()) {
        nlohmann::json doc{{"delta_bound", r.delta_bound},
                           {"max_degree_bound", r.max_degree_bound},
                           {"combined", r.combined},
                           {"path_exception", r.path_exception}};
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "delta_bound " << r.delta_bound << "\n"
                  << "max_degree_bound " << r.max_degree_bound << "\n"
                  << "combined " << r.combined << "\n"
                  << "path_exception " << (r.path_exception ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_formula(int n, int k, const std::string& edge, bool cells,
                const Common& common) {
    if (cells) {
        std::cout << formula_cells_json(n, k) << "\n";
        return 0;
    }
    const Graph g = build_generalized_petersen(n, k);
    std::vector<int> targets;
    if (!edge.empty()) {
        const int e = g.edge_by_label(edge);
        if (e < 0) throw InvalidSpec("no edge labeled " + edge);
        targets.push_back(e);
    } else {
        targets.resize(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) targets[e] = e;
    }
    nlohmann::json doc = nlohmann::json::array();
    for (int e : targets) {
        const auto& [a, b] = g.edges[e];
        const Representation r = formula_representation_uv(n, k, a, b);
        if (common.json())
            doc.push_back({{"edge", g.edge_label(e)}, {"representation", r}});
        else
            std::cout << g.edge_label(e) << " " << rep_text(r) << "\n";
    }
    if (common.json()) std::cout << doc.dump() << "\n";
    return 0;
}

int run_verify(const std::vector<int>& gp_formulas, const std::vector<int>& table5,
               bool table5_given, const std::vector<int>& realization,
               const Common& common) {
    const int modes = !gp_formulas.empty() + table5_given + !realization.empty();
    if (modes != 1)
        throw CLI::ValidationError(
            "verify", "give exactly one of --gp-formulas, --table5, --realization");

    if (!gp_formulas.empty()) {
        const VerificationReport r = verify_gp_formulas(gp_formulas[0], gp_formulas[1]);
        std::cout << (common.json() ? to_json(r) + "\n" : to_text(r));
        return r.pass ? 0 : 1;
    }
    if (table5_given) {
        int lo = 5, hi = 15;
        if (table5.size() == 1) lo = hi = table5[0];
        if (table5.size() == 2) {
            lo = table5[0];
            hi = table5[1];
        }
        const auto rows = reproduce_table5(lo, hi);
        std::cout << (common.json() ? to_json(rows) + "\n" : to_text(rows));
        const bool all = std::all_of(rows.begin(), rows.end(),
                                     [](const Table5Row& r) { return r.matches(); });
        return all ? 0 : 1;
    }
    const auto rows =
        realization_table({{realization[0], realization[1]}}, common.seed);
    std::cout << (common.json() ? to_json(rows) + "\n" : to_text(rows));
    return 0;
}

int run_basis(int n, int k, const Common& common) {
    const auto known = known_dimension_gp(n, k);
    VertexSet landmarks;
    bool have_landmarks = true;
    try {
        landmarks = landmark_set_gp(n, k);
    } catch (const OutOfScope&) {
        have_landmarks = false;
    }
    auto label = [&](int id) { return gp_vertex_label(n, id); };
    if (common.json()) {
        nlohmann::json doc;
        if (known) {
            nlohmann::json basis = nlohmann::json::array();
            for (int v : known->basis) basis.push_back(label(v));
            doc["known"] = {{"dimension", known->dimension}, {"basis", basis}};
        } else {
            doc["known"] = nullptr;
        }
        if (have_landmarks) {
            nlohmann::json ls = nlohmann::json::array();
            for (int v : landmarks) ls.push_back(label(v));
            doc["landmarks"] = ls;
        } else {
            doc["landmarks"] = nullptr;
        }
        std::cout << doc.dump() << "\n";
    } else {
        if (known) {
            std::cout << "known dimension " << known->dimension << "\nknown basis {";
            for (size_t i = 0; i < known->basis.size(); ++i)
                std::cout << (i ? "," : "") << label(known->basis[i]);
            std::cout << "}\n";
        } else {
            std::cout << "known dimension: none (lower bound 3 applies)\n";
        }
        if (have_landmarks) {
            std::cout << "landmark set {";
            for (size_t i = 0; i < landmarks.size(); ++i)
                std::cout << (i ? "," : "") << label(landmarks[i]);
            std::cout << "}\n";
        } else {
            std::cout << "landmark set: none\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact edge metric dimension toolkit for generalized Petersen graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    if (const char* env = std::getenv("EDGEDIM_JOBS")) common.jobs = std::atoi(env);
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", common.jobs, "solver worker count (default: all cores)");
    app.add_option("--seed", common.seed, "seed for relabeling cross-checks");

    auto* gp_cmd = app.add_subcommand("gp", "emit a generalized Petersen graph");
    int gp_n = 0, gp_k = 0;
    bool gp_dot = false, gp_json = false;
    gp_cmd->add_option("--n", gp_n, "outer cycle length")->required();
    gp_cmd->add_option("--k", gp_k, "inner step")->required();
    auto* dot_flag = gp_cmd->add_flag("--dot", gp_dot, "DOT output");
    gp_cmd->add_flag("--json", gp_json, "JSON output")->excludes(dot_flag);

    auto* solve_cmd = app.add_subcommand("solve", "exact dimension by exhaustive search");
    GraphSource solve_source;
    solve_source.attach(solve_cmd, true);
    std::string solve_kind;
    bool no_prune = false;
    int max_card = 0;
    solve_cmd->add_option("--kind", solve_kind, "edim, mdim, or ledim")->required();
    solve_cmd->add_flag("--no-prune", no_prune, "disable degree pruning");
    solve_cmd->add_option("--max-card", max_card, "cardinality cap");

    auto* bound_cmd = app.add_subcommand("bound", "degree lower bounds");
    GraphSource bound_source;
    bound_source.attach(bound_cmd, false);

    auto* formula_cmd = app.add_subcommand("formula", "closed-form representations");
    int f_n = 0, f_k = 0;
    std::string f_edge;
    bool f_cells = false;
    formula_cmd->add_option("--n", f_n, "n")->required();
    formula_cmd->add_option("--k", f_k, "k")->required();
    formula_cmd->add_option("--edge", f_edge, "one edge by label, e.g. u0u1");
    formula_cmd->add_flag("--cells", f_cells, "dump the formula cells as JSON");

    auto* verify_cmd = app.add_subcommand("verify", "check closed forms against the oracle");
    std::vector<int> v_formulas, v_table5, v_realization;
    auto* t5_opt = verify_cmd->add_option("--table5", v_table5,
                                          "reproduce known small-case rows [LO HI]")
                       ->expected(0, 2);
    verify_cmd->add_option("--gp-formulas", v_formulas, "verify formulas for N K")
        ->expected(2);
    verify_cmd->add_option("--realization", v_realization, "all three dimensions of N K")
        ->expected(2);

    auto* basis_cmd = app.add_subcommand("basis", "known dimension and landmark set");
    int b_n = 0, b_k = 0;
    basis_cmd->add_option("--n", b_n, "n")->required();
    basis_cmd->add_option("--k", b_k, "k")->required();

    try {
        app.parse(argc, argv);
        if (gp_cmd->parsed()) return run_gp(gp_n, gp_k, gp_dot, gp_json);
        if (solve_cmd->parsed())
            return run_solve(solve_source, solve_kind, no_prune, max_card, common);
        if (bound_cmd->parsed()) return run_bound(bound_source, common);
        if (formula_cmd->parsed())
            return run_formula(f_n, f_k, f_edge, f_cells, common);
        if (verify_cmd->parsed())
            return run_verify(v_formulas, v_table5, t5_opt->count() > 0,
                              v_realization, common);
        if (basis_cmd->parsed()) return run_basis(b_n, b_k, common);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0; usage errors exit 2
    } catch (const edgedim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
