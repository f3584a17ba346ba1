#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgedim/closed_forms.hpp"
#include "edgedim/graph.hpp"
#include "edgedim/resolve.hpp"

namespace edgedim {

struct FormulaMismatch {
    std::string edge;  // edge label, e.g. "u5u6"
    std::array<int, 3> formula{};
    std::array<int, 3> oracle{};
    std::string source;  // case, family, and range of the cell that fired
};

struct CollisionPair {
    std::string edge_a;
    std::string edge_b;
    Representation shared;
};

struct VerificationReport {
    int n = 0;
    int k = 0;
    int cells_checked = 0;  // one per edge: 3n
    std::vector<FormulaMismatch> mismatches;
    bool distinctness_ok = false;
    std::optional<CollisionPair> collision;  // first colliding pair when not distinct
    bool pass = false;  // mismatches empty and distinctness_ok
    std::string note;   // landmark-recovery diagnostic, set on failure
};

// Checks every edge of GP(n,k) two ways against the BFS oracle: the
// closed-form representation must equal the oracle representation with
// respect to landmark_set_gp, and the oracle representations must be pairwise
// distinct. The oracle is authoritative; formula disagreements become
// mismatch findings, never corrections. OutOfScope for (n,k) without
// formulas (k=2 with n <= 15, k >= 3).
VerificationReport verify_gp_formulas(int n, int k);

// Diagnostic for failed k=2 cases: which landmark sets {u0, x, y} reproduce
// every formula cell exactly? Searches all vertex pairs; the result names the
// set the tables were actually computed against.
std::vector<VertexSet> recover_matching_landmarks(int n);

struct Table5Row {
    int n = 0;
    int solver_dimension = 0;
    int known_dimension = 0;
    bool basis_valid = false;

    bool matches() const {
        return solver_dimension == known_dimension && basis_valid;
    }
};

// Solve GP(n,2) exhaustively for each n in [lo, hi] and compare with the
// known dimension; also check the known basis is a generator.
std::vector<Table5Row> reproduce_table5(int lo = 5, int hi = 15);

struct RealizationRow {
    int n = 0;
    int k = 0;
    int beta = 0;         // vertex_dim
    int beta_E = 0;       // edge_dim
    int beta_E_line = 0;  // line_edge_dim
    char relation = '=';  // beta_E vs beta
};

// All three dimensions of GP(n,k) per instance, exhaustively. Each instance
// is also re-solved on a seeded random relabeling; any dimension change would
// be a solver defect and raises.
std::vector<RealizationRow> realization_table(
    const std::vector<std::pair<int, int>>& instances, unsigned seed = 1);

std::string to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);
std::string to_json(const std::vector<Table5Row>& rows);
std::string to_text(const std::vector<Table5Row>& rows);
std::string to_json(const std::vector<RealizationRow>& rows);
std::string to_text(const std::vector<RealizationRow>& rows);

}  // namespace edgedim
