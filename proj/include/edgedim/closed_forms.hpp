#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "edgedim/resolve.hpp"

namespace edgedim {

// Integer-affine expression i_coeff*i + t_coeff*t + constant. Every closed
// form here is affine in the row index i and the case parameter t.
struct Affine {
    int i_coeff = 0;
    int t_coeff = 0;
    int constant = 0;

    int eval(int i, int t) const { return i_coeff * i + t_coeff * t + constant; }
    std::string text() const;  // "2t-i-1", "i+2", "3", ...
};

constexpr Affine operator+(const Affine& a, const Affine& b) {
    return {a.i_coeff + b.i_coeff, a.t_coeff + b.t_coeff, a.constant + b.constant};
}
constexpr Affine operator-(const Affine& a, const Affine& b) {
    return {a.i_coeff - b.i_coeff, a.t_coeff - b.t_coeff, a.constant - b.constant};
}
constexpr Affine operator*(int m, const Affine& a) {
    return {m * a.i_coeff, m * a.t_coeff, m * a.constant};
}
constexpr Affine operator+(const Affine& a, int c) {
    return {a.i_coeff, a.t_coeff, a.constant + c};
}
constexpr Affine operator-(const Affine& a, int c) {
    return {a.i_coeff, a.t_coeff, a.constant - c};
}

enum class EdgeFamily { outer, spoke, inner };

// One row of a closed-form case: for edges of `family` whose base index j
// satisfies j = stride*i + offset with lo <= i <= hi, the representation is
// `triple` evaluated at (i, t). Ranges with lo > hi are empty (degenerate
// small-t instances) and never match, which is intended.
struct FormulaCell {
    EdgeFamily family = EdgeFamily::outer;
    int offset = 0;
    int stride = 1;
    Affine lo, hi;  // bounds on i, in t only
    std::array<Affine, 3> triple;
    std::string source;       // case id, e.g. "GP(4t+2,2)"
    std::string family_text;  // e.g. "u(2i)u(2i+1)"

    std::string range_text() const;  // "i=0" or "1<=i<=t-1"
};

struct EdgeClass {
    EdgeFamily family = EdgeFamily::outer;
    int index = 0;  // j: outer edge u_j u_{j+1}, spoke u_j v_j, inner v_j v_{j+k}
};

// The case parameter: t = n/2 for k=1, t = n/4 for k=2.
int case_parameter_t(int n, int k);

// Which family an edge of GP(n,k) belongs to, and its base index. Endpoints
// are canonical ids (u_i = i, v_i = n+i).
EdgeClass classify_gp_edge(int n, int k, int a, int b);

// All cells of the case covering (n,k): k=1 for any n >= 3 (even/odd cases),
// k=2 for n >= 16 (four cases by n mod 4). OutOfScope elsewhere; for k=2,
// n <= 15 only a basis is known (see known_dimension_gp), no formulas.
std::vector<FormulaCell> formula_cells(int n, int k);

// The unique cell covering the edge; InternalCoverageError if the ranges
// fail to partition (transcription bug, impossible by test).
const FormulaCell& matching_cell(const std::vector<FormulaCell>& cells, int n,
                                 int k, const EdgeClass& ec);

// The landmark set the closed forms are written against, ascending canonical
// ids (ascending order coincides with the presentation order in every case).
// k=1, n >= 3: {u0,u1,v0}; k=2, 5 <= n <= 15: the known small-case basis;
// k=2, n >= 16: the per-residue pattern set. OutOfScope elsewhere.
VertexSet landmark_set_gp(int n, int k);

// Closed-form representation of one edge, coordinates ordered to match
// landmark_set_gp. The EdgeId form resolves ids against GP(n,k)'s canonical
// edge order; the _uv form takes endpoints directly.
Representation formula_representation(int n, int k, int edge_id);
Representation formula_representation_uv(int n, int k, int a, int b);

struct KnownBasis {
    int n = 0;
    int k = 0;
    int dimension = 0;
    VertexSet basis;
};

// Known exact dimension with witness basis: k=1 -> (3, {u0,u1,v0});
// k=2 -> small-case rows for n=5..15, per-residue patterns for n >= 16.
// Absent for k >= 3 (only the lower bound 3 is known) and invalid (n,k).
std::optional<KnownBasis> known_dimension_gp(int n, int k);

struct BaselinePair {
    int beta = 0;
    int beta_E = 0;
};

// path (n >= 2) -> (1,1); cycle (n >= 3) -> (2,2); complete (n >= 2) ->
// (n-1, n-1). Both dimensions coincide on these families.
BaselinePair closed_form_baseline(const std::string& family, int n);

// Audit dump of the whole case: every cell with rendered expressions.
std::string formula_cells_json(int n, int k);

// "u<i>" / "v<i>" for a canonical GP(n,k) vertex id.
std::string gp_vertex_label(int n, int id);

}  // namespace edgedim
