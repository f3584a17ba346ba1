#include "edgedim/closed_forms.hpp"

#include <cstdlib>

#include <json.hpp>

#include "edgedim/errors.hpp"
#include "edgedim/graph.hpp"

namespace edgedim {

std::string Affine::text() const {
    struct Term {
        int coeff;
        const char* sym;
    };
    const std::array<Term, 2> terms{{{t_coeff, "t"}, {i_coeff, "i"}}};
    std::string out;
    auto emit = [&](int coeff, const char* sym) {
        if (out.empty()) {
            if (coeff == -1)
                out += "-";
            else if (coeff != 1)
                out += std::to_string(coeff);
        } else {
            out += coeff < 0 ? "-" : "+";
            if (std::abs(coeff) != 1) out += std::to_string(std::abs(coeff));
        }
        out += sym;
    };
    // positive terms first so bounds read "2t-1", not "-1+2t"
    for (const auto& tm : terms)
        if (tm.coeff > 0) emit(tm.coeff, tm.sym);
    for (const auto& tm : terms)
        if (tm.coeff < 0) emit(tm.coeff, tm.sym);
    if (constant != 0 || out.empty()) {
        if (out.empty())
            out = std::to_string(constant);
        else
            out += (constant < 0 ? "-" : "+") + std::to_string(std::abs(constant));
    }
    return out;
}

std::string FormulaCell::range_text() const {
    const std::string a = lo.text(), b = hi.text();
    return a == b ? "i=" + a : a + "<=i<=" + b;
}

int case_parameter_t(int n, int k) {
    if (k == 1) return n / 2;
    if (k == 2) return n / 4;
    throw OutOfScope("no closed-form case for k=" + std::to_string(k));
}

EdgeClass classify_gp_edge(int n, int k, int a, int b) {
    if (a > b) std::swap(a, b);
    if (b < n)  // outer: u_j u_{j+1}
        return {EdgeFamily::outer, (a + 1) % n == b ? a : b};
    if (a < n)  // spoke: u_j v_j
        return {EdgeFamily::spoke, a};
    const int x = a - n, y = b - n;  // inner: v_j v_{j+k}
    return {EdgeFamily::inner, (x + k) % n == y ? x : y};
}

namespace {

constexpr Affine I{1, 0, 0};
constexpr Affine T{0, 1, 0};
constexpr Affine C(int v) { return {0, 0, v}; }

struct CaseBuilder {
    std::vector<FormulaCell> cells;
    const char* source;

    void row(EdgeFamily fam, const char* fam_text, int offset, int stride,
             Affine lo, Affine hi, Affine x, Affine y, Affine z) {
        cells.push_back({fam, offset, stride, lo, hi, {x, y, z}, source, fam_text});
    }
};

std::vector<FormulaCell> cells_k1_even() {
    CaseBuilder b{{}, "GP(2t,1)"};
    auto outer = [&](Affine lo, Affine hi, Affine x, Affine y, Affine z) {
        b.row(EdgeFamily::outer, "u(i)u(i+1)", 0, 1, lo, hi, x, y, z);
    };
    auto spoke = [&](Affine lo, Affine hi, Affine x, Affine y, Affine z) {
        b.row(EdgeFamily::spoke, "u(i)v(i)", 0, 1, lo, hi, x, y, z);
    };
    auto inner = [&](Affine lo, Affine hi, Affine x, Affine y, Affine z) {
        b.row(EdgeFamily::inner, "v(i)v(i+1)", 0, 1, lo, hi, x, y, z);
    };
    outer(C(0), C(0), C(0), C(0), C(1));
    outer(C(1), T - 1, I, I - 1, I + 1);
    outer(T, T, T - 1, T - 1, T);
    outer(T + 1, 2 * T - 1, 2 * T - 1 - I, 2 * T - I, 2 * T - I);
    spoke(C(0), C(0), C(0), C(1), C(0));
    spoke(C(1), T, I, I - 1, I);
    spoke(T + 1, 2 * T - 1, 2 * T - I, 2 * T + 1 - I, 2 * T - I);
    inner(C(0), C(0), C(1), C(1), C(0));
    inner(C(1), T - 1, I + 1, I, I);
    inner(T, T, T, T, T - 1);
    inner(T + 1, 2 * T - 2, 2 * T - I, 2 * T + 1 - I, 2 * T - 1 - I);
    inner(2 * T - 1, 2 * T - 1, C(1), C(2), C(0));
    return std::move(b.cells);
}

std::vector<FormulaCell> cells_k1_odd() {
    CaseBuilder b{{}, "GP(2t+1,1)"};
    auto outer = [&](Affine lo, Affine hi, Affine x, Affine y, Affine z) {
        b.row(EdgeFamily::outer, "u(i)u(i+1)", 0, 1, lo, hi, x, y, z);
    };
    auto spoke = [&](Affine lo, Affine hi, Affine x, Affine y, Affine z) {
        b.row(EdgeFamily::spoke, "u(i)v(i)", 0, 1, lo, hi, x, y, z);
    };
    auto inner = [&](Affine lo, Affine hi, Affine x, Affine y, Affine z) {
        b.row(EdgeFamily::inner, "v(i)v(i+1)", 0, 1, lo, hi, x, y, z);
    };
    outer(C(0), C(0), C(0), C(0), C(1));
    outer(C(1), T, I, I - 1, I + 1);
    outer(T + 1, 2 * T, 2 * T - I, 2 * T + 1 - I, 2 * T + 1 - I);
    spoke(C(0), C(0), C(0), C(1), C(0));
    spoke(C(1), T, I, I - 1, I);
    spoke(T + 1, T + 1, T, T, T);
    spoke(T + 2, 2 * T, 2 * T + 1 - I, 2 * T + 2 - I, 2 * T + 1 - I);
    inner(C(0), C(0), C(1), C(1), C(0));
    inner(C(1), T, I + 1, I, I);
    inner(T + 1, 2 * T, 2 * T + 1 - I, 2 * T + 2 - I, 2 * T - I);
    return std::move(b.cells);
}

// For k=2 the families split by parity of the base index: even rows cover
// j = 2i, odd rows j = 2i+1.
struct K2Rows {
    CaseBuilder b;
    explicit K2Rows(const char* source) : b{{}, source} {}
    void oe(Affine lo, Affine hi, Affine x, Affine y, Affine z) {
        b.row(EdgeFamily::outer, "u(2i)u(2i+1)", 0, 2, lo, hi, x, y, z);
    }
    void oo(Affine lo, Affine hi, Affine x, Affine y, Affine z) {
        b.row(EdgeFamily::outer, "u(2i+1)u(2i+2)", 1, 2, lo, hi, x, y, z);
    }
    void se(Affine lo, Affine hi, Affine x, Affine y, Affine z) {
        b.row(EdgeFamily::spoke, "u(2i)v(2i)", 0, 2, lo, hi, x, y, z);
    }
    void so(Affine lo, Affine hi, Affine x, Affine y, Affine z) {
        b.row(EdgeFamily::spoke, "u(2i+1)v(2i+1)", 1, 2, lo, hi, x, y, z);
    }
    void ie(Affine lo, Affine hi, Affine x, Affine y, Affine z) {
        b.row(EdgeFamily::inner, "v(2i)v(2i+2)", 0, 2, lo, hi, x, y, z);
    }
    void io(Affine lo, Affine hi, Affine x, Affine y, Affine z) {
        b.row(EdgeFamily::inner, "v(2i+1)v(2i+3)", 1, 2, lo, hi, x, y, z);
    }
};

std::vector<FormulaCell> cells_k2_r0() {
    K2Rows r("GP(4t,2)");
    r.oe(C(0), C(0), C(0), C(2), T);
    r.oe(C(1), C(1), C(2), C(1), T + 1);
    r.oe(C(2), T, I + 2, I, T + 2 - I);
    r.oe(T + 1, 2 * T - 3, 2 * T + 2 - I, 2 * T + 2 - I, I - T);
    r.oe(2 * T - 2, 2 * T - 2, C(3), C(4), T - 2);
    r.oe(2 * T - 1, 2 * T - 1, C(1), C(3), T - 1);
    r.oo(C(0), C(0), C(1), C(2), T);
    r.oo(C(1), C(1), C(3), C(1), T + 1);
    r.oo(C(2), T - 1, I + 3, I, T + 2 - I);
    r.oo(T, T, T + 1, T, C(2));
    r.oo(T + 1, 2 * T - 3, 2 * T + 1 - I, 2 * T + 2 - I, I - T);
    r.oo(2 * T - 2, 2 * T - 2, C(2), C(4), T - 2);
    r.oo(2 * T - 1, 2 * T - 1, C(0), C(3), T - 1);
    r.se(C(0), C(0), C(0), C(3), T);
    r.se(C(1), C(1), C(2), C(2), T + 1);
    r.se(C(2), T, I + 1, I, T + 3 - I);
    r.se(T + 1, T + 1, T, T + 1, C(2));
    r.se(T + 2, 2 * T - 1, 2 * T + 1 - I, 2 * T + 3 - I, I - T);
    r.so(C(0), C(0), C(1), C(1), T - 1);
    r.so(C(1), T - 1, I + 2, I - 1, T + 1 - I);
    r.so(T, T, T + 1, T - 1, C(1));
    r.so(T + 1, 2 * T - 2, 2 * T + 1 - I, 2 * T + 1 - I, I - T - 1);
    r.so(2 * T - 1, 2 * T - 1, C(1), C(2), T - 2);
    r.ie(C(0), C(0), C(1), C(3), T + 1);
    r.ie(C(1), C(1), C(2), C(3), T + 2);
    r.ie(C(2), T - 1, I + 1, I + 1, T + 3 - I);
    r.ie(T, T, T, T + 1, C(3));
    r.ie(T + 1, T + 1, T - 1, T + 2, C(3));
    r.ie(T + 2, 2 * T - 2, 2 * T - I, 2 * T + 3 - I, I + 1 - T);
    r.ie(2 * T - 1, 2 * T - 1, C(1), C(4), T);
    r.io(C(0), C(0), C(2), C(0), T - 1);
    r.io(C(1), T - 1, I + 2, I - 1, T - I);
    r.io(T, T, T, T - 1, C(0));
    r.io(T + 1, 2 * T - 2, 2 * T - I, 2 * T - I, I - T - 1);
    r.io(2 * T - 1, 2 * T - 1, C(2), C(1), T - 2);
    return std::move(r.b.cells);
}

std::vector<FormulaCell> cells_k2_r1() {
    K2Rows r("GP(4t+1,2)");
    r.oe(C(0), C(0), C(0), T - 2, T - 1);
    r.oe(C(1), C(1), C(2), T - 3, T - 2);
    r.oe(C(2), T - 3, I + 2, T - 2 - I, T - 1 - I);
    r.oe(T - 2, T, I + 2, I + 4 - T, I + 3 - T);
    r.oe(T + 1, 2 * T - 3, 2 * T + 2 - I, I + 4 - T, I + 3 - T);
    r.oe(2 * T - 2, 2 * T, 4 * T - 2 * I, 3 * T - 1 - I, 3 * T - 1 - I);
    r.oo(C(0), C(0), C(1), T - 2, T - 2);
    r.oo(C(1), C(1), C(3), T - 3, T - 3);
    r.oo(C(2), T - 3, I + 3, T - 2 - I, T - 2 - I);
    r.oo(T - 2, T - 2, T + 1, C(2), C(2));
    r.oo(T - 1, T - 1, T + 2, C(3), C(3));
    r.oo(T, 2 * T - 3, 2 * T + 2 - I, I + 4 - T, I + 4 - T);
    r.oo(2 * T - 2, 2 * T - 2, C(3), T, T + 1);
    r.oo(2 * T - 1, 2 * T - 1, C(1), T - 1, T);
    r.se(C(0), C(0), C(0), T - 1, T - 2);
    r.se(C(1), C(1), C(2), T - 2, T - 3);
    r.se(C(2), T - 3, I + 1, T - 1 - I, T - 2 - I);
    r.se(T - 2, T, I + 1, I + 4 - T, I + 2 - T);
    r.se(T + 1, 2 * T - 3, 2 * T + 2 - I, I + 4 - T, I + 2 - T);
    r.se(2 * T - 2, 2 * T - 2, C(4), T, T);
    r.se(2 * T - 1, 2 * T - 1, C(3), T - 1, T + 1);
    r.se(2 * T, 2 * T, C(1), T - 2, T);
    r.so(C(0), C(0), C(1), T - 3, T - 1);
    r.so(C(1), T - 3, I + 2, T - 3 - I, T - 1 - I);
    r.so(T - 2, T - 2, T, C(1), C(2));
    r.so(T - 1, T - 1, T + 1, C(2), C(3));
    r.so(T, 2 * T - 3, 2 * T + 1 - I, I + 3 - T, I + 4 - T);
    r.so(2 * T - 2, 2 * T - 2, C(3), T + 1, T);
    r.so(2 * T - 1, 2 * T - 1, C(2), T, T - 1);
    r.ie(C(0), T - 4, I + 1, T - 1 - I, T - 3 - I);
    r.ie(T - 3, T - 3, T - 2, C(3), C(0));
    r.ie(T - 2, T - 2, T - 1, C(3), C(0));
    r.ie(T - 1, T - 1, T, C(4), C(1));
    r.ie(T, 2 * T - 4, 2 * T + 1 - I, I + 5 - T, I + 2 - T);
    r.ie(2 * T - 3, 2 * T - 1, 2 * T + 1 - I, 3 * T - 3 - I, I + 2 - T);
    r.ie(2 * T, 2 * T, C(2), T - 3, T);
    r.io(C(0), C(0), C(2), T - 4, T - 1);
    r.io(C(1), T - 4, I + 2, T - 4 - I, T - 1 - I);
    r.io(T - 3, T - 3, T - 1, C(0), C(3));
    r.io(T - 2, T - 2, T, C(1), C(3));
    r.io(T - 1, 2 * T - 4, 2 * T - I, I + 3 - T, I + 5 - T);
    r.io(2 * T - 3, 2 * T - 3, C(3), T, T);
    r.io(2 * T - 2, 2 * T - 2, C(2), T + 1, T - 1);
    r.io(2 * T - 1, 2 * T - 1, C(1), T, T - 2);
    return std::move(r.b.cells);
}

std::vector<FormulaCell> cells_k2_r2() {
    K2Rows r("GP(4t+2,2)");
    r.oe(C(0), C(0), C(0), T, T + 1);
    r.oe(C(1), C(1), C(2), T - 1, T);
    r.oe(C(2), T - 1, I + 2, T - I, T + 1 - I);
    r.oe(T, T, T + 2, C(2), C(1));
    r.oe(T + 1, 2 * T - 2, 2 * T + 3 - I, I + 2 - T, I + 1 - T);
    r.oe(2 * T - 1, 2 * T - 1, C(3), T + 1, T);
    r.oe(2 * T, 2 * T, C(1), T + 1, T + 1);
    r.oo(C(0), C(0), C(1), T, T);
    r.oo(C(1), C(1), C(3), T - 1, T - 1);
    r.oo(C(2), T - 1, I + 3, T - I, T - I);
    r.oo(T, 2 * T - 2, 2 * T + 2 - I, I + 2 - T, I + 2 - T);
    r.oo(2 * T - 1, 2 * T - 1, C(2), T + 1, T + 1);
    r.oo(2 * T, 2 * T, C(0), T + 1, T + 1);
    r.se(C(0), C(0), C(0), T + 1, T);
    r.se(C(1), C(1), C(2), T, T - 1);
    r.se(C(2), T - 1, I + 1, T + 1 - I, T - I);
    r.se(T, T, T + 1, C(2), C(0));
    r.se(T + 1, 2 * T, 2 * T + 2 - I, I + 2 - T, I - T);
    r.so(C(0), C(0), C(1), T - 1, T + 1);
    r.so(C(1), T - 1, I + 2, T - 1 - I, T + 1 - I);
    r.so(T, 2 * T - 1, 2 * T + 2 - I, I + 1 - T, I + 2 - T);
    r.so(2 * T, 2 * T, C(1), T, T + 2);
    r.ie(C(0), T - 2, I + 1, T + 1 - I, T - 1 - I);
    r.ie(T - 1, T - 1, T, C(3), C(0));
    r.ie(T, 2 * T - 1, 2 * T + 1 - I, I + 3 - T, I - T);
    r.ie(2 * T, 2 * T, C(1), T + 2, T);
    r.io(C(0), T - 2, I + 2, T - 2 - I, T + 1 - I);
    r.io(T - 1, T - 1, T + 1, C(0), C(3));
    r.io(T, 2 * T - 1, 2 * T + 1 - I, I + 1 - T, I + 3 - T);
    r.io(2 * T, 2 * T, C(2), T - 1, T + 2);
    return std::move(r.b.cells);
}

std::vector<FormulaCell> cells_k2_r3() {
    K2Rows r("GP(4t+3,2)");
    r.oe(C(0), C(0), C(0), T, T + 1);
    r.oe(C(1), C(1), C(2), T - 1, T);
    r.oe(C(2), T - 1, I + 2, T - I, T + 1 - I);
    r.oe(T, T, T + 2, C(2), C(1));
    r.oe(T + 1, 2 * T - 1, 2 * T + 3 - I, I + 2 - T, I + 1 - T);
    r.oe(2 * T, 2 * T, C(2), T + 2, T + 1);
    r.oe(2 * T + 1, 2 * T + 1, C(0), T + 1, T + 1);
    r.oo(C(0), C(0), C(1), T, T);
    r.oo(C(1), C(1), C(3), T - 1, T - 1);
    r.oo(C(2), T - 1, I + 3, T - I, T - I);
    r.oo(T, 2 * T - 2, 2 * T + 3 - I, I + 2 - T, I + 2 - T);
    r.oo(2 * T - 1, 2 * T - 1, C(3), T + 1, T + 1);
    r.oo(2 * T, 2 * T, C(1), T + 1, T + 2);
    r.se(C(0), C(0), C(0), T + 1, T);
    r.se(C(1), C(1), C(2), T, T - 1);
    r.se(C(2), T - 1, I + 1, T + 1 - I, T - I);
    r.se(T, T, T + 1, C(2), C(0));
    r.se(T + 1, 2 * T - 1, 2 * T + 3 - I, I + 2 - T, I - T);
    r.se(2 * T, 2 * T, C(3), T + 1, T);
    r.se(2 * T + 1, 2 * T + 1, C(1), T, T + 1);
    r.so(C(0), C(0), C(1), T - 1, T + 1);
    r.so(C(1), T - 1, I + 2, T - 1 - I, T + 1 - I);
    r.so(T, 2 * T - 1, 2 * T + 2 - I, I + 1 - T, I + 2 - T);
    r.so(2 * T, 2 * T, C(2), T + 1, T + 1);
    r.ie(C(0), T - 2, I + 1, T + 1 - I, T - 1 - I);
    r.ie(T - 1, T - 1, T, C(3), C(0));
    r.ie(T, T, T + 1, C(3), C(0));
    r.ie(T + 1, 2 * T - 2, 2 * T + 2 - I, I + 3 - T, I - T);
    r.ie(2 * T - 1, 2 * T - 1, C(3), T + 1, T - 1);
    r.ie(2 * T, 2 * T, C(2), T, T);
    r.ie(2 * T + 1, 2 * T + 1, C(2), T - 1, T + 1);
    r.io(C(0), T - 2, I + 2, T - 2 - I, T + 1 - I);
    r.io(T - 1, T - 1, T + 1, C(0), C(3));
    r.io(T, 2 * T - 2, 2 * T + 1 - I, I + 1 - T, I + 3 - T);
    r.io(2 * T - 1, 2 * T - 1, C(2), T, T + 1);
    r.io(2 * T, 2 * T, C(1), T + 1, T);
    return std::move(r.b.cells);
}

bool valid_gp(int n, int k) { return n >= 3 && k >= 1 && 2 * k < n; }

}  // namespace

std::vector<FormulaCell> formula_cells(int n, int k) {
    if (k == 1 && n >= 3) return n % 2 == 0 ? cells_k1_even() : cells_k1_odd();
    if (k == 2 && n >= 16) {
        switch (n % 4) {
            case 0: return cells_k2_r0();
            case 1: return cells_k2_r1();
            case 2: return cells_k2_r2();
            default: return cells_k2_r3();
        }
    }
    throw OutOfScope("no representation formulas for GP(" + std::to_string(n) +
                     "," + std::to_string(k) + ")");
}

const FormulaCell& matching_cell(const std::vector<FormulaCell>& cells, int n,
                                 int k, const EdgeClass& ec) {
    const int t = case_parameter_t(n, k);
    const FormulaCell* hit = nullptr;
    for (const auto& cell : cells) {
        if (cell.family != ec.family) continue;
        if (ec.index % cell.stride != cell.offset) continue;
        const int i = ec.index / cell.stride;
        if (i < cell.lo.eval(0, t) || i > cell.hi.eval(0, t)) continue;
        if (hit)
            throw InternalCoverageError("cells " + hit->range_text() + " and " +
                                        cell.range_text() + " of " + cell.family_text +
                                        " overlap at index " + std::to_string(ec.index));
        hit = &cell;
    }
    if (!hit)
        throw InternalCoverageError("no cell covers index " + std::to_string(ec.index) +
                                    " of family " + std::to_string(static_cast<int>(ec.family)));
    return *hit;
}

namespace {

// Small-case bases, canonical ids (u_i = i, v_i = n+i).
const std::pair<int, VertexSet> kSmallBases[] = {
    {5, {0, 1, 3, 8}},    // {u0,u1,u3,v3}
    {6, {0, 1, 2, 3}},    // {u0,u1,u2,u3}
    {7, {0, 1, 4, 9}},    // {u0,u1,u4,v2}
    {8, {0, 2, 12}},      // {u0,u2,v4}
    {9, {0, 1, 2, 14}},   // {u0,u1,u2,v5}
    {10, {0, 3, 16}},     // {u0,u3,v6}
    {11, {0, 3, 15}},     // {u0,u3,v4}
    {12, {0, 3, 16}},     // {u0,u3,v4}
    {13, {0, 16, 17}},    // {u0,v3,v4}
    {14, {0, 4, 15}},     // {u0,u4,v1}
    {15, {0, 5, 16}},     // {u0,u5,v1}
};

}  // namespace

VertexSet landmark_set_gp(int n, int k) {
    if (k == 1 && n >= 3) return {0, 1, n};  // {u0, u1, v0}
    if (k == 2 && n >= 5 && n <= 15) {
        for (const auto& [row_n, basis] : kSmallBases)
            if (row_n == n) return basis;
    }
    if (k == 2 && n >= 16) {
        const int t = n / 4;
        switch (n % 4) {
            case 0: return {0, n + 3, n + 2 * t + 3};          // {u0, v3, v(2t+3)}
            case 1: return {0, n + 2 * t - 5, n + 2 * t - 4};  // {u0, v(2t-5), v(2t-4)}
            default: return {0, n + 2 * t - 2, n + 2 * t - 1}; // {u0, v(2t-2), v(2t-1)}
        }
    }
    throw OutOfScope("no landmark set for GP(" + std::to_string(n) + "," +
                     std::to_string(k) + ")");
}

Representation formula_representation_uv(int n, int k, int a, int b) {
    const auto cells = formula_cells(n, k);
    const EdgeClass ec = classify_gp_edge(n, k, a, b);
    const FormulaCell& cell = matching_cell(cells, n, k, ec);
    const int t = case_parameter_t(n, k);
    const int i = ec.index / cell.stride;
    Representation r(3);
    for (int c = 0; c < 3; ++c) r[c] = cell.triple[c].eval(i, t);
    return r;
}

Representation formula_representation(int n, int k, int edge_id) {
    const Graph g = build_generalized_petersen(n, k);
    if (edge_id < 0 || edge_id >= g.edge_count())
        throw InvalidSpec("edge id out of range");
    const auto& [a, b] = g.edges[edge_id];
    return formula_representation_uv(n, k, a, b);
}

std::optional<KnownBasis> known_dimension_gp(int n, int k) {
    if (!valid_gp(n, k)) return std::nullopt;
    if (k == 1) return KnownBasis{n, k, 3, {0, 1, n}};
    if (k == 2) {
        VertexSet basis = landmark_set_gp(n, k);
        const int dim = static_cast<int>(basis.size());
        return KnownBasis{n, k, dim, std::move(basis)};
    }
    return std::nullopt;  // k >= 3: only the lower bound 3 is known
}

BaselinePair closed_form_baseline(const std::string& family, int n) {
    if (family == "path") {
        if (n < 2) throw InvalidSpec("path baseline needs n >= 2");
        return {1, 1};
    }
    if (family == "cycle") {
        if (n < 3) throw InvalidSpec("cycle baseline needs n >= 3");
        return {2, 2};
    }
    if (family == "complete") {
        if (n < 2) throw InvalidSpec("complete baseline needs n >= 2");
        return {n - 1, n - 1};
    }
    throw InvalidSpec("unknown baseline family '" + family + "'");
}

std::string gp_vertex_label(int n, int id) {
    return id < n ? "u" + std::to_string(id) : "v" + std::to_string(id - n);
}

std::string formula_cells_json(int n, int k) {
    const auto cells = formula_cells(n, k);
    nlohmann::json doc;
    doc["n"] = n;
    doc["k"] = k;
    doc["t"] = case_parameter_t(n, k);
    doc["case"] = cells.front().source;
    auto& landmarks = doc["landmarks"] = nlohmann::json::array();
    for (int v : landmark_set_gp(n, k)) landmarks.push_back(gp_vertex_label(n, v));
    auto& rows = doc["cells"] = nlohmann::json::array();
    for (const auto& cell : cells) {
        nlohmann::json row;
        row["family"] = cell.family_text;
        row["range"] = cell.range_text();
        row["triple"] = {cell.triple[0].text(), cell.triple[1].text(),
                         cell.triple[2].text()};
        row["source"] = cell.source;
        rows.push_back(std::move(row));
    }
    return doc.dump();
}

}  // namespace edgedim
