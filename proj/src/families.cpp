#include "arrlab/families.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace arrlab::families {

using casalg::Poly;
using casalg::Term;
using exactfield::Matrix;
using exactfield::primitive_root_of_unity;
using graphs::Graph;
using projgeom::make_surface;

namespace {

ProjLine line_from_rows(FieldRef f, const std::vector<std::vector<Scalar>>& rows) {
    return ProjLine::from_span(Matrix::from_rows(f, rows));
}

Poly monomial(FieldRef f, std::uint32_t nvars, std::vector<std::uint32_t> exp, long coef) {
    return Poly::from_terms(f, nvars, {{std::move(exp), Scalar::from_int(f, coef)}});
}

}  // namespace

// ---- two rulings ---------------------------------------------------------

Arrangement two_rulings(std::size_t m, std::size_t n, FieldRef f) {
    if (m < 1 || n < 1) throw ValueError("two_rulings requires m, n >= 1");
    if (f->is_finite() && f->q() < std::max(m, n))
        throw ValueError("field too small for the requested ruling counts");
    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    std::vector<ProjLine> lines;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
        Scalar a = Scalar::by_index(f, i);
        lines.push_back(line_from_rows(f, {{one, a, zero, zero}, {zero, zero, one, a}}));
        labels.push_back("A(" + a.str() + ")");
    }
    for (std::size_t j = 0; j < n; ++j) {
        Scalar b = Scalar::by_index(f, j);
        lines.push_back(line_from_rows(f, {{one, zero, b, zero}, {zero, one, zero, b}}));
        labels.push_back("B(" + b.str() + ")");
    }
    return Arrangement(f, 3, std::move(lines), std::move(labels));
}

casalg::Poly two_rulings_plane_form(const Scalar& a) {
    FieldRef f = a.field();
    return Poly::linear_form(f, {a * a, -a, -a, Scalar::one(f)});
}

casalg::Poly quadric_x0x3_x1x2(FieldRef f) {
    return monomial(f, 4, {1, 0, 0, 1}, 1) - monomial(f, 4, {0, 1, 1, 0}, 1);
}

// ---- Fermat surfaces --------------------------------------------------------

namespace {

std::string fermat_label(std::uint32_t a, std::uint32_t i, std::uint32_t j) {
    return "l" + std::to_string(a) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// l1(i,j) meets l3(h,k) iff omega^2 zeta_i zeta_j zeta_k = zeta_h, i.e.
// i + j + k + 1 = h (mod d); the other cross rules are shift-free.
bool fermat_edge(std::uint32_t d, std::uint32_t a, std::uint32_t i, std::uint32_t j,
                 std::uint32_t b, std::uint32_t h, std::uint32_t k) {
    if (a > b) return fermat_edge(d, b, h, k, a, i, j);
    auto eq = [d](std::int64_t lhs, std::int64_t rhs) {
        return ((lhs - rhs) % d + d) % d == 0;
    };
    if (a == b) return i == h || j == k;
    if (a == 1 && b == 2) return eq(i - j, h - k);
    if (a == 1 && b == 3) return eq(i + j + k + 1, h);
    return eq(i + j, h + k);  // a == 2, b == 3
}

}  // namespace

graphs::Graph fermat_combinatorial(std::uint32_t d) {
    if (d < 3) throw ValueError("fermat_combinatorial requires d >= 3");
    std::vector<std::string> labels;
    std::vector<std::array<std::uint32_t, 3>> verts;
    for (std::uint32_t a = 1; a <= 3; ++a)
        for (std::uint32_t i = 1; i <= d; ++i)
            for (std::uint32_t j = 1; j <= d; ++j) {
                verts.push_back({a, i, j});
                labels.push_back(fermat_label(a, i, j));
            }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < verts.size(); ++u)
        for (std::size_t v = u + 1; v < verts.size(); ++v)
            if (fermat_edge(d, verts[u][0], verts[u][1], verts[u][2], verts[v][0], verts[v][1],
                            verts[v][2]))
                edges.emplace_back(u, v);
    return Graph(verts.size(), std::move(edges), std::move(labels));
}

namespace {

struct FermatRoots {
    Scalar omega;                 // primitive 2d-th root
    std::vector<Scalar> omega_z;  // omega_z[i] = omega * zeta^i = omega^(2i+1), i = 1..d
};

FermatRoots fermat_roots(std::uint32_t d, FieldRef f) {
    if (!f->is_finite()) throw ValueError("fermat_geometric requires a finite field");
    Scalar omega = primitive_root_of_unity(f, 2 * static_cast<std::uint64_t>(d));
    Scalar zeta = omega * omega;
    std::vector<Scalar> wz(d + 1, omega);
    Scalar acc = omega;
    for (std::uint32_t i = 1; i <= d; ++i) {
        acc = acc * zeta;
        wz[i] = acc;
    }
    return {omega, std::move(wz)};
}

ProjLine fermat_line(FieldRef f, std::uint32_t a, const Scalar& wi, const Scalar& wj) {
    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    switch (a) {
        case 1:
            return ProjLine::from_span(
                Matrix::from_rows(f, {{one, wi, zero, zero}, {zero, zero, one, wj}}));
        case 2:
            return ProjLine::from_span(
                Matrix::from_rows(f, {{one, zero, wi, zero}, {zero, one, zero, wj}}));
        default:
            return ProjLine::from_span(
                Matrix::from_rows(f, {{one, zero, zero, wi}, {zero, one, wj, zero}}));
    }
}

}  // namespace

Arrangement fermat_geometric(std::uint32_t d, FieldRef f) {
    if (d < 3) throw ValueError("fermat_geometric requires d >= 3");
    FermatRoots roots = fermat_roots(d, f);
    std::vector<ProjLine> lines;
    std::vector<std::string> labels;
    for (std::uint32_t a = 1; a <= 3; ++a)
        for (std::uint32_t i = 1; i <= d; ++i)
            for (std::uint32_t j = 1; j <= d; ++j) {
                lines.push_back(fermat_line(f, a, roots.omega_z[i], roots.omega_z[j]));
                labels.push_back(fermat_label(a, i, j));
            }
    return Arrangement(f, 3, std::move(lines), std::move(labels));
}

casalg::Poly fermat_polynomial(std::uint32_t d, FieldRef f) {
    Poly p(f, 4);
    for (std::uint32_t v = 0; v < 4; ++v) {
        std::vector<std::uint32_t> e(4, 0);
        e[v] = d;
        p = p + monomial(f, 4, std::move(e), 1);
    }
    return p;
}

casalg::Poly fermat_plane_form(std::uint32_t d, std::uint32_t plane_index, FieldRef f) {
    if (plane_index < 1 || plane_index > 3 * d) throw ValueError("plane index out of range");
    FermatRoots roots = fermat_roots(d, f);
    std::uint32_t a = (plane_index - 1) / d + 1;
    std::uint32_t i = (plane_index - 1) % d + 1;
    std::vector<Scalar> coeffs(4, Scalar::zero(f));
    coeffs[0] = -roots.omega_z[i];
    coeffs[a] = Scalar::one(f);  // x_a = omega zeta_i x_0
    return Poly::linear_form(f, coeffs);
}

Arrangement fermat_sub(std::uint32_t d, const std::vector<std::uint32_t>& planes, FieldRef f) {
    if (planes.empty()) throw ValueError("fermat_sub requires a nonempty plane set");
    std::set<std::uint32_t> chosen(planes.begin(), planes.end());
    for (std::uint32_t idx : chosen)
        if (idx < 1 || idx > 3 * d) throw ValueError("plane index out of range");
    FermatRoots roots = fermat_roots(d, f);
    std::vector<ProjLine> lines;
    std::vector<std::string> labels;
    for (std::uint32_t idx : chosen) {
        std::uint32_t a = (idx - 1) / d + 1;
        std::uint32_t i = (idx - 1) % d + 1;
        for (std::uint32_t j = 1; j <= d; ++j) {
            lines.push_back(fermat_line(f, a, roots.omega_z[i], roots.omega_z[j]));
            labels.push_back(fermat_label(a, i, j));
        }
    }
    return Arrangement(f, 3, std::move(lines), std::move(labels));
}

// ---- 27 lines and subconfigurations ----------------------------------------------

namespace {

struct TwentySeven {
    std::vector<std::string> labels;
    // vertex kinds: E_i (kind 0, idx i), L_ij (kind 1, pair), C_i (kind 2)
    struct V {
        int kind;
        std::uint32_t i, j;
    };
    std::vector<V> verts;

    TwentySeven() {
        for (std::uint32_t i = 1; i <= 6; ++i) {
            verts.push_back({0, i, 0});
            labels.push_back("E" + std::to_string(i));
        }
        for (std::uint32_t i = 1; i <= 6; ++i)
            for (std::uint32_t j = i + 1; j <= 6; ++j) {
                verts.push_back({1, i, j});
                labels.push_back("L" + std::to_string(i) + std::to_string(j));
            }
        for (std::uint32_t i = 1; i <= 6; ++i) {
            verts.push_back({2, i, 0});
            labels.push_back("C" + std::to_string(i));
        }
    }

    bool edge(const V& a, const V& b) const {
        if (a.kind > b.kind) return edge(b, a);
        if (a.kind == 0 && b.kind == 0) return false;
        if (a.kind == 0 && b.kind == 1) return a.i == b.i || a.i == b.j;
        if (a.kind == 0 && b.kind == 2) return a.i != b.i;
        if (a.kind == 1 && b.kind == 1)
            return a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
        if (a.kind == 1 && b.kind == 2) return b.i == a.i || b.i == a.j;
        return false;  // C-C
    }

    Graph graph() const {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t u = 0; u < verts.size(); ++u)
            for (std::size_t v = u + 1; v < verts.size(); ++v)
                if (edge(verts[u], verts[v])) edges.emplace_back(u, v);
        return Graph(verts.size(), std::move(edges), labels);
    }
};

Graph induce(const Graph& g, const std::vector<std::size_t>& verts) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < verts.size(); ++u)
        for (std::size_t v = u + 1; v < verts.size(); ++v)
            if (g.adjacent(verts[u], verts[v])) edges.emplace_back(u, v);
    std::vector<std::string> labels;
    if (!g.labels().empty())
        for (std::size_t v : verts) labels.push_back(g.labels()[v]);
    return Graph(verts.size(), std::move(edges), std::move(labels));
}

}  // namespace

graphs::Graph twenty_seven_graph() { return TwentySeven().graph(); }

graphs::Graph steiner_graph() {
    Graph g = twenty_seven_graph();
    // E1,E2,E3 = 0..2; L12,L13,L23 = 6,7,11; C1,C2,C3 = 21..23
    return induce(g, {0, 1, 2, 6, 7, 11, 21, 22, 23});
}

graphs::Graph double_six_graph() {
    Graph g = twenty_seven_graph();
    std::vector<std::size_t> verts;
    for (std::size_t i = 0; i < 6; ++i) verts.push_back(i);        // E1..E6
    for (std::size_t i = 21; i < 27; ++i) verts.push_back(i);      // C1..C6
    return induce(g, verts);
}

// ---- cone over points ---------------------------------------------------------

Arrangement cone_over_points(std::size_t s, FieldRef f, std::uint32_t n) {
    if (s < 2) throw ValueError("cone_over_points requires s >= 2");
    if (n < 3) throw ValueError("cone_over_points requires ambient dimension >= 3");
    if (f->is_finite() && f->q() < s)
        throw ValueError("field too small for " + std::to_string(s) + " distinct points");
    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    std::vector<Scalar> apex(n + 1, zero);
    apex.back() = one;
    std::vector<ProjLine> lines;
    for (std::size_t idx = 0; idx < s; ++idx) {
        Scalar t = Scalar::by_index(f, idx);
        // moment-curve point [1, t, t^2, ..., t^(n-1), 0]
        std::vector<Scalar> pt(n + 1, zero);
        Scalar acc = one;
        for (std::uint32_t c = 0; c < n; ++c) {
            pt[c] = acc;
            acc = acc * t;
        }
        lines.push_back(
            ProjLine::through(projgeom::ProjPoint(pt), projgeom::ProjPoint(apex)));
    }
    return Arrangement(f, n, std::move(lines));
}

// ---- the eight-line example over Q -----------------------------------------------

Arrangement example_eight_lines() {
    FieldRef f = exactfield::field_rational();
    // linear forms in the variables (x, y, z, t, w)
    auto F = [&](long x, long y, long z, long t, long w) {
        return std::vector<Scalar>{Scalar::from_int(f, x), Scalar::from_int(f, y),
                                   Scalar::from_int(f, z), Scalar::from_int(f, t),
                                   Scalar::from_int(f, w)};
    };
    const std::vector<std::vector<std::vector<Scalar>>> prime_forms = {
        {F(0, 0, 0, 1, 0), F(0, 1, -1, 0, 0), F(1, 0, 0, 0, 0)},   // (t, y-z, x)
        {F(0, 0, 0, 1, 0), F(0, 1, 1, 0, 0), F(1, 0, 0, 0, 0)},    // (t, y+z, x)
        {F(0, 0, 1, -1, 0), F(0, 1, 0, 0, 0), F(1, 0, 0, 0, 0)},   // (z-t, y, x)
        {F(0, 0, 1, 1, 0), F(0, 1, 0, 0, 0), F(1, 0, 0, 0, 0)},    // (z+t, y, x)
        {F(0, 0, 0, 0, 1), F(0, 0, 1, -1, 0), F(1, -1, 0, 0, 0)},  // (w, z-t, x-y)
        {F(0, 0, 0, 0, 1), F(0, 0, 1, 1, 0), F(1, 1, 0, 0, 0)},    // (w, z+t, x+y)
        {F(0, 0, 0, 0, 1), F(0, 1, 1, 0, 0), F(1, 0, 0, 1, 0)},    // (w, y+z, x+t)
        {F(0, 0, 0, 0, 1), F(0, 1, -1, 0, 0), F(1, 0, 0, -1, 0)},  // (w, y-z, x-t)
    };
    std::vector<ProjLine> lines;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < prime_forms.size(); ++i) {
        Matrix forms = Matrix::from_rows(f, prime_forms[i]);
        lines.push_back(ProjLine::from_span(forms.kernel()));
        labels.push_back("p" + std::to_string(i + 1));
    }
    return Arrangement(f, 4, std::move(lines), std::move(labels));
}

// ---- the cube complete intersection -----------------------------------------------

namespace {

std::vector<std::vector<Scalar>> cube_forms(FieldRef f) {
    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    std::vector<std::vector<Scalar>> forms;
    for (std::uint32_t i = 0; i < 3; ++i) {
        std::vector<Scalar> a(5, zero);
        a[i] = one;
        forms.push_back(std::move(a));  // a_i = x_i
    }
    for (std::uint32_t i = 0; i < 2; ++i) {
        std::vector<Scalar> b(5, zero);
        b[3 + i] = one;
        forms.push_back(std::move(b));  // b_1 = x3, b_2 = x4
    }
    forms.push_back(std::vector<Scalar>(5, one));  // b_3 = x0+x1+x2+x3+x4
    return forms;
}

}  // namespace

Arrangement cube_ci(FieldRef f) {
    std::vector<std::vector<Scalar>> forms = cube_forms(f);
    std::vector<ProjLine> lines;
    std::vector<std::string> labels;
    for (std::uint32_t sigma = 0; sigma < 8; ++sigma) {
        std::vector<std::vector<Scalar>> rows;
        std::string label = "s";
        for (std::uint32_t i = 0; i < 3; ++i) {
            rows.push_back(sigma & (1u << i) ? forms[i] : forms[3 + i]);
            label += (sigma & (1u << i)) ? '1' : '0';
        }
        Matrix m = Matrix::from_rows(f, rows);
        if (m.rank() != 3)
            throw ValueError("cube_ci rank condition failed for sigma = " + label);
        lines.push_back(ProjLine::from_span(m.kernel()));
        labels.push_back(label);
    }
    return Arrangement(f, 4, std::move(lines), std::move(labels));
}

std::array<casalg::Poly, 3> cube_ci_generators(FieldRef f) {
    std::vector<std::vector<Scalar>> forms = cube_forms(f);
    auto lf = [&](std::size_t i) { return Poly::linear_form(f, forms[i]); };
    return {lf(0) * lf(3), lf(1) * lf(4), lf(2) * lf(5)};
}

// ---- Schur quartic ------------------------------------------------------------------

casalg::Poly schur_quartic(FieldRef f) {
    return monomial(f, 4, {4, 0, 0, 0}, 1) - monomial(f, 4, {1, 3, 0, 0}, 1) -
           monomial(f, 4, {0, 0, 4, 0}, 1) + monomial(f, 4, {0, 0, 1, 3}, 1);
}

std::array<casalg::Poly, 4> schur_quadrics(FieldRef f) {
    Scalar z = primitive_root_of_unity(f, 3);
    Scalar z2 = z * z;
    Scalar one = Scalar::one(f), two = Scalar::from_int(f, 2);
    auto quad = [&](const Scalar& c02, const Scalar& c03, const Scalar& c12, const Scalar& c13) {
        std::vector<Term> ts;
        if (!c02.is_zero()) ts.push_back({{1, 0, 1, 0}, c02});
        if (!c03.is_zero()) ts.push_back({{1, 0, 0, 1}, c03});
        if (!c12.is_zero()) ts.push_back({{0, 1, 1, 0}, c12});
        if (!c13.is_zero()) ts.push_back({{0, 1, 0, 1}, c13});
        return Poly::from_terms(f, 4, std::move(ts));
    };
    // Q = x0*(p x2 + q x3) - x1*(r x2 + s x3) stored by the four bilinear coefficients
    return {
        quad(Scalar::zero(f), one, -one, Scalar::zero(f)),  // x0x3 - x1x2
        quad(two * z2, one, one, -z),                       // x0(2z^2 x2 + x3) - x1(-x2 + z x3)
        quad(two, one, one, -one),                          // x0(2x2 + x3) - x1(-x2 + x3)
        quad(-(two * z2), -z, -z, one),                     // x0(-2z^2 x2 - z x3) - x1(z x2 - x3)
    };
}

casalg::Poly schur_octic(FieldRef f) {
    struct Entry {
        long c;
        std::uint32_t e0, e1, e2, e3;
    };
    static const Entry entries[] = {
        {80, 3, 5, 0, 0}, {1, 0, 8, 0, 0},  {64, 2, 2, 4, 0}, {64, 3, 1, 3, 1},
        {8, 0, 4, 3, 1},  {64, 0, 0, 6, 2}, {-64, 2, 2, 1, 3}, {8, 3, 1, 0, 4},
        {1, 0, 4, 0, 4},  {16, 0, 0, 3, 5}, {1, 0, 0, 0, 8},
    };
    Poly p(f, 4);
    for (const auto& e : entries) p = p + monomial(f, 4, {e.e0, e.e1, e.e2, e.e3}, e.c);
    return p;
}

SchurScan schur_scan(FieldRef f, std::uint64_t max_q) {
    if (!f->is_finite()) throw ValueError("schur_scan requires a finite field");
    projgeom::SurfacePoly F = make_surface(schur_quartic(f));
    auto quadrics = schur_quadrics(f);  // throws when no cube root of unity
    std::set<ProjLine, bool (*)(const ProjLine&, const ProjLine&)> e1set(
        &ProjLine::canonical_less);
    SchurScan scan{};
    for (std::size_t i = 0; i < 4; ++i) {
        auto lines = projgeom::ruling_lines_of_bilinear_quadric(make_surface(quadrics[i]), F, f);
        scan.per_quadric[i] = lines.size();
        e1set.insert(lines.begin(), lines.end());
    }
    scan.e1.assign(e1set.begin(), e1set.end());
    auto on_f = projgeom::enumerate_lines_on_surface(F, f, max_q);
    scan.lines_on_quartic = on_f.size();
    projgeom::SurfacePoly P = make_surface(schur_octic(f));
    for (const auto& l : on_f)
        if (projgeom::line_on_surface(l, P)) scan.e2.push_back(l);
    std::set<ProjLine, bool (*)(const ProjLine&, const ProjLine&)> allset(
        &ProjLine::canonical_less);
    allset.insert(scan.e1.begin(), scan.e1.end());
    allset.insert(scan.e2.begin(), scan.e2.end());
    scan.all.assign(allset.begin(), allset.end());
    return scan;
}

SchurLines schur_lines(FieldRef f, std::uint64_t max_q) {
    SchurScan scan = schur_scan(f, max_q);
    if (scan.e1.empty() || scan.e2.empty())
        throw Error("Schur line search found an empty part over " + f->name());
    return SchurLines{Arrangement(f, 3, scan.e1), Arrangement(f, 3, scan.e2),
                      Arrangement(f, 3, scan.all)};
}

}  // namespace arrlab::families
