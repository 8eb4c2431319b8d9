#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "arrlab/casalg.hpp"
#include "arrlab/graphs.hpp"
#include "arrlab/projgeom.hpp"

namespace arrlab::families {

using exactfield::FieldRef;
using exactfield::Scalar;
using projgeom::Arrangement;
using projgeom::ProjLine;

/// m lines from one ruling and n from the other of the quadric x0x3 = x1x2;
/// parameters are the first m (resp. n) canonical field elements. The dual
/// graph is K_{m,n}.
Arrangement two_rulings(std::size_t m, std::size_t n, FieldRef f);

/// Plane containing the ruling pair with common parameter a:
/// a^2 x0 - a x1 - a x2 + x3.
casalg::Poly two_rulings_plane_form(const Scalar& a);

casalg::Poly quadric_x0x3_x1x2(FieldRef f);

/// The 3d^2-vertex incidence graph of the lines on the degree-d Fermat
/// surface, built from the index rules of the standard parametrization
/// (labels l<a>(i,j), indices 1..d).
graphs::Graph fermat_combinatorial(std::uint32_t d);

/// The 3d^2 lines on x0^d + x1^d + x2^d + x3^d over a finite field with a
/// primitive 2d-th root of unity (requires 2d | q-1). Line order and labels
/// match fermat_combinatorial.
Arrangement fermat_geometric(std::uint32_t d, FieldRef f);

/// x0^d + x1^d + x2^d + x3^d in 4 variables.
casalg::Poly fermat_polynomial(std::uint32_t d, FieldRef f);

/// Linear form of the plane spanned by line family (a, i); plane indices are
/// 1-based in [1, 3d], index -> (a, i) = ((idx-1)/d + 1, (idx-1)%d + 1).
casalg::Poly fermat_plane_form(std::uint32_t d, std::uint32_t plane_index, FieldRef f);

/// The hd lines of the chosen h plane families of the Fermat arrangement.
Arrangement fermat_sub(std::uint32_t d, const std::vector<std::uint32_t>& planes, FieldRef f);

/// The 27-lines incidence graph with vertices E1..E6, L12..L56, C1..C6.
graphs::Graph twenty_seven_graph();
/// Induced on {E1..E3, L12, L13, L23, C1..C3}: 9 vertices, 4-regular.
graphs::Graph steiner_graph();
/// Induced on {E1..E6, C1..C6}: K_{6,6} minus a perfect matching.
graphs::Graph double_six_graph();

/// s lines joining the apex [0,...,0,1] to s points of a moment curve in the
/// hyperplane x_n = 0. The dual graph is K_s.
Arrangement cone_over_points(std::size_t s, FieldRef f, std::uint32_t n);

/// The eight lines in P^4 over Q cut out by the primes
/// (t, y-z, x), (t, y+z, x), (z-t, y, x), (z+t, y, x),
/// (w, z-t, x-y), (w, z+t, x+y), (w, y+z, x+t), (w, y-z, x-t).
Arrangement example_eight_lines();

/// The 8-line complete intersection of (a1 b1, a2 b2, a3 b3) in P^4 with
/// a = (x0, x1, x2), b = (x3, x4, x0+...+x4); line sigma is cut out by
/// {a_i : i in sigma} + {b_j : j not in sigma}. Dual graph: the 3-cube.
Arrangement cube_ci(FieldRef f);
std::array<casalg::Poly, 3> cube_ci_generators(FieldRef f);

// Schur quartic x0^4 - x0 x1^3 - x2^4 + x2 x3^3 and its associated surfaces.
casalg::Poly schur_quartic(FieldRef f);
/// The four ruling quadrics (requires a primitive cube root of unity in f).
std::array<casalg::Poly, 4> schur_quadrics(FieldRef f);
/// The octic surface cutting the other 32 lines out of the quartic.
casalg::Poly schur_octic(FieldRef f);

/// One field's worth of the Schur-quartic line search.
struct SchurScan {
    std::array<std::size_t, 4> per_quadric;  // lines of the quartic on each quadric
    std::vector<ProjLine> e1;                // union of the four ruling scans
    std::vector<ProjLine> e2;                // lines of the quartic on the octic
    std::vector<ProjLine> all;               // e1 union e2
    std::size_t lines_on_quartic;            // full enumeration count
};
SchurScan schur_scan(FieldRef f, std::uint64_t max_q = 64);

struct SchurLines {
    Arrangement e1, e2, all;
};
/// Wraps schur_scan into arrangements; throws Error when a part comes out
/// empty over this field (a bad prime).
SchurLines schur_lines(FieldRef f, std::uint64_t max_q = 64);

}  // namespace arrlab::families
