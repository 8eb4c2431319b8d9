#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrlab/casalg.hpp"
#include "arrlab/exactfield.hpp"

namespace arrlab::projgeom {

using exactfield::FieldRef;
using exactfield::Matrix;
using exactfield::Scalar;

/// Point of P^n, coordinates canonicalized so the first nonzero entry is 1.
class ProjPoint {
  public:
    explicit ProjPoint(std::vector<Scalar> coords);
    std::uint32_t ambient_dim() const { return static_cast<std::uint32_t>(coords_.size() - 1); }
    const std::vector<Scalar>& coords() const { return coords_; }
    FieldRef field() const { return coords_[0].field(); }
    bool operator==(const ProjPoint& o) const { return coords_ == o.coords_; }
    static bool canonical_less(const ProjPoint& a, const ProjPoint& b);
    std::string str() const;

  private:
    std::vector<Scalar> coords_;
};

/// Line of P^n as the row span of a rank-2 matrix in RREF; the RREF form
/// makes representation equality the same as equality of lines.
class ProjLine {
  public:
    /// Canonicalizes (RREF); throws ValueError unless the rank is exactly 2.
    static ProjLine from_span(const Matrix& span);
    static ProjLine through(const ProjPoint& p, const ProjPoint& q);

    const Matrix& span() const { return span_; }
    std::uint32_t ambient_dim() const { return static_cast<std::uint32_t>(span_.cols() - 1); }
    FieldRef field() const { return span_.field(); }
    bool contains(const ProjPoint& p) const;
    /// the point lambda*row0 + mu*row1
    ProjPoint point_at(const Scalar& lambda, const Scalar& mu) const;

    bool operator==(const ProjLine& o) const { return span_ == o.span_; }
    bool operator!=(const ProjLine& o) const { return !(*this == o); }
    static bool canonical_less(const ProjLine& a, const ProjLine& b);

  private:
    explicit ProjLine(Matrix span) : span_(std::move(span)) {}
    Matrix span_;
};

/// The unique intersection point of two distinct lines, or nullopt if skew.
/// Throws ValueError when the lines are equal or from different ambients.
std::optional<ProjPoint> line_meet(const ProjLine& l1, const ProjLine& l2);

/// A finite list of pairwise-distinct lines in P^n over one field.
class Arrangement {
  public:
    Arrangement(FieldRef f, std::uint32_t n, std::vector<ProjLine> lines,
                std::vector<std::string> labels = {});

    FieldRef field() const { return field_; }
    std::uint32_t ambient_dim() const { return n_; }
    std::size_t size() const { return lines_.size(); }
    const std::vector<ProjLine>& lines() const { return lines_; }
    const ProjLine& line(std::size_t i) const { return lines_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

  private:
    FieldRef field_;
    std::uint32_t n_;
    std::vector<ProjLine> lines_;
    std::vector<std::string> labels_;  // empty, or one per line
};

/// A point where at least two lines of an arrangement meet.
struct SingularPoint {
    ProjPoint point;
    std::vector<std::size_t> incident;  // sorted line indices, length >= 2
    bool planar;                        // union of incident spans has rank <= 3
};

/// All points lying on >= 2 lines, sorted canonically, with full incidence
/// lists and planarity flags.
std::vector<SingularPoint> singular_points(const Arrangement& a);

struct PlanarityReport {
    bool flag;
    std::optional<SingularPoint> witness;  // first failure when flag is false
};
/// True iff every point on >= 3 lines has all its lines in a common plane.
PlanarityReport has_only_planar_singularities(const Arrangement& a);

/// Homogeneous hypersurface in P^n.
struct SurfacePoly {
    std::uint32_t n;       // ambient dimension; poly has n+1 variables
    casalg::Poly poly;     // homogeneous, nonzero
};
SurfacePoly make_surface(casalg::Poly p);

/// Exact test: the restriction of s to the line parametrization
/// u*row0 + v*row1 is the zero binary form (by coefficient expansion).
bool line_on_surface(const ProjLine& l, const SurfacePoly& s);

/// All lines of P^3(F_q) on s, canonically ordered, by exhaustive iteration
/// over canonical RREF spans. Throws BudgetError when q > max_q.
std::vector<ProjLine> enumerate_lines_on_surface(const SurfacePoly& s, FieldRef f,
                                                 std::uint64_t max_q = 64);

/// For q = x0*A(x2,x3) - x1*B(x2,x3) with A, B independent linear forms:
/// the lines of both rulings of q (parametrized by P^1(F_q)) that lie on s.
/// Throws ValueError when q is not of the bilinear shape.
std::vector<ProjLine> ruling_lines_of_bilinear_quadric(const SurfacePoly& q,
                                                       const SurfacePoly& s, FieldRef f);

}  // namespace arrlab::projgeom
