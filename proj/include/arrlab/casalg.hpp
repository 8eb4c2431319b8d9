#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrlab/exactfield.hpp"

namespace arrlab::casalg {

using exactfield::FieldRef;
using exactfield::Scalar;

/// Exponent vector, one entry per ring variable.
using Expv = std::vector<std::uint32_t>;

std::uint32_t expv_total_degree(const Expv& e);
bool expv_divides(const Expv& a, const Expv& b);  // a | b
Expv expv_lcm(const Expv& a, const Expv& b);
Expv expv_add(const Expv& a, const Expv& b);
Expv expv_sub(const Expv& a, const Expv& b);  // requires b | a

/// Monomial orders: grevlex, lex, and the elimination (block) order that
/// compares the first block_vars variables grevlex-first. In every kind,
/// x0 > x1 > ... > xn.
struct MonomialOrder {
    enum class Kind { grevlex, lex, block };
    Kind kind = Kind::grevlex;
    std::uint32_t block_vars = 0;

    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder block(std::uint32_t t) { return {Kind::block, t}; }

    /// strict a < b
    bool less(const Expv& a, const Expv& b) const;
    bool operator==(const MonomialOrder&) const = default;
};

struct Term {
    Expv exp;
    Scalar coef;
    bool operator==(const Term& o) const { return exp == o.exp && coef == o.coef; }
};

/// Sparse multivariate polynomial with exact coefficients. Terms are kept
/// sorted descending under grevlex (the canonical representation); no zero
/// coefficients are stored.
class Poly {
  public:
    Poly(FieldRef f, std::uint32_t nvars) : field_(f), nvars_(nvars) {}
    static Poly constant(FieldRef f, std::uint32_t nvars, const Scalar& c);
    static Poly variable(FieldRef f, std::uint32_t nvars, std::uint32_t v,
                         std::uint32_t exp = 1);
    /// sum of coeffs[i] * x_i; coeffs has nvars entries
    static Poly linear_form(FieldRef f, const std::vector<Scalar>& coeffs);
    static Poly from_terms(FieldRef f, std::uint32_t nvars,
                           std::vector<Term> terms);

    FieldRef field() const { return field_; }
    std::uint32_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// max total degree over terms (0 for the zero polynomial)
    std::uint32_t total_degree() const;
    bool is_homogeneous() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Scalar& c) const;
    bool operator==(const Poly& o) const;

    Scalar eval(const std::vector<Scalar>& point) const;

    /// human-readable text, variables printed as x0..xn
    std::string str() const;

    /// index of the leading term under o (linear scan)
    std::size_t leading_index(const MonomialOrder& o) const;

  private:
    friend class GroebnerEngine;
    FieldRef field_;
    std::uint32_t nvars_;
    std::vector<Term> terms_;
};

/// Parse the text format produced by Poly::str. Accepts x<k> names and,
/// additionally, the aliases x,y,z,t,w for variables 0..4. Rational
/// coefficients may be written a/b; finite-field coefficients as integers.
Poly parse_poly(const std::string& text, FieldRef f, std::uint32_t nvars);

/// Ideal in S = field[x0..x_{nvars-1}], a generator list plus a cache of
/// reduced Groebner bases keyed by order.
class Ideal {
  public:
    Ideal(FieldRef f, std::uint32_t nvars, std::vector<Poly> gens);
    static Ideal zero(FieldRef f, std::uint32_t nvars);
    static Ideal unit(FieldRef f, std::uint32_t nvars);

    FieldRef field() const { return field_; }
    std::uint32_t nvars() const { return nvars_; }
    const std::vector<Poly>& gens() const { return gens_; }
    bool is_homogeneous() const;

    /// Unique reduced Groebner basis for the order (Buchberger with the
    /// coprimality and chain criteria; cached per order).
    const std::vector<Poly>& groebner_basis(const MonomialOrder& o);

  private:
    FieldRef field_;
    std::uint32_t nvars_;
    std::vector<Poly> gens_;
    std::vector<std::pair<MonomialOrder, std::vector<Poly>>> gb_cache_;
};

/// Unique remainder of p on division by the basis gb (which must be a
/// Groebner basis under o). Zero iff p lies in the ideal.
Poly normal_form(const Poly& p, const std::vector<Poly>& gb, const MonomialOrder& o);

/// Membership via normal form against the cached grevlex basis.
bool ideal_member(const Poly& p, Ideal& i);

/// Intersection via the single auxiliary variable t: eliminate t from
/// t*I + (1-t)*J with a block order.
Ideal ideal_intersection(Ideal& i, Ideal& j);

/// Reduced grevlex bases coincide.
bool ideal_equal(Ideal& i, Ideal& j);

/// dim_K (S/i)_d for d = 0..upto. Requires i homogeneous.
std::vector<std::uint64_t> hilbert_function(Ideal& i, std::uint32_t upto);

struct DimensionDegree {
    std::uint32_t krull_dim;  // Krull dimension of S/i
    std::uint64_t degree;     // multiplicity (h(1) of the Hilbert numerator)
};
/// From the Hilbert series of the initial ideal. Requires i homogeneous.
DimensionDegree dimension_degree(Ideal& i);

/// Minimal homogeneous generators of i, extracted from the reduced grevlex
/// basis by a degree-ascending greedy trim.
std::vector<Poly> minimal_generators(Ideal& i);

/// Koszul regularity sum(deg g) - c + 1 when the minimal generators form a
/// regular sequence (certified by codim == generator count); nullopt
/// otherwise. Requires i homogeneous.
std::optional<std::uint32_t> ci_regularity(Ideal& i);

}  // namespace arrlab::casalg

namespace arrlab::projgeom {
class ProjLine;
class Arrangement;
}  // namespace arrlab::projgeom

namespace arrlab::casalg {

struct AlgebraBudget {
    std::size_t max_lines_fp = 16;  // arrangement_ideal cap over finite fields
    std::size_t max_lines_q = 8;    // and over Q
};

/// The n-1 independent linear forms cutting out the line (kernel rows of its
/// span matrix).
Ideal line_ideal(const projgeom::ProjLine& l);

/// Iterated pairwise intersection of the line ideals. Throws BudgetError
/// beyond the configured line counts.
Ideal arrangement_ideal(const projgeom::Arrangement& a, const AlgebraBudget& budget = {});

/// Multiplicity of S/(J + p_i) with J the intersection of the other line
/// ideals: the number of intersections of line i with the rest, counted with
/// multiplicity. Zero when line i meets no other line.
std::uint64_t link_degree(const projgeom::Arrangement& a, std::size_t i,
                          const AlgebraBudget& budget = {});

}  // namespace arrlab::casalg
