#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "arrlab/errors.hpp"

namespace arrlab::exactfield {

enum class FieldKind { rational, finite };

/// Description of a coefficient field: Q, F_p, or F_{p^k} with an explicit
/// monic irreducible modulus (coefficients low-degree-first, length k+1).
/// Instances are interned and immutable; compare by pointer.
struct FieldSpec {
    FieldKind kind = FieldKind::rational;
    std::uint64_t p = 0;
    unsigned k = 0;
    std::vector<std::uint64_t> modulus;

    bool is_rational() const { return kind == FieldKind::rational; }
    bool is_finite() const { return kind == FieldKind::finite; }
    /// Number of elements p^k (finite fields only).
    std::uint64_t q() const;
    std::string name() const;
};

using FieldRef = const FieldSpec*;

/// The (unique, interned) rational field Q.
FieldRef field_rational();

/// F_{p^k}. Validates p prime, 1 <= k <= 4, and the modulus irreducible of
/// degree k when given; with k > 1 and no modulus, picks the
/// lexicographically-least monic irreducible (low-degree-first coefficient
/// order). Throws ValueError on invalid input.
FieldRef field_finite(std::uint64_t p, unsigned k = 1,
                      std::vector<std::uint64_t> modulus = {});

namespace detail {
// Finite-field element payload: coefficient vector over F_p, length k,
// entries in [0, p). Fixed capacity because k <= 4.
struct FiniteElem {
    std::array<std::uint64_t, 4> c{0, 0, 0, 0};
    bool operator==(const FiniteElem&) const = default;
};
}  // namespace detail

/// An exact field element. Immutable value type; all arithmetic is exact.
class Scalar {
  public:
    Scalar() : field_(field_rational()), repr_(mpq_class(0)) {}

    static Scalar zero(FieldRef f);
    static Scalar one(FieldRef f);
    /// The image of the integer v in f.
    static Scalar from_int(FieldRef f, long v);
    static Scalar from_mpq(mpq_class v);
    /// Finite element from coefficients (low-degree-first, length <= k).
    static Scalar from_coeffs(FieldRef f, const std::vector<std::uint64_t>& coeffs);
    /// The i-th element in the canonical enumeration of f: base-p digits for
    /// finite fields, the natural number i for Q.
    static Scalar by_index(FieldRef f, std::uint64_t i);

    FieldRef field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    Scalar pow(std::uint64_t e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Total order used for canonical sorting of output. Rationals compare
    /// numerically, finite elements by canonical index.
    static bool canonical_less(const Scalar& a, const Scalar& b);

    /// Canonical index of a finite element (base-p digit value of coeffs).
    std::uint64_t index() const;

    const mpq_class& rat() const { return std::get<mpq_class>(repr_); }
    /// Coefficient vector (length k) of a finite element.
    std::vector<std::uint64_t> coeffs() const;

    std::string str() const;

  private:
    Scalar(FieldRef f, mpq_class v) : field_(f), repr_(std::move(v)) {}
    Scalar(FieldRef f, detail::FiniteElem v) : field_(f), repr_(v) {}

    FieldRef field_;
    std::variant<mpq_class, detail::FiniteElem> repr_;
};

/// Dense matrix over a single field. Row-major, immutable in spirit (the
/// mutating accessors exist for construction).
class Matrix {
  public:
    Matrix(FieldRef f, std::size_t rows, std::size_t cols);
    static Matrix identity(FieldRef f, std::size_t n);
    static Matrix from_rows(FieldRef f, const std::vector<std::vector<Scalar>>& rows);
    static Matrix vstack(const Matrix& a, const Matrix& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FieldRef field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;

    struct Rref {
        Matrix m;
        std::size_t rank;
        std::vector<std::size_t> pivots;
    };
    /// Reduced row-echelon form with the first-nonzero-in-column pivot rule.
    Rref rref() const;
    std::size_t rank() const;
    /// Basis rows of the right null space, each scaled so its first nonzero
    /// entry is 1, ordered by free column. rank + kernel rows == cols.
    Matrix kernel() const;

    /// Row-major lexicographic order on entries (canonical_less).
    static bool canonical_less(const Matrix& a, const Matrix& b);

  private:
    std::size_t rows_, cols_;
    FieldRef field_;
    std::vector<Scalar> e_;
};

/// Least element of exact multiplicative order m in a finite field.
/// Requires m | q - 1. Throws ValueError otherwise or for Q.
Scalar primitive_root_of_unity(FieldRef f, std::uint64_t m);

bool is_prime(std::uint64_t n);

}  // namespace arrlab::exactfield
