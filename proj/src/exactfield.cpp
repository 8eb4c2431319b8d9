#include "arrlab/exactfield.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace arrlab::exactfield {

namespace {

// ---- arithmetic mod p on uint64 ---------------------------------------

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
std::uint64_t invm(std::uint64_t a, std::uint64_t p) { return powm(a, p - 2, p); }

// ---- dense polynomials over F_p, low-degree-first ----------------------

using PolyP = std::vector<std::uint64_t>;

void ptrim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP pmul(const PolyP& a, const PolyP& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
    ptrim(r);
    return r;
}

// remainder of a modulo monic m
PolyP pmod(PolyP a, const PolyP& m, std::uint64_t p) {
    ptrim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (std::size_t j = 0; j < m.size(); ++j)
                a[shift + j] = subm(a[shift + j], mulm(lead, m[j], p), p);
        a.pop_back();
        ptrim(a);
        if (a.size() <= dm) break;
    }
    return a;
}

PolyP pgcd(PolyP a, PolyP b, std::uint64_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // make b monic for pmod
        PolyP bm = b;
        std::uint64_t li = invm(bm.back(), p);
        for (auto& c : bm) c = mulm(c, li, p);
        PolyP r = pmod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint64_t li = invm(a.back(), p);
        for (auto& c : a) c = mulm(c, li, p);
    }
    return a;
}

PolyP ppowmod(PolyP base, std::uint64_t e, const PolyP& m, std::uint64_t p) {
    PolyP r{1};
    base = pmod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = pmod(pmul(r, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

// x^(p^e) mod m, by iterating the p-power Frobenius
PolyP frobenius_power(unsigned e, const PolyP& m, std::uint64_t p) {
    PolyP x{0, 1};
    PolyP r = pmod(x, m, p);
    for (unsigned i = 0; i < e; ++i) r = ppowmod(std::move(r), p, m, p);
    return r;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin's test: f (monic, degree k) irreducible over F_p iff
// x^(p^k) == x mod f and gcd(x^(p^(k/l)) - x, f) = 1 for every prime l | k.
bool is_irreducible(const PolyP& f, std::uint64_t p) {
    const unsigned k = static_cast<unsigned>(f.size() - 1);
    if (k == 0) return false;
    if (k == 1) return true;
    PolyP xq = frobenius_power(k, f, p);
    // xq - x must be 0 mod f
    PolyP diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = subm(diff[1], 1, p);
    ptrim(diff);
    if (!diff.empty()) return false;
    for (std::uint64_t l : prime_divisors(k)) {
        PolyP xe = frobenius_power(static_cast<unsigned>(k / l), f, p);
        PolyP d = xe;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = subm(d[1], 1, p);
        ptrim(d);
        PolyP g = pgcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

// Lexicographically-least monic irreducible of degree k over F_p,
// coefficient lists ordered low-degree-first.
PolyP least_irreducible(std::uint64_t p, unsigned k) {
    std::vector<std::uint64_t> c(k, 0);
    for (;;) {
        PolyP f(c.begin(), c.end());
        f.push_back(1);
        if (is_irreducible(f, p)) return f;
        // lexicographic successor of (c0, ..., c_{k-1}), c0 most significant
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) throw ValueError("no irreducible polynomial found");  // unreachable
        ++c[i];
    }
}

// ---- field interning ----------------------------------------------------

std::mutex g_registry_mutex;
std::vector<std::unique_ptr<FieldSpec>>& registry() {
    static std::vector<std::unique_ptr<FieldSpec>> r;
    return r;
}

FieldRef intern(FieldSpec spec) {
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    for (const auto& f : registry())
        if (f->kind == spec.kind && f->p == spec.p && f->k == spec.k &&
            f->modulus == spec.modulus)
            return f.get();
    registry().push_back(std::make_unique<FieldSpec>(std::move(spec)));
    return registry().back().get();
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t FieldSpec::q() const {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r *= p;
    return r;
}

std::string FieldSpec::name() const {
    if (is_rational()) return "Q";
    if (k == 1) return "F_" + std::to_string(p);
    return "F_" + std::to_string(p) + "^" + std::to_string(k);
}

FieldRef field_rational() {
    static FieldRef f = intern(FieldSpec{FieldKind::rational, 0, 0, {}});
    return f;
}

FieldRef field_finite(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus) {
    if (!is_prime(p)) throw ValueError("field characteristic must be prime, got " + std::to_string(p));
    if (k < 1) throw ValueError("extension degree must be >= 1");
    if (k > 4) throw ValueError("extension degree > 4 not supported");
    // guard q overflow
    long double qd = 1;
    for (unsigned i = 0; i < k; ++i) qd *= static_cast<long double>(p);
    if (qd > 4e18L) throw ValueError("field too large");
    if (k == 1) {
        if (!modulus.empty()) throw ValueError("modulus is only meaningful for k > 1");
        return intern(FieldSpec{FieldKind::finite, p, 1, {}});
    }
    if (modulus.empty()) {
        modulus = least_irreducible(p, k);
    } else {
        for (auto& c : modulus) c %= p;
        ptrim(modulus);
        if (modulus.size() != k + 1)
            throw ValueError("modulus must have degree exactly k");
        if (modulus.back() != 1) {
            std::uint64_t li = invm(modulus.back(), p);
            for (auto& c : modulus) c = mulm(c, li, p);
        }
        if (!is_irreducible(modulus, p)) throw ValueError("modulus is reducible over F_p");
    }
    return intern(FieldSpec{FieldKind::finite, p, k, std::move(modulus)});
}

// ---- Scalar -------------------------------------------------------------

namespace {
void check_same_field(FieldRef a, FieldRef b) {
    if (a != b) throw ValueError("scalars from different fields");
}
}  // namespace

Scalar Scalar::zero(FieldRef f) {
    if (f->is_rational()) return Scalar(f, mpq_class(0));
    return Scalar(f, detail::FiniteElem{});
}

Scalar Scalar::one(FieldRef f) { return from_int(f, 1); }

Scalar Scalar::from_int(FieldRef f, long v) {
    if (f->is_rational()) return Scalar(f, mpq_class(v));
    detail::FiniteElem e;
    long m = static_cast<long>(v % static_cast<long>(f->p));
    if (m < 0) m += static_cast<long>(f->p);
    e.c[0] = static_cast<std::uint64_t>(m);
    return Scalar(f, e);
}

Scalar Scalar::from_mpq(mpq_class v) {
    v.canonicalize();
    return Scalar(field_rational(), std::move(v));
}

Scalar Scalar::from_coeffs(FieldRef f, const std::vector<std::uint64_t>& coeffs) {
    if (!f->is_finite()) throw ValueError("coefficient construction requires a finite field");
    if (coeffs.size() > f->k) throw ValueError("too many coefficients for extension degree");
    detail::FiniteElem e;
    for (std::size_t i = 0; i < coeffs.size(); ++i) e.c[i] = coeffs[i] % f->p;
    return Scalar(f, e);
}

Scalar Scalar::by_index(FieldRef f, std::uint64_t i) {
    if (f->is_rational()) return Scalar(f, mpq_class(static_cast<unsigned long>(i)));
    if (i >= f->q()) throw ValueError("element index out of range");
    detail::FiniteElem e;
    for (unsigned d = 0; d < f->k; ++d) {
        e.c[d] = i % f->p;
        i /= f->p;
    }
    return Scalar(f, e);
}

bool Scalar::is_zero() const {
    if (field_->is_rational()) return rat() == 0;
    const auto& e = std::get<detail::FiniteElem>(repr_);
    for (unsigned i = 0; i < field_->k; ++i)
        if (e.c[i]) return false;
    return true;
}

bool Scalar::is_one() const {
    if (field_->is_rational()) return rat() == 1;
    const auto& e = std::get<detail::FiniteElem>(repr_);
    if (e.c[0] != 1) return false;
    for (unsigned i = 1; i < field_->k; ++i)
        if (e.c[i]) return false;
    return true;
}

Scalar Scalar::operator-() const {
    if (field_->is_rational()) return Scalar(field_, mpq_class(-rat()));
    const auto& a = std::get<detail::FiniteElem>(repr_);
    detail::FiniteElem r;
    for (unsigned i = 0; i < field_->k; ++i) r.c[i] = a.c[i] ? field_->p - a.c[i] : 0;
    return Scalar(field_, r);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(field_, o.field_);
    if (field_->is_rational()) return Scalar(field_, mpq_class(rat() + o.rat()));
    const auto& a = std::get<detail::FiniteElem>(repr_);
    const auto& b = std::get<detail::FiniteElem>(o.repr_);
    detail::FiniteElem r;
    for (unsigned i = 0; i < field_->k; ++i) r.c[i] = addm(a.c[i], b.c[i], field_->p);
    return Scalar(field_, r);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(field_, o.field_);
    if (field_->is_rational()) return Scalar(field_, mpq_class(rat() - o.rat()));
    const auto& a = std::get<detail::FiniteElem>(repr_);
    const auto& b = std::get<detail::FiniteElem>(o.repr_);
    detail::FiniteElem r;
    for (unsigned i = 0; i < field_->k; ++i) r.c[i] = subm(a.c[i], b.c[i], field_->p);
    return Scalar(field_, r);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(field_, o.field_);
    if (field_->is_rational()) return Scalar(field_, mpq_class(rat() * o.rat()));
    const std::uint64_t p = field_->p;
    const unsigned k = field_->k;
    const auto& a = std::get<detail::FiniteElem>(repr_);
    const auto& b = std::get<detail::FiniteElem>(o.repr_);
    if (k == 1) {
        detail::FiniteElem r;
        r.c[0] = mulm(a.c[0], b.c[0], p);
        return Scalar(field_, r);
    }
    std::array<std::uint64_t, 7> conv{};
    for (unsigned i = 0; i < k; ++i) {
        if (!a.c[i]) continue;
        for (unsigned j = 0; j < k; ++j)
            conv[i + j] = addm(conv[i + j], mulm(a.c[i], b.c[j], p), p);
    }
    // reduce by the monic modulus: x^k == -sum modulus[j] x^j
    for (int d = 2 * static_cast<int>(k) - 2; d >= static_cast<int>(k); --d) {
        std::uint64_t c = conv[d];
        if (!c) continue;
        conv[d] = 0;
        for (unsigned j = 0; j < k; ++j)
            conv[d - k + j] = subm(conv[d - k + j], mulm(c, field_->modulus[j], p), p);
    }
    detail::FiniteElem r;
    for (unsigned i = 0; i < k; ++i) r.c[i] = conv[i];
    return Scalar(field_, r);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ValueError("division by zero");
    if (field_->is_rational()) return Scalar(field_, mpq_class(1 / rat()));
    const std::uint64_t p = field_->p;
    const unsigned k = field_->k;
    const auto& a = std::get<detail::FiniteElem>(repr_);
    if (k == 1) {
        detail::FiniteElem r;
        r.c[0] = invm(a.c[0], p);
        return Scalar(field_, r);
    }
    // extended Euclid in F_p[x]: s*a + t*modulus = gcd = 1
    PolyP r0(field_->modulus.begin(), field_->modulus.end());
    PolyP r1(a.c.begin(), a.c.begin() + k);
    ptrim(r1);
    PolyP s0{}, s1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        PolyP q;
        PolyP rem = r0;
        std::uint64_t linv = invm(r1.back(), p);
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::uint64_t coef = mulm(rem.back(), linv, p);
            std::size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = addm(q[shift], coef, p);
            for (std::size_t j = 0; j < r1.size(); ++j)
                rem[shift + j] = subm(rem[shift + j], mulm(coef, r1[j], p), p);
            ptrim(rem);
        }
        PolyP s2 = s0;
        PolyP qs = pmul(q, s1, p);
        if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
        for (std::size_t j = 0; j < qs.size(); ++j) s2[j] = subm(s2[j], qs[j], p);
        ptrim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a unit: modulus irreducible), s0 its Bezout factor for a
    std::uint64_t gi = invm(r0[0], p);
    detail::FiniteElem out;
    for (std::size_t i = 0; i < s0.size() && i < k; ++i) out.c[i] = mulm(s0[i], gi, p);
    return Scalar(field_, out);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar r = Scalar::one(field_);
    Scalar b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    if (field_->is_rational()) return rat() == o.rat();
    return std::get<detail::FiniteElem>(repr_) == std::get<detail::FiniteElem>(o.repr_);
}

bool Scalar::canonical_less(const Scalar& a, const Scalar& b) {
    check_same_field(a.field_, b.field_);
    if (a.field_->is_rational()) return a.rat() < b.rat();
    return a.index() < b.index();
}

std::uint64_t Scalar::index() const {
    if (!field_->is_finite()) throw ValueError("index is defined for finite fields only");
    const auto& e = std::get<detail::FiniteElem>(repr_);
    std::uint64_t r = 0;
    for (unsigned i = field_->k; i-- > 0;) r = r * field_->p + e.c[i];
    return r;
}

std::vector<std::uint64_t> Scalar::coeffs() const {
    if (!field_->is_finite()) throw ValueError("coeffs is defined for finite fields only");
    const auto& e = std::get<detail::FiniteElem>(repr_);
    return std::vector<std::uint64_t>(e.c.begin(), e.c.begin() + field_->k);
}

std::string Scalar::str() const {
    if (field_->is_rational()) return rat().get_str();
    if (field_->k == 1) return std::to_string(std::get<detail::FiniteElem>(repr_).c[0]);
    std::string s = "[";
    const auto& e = std::get<detail::FiniteElem>(repr_);
    for (unsigned i = 0; i < field_->k; ++i) {
        if (i) s += ",";
        s += std::to_string(e.c[i]);
    }
    return s + "]";
}

// ---- Matrix ---------------------------------------------------------------

Matrix::Matrix(FieldRef f, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(f), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(FieldRef f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(FieldRef f, const std::vector<std::vector<Scalar>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ValueError("ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_ || a.field_ != b.field_) throw ValueError("vstack shape/field mismatch");
    Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c) m.at(a.rows_ + r, c) = b.at(r, c);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_) throw ValueError("matmul shape/field mismatch");
    Matrix m(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                m.at(r, c) += a * o.at(k, c);
        }
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
}

Matrix::Rref Matrix::rref() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pr = r;
        while (pr < rows_ && m.at(pr, c).is_zero()) ++pr;
        if (pr == rows_) continue;
        if (pr != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pr, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return Rref{std::move(m), pivots.size(), std::move(pivots)};
}

std::size_t Matrix::rank() const { return rref().rank; }

Matrix Matrix::kernel() const {
    Rref rr = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    Matrix basis(field_, cols_ - rr.rank, cols_);
    std::size_t bi = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        basis.at(bi, f) = Scalar::one(field_);
        for (std::size_t r = 0; r < rr.rank; ++r)
            basis.at(bi, rr.pivots[r]) = -rr.m.at(r, f);
        // canonical scaling: first nonzero entry = 1
        for (std::size_t c = 0; c < cols_; ++c) {
            if (basis.at(bi, c).is_zero()) continue;
            Scalar inv = basis.at(bi, c).inverse();
            for (std::size_t j = c; j < cols_; ++j)
                basis.at(bi, j) = basis.at(bi, j) * inv;
            break;
        }
        ++bi;
    }
    return basis;
}

bool Matrix::canonical_less(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        if (a.e_[i] == b.e_[i]) continue;
        return Scalar::canonical_less(a.e_[i], b.e_[i]);
    }
    return false;
}

Scalar primitive_root_of_unity(FieldRef f, std::uint64_t m) {
    if (!f->is_finite()) throw ValueError("roots of unity require a finite field");
    if (m == 0) throw ValueError("order must be positive");
    const std::uint64_t group = f->q() - 1;
    if (group % m != 0)
        throw ValueError("no element of order " + std::to_string(m) + " in " + f->name());
    auto divisors = prime_divisors(m);
    for (std::uint64_t i = 1; i < f->q(); ++i) {
        Scalar z = Scalar::by_index(f, i);
        if (!z.pow(m).is_one()) continue;
        bool primitive = true;
        for (std::uint64_t l : divisors)
            if (z.pow(m / l).is_one()) {
                primitive = false;
                break;
            }
        if (primitive) return z;
    }
    throw ValueError("no primitive root found");  // unreachable for valid input
}

}  // namespace arrlab::exactfield
