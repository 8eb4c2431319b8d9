#include "arrlab/projgeom.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace arrlab::projgeom {

using casalg::Poly;

// ---- ProjPoint --------------------------------------------------------------

ProjPoint::ProjPoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw ValueError("projective point needs >= 2 coordinates");
    std::size_t first = coords_.size();
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) {
            first = i;
            break;
        }
    if (first == coords_.size()) throw ValueError("projective point cannot be zero");
    Scalar inv = coords_[first].inverse();
    for (std::size_t i = first; i < coords_.size(); ++i) coords_[i] = coords_[i] * inv;
}

bool ProjPoint::canonical_less(const ProjPoint& a, const ProjPoint& b) {
    if (a.coords_.size() != b.coords_.size()) return a.coords_.size() < b.coords_.size();
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        if (a.coords_[i] == b.coords_[i]) continue;
        return Scalar::canonical_less(a.coords_[i], b.coords_[i]);
    }
    return false;
}

std::string ProjPoint::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ",";
        s += coords_[i].str();
    }
    return s + "]";
}

// ---- ProjLine ----------------------------------------------------------------

ProjLine ProjLine::from_span(const Matrix& span) {
    if (span.rows() != 2) throw ValueError("line span must have 2 rows");
    auto rr = span.rref();
    if (rr.rank != 2) throw ValueError("line span must have rank 2");
    return ProjLine(std::move(rr.m));
}

ProjLine ProjLine::through(const ProjPoint& p, const ProjPoint& q) {
    if (p.coords().size() != q.coords().size()) throw ValueError("ambient mismatch");
    Matrix m = Matrix::from_rows(p.field(), {p.coords(), q.coords()});
    auto rr = m.rref();
    if (rr.rank != 2) throw ValueError("points coincide; no unique line");
    return ProjLine(std::move(rr.m));
}

bool ProjLine::contains(const ProjPoint& p) const {
    Matrix row = Matrix::from_rows(field(), {p.coords()});
    return Matrix::vstack(span_, row).rank() == 2;
}

ProjPoint ProjLine::point_at(const Scalar& lambda, const Scalar& mu) const {
    std::vector<Scalar> c;
    c.reserve(span_.cols());
    for (std::size_t j = 0; j < span_.cols(); ++j)
        c.push_back(lambda * span_.at(0, j) + mu * span_.at(1, j));
    return ProjPoint(std::move(c));
}

bool ProjLine::canonical_less(const ProjLine& a, const ProjLine& b) {
    return Matrix::canonical_less(a.span_, b.span_);
}

std::optional<ProjPoint> line_meet(const ProjLine& l1, const ProjLine& l2) {
    if (l1.ambient_dim() != l2.ambient_dim() || l1.field() != l2.field())
        throw ValueError("lines from different ambient spaces");
    if (l1 == l2) throw ValueError("line_meet requires distinct lines");
    Matrix stack = Matrix::vstack(l1.span(), l2.span());
    // rank 3 <=> unique meeting point, rank 4 <=> skew
    Matrix left_kernel = stack.transpose().kernel();
    if (left_kernel.rows() == 0) return std::nullopt;
    // x0*r0 + x1*r1 lies on both lines
    const Scalar& x0 = left_kernel.at(0, 0);
    const Scalar& x1 = left_kernel.at(0, 1);
    std::vector<Scalar> c;
    c.reserve(stack.cols());
    for (std::size_t j = 0; j < stack.cols(); ++j)
        c.push_back(x0 * l1.span().at(0, j) + x1 * l1.span().at(1, j));
    return ProjPoint(std::move(c));
}

// ---- Arrangement ----------------------------------------------------------------

Arrangement::Arrangement(FieldRef f, std::uint32_t n, std::vector<ProjLine> lines,
                         std::vector<std::string> labels)
    : field_(f), n_(n), lines_(std::move(lines)), labels_(std::move(labels)) {
    if (n_ < 2) throw ValueError("ambient projective dimension must be >= 2");
    if (lines_.empty()) throw ValueError("arrangement must contain at least one line");
    if (!labels_.empty() && labels_.size() != lines_.size())
        throw ValueError("label count must match line count");
    for (const auto& l : lines_) {
        if (l.field() != f) throw ValueError("line field mismatch");
        if (l.ambient_dim() != n_) throw ValueError("line ambient dimension mismatch");
    }
    for (std::size_t i = 0; i < lines_.size(); ++i)
        for (std::size_t j = i + 1; j < lines_.size(); ++j)
            if (lines_[i] == lines_[j])
                throw ValueError("arrangement lines must be pairwise distinct (" +
                                 std::to_string(i) + " = " + std::to_string(j) + ")");
}

std::vector<SingularPoint> singular_points(const Arrangement& a) {
    std::map<ProjPoint, std::set<std::size_t>, bool (*)(const ProjPoint&, const ProjPoint&)>
        groups(&ProjPoint::canonical_less);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            auto p = line_meet(a.line(i), a.line(j));
            if (!p) continue;
            auto& s = groups[*p];
            s.insert(i);
            s.insert(j);
        }
    std::vector<SingularPoint> out;
    out.reserve(groups.size());
    for (const auto& [pt, inc] : groups) {
        Matrix stack(a.field(), 0, a.ambient_dim() + 1);
        bool first = true;
        for (std::size_t i : inc) {
            stack = first ? a.line(i).span() : Matrix::vstack(stack, a.line(i).span());
            first = false;
        }
        bool planar = stack.rank() <= 3;
        out.push_back(SingularPoint{pt, std::vector<std::size_t>(inc.begin(), inc.end()), planar});
    }
    return out;
}

PlanarityReport has_only_planar_singularities(const Arrangement& a) {
    for (const auto& sp : singular_points(a))
        if (sp.incident.size() >= 3 && !sp.planar) return {false, sp};
    return {true, std::nullopt};
}

// ---- surfaces -------------------------------------------------------------------

SurfacePoly make_surface(casalg::Poly p) {
    if (p.is_zero()) throw ValueError("surface polynomial must be nonzero");
    if (!p.is_homogeneous()) throw ValueError("surface polynomial must be homogeneous");
    if (p.nvars() < 3) throw ValueError("surface needs ambient dimension >= 2");
    return SurfacePoly{p.nvars() - 1, std::move(p)};
}

namespace {

// coefficients of s restricted to u*row0 + v*row1, as a binary form in (u, v);
// acc[k] is the coefficient of u^k v^(deg-k)
void restrict_to_span(const SurfacePoly& s, const Matrix& span, std::vector<Scalar>& acc) {
    FieldRef f = span.field();
    const std::uint32_t deg = s.poly.total_degree();
    acc.assign(deg + 1, Scalar::zero(f));
    std::vector<Scalar> prod, next;
    for (const auto& term : s.poly.terms()) {
        prod.assign(1, term.coef);
        for (std::uint32_t v = 0; v < s.poly.nvars(); ++v) {
            for (std::uint32_t rep = 0; rep < term.exp[v]; ++rep) {
                const Scalar& a = span.at(0, v);
                const Scalar& b = span.at(1, v);
                next.assign(prod.size() + 1, Scalar::zero(f));
                for (std::size_t k = 0; k < prod.size(); ++k) {
                    if (prod[k].is_zero()) continue;
                    next[k + 1] += prod[k] * a;
                    next[k] += prod[k] * b;
                }
                prod.swap(next);
            }
        }
        for (std::size_t k = 0; k < prod.size(); ++k) acc[k] += prod[k];
    }
}

Scalar eval_at_row(const SurfacePoly& s, const Matrix& span, std::size_t row) {
    std::vector<Scalar> pt;
    pt.reserve(span.cols());
    for (std::size_t j = 0; j < span.cols(); ++j) pt.push_back(span.at(row, j));
    return s.poly.eval(pt);
}

}  // namespace

bool line_on_surface(const ProjLine& l, const SurfacePoly& s) {
    if (l.ambient_dim() != s.n) throw ValueError("line/surface ambient mismatch");
    if (l.field() != s.poly.field()) throw ValueError("line/surface field mismatch");
    std::vector<Scalar> acc;
    restrict_to_span(s, l.span(), acc);
    for (const auto& c : acc)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<ProjLine> enumerate_lines_on_surface(const SurfacePoly& s, FieldRef f,
                                                 std::uint64_t max_q) {
    if (!f->is_finite()) throw ValueError("line enumeration requires a finite field");
    if (s.n != 3) throw ValueError("line enumeration is implemented for P^3 only");
    if (s.poly.field() != f) throw ValueError("surface field mismatch");
    const std::uint64_t q = f->q();
    if (q > max_q)
        throw BudgetError("enumeration budget exceeded: q = " + std::to_string(q) +
                          " > max_q = " + std::to_string(max_q));

    std::vector<ProjLine> found;
    std::vector<Scalar> acc;
    Matrix span(f, 2, 4);
    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);

    // iterate canonical RREF 2x4 spans: pivot columns j1 < j2, free entries
    // to the right of each pivot (skipping the other pivot's column)
    for (std::uint32_t j1 = 0; j1 < 4; ++j1) {
        for (std::uint32_t j2 = j1 + 1; j2 < 4; ++j2) {
            std::vector<std::uint32_t> free1, free2;
            for (std::uint32_t c = 0; c < 4; ++c) {
                if (c > j1 && c != j2) free1.push_back(c);
                if (c > j2) free2.push_back(c);
            }
            const std::uint64_t n1 = [&] {
                std::uint64_t v = 1;
                for (std::size_t i = 0; i < free1.size(); ++i) v *= q;
                return v;
            }();
            const std::uint64_t n2 = [&] {
                std::uint64_t v = 1;
                for (std::size_t i = 0; i < free2.size(); ++i) v *= q;
                return v;
            }();
            for (std::uint64_t a = 0; a < n1; ++a) {
                for (std::uint32_t c = 0; c < 4; ++c) span.at(0, c) = zero;
                span.at(0, j1) = one;
                std::uint64_t rest = a;
                for (std::uint32_t c : free1) {
                    span.at(0, c) = Scalar::by_index(f, rest % q);
                    rest /= q;
                }
                // row 0 is on every candidate line with this first row
                if (!eval_at_row(s, span, 0).is_zero()) continue;
                for (std::uint64_t b = 0; b < n2; ++b) {
                    for (std::uint32_t c = 0; c < 4; ++c) span.at(1, c) = zero;
                    span.at(1, j2) = one;
                    std::uint64_t r2 = b;
                    for (std::uint32_t c : free2) {
                        span.at(1, c) = Scalar::by_index(f, r2 % q);
                        r2 /= q;
                    }
                    if (!eval_at_row(s, span, 1).is_zero()) continue;
                    restrict_to_span(s, span, acc);
                    bool on = true;
                    for (const auto& c : acc)
                        if (!c.is_zero()) {
                            on = false;
                            break;
                        }
                    if (on) found.push_back(ProjLine::from_span(span));
                }
            }
        }
    }
    std::sort(found.begin(), found.end(), &ProjLine::canonical_less);
    return found;
}

std::vector<ProjLine> ruling_lines_of_bilinear_quadric(const SurfacePoly& q,
                                                       const SurfacePoly& s, FieldRef f) {
    if (!f->is_finite()) throw ValueError("ruling scan requires a finite field");
    if (q.n != 3 || s.n != 3) throw ValueError("ruling scan is implemented for P^3 only");
    if (q.poly.field() != f || s.poly.field() != f) throw ValueError("surface field mismatch");

    // q must be x0*(alpha*x2 + beta*x3) - x1*(-gamma*x2 - delta*x3)
    Scalar alpha = Scalar::zero(f), beta = alpha, gamma = alpha, delta = alpha;
    for (const auto& t : q.poly.terms()) {
        const auto& e = t.exp;
        if (e[0] == 1 && e[1] == 0 && e[2] == 1 && e[3] == 0)
            alpha = t.coef;
        else if (e[0] == 1 && e[1] == 0 && e[2] == 0 && e[3] == 1)
            beta = t.coef;
        else if (e[0] == 0 && e[1] == 1 && e[2] == 1 && e[3] == 0)
            gamma = t.coef;
        else if (e[0] == 0 && e[1] == 1 && e[2] == 0 && e[3] == 1)
            delta = t.coef;
        else
            throw ValueError("quadric is not of the bilinear shape x0*A(x2,x3) - x1*B(x2,x3)");
    }
    // A = alpha*x2 + beta*x3, B = -(gamma*x2 + delta*x3); independence
    if ((alpha * delta - beta * gamma).is_zero())
        throw ValueError("quadric is degenerate: A and B are dependent");

    auto a_at = [&](const Scalar& c2, const Scalar& c3) { return alpha * c2 + beta * c3; };
    auto b_at = [&](const Scalar& c2, const Scalar& c3) { return -(gamma * c2 + delta * c3); };

    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    std::vector<std::pair<Scalar, Scalar>> p1;  // canonical representatives of P^1(F_q)
    for (std::uint64_t i = 0; i < f->q(); ++i) p1.emplace_back(one, Scalar::by_index(f, i));
    p1.emplace_back(zero, one);

    std::vector<ProjLine> found;
    for (const auto& [c2, c3] : p1) {
        // ruling 1: [B(c), A(c), 0, 0], [0, 0, c2, c3]
        Matrix m(f, 2, 4);
        m.at(0, 0) = b_at(c2, c3);
        m.at(0, 1) = a_at(c2, c3);
        m.at(1, 2) = c2;
        m.at(1, 3) = c3;
        ProjLine l = ProjLine::from_span(m);
        if (line_on_surface(l, s)) found.push_back(l);
    }
    for (const auto& [c0, c1] : p1) {
        // ruling 2: [c0, c1, 0, 0], [0, 0, u2, u3] with c0*A(u) - c1*B(u) = 0
        Scalar l2 = c0 * alpha + c1 * gamma;
        Scalar l3 = c0 * beta + c1 * delta;
        Matrix m(f, 2, 4);
        m.at(0, 0) = c0;
        m.at(0, 1) = c1;
        m.at(1, 2) = -l3;
        m.at(1, 3) = l2;
        ProjLine l = ProjLine::from_span(m);
        if (line_on_surface(l, s)) found.push_back(l);
    }
    std::sort(found.begin(), found.end(), &ProjLine::canonical_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace arrlab::projgeom
