#include "arrlab/casalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace arrlab::casalg {

// ---- exponent vectors -----------------------------------------------------

std::uint32_t expv_total_degree(const Expv& e) {
    std::uint32_t d = 0;
    for (auto x : e) d += x;
    return d;
}

bool expv_divides(const Expv& a, const Expv& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expv expv_lcm(const Expv& a, const Expv& b) {
    Expv r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Expv expv_add(const Expv& a, const Expv& b) {
    Expv r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Expv expv_sub(const Expv& a, const Expv& b) {
    Expv r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// ---- monomial orders --------------------------------------------------------

namespace {

// grevlex on the index range [lo, hi)
bool grevlex_less_range(const Expv& a, const Expv& b, std::size_t lo, std::size_t hi) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db;
    for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

}  // namespace

bool MonomialOrder::less(const Expv& a, const Expv& b) const {
    switch (kind) {
        case Kind::grevlex:
            return grevlex_less_range(a, b, 0, a.size());
        case Kind::lex:
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;
        case Kind::block: {
            std::size_t t = std::min<std::size_t>(block_vars, a.size());
            if (grevlex_less_range(a, b, 0, t)) return true;
            if (grevlex_less_range(b, a, 0, t)) return false;
            return grevlex_less_range(a, b, t, a.size());
        }
    }
    return false;
}

// ---- Poly -------------------------------------------------------------------

namespace {

struct DescLess {
    MonomialOrder o;
    bool operator()(const Term& a, const Term& b) const { return o.less(b.exp, a.exp); }
};

void sort_terms(std::vector<Term>& t, const MonomialOrder& o) {
    std::sort(t.begin(), t.end(), DescLess{o});
}

// A - B, both sorted descending under o
std::vector<Term> merge_sub(const std::vector<Term>& A, const std::vector<Term>& B,
                            const MonomialOrder& o) {
    std::vector<Term> r;
    r.reserve(A.size() + B.size());
    std::size_t i = 0, j = 0;
    while (i < A.size() && j < B.size()) {
        if (A[i].exp == B[j].exp) {
            Scalar c = A[i].coef - B[j].coef;
            if (!c.is_zero()) r.push_back({A[i].exp, std::move(c)});
            ++i;
            ++j;
        } else if (o.less(B[j].exp, A[i].exp)) {
            r.push_back(A[i++]);
        } else {
            r.push_back({B[j].exp, -B[j].coef});
            ++j;
        }
    }
    for (; i < A.size(); ++i) r.push_back(A[i]);
    for (; j < B.size(); ++j) r.push_back({B[j].exp, -B[j].coef});
    return r;
}

std::vector<Term> mul_by_term(const std::vector<Term>& A, const Expv& e, const Scalar& c) {
    std::vector<Term> r;
    r.reserve(A.size());
    for (const auto& t : A) r.push_back({expv_add(t.exp, e), t.coef * c});
    return r;
}

}  // namespace

Poly Poly::constant(FieldRef f, std::uint32_t nvars, const Scalar& c) {
    Poly p(f, nvars);
    if (!c.is_zero()) p.terms_.push_back({Expv(nvars, 0), c});
    return p;
}

Poly Poly::variable(FieldRef f, std::uint32_t nvars, std::uint32_t v, std::uint32_t exp) {
    if (v >= nvars) throw ValueError("variable index out of range");
    Poly p(f, nvars);
    if (exp == 0) return constant(f, nvars, Scalar::one(f));
    Expv e(nvars, 0);
    e[v] = exp;
    p.terms_.push_back({std::move(e), Scalar::one(f)});
    return p;
}

Poly Poly::linear_form(FieldRef f, const std::vector<Scalar>& coeffs) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        Expv e(coeffs.size(), 0);
        e[i] = 1;
        terms.push_back({std::move(e), coeffs[i]});
    }
    return from_terms(f, static_cast<std::uint32_t>(coeffs.size()), std::move(terms));
}

Poly Poly::from_terms(FieldRef f, std::uint32_t nvars, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.exp.size() != nvars) throw ValueError("exponent vector length mismatch");
    sort_terms(terms, MonomialOrder::grevlex());
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().exp == t.exp)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
    }
    Poly p(f, nvars);
    p.terms_ = std::move(out);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && expv_total_degree(terms_[0].exp) == 0);
}

std::uint32_t Poly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, expv_total_degree(t.exp));
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint32_t d = expv_total_degree(terms_[0].exp);
    for (const auto& t : terms_)
        if (expv_total_degree(t.exp) != d) return false;
    return true;
}

Poly Poly::operator+(const Poly& o) const { return *this - (-o); }

Poly Poly::operator-(const Poly& o) const {
    if (field_ != o.field_ || nvars_ != o.nvars_) throw ValueError("polynomial ring mismatch");
    Poly p(field_, nvars_);
    p.terms_ = merge_sub(terms_, o.terms_, MonomialOrder::grevlex());
    return p;
}

Poly Poly::operator-() const {
    Poly p(field_, nvars_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.exp, -t.coef});
    return p;
}

Poly Poly::scaled(const Scalar& c) const {
    if (c.is_zero()) return Poly(field_, nvars_);
    Poly p(field_, nvars_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.exp, t.coef * c});
    return p;
}

namespace {
struct GrevlexExpLess {
    bool operator()(const Expv& a, const Expv& b) const {
        return grevlex_less_range(a, b, 0, a.size());
    }
};
}  // namespace

Poly Poly::operator*(const Poly& o) const {
    if (field_ != o.field_ || nvars_ != o.nvars_) throw ValueError("polynomial ring mismatch");
    std::map<Expv, Scalar, GrevlexExpLess> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Expv e = expv_add(a.exp, b.exp);
            Scalar c = a.coef * b.coef;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(std::move(e), std::move(c));
            else
                it->second += c;
        }
    Poly p(field_, nvars_);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!it->second.is_zero()) p.terms_.push_back({it->first, it->second});
    return p;
}

bool Poly::operator==(const Poly& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != nvars_) throw ValueError("point dimension mismatch");
    Scalar s = Scalar::zero(field_);
    for (const auto& t : terms_) {
        Scalar v = t.coef;
        for (std::uint32_t i = 0; i < nvars_; ++i)
            if (t.exp[i]) v = v * point[i].pow(t.exp[i]);
        s += v;
    }
    return s;
}

std::size_t Poly::leading_index(const MonomialOrder& o) const {
    if (terms_.empty()) throw ValueError("zero polynomial has no leading term");
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (o.less(terms_[best].exp, terms_[i].exp)) best = i;
    return best;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        std::string cs = t.coef.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) s += "-", cs = cs.substr(1);
        } else {
            s += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        first = false;
        std::string mono;
        for (std::uint32_t i = 0; i < nvars_; ++i) {
            if (!t.exp[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i);
            if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
        }
        if (mono.empty()) {
            s += cs;
        } else if (cs == "1") {
            s += mono;
        } else {
            s += cs + "*" + mono;
        }
    }
    return s;
}

// ---- parser -------------------------------------------------------------------

namespace {

struct PolyParser {
    const std::string& text;
    std::size_t pos = 0;
    FieldRef field;
    std::uint32_t nvars;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    long parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw ParseError("expected integer at position " + std::to_string(start));
        return std::stol(text.substr(start, pos - start));
    }

    std::optional<std::uint32_t> parse_var() {
        skip_ws();
        if (pos >= text.size()) return std::nullopt;
        char c = text[pos];
        if (c == 'x' && pos + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
            ++pos;
            std::uint32_t v = static_cast<std::uint32_t>(parse_int());
            if (v >= nvars) throw ParseError("variable x" + std::to_string(v) + " out of range");
            return v;
        }
        static const std::string aliases = "xyztw";
        auto idx = aliases.find(c);
        if (idx != std::string::npos) {
            if (static_cast<std::uint32_t>(idx) >= nvars)
                throw ParseError(std::string("variable alias '") + c + "' out of range");
            ++pos;
            return static_cast<std::uint32_t>(idx);
        }
        return std::nullopt;
    }

    // factor := coefficient | variable [^ exponent]
    void parse_factor(Expv& exp, Scalar& coef) {
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            long num = parse_int();
            if (eat('/')) {
                long den = parse_int();
                if (field->is_rational()) {
                    mpq_class q(num, den);
                    q.canonicalize();
                    coef = coef * Scalar::from_mpq(q);
                } else {
                    coef = coef * (Scalar::from_int(field, num) / Scalar::from_int(field, den));
                }
            } else {
                coef = coef * Scalar::from_int(field, num);
            }
            return;
        }
        auto v = parse_var();
        if (!v) throw ParseError("expected coefficient or variable at position " + std::to_string(pos));
        std::uint32_t e = 1;
        if (eat('^')) e = static_cast<std::uint32_t>(parse_int());
        exp[*v] += e;
    }

    Poly parse() {
        std::vector<Term> terms;
        bool first = true;
        for (;;) {
            skip_ws();
            if (pos >= text.size()) break;
            int sign = 1;
            if (eat('+')) {
                sign = 1;
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                throw ParseError("expected '+' or '-' at position " + std::to_string(pos));
            }
            first = false;
            Expv exp(nvars, 0);
            Scalar coef = Scalar::from_int(field, sign);
            parse_factor(exp, coef);
            while (eat('*')) parse_factor(exp, coef);
            terms.push_back({std::move(exp), std::move(coef)});
        }
        return Poly::from_terms(field, nvars, std::move(terms));
    }
};

}  // namespace

Poly parse_poly(const std::string& text, FieldRef f, std::uint32_t nvars) {
    PolyParser p{text, 0, f, nvars};
    return p.parse();
}

// ---- Groebner engine -------------------------------------------------------------

namespace {

struct SortedPoly {
    std::vector<Term> terms;  // descending under the active order
    const Expv& lm() const { return terms.front().exp; }
    const Scalar& lc() const { return terms.front().coef; }
};

SortedPoly to_sorted(const Poly& p, const MonomialOrder& o) {
    SortedPoly s{p.terms()};
    sort_terms(s.terms, o);
    return s;
}

Poly to_poly(FieldRef f, std::uint32_t nvars, std::vector<Term> terms) {
    return Poly::from_terms(f, nvars, std::move(terms));
}

void make_monic(SortedPoly& p) {
    if (p.terms.empty() || p.lc().is_one()) return;
    Scalar inv = p.lc().inverse();
    for (auto& t : p.terms) t.coef = t.coef * inv;
}

// full normal form of `work` against the reducers
std::vector<Term> reduce_full(std::vector<Term> work, const std::vector<SortedPoly>& reducers,
                              const MonomialOrder& o) {
    std::vector<Term> rem;
    while (!work.empty()) {
        const Term& lt = work.front();
        const SortedPoly* red = nullptr;
        for (const auto& g : reducers)
            if (!g.terms.empty() && expv_divides(g.lm(), lt.exp)) {
                red = &g;
                break;
            }
        if (red) {
            Expv shift = expv_sub(lt.exp, red->lm());
            Scalar c = lt.coef / red->lc();
            work = merge_sub(work, mul_by_term(red->terms, shift, c), o);
        } else {
            rem.push_back(lt);
            work.erase(work.begin());
        }
    }
    return rem;
}

struct Pair {
    std::size_t i, j;
    Expv lcm;
    std::uint32_t deg;
};

std::vector<SortedPoly> buchberger(std::vector<SortedPoly> basis, const MonomialOrder& o) {
    // drop zero generators, make monic
    std::vector<SortedPoly> G;
    for (auto& g : basis)
        if (!g.terms.empty()) {
            make_monic(g);
            G.push_back(std::move(g));
        }

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_keys;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Expv l = expv_lcm(G[i].lm(), G[j].lm());
            pending.push_back({i, j, l, expv_total_degree(l)});
            pending_keys.insert({i, j});
        }
    };
    for (std::size_t j = 1; j < G.size(); ++j) add_pairs(j);

    while (!pending.empty()) {
        // normal selection: smallest lcm degree, then smallest lcm in the order
        std::size_t best = 0;
        for (std::size_t i = 1; i < pending.size(); ++i) {
            const Pair &a = pending[i], &b = pending[best];
            if (a.deg != b.deg ? a.deg < b.deg : o.less(a.lcm, b.lcm)) best = i;
        }
        Pair pr = pending[best];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        pending_keys.erase({pr.i, pr.j});

        // coprimality criterion
        if (pr.lcm == expv_add(G[pr.i].lm(), G[pr.j].lm())) continue;
        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!expv_divides(G[k].lm(), pr.lcm)) continue;
            auto k1 = std::minmax(pr.i, k), k2 = std::minmax(pr.j, k);
            if (!pending_keys.count({k1.first, k1.second}) &&
                !pending_keys.count({k2.first, k2.second}))
                skip = true;
        }
        if (skip) continue;

        // s-polynomial, reduced
        Expv si = expv_sub(pr.lcm, G[pr.i].lm());
        Expv sj = expv_sub(pr.lcm, G[pr.j].lm());
        std::vector<Term> s = merge_sub(mul_by_term(G[pr.i].terms, si, G[pr.j].lc()),
                                        mul_by_term(G[pr.j].terms, sj, G[pr.i].lc()), o);
        std::vector<Term> h = reduce_full(std::move(s), G, o);
        if (h.empty()) continue;
        SortedPoly hp{std::move(h)};
        make_monic(hp);
        G.push_back(std::move(hp));
        add_pairs(G.size() - 1);
    }

    // minimalize: drop any element whose lead is divisible by another lead
    std::vector<std::size_t> order_idx(G.size());
    for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(),
              [&](std::size_t a, std::size_t b) { return o.less(G[a].lm(), G[b].lm()); });
    std::vector<SortedPoly> kept;
    for (std::size_t idx : order_idx) {
        bool redundant = false;
        for (const auto& k : kept)
            if (expv_divides(k.lm(), G[idx].lm())) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(G[idx]);
    }
    // inter-reduce to the unique reduced basis
    std::vector<SortedPoly> reduced;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<SortedPoly> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        std::vector<Term> r = reduce_full(kept[i].terms, others, o);
        if (r.empty()) continue;  // cannot happen after minimalization
        SortedPoly rp{std::move(r)};
        make_monic(rp);
        reduced.push_back(std::move(rp));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const SortedPoly& a, const SortedPoly& b) { return o.less(b.lm(), a.lm()); });
    return reduced;
}

}  // namespace

Poly normal_form(const Poly& p, const std::vector<Poly>& gb, const MonomialOrder& o) {
    std::vector<SortedPoly> reducers;
    reducers.reserve(gb.size());
    for (const auto& g : gb)
        if (!g.is_zero()) reducers.push_back(to_sorted(g, o));
    SortedPoly w = to_sorted(p, o);
    std::vector<Term> r = reduce_full(std::move(w.terms), reducers, o);
    return to_poly(p.field(), p.nvars(), std::move(r));
}

// ---- Ideal ---------------------------------------------------------------------

Ideal::Ideal(FieldRef f, std::uint32_t nvars, std::vector<Poly> gens)
    : field_(f), nvars_(nvars) {
    for (auto& g : gens) {
        if (g.field() != f || g.nvars() != nvars) throw ValueError("generator ring mismatch");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::zero(FieldRef f, std::uint32_t nvars) { return Ideal(f, nvars, {}); }

Ideal Ideal::unit(FieldRef f, std::uint32_t nvars) {
    return Ideal(f, nvars, {Poly::constant(f, nvars, Scalar::one(f))});
}

bool Ideal::is_homogeneous() const {
    for (const auto& g : gens_)
        if (!g.is_homogeneous()) return false;
    return true;
}

const std::vector<Poly>& Ideal::groebner_basis(const MonomialOrder& o) {
    for (const auto& [ord, gb] : gb_cache_)
        if (ord == o) return gb;
    std::vector<SortedPoly> in;
    in.reserve(gens_.size());
    for (const auto& g : gens_) in.push_back(to_sorted(g, o));
    std::vector<SortedPoly> out = buchberger(std::move(in), o);
    std::vector<Poly> gb;
    gb.reserve(out.size());
    for (auto& s : out) gb.push_back(to_poly(field_, nvars_, std::move(s.terms)));
    gb_cache_.emplace_back(o, std::move(gb));
    return gb_cache_.back().second;
}

bool ideal_member(const Poly& p, Ideal& i) {
    return normal_form(p, i.groebner_basis(MonomialOrder::grevlex()), MonomialOrder::grevlex())
        .is_zero();
}

namespace {

Poly shift_vars(const Poly& p) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Expv e(p.nvars() + 1, 0);
        std::copy(t.exp.begin(), t.exp.end(), e.begin() + 1);
        terms.push_back({std::move(e), t.coef});
    }
    return Poly::from_terms(p.field(), p.nvars() + 1, std::move(terms));
}

Poly unshift_vars(const Poly& p) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Expv e(t.exp.begin() + 1, t.exp.end());
        terms.push_back({std::move(e), t.coef});
    }
    return Poly::from_terms(p.field(), p.nvars() - 1, std::move(terms));
}

}  // namespace

Ideal ideal_intersection(Ideal& i, Ideal& j) {
    if (i.field() != j.field() || i.nvars() != j.nvars())
        throw ValueError("ideal ring mismatch");
    FieldRef f = i.field();
    const std::uint32_t n = i.nvars();
    // mix in S[t], t the new variable 0: t*I + (1-t)*J
    Poly t = Poly::variable(f, n + 1, 0);
    Poly one_minus_t = Poly::constant(f, n + 1, Scalar::one(f)) - t;
    std::vector<Poly> mixed;
    for (const auto& g : i.gens()) mixed.push_back(t * shift_vars(g));
    for (const auto& g : j.gens()) mixed.push_back(one_minus_t * shift_vars(g));
    Ideal mix(f, n + 1, std::move(mixed));
    const auto& gb = mix.groebner_basis(MonomialOrder::block(1));
    std::vector<Poly> elim;
    for (const auto& g : gb) {
        bool has_t = false;
        for (const auto& term : g.terms())
            if (term.exp[0]) {
                has_t = true;
                break;
            }
        if (!has_t) elim.push_back(unshift_vars(g));
    }
    return Ideal(f, n, std::move(elim));
}

bool ideal_equal(Ideal& i, Ideal& j) {
    if (i.field() != j.field() || i.nvars() != j.nvars())
        throw ValueError("ideal ring mismatch");
    const auto& a = i.groebner_basis(MonomialOrder::grevlex());
    const auto& b = j.groebner_basis(MonomialOrder::grevlex());
    return a == b;
}

// ---- Hilbert series / dimension ---------------------------------------------------

namespace {

using IntPoly = std::vector<long long>;  // coefficient of t^i at index i

void int_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    int_trim(r);
    return r;
}

IntPoly int_add(IntPoly a, const IntPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    int_trim(a);
    return a;
}

void minimalize_monomials(std::vector<Expv>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Expv& a, const Expv& b) {
        return expv_total_degree(a) < expv_total_degree(b);
    });
    std::vector<Expv> kept;
    for (const auto& g : gens) {
        bool red = false;
        for (const auto& k : kept)
            if (expv_divides(k, g)) {
                red = true;
                break;
            }
        if (!red) kept.push_back(g);
    }
    gens = std::move(kept);
}

// Hilbert numerator of S/I for a monomial ideal I (pivot-splitting recursion):
// HS(S/I) = N(t) / (1-t)^nvars.
IntPoly hilbert_numerator(std::vector<Expv> gens, std::uint32_t nvars) {
    minimalize_monomials(gens);
    if (gens.empty()) return {1};
    if (expv_total_degree(gens[0]) == 0) return {};  // unit ideal -> zero ring

    // pivot variable occurring in the most generators
    std::vector<std::size_t> count(nvars, 0);
    for (const auto& g : gens)
        for (std::uint32_t v = 0; v < nvars; ++v)
            if (g[v]) ++count[v];
    std::uint32_t pivot = 0;
    for (std::uint32_t v = 1; v < nvars; ++v)
        if (count[v] > count[pivot]) pivot = v;

    if (count[pivot] <= 1) {
        // pairwise coprime monomials form a regular sequence
        IntPoly r{1};
        for (const auto& g : gens) {
            IntPoly f(expv_total_degree(g) + 1, 0);
            f[0] = 1;
            f.back() -= 1;
            r = int_mul(r, f);
        }
        return r;
    }

    // split along x_pivot: N(I) = N(I + (x)) + t * N(I : x)
    std::vector<Expv> plus;
    Expv xv(nvars, 0);
    xv[pivot] = 1;
    plus.push_back(xv);
    for (const auto& g : gens)
        if (g[pivot] == 0) plus.push_back(g);
    std::vector<Expv> colon;
    for (const auto& g : gens) {
        Expv h = g;
        if (h[pivot]) --h[pivot];
        colon.push_back(std::move(h));
    }
    IntPoly a = hilbert_numerator(std::move(plus), nvars);
    IntPoly b = hilbert_numerator(std::move(colon), nvars);
    IntPoly tb(b.size() + 1, 0);
    for (std::size_t i = 0; i < b.size(); ++i) tb[i + 1] = b[i];
    return int_add(std::move(tb), a);
}

std::vector<Expv> initial_exponents(Ideal& i) {
    std::vector<Expv> lms;
    for (const auto& g : i.groebner_basis(MonomialOrder::grevlex()))
        lms.push_back(g.terms().front().exp);  // grevlex-max is the front term
    return lms;
}

}  // namespace

std::vector<std::uint64_t> hilbert_function(Ideal& i, std::uint32_t upto) {
    if (!i.is_homogeneous()) throw ValueError("hilbert_function requires a homogeneous ideal");
    IntPoly num = hilbert_numerator(initial_exponents(i), i.nvars());
    std::vector<long long> c(upto + 1, 0);
    for (std::size_t d = 0; d < num.size() && d <= upto; ++d) c[d] = num[d];
    for (std::uint32_t v = 0; v < i.nvars(); ++v)
        for (std::uint32_t d = 1; d <= upto; ++d) c[d] += c[d - 1];
    std::vector<std::uint64_t> out(upto + 1);
    for (std::uint32_t d = 0; d <= upto; ++d) out[d] = static_cast<std::uint64_t>(c[d]);
    return out;
}

DimensionDegree dimension_degree(Ideal& i) {
    if (!i.is_homogeneous()) throw ValueError("dimension_degree requires a homogeneous ideal");
    IntPoly num = hilbert_numerator(initial_exponents(i), i.nvars());
    if (num.empty()) return {0, 0};  // zero ring
    std::uint32_t e = 0;
    for (;;) {
        long long at1 = 0;
        for (long long c : num) at1 += c;
        if (at1 != 0) {
            return {i.nvars() - e, static_cast<std::uint64_t>(at1)};
        }
        // divide by (1-t): quotient via prefix sums
        IntPoly q(num.size() - 1, 0);
        long long run = 0;
        for (std::size_t d = 0; d + 1 < num.size(); ++d) {
            run += num[d];
            q[d] = run;
        }
        int_trim(q);
        num = std::move(q);
        ++e;
    }
}

std::vector<Poly> minimal_generators(Ideal& i) {
    std::vector<Poly> gb = i.groebner_basis(MonomialOrder::grevlex());
    MonomialOrder o = MonomialOrder::grevlex();
    std::sort(gb.begin(), gb.end(), [&](const Poly& a, const Poly& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return o.less(a.terms().front().exp, b.terms().front().exp);
    });
    std::vector<Poly> kept;
    for (const auto& g : gb) {
        if (kept.empty()) {
            kept.push_back(g);
            continue;
        }
        Ideal part(i.field(), i.nvars(), kept);
        if (!normal_form(g, part.groebner_basis(o), o).is_zero()) kept.push_back(g);
    }
    return kept;
}

std::optional<std::uint32_t> ci_regularity(Ideal& i) {
    if (!i.is_homogeneous()) throw ValueError("ci_regularity requires a homogeneous ideal");
    if (i.gens().empty()) return std::nullopt;
    DimensionDegree dd = dimension_degree(i);
    if (dd.degree == 0) return std::nullopt;  // unit ideal
    std::vector<Poly> mins = minimal_generators(i);
    std::uint32_t codim = i.nvars() - dd.krull_dim;
    if (codim != mins.size()) return std::nullopt;
    std::uint32_t s = 0;
    for (const auto& g : mins) s += g.total_degree();
    return s - codim + 1;
}

}  // namespace arrlab::casalg
