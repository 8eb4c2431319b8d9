#include "arrlab/casalg.hpp"
#include "arrlab/projgeom.hpp"

namespace arrlab::casalg {

using exactfield::Matrix;

Ideal line_ideal(const projgeom::ProjLine& l) {
    Matrix forms = l.span().kernel();
    std::vector<Poly> gens;
    for (std::size_t r = 0; r < forms.rows(); ++r) {
        std::vector<Scalar> coeffs;
        for (std::size_t c = 0; c < forms.cols(); ++c) coeffs.push_back(forms.at(r, c));
        gens.push_back(Poly::linear_form(l.field(), coeffs));
    }
    return Ideal(l.field(), static_cast<std::uint32_t>(forms.cols()), std::move(gens));
}

namespace {

void check_budget(const projgeom::Arrangement& a, std::size_t count,
                  const AlgebraBudget& budget) {
    std::size_t cap = a.field()->is_finite() ? budget.max_lines_fp : budget.max_lines_q;
    if (count > cap)
        throw BudgetError("arrangement ideal budget exceeded: " + std::to_string(count) +
                          " lines > " + std::to_string(cap));
}

Ideal intersect_lines(const projgeom::Arrangement& a, std::size_t skip) {
    Ideal acc = Ideal::unit(a.field(), a.ambient_dim() + 1);
    bool started = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == skip) continue;
        Ideal li = line_ideal(a.line(i));
        if (!started) {
            acc = std::move(li);
            started = true;
        } else {
            acc = ideal_intersection(acc, li);
        }
    }
    return acc;
}

}  // namespace

Ideal arrangement_ideal(const projgeom::Arrangement& a, const AlgebraBudget& budget) {
    check_budget(a, a.size(), budget);
    return intersect_lines(a, a.size());
}

std::uint64_t link_degree(const projgeom::Arrangement& a, std::size_t i,
                          const AlgebraBudget& budget) {
    if (i >= a.size()) throw ValueError("line index out of range");
    if (a.size() == 1) return 0;
    check_budget(a, a.size() - 1, budget);
    Ideal j = intersect_lines(a, i);
    Ideal pi = line_ideal(a.line(i));
    std::vector<Poly> gens = j.gens();
    for (const auto& g : pi.gens()) gens.push_back(g);
    Ideal sum(a.field(), a.ambient_dim() + 1, std::move(gens));
    DimensionDegree dd = dimension_degree(sum);
    // Krull dimension 1 means points on the line; 0 means the empty scheme
    return dd.krull_dim == 1 ? dd.degree : 0;
}

}  // namespace arrlab::casalg
