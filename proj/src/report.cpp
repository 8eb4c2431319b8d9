#include "arrlab/report.hpp"

namespace arrlab::report {

using jsonio::json;

namespace {

json graph_stats(const graphs::Graph& g) {
    auto vs = graphs::valency_stats(g);
    auto props = graphs::graph_properties(g);
    json j;
    j["vcount"] = g.vcount();
    j["edges"] = props.edge_count;
    j["delta"] = vs.delta;
    j["Delta"] = vs.Delta;
    j["regular"] = vs.regular;
    j["connectivity"] = g.vcount() >= 2 ? json(graphs::vertex_connectivity(g)) : json(nullptr);
    auto diam = graphs::diameter(g);
    j["diameter"] = diam ? json(*diam) : json(nullptr);
    j["bipartite"] = props.bipartite;
    j["triangle_free"] = props.triangle_free;
    return j;
}

json witness_json(const projgeom::SingularPoint& sp) {
    json point = json::array();
    for (const auto& c : sp.point.coords()) point.push_back(jsonio::scalar_to_json(c));
    return json{{"point", point}, {"incident", sp.incident}, {"planar", sp.planar}};
}

}  // namespace

jsonio::json analyze_graph(const graphs::Graph& g) {
    return json{{"graph", graph_stats(g)}};
}

AnalysisResult analyze_arrangement(const projgeom::Arrangement& a, bool with_algebra,
                                   bool with_link_degrees, const Budgets& budgets) {
    AnalysisResult result;
    json& j = result.doc;
    j["arrangement"] = json{{"field", jsonio::field_to_json(a.field())},
                            {"n", a.ambient_dim()},
                            {"lines", a.size()}};
    graphs::Graph g = graphs::dual_graph(a);
    j["graph"] = graph_stats(g);
    auto planarity = projgeom::has_only_planar_singularities(a);
    j["planar_singularities"] = json{
        {"flag", planarity.flag},
        {"witness", planarity.witness ? witness_json(*planarity.witness) : json(nullptr)}};
    if (!with_algebra) {
        j["algebra"] = nullptr;
        return result;
    }
    json alg{{"ci", nullptr},
             {"regularity", nullptr},
             {"predicted_valency", nullptr},
             {"link_degrees", nullptr}};
    try {
        casalg::Ideal ideal = casalg::arrangement_ideal(a, budgets.algebra);
        auto reg = casalg::ci_regularity(ideal);
        alg["ci"] = reg.has_value();
        if (reg) {
            alg["regularity"] = *reg;
            alg["predicted_valency"] = *reg - 1;
        }
        if (with_link_degrees) {
            json degrees = json::array();
            for (std::size_t i = 0; i < a.size(); ++i)
                degrees.push_back(casalg::link_degree(a, i, budgets.algebra));
            alg["link_degrees"] = degrees;
        }
    } catch (const BudgetError& e) {
        alg["error"] = e.what();
        result.budget_exceeded = true;
    }
    j["algebra"] = alg;
    return result;
}

}  // namespace arrlab::report
