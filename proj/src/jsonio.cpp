#include "arrlab/jsonio.hpp"

namespace arrlab::jsonio {

using exactfield::FieldRef;
using exactfield::Matrix;
using exactfield::Scalar;

json field_to_json(FieldRef f) {
    if (f->is_rational()) return json{{"kind", "rational"}};
    json j{{"kind", "finite"}, {"p", f->p}, {"k", f->k}};
    if (f->k > 1) j["modulus"] = f->modulus;
    return j;
}

FieldRef field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("field: missing \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return exactfield::field_rational();
    if (kind != "finite") throw ParseError("field: unknown kind \"" + kind + "\"");
    if (!j.contains("p")) throw ParseError("field: finite field needs \"p\"");
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    unsigned k = j.contains("k") ? j.at("k").get<unsigned>() : 1;
    std::vector<std::uint64_t> modulus;
    if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<std::uint64_t>>();
    return exactfield::field_finite(p, k, std::move(modulus));
}

json scalar_to_json(const Scalar& s) {
    if (s.field()->is_rational()) return s.str();
    return s.coeffs();
}

Scalar scalar_from_json(const json& j, FieldRef f) {
    if (j.is_string()) {
        const std::string& text = j.get<std::string>();
        if (f->is_rational()) {
            try {
                mpq_class q(text);
                q.canonicalize();
                return Scalar::from_mpq(q);
            } catch (const std::invalid_argument&) {
                throw ParseError("bad rational literal \"" + text + "\"");
            }
        }
        return Scalar::from_int(f, std::stol(text));
    }
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<long>());
    if (j.is_array()) {
        if (!f->is_finite()) throw ParseError("coefficient lists require a finite field");
        return Scalar::from_coeffs(f, j.get<std::vector<std::uint64_t>>());
    }
    throw ParseError("bad scalar literal");
}

json arrangement_to_json(const projgeom::Arrangement& a) {
    json lines = json::array();
    for (const auto& l : a.lines()) {
        json row0 = json::array(), row1 = json::array();
        for (std::size_t c = 0; c < l.span().cols(); ++c) {
            row0.push_back(scalar_to_json(l.span().at(0, c)));
            row1.push_back(scalar_to_json(l.span().at(1, c)));
        }
        lines.push_back(json::array({row0, row1}));
    }
    json j{{"field", field_to_json(a.field())}, {"n", a.ambient_dim()}, {"lines", lines}};
    if (!a.labels().empty()) j["labels"] = a.labels();
    return j;
}

projgeom::Arrangement arrangement_from_json(const json& j) {
    for (const char* key : {"field", "n", "lines"})
        if (!j.contains(key)) throw ParseError(std::string("arrangement: missing \"") + key + "\"");
    FieldRef f = field_from_json(j.at("field"));
    std::uint32_t n = j.at("n").get<std::uint32_t>();
    std::vector<projgeom::ProjLine> lines;
    for (const auto& lj : j.at("lines")) {
        if (!lj.is_array() || lj.size() != 2) throw ParseError("line: expected two span rows");
        Matrix span(f, 2, n + 1);
        for (std::size_t r = 0; r < 2; ++r) {
            if (lj[r].size() != n + 1)
                throw ParseError("line row: expected " + std::to_string(n + 1) + " coordinates");
            for (std::size_t c = 0; c <= n; ++c) span.at(r, c) = scalar_from_json(lj[r][c], f);
        }
        lines.push_back(projgeom::ProjLine::from_span(span));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return projgeom::Arrangement(f, n, std::move(lines), std::move(labels));
}

json graph_to_json(const graphs::Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    json j{{"vcount", g.vcount()}, {"edges", edges}};
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j;
}

graphs::Graph graph_from_json(const json& j) {
    for (const char* key : {"vcount", "edges"})
        if (!j.contains(key)) throw ParseError(std::string("graph: missing \"") + key + "\"");
    std::size_t vcount = j.at("vcount").get<std::size_t>();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("graph edge: expected a pair");
        edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return graphs::Graph(vcount, std::move(edges), std::move(labels));
}

json complex_to_json(const nerve::SimplicialComplex& c) {
    json facets = json::array();
    for (const auto& f : c.facets()) facets.push_back(f);
    return json{{"n", c.n()}, {"facets", facets}};
}

nerve::SimplicialComplex complex_from_json(const json& j) {
    if (!j.contains("facets")) throw ParseError("complex: missing \"facets\"");
    std::vector<std::vector<std::size_t>> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<std::size_t>>());
    auto c = nerve::SimplicialComplex::from_facets(std::move(facets));
    if (j.contains("n") && j.at("n").get<std::size_t>() != c.n())
        throw ParseError("complex: \"n\" does not match the facets");
    return c;
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace arrlab::jsonio
