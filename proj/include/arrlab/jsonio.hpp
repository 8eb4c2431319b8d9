#pragma once

#include <string>

#include <json.hpp>

#include "arrlab/families.hpp"
#include "arrlab/nerve.hpp"

namespace arrlab::jsonio {

using nlohmann::json;

// {"kind":"rational"} or {"kind":"finite","p":13,"k":1[,"modulus":[...]]}
json field_to_json(exactfield::FieldRef f);
exactfield::FieldRef field_from_json(const json& j);

// scalars: rationals as strings ("2/3"), finite elements as coefficient
// lists (low-degree-first); plain integers are accepted on input
json scalar_to_json(const exactfield::Scalar& s);
exactfield::Scalar scalar_from_json(const json& j, exactfield::FieldRef f);

// {"field":...,"n":3,"lines":[[[p0..pn],[q0..qn]],...],"labels":[...]?}
json arrangement_to_json(const projgeom::Arrangement& a);
projgeom::Arrangement arrangement_from_json(const json& j);

// {"vcount":...,"labels":[...],"edges":[[i,j],...]}
json graph_to_json(const graphs::Graph& g);
graphs::Graph graph_from_json(const json& j);

// {"n":...,"facets":[[...],...]}
json complex_to_json(const nerve::SimplicialComplex& c);
nerve::SimplicialComplex complex_from_json(const json& j);

/// Parse a JSON document, turning library json exceptions into ParseError.
json parse_document(const std::string& text);

}  // namespace arrlab::jsonio
