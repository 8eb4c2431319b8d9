#pragma once

#include "arrlab/jsonio.hpp"

namespace arrlab::report {

struct Budgets {
    std::uint64_t max_q = 64;
    casalg::AlgebraBudget algebra;
};

/// Full analysis of an arrangement: graph stats, planar-singularity report,
/// optional algebra block (complete-intersection certificate, regularity,
/// predicted valency, link degrees). A budget overrun inside the algebra
/// block is reported in the output under "algebra"/"error" rather than
/// thrown; the returned flag says whether that happened.
struct AnalysisResult {
    jsonio::json doc;
    bool budget_exceeded = false;
};
AnalysisResult analyze_arrangement(const projgeom::Arrangement& a, bool with_algebra,
                                   bool with_link_degrees, const Budgets& budgets = {});

/// Graph-only analysis (the graph stats block alone).
jsonio::json analyze_graph(const graphs::Graph& g);

}  // namespace arrlab::report
