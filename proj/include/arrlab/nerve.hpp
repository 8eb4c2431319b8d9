#pragma once

#include <cstdint>
#include <vector>

#include "arrlab/graphs.hpp"

namespace arrlab::nerve {

/// Simplicial complex on vertices 1..n given by its inclusion-maximal facets
/// (sorted within each facet, facet list sorted lexicographically). Every
/// vertex lies in at least one facet; isolated vertices are singleton facets.
class SimplicialComplex {
  public:
    /// Prunes non-maximal faces and computes the vertex count. Requires a
    /// nonempty facet list whose vertices cover 1..max.
    static SimplicialComplex from_facets(std::vector<std::vector<std::size_t>> facets);

    std::size_t n() const { return n_; }
    const std::vector<std::vector<std::size_t>>& facets() const { return facets_; }
    /// max facet cardinality minus one
    std::size_t dim() const;
    bool operator==(const SimplicialComplex& o) const {
        return n_ == o.n_ && facets_ == o.facets_;
    }

  private:
    std::size_t n_ = 0;
    std::vector<std::vector<std::size_t>> facets_;
};

SimplicialComplex complex_from_facets(std::vector<std::vector<std::size_t>> facets);

/// A family of subsets of the ground set [N] = {1..N}.
struct SetFamily {
    std::size_t ground;
    std::vector<std::vector<std::size_t>> sets;
};

/// Nerve: vertex i per set, face {i1..ik} iff the sets intersect. Every set
/// must be nonempty.
SimplicialComplex nerve_of_family(const SetFamily& f);

/// Nerve of the facet family of delta (the minimal primes of the
/// Stanley-Reisner ring correspond to the facets).
SimplicialComplex lyubeznik_of_stanley_reisner(const SimplicialComplex& delta);

struct AleResult {
    SimplicialComplex gamma;
    /// the generating family of gamma, in vertex order of delta (its nerve is delta)
    SetFamily family;
    std::size_t s;    // ground elements actually used by gamma
    std::size_t dim;  // dimension of gamma
};
/// The inverse nerve construction: A_i = {j : vertex i lies in facet F_j},
/// with a private ground element N+i added to every A_i contained in some
/// other A_{i'}; gamma is generated by the A_i (relabeled onto 1..s).
AleResult ale_construction(const SimplicialComplex& delta);

/// Reduced Betti numbers b~_0..b~_maxdim over Q, from exact ranks of the
/// boundary matrices of the augmented chain complex.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& delta,
                                                std::size_t maxdim);

/// Graph on delta's vertices with the 1-faces as edges.
graphs::Graph one_skeleton(const SimplicialComplex& delta);

}  // namespace arrlab::nerve
