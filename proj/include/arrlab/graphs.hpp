#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrlab/projgeom.hpp"

namespace arrlab::graphs {

/// Finite simple graph: vertices 0..vcount-1, optional labels, sorted edge
/// set with i < j, no loops, no duplicates.
class Graph {
  public:
    Graph(std::size_t vcount, std::vector<std::pair<std::size_t, std::size_t>> edges,
          std::vector<std::string> labels = {});

    std::size_t vcount() const { return vcount_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool adjacent(std::size_t u, std::size_t v) const;
    std::vector<std::size_t> neighbors(std::size_t v) const;
    std::size_t valency(std::size_t v) const;
    bool operator==(const Graph& o) const {
        return vcount_ == o.vcount_ && edges_ == o.edges_;
    }

  private:
    std::size_t vcount_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> adj_;
};

/// Vertex per line, edge {i,j} iff the lines meet.
Graph dual_graph(const projgeom::Arrangement& a);

struct ValencyStats {
    std::size_t delta;  // min valency
    std::size_t Delta;  // max valency
    bool regular;
};
ValencyStats valency_stats(const Graph& g);

/// Largest k such that g is k-connected: Menger via unit-capacity node-split
/// max-flow, minimized over nonadjacent pairs; n-1 for complete graphs.
/// Requires vcount >= 2.
std::size_t vertex_connectivity(const Graph& g);

/// Max BFS distance over pairs; nullopt when disconnected.
std::optional<std::size_t> diameter(const Graph& g);

struct GraphProperties {
    bool bipartite;
    bool triangle_free;
    std::size_t edge_count;
};
GraphProperties graph_properties(const Graph& g);

/// Partition of the vertex set into pairwise-adjacent triples, found by
/// lexicographic backtracking; nullopt if none exists.
std::optional<std::vector<std::array<std::size_t, 3>>> triangle_partition(const Graph& g);

/// An isomorphism g1 -> g2 as a vertex map, if one exists (backtracking over
/// color-refinement classes); nullopt otherwise.
std::optional<std::vector<std::size_t>> are_isomorphic(const Graph& g1, const Graph& g2);

/// Deterministic DOT text: vertices (with labels when present) then sorted edges.
std::string export_dot(const Graph& g);

}  // namespace arrlab::graphs
