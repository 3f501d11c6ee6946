#ifndef CONFPOLY_MULTIGRAPH_HPP
#define CONFPOLY_MULTIGRAPH_HPP

#include <vector>

#include "confpoly/matrix.hpp"
#include "confpoly/subset.hpp"

namespace confpoly {

/// Oriented multigraph: vertices 0..vertex_count-1 and an ordered edge list.
/// Parallel edges and loops are allowed.  The edge order is significant: edge
/// i owns the polynomial variable with index i everywhere in this library.
class Multigraph {
 public:
  struct Edge {
    int tail = 0;
    int head = 0;
  };

  Multigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(i); }

  /// Same graph with the orientation of the flagged edges reversed.
  Multigraph with_flipped_edges(EdgeSubset flip) const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
};

struct Components {
  std::vector<int> comp_of_vertex;  // component id per vertex, ids 0..count-1
  int count = 0;
};

/// Connected components induced by the edge subset `use` (loops never join
/// anything).  Ids are assigned in order of the smallest member vertex.
Components components(const Multigraph& g, EdgeSubset use);
Components components(const Multigraph& g);

/// Vertex-by-edge incidence matrix of the boundary map e -> head(e) - tail(e).
/// Loop edges give zero columns.
RatMatrix boundary_matrix(const Multigraph& g);

/// First Betti number |E| - |V| + c(G).
int betti_number(const Multigraph& g);

}  // namespace confpoly

#endif
