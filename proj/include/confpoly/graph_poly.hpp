#ifndef CONFPOLY_GRAPH_POLY_HPP
#define CONFPOLY_GRAPH_POLY_HPP

#include <utility>
#include <vector>

#include "confpoly/multigraph.hpp"
#include "confpoly/polynomial.hpp"

namespace confpoly {

/// Momenta live on vertices, chains on edges; both are plain rational
/// vectors indexed like the owning list.
using Momentum = std::vector<Rational>;
using ChainVector = std::vector<Rational>;

bool is_conserved(const Multigraph& g, const Momentum& p);
void require_conserved(const Multigraph& g, const Momentum& p);

/// True when the subset is acyclic and meets every component with
/// |component| - 1 edges, i.e. restricts to a spanning tree per component.
bool is_spanning_forest(const Multigraph& g, EdgeSubset f);

/// All spanning forests in lexicographic order of their edge index lists.
/// Graphs with at most 20 edges run a subset filter over all |V|-c sized
/// combinations (parallel across threads when enabled); larger graphs fall
/// back to a serial deletion/contraction recursion.
std::vector<EdgeSubset> spanning_forests(const Multigraph& g);
/// Serial reference used by tests and the benchmark.
std::vector<EdgeSubset> spanning_forests_serial(const Multigraph& g);

/// Quasi spanning forests: drop one edge from a spanning forest so that one
/// tree splits in two.  Deduplicated, lexicographic order.  Edgeless forests
/// (h1 accounting still works) give the empty list.
std::vector<EdgeSubset> quasi_spanning_forests(const Multigraph& g);

/// Complements E - F of the quasi spanning forests: the cut sets.
/// Deduplicated, lexicographic order.
std::vector<EdgeSubset> cut_sets(const Multigraph& g);

/// The two-sided vertex split of a quasi spanning forest: vertex sets of the
/// two trees obtained inside the component that lost an edge.  The side
/// containing the smaller vertex id comes first.
struct QsfSplit {
  std::vector<int> side_a;
  std::vector<int> side_b;
};
QsfSplit qsf_split(const Multigraph& g, EdgeSubset qsf);

/// Rows are cycles: for every edge e outside the spanning forest F, the row
/// carries +1 at e and the signed forest path closing it, so every row lies
/// in the kernel of the boundary matrix.  Rows are indexed by the non-forest
/// edges in increasing order and form a lattice basis of the cycle space.
RatMatrix circuit_basis(const Multigraph& g, EdgeSubset forest);

/// Spanning-forest expansion of the first graph polynomial: sum over spanning
/// forests of the product of the variables outside the forest.
Polynomial psi_forest_sum(const Multigraph& g);

/// Edge chain q with boundary p, routed along the given spanning forest
/// (zero off the forest).  Defaults to the lexicographically first forest.
ChainVector momentum_lift(const Multigraph& g, const Momentum& p, EdgeSubset forest);
ChainVector momentum_lift(const Multigraph& g, const Momentum& p);

/// Momentum flowing through the split of a quasi spanning forest, computed
/// from the vertex momenta on one side.  Conservation makes the two sides
/// agree up to sign, and the square below is well defined.
Rational forest_momentum(const Multigraph& g, EdgeSubset qsf, const Momentum& p);

/// Same quantity from an edge chain q with boundary p: the signed sum of
/// q over the cut edges.
Rational forest_momentum_from_chain(const Multigraph& g, EdgeSubset qsf, const ChainVector& q);

/// Cut-set expansion of the second graph polynomial: sum over cut sets C of
/// the squared split momentum times the product of the variables in C.
Polynomial phi_cutset_sum(const Multigraph& g, const Momentum& p);

}  // namespace confpoly

#endif
