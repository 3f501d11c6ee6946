#ifndef CONFPOLY_CONFIGURATION_HPP
#define CONFPOLY_CONFIGURATION_HPP

#include <map>
#include <optional>

#include "confpoly/graph_poly.hpp"
#include "confpoly/matrix.hpp"
#include "confpoly/multigraph.hpp"

namespace confpoly {

/// Subspace W of the n-dimensional coordinate space, carried by an explicit
/// basis (rows of a full-row-rank matrix).  The basis matters: rescaling it
/// rescales the polynomial by the squared determinant of the change of basis.
class Configuration {
 public:
  /// `basis` is ell x n with independent rows; ell >= 1.  A rank-deficient
  /// basis is rejected rather than silently reduced, and the zero
  /// configuration has no polynomial to begin with.
  explicit Configuration(RatMatrix basis);

  int n() const { return basis_.cols; }
  int dim() const { return basis_.rows; }
  const RatMatrix& basis() const { return basis_; }

  /// Coordinate functions restricted to W never involve this index.
  bool coordinate_vanishes(int i) const;

 private:
  RatMatrix basis_;
};

/// Coordinate space with the standard basis: the polynomial is A1*...*An.
Configuration trivial_configuration(int n);

/// Maximal minors indexed by the dim-sized column subsets, in lexicographic
/// subset order.  At least one entry is nonzero.
struct PluckerVector {
  int n = 0;
  int dim = 0;
  std::map<std::uint64_t, Rational> minors;  // subset bits -> minor

  Rational at(EdgeSubset cols) const {
    auto it = minors.find(cols.bits);
    return it == minors.end() ? Rational(0) : it->second;
  }
};

/// Dense minor sweep; guarded to n <= 16 so the table stays small.
PluckerVector plucker_vector(const Configuration& w);

/// Symmetric matrix of linear forms sum_e A_e x_e(w_i) x_e(w_j) representing
/// the coordinate bilinear form pulled back to W in the chosen basis.
std::vector<std::vector<Polynomial>> symbolic_form(const Configuration& w);

/// Polynomial of the configuration as the symbolic determinant of its form.
Polynomial psi_det(const Configuration& w);

/// Same polynomial as the sum over column subsets of squared maximal minors
/// times the matching square-free monomial.  The subset sweep splits across
/// threads; per-subset results are merged in rank order, so the outcome is
/// bit-identical for any thread count.
Polynomial psi_plucker(const Configuration& w);
/// Serial reference used by tests and the benchmark.
Polynomial psi_plucker_serial(const Configuration& w);

/// Restriction W^H = W intersect {coords outside H vanish}, presented in a
/// basis computed from the saturated integer kernel of the dropped columns.
/// For an integral basis this yields an integral basis generating the full
/// intersection lattice, which normalizes restricted polynomials so that
/// derivative comparisons come out with constant 1 on graph configurations.
/// Nothing is returned when the restriction is the zero space.
std::optional<Configuration> restrict_to(const Configuration& w, EdgeSubset keep);

/// Cycle space of the graph in the circuit basis of its first spanning
/// forest; requires at least one independent cycle.
Configuration h1_configuration(const Multigraph& g);

/// Cycle space extended by a lifted momentum: the chain q is prepended as
/// row 0 above the circuit rows.  Requires a conserved nonzero p.
Configuration h1p_configuration(const Multigraph& g, const Momentum& p);
Configuration h1p_configuration(const Multigraph& g, const Momentum& p, EdgeSubset forest);

/// Second graph polynomial through the extended cycle configuration.
Polynomial phi_config(const Multigraph& g, const Momentum& p);

}  // namespace confpoly

#endif
