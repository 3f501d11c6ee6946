#include "confpoly/configuration.hpp"

#include <algorithm>
#include <numeric>

namespace confpoly {

Configuration::Configuration(RatMatrix basis) : basis_(std::move(basis)) {
  if (basis_.rows < 1) throw ZeroConfigError("zero configuration has no polynomial");
  if (basis_.cols < 1) throw ArgumentError("configuration needs at least one coordinate");
  int r = rank(basis_);
  if (r == 0) throw ZeroConfigError("zero configuration has no polynomial");
  if (r < basis_.rows) throw ArgumentError("configuration basis rows are dependent");
}

bool Configuration::coordinate_vanishes(int i) const {
  if (i < 0 || i >= basis_.cols) throw ArgumentError("coordinate index out of range");
  for (int r = 0; r < basis_.rows; ++r) {
    if (!basis_.at(r, i).is_zero()) return false;
  }
  return true;
}

Configuration trivial_configuration(int n) {
  return Configuration(RatMatrix::identity(n));
}

PluckerVector plucker_vector(const Configuration& w) {
  if (w.n() > 16) throw CapacityError("dense minor table capped at 16 coordinates");
  PluckerVector pv;
  pv.n = w.n();
  pv.dim = w.dim();
  std::vector<int> rows(w.dim());
  std::iota(rows.begin(), rows.end(), 0);
  bool any_nonzero = false;
  for (EdgeSubset s : all_combinations(w.n(), w.dim())) {
    Rational minor = det(submatrix(w.basis(), rows, s.indices()));
    any_nonzero = any_nonzero || !minor.is_zero();
    pv.minors.emplace(s.bits, std::move(minor));
  }
  if (!any_nonzero) throw CheckError("full-rank basis produced no nonzero maximal minor");
  return pv;
}

std::vector<std::vector<Polynomial>> symbolic_form(const Configuration& w) {
  const int ell = w.dim();
  const int n = w.n();
  std::vector<std::vector<Polynomial>> m(ell, std::vector<Polynomial>(ell, Polynomial(n)));
  for (int i = 0; i < ell; ++i) {
    for (int j = i; j < ell; ++j) {
      Polynomial entry(n);
      for (int e = 0; e < n; ++e) {
        Rational c = w.basis().at(i, e) * w.basis().at(j, e);
        if (!c.is_zero()) entry.add_term(Monomial::variable(e), c);
      }
      m[i][j] = entry;
      m[j][i] = std::move(entry);
    }
  }
  return m;
}

Polynomial psi_det(const Configuration& w) {
  return det_poly(symbolic_form(w));
}

namespace {

Polynomial psi_plucker_impl(const Configuration& w, bool parallel) {
  const int n = w.n();
  const int ell = w.dim();
  const std::uint64_t total = comb_count(n, ell);
  if (total > 20'000'000) throw CapacityError("minor sweep too large");
  std::vector<int> rows(ell);
  std::iota(rows.begin(), rows.end(), 0);
  // Independent minors per subset rank; the merge below walks ranks in
  // order, so the result does not depend on the thread count.
  std::vector<Rational> minors(total);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
#endif
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(total); ++r) {
    EdgeSubset s = unrank_combination(n, ell, static_cast<std::uint64_t>(r));
    minors[r] = det(submatrix(w.basis(), rows, s.indices()));
  }
  Polynomial psi(n);
  for (std::uint64_t r = 0; r < total; ++r) {
    if (minors[r].is_zero()) continue;
    EdgeSubset s = unrank_combination(n, ell, r);
    psi.add_term(Monomial::from_subset(s), minors[r] * minors[r]);
  }
  return psi;
}

}  // namespace

Polynomial psi_plucker(const Configuration& w) { return psi_plucker_impl(w, true); }

Polynomial psi_plucker_serial(const Configuration& w) { return psi_plucker_impl(w, false); }

std::optional<Configuration> restrict_to(const Configuration& w, EdgeSubset keep) {
  EdgeSubset all = EdgeSubset::full(w.n());
  if (!keep.subset_of(all)) throw ArgumentError("kept coordinates out of range");
  EdgeSubset drop = keep.complement(w.n());
  std::vector<int> rows(w.dim());
  std::iota(rows.begin(), rows.end(), 0);
  RatMatrix dropped = submatrix(w.basis(), rows, drop.indices());
  RatMatrix combos = lattice_kernel(transpose(dropped));
  if (combos.rows == 0) return std::nullopt;
  return Configuration(matmul(combos, w.basis()));
}

Configuration h1_configuration(const Multigraph& g) {
  if (betti_number(g) == 0) {
    throw ZeroConfigError("graph has no independent cycle, so the cycle space is zero");
  }
  std::vector<EdgeSubset> forests = spanning_forests(g);
  return Configuration(circuit_basis(g, forests.front()));
}

Configuration h1p_configuration(const Multigraph& g, const Momentum& p, EdgeSubset forest) {
  require_conserved(g, p);
  if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x.is_zero(); })) {
    throw MomentumError("extended cycle space needs a nonzero momentum");
  }
  ChainVector q = momentum_lift(g, p, forest);
  RatMatrix circuits = circuit_basis(g, forest);
  RatMatrix stacked(circuits.rows + 1, g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) stacked.at(0, e) = q[e];
  for (int r = 0; r < circuits.rows; ++r) {
    for (int e = 0; e < g.edge_count(); ++e) stacked.at(r + 1, e) = circuits.at(r, e);
  }
  return Configuration(std::move(stacked));
}

Configuration h1p_configuration(const Multigraph& g, const Momentum& p) {
  std::vector<EdgeSubset> forests = spanning_forests(g);
  return h1p_configuration(g, p, forests.front());
}

Polynomial phi_config(const Multigraph& g, const Momentum& p) {
  return psi_det(h1p_configuration(g, p));
}

}  // namespace confpoly
