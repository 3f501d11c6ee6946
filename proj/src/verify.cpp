#include "confpoly/verify.hpp"

#include <algorithm>
#include <numeric>

namespace confpoly {

namespace {

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

void report(std::vector<std::string>* failures, const std::string& tag, const std::string& what) {
  failures->push_back(tag + ": " + what);
}

}  // namespace

Configuration sample_config_2x3() {
  RatMatrix b(2, 3);
  b.at(0, 0) = 1;
  b.at(0, 1) = 1;
  b.at(1, 1) = -1;
  b.at(1, 2) = 2;
  return Configuration(std::move(b));
}

Configuration banana4_configuration() {
  RatMatrix b(3, 4);
  for (int r = 0; r < 3; ++r) {
    b.at(r, r) = 1;
    b.at(r, r + 1) = 1;
  }
  return Configuration(std::move(b));
}

Multigraph banana_graph(int edges) {
  std::vector<Multigraph::Edge> es(static_cast<std::size_t>(edges), {0, 1});
  return Multigraph(2, std::move(es));
}

Multigraph path_graph(int edges) {
  std::vector<Multigraph::Edge> es;
  for (int i = 0; i < edges; ++i) es.push_back({i, i + 1});
  return Multigraph(edges + 1, std::move(es));
}

Multigraph triangle_graph() {
  return Multigraph(3, {{0, 1}, {1, 2}, {2, 0}});
}

Multigraph random_multigraph(std::mt19937_64& rng, const GraphOptions& opt) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int v = rand_int(rng, 2, 6);
    int m = rand_int(rng, 1, std::max(1, opt.max_edges));
    std::vector<Multigraph::Edge> edges;
    for (int i = 0; i < m; ++i) {
      edges.push_back({rand_int(rng, 0, v - 1), rand_int(rng, 0, v - 1)});
    }
    Multigraph g(v, std::move(edges));
    if (opt.need_cycle && betti_number(g) == 0) continue;
    if (opt.need_nonloop) {
      bool has = false;
      for (const auto& e : g.edges()) has = has || e.tail != e.head;
      if (!has) continue;
    }
    return g;
  }
  throw SamplingError("random graph generation exhausted its retries");
}

Momentum random_conserved_momentum(std::mt19937_64& rng, const Multigraph& g) {
  RatMatrix d = boundary_matrix(g);
  for (int attempt = 0; attempt < 50; ++attempt) {
    Momentum p(g.vertex_count());
    bool nonzero = false;
    for (int e = 0; e < g.edge_count(); ++e) {
      Rational q = rand_int(rng, -4, 4);
      if (q.is_zero()) continue;
      const auto& ed = g.edge(e);
      p[ed.head] += q;
      p[ed.tail] -= q;
    }
    for (const auto& x : p) nonzero = nonzero || !x.is_zero();
    if (nonzero) return p;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (ed.tail != ed.head) {
      Momentum p(g.vertex_count());
      p[ed.head] = 1;
      p[ed.tail] = -1;
      return p;
    }
  }
  throw SamplingError("graph admits no nonzero conserved momentum");
}

Configuration random_configuration(std::mt19937_64& rng, const ConfigOptions& opt) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int dim = rand_int(rng, opt.min_dim, opt.max_dim);
    int n = rand_int(rng, std::max(dim, 2), std::max(opt.max_coords, std::max(dim, 2)));
    RatMatrix b(dim, n);
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < n; ++c) {
        if (rand_int(rng, 0, 9) < 4) continue;  // keep the basis sparse-ish
        int v = rand_int(rng, -3, 3);
        b.at(r, c) = v;
      }
    }
    if (rank(b) != dim) continue;
    return Configuration(std::move(b));
  }
  throw SamplingError("random configuration generation exhausted its retries");
}

void check_psi_routes(const Configuration& w, const std::string& tag,
                      std::vector<std::string>* failures) {
  Polynomial by_det = psi_det(w);
  Polynomial by_minors = psi_plucker(w);
  Polynomial by_minors_serial = psi_plucker_serial(w);
  if (by_det != by_minors) report(failures, tag, "determinant and minor-sweep polynomials differ");
  if (by_minors != by_minors_serial) {
    report(failures, tag, "parallel and serial minor sweeps differ");
  }
  if (by_det.is_zero()) report(failures, tag, "configuration polynomial is zero");
  if (!by_det.is_homogeneous() || by_det.degree() != w.dim()) {
    report(failures, tag, "polynomial is not homogeneous of the dimension degree");
  }
  if (by_det.max_exponent() > 1) report(failures, tag, "polynomial is not multilinear");
  for (const auto& [m, c] : by_det.terms()) {
    if (c.sign() <= 0) {
      report(failures, tag, "polynomial has a non-positive coefficient");
      break;
    }
  }
  Polynomial euler(w.n());
  for (int i = 0; i < w.n(); ++i) {
    euler += Polynomial::variable(w.n(), i) * by_det.partial(i);
  }
  if (euler != Rational(w.dim()) * by_det) {
    report(failures, tag, "degree-times-polynomial identity for the variable-weighted "
                          "derivative sum fails");
  }
  if (w.n() <= 16) {
    PluckerVector pv = plucker_vector(w);
    for (const auto& [bits, minor] : pv.minors) {
      Rational expect = minor * minor;
      if (by_det.coefficient(Monomial::from_subset(EdgeSubset(bits))) != expect) {
        report(failures, tag, "coefficient differs from the squared maximal minor");
        break;
      }
    }
  }
}

void check_matrix_tree(const Multigraph& g, const std::string& tag,
                       std::vector<std::string>* failures) {
  if (spanning_forests(g) != spanning_forests_serial(g)) {
    report(failures, tag, "parallel and serial forest enumerations differ");
  }
  Polynomial by_forests = psi_forest_sum(g);
  if (betti_number(g) == 0) {
    if (by_forests != Polynomial::constant(g.edge_count(), 1)) {
      report(failures, tag, "forest polynomial of a forest graph is not 1");
    }
    return;
  }
  Configuration h1 = h1_configuration(g);
  if (psi_det(h1) != by_forests) {
    report(failures, tag, "forest sum and cycle-space determinant differ");
  }
  if (psi_plucker(h1) != by_forests) {
    report(failures, tag, "forest sum and cycle-space minor sweep differ");
  }
}

void check_circuit_determinants(const Multigraph& g, const std::string& tag,
                                std::vector<std::string>* failures) {
  if (betti_number(g) == 0) return;
  const int n = g.edge_count();
  std::vector<EdgeSubset> forests = spanning_forests(g);
  RatMatrix basis = circuit_basis(g, forests.front());
  std::vector<int> rows(basis.rows);
  std::iota(rows.begin(), rows.end(), 0);
  for (EdgeSubset s : all_combinations(n, forests.front().count())) {
    Rational d = det(submatrix(basis, rows, s.complement(n).indices()));
    bool forest = is_spanning_forest(g, s);
    if (forest && d != 1 && d != -1) {
      report(failures, tag, "projection determinant of a spanning forest is not a unit");
      return;
    }
    if (!forest && !d.is_zero()) {
      report(failures, tag, "projection determinant of a non-forest subset is nonzero");
      return;
    }
  }
}

void check_second_poly(const Multigraph& g, const Momentum& p, EdgeSubset flip,
                       const std::string& tag, std::vector<std::string>* failures) {
  Polynomial by_cuts = phi_cutset_sum(g, p);
  std::vector<EdgeSubset> forests = spanning_forests(g);
  Polynomial via_first = psi_det(h1p_configuration(g, p, forests.front()));
  Polynomial via_last = psi_det(h1p_configuration(g, p, forests.back()));
  if (by_cuts != via_first) {
    report(failures, tag, "cut-set sum and extended-cycle determinant differ");
  }
  if (via_first != via_last) {
    report(failures, tag, "determinants from two different momentum routings differ");
  }
  Multigraph flipped = g.with_flipped_edges(flip);
  if (phi_cutset_sum(flipped, p) != by_cuts) {
    report(failures, tag, "cut-set sum changed under reorientation");
  }
  if (psi_det(h1p_configuration(flipped, p)) != by_cuts) {
    report(failures, tag, "extended-cycle determinant changed under reorientation");
  }
  std::vector<EdgeSubset> cuts = cut_sets(g);
  for (const auto& [m, c] : by_cuts.terms()) {
    EdgeSubset support;
    for (const auto& [v, e] : m.entries()) support.add(v);
    if (std::find(cuts.begin(), cuts.end(), support) == cuts.end()) {
      report(failures, tag, "second polynomial has a term off the cut sets");
      break;
    }
  }
}

void check_qsf_momentum_forms(const Multigraph& g, const Momentum& p, const std::string& tag,
                              std::vector<std::string>* failures) {
  std::vector<EdgeSubset> forests = spanning_forests(g);
  ChainVector q1 = momentum_lift(g, p, forests.front());
  ChainVector q2 = momentum_lift(g, p, forests.back());
  for (EdgeSubset qsf : quasi_spanning_forests(g)) {
    Rational vertex_route = forest_momentum(g, qsf, p);
    if (vertex_route != forest_momentum_from_chain(g, qsf, q1) ||
        vertex_route != forest_momentum_from_chain(g, qsf, q2)) {
      report(failures, tag, "vertex and chain momentum routes differ on a quasi forest");
      return;
    }
  }
}

void check_restriction_classification(const Configuration& w, bool expect_unit_constants,
                                      const std::string& tag,
                                      std::vector<std::string>* failures) {
  for (int k = 1; k <= w.dim() - 1; ++k) {
    SingularIdealGens gens = singular_ideal_gens(w, k);
    if (!gens.consistent) {
      report(failures, tag, "derivative/restriction classification inconsistent at order " +
                                std::to_string(k));
      continue;
    }
    if (expect_unit_constants) {
      for (const auto& pair : gens.pairs) {
        if (pair.constant && *pair.constant != Rational(1)) {
          report(failures, tag, "lattice-basis restriction constant is not 1");
          return;
        }
      }
    }
  }
}

void check_theorem_at(const Configuration& w, const Point& a, const std::string& tag,
                      std::vector<std::string>* failures) {
  AnalysisReport rep = verify_theorem(w, a);
  if (!rep.theorem_ok) {
    report(failures, tag, "multiplicity " + std::to_string(rep.multiplicity) +
                              " does not match corank " + std::to_string(rep.corank));
  }
}

void check_radical_chain(const Configuration& w, const Point& a, const std::string& tag,
                         std::vector<std::string>* failures) {
  RatMatrix rad_w = ambient_radical(w, form_at(w, a));
  EdgeSubset all = EdgeSubset::full(w.n());
  for (int e = 0; e < w.n(); ++e) {
    EdgeSubset keep = all;
    keep.remove(e);
    auto rest = restrict_to(w, keep);
    if (!rest || rest->dim() != w.dim() - 1) continue;  // not a genuine hyperplane
    RatMatrix rad_h = ambient_radical(*rest, form_at(*rest, a));
    if (!row_span_contains(rad_w, rad_h) && !row_span_contains(rad_h, rad_w)) {
      report(failures, tag, "radicals of the space and a hyperplane are incomparable");
      return;
    }
  }
}

void check_rank_criterion(const Configuration& w, const Point& a, const std::string& tag,
                          std::vector<std::string>* failures) {
  EvaluatedForm ef = form_at(w, a);
  if (ef.corank == 0) return;
  const int n = w.n();
  for (int k = 1; k <= w.dim() - 1; ++k) {
    bool hypothesis = true;
    for (int s = 1; s <= k && hypothesis; ++s) {
      for (EdgeSubset f : all_combinations(n, s)) {
        auto rest = restrict_to(w, f.complement(n));
        if (!rest) continue;  // zero restriction cannot occur for s < dim
        if (form_at(*rest, a).corank == 0) {
          hypothesis = false;
          break;
        }
      }
    }
    if (!hypothesis) break;
    if (ef.rank >= w.dim() - k) {
      report(failures, tag, "rank bound from degenerate restrictions fails at depth " +
                                std::to_string(k));
      return;
    }
  }
}

void check_cone_at(const Configuration& w, const Point& a, const std::string& tag,
                   std::vector<std::string>* failures) {
  TangentCone tc;
  try {
    tc = tangent_cone(w, a);
  } catch (const CheckError& err) {
    report(failures, tag, err.what());
    return;
  }
  int mult = multiplicity_at(w, a);
  if (tc.degree != mult) report(failures, tag, "cone degree differs from the multiplicity");
  if (!tc.projective.is_homogeneous() || tc.projective.degree() != mult ||
      tc.projective.is_zero()) {
    report(failures, tag, "projective cone is not homogeneous of the multiplicity degree");
  }
  if (!tc.projective.eval(a).is_zero()) {
    report(failures, tag, "projective cone does not vanish at its base point");
  }
  if (!tc.affine.eval(a).is_zero()) {
    report(failures, tag, "affine cone does not vanish at its base point");
  }
}

void check_generic_pullback(const Configuration& w, std::mt19937_64& rng,
                            const std::string& tag, std::vector<std::string>* failures) {
  if (w.dim() > 5) return;
  GenericPullback gp = generic_det_pullback(w);
  if (!gp.pullback_matches) {
    report(failures, tag, "generic determinant does not pull back to the polynomial");
  }
  // Independent numeric check: the generic determinant evaluated on a random
  // symmetric matrix equals the numeric determinant of that matrix.
  const int ell = w.dim();
  std::vector<Rational> point(gp.generic.nvars());
  RatMatrix num(ell, ell);
  int idx = 0;
  for (int i = 0; i < ell; ++i, ++idx) {
    point[idx] = rand_int(rng, -4, 4);
    num.at(i, i) = point[idx];
  }
  for (int i = 0; i < ell; ++i) {
    for (int j = i + 1; j < ell; ++j, ++idx) {
      point[idx] = rand_int(rng, -4, 4);
      num.at(i, j) = point[idx];
      num.at(j, i) = point[idx];
    }
  }
  if (gp.generic.eval(point) != det(num)) {
    report(failures, tag, "generic determinant disagrees with a numeric determinant");
  }
}

const std::vector<std::string> kSuiteNames = {"matrixtree", "secondpoly", "restriction",
                                              "theorem",    "cones",      "generic"};

namespace {

SuiteResult run_matrixtree(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "matrixtree";
  std::mt19937_64 rng(opt.seed);
  GraphOptions gopt{opt.max_edges, true, false};
  for (int t = 0; t < opt.trials; ++t) {
    Multigraph g = random_multigraph(rng, gopt);
    std::string tag = "graph " + std::to_string(t);
    check_matrix_tree(g, tag, &res.failures);
    check_circuit_determinants(g, tag, &res.failures);
    check_psi_routes(h1_configuration(g), tag, &res.failures);
    ++res.instances;
    res.checks += 3;
  }
  return res;
}

SuiteResult run_secondpoly(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "secondpoly";
  std::mt19937_64 rng(opt.seed);
  GraphOptions gopt{opt.max_edges, false, true};
  for (int t = 0; t < opt.trials; ++t) {
    Multigraph g = random_multigraph(rng, gopt);
    Momentum p = random_conserved_momentum(rng, g);
    EdgeSubset flip;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (rng() & 1u) flip.add(e);
    }
    std::string tag = "graph " + std::to_string(t);
    check_second_poly(g, p, flip, tag, &res.failures);
    check_qsf_momentum_forms(g, p, tag, &res.failures);
    ++res.instances;
    res.checks += 2;
  }
  return res;
}

SuiteResult run_restriction(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "restriction";
  std::mt19937_64 rng(opt.seed);
  check_restriction_classification(sample_config_2x3(), false, "2x3 sample", &res.failures);
  check_restriction_classification(banana4_configuration(), true, "banana4", &res.failures);
  check_restriction_classification(trivial_configuration(4), true, "coordinate space",
                                   &res.failures);
  res.instances += 3;
  res.checks += 3;
  GraphOptions gopt{opt.max_edges, true, false};
  ConfigOptions copt{2, 4, 8};
  for (int t = 0; t < opt.trials; ++t) {
    std::string tag = "instance " + std::to_string(t);
    if (t % 2 == 0) {
      Multigraph g = random_multigraph(rng, gopt);
      check_restriction_classification(h1_configuration(g), true, tag, &res.failures);
    } else {
      check_restriction_classification(random_configuration(rng, copt), false, tag,
                                       &res.failures);
    }
    ++res.instances;
    ++res.checks;
  }
  return res;
}

SuiteResult run_theorem(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "theorem";
  std::mt19937_64 rng(opt.seed);
  auto drive = [&](const Configuration& w, const std::string& tag, int pts_per_k,
                   int surface_pts, bool deep_checks) {
    for (int k = 1; k <= w.dim() - 1; ++k) {
      auto pts = sample_corank_points(w, k, pts_per_k, rng());
      for (const auto& a : pts) {
        check_theorem_at(w, a, tag, &res.failures);
        ++res.checks;
      }
      if (deep_checks && !pts.empty()) {
        check_radical_chain(w, pts.front(), tag, &res.failures);
        check_rank_criterion(w, pts.front(), tag, &res.failures);
        res.checks += 2;
      }
    }
    for (const auto& a : sample_hypersurface_points(w, surface_pts, rng())) {
      check_theorem_at(w, a, tag, &res.failures);
      ++res.checks;
    }
    ++res.instances;
  };
  drive(sample_config_2x3(), "2x3 sample", 3, 4, true);
  drive(banana4_configuration(), "banana4", 3, 4, true);
  drive(trivial_configuration(5), "coordinate space", 3, 4, true);
  ConfigOptions copt{2, 4, 8};
  for (int t = 0; t < opt.trials; ++t) {
    drive(random_configuration(rng, copt), "config " + std::to_string(t), 2, 2, t % 5 == 0);
  }
  return res;
}

SuiteResult run_cones(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "cones";
  std::mt19937_64 rng(opt.seed);
  auto drive = [&](const Configuration& w, const std::string& tag, int pts_per_k,
                   int surface_pts) {
    for (int k = 1; k <= w.dim() - 1; ++k) {
      for (const auto& a : sample_corank_points(w, k, pts_per_k, rng())) {
        check_cone_at(w, a, tag, &res.failures);
        ++res.checks;
      }
    }
    for (const auto& a : sample_hypersurface_points(w, surface_pts, rng())) {
      check_cone_at(w, a, tag, &res.failures);
      ++res.checks;
    }
    ++res.instances;
  };
  drive(banana4_configuration(), "banana4", 2, 2);
  drive(sample_config_2x3(), "2x3 sample", 2, 2);
  ConfigOptions copt{2, 3, 7};
  for (int t = 0; t < opt.trials; ++t) {
    drive(random_configuration(rng, copt), "config " + std::to_string(t), 1, 1);
  }
  return res;
}

SuiteResult run_generic(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "generic";
  std::mt19937_64 rng(opt.seed);
  check_generic_pullback(banana4_configuration(), rng, "banana4", &res.failures);
  check_generic_pullback(sample_config_2x3(), rng, "2x3 sample", &res.failures);
  res.instances += 2;
  res.checks += 2;
  ConfigOptions copt{1, 4, 9};
  for (int t = 0; t < opt.trials; ++t) {
    check_generic_pullback(random_configuration(rng, copt), rng,
                           "config " + std::to_string(t), &res.failures);
    ++res.instances;
    ++res.checks;
  }
  return res;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "matrixtree") return run_matrixtree(opt);
  if (name == "secondpoly") return run_secondpoly(opt);
  if (name == "restriction") return run_restriction(opt);
  if (name == "theorem") return run_theorem(opt);
  if (name == "cones") return run_cones(opt);
  if (name == "generic") return run_generic(opt);
  throw ArgumentError("unknown verification suite: " + name);
}

}  // namespace confpoly
