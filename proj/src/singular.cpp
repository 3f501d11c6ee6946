#include "confpoly/singular.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace confpoly {

namespace {

// Value of the square-free iterated derivative of p along `f` at the point,
// computed termwise without building the derivative polynomial.
Rational partial_eval(const Polynomial& p, EdgeSubset f, const Point& a) {
  Rational acc = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (int v : f.indices()) {
      int e = m.exponent_of(v);
      if (e == 0) {
        term = 0;
        break;
      }
      term *= Rational(e);
    }
    if (term.is_zero()) continue;
    for (const auto& [v, e] : m.entries()) {
      int rem = e - (f.contains(v) ? 1 : 0);
      if (rem > 0) term *= pow(a[v], static_cast<unsigned>(rem));
      if (term.is_zero()) break;
    }
    acc += term;
  }
  return acc;
}

int first_nonzero_index(const Point& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

// affine cone tau(A) = sigma(A - a) with sigma homogeneous; the projective
// cone in the chart is sigma(A - (A_chart / a_chart) * a).
Polynomial projectivize(const Polynomial& affine, const Point& a, int chart) {
  const int n = affine.nvars();
  std::vector<Polynomial> shift;
  shift.reserve(n);
  for (int j = 0; j < n; ++j) {
    Polynomial img = Polynomial::variable(n, j);
    img += Polynomial::constant(n, a[j]);
    shift.push_back(std::move(img));
  }
  Polynomial sigma = affine.substitute(shift);

  std::vector<Polynomial> lin;
  lin.reserve(n);
  for (int j = 0; j < n; ++j) {
    Polynomial img = Polynomial::variable(n, j);
    if (!a[j].is_zero()) {
      img -= (a[j] / a[chart]) * Polynomial::variable(n, chart);
    }
    lin.push_back(std::move(img));
  }
  return sigma.substitute(lin);
}

Polynomial linear_factor_product(int n, EdgeSubset f, const Point& a) {
  Polynomial prod = Polynomial::constant(n, 1);
  for (int j : f.indices()) {
    Polynomial factor = Polynomial::variable(n, j);
    factor -= Polynomial::constant(n, a[j]);
    prod = prod * factor;
  }
  return prod;
}

void check_point(const Configuration& w, const Point& a) {
  if (static_cast<int>(a.size()) != w.n()) {
    throw ArgumentError("point length must equal the coordinate count");
  }
}

// Derivative value along J at the point, obtained from the restriction
// correspondence instead of differentiation: the restricted configuration's
// polynomial scaled by the squared ratio of one matching pair of maximal
// minors.  Returns the symbolic value polynomial evaluated at `a`.
Rational restriction_derivative_value(const Configuration& w, EdgeSubset j, const Point& a) {
  const int ell = w.dim();
  const int size = j.count();
  std::vector<int> all_rows(ell);
  std::iota(all_rows.begin(), all_rows.end(), 0);
  if (size == ell) {
    Rational minor = det(submatrix(w.basis(), all_rows, j.indices()));
    return minor * minor;  // the derivative is this constant
  }
  auto rest = restrict_to(w, j.complement(w.n()));
  if (!rest || rest->dim() != ell - size) return 0;  // degenerate drop
  // One nonzero maximal minor of the restriction fixes the constant.
  Rational c;
  {
    std::vector<int> rest_rows(rest->dim());
    std::iota(rest_rows.begin(), rest_rows.end(), 0);
    for (EdgeSubset t : all_combinations(w.n(), ell - size)) {
      if ((t.bits & j.bits) != 0) continue;
      Rational pr = det(submatrix(rest->basis(), rest_rows, t.indices()));
      if (pr.is_zero()) continue;
      Rational pw = det(submatrix(w.basis(), all_rows, t.united(j).indices()));
      Rational ratio = pw / pr;
      c = ratio * ratio;
      break;
    }
  }
  if (c.is_zero()) throw CheckError("restriction has no nonzero maximal minor");
  return c * psi_det(*rest).eval(a);
}

}  // namespace

EvaluatedForm form_at(const Configuration& w, const Point& a) {
  check_point(w, a);
  const int ell = w.dim();
  EvaluatedForm ef;
  ef.matrix = RatMatrix(ell, ell);
  for (int i = 0; i < ell; ++i) {
    for (int j = i; j < ell; ++j) {
      Rational s = 0;
      for (int e = 0; e < w.n(); ++e) {
        if (a[e].is_zero()) continue;
        s += a[e] * w.basis().at(i, e) * w.basis().at(j, e);
      }
      ef.matrix.at(i, j) = s;
      ef.matrix.at(j, i) = s;
    }
  }
  ef.radical = kernel(ef.matrix);
  ef.corank = ef.radical.rows;
  ef.rank = ell - ef.corank;
  return ef;
}

RatMatrix ambient_radical(const Configuration& w, const EvaluatedForm& ef) {
  return matmul(ef.radical, w.basis());
}

int multiplicity_of(const Polynomial& psi, const Point& a) {
  if (psi.is_zero()) throw ArgumentError("zero polynomial has no vanishing order");
  if (static_cast<int>(a.size()) != psi.nvars()) {
    throw ArgumentError("point length must equal the variable count");
  }
  const int n = psi.nvars();
  for (int s = 0; s <= psi.degree(); ++s) {
    for (EdgeSubset f : all_combinations(n, s)) {
      if (!partial_eval(psi, f, a).is_zero()) return s;
    }
  }
  throw CheckError("no nonzero derivative up to the degree of a nonzero polynomial");
}

int multiplicity_at(const Configuration& w, const Point& a) {
  check_point(w, a);
  return multiplicity_of(psi_det(w), a);
}

TangentCone tangent_cone_taylor(const Configuration& w, const Point& a) {
  check_point(w, a);
  int chart = first_nonzero_index(a);
  if (chart < 0) throw ArgumentError("tangent cone needs a nonzero base point");
  Polynomial psi = psi_det(w);
  int m = multiplicity_of(psi, a);
  if (m == 0) throw ArgumentError("base point is not on the hypersurface");
  const int n = w.n();
  Polynomial affine(n);
  for (EdgeSubset f : all_combinations(n, m)) {
    Rational v = partial_eval(psi, f, a);
    if (v.is_zero()) continue;
    affine += v * linear_factor_product(n, f, a);
  }
  TangentCone tc;
  tc.chart = chart;
  tc.degree = m;
  tc.projective = projectivize(affine, a, chart);
  tc.affine = std::move(affine);
  return tc;
}

TangentCone tangent_cone_restriction(const Configuration& w, const Point& a) {
  check_point(w, a);
  int chart = first_nonzero_index(a);
  if (chart < 0) throw ArgumentError("tangent cone needs a nonzero base point");
  const int n = w.n();
  const int ell = w.dim();
  int m = -1;
  std::vector<std::pair<EdgeSubset, Rational>> terms;
  for (int s = 0; s <= ell && m < 0; ++s) {
    for (EdgeSubset f : all_combinations(n, s)) {
      Rational v = restriction_derivative_value(w, f, a);
      if (v.is_zero()) continue;
      if (m < 0) m = s;
      terms.emplace_back(f, v);
    }
  }
  if (m == 0) throw ArgumentError("base point is not on the hypersurface");
  if (m < 0) throw CheckError("restriction sweep found no nonzero derivative");
  Polynomial affine(n);
  for (const auto& [f, v] : terms) affine += v * linear_factor_product(n, f, a);
  TangentCone tc;
  tc.chart = chart;
  tc.degree = m;
  tc.projective = projectivize(affine, a, chart);
  tc.affine = std::move(affine);
  return tc;
}

TangentCone tangent_cone(const Configuration& w, const Point& a) {
  TangentCone t = tangent_cone_taylor(w, a);
  TangentCone r = tangent_cone_restriction(w, a);
  if (t.degree != r.degree || t.affine != r.affine || t.projective != r.projective) {
    throw CheckError("tangent cone routes disagree");
  }
  return t;
}

AnalysisReport verify_theorem(const Configuration& w, const Point& a, bool want_cone) {
  check_point(w, a);
  EvaluatedForm ef = form_at(w, a);
  AnalysisReport rep;
  rep.point = a;
  rep.rank = ef.rank;
  rep.corank = ef.corank;
  rep.multiplicity = multiplicity_at(w, a);
  rep.theorem_ok = rep.multiplicity == ef.corank;
  if (want_cone && rep.multiplicity >= 1 && first_nonzero_index(a) >= 0) {
    rep.cone = tangent_cone(w, a);
  }
  return rep;
}

std::vector<Point> sample_corank_points(const Configuration& w, int k, int count,
                                        std::uint64_t seed) {
  const int ell = w.dim();
  const int n = w.n();
  if (k < 1 || k > ell - 1) {
    throw ArgumentError("corank target must lie between 1 and dim-1");
  }
  if (count < 0) throw ArgumentError("negative sample count");
  std::mt19937_64 rng(seed);
  auto rand_int = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<int> all_rows(ell);
  std::iota(all_rows.begin(), all_rows.end(), 0);

  std::vector<Point> out;
  int budget = 200 * count + 1000;
  while (static_cast<int>(out.size()) < count) {
    if (--budget < 0) throw SamplingError("corank point sampling exhausted its retries");
    // Random column support whose span has corank exactly k inside W; its
    // left kernel is the prescribed radical R, and any point supported there
    // solves the system, so the kernel below is never trivial.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rand_int(0, i)]);
    std::vector<int> kept;
    for (int c : perm) {
      std::vector<int> cand = kept;
      cand.push_back(c);
      if (rank(submatrix(w.basis(), all_rows, cand)) <= ell - k) kept = std::move(cand);
    }
    std::sort(kept.begin(), kept.end());
    if (rank(submatrix(w.basis(), all_rows, kept)) != ell - k) continue;
    RatMatrix r = kernel(transpose(submatrix(w.basis(), all_rows, kept)));
    if (r.rows != k) continue;
    RatMatrix rb = matmul(r, w.basis());  // prescribed radical in ambient coordinates
    // R annihilates the form at a  <=>  sum_e a_e (RB)(i,e) B(j,e) = 0.
    RatMatrix sys(k * ell, n);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < ell; ++j) {
        for (int e = 0; e < n; ++e) {
          sys.at(i * ell + j, e) = rb.at(i, e) * w.basis().at(j, e);
        }
      }
    }
    RatMatrix sol = kernel(sys);
    if (sol.rows == 0) continue;
    Point a(n);
    for (int s = 0; s < sol.rows; ++s) {
      Rational c = rand_int(-5, 5);
      if (c.is_zero()) continue;
      for (int e = 0; e < n; ++e) a[e] += c * sol.at(s, e);
    }
    if (first_nonzero_index(a) < 0) continue;
    if (form_at(w, a).corank != k) continue;
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Point> sample_hypersurface_points(const Configuration& w, int count,
                                              std::uint64_t seed) {
  const int n = w.n();
  if (count < 0) throw ArgumentError("negative sample count");
  std::mt19937_64 rng(seed);
  auto rand_int = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  Polynomial psi = psi_det(w);
  std::vector<Point> out;
  int budget = 200 * count + 1000;
  while (static_cast<int>(out.size()) < count) {
    if (--budget < 0) throw SamplingError("hypersurface point sampling exhausted its retries");
    EdgeSubset support;
    for (int e = 0; e < n; ++e) {
      if (rng() & 1u) support.add(e);
    }
    if (support.count() < 2) continue;
    std::vector<int> members = support.indices();
    int pivot = members[rand_int(0, static_cast<int>(members.size()) - 1)];
    Point a(n);
    for (int e : members) {
      if (e != pivot) a[e] = rand_int(-6, 6);
    }
    // psi is linear in the pivot coordinate: psi = A_p * d + rest.
    Rational d = partial_eval(psi, EdgeSubset::of({pivot}), a);
    if (d.is_zero()) continue;
    a[pivot] = -psi.eval(a) / d;
    if (first_nonzero_index(a) < 0) continue;
    out.push_back(std::move(a));
  }
  return out;
}

SingularIdealGens singular_ideal_gens(const Configuration& w, int k) {
  const int ell = w.dim();
  const int n = w.n();
  if (k < 1 || k > ell - 1) {
    throw ArgumentError("generator order must lie between 1 and dim-1");
  }
  Polynomial psi = psi_det(w);
  SingularIdealGens out;
  out.order = k;
  out.consistent = true;
  for (EdgeSubset f : all_combinations(n, k)) {
    RestrictionPair pair;
    pair.set = f;
    pair.partial = psi.partial(f.indices());
    auto rest = restrict_to(w, f.complement(n));
    if (rest && rest->dim() == ell - k) {
      pair.restriction = psi_det(*rest);
      pair.constant = proportionality_constant(pair.partial, *pair.restriction);
      if (!pair.constant || pair.constant->is_zero() || pair.partial.is_zero()) {
        out.consistent = false;
      }
    } else {
      pair.degenerate_drop = true;
      if (!pair.partial.is_zero()) {
        out.consistent = false;
      } else {
        // The failure clause: some coordinate of the set is redundant for
        // the restriction.  Verify a witness exists.
        bool witness = false;
        for (int e : f.indices()) {
          EdgeSubset smaller = f;
          smaller.remove(e);
          auto r2 = restrict_to(w, smaller.complement(n));
          if (!rest && !r2) {
            witness = true;
            break;
          }
          if (rest && r2 && same_row_span(rest->basis(), r2->basis())) {
            witness = true;
            break;
          }
        }
        if (!witness) out.consistent = false;
      }
    }
    out.pairs.push_back(std::move(pair));
  }
  return out;
}

std::vector<std::string> generic_var_names(int ell) {
  std::vector<std::string> names;
  for (int i = 0; i < ell; ++i) names.push_back("B" + std::to_string(i + 1));
  for (int i = 0; i < ell; ++i) {
    for (int j = i + 1; j < ell; ++j) {
      names.push_back("B" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  return names;
}

namespace {

int generic_var_index(int ell, int i, int j) {
  if (i == j) return i;
  if (i > j) std::swap(i, j);
  int off = 0;
  for (int r = 0; r < i; ++r) off += ell - 1 - r;
  return ell + off + (j - i - 1);
}

}  // namespace

Polynomial generic_symmetric_det(int ell) {
  if (ell < 1) throw ArgumentError("generic determinant needs dimension at least 1");
  if (ell > 5) throw CapacityError("generic determinant capped at dimension 5");
  const int nvars = ell + ell * (ell - 1) / 2;
  std::vector<std::vector<Polynomial>> m(ell, std::vector<Polynomial>(ell, Polynomial(nvars)));
  for (int i = 0; i < ell; ++i) {
    for (int j = 0; j < ell; ++j) {
      m[i][j] = Polynomial::variable(nvars, generic_var_index(ell, i, j));
    }
  }
  return det_poly(m);
}

GenericPullback generic_det_pullback(const Configuration& w) {
  const int ell = w.dim();
  GenericPullback out;
  out.generic = generic_symmetric_det(ell);
  out.names = generic_var_names(ell);
  auto form = symbolic_form(w);
  std::vector<Polynomial> images;
  images.resize(ell + ell * (ell - 1) / 2, Polynomial(w.n()));
  for (int i = 0; i < ell; ++i) {
    for (int j = i; j < ell; ++j) {
      images[generic_var_index(ell, i, j)] = form[i][j];
    }
  }
  out.pullback_matches = out.generic.substitute(images) == psi_det(w);
  return out;
}

}  // namespace confpoly
