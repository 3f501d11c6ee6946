#ifndef CONFPOLY_SINGULAR_HPP
#define CONFPOLY_SINGULAR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "confpoly/configuration.hpp"

namespace confpoly {

using Point = std::vector<Rational>;

/// The bilinear form of the configuration evaluated at a point, in the
/// configuration's basis: matrix = B diag(a) B^T.
struct EvaluatedForm {
  RatMatrix matrix;
  int rank = 0;
  int corank = 0;
  RatMatrix radical;  // kernel rows in basis coordinates
};

EvaluatedForm form_at(const Configuration& w, const Point& a);

/// Radical vectors expressed in ambient coordinates (rows span rad B(a)|_W).
RatMatrix ambient_radical(const Configuration& w, const EvaluatedForm& ef);

/// Order of vanishing of psi at the point: the least s such that some s-fold
/// partial derivative is nonzero there.  Multilinearity confines the search
/// to square-free derivative multi-indices.
int multiplicity_of(const Polynomial& psi, const Point& a);
int multiplicity_at(const Configuration& w, const Point& a);

/// Projective and affine tangent cones of the hypersurface at a singular (or
/// smooth) point of it.  The chart is the first coordinate of the point that
/// is nonzero.
struct TangentCone {
  int chart = -1;
  int degree = 0;
  Polynomial affine{0};
  Polynomial projective{0};
};

/// Lowest-degree Taylor part: sum over square-free derivative sets of size
/// equal to the multiplicity.
TangentCone tangent_cone_taylor(const Configuration& w, const Point& a);
/// Same cone with every derivative evaluated through coordinate restrictions
/// of the configuration and one Pluecker ratio per derivative set; no
/// polynomial derivative is taken anywhere on this route.
TangentCone tangent_cone_restriction(const Configuration& w, const Point& a);
/// Runs both routes and insists on exact agreement.
TangentCone tangent_cone(const Configuration& w, const Point& a);

struct AnalysisReport {
  Point point;
  int rank = 0;
  int corank = 0;
  int multiplicity = 0;
  bool theorem_ok = false;  // multiplicity equals corank
  std::optional<TangentCone> cone;
};

/// Evaluates the form, the multiplicity, and their predicted equality at a
/// point; optionally attaches the tangent cone (cross-checked both ways).
AnalysisReport verify_theorem(const Configuration& w, const Point& a, bool want_cone = false);

/// Nonzero rational points whose evaluated form has corank exactly k,
/// 1 <= k <= dim-1.  A point is found by prescribing a k-dimensional radical
/// R inside W and solving the exact linear system "R annihilates the form";
/// R itself is read off the left kernel of a random column subset chosen so
/// the system is guaranteed nontrivial.  Fresh randomness on every retry.
std::vector<Point> sample_corank_points(const Configuration& w, int k, int count,
                                        std::uint64_t seed);

/// Nonzero rational points with psi(a) = 0, obtained by zeroing a random
/// coordinate subset, fixing random values elsewhere, and solving the last
/// coordinate from the (multilinear, hence linear in it) equation psi = 0.
std::vector<Point> sample_hypersurface_points(const Configuration& w, int count,
                                              std::uint64_t seed);

/// One derivative set F of the singular-locus generators, paired with the
/// restriction route for the same polynomial.
struct RestrictionPair {
  EdgeSubset set;
  Polynomial partial{0};                   // derivative of psi along the set
  std::optional<Polynomial> restriction;   // polynomial of the restricted configuration
  std::optional<Rational> constant;        // partial == constant * restriction
  bool degenerate_drop = false;            // dimension dropped by less than |set|
};

/// Generators of the higher-singularity ideal at order k: all square-free
/// k-fold derivatives of psi, each classified against its restriction.
/// `consistent` records that every pair either matched with a nonzero
/// constant, or had zero derivative together with a degenerate dimension
/// drop (witnessed by a redundant coordinate in the set).
struct SingularIdealGens {
  int order = 0;
  std::vector<RestrictionPair> pairs;
  bool consistent = false;
};

SingularIdealGens singular_ideal_gens(const Configuration& w, int k);

/// Determinant of the generic symmetric matrix in variables B1..Bl (diagonal)
/// and Bij (off-diagonal, i < j).
Polynomial generic_symmetric_det(int ell);
std::vector<std::string> generic_var_names(int ell);

struct GenericPullback {
  Polynomial generic{0};
  std::vector<std::string> names;
  bool pullback_matches = false;  // substituting the symbolic form recovers psi
};

GenericPullback generic_det_pullback(const Configuration& w);

}  // namespace confpoly

#endif
