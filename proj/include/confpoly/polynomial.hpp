#ifndef CONFPOLY_POLYNOMIAL_HPP
#define CONFPOLY_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "confpoly/rational.hpp"
#include "confpoly/subset.hpp"

namespace confpoly {

/// Power product of variables, stored as sorted (variable, exponent) pairs
/// with strictly positive exponents.  The empty monomial is the constant 1.
class Monomial {
 public:
  using Entry = std::pair<int, int>;  // (variable index, exponent)

  Monomial() = default;
  static Monomial variable(int v, int exp = 1);
  static Monomial from_entries(std::vector<Entry> entries);
  /// Square-free product of the variables in the subset.
  static Monomial from_subset(EdgeSubset s);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_constant() const { return entries_.empty(); }
  int degree() const;
  int exponent_of(int v) const;
  int max_variable() const { return entries_.empty() ? -1 : entries_.back().first; }

  Monomial times(const Monomial& o) const;

  /// Canonical text, e.g. "A1*A3^2"; "1" for the constant monomial.
  /// `names` overrides the default A<i+1> naming when provided.
  std::string str(const std::vector<std::string>* names = nullptr) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<Entry> entries_;
};

/// Graded lexicographic comparison: first by total degree, ties broken
/// lexicographically with lower variable indices more significant.
bool grlex_less(const Monomial& a, const Monomial& b);

struct MonomialOrderDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

/// Sparse polynomial over the rationals in variables indexed 0..nvars-1,
/// rendered as A1..An by default.
/// Terms are kept in descending graded-lex order, which fixes the canonical
/// text rendering and makes iteration order deterministic everywhere.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrderDesc>;

  explicit Polynomial(int nvars = 0);
  static Polynomial constant(int nvars, Rational c);
  static Polynomial variable(int nvars, int v);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Total degree; the zero polynomial reports 0.
  int degree() const;
  bool is_homogeneous() const;
  int max_exponent() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Rational eval(const std::vector<Rational>& point) const;
  Polynomial partial(int v) const;
  /// Iterated partial derivative; repeated indices differentiate repeatedly.
  Polynomial partial(const std::vector<int>& vars) const;
  /// Substitutes images[v] for variable v; all images must share a variable
  /// count, which becomes the variable count of the result.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  /// Canonical text: terms in descending graded-lex order joined with
  /// " + " / " - ", rational coefficients as num/den, unit coefficients
  /// omitted next to a variable part.  The zero polynomial renders as "0".
  std::string str(const std::vector<std::string>* names = nullptr) const;

 private:
  int nvars_;
  TermMap terms_;
};

/// The constant C with p == C * q when p and q are exactly proportional and
/// q is nonzero; 1 when both are zero; nothing otherwise.
std::optional<Rational> proportionality_constant(const Polynomial& p, const Polynomial& q);

}  // namespace confpoly

#endif
