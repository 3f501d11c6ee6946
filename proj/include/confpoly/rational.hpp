#ifndef CONFPOLY_RATIONAL_HPP
#define CONFPOLY_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "confpoly/errors.hpp"

namespace confpoly {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.  Every operation in this library is exact; there is
/// deliberately no floating-point conversion anywhere.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit by design
  explicit Rational(BigInt n) : num_(std::move(n)) {}
  Rational(BigInt n, BigInt d);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Renders as "num" for integers, "num/den" otherwise.
  std::string str() const;

  /// Accepts an optional sign, a decimal integer, and an optional "/den"
  /// suffix with positive denominator.  Returns nothing on malformed input.
  static std::optional<Rational> parse(std::string_view text);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exp);

}  // namespace confpoly

#endif
