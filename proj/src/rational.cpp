#include "confpoly/rational.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cctype>

namespace confpoly {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw ArgumentError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw ArgumentError("division of rational by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s, BigInt* out) -> bool {
    if (s.empty()) return false;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) return false;
    BigInt v = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
      v = v * 10 + (s[i] - '0');
    }
    *out = neg ? BigInt(-v) : v;
    return true;
  };

  auto slash = text.find('/');
  BigInt n, d = 1;
  if (slash == std::string_view::npos) {
    if (!parse_int(text, &n)) return std::nullopt;
  } else {
    if (!parse_int(text.substr(0, slash), &n)) return std::nullopt;
    if (!parse_int(text.substr(slash + 1), &d)) return std::nullopt;
    if (d <= 0) return std::nullopt;
  }
  return Rational(std::move(n), std::move(d));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exp) {
  Rational acc = 1;
  for (unsigned i = 0; i < exp; ++i) acc *= base;
  return acc;
}

}  // namespace confpoly
