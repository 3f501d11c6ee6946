#include <doctest.h>

#include "confpoly/rational.hpp"

using confpoly::Rational;

TEST_CASE("rationals normalize on construction") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(-3, 6).str() == "-1/2");
  CHECK_THROWS_AS(Rational(1, 0), confpoly::ArgumentError);
}

TEST_CASE("arithmetic matches hand values") {
  Rational a(1, 6), b(3, 4);
  CHECK((a + b).str() == "11/12");
  CHECK((a - b).str() == "-7/12");
  CHECK((a * b).str() == "1/8");
  CHECK((a / b).str() == "2/9");
  CHECK((-b).str() == "-3/4");
  CHECK_THROWS_AS(a / Rational(0), confpoly::ArgumentError);

  Rational acc = 0;
  for (int i = 1; i <= 10; ++i) acc += Rational(1, i);
  CHECK(acc == Rational(7381, 2520));  // harmonic number H_10
}

TEST_CASE("comparisons cross-multiply correctly") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 6) <= Rational(1, 3));
  CHECK(Rational(5, 7) > Rational(12, 17));
  CHECK(Rational(-7, 2) != Rational(7, 2));
}

TEST_CASE("parse accepts sign, integer, and fraction forms") {
  auto ok = [](const char* s) {
    auto r = Rational::parse(s);
    REQUIRE(r.has_value());
    return r->str();
  };
  CHECK(ok("12") == "12");
  CHECK(ok("-12") == "-12");
  CHECK(ok("+3/6") == "1/2");
  CHECK(ok("-10/4") == "-5/2");
  CHECK(ok("0/9") == "0");

  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1/-2", "1.5", "2a", " 1", "3/4/5"}) {
    CAPTURE(bad);
    CHECK_FALSE(Rational::parse(bad).has_value());
  }
}

TEST_CASE("abs and pow") {
  CHECK(confpoly::abs(Rational(-5, 3)) == Rational(5, 3));
  CHECK(confpoly::pow(Rational(-2, 3), 0) == Rational(1));
  CHECK(confpoly::pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("big values stay exact") {
  Rational big = 1;
  for (int i = 0; i < 40; ++i) big *= Rational(10);
  std::string s = big.str();
  CHECK(s.size() == 41);  // 1 followed by forty zeros
  CHECK(s[0] == '1');
  CHECK(s.find_first_not_of('0', 1) == std::string::npos);
  std::string nines = (big - Rational(1)).str();
  CHECK(nines.size() == 40);
  CHECK(nines.find_first_not_of('9') == std::string::npos);
  CHECK(big / big == Rational(1));
  CHECK(Rational(1) / big == Rational::parse("1/" + s).value());
}
