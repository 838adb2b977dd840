#include <doctest.h>

#include "gss/rational.hpp"

using gss::GaussianRational;
using gss::Rational;

TEST_CASE("rational arithmetic reduces and normalizes") {
  Rational a(2, 4);
  CHECK(a == Rational(1, 2));
  CHECK((a + Rational(1, 3)) == Rational(5, 6));
  CHECK((a * Rational(4)) == Rational(2));
  CHECK((Rational(1) / Rational(-3)) == Rational(-1, 3));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(7).str() == "7");
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5, 2) < Rational(0));
  CHECK(Rational(2, 3).abs() == Rational(2, 3));
  CHECK(Rational(-2, 3).abs() == Rational(2, 3));
}

TEST_CASE("rational overflow is detected, never wrapped") {
  long long huge = 3037000499LL;  // ~sqrt(2^63)
  Rational h(huge);
  // squaring twice overflows 128 bits
  Rational h2 = h * h;
  CHECK_THROWS_AS(h2 * h2 * h2, gss::ExactOverflow);
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("gaussian rational field operations") {
  GaussianRational i(Rational(0), Rational(1));
  CHECK((i * i) == GaussianRational(Rational(-1)));
  GaussianRational z(Rational(1, 2), Rational(-3, 4));
  CHECK(z.conj() == GaussianRational(Rational(1, 2), Rational(3, 4)));
  CHECK(z.abs2() == Rational(1, 4) + Rational(9, 16));
  GaussianRational w = z / z;
  CHECK(w == GaussianRational(Rational(1)));
  CHECK((z * z.conj()) == GaussianRational(z.abs2()));
}

TEST_CASE("gaussian rational formatting") {
  CHECK(GaussianRational(Rational(1, 2), Rational(3)).str() == "1/2+3i");
  CHECK(GaussianRational(Rational(0), Rational(-1)).str() == "-i");
  CHECK(GaussianRational(Rational(2)).str() == "2");
}
