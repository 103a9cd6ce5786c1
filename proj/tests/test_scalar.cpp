#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qspair/scalar.hpp"

using namespace qspair;

namespace {

std::mt19937 rng(20240817);

Scalar random_scalar() {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3), shift(-3, 3);
  IntPoly num, den;
  for (int k = deg(rng); k >= 0; --k)
    num += IntPoly::monomial(BigInt(coef(rng)), k);
  den = IntPoly::monomial(BigInt(1), 0);
  Scalar s = Scalar::of_polys(num, den) * Scalar::v_power(shift(rng));
  return s;
}

}  // namespace

TEST_CASE("quantum integers against frozen Laurent forms") {
  CHECK(Scalar::qint(0).is_zero());
  CHECK(Scalar::qint(1).is_one());
  CHECK(Scalar::qint(2).str() == "q + q^-1");
  CHECK(Scalar::qint(3).str() == "q^2 + 1 + q^-2");
  CHECK(Scalar::qint(2, 2).str() == "q^2 + q^-2");
  CHECK(Scalar::qint(2, 3).str() == "q^3 + q^-3");
  CHECK(Scalar::qint(-2) == -Scalar::qint(2));
  CHECK(Scalar::qint(2, 3) != Scalar::qint(2));
}

TEST_CASE("factorial recurrence [n][n-1]! = [n]!") {
  for (long d = 1; d <= 3; ++d) {
    for (long n = 1; n <= 8; ++n) {
      CHECK(Scalar::qint(n, d) * Scalar::qfact(n - 1, d) ==
            Scalar::qfact(n, d));
    }
  }
}

TEST_CASE("Gaussian binomial symmetry and integrality") {
  for (long a = 0; a <= 6; ++a) {
    for (long n = 0; n <= a; ++n) {
      Scalar lhs = Scalar::qbinom(a, n);
      CHECK(lhs == Scalar::qbinom(a, a - n));
      // Laurent polynomial: denominator is a pure v-power.
      CHECK(lhs.den().is_monomial());
      // Specializes to the ordinary binomial at v = 1.
      Rational val = lhs.evaluate_at(Rational(1));
      long expect = 1;
      for (long t = 0; t < n; ++t) expect = expect * (a - t) / (t + 1);
      CHECK(val == Rational(expect));
    }
  }
  CHECK(Scalar::qbinom(2, 1, 2) == Scalar::qint(2, 2));
}

TEST_CASE("negative upper index binomial") {
  // [-1 over n] = (-1)^n q^{-n(n+1)/2} ... check against the defining product.
  for (long n = 0; n <= 4; ++n) {
    Scalar prod(1);
    for (long t = 0; t < n; ++t)
      prod *= Scalar::qint(-1 - t) / Scalar::qint(t + 1);
    CHECK(Scalar::qbinom(-1, n) == prod);
  }
}

TEST_CASE("canonical form: arithmetic round trips") {
  for (int trial = 0; trial < 200; ++trial) {
    Scalar a = random_scalar(), b = random_scalar();
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("canonical form is unique: a - b == 0 iff identical") {
  Scalar a = Scalar::qint(2) * Scalar::qint(3);
  Scalar b = Scalar::qint(3) * Scalar::qint(2);
  CHECK(a == b);
  Scalar c = (Scalar::q_power(2) - Scalar::q_power(-2)) /
             (Scalar::q_power(1) - Scalar::q_power(-1));
  CHECK(c == Scalar::qint(2));
}

TEST_CASE("evaluation at rational points") {
  Scalar two_q = Scalar::qint(2);
  CHECK(two_q.evaluate_at(Rational(1)) == Rational(2));
  Scalar sq = (Scalar::q_power(1) - Scalar::q_power(-1)) *
              (Scalar::q_power(1) - Scalar::q_power(-1));
  CHECK(sq.evaluate_at(Rational(1)) == Rational(0));
  Scalar inv = (Scalar::q_power(1) - Scalar::q_power(-1)).inverse();
  CHECK_THROWS_AS(inv.evaluate_at(Rational(1)), PoleError);
  CHECK(Scalar::v_power(-2).evaluate_at(Rational(1, 2)) == Rational(4));
}

TEST_CASE("division guards") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionError);
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionError);
}

TEST_CASE("rendering") {
  CHECK(Scalar(0).str() == "0");
  CHECK(Scalar(1).str() == "1");
  CHECK(Scalar(-1).str() == "-1");
  CHECK(Scalar::from_fraction(BigInt(3), BigInt(2)).str() == "3/2");
  CHECK(Scalar::v_power(-3).str() == "v^-3");
  CHECK(Scalar::q_power(2).str() == "q^2");
  CHECK((Scalar::qint(2) * Scalar::from_fraction(BigInt(1), BigInt(2))).str() ==
        "1/2*q + 1/2*q^-1");
  Scalar odd = Scalar::v_power(1) + Scalar::v_power(-1);
  CHECK(odd.str() == "v + v^-1");
}
