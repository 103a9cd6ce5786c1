#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qspair/errors.hpp"

namespace qspair {

using BigInt = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial over Z. Invariant: the coefficient vector is
// either empty (the zero polynomial) or has a nonzero leading entry.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(const BigInt& constant);
  explicit IntPoly(long constant);
  static IntPoly monomial(BigInt coef, int deg);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  // Exactly one nonzero coefficient.
  bool is_monomial() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Lowest power with nonzero coefficient; -1 for the zero polynomial.
  int trailing_degree() const;
  const BigInt& coeff(int k) const;
  const BigInt& leading() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  // Multiply by x^k, k >= 0.
  IntPoly shifted(int k) const;
  // Exact division; throws Error if the division leaves a remainder.
  IntPoly divexact(const IntPoly& d) const;
  // gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const;
  // Polynomial gcd over Z (content included), positive leading coefficient.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  Rational eval(const Rational& x) const;

 private:
  std::vector<BigInt> c_;
  void trim();
};

// Element of Q(v), v^2 = q. Canonical form: num/den with den nonzero,
// gcd(num, den) = 1 over Z[v] (integer content included), and den with
// positive leading coefficient. Negative powers of v live in the denominator;
// zero is 0/1. Equal scalars have equal representations, so operator== is
// plain component comparison.
class Scalar {
 public:
  Scalar() : num_(), den_(IntPoly(1)) {}
  Scalar(long n) : num_(IntPoly(n)), den_(IntPoly(1)) {}
  explicit Scalar(const BigInt& n) : num_(IntPoly(n)), den_(IntPoly(1)) {}
  static Scalar from_fraction(const BigInt& p, const BigInt& q);
  static Scalar of_polys(IntPoly num, IntPoly den);
  // v^k, any k in Z.
  static Scalar v_power(long k);
  // q^k = v^{2k}.
  static Scalar q_power(long k) { return v_power(2 * k); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool operator==(const Scalar& o) const = default;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;

  // Quantum integer [n]_{q^d} = (q^{dn} - q^{-dn})/(q^d - q^{-d}).
  static Scalar qint(long n, long d = 1);
  // [n]_{q^d}! (n >= 0).
  static Scalar qfact(long n, long d = 1);
  // Gaussian binomial [a over n]_{q^d}, a in Z, n >= 0.
  static Scalar qbinom(long a, long n, long d = 1);

  // Substitute a rational value for v. Throws PoleError when the denominator
  // vanishes at the point.
  Rational evaluate_at(const Rational& v_value) const;

  // Canonical rendering, parseable by the expression grammar. Uses q-powers
  // when every exponent of v is even, v-powers otherwise; a non-monomial
  // denominator renders as (num)/(den).
  std::string str() const;

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

 private:
  IntPoly num_, den_;
  void canonicalize();
};

namespace detail {

// Laurent rendering of p / (den_int * v^shift); q-powers when as_q.
std::string render_laurent(const IntPoly& p, const BigInt& den_int, int shift,
                           bool as_q);
bool all_even_exponents(const IntPoly& p, int shift);
int nonzero_term_count(const IntPoly& p);

}  // namespace detail

}  // namespace qspair
