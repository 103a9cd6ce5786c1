#include "qspair/scalar.hpp"

#include <algorithm>
#include <utility>

namespace qspair {

namespace {

int sign_of(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }

BigInt int_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

IntPoly::IntPoly(const BigInt& constant) {
  if (constant != 0) c_.push_back(constant);
}

IntPoly::IntPoly(long constant) {
  if (constant != 0) c_.push_back(BigInt(constant));
}

IntPoly IntPoly::monomial(BigInt coef, int deg) {
  IntPoly p;
  if (coef != 0) {
    p.c_.assign(static_cast<std::size_t>(deg) + 1, BigInt(0));
    p.c_.back() = std::move(coef);
  }
  return p;
}

bool IntPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

bool IntPoly::is_monomial() const {
  if (c_.empty()) return false;
  for (std::size_t k = 0; k + 1 < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

int IntPoly::trailing_degree() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

const BigInt& IntPoly::coeff(int k) const {
  static const BigInt zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<std::size_t>(k)];
}

const BigInt& IntPoly::leading() const {
  static const BigInt zero(0);
  return c_.empty() ? zero : c_.back();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // A monomial factor turns the convolution into one shifted, scaled copy.
  if (a.is_monomial()) {
    IntPoly r = b.shifted(a.degree());
    if (a.leading() != 1)
      for (auto& x : r.c_)
        if (x != 0) x *= a.leading();
    return r;
  }
  if (b.is_monomial()) {
    IntPoly r = a.shifted(b.degree());
    if (b.leading() != 1)
      for (auto& x : r.c_)
        if (x != 0) x *= b.leading();
    return r;
  }
  IntPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero() || k == 0) return k >= 0 ? *this : *this;
  IntPoly r;
  if (k > 0) {
    r.c_.assign(c_.size() + static_cast<std::size_t>(k), BigInt(0));
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
  } else {
    int down = -k;
    if (trailing_degree() < down) throw Error("inexact power shift");
    r.c_.assign(c_.begin() + down, c_.end());
  }
  return r;
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
  if (d.is_zero()) throw DivisionError("polynomial division by zero");
  if (is_zero()) return {};
  if (degree() < d.degree()) throw Error("inexact polynomial division");
  std::vector<BigInt> q(static_cast<std::size_t>(degree() - d.degree()) + 1);
  std::vector<BigInt> r = c_;
  const BigInt& dl = d.leading();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    BigInt& rl = r[static_cast<std::size_t>(k + d.degree())];
    if (rl == 0) continue;
    if (!mpz_divisible_p(rl.get_mpz_t(), dl.get_mpz_t()))
      throw Error("inexact polynomial division");
    BigInt qk;
    mpz_divexact(qk.get_mpz_t(), rl.get_mpz_t(), dl.get_mpz_t());
    for (int j = 0; j < d.degree(); ++j)
      r[static_cast<std::size_t>(k + j)] -= qk * d.coeff(j);
    rl = 0;
    q[static_cast<std::size_t>(k)] = std::move(qk);
  }
  for (const auto& x : r)
    if (x != 0) throw Error("inexact polynomial division");
  IntPoly out;
  out.c_ = std::move(q);
  out.trim();
  return out;
}

BigInt IntPoly::content() const {
  BigInt g(0);
  for (const auto& x : c_) {
    if (x == 0) continue;
    g = int_gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::gcd(const IntPoly& a0, const IntPoly& b0) {
  auto positive = [](IntPoly p) {
    if (!p.is_zero() && sign_of(p.leading()) < 0) p = -p;
    return p;
  };
  if (a0.is_zero()) return positive(b0);
  if (b0.is_zero()) return positive(a0);
  BigInt ca = a0.content(), cb = b0.content();
  IntPoly a = a0.divexact(IntPoly(ca));
  IntPoly b = b0.divexact(IntPoly(cb));
  if (a.degree() < b.degree()) std::swap(a, b);
  // Primitive pseudo-remainder sequence.
  while (!b.is_zero()) {
    IntPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      BigInt rl = r.leading();
      IntPoly t = b.shifted(r.degree() - b.degree());
      r = r * IntPoly(b.leading()) - t * IntPoly(rl);
    }
    a = std::move(b);
    if (r.is_zero()) {
      b = IntPoly();
    } else {
      b = r.divexact(IntPoly(r.content()));
    }
  }
  return positive(std::move(a)) * IntPoly(int_gcd(ca, cb));
}

Rational IntPoly::eval(const Rational& x) const {
  Rational r(0);
  for (int k = degree(); k >= 0; --k) {
    r = r * x + Rational(coeff(k));
  }
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------

Scalar Scalar::of_polys(IntPoly num, IntPoly den) {
  Scalar s;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.canonicalize();
  return s;
}

Scalar Scalar::from_fraction(const BigInt& p, const BigInt& q) {
  return of_polys(IntPoly(p), IntPoly(q));
}

Scalar Scalar::v_power(long k) {
  Scalar s;
  if (k >= 0) {
    s.num_ = IntPoly::monomial(BigInt(1), static_cast<int>(k));
    s.den_ = IntPoly(1);
  } else {
    s.num_ = IntPoly(1);
    s.den_ = IntPoly::monomial(BigInt(1), static_cast<int>(-k));
  }
  return s;
}

void Scalar::canonicalize() {
  if (den_.is_zero()) throw DivisionError("scalar with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  if (den_.is_one()) return;
  // Common v-powers.
  int t = std::min(num_.trailing_degree(), den_.trailing_degree());
  if (t > 0) {
    num_ = num_.shifted(-t);
    den_ = den_.shifted(-t);
    if (den_.is_one()) return;
  }
  if (num_.is_monomial() || den_.is_monomial()) {
    BigInt cd = den_.content();
    BigInt g = cd == 1 ? cd : int_gcd(num_.content(), cd);
    if (g != 1) {
      num_ = num_.divexact(IntPoly(g));
      den_ = den_.divexact(IntPoly(g));
    }
  } else {
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  if (sign_of(den_.leading()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    num_ = -num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    num_ = IntPoly();
    den_ = IntPoly(1);
    return *this;
  }
  num_ = num_ * o.num_;
  if (o.den_.is_one()) {
    if (den_.is_one()) return *this;  // num over 1 is already canonical
  } else {
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionError("scalar division by zero");
  if (is_zero()) return *this;
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionError("inverse of zero scalar");
  Scalar r;
  r.num_ = den_;
  r.den_ = num_;
  if (sign_of(r.den_.leading()) < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Scalar Scalar::qint(long n, long d) {
  if (d < 1) throw Error("quantum integer needs d >= 1");
  Scalar num = q_power(d * n) - q_power(-d * n);
  Scalar den = q_power(d) - q_power(-d);
  return num / den;
}

Scalar Scalar::qfact(long n, long d) {
  if (n < 0) throw Error("quantum factorial of negative argument");
  Scalar r(1);
  for (long k = 2; k <= n; ++k) r *= qint(k, d);
  return r;
}

Scalar Scalar::qbinom(long a, long n, long d) {
  if (n < 0) throw Error("quantum binomial with negative lower index");
  Scalar r(1);
  for (long s = 1; s <= n; ++s) {
    r *= qint(a - n + s, d);
    r /= qint(s, d);
  }
  return r;
}

Rational Scalar::evaluate_at(const Rational& v_value) const {
  Rational d = den_.eval(v_value);
  if (d == 0)
    throw PoleError("pole at v = " + v_value.get_str());
  Rational n = num_.eval(v_value);
  Rational r = n / d;
  r.canonicalize();
  return r;
}

namespace detail {

// Renders sum of coef/denom_int * x^(deg - shift) terms; x is "q" or "v".
std::string render_laurent(const IntPoly& p, const BigInt& den_int, int shift,
                           bool as_q) {
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& a = p.coeff(k);
    if (a == 0) continue;
    BigInt g = [&] {
      BigInt gg;
      mpz_gcd(gg.get_mpz_t(), a.get_mpz_t(), den_int.get_mpz_t());
      return gg;
    }();
    BigInt top = a / g, bot = den_int / g;
    bool neg = sign_of(top) < 0;
    if (neg) top = -top;
    int e = k - shift;
    if (as_q) e /= 2;
    std::string piece;
    bool coef_is_unit = (top == 1 && bot == 1);
    if (!coef_is_unit || e == 0) {
      piece = top.get_str();
      if (bot != 1) piece += "/" + bot.get_str();
    }
    if (e != 0) {
      if (!piece.empty()) piece += "*";
      piece += as_q ? "q" : "v";
      if (e != 1) piece += "^" + std::to_string(e);
    }
    if (first) {
      out = neg ? "-" + piece : piece;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += piece;
    }
  }
  return out.empty() ? "0" : out;
}

bool all_even_exponents(const IntPoly& p, int shift) {
  for (int k = p.degree(); k >= 0; --k)
    if (p.coeff(k) != 0 && (k - shift) % 2 != 0) return false;
  return true;
}

int nonzero_term_count(const IntPoly& p) {
  int n = 0;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) ++n;
  return n;
}

}  // namespace detail

std::string Scalar::str() const {
  if (is_zero()) return "0";
  if (den_.is_monomial()) {
    int shift = den_.degree();
    bool as_q = detail::all_even_exponents(num_, shift);
    return detail::render_laurent(num_, den_.leading(), shift, as_q);
  }
  bool as_q = detail::all_even_exponents(num_, 0) &&
              detail::all_even_exponents(den_, 0);
  std::string ns = detail::render_laurent(num_, BigInt(1), 0, as_q);
  std::string ds = detail::render_laurent(den_, BigInt(1), 0, as_q);
  if (detail::nonzero_term_count(num_) > 1) ns = "(" + ns + ")";
  ds = "(" + ds + ")";
  return ns + "/" + ds;
}

}  // namespace qspair
