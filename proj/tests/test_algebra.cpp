#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qspair/algebra.hpp"
#include "qspair/budget.hpp"
#include "qspair/expr.hpp"

using namespace qspair;

namespace {

const Algebra& a1() {
  static Algebra alg(RootDatum::simple(LieType::A, 1));
  return alg;
}
const Algebra& a2() {
  static Algebra alg(RootDatum::simple(LieType::A, 2));
  return alg;
}
const Algebra& b2() {
  static Algebra alg(RootDatum::simple(LieType::B, 2));
  return alg;
}

std::mt19937 rng(67);

FreeWord random_word(const Algebra& alg, int len) {
  std::uniform_int_distribution<int> kind(0, 3), node(0, alg.rank() - 1);
  FreeWord w;
  for (int t = 0; t < len; ++t) {
    auto k = static_cast<GenKind>(kind(rng) * 0x10);
    w.push_back(free_letter(k, node(rng)));
  }
  return w;
}

Element random_element(const Algebra& alg, int words, int len) {
  std::uniform_int_distribution<int> length(0, len), coef(-3, 3);
  Element out(&alg);
  for (int t = 0; t < words; ++t)
    out.add_term(random_word(alg, length(rng)), Scalar(coef(rng)));
  return out;
}

NormalElement kinv(const Algebra& alg, int i) { return alg.K(i, -1); }

}  // namespace

TEST_CASE("cross relation: nf(E1*F1)") {
  const Algebra& alg = a1();
  Element x = alg.free_gen(GenKind::E, 0) * alg.free_gen(GenKind::F, 0);
  NormalElement n = alg.nf(x);
  Scalar inv = (Scalar::q_power(1) - Scalar::q_power(-1)).inverse();
  NormalElement expected =
      alg.mul(alg.F(0), alg.E(0)) + inv * (alg.K(0, 1) - alg.K(0, -1));
  CHECK(n == expected);
  CHECK(alg.str(n) == "F1*E1 + (K1 - K1^-1)/(q - q^-1)");
}

TEST_CASE("K commutation: nf(E1*K1)") {
  const Algebra& alg = a1();
  Element x = alg.free_gen(GenKind::E, 0) * alg.free_gen(GenKind::Kplus, 0);
  NormalElement n = alg.nf(x);
  CHECK(n == Scalar::q_power(-2) * alg.mul(alg.K(0), alg.E(0)));
  CHECK(alg.str(n) == "q^-2*K1*E1");
}

TEST_CASE("Serre reduction: nf(E2*E1*E1) in A2") {
  const Algebra& alg = a2();
  Element x = alg.free_gen(GenKind::E, 1) * alg.free_gen(GenKind::E, 0) *
              alg.free_gen(GenKind::E, 0);
  NormalElement n = alg.nf(x);
  NormalElement expected =
      Scalar::qint(2) * alg.mul(alg.mul(alg.E(0), alg.E(1)), alg.E(0)) -
      alg.mul(alg.mul(alg.E(0), alg.E(0)), alg.E(1));
  CHECK(n == expected);
  CHECK(alg.str(n) == "(q + q^-1)*E1*E2*E1 - E1^2*E2");
}

TEST_CASE("naive reducer agrees with the pipeline and its trace replays") {
  for (const Algebra* alg : {&a2(), &b2()}) {
    for (int trial = 0; trial < 30; ++trial) {
      Element x(alg);
      x.add_term(random_word(*alg, 6), Scalar(1));
      std::vector<Element> steps;
      Element naive = alg->naive_normal_form(x, &steps);
      CHECK(naive == alg->normal_form(x));
      Element recon = naive;
      for (const Element& d : steps) recon += d;
      CHECK(recon == x);
    }
  }
}

TEST_CASE("normal form is idempotent and linear") {
  for (int trial = 0; trial < 20; ++trial) {
    const Algebra& alg = a2();
    Element x = random_element(alg, 3, 5);
    NormalElement n = alg.nf(x);
    CHECK(alg.nf(n.to_free()) == n);
    Element y = random_element(alg, 2, 4);
    CHECK(alg.nf(x + y) == alg.nf(x) + alg.nf(y));
  }
}

TEST_CASE("multiplication is associative after reduction") {
  const Algebra& alg = b2();
  for (int trial = 0; trial < 10; ++trial) {
    NormalElement a = alg.nf(random_element(alg, 2, 3));
    NormalElement b = alg.nf(random_element(alg, 2, 3));
    NormalElement c = alg.nf(random_element(alg, 2, 2));
    CHECK(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)));
  }
}

TEST_CASE("homomorphism sanity: nf(a*b) = nf(nf(a)*nf(b))") {
  for (const Algebra* alg : {&a2(), &b2()}) {
    for (int trial = 0; trial < 15; ++trial) {
      Element a = random_element(*alg, 2, 4);
      Element b = random_element(*alg, 2, 3);
      CHECK(alg->nf(a * b) ==
            alg->mul(alg->nf(a), alg->nf(b)));
    }
  }
}

TEST_CASE("Hopf axioms on generators") {
  const Algebra& alg = a2();
  std::vector<NormalElement> gens = {alg.E(0), alg.E(1), alg.F(0), alg.F(1),
                                     alg.K(0), alg.K(0, -1), alg.K(1)};
  for (const NormalElement& x : gens) {
    TensorElement d = alg.coproduct(x);
    // (counit (x) id) o coproduct = id
    NormalElement left(&alg);
    for (const auto& [tm, c] : d.terms()) {
      if (tm.a.f.empty() && tm.a.e.empty()) left.add(tm.b, c);
    }
    CHECK(left == x);
    // m o (antipode (x) id) o coproduct = counit * 1
    NormalElement conv(&alg);
    for (const auto& [tm, c] : d.terms()) {
      NormalElement sa(&alg), tb(&alg);
      sa.add(tm.a, Scalar(1));
      tb.add(tm.b, Scalar(1));
      conv += c * alg.mul(alg.antipode(sa), tb);
    }
    CHECK(conv == alg.scalar(alg.counit(x)));
  }
}

TEST_CASE("antipode closed forms") {
  const Algebra& alg = a2();
  CHECK(alg.antipode(alg.E(0)) == -alg.mul(kinv(alg, 0), alg.E(0)));
  CHECK(alg.antipode(alg.F(0)) == -alg.mul(alg.F(0), alg.K(0)));
  CHECK(alg.antipode(alg.K(0)) == alg.K(0, -1));
  // Antihomomorphism on a product.
  NormalElement x = alg.mul(alg.E(0), alg.F(1));
  CHECK(alg.antipode(x) ==
        alg.mul(alg.antipode(alg.F(1)), alg.antipode(alg.E(0))));
}

TEST_CASE("coproduct examples") {
  const Algebra& alg = a1();
  CHECK(alg.coproduct(alg.K(0)) == TensorElement::pure(alg.K(0), alg.K(0)));
  CHECK(alg.coproduct(alg.one()) == TensorElement::pure(alg.one(), alg.one()));
  NormalElement b = alg.F(0) - alg.mul(kinv(alg, 0), alg.E(0));
  TensorElement expected = TensorElement::pure(b, kinv(alg, 0)) +
                           TensorElement::pure(alg.one(), b);
  CHECK(alg.coproduct(b) == expected);
}

TEST_CASE("adjoint action") {
  const Algebra& alg = a2();
  NormalElement u = alg.nf(random_element(alg, 2, 3));
  CHECK(alg.ad(alg.one(), u) == u);
  CHECK(alg.ad(alg.K(0), u) ==
        alg.mul(alg.mul(alg.K(0), u), alg.K(0, -1)));
  NormalElement x = alg.E(0);
  NormalElement y = alg.F(1);
  CHECK(alg.ad(alg.mul(x, y), u) == alg.ad(x, alg.ad(y, u)));
}

TEST_CASE("divided powers") {
  const Algebra& alg = a1();
  CHECK(alg.E_div(0, 0) == alg.one());
  CHECK(alg.E_div(0, 2) == Scalar::qint(2).inverse() * alg.E(0).pow(2));
  CHECK(alg.F_div(0, 3) ==
        (Scalar::qint(3) * Scalar::qint(2)).inverse() * alg.F(0).pow(3));
  CHECK_THROWS_AS(alg.E_div(0, -1), Error);
}

TEST_CASE("parser: generators, scalars, errors") {
  const Algebra& alg = a2();
  Element b1 = parse_expression(alg, "F1 - K1^-1*E1");
  Element expected = alg.free_gen(GenKind::F, 0);
  FreeWord ke;
  ke.push_back(free_letter(GenKind::Kminus, 0));
  ke.push_back(free_letter(GenKind::E, 0));
  Element second(&alg);
  second.add_term(ke, Scalar(1));
  expected -= second;
  CHECK(b1 == expected);

  Element s = parse_expression(alg, "q*[2]_1");
  CHECK(s == alg.free_scalar(Scalar::q_power(1) * Scalar::qint(2)));
  CHECK(parse_expression(alg, "3/2") ==
        alg.free_scalar(Scalar::from_fraction(BigInt(3), BigInt(2))));
  CHECK(parse_expression(alg, "[3]_2") ==
        alg.free_scalar(Scalar::qint(3, 1)));

  try {
    parse_expression(alg, "E1*(F1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("offset 6") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_expression(alg, "E9"), ParseError);
  CHECK_THROWS_AS(parse_expression(alg, "E1/F1"), ParseError);
  CHECK_THROWS_AS(parse_expression(alg, "B1"), ParseError);
}

TEST_CASE("parser handles division and grouped denominators") {
  const Algebra& alg = a1();
  Element x = parse_expression(alg, "(K1 - K1^-1)/(q - q^-1)");
  Scalar inv = (Scalar::q_power(1) - Scalar::q_power(-1)).inverse();
  CHECK(alg.nf(x) == inv * (alg.K(0) - alg.K(0, -1)));
}

TEST_CASE("render-parse round trip") {
  for (const Algebra* alg : {&a2(), &b2()}) {
    for (int trial = 0; trial < 20; ++trial) {
      NormalElement x = alg->nf(random_element(*alg, 3, 4));
      std::string text = alg->str(x);
      Element back = parse_expression(*alg, text);
      CHECK(alg->nf(back) == x);
    }
  }
}

TEST_CASE("budget aborts loudly instead of grinding") {
  const Algebra& alg = b2();
  Element x(&alg);
  FreeWord w;
  for (int t = 0; t < 10; ++t) {
    w.push_back(free_letter(GenKind::E, t % 2));
    w.push_back(free_letter(GenKind::F, (t + 1) % 2));
  }
  x.add_term(w, Scalar(1));
  Budget tiny(16, std::chrono::minutes(5));
  BudgetScope scope(tiny);
  CHECK_THROWS_AS(alg.nf(x), BudgetExceeded);
}
