#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qspair/lusztig.hpp"

using namespace qspair;

namespace {

const Algebra& a2() {
  static Algebra alg(RootDatum::simple(LieType::A, 2));
  return alg;
}

const Algebra& a3() {
  static Algebra alg(RootDatum::simple(LieType::A, 3));
  return alg;
}

NormalElement random_element(const Algebra& alg, std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> node(0, alg.rank() - 1);
  Element x = alg.free_one();
  for (int p = 0; p < len; ++p) {
    int n = node(rng);
    switch (kind(rng)) {
      case 0: x = x * alg.free_gen(GenKind::E, n); break;
      case 1: x = x * alg.free_gen(GenKind::F, n); break;
      case 2: x = x * alg.free_gen(GenKind::Kplus, n); break;
      default: x = x * alg.free_gen(GenKind::Kminus, n); break;
    }
  }
  return alg.nf(x);
}

}  // namespace

TEST_CASE("inverse images on the reflecting node match the printed forms") {
  const Algebra& alg = a2();
  GeneratorImages t1 = lusztig_images(alg, 0, TDir::inverse);
  CHECK(t1.image(GenKind::F, 0) == -(alg.E(0) * alg.K(0)));
  CHECK(t1.image(GenKind::E, 0) == -(alg.K(0, -1) * alg.F(0)));
  CHECK(t1.image(GenKind::Kplus, 0) == alg.K(0, -1));
  CHECK(t1.image(GenKind::Kminus, 0) == alg.K(0));
}

TEST_CASE("inverse images on adjacent nodes expand the twisted commutators") {
  const Algebra& alg = a2();
  GeneratorImages t1 = lusztig_images(alg, 0, TDir::inverse);
  // K_2 -> K_2 K_1 for a_12 = -1.
  CHECK(t1.image(GenKind::Kplus, 1) == alg.K(1) * alg.K(0));
  CHECK(t1.image(GenKind::Kminus, 1) == alg.K(1, -1) * alg.K(0, -1));
  // E_2 -> E_2 E_1 - q^-1 E_1 E_2, F_2 -> F_1 F_2 - q F_2 F_1.
  NormalElement e_expected =
      alg.E(1) * alg.E(0) - Scalar::v_power(-2) * (alg.E(0) * alg.E(1));
  CHECK(t1.image(GenKind::E, 1) == e_expected);
  NormalElement f_expected =
      alg.F(0) * alg.F(1) - Scalar::v_power(2) * (alg.F(1) * alg.F(0));
  CHECK(t1.image(GenKind::F, 1) == f_expected);
}

TEST_CASE("double bond uses divided powers and the short-root q") {
  Algebra alg(RootDatum::simple(LieType::B, 2));
  // Node 2 is short; a_21 = -2, q_2 = q.
  GeneratorImages t2 = lusztig_images(alg, 1, TDir::inverse);
  NormalElement expected =
      alg.E_div(1, 0) * alg.E(0) * alg.E_div(1, 2) -
      Scalar::v_power(-2) * (alg.E(1) * alg.E(0) * alg.E(1)) +
      Scalar::v_power(-4) * (alg.E_div(1, 2) * alg.E(0));
  CHECK(t2.image(GenKind::E, 0) == expected);
}

TEST_CASE("nodes at distance two are fixed") {
  const Algebra& alg = a3();
  for (TDir dir : {TDir::forward, TDir::inverse}) {
    GeneratorImages t1 = lusztig_images(alg, 0, dir);
    CHECK(t1.image(GenKind::E, 2) == alg.E(2));
    CHECK(t1.image(GenKind::F, 2) == alg.F(2));
    CHECK(t1.image(GenKind::Kplus, 2) == alg.K(2));
    CHECK(t1.image(GenKind::Kminus, 2) == alg.K(2, -1));
  }
}

TEST_CASE("application is multiplicative and fixes nothing it should not") {
  const Algebra& alg = a2();
  GeneratorImages t1 = lusztig_images(alg, 0, TDir::inverse);
  CHECK(apply_endomorphism(
            t1, alg.nf(alg.free_gen(GenKind::Kplus, 0) *
                       alg.free_gen(GenKind::Kminus, 0))) == alg.one());
  GeneratorImages id = identity_images(alg);
  std::mt19937 rng(73);
  for (int trial = 0; trial < 12; ++trial) {
    NormalElement a = random_element(alg, rng, 3);
    NormalElement b = random_element(alg, rng, 3);
    CHECK(apply_endomorphism(id, a) == a);
    NormalElement lhs = apply_endomorphism(t1, alg.mul(a, b));
    NormalElement rhs =
        alg.mul(apply_endomorphism(t1, a), apply_endomorphism(t1, b));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("missing images are reported, not defaulted") {
  const Algebra& alg = a2();
  GeneratorImages partial(&alg, "partial");
  partial.set(GenKind::E, 0, alg.E(0));
  CHECK_THROWS_AS(apply_endomorphism(partial, alg.F(0)), Error);
}

TEST_CASE("K images must pair to 1") {
  const Algebra& alg = a2();
  GeneratorImages phi(&alg, "bad");
  phi.set(GenKind::Kplus, 0, alg.K(0));
  CHECK_THROWS_AS(phi.set(GenKind::Kminus, 0, alg.K(0)), Error);
}

TEST_CASE("roundtrip and braid identities hold on small data") {
  for (auto rd : {RootDatum::simple(LieType::A, 2),
                  RootDatum::simple(LieType::B, 2),
                  RootDatum::simple(LieType::G, 2)}) {
    CAPTURE(rd.name());
    Report rows = verify_T_properties(rd);
    CHECK(!rows.empty());
    for (const CheckRow& row : rows) {
      CAPTURE(row.check);
      CAPTURE(row.identity);
      CHECK(row.status == "pass");
    }
  }
}

TEST_CASE("chain product for the fixed subdiagram acts as both factors") {
  const Algebra& alg = a3();
  GeneratorImages w = t_wX(alg, 2);
  // K_2 -> K_2 K_1 K_3: both neighbours contribute one torus factor.
  CHECK(w.image(GenKind::Kplus, 1) == alg.K(1) * alg.K(0) * alg.K(2));
  GeneratorImages t1 = lusztig_images(alg, 0, TDir::forward);
  GeneratorImages t3 = lusztig_images(alg, 2, TDir::forward);
  GeneratorImages ab = compose(t1, t3);
  GeneratorImages ba = compose(t3, t1);
  for (int n = 0; n < alg.rank(); ++n)
    for (GenKind kind :
         {GenKind::F, GenKind::Kplus, GenKind::Kminus, GenKind::E}) {
      CHECK(w.image(kind, n) == ab.image(kind, n));
      CHECK(w.image(kind, n) == ba.image(kind, n));
    }
  CHECK_THROWS_AS(t_wX(alg, 1), Error);
}
