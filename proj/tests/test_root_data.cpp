#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qspair/root_data.hpp"

using namespace qspair;

TEST_CASE("Cartan matrices and symmetrizers") {
  RootDatum a2 = RootDatum::simple(LieType::A, 2);
  CHECK(a2.a(0, 0) == 2);
  CHECK(a2.a(0, 1) == -1);
  CHECK(a2.d(0) == 1);

  RootDatum b3 = RootDatum::simple(LieType::B, 3);
  CHECK(b3.a(1, 2) == -1);
  CHECK(b3.a(2, 1) == -2);
  CHECK(b3.d(0) == 2);
  CHECK(b3.d(2) == 1);

  RootDatum c3 = RootDatum::simple(LieType::C, 3);
  CHECK(c3.a(1, 2) == -2);
  CHECK(c3.a(2, 1) == -1);
  CHECK(c3.d(2) == 2);

  RootDatum g2 = RootDatum::simple(LieType::G, 2);
  CHECK(g2.a(0, 1) == -3);
  CHECK(g2.a(1, 0) == -1);
  CHECK(g2.d(0) == 1);
  CHECK(g2.d(1) == 3);

  RootDatum f4 = RootDatum::simple(LieType::F, 4);
  CHECK(f4.a(1, 2) == -1);
  CHECK(f4.a(2, 1) == -2);
  CHECK(f4.d(0) == 2);
  CHECK(f4.d(3) == 1);

  RootDatum e6 = RootDatum::simple(LieType::E, 6);
  CHECK(e6.a(1, 3) == -1);
  CHECK(e6.a(0, 2) == -1);
  CHECK(e6.a(0, 1) == 0);
}

TEST_CASE("pairing is symmetric (d_i a_ij = d_j a_ji)") {
  for (auto rd : {RootDatum::simple(LieType::B, 4),
                  RootDatum::simple(LieType::C, 3),
                  RootDatum::simple(LieType::F, 4),
                  RootDatum::simple(LieType::G, 2),
                  RootDatum::simple(LieType::E, 6),
                  RootDatum::simple(LieType::D, 5)}) {
    for (int i = 0; i < rd.rank(); ++i) {
      for (int j = 0; j < rd.rank(); ++j) {
        CHECK(rd.pairing(i, j) == rd.pairing(j, i));
      }
    }
  }
}

TEST_CASE("Coxeter exponents m_ij") {
  RootDatum b3 = RootDatum::simple(LieType::B, 3);
  CHECK(b3.coxeter_m(0, 1) == 3);
  CHECK(b3.coxeter_m(1, 2) == 4);
  CHECK(b3.coxeter_m(0, 2) == 2);
  RootDatum g2 = RootDatum::simple(LieType::G, 2);
  CHECK(g2.coxeter_m(0, 1) == 6);
}

TEST_CASE("positive root counts and heights") {
  struct Row {
    RootDatum rd;
    std::size_t count;
    int top_height;
  };
  std::vector<Row> rows = {
      {RootDatum::simple(LieType::A, 2), 3, 2},
      {RootDatum::simple(LieType::A, 7), 28, 7},
      {RootDatum::simple(LieType::B, 3), 9, 5},
      {RootDatum::simple(LieType::C, 3), 9, 5},
      {RootDatum::simple(LieType::D, 5), 20, 7},
      {RootDatum::simple(LieType::G, 2), 6, 5},
      {RootDatum::simple(LieType::F, 4), 24, 11},
      {RootDatum::simple(LieType::E, 6), 36, 11},
  };
  for (const Row& row : rows) {
    const auto& roots = row.rd.positive_roots();
    CHECK(roots.size() == row.count);
    int top = 0;
    for (const auto& r : roots) {
      int h = 0;
      for (int c : r) h += c;
      top = std::max(top, h);
    }
    CHECK(top == row.top_height);
  }
}

TEST_CASE("case specs: involutions and sigma data") {
  CaseSpec i_b3 = CaseSpec::from_name("I-B3");
  CHECK(i_b3.kind() == Case::I);
  CHECK(i_b3.g().type() == LieType::B);
  CHECK(i_b3.tau(0) == 0);
  CHECK(i_b3.sigma_rank() == 3);
  CHECK(i_b3.sigma_braid_type() == std::make_pair(LieType::B, 3));

  CaseSpec iia7 = CaseSpec::from_name("II-A7");
  CHECK(iia7.g().rank() == 7);
  CHECK(iia7.tau(0) == 6);
  CHECK(iia7.tau(3) == 3);
  CHECK(iia7.sigma_rank() == 4);
  CHECK(iia7.sigma_braid_type() == std::make_pair(LieType::B, 4));
  // n = 2r-1: the folded node embeds as the plain letter.
  CHECK(iia7.sigma_embedding(3) == std::vector<int>{3});
  CHECK(iia7.sigma_embedding(0) == std::vector<int>{0, 6});

  CaseSpec iia6 = CaseSpec::from_name("II-A6");
  CHECK(iia6.tau(0) == 5);
  CHECK(iia6.sigma_rank() == 3);
  // n = 2r: the folded letter maps to s_r s_{r+1} s_r.
  CHECK(iia6.sigma_embedding(2) == std::vector<int>{2, 3, 2});

  CaseSpec iid5 = CaseSpec::from_name("II-D5");
  CHECK(iid5.g().type() == LieType::D);
  CHECK(iid5.g().rank() == 5);
  CHECK(iid5.tau(3) == 4);
  CHECK(iid5.tau(4) == 3);
  CHECK(iid5.tau(0) == 0);
  CHECK(iid5.sigma_rank() == 4);
  CHECK(iid5.sigma_braid_type() == std::make_pair(LieType::B, 4));
  CHECK(iid5.sigma_embedding(3) == std::vector<int>{3, 4});
  CHECK(iid5.sigma_embedding(1) == std::vector<int>{1});

  CaseSpec iie6 = CaseSpec::from_name("II-E6");
  CHECK(iie6.tau(0) == 5);
  CHECK(iie6.tau(2) == 4);
  CHECK(iie6.tau(1) == 1);
  CHECK(iie6.tau(3) == 3);
  CHECK(iie6.sigma_braid_type() == std::make_pair(LieType::F, 4));
  CHECK(iie6.sigma_embedding(0) == std::vector<int>{0, 5});
  CHECK(iie6.sigma_embedding(1) == std::vector<int>{2, 4});
  CHECK(iie6.sigma_embedding(2) == std::vector<int>{3});
  CHECK(iie6.sigma_embedding(3) == std::vector<int>{1});

  CaseSpec iii = CaseSpec::from_name("III-A7");
  CHECK(iii.kind() == Case::III);
  CHECK(iii.m() == 4);
  CHECK(iii.g().rank() == 7);
  CHECK(iii.tau(2) == 2);
  CHECK(iii.sigma_rank() == 3);
  CHECK(iii.sigma_braid_type() == std::make_pair(LieType::A, 3));
  CHECK(iii.sigma_embedding(0) == std::vector<int>{1, 0, 2, 1});
  CHECK(iii.sigma_embedding(2) == std::vector<int>{5, 4, 6, 5});
}

TEST_CASE("case spec names round-trip") {
  for (const char* name : {"I-B3", "I-C3", "I-G2", "II-A7", "II-A6", "II-D5",
                           "II-E6", "III-A7"}) {
    CHECK(CaseSpec::from_name(name).name() == name);
  }
  CHECK_THROWS_AS(CaseSpec::from_name("IV-Z9"), Error);
}
