#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qspair/rewrite.hpp"

using namespace qspair;

namespace {

Word w(std::initializer_list<int> letters) {
  Word out;
  for (int l : letters) out.push_back(static_cast<unsigned char>(l));
  return out;
}

// Graded dimension of U^+ from the positive-root heights: coefficient of t^d
// in prod_{beta > 0} 1/(1 - t^{height(beta)}). Independent of the rewriting
// machinery entirely.
std::vector<long> pbw_dimensions(const RootDatum& rd, int max_deg) {
  std::vector<long> dims(max_deg + 1, 0);
  dims[0] = 1;
  for (const auto& root : rd.positive_roots()) {
    int h = 0;
    for (int c : root) h += c;
    for (int d = h; d <= max_deg; ++d) dims[d] += dims[d - h];
  }
  return dims;
}

const Rule* find_rule(const RewriteSystem& sys, const Word& lhs) {
  for (const auto& r : sys.rules())
    if (r.lhs == lhs) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("A1 has no block rules") {
  RewriteSystem sys = complete_serre_system(RootDatum::simple(LieType::A, 1));
  CHECK(sys.rules().empty());
  CHECK(sys.count_irreducible(5) == 1);
}

TEST_CASE("A2 system is the two Serre rules") {
  RewriteSystem sys = complete_serre_system(RootDatum::simple(LieType::A, 2));
  REQUIRE(sys.rules().size() == 2);
  const Rule* r1 = find_rule(sys, w({1, 0, 0}));
  REQUIRE(r1 != nullptr);
  REQUIRE(r1->rhs.size() == 2);
  // E2 E1 E1 -> [2] E1 E2 E1 - E1 E1 E2
  CHECK(r1->rhs[0] == std::pair(w({0, 1, 0}), Scalar::qint(2)));
  CHECK(r1->rhs[1] == std::pair(w({0, 0, 1}), Scalar(-1)));
  const Rule* r2 = find_rule(sys, w({1, 1, 0}));
  REQUIRE(r2 != nullptr);
  CHECK(r2->rhs[0] == std::pair(w({1, 0, 1}), Scalar::qint(2)));
  CHECK(r2->rhs[1] == std::pair(w({0, 1, 1}), Scalar(-1)));
}

TEST_CASE("reduction reaches irreducible words and is linear") {
  RewriteSystem sys = complete_serre_system(RootDatum::simple(LieType::A, 2));
  WordPoly p = sys.reduce(w({1, 0, 0}));
  REQUIRE(p.size() == 2);
  for (const auto& [word, c] : p) CHECK(sys.is_irreducible(word));
  // Scaled input scales output.
  WordPoly q = sys.reduce(w({1, 0, 0}), Scalar::qint(3));
  for (const auto& [word, c] : q) CHECK(c == Scalar::qint(3) * p.at(word));
}

TEST_CASE("irreducible word counts match the PBW grading") {
  struct Case {
    RootDatum rd;
    int max_deg;
  };
  std::vector<Case> cases = {
      {RootDatum::simple(LieType::A, 2), 8},
      {RootDatum::simple(LieType::A, 3), 7},
      {RootDatum::simple(LieType::B, 2), 8},
      {RootDatum::simple(LieType::B, 3), 6},
      {RootDatum::simple(LieType::C, 3), 6},
      {RootDatum::simple(LieType::G, 2), 8},
      {RootDatum::simple(LieType::D, 5), 5},
      {RootDatum::simple(LieType::A, 7), 4},
  };
  for (const auto& c : cases) {
    CAPTURE(c.rd.name());
    RewriteSystem sys = cached_serre_system(c.rd);
    std::vector<long> dims = pbw_dimensions(c.rd, c.max_deg);
    for (int d = 0; d <= c.max_deg; ++d) {
      CAPTURE(d);
      CHECK(sys.count_irreducible(d) == dims[d]);
    }
  }
}

TEST_CASE("confluence certificates for every cached block system") {
  for (auto rd : {RootDatum::simple(LieType::A, 1),
                  RootDatum::simple(LieType::A, 2),
                  RootDatum::simple(LieType::A, 3),
                  RootDatum::simple(LieType::B, 2),
                  RootDatum::simple(LieType::B, 3),
                  RootDatum::simple(LieType::C, 3),
                  RootDatum::simple(LieType::G, 2),
                  RootDatum::simple(LieType::D, 5),
                  RootDatum::simple(LieType::A, 7)}) {
    CAPTURE(rd.name());
    RewriteSystem sys = cached_serre_system(rd);
    std::string path = "cert_" + cache_file_name(rd, 'E', 16);
    save_system(sys, path);
    auto loaded = load_system(path);
    REQUIRE(loaded.has_value());
    REQUIRE(loaded->rules().size() == sys.rules().size());
    for (const auto& ov : loaded->overlaps()) {
      CHECK(loaded->resolve(ov).empty());
    }
    std::remove(path.c_str());
  }
}

TEST_CASE("serialization round-trips rule data exactly") {
  RewriteSystem sys = complete_serre_system(RootDatum::simple(LieType::B, 2));
  save_system(sys, "roundtrip.rws");
  auto loaded = load_system("roundtrip.rws");
  REQUIRE(loaded.has_value());
  REQUIRE(loaded->rules().size() == sys.rules().size());
  for (std::size_t r = 0; r < sys.rules().size(); ++r) {
    CHECK(loaded->rules()[r].lhs == sys.rules()[r].lhs);
    CHECK(loaded->rules()[r].rhs == sys.rules()[r].rhs);
  }
  std::remove("roundtrip.rws");
  CHECK(!load_system("missing-file.rws").has_value());
}

TEST_CASE("a wrong coefficient is caught by the certificate") {
  RewriteSystem sys = complete_serre_system(RootDatum::simple(LieType::A, 2));
  save_system(sys, "mutated.rws");
  std::ifstream in("mutated.rws");
  std::stringstream buf;
  buf << in.rdbuf();
  in.close();
  std::string text = buf.str();
  // [2] = (v^4+1)/v^2; replace its first occurrence with [3] = (v^8+v^4+1)/v^4.
  std::string two = "N 4 1 0 0 0 1 D 2 0 0 1";
  std::string three = "N 8 1 0 0 0 1 0 0 0 1 D 4 0 0 0 0 1";
  auto at = text.find(two);
  REQUIRE(at != std::string::npos);
  text.replace(at, two.size(), three);
  std::ofstream out("mutated.rws");
  out << text;
  out.close();
  auto mutated = load_system("mutated.rws");
  REQUIRE(mutated.has_value());
  bool all_resolved = true;
  for (const auto& ov : mutated->overlaps()) {
    if (!mutated->resolve(ov).empty()) all_resolved = false;
  }
  CHECK(!all_resolved);
  std::remove("mutated.rws");
}

TEST_CASE("degree cap failure is loud") {
  CompletionOptions opts;
  opts.degree_cap = 2;
  CHECK_THROWS_AS(
      complete_serre_system(RootDatum::simple(LieType::A, 2), opts),
      DegreeCapError);
}
