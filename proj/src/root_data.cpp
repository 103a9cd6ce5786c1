#include "qspair/root_data.hpp"

#include <algorithm>
#include <numeric>

namespace qspair {

char lie_type_letter(LieType t) {
  switch (t) {
    case LieType::A: return 'A';
    case LieType::B: return 'B';
    case LieType::C: return 'C';
    case LieType::D: return 'D';
    case LieType::E: return 'E';
    case LieType::F: return 'F';
    case LieType::G: return 'G';
  }
  throw Error("bad LieType");
}

namespace {

void check_rank(LieType t, int rank) {
  bool ok = false;
  switch (t) {
    case LieType::A: ok = rank >= 1; break;
    case LieType::B: ok = rank >= 2; break;
    case LieType::C: ok = rank >= 2; break;
    case LieType::D: ok = rank >= 4; break;
    case LieType::E: ok = rank >= 6 && rank <= 8; break;
    case LieType::F: ok = rank == 4; break;
    case LieType::G: ok = rank == 2; break;
  }
  if (!ok)
    throw Error("unsupported rank for type " +
                std::string(1, lie_type_letter(t)));
}

}  // namespace

RootDatum RootDatum::simple(LieType type, int rank) {
  check_rank(type, rank);
  RootDatum rd;
  rd.type_ = type;
  rd.rank_ = rank;
  rd.a_.assign(rank, std::vector<int>(rank, 0));
  rd.d_.assign(rank, 1);
  for (int i = 0; i < rank; ++i) rd.a_[i][i] = 2;
  auto edge = [&](int i, int j) {  // simply-laced bond, 0-based
    rd.a_[i][j] = -1;
    rd.a_[j][i] = -1;
  };
  switch (type) {
    case LieType::A:
      for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1);
      break;
    case LieType::B:
      // Nodes 1..n-1 long, node n short (Bourbaki).
      for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1);
      rd.a_[rank - 2][rank - 1] = -1;
      rd.a_[rank - 1][rank - 2] = -2;
      for (int i = 0; i + 1 < rank; ++i) rd.d_[i] = 2;
      break;
    case LieType::C:
      // Nodes 1..n-1 short, node n long.
      for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1);
      rd.a_[rank - 2][rank - 1] = -2;
      rd.a_[rank - 1][rank - 2] = -1;
      rd.d_[rank - 1] = 2;
      break;
    case LieType::D:
      for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
      edge(rank - 3, rank - 1);
      break;
    case LieType::E:
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to node 4.
      edge(0, 2);
      for (int i = 2; i + 1 < rank; ++i) edge(i, i + 1);
      edge(1, 3);
      break;
    case LieType::F:
      // 1-2=>3-4; nodes 1,2 long, 3,4 short.
      edge(0, 1);
      edge(2, 3);
      rd.a_[1][2] = -1;
      rd.a_[2][1] = -2;
      rd.d_[0] = rd.d_[1] = 2;
      break;
    case LieType::G:
      // Node 1 short, node 2 long; a12 = -3, a21 = -1.
      rd.a_[0][1] = -3;
      rd.a_[1][0] = -1;
      rd.d_[1] = 3;
      break;
  }
  return rd;
}

RootDatum RootDatum::a1xa1() {
  RootDatum rd;
  rd.type_ = LieType::A;
  rd.rank_ = 2;
  rd.product_ = true;
  rd.a_ = {{2, 0}, {0, 2}};
  rd.d_ = {1, 1};
  return rd;
}

int RootDatum::coxeter_m(int i, int j) const {
  if (i == j) return 1;
  switch (a(i, j) * a(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw Error("non-finite bond");
}

std::string RootDatum::name() const {
  if (product_) return "A1xA1";
  return std::string(1, lie_type_letter(type_)) + std::to_string(rank_);
}

const std::vector<std::vector<int>>& RootDatum::positive_roots() const {
  if (!roots_.empty()) return roots_;
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    roots.push_back(e);
  }
  auto positive = [](const std::vector<int>& r) {
    return std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
  };
  for (std::size_t at = 0; at < roots.size(); ++at) {
    for (int i = 0; i < rank_; ++i) {
      std::vector<int> r = roots[at];
      int pair = 0;
      for (int j = 0; j < rank_; ++j) pair += a_[i][j] * r[j];
      r[i] -= pair;
      if (!positive(r)) continue;
      if (std::find(roots.begin(), roots.end(), r) == roots.end())
        roots.push_back(r);
    }
  }
  auto height = [](const std::vector<int>& r) {
    return std::accumulate(r.begin(), r.end(), 0);
  };
  std::sort(roots.begin(), roots.end(),
            [&](const std::vector<int>& x, const std::vector<int>& y) {
              int hx = height(x), hy = height(y);
              if (hx != hy) return hx < hy;
              return x < y;
            });
  roots_ = std::move(roots);
  return roots_;
}

// ---------------------------------------------------------------------------

CaseSpec CaseSpec::I(LieType type, int rank) {
  return I(RootDatum::simple(type, rank));
}

CaseSpec CaseSpec::I(RootDatum g) {
  int rank = g.rank();
  std::vector<int> tau(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) tau[static_cast<std::size_t>(i)] = i;
  return CaseSpec(Case::I, std::move(g), std::move(tau));
}

CaseSpec CaseSpec::IIA(int n) {
  if (n < 2) throw Error("case IIA needs ambient A_n with n >= 2");
  RootDatum g = RootDatum::simple(LieType::A, n);
  std::vector<int> tau(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) tau[static_cast<std::size_t>(i)] = n - 1 - i;
  return CaseSpec(Case::IIA, std::move(g), std::move(tau));
}

CaseSpec CaseSpec::IID(int n) {
  if (n < 3) throw Error("case IID needs Sigma-rank n >= 3 (ambient D_{n+1})");
  RootDatum g = RootDatum::simple(LieType::D, n + 1);
  std::vector<int> tau(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) tau[static_cast<std::size_t>(i)] = i;
  tau[static_cast<std::size_t>(n) - 1] = n;
  tau[static_cast<std::size_t>(n)] = n - 1;
  return CaseSpec(Case::IID, std::move(g), std::move(tau));
}

CaseSpec CaseSpec::IIE() {
  RootDatum g = RootDatum::simple(LieType::E, 6);
  // tau = (1 6)(3 5) in 1-based labels.
  std::vector<int> tau = {5, 1, 4, 3, 2, 0};
  return CaseSpec(Case::IIE, std::move(g), std::move(tau));
}

CaseSpec CaseSpec::III(int m) {
  if (m < 2) throw Error("case III needs m >= 2");
  RootDatum g = RootDatum::simple(LieType::A, 2 * m - 1);
  std::vector<int> tau(static_cast<std::size_t>(2 * m - 1));
  for (int i = 0; i < 2 * m - 1; ++i) tau[static_cast<std::size_t>(i)] = i;
  return CaseSpec(Case::III, std::move(g), std::move(tau), m);
}

CaseSpec CaseSpec::from_name(const std::string& name) {
  auto dash = name.find('-');
  if (dash == std::string::npos) throw ParseError("bad case name: " + name);
  std::string head = name.substr(0, dash), tail = name.substr(dash + 1);
  if (tail.size() < 2) throw ParseError("bad case name: " + name);
  char letter = tail[0];
  int rank = std::stoi(tail.substr(1));
  if (head == "I") {
    switch (letter) {
      case 'A': return I(LieType::A, rank);
      case 'B': return I(LieType::B, rank);
      case 'C': return I(LieType::C, rank);
      case 'D': return I(LieType::D, rank);
      case 'E': return I(LieType::E, rank);
      case 'F': return I(LieType::F, rank);
      case 'G': return I(LieType::G, rank);
    }
  } else if (head == "II") {
    if (letter == 'A') return IIA(rank);
    if (letter == 'D') return IID(rank - 1);
    if (letter == 'E' && rank == 6) return IIE();
  } else if (head == "III") {
    if (letter == 'A' && rank % 2 == 1) return III((rank + 1) / 2);
  }
  throw ParseError("bad case name: " + name);
}

std::string CaseSpec::name() const {
  switch (kind_) {
    case Case::I: return "I-" + g_.name();
    case Case::IIA: return "II-" + g_.name();
    case Case::IID: return "II-" + g_.name();
    case Case::IIE: return "II-E6";
    case Case::III: return "III-" + g_.name();
  }
  throw Error("bad case");
}

int CaseSpec::sigma_rank() const {
  int n = g_.rank();
  switch (kind_) {
    case Case::I: return n;
    case Case::IIA: return (n + 1) / 2;
    case Case::IID: return n - 1;  // ambient D_{n+1} has rank n+1
    case Case::IIE: return 4;
    case Case::III: return m_ - 1;
  }
  throw Error("bad case");
}

std::pair<LieType, int> CaseSpec::sigma_braid_type() const {
  switch (kind_) {
    case Case::I: return {g_.type(), g_.rank()};
    case Case::IIA: return {LieType::B, sigma_rank()};
    case Case::IID: return {LieType::B, sigma_rank()};
    case Case::IIE: return {LieType::F, 4};
    case Case::III: return {LieType::A, m_ - 1};
  }
  throw Error("bad case");
}

std::vector<int> CaseSpec::sigma_embedding(int k) const {
  int n = g_.rank();
  if (k < 0 || k >= sigma_rank()) throw Error("Sigma letter out of range");
  switch (kind_) {
    case Case::I: return {k};
    case Case::IIA: {
      int r = sigma_rank();
      if (k < r - 1) return {k, n - 1 - k};
      if (n == 2 * r - 1) return {k};          // n odd: bar(s_r) -> s_r
      return {k, k + 1, k};                    // n = 2r: s_r s_{r+1} s_r
    }
    case Case::IID: {
      int nn = n - 1;  // Sigma rank
      if (k < nn - 1) return {k};
      return {nn - 1, nn};  // bar(s_n) -> s_n s_{n+1} (0-based nn-1, nn)
    }
    case Case::IIE: {
      switch (k) {
        case 0: return {0, 5};
        case 1: return {2, 4};
        case 2: return {3};
        case 3: return {1};
      }
      throw Error("bad Sigma letter");
    }
    case Case::III: {
      int i = k + 1;  // 1-based Sigma letter
      return {2 * i - 1, 2 * i - 2, 2 * i, 2 * i - 1};
    }
  }
  throw Error("bad case");
}

}  // namespace qspair
