#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qspair/errors.hpp"

namespace qspair {

enum class LieType { A, B, C, D, E, F, G };

char lie_type_letter(LieType t);

// Finite-type Cartan datum in Bourbaki numbering. Node indices are 0-based
// throughout the C++ API; the string layer (parser, renderer, reports)
// converts to the 1-based labels used in the mathematics.
//
// Conventions: a[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i), short roots
// have (alpha, alpha) = 2, d[i] = (alpha_i, alpha_i)/2, so the symmetrized
// pairing is (alpha_i, alpha_j) = d[i]*a[i][j] = d[j]*a[j][i].
class RootDatum {
 public:
  static RootDatum simple(LieType type, int rank);
  // Rank-2 datum with two orthogonal nodes (a12 = a21 = 0).
  static RootDatum a1xa1();

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  int a(int i, int j) const { return a_[idx(i)][idx(j)]; }
  int d(int i) const { return d_[idx(i)]; }
  int pairing(int i, int j) const { return d(i) * a(i, j); }
  // Coxeter exponent m_ij derived from a_ij * a_ji (0,1,2,3 -> 2,3,4,6).
  int coxeter_m(int i, int j) const;
  std::string name() const;

  // Positive roots in simple-root coordinates, sorted by height then
  // lexicographically.
  const std::vector<std::vector<int>>& positive_roots() const;

 private:
  RootDatum() = default;
  int idx(int i) const {
    if (i < 0 || i >= rank_) throw Error("node index out of range");
    return i;
  }
  LieType type_;
  int rank_ = 0;
  bool product_ = false;  // true only for a1xa1
  std::vector<std::vector<int>> a_;
  std::vector<int> d_;
  mutable std::vector<std::vector<int>> roots_;  // computed on demand
};

enum class Case { I, IIA, IID, IIE, III };

// One involution case: the ambient datum, the diagram automorphism tau, and
// the derived restricted-braid data. Construction entry points cover the
// families the engine verifies:
//   I(type, rank)  : theta = omega on any finite type
//   IIA(n)         : ambient A_n, tau(i) = n+1-i
//   IID(n)         : ambient D_{n+1}, tau swaps the fork nodes n, n+1
//   IIE()          : ambient E6, tau = (1 6)(3 5)
//   III(m)         : ambient A_{2m-1}, theta twisted by w_X, X = odd nodes
class CaseSpec {
 public:
  static CaseSpec I(LieType type, int rank);
  static CaseSpec I(RootDatum g);
  static CaseSpec IIA(int n);
  static CaseSpec IID(int n);
  static CaseSpec IIE();
  static CaseSpec III(int m);
  // Parses suite-style names: "I-B3", "II-A7", "II-D5", "II-E6", "III-A7".
  static CaseSpec from_name(const std::string& name);

  Case kind() const { return kind_; }
  const RootDatum& g() const { return g_; }
  int tau(int i) const { return tau_[static_cast<std::size_t>(i)]; }
  bool tau_fixed(int i) const { return tau(i) == i; }
  int m() const { return m_; }
  std::string name() const;

  // Rank of the restricted diagram Sigma (number of tau-letters).
  int sigma_rank() const;
  // Braid type of Sigma per the embedding table.
  std::pair<LieType, int> sigma_braid_type() const;
  // Image of the k-th Sigma-letter (0-based) in ambient braid letters
  // (0-based) under the embedding of the restricted braid group.
  std::vector<int> sigma_embedding(int k) const;

 private:
  CaseSpec(Case kind, RootDatum g, std::vector<int> tau, int m = 0)
      : kind_(kind), g_(std::move(g)), tau_(std::move(tau)), m_(m) {}
  Case kind_;
  RootDatum g_;
  std::vector<int> tau_;
  int m_;
};

}  // namespace qspair
