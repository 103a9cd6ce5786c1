#pragma once

#include <map>
#include <string>

#include "qspair/algebra.hpp"
#include "qspair/report.hpp"

namespace qspair {

// Algebra endomorphism pinned down by its images on the free generators
// E_i, F_i, K_i, K_i^{-1}. Application is word-wise substitution followed by
// normalization, so any assignment extends to at most one endomorphism.
class GeneratorImages {
 public:
  GeneratorImages(const Algebra* alg, std::string label)
      : alg_(alg), label_(std::move(label)) {}

  const Algebra* context() const { return alg_; }
  const std::string& label() const { return label_; }

  // Once both K images of a node are present their product must normalize
  // to 1; set enforces that pairing.
  void set(GenKind kind, int node, NormalElement img);
  bool has(GenKind kind, int node) const;
  const NormalElement& image(GenKind kind, int node) const;

 private:
  const Algebra* alg_;
  std::string label_;
  std::map<unsigned char, NormalElement> images_;
};

enum class TDir { forward, inverse };

// Images of the braid automorphism attached to node i. The inverse direction
// is the printed presentation:
//   T_i^{-1}(E_i) = -K_i^{-1} F_i,  T_i^{-1}(F_i) = -E_i K_i,
//   T_i^{-1}(K_j) = K_j K_i^{-a_ij},
//   T_i^{-1}(E_j) = sum_s (-1)^s q_i^{-s} E_i^(s) E_j E_i^(-a_ij-s),
//   T_i^{-1}(F_j) = sum_s (-1)^s q_i^{s} F_i^(-a_ij-s) F_j F_i^(s).
// The forward direction is the mirrored convention; it is certified as the
// two-sided inverse by verify_T_properties rather than assumed.
GeneratorImages lusztig_images(const Algebra& alg, int i, TDir dir);

GeneratorImages identity_images(const Algebra& alg);

// Word-wise substitution, multiplied out and normalized. Throws Error when a
// generator occurring in the argument has no image.
NormalElement apply_endomorphism(const GeneratorImages& phi,
                                 const NormalElement& a);
NormalElement apply_endomorphism(const GeneratorImages& phi, const Element& a);

// f after g: applies f to every image of g. The label records the order.
GeneratorImages compose(const GeneratorImages& f, const GeneratorImages& g);

// T_{w_X} for the rank-(2m-1) chain: the commuting product of the forward
// braid automorphisms at the odd-numbered nodes 1, 3, ..., 2m-1.
GeneratorImages t_wX(const Algebra& alg, int m);

// For every node: roundtrip identities T_i T_i^{-1} = T_i^{-1} T_i = id on
// all generators. For every pair i != j: the m_ij-fold alternating
// compositions agree on all generators. One row per identity.
Report verify_T_properties(const RootDatum& rd);

}  // namespace qspair
