#pragma once

#include <map>
#include <string>
#include <vector>

#include "qspair/algebra.hpp"
#include "qspair/report.hpp"
#include "qspair/root_data.hpp"

namespace qspair {

// Letters of the coideal generator alphabet. The nibble layout mirrors
// GenKind, so node_of applies unchanged. Cartan letters C are the grouplike
// elements K_i K_{tau(i)}^{-1} of the case II coideal; K/E letters are the
// unrestricted generators attached to the fixed odd nodes of case III
// (display numbering; those nodes are 0-based even in the C++ API).
enum class CoKind : unsigned char {
  B = 0x00,
  Cplus = 0x10,
  Cminus = 0x20,
  Kplus = 0x30,
  Kminus = 0x40,
  E = 0x50,
};

inline unsigned char co_letter(CoKind kind, int node) {
  return static_cast<unsigned char>(static_cast<unsigned char>(kind) + node);
}
inline CoKind co_kind_of(unsigned char letter) {
  return static_cast<CoKind>(letter & 0xf0);
}

class GeneratorSet;

// Formal linear combination of words in the coideal alphabet. Arithmetic is
// free: products concatenate words; GeneratorSet::expand is where the U_q(g)
// relations apply.
class CoidealElement {
 public:
  using Map = std::map<FreeWord, Scalar>;

  CoidealElement() = default;
  explicit CoidealElement(const GeneratorSet* gens) : gens_(gens) {}

  const GeneratorSet* context() const { return gens_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const FreeWord& w, const Scalar& c);

  CoidealElement operator-() const;
  CoidealElement& operator+=(const CoidealElement& o);
  CoidealElement& operator-=(const CoidealElement& o);
  friend CoidealElement operator+(CoidealElement a, const CoidealElement& b) {
    return a += b;
  }
  friend CoidealElement operator-(CoidealElement a, const CoidealElement& b) {
    return a -= b;
  }
  friend CoidealElement operator*(const CoidealElement& a,
                                  const CoidealElement& b);
  friend CoidealElement operator*(const Scalar& c, CoidealElement a);
  friend CoidealElement operator*(CoidealElement a, const Scalar& c) {
    return c * std::move(a);
  }

  std::string str() const;

 private:
  const GeneratorSet* gens_ = nullptr;
  Map terms_;
};

// q-commutator [a, b]_q = ab - q ba.
CoidealElement qcomm(const CoidealElement& a, const CoidealElement& b);
NormalElement qcomm(const NormalElement& a, const NormalElement& b);

// The generators of the coideal subalgebra for one involution case, as exact
// elements of U_q(g), together with the formal letter alphabet over them.
class GeneratorSet {
 public:
  GeneratorSet(const Algebra* alg, CaseSpec spec);

  const Algebra& algebra() const { return *alg_; }
  const CaseSpec& spec() const { return spec_; }

  const std::vector<unsigned char>& letters() const { return letters_; }
  bool has_letter(unsigned char letter) const;
  const NormalElement& letter_image(unsigned char letter) const;
  std::string letter_name(unsigned char letter) const;

  CoidealElement zero() const { return CoidealElement(this); }
  CoidealElement one() const;
  CoidealElement scalar(const Scalar& c) const;
  CoidealElement letter(unsigned char l) const;
  CoidealElement B(int i) const { return letter(co_letter(CoKind::B, i)); }
  // (K_i K_{tau(i)}^{-1})^exp as a formal word, exp in {1, -1} per letter.
  CoidealElement C(int i, int exp) const;
  CoidealElement Kodd(int i, int exp) const;
  CoidealElement Eodd(int i) const {
    return letter(co_letter(CoKind::E, i));
  }

  NormalElement expand(const CoidealElement& x) const;

  // Rewrites a normalized element known to lie in the coideal subalgebra as a
  // formal combination of generator words, by repeatedly peeling the layer of
  // maximal F-degree: each top term must look like a generator-word leading
  // term (pure F word, optionally times an admissible cartan part), and
  // subtracting the expansion of that word strictly lowers the top F-degree.
  // Throws Error when a top term falls outside the generator span.
  CoidealElement reexpress(const NormalElement& x) const;

  std::string str(const CoidealElement& x) const;

 private:
  FreeWord word_for_top_term(const Monomial& m) const;

  const Algebra* alg_;
  CaseSpec spec_;
  std::map<unsigned char, NormalElement> images_;
  std::vector<unsigned char> letters_;
};

GeneratorSet coideal_generators(const Algebra* alg, const CaseSpec& spec);

// One defining relation of the coideal presentation, as formal words in the
// generator alphabet. verify_relations certifies nf(expand(lhs - rhs)) = 0.
struct RelationInstance {
  std::string label;
  CoidealElement lhs, rhs;
};

std::vector<RelationInstance> relation_set(const GeneratorSet& gens);

Report verify_relations(const GeneratorSet& gens, const std::string& suite);

// Coproduct identities of the generators, leg by leg: the two-term case I
// form, the three-term case II form, and the unrestricted-generator legs of
// case III (odd display nodes).
Report verify_coideal(const GeneratorSet& gens, const std::string& suite);

}  // namespace qspair
