#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qspair/rewrite.hpp"
#include "qspair/root_data.hpp"
#include "qspair/scalar.hpp"

namespace qspair {

// Letters of the free algebra. The numeric layout makes degree-lex order on
// encoded words put F below K below E, which is what the straightening
// strategy decreases.
enum class GenKind : unsigned char { F = 0x00, Kplus = 0x10, Kminus = 0x20, E = 0x30 };

inline unsigned char free_letter(GenKind kind, int node) {
  return static_cast<unsigned char>(static_cast<unsigned char>(kind) + node);
}
inline GenKind kind_of(unsigned char letter) {
  return static_cast<GenKind>(letter & 0xf0);
}
inline int node_of(unsigned char letter) { return letter & 0x0f; }

using FreeWord = std::basic_string<unsigned char>;

class Algebra;

// Free linear combination of words in the generators. Arithmetic here applies
// no relations; Algebra::nf is where reduction happens.
class Element {
 public:
  using Map = std::map<FreeWord, Scalar>;

  Element() = default;
  explicit Element(const Algebra* alg) : alg_(alg) {}

  const Algebra* context() const { return alg_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(FreeWord w, Scalar c);

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& c, Element a);
  friend Element operator*(Element a, const Scalar& c) { return c * std::move(a); }
  bool operator==(const Element& o) const { return terms_ == o.terms_; }

 private:
  const Algebra* alg_ = nullptr;
  Map terms_;
};

// Monomial of the triangular basis: irreducible F-word, K exponent vector,
// irreducible E-word. Block words store plain node indices.
struct Monomial {
  Word f;
  std::array<int16_t, 8> k{};
  Word e;
  bool operator==(const Monomial&) const = default;
};

struct MonHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct TensorMonomial {
  Monomial a, b;
  bool operator==(const TensorMonomial&) const = default;
};

struct TensorMonHash {
  std::size_t operator()(const TensorMonomial& t) const noexcept;
};

// Element in normal form; the working currency of every identity check.
// Products route through the owning Algebra and stay normalized.
class NormalElement {
 public:
  using Map = std::unordered_map<Monomial, Scalar, MonHash>;

  NormalElement() = default;
  explicit NormalElement(const Algebra* alg) : alg_(alg) {}

  const Algebra* context() const { return alg_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Monomial& m, const Scalar& c);

  NormalElement operator-() const;
  NormalElement& operator+=(const NormalElement& o);
  NormalElement& operator-=(const NormalElement& o);
  friend NormalElement operator+(NormalElement a, const NormalElement& b) {
    return a += b;
  }
  friend NormalElement operator-(NormalElement a, const NormalElement& b) {
    return a -= b;
  }
  friend NormalElement operator*(const NormalElement& a,
                                 const NormalElement& b);
  friend NormalElement operator*(const Scalar& c, NormalElement a);
  friend NormalElement operator*(NormalElement a, const Scalar& c) {
    return c * std::move(a);
  }
  NormalElement pow(int n) const;
  bool operator==(const NormalElement& o) const { return terms_ == o.terms_; }

  Element to_free() const;

 private:
  const Algebra* alg_ = nullptr;
  Map terms_;
};

class TensorElement {
 public:
  using Map = std::unordered_map<TensorMonomial, Scalar, TensorMonHash>;

  TensorElement() = default;
  explicit TensorElement(const Algebra* alg) : alg_(alg) {}
  static TensorElement pure(const NormalElement& a, const NormalElement& b);

  const Algebra* context() const { return alg_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const TensorMonomial& m, const Scalar& c);

  TensorElement operator-() const;
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) {
    return a += b;
  }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    return a -= b;
  }
  friend TensorElement operator*(const TensorElement& a,
                                 const TensorElement& b);
  bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

 private:
  const Algebra* alg_ = nullptr;
  Map terms_;
};

struct AlgebraOptions {
  int degree_cap = 16;
  std::string cache_dir;  // empty: resolve from env / default location
  bool use_cache = true;
};

// Resolved cache directory (created on demand): QSPAIR_CACHE_DIR, else
// ~/.cache/qspair, else ./.qspair-cache.
std::string default_cache_dir();

class Algebra {
 public:
  explicit Algebra(RootDatum rd, AlgebraOptions opts = {});

  const RootDatum& datum() const { return rd_; }
  int rank() const { return rd_.rank(); }
  const RewriteSystem& block_system() const { return serre_; }
  std::uint64_t id() const { return id_; }

  // Free builders.
  Element free_zero() const { return Element(this); }
  Element free_one() const;
  Element free_gen(GenKind kind, int node) const;
  Element free_scalar(const Scalar& c) const;

  // Normal builders.
  NormalElement zero() const { return NormalElement(this); }
  NormalElement one() const;
  NormalElement E(int i) const;
  NormalElement F(int i) const;
  NormalElement K(int i, int exp = 1) const;
  NormalElement scalar(const Scalar& c) const;
  // Divided powers E_i^(n), F_i^(n).
  NormalElement E_div(int i, int n) const;
  NormalElement F_div(int i, int n) const;

  NormalElement nf(const Element& a) const;
  Element normal_form(const Element& a) const { return nf(a).to_free(); }
  bool equal(const Element& a, const Element& b) const {
    return nf(a - b).is_zero();
  }

  NormalElement mul(const NormalElement& a, const NormalElement& b) const;

  // Hopf structure.
  TensorElement coproduct(const NormalElement& a) const;
  NormalElement antipode(const NormalElement& a) const;
  Scalar counit(const NormalElement& a) const;
  // Left adjoint action ad(x)(u).
  NormalElement ad(const NormalElement& x, const NormalElement& u) const;

  // Reference reducer working directly on free elements, one relation
  // application at a time. Quadratically slower than nf but independent of
  // the straightening pipeline; optionally records each applied relation
  // instance so the telescoping identity can be replayed in the free algebra.
  Element naive_normal_form(const Element& a,
                            std::vector<Element>* steps = nullptr) const;

  std::string str(const NormalElement& a) const;
  std::string str(const Element& a) const;

  // (alpha_i, alpha_j).
  int pairing(int i, int j) const { return rd_.pairing(i, j); }
  // (sum_i kvec_i alpha_i, weight of block word).
  long k_dot_word(const std::array<int16_t, 8>& kvec, const Word& w) const;

 private:
  RootDatum rd_;
  AlgebraOptions opts_;
  RewriteSystem serre_;
  std::uint64_t id_;

  struct ExchTerm {
    Word f;
    std::array<int16_t, 8> k;
    Word e;
    Scalar c;
  };
  const std::vector<ExchTerm>& exchange(const Word& eword,
                                        const Word& fword) const;
  const std::vector<std::pair<Word, Scalar>>& block_reduce(
      const Word& w) const;
  void mul_mon(const Monomial& a, const Monomial& b, const Scalar& coef,
               NormalElement& acc) const;
  TensorElement coproduct_mon(const Monomial& m) const;
  NormalElement antipode_mon(const Monomial& m) const;

  friend class NormalElement;
  friend TensorElement operator*(const TensorElement&, const TensorElement&);
};

}  // namespace qspair
