#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qspair/root_data.hpp"
#include "qspair/scalar.hpp"

namespace qspair {

// Word in a single generator block; letters are 0-based node indices.
using Word = std::basic_string<unsigned char>;

// Degree-lexicographic order: first by length, then left-to-right with
// ascending node index. This is the reduction order for all block systems.
inline bool deglex_less(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

struct DeglexGreater {
  bool operator()(const Word& x, const Word& y) const {
    return deglex_less(y, x);
  }
};

// Linear combination of block words.
using WordPoly = std::map<Word, Scalar, DeglexGreater>;

// One oriented rewrite rule: lhs -> sum of strictly deglex-smaller words.
struct Rule {
  Word lhs;
  std::vector<std::pair<Word, Scalar>> rhs;
};

// A confluent rewriting system for one generator block of U_q(g), produced by
// overlap completion of the quantum Serre relators. Immutable once built.
//
// All relators are homogeneous (every rule preserves word length), so
// completion and confluence are exact degree by degree: the system carries
// every rule with lead of length <= cap, and resolving the overlap words of
// length <= cap certifies confluence on all words of length <= cap. Words
// beyond the cap are refused rather than reduced unreliably.
class RewriteSystem {
 public:
  const std::vector<Rule>& rules() const { return rules_; }
  int rank() const { return rank_; }
  int cap() const { return cap_; }

  // Fully reduces a word (resp. a linear combination) to normal form.
  // Throws DegreeCapError on words longer than the certified cap.
  WordPoly reduce(const Word& w, const Scalar& coef = Scalar(1)) const;
  WordPoly reduce(WordPoly p) const;

  bool is_irreducible(const Word& w) const;

  // Every overlap ambiguity of every pair of rules whose overlap word fits
  // under the cap. Used by the confluence certificate check: the difference
  // of the two one-step rewrites of each must reduce to zero.
  struct Overlap {
    std::size_t rule_a, rule_b;
    Word word;
  };
  std::vector<Overlap> overlaps() const;
  // Resolves one overlap: reduces the two one-step rewrites of ov.word and
  // returns their difference (zero iff the ambiguity is resolvable).
  WordPoly resolve(const Overlap& ov) const;

  // Number of irreducible words of the given total degree.
  long count_irreducible(int degree) const;

  // First position >= from where some rule matches; returns (position, rule).
  std::optional<std::pair<std::size_t, std::size_t>> find_match(
      const Word& w, std::size_t from = 0) const;

 private:
  friend class Completion;
  friend std::optional<RewriteSystem> load_system(const std::string& path);
  void index_rules();
  bool dead(std::size_t r) const { return r < dead_.size() && dead_[r]; }

  // Packed engine: a word is one unsigned __int128 with 3 bits per letter
  // (leftmost letter most significant) and the length above bit 96, so the
  // deglex order is plain integer comparison and substring replacement is
  // bit arithmetic. Requires rank <= 8 and cap <= 32; every rule must be
  // homogeneous (rhs words the same length as the lhs), which the quantum
  // Serre ideal guarantees and index_rules re-validates.
  using PWord = unsigned __int128;
  struct PackedRule {
    PWord bits;  // lhs letters, no length field
    int len;
    std::vector<std::pair<PWord, Scalar>> rhs;  // rhs letters, same length
  };
  using PackedPoly = std::map<PWord, Scalar, std::greater<PWord>>;
  PackedPoly preduce(PackedPoly p) const;

  int rank_ = 0;
  int cap_ = 16;
  std::vector<Rule> rules_;
  // Tombstones used only during completion; superseded rules stay in rules_
  // so queued pair indices remain stable, but they must not match, overlap,
  // or survive finalization. Empty once a system is finished.
  std::vector<bool> dead_;
  std::vector<std::vector<std::size_t>> by_first_letter_;
  std::vector<PackedRule> packed_;
  std::vector<std::vector<std::size_t>> pbucket_;
};

struct CompletionOptions {
  int degree_cap = 16;
};

// Builds the quantum Serre relators for one block (identical coefficients for
// the E and the F block) and completes them to a confluent system by overlap
// resolution. Throws DegreeCapError when closure would need a rule whose
// leading word exceeds the cap.
RewriteSystem complete_serre_system(const RootDatum& rd,
                                    const CompletionOptions& opts = {});

// Same completion with node i written as letter perm[i]. The reduction order
// is deglex over the internal letters, so the permutation selects which of
// the equivalent confluent systems gets built; rule counts and sizes differ
// sharply between choices on branched diagrams.
RewriteSystem complete_serre_system_permuted(const RootDatum& rd,
                                             const std::vector<int>& perm,
                                             const CompletionOptions& opts = {});

// Disk cache. Files are keyed by (datum name, block tag, cap) through
// cache_file_name; save/load use a line-oriented exact text format.
std::string cache_file_name(const RootDatum& rd, char block_tag, int cap);
void save_system(const RewriteSystem& sys, const std::string& path);
std::optional<RewriteSystem> load_system(const std::string& path);

// Cache directory resolution: QSPAIR_CACHE_DIR, then $HOME/.cache/qspair,
// then ./.qspair-cache.
std::string default_cache_dir();

// Completed Serre system served from the disk cache: loads a matching entry
// when one exists, completes and saves otherwise. E- and F-block relations
// carry identical coefficients, so one completed system is stored under both
// block tags. An empty cache_dir means default_cache_dir().
RewriteSystem cached_serre_system(const RootDatum& rd,
                                  const CompletionOptions& opts = {},
                                  std::string cache_dir = "");

}  // namespace qspair
