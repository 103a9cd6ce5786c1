#include "qspair/rewrite.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qspair/budget.hpp"

namespace qspair {

namespace {

Scalar scalar_div(const Scalar& a, const Scalar& b) { return a / b; }

using PWord = unsigned __int128;

constexpr int kMaxPackedLen = 32;

PWord pack_bits(const Word& w) {
  PWord bits = 0;
  for (unsigned char ch : w) bits = (bits << 3) | (ch & 7u);
  return bits;
}

PWord pack_word(const Word& w) {
  return (PWord(w.size()) << 96) | pack_bits(w);
}

Word unpack_word(PWord p) {
  auto len = static_cast<std::size_t>(p >> 96);
  Word w(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    w[len - 1 - i] = static_cast<unsigned char>(p & 7u);
    p >>= 3;
  }
  return w;
}

}  // namespace

void RewriteSystem::index_rules() {
  by_first_letter_.assign(static_cast<std::size_t>(rank_), {});
  pbucket_.assign(static_cast<std::size_t>(rank_), {});
  packed_.assign(rules_.size(), {});
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    if (dead(r)) continue;
    const Rule& rule = rules_[r];
    by_first_letter_[rule.lhs[0]].push_back(r);
    pbucket_[rule.lhs[0]].push_back(r);
    PackedRule& pr = packed_[r];
    pr.len = static_cast<int>(rule.lhs.size());
    if (pr.len > kMaxPackedLen)
      throw Error("rule length exceeds the packed-word engine limit of 32");
    pr.bits = pack_bits(rule.lhs);
    pr.rhs.clear();
    pr.rhs.reserve(rule.rhs.size());
    for (const auto& [w, c] : rule.rhs) {
      if (w.size() != rule.lhs.size())
        throw Error("inhomogeneous rule: rhs word length differs from lhs");
      pr.rhs.emplace_back(pack_bits(w), c);
    }
  }
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_match(
    const Word& w, std::size_t from) const {
  for (std::size_t p = from; p < w.size(); ++p) {
    for (std::size_t r : by_first_letter_[w[p]]) {
      const Word& l = rules_[r].lhs;
      if (l.size() <= w.size() - p && w.compare(p, l.size(), l) == 0)
        return std::make_pair(p, r);
    }
  }
  return std::nullopt;
}

bool RewriteSystem::is_irreducible(const Word& w) const {
  return !find_match(w).has_value();
}

WordPoly RewriteSystem::reduce(const Word& w, const Scalar& coef) const {
  WordPoly p;
  p.emplace(w, coef);
  return reduce(std::move(p));
}

RewriteSystem::PackedPoly RewriteSystem::preduce(PackedPoly p) const {
  PackedPoly out;
  while (!p.empty()) {
    auto top = p.begin();  // largest word under deglex = largest integer
    PWord pw = top->first;
    Scalar c = std::move(top->second);
    p.erase(top);
    if (c.is_zero()) continue;
    auto len = static_cast<std::size_t>(pw >> 96);
    if (len > static_cast<std::size_t>(cap_)) {
      std::ostringstream os;
      os << "block word of degree " << len
         << " exceeds the certified degree cap " << cap_;
      throw DegreeCapError(os.str());
    }
    PWord bits = pw & ((PWord(1) << 96) - 1);
    bool matched = false;
    for (std::size_t pos = 0; pos < len && !matched; ++pos) {
      auto first = static_cast<unsigned char>((bits >> (3 * (len - 1 - pos))) & 7u);
      for (std::size_t r : pbucket_[first]) {
        const PackedRule& rule = packed_[r];
        auto rl = static_cast<std::size_t>(rule.len);
        if (pos + rl > len) continue;
        int shift = static_cast<int>(3 * (len - pos - rl));
        if (((bits >> shift) & ((PWord(1) << (3 * rl)) - 1)) != rule.bits)
          continue;
        // Same-length splice: subtract the lhs bits, add each rhs word's.
        PWord base = pw - (rule.bits << shift);
        for (const auto& [rw, rc] : rule.rhs) {
          PWord nw = base + (rw << shift);
          Scalar nc = c * rc;
          auto it = p.find(nw);
          if (it == p.end()) {
            p.emplace(nw, std::move(nc));
          } else {
            it->second += nc;
            if (it->second.is_zero()) p.erase(it);
          }
        }
        matched = true;
        break;
      }
    }
    if (!matched) out.emplace(pw, std::move(c));
    note_terms(p.size() + out.size());
  }
  return out;
}

WordPoly RewriteSystem::reduce(WordPoly p) const {
  PackedPoly pp;
  for (auto& [w, c] : p) {
    if (c.is_zero()) continue;
    pp.emplace(pack_word(w), std::move(c));
  }
  pp = preduce(std::move(pp));
  WordPoly out;
  for (auto& [pw, c] : pp) out.emplace(unpack_word(pw), std::move(c));
  return out;
}

std::vector<RewriteSystem::Overlap> RewriteSystem::overlaps() const {
  std::vector<Overlap> out;
  for (std::size_t a = 0; a < rules_.size(); ++a) {
    if (dead(a)) continue;
    const Word& A = rules_[a].lhs;
    for (std::size_t b = 0; b < rules_.size(); ++b) {
      if (dead(b)) continue;
      const Word& B = rules_[b].lhs;
      std::size_t tmax = std::min(A.size(), B.size()) - 1;
      for (std::size_t t = 1; t <= tmax; ++t) {
        if (A.size() + B.size() - t > static_cast<std::size_t>(cap_)) continue;
        if (A.compare(A.size() - t, t, B, 0, t) != 0) continue;
        Word w = A;
        w.append(B, t, Word::npos);
        out.push_back({a, b, std::move(w)});
      }
    }
  }
  return out;
}

WordPoly RewriteSystem::resolve(const Overlap& ov) const {
  const Rule& ra = rules_[ov.rule_a];
  const Rule& rb = rules_[ov.rule_b];
  std::size_t posb = ov.word.size() - rb.lhs.size();
  WordPoly diff;
  auto put = [&](Word w, Scalar c) {
    auto it = diff.find(w);
    if (it == diff.end()) {
      diff.emplace(std::move(w), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) diff.erase(it);
    }
  };
  for (const auto& [rw, rc] : ra.rhs) {
    Word w = rw;
    w.append(ov.word, ra.lhs.size(), Word::npos);
    put(std::move(w), rc);
  }
  for (const auto& [rw, rc] : rb.rhs) {
    Word w;
    w.append(ov.word, 0, posb);
    w.append(rw);
    put(std::move(w), -rc);
  }
  return reduce(std::move(diff));
}

long RewriteSystem::count_irreducible(int degree) const {
  // Walk all words of the given degree through a prefix automaton of the
  // left-hand sides. States are proper prefixes of lhs words (trie), with a
  // longest-proper-suffix fallback computed on the fly; simpler here: since
  // degree and rule counts are small, do a direct DFS with subword checks on
  // the trailing window.
  std::size_t max_l = 0;
  for (const auto& r : rules_) max_l = std::max(max_l, r.lhs.size());
  long count = 0;
  Word w;
  auto tail_reducible = [&]() {
    // Only the suffix ending at the last letter can have become a new match.
    std::size_t start =
        w.size() >= max_l ? w.size() - max_l : static_cast<std::size_t>(0);
    for (std::size_t p = start; p < w.size(); ++p) {
      for (std::size_t r : by_first_letter_[w[p]]) {
        const Word& l = rules_[r].lhs;
        if (p + l.size() == w.size() && w.compare(p, l.size(), l) == 0)
          return true;
      }
    }
    return false;
  };
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      ++count;
      return;
    }
    for (int letter = 0; letter < rank_; ++letter) {
      w.push_back(static_cast<unsigned char>(letter));
      if (!tail_reducible()) self(self, remaining - 1);
      w.pop_back();
    }
  };
  rec(rec, degree);
  return count;
}

// ---------------------------------------------------------------------------
// Completion.

class Completion {
 public:
  Completion(int rank, int cap) : cap_(cap) {
    sys_.rank_ = rank;
    sys_.cap_ = cap;
    sys_.index_rules();
  }

  void add_relator(WordPoly p) { pending_.push_back(std::move(p)); }

  RewriteSystem run() {
    const bool trace = std::getenv("QSPAIR_TRACE") != nullptr;
    std::size_t safety = 0;
    while (!pending_.empty() || !pairs_.empty()) {
      if (++safety > 2000000)
        throw Error("completion runaway (pair limit hit)");
      if (trace && safety % 500 == 0)
        std::fprintf(stderr, "iter %zu rules %zu pending %zu pairs %zu\n",
                     safety, sys_.rules_.size(), pending_.size(),
                     pairs_.size());
      if (!pending_.empty()) {
        // Orient the pending consequence with the smallest lead first, so
        // short rules exist before long overlap words get processed.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending_.size(); ++k)
          if (deglex_less(pending_[k].begin()->first,
                          pending_[best].begin()->first))
            best = k;
        WordPoly p = sys_.reduce(std::move(pending_[best]));
        pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(best));
        if (p.empty()) continue;
        orient(std::move(p));
        continue;
      }
      auto [a, b, t] = pairs_.begin()->second;
      pairs_.erase(pairs_.begin());
      if (sys_.dead(a) || sys_.dead(b)) continue;
      const Word& A = sys_.rules_[a].lhs;
      const Word& B = sys_.rules_[b].lhs;
      if (t >= std::min(A.size(), B.size())) continue;
      if (A.compare(A.size() - t, t, B, 0, t) != 0) continue;
      RewriteSystem::Overlap ov{a, b, A};
      ov.word.append(B, t, Word::npos);
      if (has_interior_redex(ov.word)) continue;
      WordPoly diff = sys_.resolve(ov);
      if (!diff.empty()) pending_.push_back(std::move(diff));
    }
    finalize();
    return std::move(sys_);
  }

 private:
  void orient(WordPoly p) {
    const Word& lead = p.begin()->first;
    if (static_cast<int>(lead.size()) > cap_) {
      std::ostringstream os;
      os << "degree cap " << cap_ << " exceeded before closure (rule of degree "
         << lead.size() << " required)";
      throw DegreeCapError(os.str());
    }
    if (std::getenv("QSPAIR_TRACE")) {
      std::fprintf(stderr, "orient:");
      for (unsigned char ch : lead) std::fprintf(stderr, " %d", ch);
      std::fprintf(stderr, " (%zu terms)\n", p.size());
    }
    Rule rule;
    rule.lhs = lead;
    Scalar lc = p.begin()->second;
    for (auto it = std::next(p.begin()); it != p.end(); ++it)
      rule.rhs.emplace_back(it->first, scalar_div(-it->second, lc));
    std::size_t idx = sys_.rules_.size();
    // Any existing rule whose lhs contains the new lhs is superseded: its
    // content re-enters the pending queue and the rule is dropped.
    for (std::size_t r = 0; r < idx; ++r) {
      if (sys_.dead(r)) continue;
      if (sys_.rules_[r].lhs.find(rule.lhs) != Word::npos) {
        pending_.push_back(rule_content(r));
        mark_dead(r);
      }
    }
    sys_.rules_.push_back(std::move(rule));
    sys_.dead_.resize(sys_.rules_.size(), false);
    sys_.index_rules();
    const Word& L = sys_.rules_[idx].lhs;
    // Interreduce: refresh any stored rhs the new rule reduces further, so
    // later reductions never cascade through stale terms.
    for (std::size_t r = 0; r < idx; ++r) {
      if (sys_.dead(r)) continue;
      bool touched = false;
      for (const auto& [w, c] : sys_.rules_[r].rhs)
        if (w.find(L) != Word::npos) {
          touched = true;
          break;
        }
      if (!touched) continue;
      WordPoly p2;
      for (auto& [w, c] : sys_.rules_[r].rhs) p2.emplace(w, c);
      WordPoly q2 = sys_.reduce(std::move(p2));
      sys_.rules_[r].rhs.assign(q2.begin(), q2.end());
    }
    for (std::size_t r = 0; r <= idx; ++r) {
      if (sys_.dead(r)) continue;
      const Word& R = sys_.rules_[r].lhs;
      for (std::size_t t = 1; t < std::min(L.size(), R.size()); ++t) {
        std::size_t len = L.size() + R.size() - t;
        if (len > static_cast<std::size_t>(cap_)) continue;
        pairs_.emplace(len, Trip{idx, r, t});
        if (r != idx) pairs_.emplace(len, Trip{r, idx, t});
      }
    }
  }

  // True if some rule matches strictly inside w (touching neither end). Such
  // a critical pair is subsumed: both one-step rewrites connect to the
  // interior rewrite through critical pairs of strictly shorter overlap
  // words, so induction on overlap length lets the pair be skipped. The
  // final certificate still checks every overlap of the finished system.
  bool has_interior_redex(const Word& w) const {
    for (std::size_t p = 1; p + 1 < w.size(); ++p) {
      for (std::size_t r : sys_.by_first_letter_[w[p]]) {
        const Word& l = sys_.rules_[r].lhs;
        if (p + l.size() + 1 <= w.size() && w.compare(p, l.size(), l) == 0)
          return true;
      }
    }
    return false;
  }

  WordPoly rule_content(std::size_t r) const {
    WordPoly p;
    p.emplace(sys_.rules_[r].lhs, Scalar(1));
    for (const auto& [w, c] : sys_.rules_[r].rhs) {
      auto [it, fresh] = p.try_emplace(w, -c);
      if (!fresh) it->second -= c;
    }
    return p;
  }

  void mark_dead(std::size_t r) {
    sys_.dead_.resize(sys_.rules_.size(), false);
    sys_.dead_[r] = true;
  }

  void finalize() {
    // Drop dead rules.
    std::vector<Rule> live;
    for (std::size_t r = 0; r < sys_.rules_.size(); ++r)
      if (!sys_.dead(r)) live.push_back(std::move(sys_.rules_[r]));
    sys_.rules_ = std::move(live);
    sys_.dead_.clear();
    sys_.index_rules();
    // Bring every rhs to normal form w.r.t. the final rule set.
    for (int round = 0; round < 16; ++round) {
      bool changed = false;
      std::vector<Rule> next = sys_.rules_;
      for (auto& rule : next) {
        WordPoly p;
        for (const auto& [w, c] : rule.rhs) p.emplace(w, c);
        WordPoly q = sys_.reduce(std::move(p));
        std::vector<std::pair<Word, Scalar>> rhs(q.begin(), q.end());
        if (rhs != rule.rhs) {
          rule.rhs = std::move(rhs);
          changed = true;
        }
      }
      sys_.rules_ = std::move(next);
      sys_.index_rules();
      if (!changed) break;
      if (round == 15) throw Error("rule interreduction failed to stabilize");
    }
    // Certificate: every overlap ambiguity of the final system resolves.
    for (const auto& ov : sys_.overlaps()) {
      if (!sys_.resolve(ov).empty())
        throw Error("completion closed with an unresolved overlap");
    }
  }

  int cap_;
  RewriteSystem sys_;
  std::vector<WordPoly> pending_;
  // Critical pairs keyed by overlap word length; shortest first.
  using Trip = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::multimap<std::size_t, Trip> pairs_;
};

RewriteSystem complete_serre_system_permuted(const RootDatum& rd,
                                             const std::vector<int>& perm,
                                             const CompletionOptions& opts) {
  Completion comp(rd.rank(), opts.degree_cap);
  for (int i = 0; i < rd.rank(); ++i) {
    for (int j = 0; j < rd.rank(); ++j) {
      if (i == j) continue;
      int n = 1 - rd.a(i, j);
      WordPoly rel;
      for (int s = 0; s <= n; ++s) {
        Word w;
        w.append(static_cast<std::size_t>(n - s),
                 static_cast<unsigned char>(perm[i]));
        w.push_back(static_cast<unsigned char>(perm[j]));
        w.append(static_cast<std::size_t>(s),
                 static_cast<unsigned char>(perm[i]));
        Scalar c = Scalar::qbinom(n, s, rd.d(i));
        if (s % 2 != 0) c = -c;
        auto [it, fresh] = rel.try_emplace(std::move(w), c);
        if (!fresh) it->second += c;
      }
      comp.add_relator(std::move(rel));
    }
  }
  return comp.run();
}

RewriteSystem complete_serre_system(const RootDatum& rd,
                                    const CompletionOptions& opts) {
  std::vector<int> perm(static_cast<std::size_t>(rd.rank()));
  for (int i = 0; i < rd.rank(); ++i) perm[static_cast<std::size_t>(i)] = i;
  return complete_serre_system_permuted(rd, perm, opts);
}

// ---------------------------------------------------------------------------
// Disk cache.

std::string cache_file_name(const RootDatum& rd, char block_tag, int cap) {
  return rd.name() + "_block" + std::string(1, block_tag) + "_cap" +
         std::to_string(cap) + ".rws";
}

namespace {

void write_word(std::ostream& os, const Word& w) {
  os << w.size();
  for (unsigned char ch : w) os << ' ' << static_cast<int>(ch);
}

bool read_word(std::istream& is, Word& w) {
  std::size_t n;
  if (!(is >> n)) return false;
  w.clear();
  for (std::size_t k = 0; k < n; ++k) {
    int ch;
    if (!(is >> ch) || ch < 0 || ch > 255) return false;
    w.push_back(static_cast<unsigned char>(ch));
  }
  return true;
}

void write_poly(std::ostream& os, const IntPoly& p) {
  os << p.degree();
  for (int k = 0; k <= p.degree(); ++k) os << ' ' << p.coeff(k).get_str();
}

bool read_poly(std::istream& is, IntPoly& p) {
  int deg;
  if (!(is >> deg)) return false;
  p = IntPoly();
  for (int k = 0; k <= deg; ++k) {
    std::string s;
    if (!(is >> s)) return false;
    p += IntPoly::monomial(BigInt(s), k);
  }
  return true;
}

}  // namespace

void save_system(const RewriteSystem& sys, const std::string& path) {
  std::string tmp = path + ".tmp" + std::to_string(::getpid());
  std::ofstream os(tmp);
  if (!os) throw Error("cannot write cache file " + path);
  os << "QSPREWRITE 1\n";
  os << "rank " << sys.rank() << " cap " << sys.cap() << " rules "
     << sys.rules().size() << "\n";
  for (const auto& rule : sys.rules()) {
    os << "L ";
    write_word(os, rule.lhs);
    os << " T " << rule.rhs.size() << "\n";
    for (const auto& [w, c] : rule.rhs) {
      os << "  ";
      write_word(os, w);
      os << " N ";
      write_poly(os, c.num());
      os << " D ";
      write_poly(os, c.den());
      os << "\n";
    }
  }
  os << "end\n";
  os.close();
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("cannot move cache file into place: " + path);
}

std::optional<RewriteSystem> load_system(const std::string& path) {
  std::ifstream is(path);
  if (!is) return std::nullopt;
  std::string tag;
  int version;
  if (!(is >> tag >> version) || tag != "QSPREWRITE" || version != 1)
    return std::nullopt;
  RewriteSystem sys;
  std::size_t nrules;
  if (!(is >> tag >> sys.rank_) || tag != "rank") return std::nullopt;
  if (!(is >> tag >> sys.cap_) || tag != "cap") return std::nullopt;
  if (!(is >> tag >> nrules) || tag != "rules") return std::nullopt;
  for (std::size_t r = 0; r < nrules; ++r) {
    Rule rule;
    std::size_t nterms;
    if (!(is >> tag) || tag != "L") return std::nullopt;
    if (!read_word(is, rule.lhs)) return std::nullopt;
    if (!(is >> tag >> nterms) || tag != "T") return std::nullopt;
    for (std::size_t t = 0; t < nterms; ++t) {
      Word w;
      IntPoly num, den;
      if (!read_word(is, w)) return std::nullopt;
      if (!(is >> tag) || tag != "N" || !read_poly(is, num))
        return std::nullopt;
      if (!(is >> tag) || tag != "D" || !read_poly(is, den))
        return std::nullopt;
      rule.rhs.emplace_back(std::move(w), Scalar::of_polys(num, den));
    }
    sys.rules_.push_back(std::move(rule));
  }
  if (!(is >> tag) || tag != "end") return std::nullopt;
  sys.index_rules();
  return sys;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("QSPAIR_CACHE_DIR"); env && *env)
    return env;
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::string(home) + "/.cache/qspair";
  return ".qspair-cache";
}

RewriteSystem cached_serre_system(const RootDatum& rd,
                                  const CompletionOptions& opts,
                                  std::string cache_dir) {
  if (cache_dir.empty()) cache_dir = default_cache_dir();
  std::filesystem::create_directories(cache_dir);
  std::string e_path =
      cache_dir + "/" + cache_file_name(rd, 'E', opts.degree_cap);
  std::string f_path =
      cache_dir + "/" + cache_file_name(rd, 'F', opts.degree_cap);
  if (auto sys = load_system(e_path); sys && sys->rank() == rd.rank())
    return std::move(*sys);
  RewriteSystem sys = complete_serre_system(rd, opts);
  save_system(sys, e_path);
  save_system(sys, f_path);
  return sys;
}

}  // namespace qspair
