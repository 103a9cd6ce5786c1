#include "qspair/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <tuple>

#include "qspair/budget.hpp"

namespace qspair {

namespace {

std::size_t hash_bytes(const unsigned char* p, std::size_t n,
                       std::size_t seed) {
  std::size_t h = seed;
  for (std::size_t i = 0; i < n; ++i)
    h = (h ^ static_cast<std::size_t>(p[i])) * 1099511628211ull;
  return h;
}

std::atomic<std::uint64_t> next_algebra_id{1};

}  // namespace

std::size_t MonHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = hash_bytes(m.f.data(), m.f.size(), 14695981039346656037ull);
  h = hash_bytes(reinterpret_cast<const unsigned char*>(m.k.data()),
                 m.k.size() * sizeof(int16_t), h ^ 0x9e3779b97f4a7c15ull);
  h = hash_bytes(m.e.data(), m.e.size(), h ^ 0xc2b2ae3d27d4eb4full);
  return h;
}

std::size_t TensorMonHash::operator()(const TensorMonomial& t) const noexcept {
  MonHash mh;
  std::size_t h = mh(t.a);
  return h ^ (mh(t.b) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

// ---------------------------------------------------------------------------
// Element (free algebra).

void Element::add_term(FreeWord w, Scalar c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(std::move(w), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element out(alg_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

Element& Element::operator+=(const Element& o) {
  if (!alg_) alg_ = o.alg_;
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (!alg_) alg_ = o.alg_;
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  Element out(a.alg_ ? a.alg_ : b.alg_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
  }
  return out;
}

Element operator*(const Scalar& c, Element a) {
  if (c.is_zero()) return Element(a.alg_);
  for (auto& [w, cw] : a.terms_) cw *= c;
  return a;
}

// ---------------------------------------------------------------------------
// NormalElement.

void NormalElement::add(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalElement NormalElement::operator-() const {
  NormalElement out(alg_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

NormalElement& NormalElement::operator+=(const NormalElement& o) {
  if (!alg_) alg_ = o.alg_;
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

NormalElement& NormalElement::operator-=(const NormalElement& o) {
  if (!alg_) alg_ = o.alg_;
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

NormalElement operator*(const NormalElement& a, const NormalElement& b) {
  const Algebra* alg = a.alg_ ? a.alg_ : b.alg_;
  if (!alg) throw Error("normal element product without algebra context");
  return alg->mul(a, b);
}

NormalElement operator*(const Scalar& c, NormalElement a) {
  if (c.is_zero()) return NormalElement(a.alg_);
  for (auto& [m, cm] : a.terms_) cm *= c;
  return a;
}

NormalElement NormalElement::pow(int n) const {
  if (n < 0) throw Error("negative power of an algebra element");
  if (!alg_) throw Error("power without algebra context");
  NormalElement out = alg_->one();
  for (int t = 0; t < n; ++t) out = alg_->mul(out, *this);
  return out;
}

Element NormalElement::to_free() const {
  Element out(alg_);
  int rank = alg_ ? alg_->rank() : 8;
  for (const auto& [m, c] : terms_) {
    FreeWord w;
    for (unsigned char n : m.f) w.push_back(free_letter(GenKind::F, n));
    for (int i = 0; i < rank; ++i) {
      int16_t kk = m.k[i];
      GenKind kind = kk > 0 ? GenKind::Kplus : GenKind::Kminus;
      for (int t = 0; t < std::abs(kk); ++t)
        w.push_back(free_letter(kind, i));
    }
    for (unsigned char n : m.e) w.push_back(free_letter(GenKind::E, n));
    out.add_term(std::move(w), c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// TensorElement.

void TensorElement::add(const TensorMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement TensorElement::pure(const NormalElement& a,
                                  const NormalElement& b) {
  TensorElement out(a.context() ? a.context() : b.context());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add({ma, mb}, ca * cb);
  }
  return out;
}

TensorElement TensorElement::operator-() const {
  TensorElement out(alg_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (!alg_) alg_ = o.alg_;
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  if (!alg_) alg_ = o.alg_;
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  const Algebra* alg = a.alg_ ? a.alg_ : b.alg_;
  if (!alg) throw Error("tensor product without algebra context");
  TensorElement out(alg);
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) {
      NormalElement left(alg), right(alg);
      alg->mul_mon(ta.a, tb.a, Scalar(1), left);
      alg->mul_mon(ta.b, tb.b, Scalar(1), right);
      Scalar c = ca * cb;
      for (const auto& [ml, cl] : left.terms()) {
        for (const auto& [mr, cr] : right.terms())
          out.add({ml, mr}, c * cl * cr);
      }
      note_terms(out.size());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Algebra.

Algebra::Algebra(RootDatum rd, AlgebraOptions opts)
    : rd_(std::move(rd)), opts_(std::move(opts)), id_(next_algebra_id++) {
  if (rd_.rank() > 8) throw Error("rank above 8 not supported");
  CompletionOptions copts;
  copts.degree_cap = opts_.degree_cap;
  if (opts_.use_cache) {
    if (opts_.cache_dir.empty()) opts_.cache_dir = default_cache_dir();
    serre_ = cached_serre_system(rd_, copts, opts_.cache_dir);
  } else {
    serre_ = complete_serre_system(rd_, copts);
  }
}

Element Algebra::free_one() const {
  Element out(this);
  out.add_term(FreeWord(), Scalar(1));
  return out;
}

Element Algebra::free_gen(GenKind kind, int node) const {
  if (node < 0 || node >= rank()) throw Error("node out of range");
  Element out(this);
  out.add_term(FreeWord(1, free_letter(kind, node)), Scalar(1));
  return out;
}

Element Algebra::free_scalar(const Scalar& c) const {
  Element out(this);
  out.add_term(FreeWord(), c);
  return out;
}

NormalElement Algebra::one() const {
  NormalElement out(this);
  out.add(Monomial{}, Scalar(1));
  return out;
}

NormalElement Algebra::E(int i) const {
  if (i < 0 || i >= rank()) throw Error("node out of range");
  Monomial m;
  m.e.push_back(static_cast<unsigned char>(i));
  NormalElement out(this);
  out.add(m, Scalar(1));
  return out;
}

NormalElement Algebra::F(int i) const {
  if (i < 0 || i >= rank()) throw Error("node out of range");
  Monomial m;
  m.f.push_back(static_cast<unsigned char>(i));
  NormalElement out(this);
  out.add(m, Scalar(1));
  return out;
}

NormalElement Algebra::K(int i, int exp) const {
  if (i < 0 || i >= rank()) throw Error("node out of range");
  Monomial m;
  m.k[i] = static_cast<int16_t>(exp);
  NormalElement out(this);
  out.add(m, Scalar(1));
  return out;
}

NormalElement Algebra::scalar(const Scalar& c) const {
  NormalElement out(this);
  out.add(Monomial{}, c);
  return out;
}

NormalElement Algebra::E_div(int i, int n) const {
  if (n < 0) throw Error("negative divided power");
  return Scalar::qfact(n, rd_.d(i)).inverse() * E(i).pow(n);
}

NormalElement Algebra::F_div(int i, int n) const {
  if (n < 0) throw Error("negative divided power");
  return Scalar::qfact(n, rd_.d(i)).inverse() * F(i).pow(n);
}

long Algebra::k_dot_word(const std::array<int16_t, 8>& kvec,
                         const Word& w) const {
  long total = 0;
  for (int i = 0; i < rank(); ++i) {
    if (kvec[i] == 0) continue;
    long row = 0;
    for (unsigned char n : w) row += rd_.pairing(i, n);
    total += static_cast<long>(kvec[i]) * row;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Straightening.

namespace {

struct ExchKey {
  std::uint64_t alg;
  Word e, f;
  bool operator==(const ExchKey&) const = default;
};

struct ExchKeyHash {
  std::size_t operator()(const ExchKey& k) const noexcept {
    std::size_t h = hash_bytes(k.e.data(), k.e.size(), k.alg * 0x100000001b3ull);
    return hash_bytes(k.f.data(), k.f.size(), h ^ 0x9e3779b97f4a7c15ull);
  }
};

struct ReduceKey {
  std::uint64_t alg;
  Word w;
  bool operator==(const ReduceKey&) const = default;
};

struct ReduceKeyHash {
  std::size_t operator()(const ReduceKey& k) const noexcept {
    return hash_bytes(k.w.data(), k.w.size(), k.alg * 0x100000001b3ull);
  }
};

}  // namespace

const std::vector<Algebra::ExchTerm>& Algebra::exchange(
    const Word& eword, const Word& fword) const {
  thread_local std::unordered_map<ExchKey, std::vector<ExchTerm>, ExchKeyHash>
      cache;
  ExchKey key{id_, eword, fword};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  std::vector<ExchTerm> out;
  if (fword.empty()) {
    out.push_back({Word(), {}, eword, Scalar(1)});
  } else {
    unsigned char j = fword[0];
    Word u = fword.substr(1);
    std::map<std::tuple<Word, std::array<int16_t, 8>, Word>, Scalar> merged;
    auto put = [&](Word f, const std::array<int16_t, 8>& k, Word e, Scalar c) {
      auto key2 = std::make_tuple(std::move(f), k, std::move(e));
      auto it = merged.find(key2);
      if (it == merged.end()) {
        merged.emplace(std::move(key2), std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) merged.erase(it);
      }
    };
    // F_j passes all the way to the left.
    for (const ExchTerm& t : exchange(eword, u)) {
      Word f;
      f.push_back(j);
      f.append(t.f);
      put(std::move(f), t.k, t.e, t.c);
    }
    // Cross terms at every E_j in eword.
    Scalar inv =
        (Scalar::q_power(rd_.d(j)) - Scalar::q_power(-rd_.d(j))).inverse();
    long acc = 0;  // (alpha_j, weight of the prefix)
    for (std::size_t p = 0; p < eword.size(); ++p) {
      if (eword[p] == j) {
        Word rest = eword;
        rest.erase(p, 1);
        for (const ExchTerm& t : exchange(rest, u)) {
          long fsum = 0;
          for (unsigned char n : t.f) fsum += rd_.pairing(j, n);
          for (int s : {1, -1}) {
            Scalar c = t.c * inv * Scalar::q_power(-s * (acc + fsum));
            if (s < 0) c = -c;
            std::array<int16_t, 8> k2 = t.k;
            k2[j] = static_cast<int16_t>(k2[j] + s);
            put(t.f, k2, t.e, std::move(c));
          }
        }
      }
      acc += rd_.pairing(j, eword[p]);
    }
    out.reserve(merged.size());
    for (auto& [mk, c] : merged)
      out.push_back({std::get<0>(mk), std::get<1>(mk), std::get<2>(mk),
                     std::move(c)});
  }
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

const std::vector<std::pair<Word, Scalar>>& Algebra::block_reduce(
    const Word& w) const {
  thread_local std::unordered_map<ReduceKey,
                                  std::vector<std::pair<Word, Scalar>>,
                                  ReduceKeyHash>
      cache;
  ReduceKey key{id_, w};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  WordPoly p = serre_.reduce(w, Scalar(1));
  std::vector<std::pair<Word, Scalar>> out(p.begin(), p.end());
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

void Algebra::mul_mon(const Monomial& a, const Monomial& b, const Scalar& coef,
                      NormalElement& acc) const {
  if (coef.is_zero()) return;
  for (const ExchTerm& t : exchange(a.e, b.f)) {
    Scalar c = coef * t.c;
    long shift = -k_dot_word(a.k, t.f) - k_dot_word(b.k, t.e);
    if (shift != 0) c *= Scalar::q_power(shift);
    std::array<int16_t, 8> k{};
    for (int i = 0; i < rank(); ++i)
      k[i] = static_cast<int16_t>(a.k[i] + t.k[i] + b.k[i]);
    const auto& fparts = block_reduce(a.f + t.f);
    const auto& eparts = block_reduce(t.e + b.e);
    for (const auto& [fw, fc] : fparts) {
      for (const auto& [ew, ec] : eparts) {
        Monomial m;
        m.f = fw;
        m.k = k;
        m.e = ew;
        acc.add(m, c * fc * ec);
      }
    }
    note_terms(acc.size());
  }
}

NormalElement Algebra::mul(const NormalElement& a,
                           const NormalElement& b) const {
  NormalElement out(this);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) mul_mon(ma, mb, ca * cb, out);
  }
  return out;
}

NormalElement Algebra::nf(const Element& a) const {
  NormalElement out(this);
  for (const auto& [w, c] : a.terms()) {
    NormalElement cur = one();
    for (unsigned char letter : w) {
      NormalElement g(this);
      int n = node_of(letter);
      switch (kind_of(letter)) {
        case GenKind::F: g = F(n); break;
        case GenKind::Kplus: g = K(n, 1); break;
        case GenKind::Kminus: g = K(n, -1); break;
        case GenKind::E: g = E(n); break;
      }
      cur = mul(cur, g);
    }
    out += c * cur;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hopf structure.

namespace {

NormalElement mon_element(const Algebra& alg, const Monomial& m) {
  NormalElement out(&alg);
  out.add(m, Scalar(1));
  return out;
}

}  // namespace

TensorElement Algebra::coproduct_mon(const Monomial& m) const {
  TensorElement out = TensorElement::pure(one(), one());
  for (unsigned char n : m.f) {
    TensorElement leg = TensorElement::pure(F(n), K(n, -1));
    leg += TensorElement::pure(one(), F(n));
    out = out * leg;
  }
  bool has_k = false;
  for (int i = 0; i < rank(); ++i) has_k = has_k || m.k[i] != 0;
  if (has_k) {
    Monomial km;
    km.k = m.k;
    NormalElement ke = mon_element(*this, km);
    out = out * TensorElement::pure(ke, ke);
  }
  for (unsigned char n : m.e) {
    TensorElement leg = TensorElement::pure(E(n), one());
    leg += TensorElement::pure(K(n, 1), E(n));
    out = out * leg;
  }
  return out;
}

TensorElement Algebra::coproduct(const NormalElement& a) const {
  TensorElement out(this);
  for (const auto& [m, c] : a.terms()) {
    TensorElement d = coproduct_mon(m);
    for (const auto& [tm, tc] : d.terms()) out.add(tm, c * tc);
  }
  return out;
}

NormalElement Algebra::antipode_mon(const Monomial& m) const {
  // Antihomomorphism: letters reversed, blocks reversed.
  NormalElement out = one();
  for (auto it = m.e.rbegin(); it != m.e.rend(); ++it) {
    int n = *it;
    out = mul(out, -(mul(K(n, -1), E(n))));
  }
  bool has_k = false;
  for (int i = 0; i < rank(); ++i) has_k = has_k || m.k[i] != 0;
  if (has_k) {
    Monomial km;
    for (int i = 0; i < rank(); ++i) km.k[i] = static_cast<int16_t>(-m.k[i]);
    out = mul(out, mon_element(*this, km));
  }
  for (auto it = m.f.rbegin(); it != m.f.rend(); ++it) {
    int n = *it;
    out = mul(out, -(mul(F(n), K(n, 1))));
  }
  return out;
}

NormalElement Algebra::antipode(const NormalElement& a) const {
  NormalElement out(this);
  for (const auto& [m, c] : a.terms()) out += c * antipode_mon(m);
  return out;
}

Scalar Algebra::counit(const NormalElement& a) const {
  Scalar out;
  for (const auto& [m, c] : a.terms()) {
    if (m.f.empty() && m.e.empty()) out += c;
  }
  return out;
}

NormalElement Algebra::ad(const NormalElement& x,
                          const NormalElement& u) const {
  TensorElement d = coproduct(x);
  NormalElement out(this);
  for (const auto& [tm, c] : d.terms()) {
    NormalElement piece =
        mul(mul(mon_element(*this, tm.a), u), antipode_mon(tm.b));
    out += c * piece;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reference reducer on free elements.

namespace {

struct Violation {
  enum Kind {
    PairEF,     // E_i F_j adjacent
    PairEK,     // E_i K^s_j adjacent
    PairKF,     // K^s_j F_i adjacent
    KCancel,    // K^+_n K^-_n or K^-_n K^+_n
    KSwap,      // K-letters with descending nodes
    BlockRule,  // completed-system rule inside an F- or E-run
  } kind;
  std::size_t pos;
  std::size_t rule = 0;  // BlockRule only
  std::size_t len = 0;   // BlockRule only: matched lhs length
};

bool is_k(GenKind k) { return k == GenKind::Kplus || k == GenKind::Kminus; }
int k_sign(GenKind k) { return k == GenKind::Kplus ? 1 : -1; }

}  // namespace

Element Algebra::naive_normal_form(const Element& a,
                                   std::vector<Element>* steps) const {
  Element cur = a;
  if (!cur.context()) cur += free_zero();
  for (;;) {
    const FreeWord* word = nullptr;
    Scalar coef;
    std::optional<Violation> found;
    for (const auto& [w, c] : cur.terms()) {
      for (std::size_t p = 0; p + 1 < w.size() && !found; ++p) {
        GenKind ka = kind_of(w[p]), kb = kind_of(w[p + 1]);
        int na = node_of(w[p]), nb = node_of(w[p + 1]);
        if (ka == GenKind::E && kb == GenKind::F)
          found = Violation{Violation::PairEF, p};
        else if (ka == GenKind::E && is_k(kb))
          found = Violation{Violation::PairEK, p};
        else if (is_k(ka) && kb == GenKind::F)
          found = Violation{Violation::PairKF, p};
        else if (is_k(ka) && is_k(kb) && na == nb && ka != kb)
          found = Violation{Violation::KCancel, p};
        else if (is_k(ka) && is_k(kb) && na > nb)
          found = Violation{Violation::KSwap, p};
      }
      if (!found) {
        // Reducible F- or E-run windows.
        std::size_t p = 0;
        while (p < w.size() && !found) {
          GenKind k = kind_of(w[p]);
          if (k != GenKind::F && k != GenKind::E) {
            ++p;
            continue;
          }
          std::size_t end = p;
          Word nodes;
          while (end < w.size() && kind_of(w[end]) == k) {
            nodes.push_back(static_cast<unsigned char>(node_of(w[end])));
            ++end;
          }
          if (auto m = serre_.find_match(nodes)) {
            auto [off, ri] = *m;
            found = Violation{Violation::BlockRule, p + off, ri,
                              serre_.rules()[ri].lhs.size()};
          }
          p = end;
        }
      }
      if (found) {
        word = &w;
        coef = c;
        break;
      }
    }
    if (!found) break;

    const FreeWord w = *word;
    const Violation v = *found;
    Element repl(this);
    auto splice = [&](std::size_t from, std::size_t count, FreeWord mid,
                      Scalar c) {
      FreeWord nw;
      nw.append(w, 0, from);
      nw.append(mid);
      nw.append(w, from + count, FreeWord::npos);
      repl.add_term(std::move(nw), std::move(c));
    };
    GenKind ka = kind_of(w[v.pos]);
    int na = node_of(w[v.pos]);
    GenKind kb = v.kind == Violation::BlockRule ? ka : kind_of(w[v.pos + 1]);
    int nb = v.kind == Violation::BlockRule ? 0 : node_of(w[v.pos + 1]);
    switch (v.kind) {
      case Violation::PairEF: {
        FreeWord sw;
        sw.push_back(w[v.pos + 1]);
        sw.push_back(w[v.pos]);
        splice(v.pos, 2, sw, coef);
        if (na == nb) {
          Scalar inv = (Scalar::q_power(rd_.d(na)) -
                        Scalar::q_power(-rd_.d(na)))
                           .inverse();
          splice(v.pos, 2, FreeWord(1, free_letter(GenKind::Kplus, na)),
                 coef * inv);
          splice(v.pos, 2, FreeWord(1, free_letter(GenKind::Kminus, na)),
                 -(coef * inv));
        }
        break;
      }
      case Violation::PairEK: {
        FreeWord sw;
        sw.push_back(w[v.pos + 1]);
        sw.push_back(w[v.pos]);
        splice(v.pos, 2, sw,
               coef * Scalar::q_power(-k_sign(kb) * rd_.pairing(nb, na)));
        break;
      }
      case Violation::PairKF: {
        FreeWord sw;
        sw.push_back(w[v.pos + 1]);
        sw.push_back(w[v.pos]);
        splice(v.pos, 2, sw,
               coef * Scalar::q_power(-k_sign(ka) * rd_.pairing(na, nb)));
        break;
      }
      case Violation::KCancel:
        splice(v.pos, 2, FreeWord(), coef);
        break;
      case Violation::KSwap: {
        FreeWord sw;
        sw.push_back(w[v.pos + 1]);
        sw.push_back(w[v.pos]);
        splice(v.pos, 2, sw, coef);
        break;
      }
      case Violation::BlockRule: {
        const Rule& rule = serre_.rules()[v.rule];
        for (const auto& [rw, rc] : rule.rhs) {
          FreeWord mid;
          for (unsigned char n : rw) mid.push_back(free_letter(ka, n));
          splice(v.pos, v.len, std::move(mid), coef * rc);
        }
        break;
      }
    }
    if (steps) {
      Element delta(this);
      delta.add_term(w, coef);
      delta -= repl;
      steps->push_back(std::move(delta));
    }
    cur.add_term(w, -coef);
    cur += repl;
    note_terms(cur.terms().size());
  }
  return cur;
}

}  // namespace qspair
