#include "qspair/qsp.hpp"

#include <algorithm>
#include <sstream>

#include "qspair/budget.hpp"
#include "qspair/errors.hpp"
#include "qspair/lusztig.hpp"

namespace qspair {

void CoidealElement::add(const FreeWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CoidealElement CoidealElement::operator-() const {
  CoidealElement out(gens_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

CoidealElement& CoidealElement::operator+=(const CoidealElement& o) {
  if (!gens_) gens_ = o.gens_;
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

CoidealElement& CoidealElement::operator-=(const CoidealElement& o) {
  if (!gens_) gens_ = o.gens_;
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

CoidealElement operator*(const CoidealElement& a, const CoidealElement& b) {
  CoidealElement out(a.gens_ ? a.gens_ : b.gens_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(wa + wb, ca * cb);
  return out;
}

CoidealElement operator*(const Scalar& c, CoidealElement a) {
  CoidealElement out(a.gens_);
  if (c.is_zero()) return out;
  for (auto& [w, coef] : a.terms_) out.terms_.emplace(w, c * coef);
  return out;
}

std::string CoidealElement::str() const {
  if (!gens_) return is_zero() ? "0" : "<detached>";
  return gens_->str(*this);
}

CoidealElement qcomm(const CoidealElement& a, const CoidealElement& b) {
  return a * b - Scalar::q_power(1) * (b * a);
}

NormalElement qcomm(const NormalElement& a, const NormalElement& b) {
  return a * b - Scalar::q_power(1) * (b * a);
}

namespace {

// ad(E_{i-1} E_{i+1})(E_i) with 0-based odd i: the case III twist of the
// even-node generator. The adjoint action of a product splits factor by
// factor.
NormalElement twisted_E(const Algebra& alg, int i) {
  return alg.ad(alg.E(i - 1) * alg.E(i + 1), alg.E(i));
}

}  // namespace

GeneratorSet::GeneratorSet(const Algebra* alg, CaseSpec spec)
    : alg_(alg), spec_(std::move(spec)) {
  const Algebra& A = *alg_;
  const RootDatum& rd = spec_.g();
  if (A.rank() != rd.rank())
    throw Error("algebra rank does not match the case's ambient datum");
  auto put = [&](CoKind kind, int node, NormalElement img) {
    unsigned char l = co_letter(kind, node);
    images_.emplace(l, std::move(img));
    letters_.push_back(l);
  };
  switch (spec_.kind()) {
    case Case::I:
      for (int i = 0; i < rd.rank(); ++i)
        put(CoKind::B, i, A.F(i) - A.K(i, -1) * A.E(i));
      break;
    case Case::IIA:
    case Case::IID:
    case Case::IIE:
      for (int i = 0; i < rd.rank(); ++i)
        put(CoKind::B, i, A.F(i) - A.K(i, -1) * A.E(spec_.tau(i)));
      for (int i = 0; i < rd.rank(); ++i) {
        if (spec_.tau_fixed(i)) continue;
        put(CoKind::Cplus, i, A.K(i, 1) * A.K(spec_.tau(i), -1));
        put(CoKind::Cminus, i, A.K(spec_.tau(i), 1) * A.K(i, -1));
      }
      break;
    case Case::III:
      for (int i = 0; i < rd.rank(); ++i) {
        if (i % 2 == 0) {
          put(CoKind::B, i, A.F(i));
          put(CoKind::E, i, A.E(i));
          put(CoKind::Kplus, i, A.K(i, 1));
          put(CoKind::Kminus, i, A.K(i, -1));
        } else {
          NormalElement img = A.F(i) - A.K(i, -1) * twisted_E(A, i);
          NormalElement via_wX =
              A.F(i) -
              A.K(i, -1) * apply_endomorphism(t_wX(A, spec_.m()), A.E(i));
          if (!(img == via_wX))
            throw Error("case III generator cross-check failed at node " +
                        std::to_string(i + 1));
          put(CoKind::B, i, std::move(img));
        }
      }
      break;
  }
  std::sort(letters_.begin(), letters_.end());
}

bool GeneratorSet::has_letter(unsigned char letter) const {
  return images_.count(letter) != 0;
}

const NormalElement& GeneratorSet::letter_image(unsigned char letter) const {
  auto it = images_.find(letter);
  if (it == images_.end())
    throw Error("no coideal generator " + letter_name(letter));
  return it->second;
}

std::string GeneratorSet::letter_name(unsigned char letter) const {
  int node = node_of(letter) + 1;
  switch (co_kind_of(letter)) {
    case CoKind::B:
      return "B" + std::to_string(node);
    case CoKind::Cplus:
      return "C" + std::to_string(node);
    case CoKind::Cminus:
      return "C" + std::to_string(node) + "^-1";
    case CoKind::Kplus:
      return "K" + std::to_string(node);
    case CoKind::Kminus:
      return "K" + std::to_string(node) + "^-1";
    case CoKind::E:
      return "E" + std::to_string(node);
  }
  return "?";
}

CoidealElement GeneratorSet::one() const {
  CoidealElement out(this);
  out.add(FreeWord(), Scalar(1));
  return out;
}

CoidealElement GeneratorSet::scalar(const Scalar& c) const {
  CoidealElement out(this);
  out.add(FreeWord(), c);
  return out;
}

CoidealElement GeneratorSet::letter(unsigned char l) const {
  if (!images_.count(l)) throw Error("no coideal generator " + letter_name(l));
  CoidealElement out(this);
  out.add(FreeWord(1, l), Scalar(1));
  return out;
}

CoidealElement GeneratorSet::C(int i, int exp) const {
  if (exp == 1) return letter(co_letter(CoKind::Cplus, i));
  if (exp == -1) return letter(co_letter(CoKind::Cminus, i));
  throw Error("cartan letter exponent must be +1 or -1");
}

CoidealElement GeneratorSet::Kodd(int i, int exp) const {
  if (exp == 1) return letter(co_letter(CoKind::Kplus, i));
  if (exp == -1) return letter(co_letter(CoKind::Kminus, i));
  throw Error("K letter exponent must be +1 or -1");
}

NormalElement GeneratorSet::expand(const CoidealElement& x) const {
  NormalElement acc = alg_->zero();
  for (const auto& [w, c] : x.terms()) {
    NormalElement prod = alg_->scalar(c);
    for (unsigned char l : w) prod = prod * letter_image(l);
    acc += prod;
    note_terms(acc.size());
  }
  return acc;
}

// Leading-layer eligibility per family. A term of maximal F-degree must be
// the leading monomial of a generator word: the word returned here, expanded
// and multiplied in normal order F..K..E, reproduces it with coefficient 1.
FreeWord GeneratorSet::word_for_top_term(const Monomial& m) const {
  const RootDatum& rd = spec_.g();
  FreeWord w;
  for (unsigned char a : m.f) w.push_back(co_letter(CoKind::B, a));
  switch (spec_.kind()) {
    case Case::I: {
      for (int i = 0; i < rd.rank(); ++i)
        if (m.k[static_cast<std::size_t>(i)] != 0)
          throw Error("top term carries a cartan factor");
      if (!m.e.empty()) throw Error("top term carries an E factor");
      return w;
    }
    case Case::IIA:
    case Case::IID:
    case Case::IIE: {
      if (!m.e.empty()) throw Error("top term carries an E factor");
      for (int i = 0; i < rd.rank(); ++i) {
        int ki = m.k[static_cast<std::size_t>(i)];
        int ti = spec_.tau(i);
        if (ti == i) {
          if (ki != 0)
            throw Error("top term cartan factor is outside the theta lattice");
          continue;
        }
        if (ki != -m.k[static_cast<std::size_t>(ti)])
          throw Error("top term cartan factor is outside the theta lattice");
        if (ti < i) continue;  // handled at the representative node
        for (int s = 0; s < ki; ++s) w.push_back(co_letter(CoKind::Cplus, i));
        for (int s = 0; s < -ki; ++s)
          w.push_back(co_letter(CoKind::Cminus, i));
      }
      return w;
    }
    case Case::III: {
      for (int i = 0; i < rd.rank(); ++i) {
        int ki = m.k[static_cast<std::size_t>(i)];
        if (i % 2 == 1) {
          if (ki != 0)
            throw Error("top term carries a cartan factor at an even node");
          continue;
        }
        for (int s = 0; s < ki; ++s) w.push_back(co_letter(CoKind::Kplus, i));
        for (int s = 0; s < -ki; ++s)
          w.push_back(co_letter(CoKind::Kminus, i));
      }
      for (unsigned char a : m.e) {
        if (a % 2 == 1)
          throw Error("top term carries an E factor at an even node");
        w.push_back(co_letter(CoKind::E, a));
      }
      return w;
    }
  }
  throw Error("unreachable");
}

CoidealElement GeneratorSet::reexpress(const NormalElement& x) const {
  CoidealElement out(this);
  NormalElement rest = x;
  while (!rest.is_zero()) {
    std::size_t top = 0;
    for (const auto& [m, c] : rest.terms()) top = std::max(top, m.f.size());
    CoidealElement batch(this);
    for (const auto& [m, c] : rest.terms()) {
      if (m.f.size() != top) continue;
      FreeWord w;
      try {
        w = word_for_top_term(m);
      } catch (const Error& e) {
        Monomial mm = m;
        NormalElement one_term(alg_);
        one_term.add(mm, c);
        throw Error(std::string("element is not in the coideal span: ") +
                    e.what() + " in " + alg_->str(one_term));
      }
      batch.add(w, c);
    }
    out += batch;
    rest -= expand(batch);
    note_terms(rest.size());
  }
  return out;
}

std::string GeneratorSet::str(const CoidealElement& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (unsigned char l : w) os << "*" << letter_name(l);
  }
  return os.str();
}

GeneratorSet coideal_generators(const Algebra* alg, const CaseSpec& spec) {
  return GeneratorSet(alg, spec);
}

namespace {

std::string pair_tag(int i, int j) {
  return "i=" + std::to_string(i + 1) + ",j=" + std::to_string(j + 1);
}

void case1_relations(const GeneratorSet& g, std::vector<RelationInstance>& out) {
  const RootDatum& rd = g.spec().g();
  for (int i = 0; i < rd.rank(); ++i) {
    for (int j = 0; j < rd.rank(); ++j) {
      if (i == j) continue;
      int a = rd.a(i, j);
      long di = rd.d(i);
      CoidealElement lhs = g.zero();
      for (int s = 0; s <= 1 - a; ++s) {
        Scalar c = Scalar::qbinom(1 - a, s, di);
        if (s % 2 == 1) c = -c;
        CoidealElement word = g.one();
        for (int t = 0; t < 1 - a - s; ++t) word = word * g.B(i);
        word = word * g.B(j);
        for (int t = 0; t < s; ++t) word = word * g.B(i);
        lhs += c * word;
      }
      CoidealElement rhs = g.zero();
      switch (a) {
        case 0:
          break;
        case -1:
          rhs = -Scalar::v_power(-2 * di) * g.B(j);
          break;
        case -2: {
          Scalar c = Scalar::q_power(-1) * Scalar::qint(2) * Scalar::qint(2);
          rhs = -c * (g.B(i) * g.B(j) - g.B(j) * g.B(i));
          break;
        }
        case -3: {
          Scalar c1 = Scalar::q_power(-1) *
                      (Scalar::qint(3) * Scalar::qint(3) + Scalar(1));
          Scalar c2 = Scalar::q_power(-1) * Scalar::qint(2) *
                      (Scalar::qint(2) * Scalar::qint(4) + Scalar::q_power(2) +
                       Scalar::q_power(-2));
          Scalar c3 = Scalar::q_power(-2) * Scalar::qint(3) * Scalar::qint(3);
          rhs = -c1 * (g.B(i) * g.B(i) * g.B(j) + g.B(j) * g.B(i) * g.B(i)) +
                c2 * (g.B(i) * g.B(j) * g.B(i)) - c3 * g.B(j);
          break;
        }
        default:
          throw Error("unsupported Cartan entry in case I relations");
      }
      out.push_back({"Prop3.1/aij=" + std::to_string(a) + "/" + pair_tag(i, j),
                     std::move(lhs), std::move(rhs)});
    }
  }
}

void case2_relations(const GeneratorSet& g, std::vector<RelationInstance>& out) {
  const CaseSpec& cs = g.spec();
  const RootDatum& rd = cs.g();
  const Scalar q = Scalar::q_power(1);
  const Scalar qm1 = Scalar::q_power(-1);
  Scalar denom = (q - qm1).inverse();
  for (int i = 0; i < rd.rank(); ++i) {
    if (cs.tau_fixed(i)) continue;
    for (int j = 0; j < rd.rank(); ++j) {
      long e = rd.pairing(cs.tau(i), j) - rd.pairing(i, j);
      CoidealElement lhs = g.C(i, 1) * g.B(j);
      CoidealElement rhs = Scalar::q_power(e) * (g.B(j) * g.C(i, 1));
      out.push_back({"Prop4.1/cartan/" + pair_tag(i, j), std::move(lhs),
                     std::move(rhs)});
    }
  }
  for (int i = 0; i < rd.rank(); ++i) {
    for (int j = 0; j < rd.rank(); ++j) {
      if (i == j) continue;
      if (rd.a(i, j) == 0) {
        CoidealElement lhs = g.B(i) * g.B(j) - g.B(j) * g.B(i);
        CoidealElement rhs = g.zero();
        if (cs.tau(i) == j) rhs = denom * (g.C(i, 1) - g.C(i, -1));
        out.push_back({"Prop4.1/aij=0/" + pair_tag(i, j), std::move(lhs),
                       std::move(rhs)});
      } else if (rd.a(i, j) == -1) {
        CoidealElement lhs = g.B(i) * g.B(i) * g.B(j) -
                             Scalar::qint(2) * (g.B(i) * g.B(j) * g.B(i)) +
                             g.B(j) * g.B(i) * g.B(i);
        CoidealElement rhs = g.zero();
        if (cs.tau_fixed(i)) rhs -= qm1 * g.B(j);
        if (cs.tau(i) == j)
          rhs += Scalar::qint(2) *
                 (g.B(i) * (qm1 * g.C(i, 1) + Scalar::q_power(2) * g.C(i, -1)));
        out.push_back({"Prop4.1/aij=-1/" + pair_tag(i, j), std::move(lhs),
                       std::move(rhs)});
      }
    }
  }
}

void case3_relations(const GeneratorSet& g, std::vector<RelationInstance>& out) {
  const RootDatum& rd = g.spec().g();
  const Scalar q = Scalar::q_power(1);
  const Scalar qm1 = Scalar::q_power(-1);
  Scalar denom = (q - qm1).inverse();
  int n = rd.rank();
  for (int x = 0; x < n; x += 2) {
    for (int t = 0; t < n; ++t) {
      CoidealElement lhs = g.Kodd(x, 1) * g.B(t) * g.Kodd(x, -1);
      CoidealElement rhs = Scalar::q_power(-rd.a(x, t)) * g.B(t);
      out.push_back({"Prop5.1/item1/" + pair_tag(x, t), std::move(lhs),
                     std::move(rhs)});
    }
  }
  for (int x = 0; x < n; x += 2) {
    for (int t = 0; t < n; ++t) {
      CoidealElement lhs = g.Eodd(x) * g.B(t) - g.B(t) * g.Eodd(x);
      CoidealElement rhs = g.zero();
      if (x == t) rhs = denom * (g.Kodd(x, 1) - g.Kodd(x, -1));
      out.push_back({"Prop5.1/item2/" + pair_tag(x, t), std::move(lhs),
                     std::move(rhs)});
    }
  }
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      if (rd.a(s, t) != 0) continue;
      out.push_back({"Prop5.1/item3/" + pair_tag(s, t),
                     g.B(s) * g.B(t) - g.B(t) * g.B(s), g.zero()});
    }
  auto serre = [&](int i, int j) {
    return g.B(i) * g.B(i) * g.B(j) -
           Scalar::qint(2) * (g.B(i) * g.B(j) * g.B(i)) +
           g.B(j) * g.B(i) * g.B(i);
  };
  for (int x = 0; x < n; x += 2)
    for (int t : {x - 1, x + 1}) {
      if (t < 0 || t >= n) continue;
      out.push_back({"Prop5.1/item4/" + pair_tag(x, t), serre(x, t), g.zero()});
    }
  for (int o = 1; o < n; o += 2)
    for (int t : {o - 1, o + 1}) {
      int jb = (t == o - 1) ? o + 1 : o - 1;
      CoidealElement rhs =
          -qm1 * ((q - qm1) * (q - qm1) * (g.B(t) * g.Eodd(t) * g.Eodd(jb)) +
                  (qm1 * g.Kodd(t, -1) + q * g.Kodd(t, 1)) * g.Eodd(jb));
      out.push_back(
          {"Prop5.1/item5/" + pair_tag(o, t), serre(o, t), std::move(rhs)});
    }
}

}  // namespace

std::vector<RelationInstance> relation_set(const GeneratorSet& gens) {
  std::vector<RelationInstance> out;
  switch (gens.spec().kind()) {
    case Case::I:
      case1_relations(gens, out);
      break;
    case Case::IIA:
    case Case::IID:
    case Case::IIE:
      case2_relations(gens, out);
      break;
    case Case::III:
      case3_relations(gens, out);
      break;
  }
  return out;
}

Report verify_relations(const GeneratorSet& gens, const std::string& suite) {
  Report rep;
  for (const RelationInstance& inst : relation_set(gens)) {
    rep.push_back(run_check(suite, "relations", inst.label, [&] {
      return gens.expand(inst.lhs) == gens.expand(inst.rhs);
    }));
  }
  return rep;
}

Report verify_coideal(const GeneratorSet& gens, const std::string& suite) {
  Report rep;
  const Algebra& A = gens.algebra();
  const CaseSpec& cs = gens.spec();
  auto row = [&](const std::string& identity, TensorElement got,
                 TensorElement want) {
    rep.push_back(run_check(suite, "coideal", identity,
                            [&] { return got == want; }));
  };
  if (cs.kind() == Case::III) {
    for (int x = 0; x < A.rank(); x += 2) {
      std::string tag = "/i=" + std::to_string(x + 1);
      row("DeltaF" + tag, A.coproduct(A.F(x)),
          TensorElement::pure(A.F(x), A.K(x, -1)) +
              TensorElement::pure(A.one(), A.F(x)));
      row("DeltaE" + tag, A.coproduct(A.E(x)),
          TensorElement::pure(A.E(x), A.one()) +
              TensorElement::pure(A.K(x, 1), A.E(x)));
      row("DeltaK" + tag, A.coproduct(A.K(x, 1)),
          TensorElement::pure(A.K(x, 1), A.K(x, 1)));
      row("DeltaKinv" + tag, A.coproduct(A.K(x, -1)),
          TensorElement::pure(A.K(x, -1), A.K(x, -1)));
    }
    return rep;
  }
  for (int i = 0; i < A.rank(); ++i) {
    const NormalElement& b = gens.letter_image(co_letter(CoKind::B, i));
    TensorElement want = TensorElement::pure(b, A.K(i, -1)) +
                         TensorElement::pure(A.one(), b);
    if (cs.kind() != Case::I) {
      int ti = cs.tau(i);
      want += TensorElement::pure(A.one() - A.K(i, -1) * A.K(ti, 1),
                                  A.K(i, -1) * A.E(ti));
    }
    row("DeltaB/i=" + std::to_string(i + 1), A.coproduct(b), want);
  }
  return rep;
}

}  // namespace qspair
