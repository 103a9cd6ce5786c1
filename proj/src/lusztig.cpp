#include "qspair/lusztig.hpp"

#include <unordered_map>

#include "qspair/budget.hpp"

namespace qspair {

void GeneratorImages::set(GenKind kind, int node, NormalElement img) {
  if (node < 0 || node >= alg_->rank()) throw Error("node out of range");
  if (img.context() != alg_)
    throw Error("image produced by a different algebra");
  unsigned char letter = free_letter(kind, node);
  // The two K images of a node must be mutual inverses.
  GenKind partner_kind = kind == GenKind::Kplus   ? GenKind::Kminus
                         : kind == GenKind::Kminus ? GenKind::Kplus
                                                   : kind;
  if (partner_kind != kind) {
    auto partner = images_.find(free_letter(partner_kind, node));
    if (partner != images_.end() &&
        !(alg_->mul(img, partner->second) == alg_->one()))
      throw Error("K images of node " + std::to_string(node + 1) +
                  " do not multiply to 1");
  }
  images_[letter] = std::move(img);
}

bool GeneratorImages::has(GenKind kind, int node) const {
  return images_.count(free_letter(kind, node)) > 0;
}

const NormalElement& GeneratorImages::image(GenKind kind, int node) const {
  auto it = images_.find(free_letter(kind, node));
  if (it == images_.end())
    throw Error(label_ + " has no image for a generator of node " +
                std::to_string(node + 1));
  return it->second;
}

GeneratorImages identity_images(const Algebra& alg) {
  GeneratorImages phi(&alg, "id");
  for (int i = 0; i < alg.rank(); ++i) {
    phi.set(GenKind::E, i, alg.E(i));
    phi.set(GenKind::F, i, alg.F(i));
    phi.set(GenKind::Kplus, i, alg.K(i));
    phi.set(GenKind::Kminus, i, alg.K(i, -1));
  }
  return phi;
}

GeneratorImages lusztig_images(const Algebra& alg, int i, TDir dir) {
  const RootDatum& rd = alg.datum();
  if (i < 0 || i >= rd.rank()) throw Error("node out of range");
  bool fwd = dir == TDir::forward;
  GeneratorImages phi(&alg,
                      (fwd ? "T" : "T^-1[") + std::to_string(i + 1) +
                          (fwd ? "" : "]"));
  for (int j = 0; j < rd.rank(); ++j) {
    if (j == i) {
      // T_i(E_i) = -F_i K_i and T_i(F_i) = -K_i^{-1} E_i; the inverse
      // direction swaps the K side.
      phi.set(GenKind::E, i,
              fwd ? -(alg.F(i) * alg.K(i)) : -(alg.K(i, -1) * alg.F(i)));
      phi.set(GenKind::F, i,
              fwd ? -(alg.K(i, -1) * alg.E(i)) : -(alg.E(i) * alg.K(i)));
      phi.set(GenKind::Kplus, i, alg.K(i, -1));
      phi.set(GenKind::Kminus, i, alg.K(i));
      continue;
    }
    int a = rd.a(i, j);
    // K_j -> K_j K_i^{-a_ij} in both directions: the torus action of the
    // simple reflection is an involution.
    phi.set(GenKind::Kplus, j, alg.K(j) * alg.K(i, -a));
    phi.set(GenKind::Kminus, j, alg.K(j, -1) * alg.K(i, a));
    NormalElement e_img = alg.zero();
    NormalElement f_img = alg.zero();
    for (int s = 0; s <= -a; ++s) {
      Scalar sign = s % 2 ? Scalar(-1) : Scalar(1);
      // q_i^{-s} with q = v^2.
      Scalar qs = Scalar::v_power(-2L * rd.d(i) * s);
      int t = -a - s;
      if (fwd) {
        e_img = e_img +
                sign * qs * (alg.E_div(i, t) * alg.E(j) * alg.E_div(i, s));
        f_img = f_img + sign * qs.inverse() *
                            (alg.F_div(i, s) * alg.F(j) * alg.F_div(i, t));
      } else {
        e_img = e_img +
                sign * qs * (alg.E_div(i, s) * alg.E(j) * alg.E_div(i, t));
        f_img = f_img + sign * qs.inverse() *
                            (alg.F_div(i, t) * alg.F(j) * alg.F_div(i, s));
      }
    }
    phi.set(GenKind::E, j, std::move(e_img));
    phi.set(GenKind::F, j, std::move(f_img));
  }
  return phi;
}

namespace {

// Letters of the triangular monomial, left to right.
FreeWord monomial_letters(const Monomial& m, int rank) {
  FreeWord w;
  for (unsigned char node : m.f) w.push_back(free_letter(GenKind::F, node));
  for (int j = 0; j < rank; ++j) {
    int e = m.k[static_cast<std::size_t>(j)];
    GenKind kind = e >= 0 ? GenKind::Kplus : GenKind::Kminus;
    for (int r = 0; r < (e >= 0 ? e : -e); ++r)
      w.push_back(free_letter(kind, j));
  }
  for (unsigned char node : m.e) w.push_back(free_letter(GenKind::E, node));
  return w;
}

struct FreeWordHash {
  std::size_t operator()(const FreeWord& w) const {
    return std::hash<std::string_view>()(
        std::string_view(reinterpret_cast<const char*>(w.data()), w.size()));
  }
};

}  // namespace

NormalElement apply_endomorphism(const GeneratorImages& phi,
                                 const NormalElement& a) {
  const Algebra& alg = *phi.context();
  if (a.context() != &alg) throw Error("argument from a different algebra");
  // Images of shared monomial prefixes are computed once per call.
  std::unordered_map<FreeWord, NormalElement, FreeWordHash> prefix;
  prefix.emplace(FreeWord(), alg.one());
  NormalElement out = alg.zero();
  for (const auto& [mon, coef] : a.terms()) {
    FreeWord word = monomial_letters(mon, alg.rank());
    std::size_t done = word.size();
    while (done > 0 && !prefix.count(word.substr(0, done))) --done;
    NormalElement img = prefix.at(word.substr(0, done));
    for (std::size_t p = done; p < word.size(); ++p) {
      img = alg.mul(img, phi.image(kind_of(word[p]), node_of(word[p])));
      prefix.emplace(word.substr(0, p + 1), img);
    }
    out = out + coef * img;
    note_terms(out.size());
  }
  return out;
}

NormalElement apply_endomorphism(const GeneratorImages& phi, const Element& a) {
  return apply_endomorphism(phi, phi.context()->nf(a));
}

GeneratorImages compose(const GeneratorImages& f, const GeneratorImages& g) {
  const Algebra& alg = *f.context();
  if (g.context() != &alg) throw Error("composing across algebras");
  GeneratorImages out(&alg, f.label() + "*" + g.label());
  for (int j = 0; j < alg.rank(); ++j)
    for (GenKind kind : {GenKind::F, GenKind::Kplus, GenKind::Kminus,
                         GenKind::E})
      out.set(kind, j, apply_endomorphism(f, g.image(kind, j)));
  return out;
}

GeneratorImages t_wX(const Algebra& alg, int m) {
  if (m < 1 || alg.rank() != 2 * m - 1)
    throw Error("T_wX needs the rank 2m-1 chain");
  GeneratorImages out = lusztig_images(alg, 0, TDir::forward);
  // Odd-numbered nodes are pairwise non-adjacent, so the factors commute.
  for (int i = 2; i <= 2 * m - 2; i += 2)
    out = compose(out, lusztig_images(alg, i, TDir::forward));
  return out;
}

Report verify_T_properties(const RootDatum& rd) {
  Algebra alg(rd);
  std::string suite = "lusztig-" + rd.name();
  Report rows;
  auto gens_fixed = [&](const GeneratorImages& phi) {
    GeneratorImages id = identity_images(alg);
    for (int j = 0; j < alg.rank(); ++j)
      for (GenKind kind : {GenKind::F, GenKind::Kplus, GenKind::Kminus,
                           GenKind::E})
        if (!(phi.image(kind, j) == id.image(kind, j))) return false;
    return true;
  };
  for (int i = 0; i < rd.rank(); ++i) {
    GeneratorImages fwd = lusztig_images(alg, i, TDir::forward);
    GeneratorImages inv = lusztig_images(alg, i, TDir::inverse);
    rows.push_back(run_check(suite, "roundtrip",
                             "T" + std::to_string(i + 1) + "*T" +
                                 std::to_string(i + 1) + "^-1=id",
                             [&] { return gens_fixed(compose(fwd, inv)); }));
    rows.push_back(run_check(suite, "roundtrip",
                             "T" + std::to_string(i + 1) + "^-1*T" +
                                 std::to_string(i + 1) + "=id",
                             [&] { return gens_fixed(compose(inv, fwd)); }));
  }
  for (int i = 0; i < rd.rank(); ++i) {
    for (int j = i + 1; j < rd.rank(); ++j) {
      int m = rd.coxeter_m(i, j);
      GeneratorImages ti = lusztig_images(alg, i, TDir::forward);
      GeneratorImages tj = lusztig_images(alg, j, TDir::forward);
      rows.push_back(run_check(
          suite, "braid",
          "m=" + std::to_string(m) + "/i=" + std::to_string(i + 1) +
              ",j=" + std::to_string(j + 1),
          [&] {
            GeneratorImages left = ti;
            GeneratorImages right = tj;
            for (int k = 1; k < m; ++k) {
              left = compose(left, k % 2 ? tj : ti);
              right = compose(right, k % 2 ? ti : tj);
            }
            for (int n = 0; n < alg.rank(); ++n)
              for (GenKind kind : {GenKind::F, GenKind::Kplus,
                                   GenKind::Kminus, GenKind::E})
                if (!(left.image(kind, n) == right.image(kind, n)))
                  return false;
            return true;
          }));
    }
  }
  return rows;
}

}  // namespace qspair
