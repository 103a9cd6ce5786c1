#include "qspair/expr.hpp"

#include <algorithm>
#include <sstream>

namespace qspair {

// ---------------------------------------------------------------------------
// Parsing.

namespace {

class Parser {
 public:
  Parser(const Algebra& alg, std::string_view text,
         const std::map<int, Element>* b_images)
      : alg_(alg), text_(text), b_(b_images) {}

  Element run() {
    Element out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "syntax error at offset " << pos_ << ": " << what;
    throw ParseError(os.str());
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(text_[pos_]))
      fail("expected an integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(text_[pos_])) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) fail("integer too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  int node_index() {
    long label = integer();
    if (label < 1 || label > alg_.rank()) fail("unknown node index");
    return static_cast<int>(label - 1);
  }

  Element expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = text_[pos_++] == '-';
    Element out = term();
    if (neg) out = Scalar(-1) * out;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        out += term();
      } else if (c == '-') {
        ++pos_;
        out -= term();
      } else {
        return out;
      }
    }
  }

  Element term() {
    Element out = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        out = out * factor();
      } else if (c == '/') {
        ++pos_;
        std::size_t at = pos_;
        Element d = factor();
        Scalar s = as_scalar(d, at);
        if (s.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        out = s.inverse() * out;
      } else {
        return out;
      }
    }
  }

  Scalar as_scalar(const Element& e, std::size_t at) {
    Scalar s;
    for (const auto& [w, c] : e.terms()) {
      if (!w.empty()) {
        pos_ = at;
        fail("divisor is not a scalar");
      }
      s = c;
    }
    return s;
  }

  Element factor() {
    skip_ws();
    std::size_t at = pos_;
    Element a = atom();
    if (!eat('^')) return a;
    long n = integer();
    if (n >= 0) {
      Element out = alg_.free_one();
      for (long t = 0; t < n; ++t) out = out * a;
      return out;
    }
    // Negative powers: invertible atoms only (K-letters and scalars).
    const auto& ts = a.terms();
    if (ts.size() == 1 && ts.begin()->first.empty()) {
      Scalar s = ts.begin()->second;
      if (s.is_zero()) fail("zero to a negative power");
      Element out = alg_.free_one();
      Scalar si = s.inverse();
      for (long t = 0; t < -n; ++t) out = si * out;
      return out;
    }
    if (ts.size() == 1 && ts.begin()->first.size() == 1 &&
        ts.begin()->second.is_one()) {
      unsigned char letter = ts.begin()->first[0];
      GenKind k = kind_of(letter);
      if (k == GenKind::Kplus || k == GenKind::Kminus) {
        GenKind flip =
            k == GenKind::Kplus ? GenKind::Kminus : GenKind::Kplus;
        FreeWord w(static_cast<std::size_t>(-n),
                   free_letter(flip, node_of(letter)));
        Element out(&alg_);
        out.add_term(std::move(w), Scalar(1));
        return out;
      }
    }
    pos_ = at;
    fail("negative power of a non-invertible factor");
  }

  Element atom() {
    char c = peek();
    if (c == '\0') fail("expected an expression");
    if (c == '(') {
      ++pos_;
      Element inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '[') {
      ++pos_;
      long n = integer();
      if (!eat(']')) fail("expected ']'");
      long d = 1;
      if (eat('_')) d = alg_.datum().d(node_index());
      return alg_.free_scalar(Scalar::qint(n, d));
    }
    if (std::isdigit(c)) return alg_.free_scalar(Scalar(integer()));
    ++pos_;
    switch (c) {
      case 'q':
        return alg_.free_scalar(Scalar::q_power(1));
      case 'v':
        return alg_.free_scalar(Scalar::v_power(1));
      case 'E':
        return alg_.free_gen(GenKind::E, node_index());
      case 'F':
        return alg_.free_gen(GenKind::F, node_index());
      case 'K':
        return alg_.free_gen(GenKind::Kplus, node_index());
      case 'B': {
        int node = node_index();
        if (!b_) fail("B-generators need an active case context");
        auto it = b_->find(node);
        if (it == b_->end()) fail("node is not a coideal generator");
        return it->second;
      }
      default:
        --pos_;
        fail("unexpected character");
    }
  }

  const Algebra& alg_;
  std::string_view text_;
  const std::map<int, Element>* b_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_expression(const Algebra& alg, std::string_view text,
                         const std::map<int, Element>* b_images) {
  return Parser(alg, text, b_images).run();
}

// ---------------------------------------------------------------------------
// Rendering.

namespace {

void append_power(std::string& out, const std::string& base, int exp) {
  if (!out.empty()) out += "*";
  out += base;
  if (exp != 1) out += "^" + std::to_string(exp);
}

void append_runs(std::string& out, char kind, const Word& w) {
  std::size_t p = 0;
  while (p < w.size()) {
    std::size_t end = p;
    while (end < w.size() && w[end] == w[p]) ++end;
    append_power(out, std::string(1, kind) + std::to_string(w[p] + 1),
                 static_cast<int>(end - p));
    p = end;
  }
}

std::string monomial_str(const Monomial& m, int rank) {
  std::string out;
  append_runs(out, 'F', m.f);
  for (int i = 0; i < rank; ++i) {
    if (m.k[i] != 0) append_power(out, "K" + std::to_string(i + 1), m.k[i]);
  }
  append_runs(out, 'E', m.e);
  return out;
}

// coef_str is a rendering of the term's coefficient; spaces mean it needs
// parentheses next to '*'.
std::string coef_times(const std::string& coef_str, const std::string& mon) {
  if (mon.empty()) return coef_str.empty() ? "1" : coef_str;
  if (coef_str.empty() || coef_str == "1") return mon;
  if (coef_str == "-1") return "-" + mon;
  std::string cs = coef_str.find(' ') != std::string::npos
                       ? "(" + coef_str + ")"
                       : coef_str;
  return cs + "*" + mon;
}

std::string join_signed(const std::vector<std::string>& pieces) {
  std::string out;
  for (const std::string& p : pieces) {
    if (out.empty()) {
      out = p;
    } else if (!p.empty() && p[0] == '-') {
      out += " - " + p.substr(1);
    } else {
      out += " + " + p;
    }
  }
  return out.empty() ? "0" : out;
}

struct DisplayLess {
  int rank;
  bool operator()(const Monomial* a, const Monomial* b) const {
    std::size_t da = a->f.size() + a->e.size();
    std::size_t db = b->f.size() + b->e.size();
    if (da != db) return da > db;
    if (a->f != b->f) return deglex_less(b->f, a->f);
    if (a->e != b->e) return deglex_less(b->e, a->e);
    return b->k < a->k;
  }
};

}  // namespace

std::string Algebra::str(const NormalElement& a) const {
  if (a.is_zero()) return "0";
  std::vector<const Monomial*> order;
  order.reserve(a.size());
  for (const auto& [m, c] : a.terms()) order.push_back(&m);
  std::sort(order.begin(), order.end(), DisplayLess{rank()});

  struct Group {
    IntPoly den;
    std::vector<const Monomial*> members;
  };
  struct Unit {
    const Monomial* lead;
    std::string text;
  };
  std::vector<Unit> units;
  std::vector<Group> groups;
  for (const Monomial* m : order) {
    const Scalar& c = a.terms().at(*m);
    if (c.den().is_monomial()) {
      units.push_back({m, coef_times(c.str(), monomial_str(*m, rank()))});
      continue;
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return g.den == c.den();
    });
    if (it == groups.end()) {
      groups.push_back({c.den(), {m}});
    } else {
      it->members.push_back(m);
    }
  }
  for (const Group& g : groups) {
    int t = (g.den.degree() + g.den.trailing_degree()) / 2;
    bool as_q = detail::all_even_exponents(g.den, t);
    for (const Monomial* m : g.members)
      as_q = as_q &&
             detail::all_even_exponents(a.terms().at(*m).num(), t);
    std::vector<std::string> pieces;
    for (const Monomial* m : g.members) {
      std::string cs =
          detail::render_laurent(a.terms().at(*m).num(), BigInt(1), t, as_q);
      pieces.push_back(coef_times(cs, monomial_str(*m, rank())));
    }
    std::string inner = join_signed(pieces);
    if (g.members.size() > 1 || inner.find(' ') != std::string::npos)
      inner = "(" + inner + ")";
    std::string den =
        "(" + detail::render_laurent(g.den, BigInt(1), t, as_q) + ")";
    units.push_back({g.members.front(), inner + "/" + den});
  }
  std::sort(units.begin(), units.end(), [&](const Unit& x, const Unit& y) {
    return DisplayLess{rank()}(x.lead, y.lead);
  });
  std::vector<std::string> texts;
  texts.reserve(units.size());
  for (Unit& u : units) texts.push_back(std::move(u.text));
  return join_signed(texts);
}

std::string Algebra::str(const Element& a) const {
  if (a.is_zero()) return "0";
  std::vector<const FreeWord*> order;
  for (const auto& [w, c] : a.terms()) order.push_back(&w);
  std::sort(order.begin(), order.end(),
            [](const FreeWord* x, const FreeWord* y) {
              if (x->size() != y->size()) return x->size() > y->size();
              return *x < *y;
            });
  std::vector<std::string> pieces;
  for (const FreeWord* w : order) {
    std::string mon;
    std::size_t p = 0;
    while (p < w->size()) {
      std::size_t end = p;
      while (end < w->size() && (*w)[end] == (*w)[p]) ++end;
      unsigned char letter = (*w)[p];
      int exp = static_cast<int>(end - p);
      std::string base;
      switch (kind_of(letter)) {
        case GenKind::F: base = "F"; break;
        case GenKind::Kplus: base = "K"; break;
        case GenKind::Kminus: base = "K"; exp = -exp; break;
        case GenKind::E: base = "E"; break;
      }
      append_power(mon, base + std::to_string(node_of(letter) + 1), exp);
      p = end;
    }
    pieces.push_back(coef_times(a.terms().at(*w).str(), mon));
  }
  return join_signed(pieces);
}

}  // namespace qspair
