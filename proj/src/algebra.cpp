#include "superjordan/algebra.hpp"

#include <optional>
#include <vector>

namespace sj {

namespace {

using G = Generator;

int rank(G g) { return static_cast<int>(g); }

RootWeight root_of(G g) {
  switch (g) {
    case G::E1: return {2, -1};
    case G::E2: return {-1, 0};
    case G::E3: return {1, -1};
    case G::F1: return {-2, 1};
    case G::F2: return {1, 0};
    case G::F3: return {-1, 1};
    case G::K: return {0, 0};
  }
  return {};
}

int pair(CartanMonomial c, RootWeight r) { return c.c1 * r.r1 + c.c2 * r.r2; }

struct WordTerm {
  Scalar coef;
  std::vector<Letter> letters;
};

Letter L(G g) { return Letter::of(g); }
Letter K(int a, int b) { return Letter::cartan(a, b); }

const Scalar& qq_inv() {
  static const Scalar v = (q_param() - q_param().inverse()).inverse();
  return v;
}

// [K(a,b)] = (K(a,b) - K(-a,-b))/(q - q^-1) after the given leading letters.
void add_bracket(std::vector<WordTerm>& out, int a, int b) {
  out.push_back({qq_inv(), {K(a, b)}});
  out.push_back({-qq_inv(), {K(-a, -b)}});
}

// Rewrites (hi)(lo) where rank(hi) > rank(lo), neither a Cartan letter.
std::vector<WordTerm> swap_rule(G hi, G lo) {
  const Scalar q = q_param();
  const Scalar qi = q.inverse();
  std::vector<WordTerm> out;
  auto add = [&](Scalar c, std::vector<Letter> w) { out.push_back({std::move(c), std::move(w)}); };
  if (hi == G::E3 && lo == G::E2) {
    add(-qi, {L(G::E2), L(G::E3)});
  } else if (hi == G::E1 && lo == G::E2) {
    add(qi, {L(G::E2), L(G::E1)});
    add(Scalar(1), {L(G::E3)});
  } else if (hi == G::E1 && lo == G::E3) {
    add(q, {L(G::E3), L(G::E1)});
  } else if (hi == G::F3 && lo == G::F1) {
    add(qi, {L(G::F1), L(G::F3)});
  } else if (hi == G::F2 && lo == G::F1) {
    add(q, {L(G::F1), L(G::F2)});
    add(Scalar(1), {L(G::F3)});
  } else if (hi == G::F2 && lo == G::F3) {
    add(-q, {L(G::F3), L(G::F2)});
  } else if (hi == G::E1 && lo == G::F1) {
    add(Scalar(1), {L(G::F1), L(G::E1)});
    add_bracket(out, 2, 0);
  } else if (hi == G::E1 && lo == G::F2) {
    add(Scalar(1), {L(G::F2), L(G::E1)});
  } else if (hi == G::E2 && lo == G::F1) {
    add(Scalar(1), {L(G::F1), L(G::E2)});
  } else if (hi == G::E2 && lo == G::F2) {
    add(Scalar(-1), {L(G::F2), L(G::E2)});
    add_bracket(out, 0, 2);
  } else if (hi == G::E1 && lo == G::F3) {
    add(Scalar(1), {L(G::F3), L(G::E1)});
    add(-q, {L(G::F2), K(2, 0)});
  } else if (hi == G::E2 && lo == G::F3) {
    add(Scalar(-1), {L(G::F3), L(G::E2)});
    add(Scalar(1), {L(G::F1), K(0, -2)});
  } else if (hi == G::E3 && lo == G::F1) {
    add(Scalar(1), {L(G::F1), L(G::E3)});
    add(-qi, {K(-2, 0), L(G::E2)});
  } else if (hi == G::E3 && lo == G::F2) {
    add(Scalar(-1), {L(G::F2), L(G::E3)});
    add(Scalar(1), {K(0, 2), L(G::E1)});
  } else if (hi == G::E3 && lo == G::F3) {
    add(Scalar(-1), {L(G::F3), L(G::E3)});
    add_bracket(out, 2, 2);
  } else {
    throw std::logic_error("no straightening rule for this pair");
  }
  return out;
}

const std::vector<WordTerm>& cached_rule(G hi, G lo) {
  static thread_local std::map<std::pair<G, G>, std::vector<WordTerm>> cache;
  auto it = cache.find({hi, lo});
  if (it == cache.end()) it = cache.emplace(std::make_pair(hi, lo), swap_rule(hi, lo)).first;
  return it->second;
}

int& field(PbwMonomial& m, G g) {
  switch (g) {
    case G::F1: return m.f1;
    case G::F3: return m.f3;
    case G::F2: return m.f2;
    case G::E2: return m.e2;
    case G::E3: return m.e3;
    case G::E1: return m.e1;
    case G::K: break;
  }
  throw std::logic_error("Cartan letter has no exponent field");
}

// Highest-rank letter of m and m with one copy of it removed.
std::optional<std::pair<Letter, PbwMonomial>> split_last(const PbwMonomial& m) {
  PbwMonomial p = m;
  for (G g : {G::E1, G::E3, G::E2}) {
    if (field(p, g) > 0) {
      --field(p, g);
      return std::make_pair(L(g), p);
    }
  }
  if (!m.k.is_identity()) {
    p.k = {};
    return std::make_pair(Letter{G::K, m.k}, p);
  }
  for (G g : {G::F2, G::F3, G::F1}) {
    if (field(p, g) > 0) {
      --field(p, g);
      return std::make_pair(L(g), p);
    }
  }
  return std::nullopt;
}

AlgebraElement times_letter(const AlgebraElement& x, const Letter& l);

AlgebraElement monomial_times_letter_uncached(const PbwMonomial& m, const Letter& x) {
  auto split = split_last(m);
  if (!split || rank(split->first.g) <= rank(x.g)) {
    // x can be appended in place.
    PbwMonomial out = m;
    if (x.g == G::K) {
      out.k = out.k * x.k;
    } else {
      int& e = field(out, x.g);
      if (x.parity() == 1 && e == 1) return {};
      ++e;
    }
    return AlgebraElement::monomial(out);
  }
  const auto& [last, prefix] = *split;
  const AlgebraElement pre = AlgebraElement::monomial(prefix);
  if (last.g == G::K) {
    // K(c) x = q^{(c, r(x))/2} x K(c)
    auto r = times_letter(times_letter(pre, x), last);
    return r * s_pow(pair(last.k, root_of(x.g)));
  }
  if (x.g == G::K) {
    // e K(c) = q^{-(c, r(e))/2} K(c) e
    auto r = times_letter(times_letter(pre, x), last);
    return r * s_pow(-pair(x.k, root_of(last.g)));
  }
  AlgebraElement out;
  for (const auto& wt : cached_rule(last.g, x.g)) {
    AlgebraElement cur = pre;
    for (const auto& l : wt.letters) cur = times_letter(cur, l);
    out += cur * wt.coef;
  }
  return out;
}

const AlgebraElement& monomial_times_letter(const PbwMonomial& m, const Letter& x) {
  static thread_local std::map<std::pair<PbwMonomial, Letter>, AlgebraElement> cache;
  auto key = std::make_pair(m, x);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  AlgebraElement v = monomial_times_letter_uncached(m, x);
  return cache.emplace(std::move(key), std::move(v)).first->second;
}

AlgebraElement times_letter(const AlgebraElement& x, const Letter& l) {
  if (l.g == G::K && l.k.is_identity()) return x;
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) {
    for (const auto& [m2, c2] : monomial_times_letter(m, l).terms()) out.add_term(m2, c * c2);
  }
  return out;
}

}  // namespace

RootWeight PbwMonomial::weight() const {
  RootWeight w;
  auto acc = [&](G g, int n) {
    const RootWeight r = root_of(g);
    w.r1 += n * r.r1;
    w.r2 += n * r.r2;
  };
  acc(G::F1, f1);
  acc(G::F3, f3);
  acc(G::F2, f2);
  acc(G::E2, e2);
  acc(G::E3, e3);
  acc(G::E1, e1);
  return w;
}

RootWeight Letter::weight() const { return root_of(g); }

std::vector<Letter> letters_of(const PbwMonomial& m) {
  std::vector<Letter> out;
  for (int i = 0; i < m.f1; ++i) out.push_back(L(G::F1));
  if (m.f3) out.push_back(L(G::F3));
  if (m.f2) out.push_back(L(G::F2));
  if (!m.k.is_identity()) out.push_back(Letter{G::K, m.k});
  if (m.e2) out.push_back(L(G::E2));
  if (m.e3) out.push_back(L(G::E3));
  for (int i = 0; i < m.e1; ++i) out.push_back(L(G::E1));
  return out;
}

AlgebraElement AlgebraElement::scalar(const Scalar& c) { return monomial(PbwMonomial::one(), c); }

AlgebraElement AlgebraElement::monomial(const PbwMonomial& m, const Scalar& c) {
  AlgebraElement x;
  x.add_term(m, c);
  return x;
}

AlgebraElement AlgebraElement::letter(const Letter& l) { return times_letter(one(), l); }

AlgebraElement AlgebraElement::e1() { return letter(L(G::E1)); }
AlgebraElement AlgebraElement::e2() { return letter(L(G::E2)); }
AlgebraElement AlgebraElement::e3() { return letter(L(G::E3)); }
AlgebraElement AlgebraElement::f1() { return letter(L(G::F1)); }
AlgebraElement AlgebraElement::f2() { return letter(L(G::F2)); }
AlgebraElement AlgebraElement::f3() { return letter(L(G::F3)); }
AlgebraElement AlgebraElement::cartan(int c1, int c2) { return monomial(PbwMonomial::cartan(c1, c2)); }

Scalar AlgebraElement::coefficient(const PbwMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool AlgebraElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int p = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_)
    if (m.parity() != p) return false;
  return true;
}

int AlgebraElement::parity() const {
  if (!is_homogeneous()) throw NotHomogeneous("element mixes even and odd monomials");
  return terms_.empty() ? 0 : terms_.begin()->first.parity();
}

void AlgebraElement::add_term(const PbwMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

AlgebraElement AlgebraElement::pow(unsigned n) const {
  AlgebraElement r = one();
  for (unsigned i = 0; i < n; ++i) r = multiply(r, *this);
  return r;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  if (x.is_zero()) return out;
  for (const auto& [m, c] : y.terms()) {
    AlgebraElement cur = x;
    for (const auto& l : letters_of(m)) cur = times_letter(cur, l);
    out += cur * c;
  }
  return out;
}

AlgebraElement word(const std::vector<Letter>& letters) {
  AlgebraElement cur = AlgebraElement::one();
  for (const auto& l : letters) cur = times_letter(cur, l);
  return cur;
}

AlgebraElement supercommutator(const AlgebraElement& a, const AlgebraElement& b) {
  const int sign = a.parity() * b.parity();
  AlgebraElement ba = multiply(b, a);
  return sign ? multiply(a, b) + ba : multiply(a, b) - ba;
}

AlgebraElement cartan_conjugate(const AlgebraElement& x, const Rational& c1, const Rational& c2) {
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) {
    const RootWeight w = m.weight();
    Rational e = c1 * w.r1 + c2 * w.r2;
    e.canonicalize();
    if (e.get_den() != 1) throw std::domain_error("Cartan conjugation leaves the field Q(h)(q^{1/2})");
    out.add_term(m, c * s_pow(static_cast<int>(e.get_num().get_si())));
  }
  return out;
}

// ---------------------------------------------------------------- tensors

TensorElement TensorElement::pure(const AlgebraElement& a, const AlgebraElement& b) {
  TensorElement t;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) t.add_term(ma, mb, ca * cb);
  return t;
}

void TensorElement::add_term(const PbwMonomial& a, const PbwMonomial& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{a, b}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TensorElement operator*(const TensorElement& x, const TensorElement& y) {
  TensorElement out;
  for (const auto& [kx, cx] : x.terms_) {
    const AlgebraElement a = AlgebraElement::monomial(kx.first);
    const AlgebraElement b = AlgebraElement::monomial(kx.second);
    for (const auto& [ky, cy] : y.terms_) {
      const AlgebraElement ac = multiply(a, AlgebraElement::monomial(ky.first));
      const AlgebraElement bd = multiply(b, AlgebraElement::monomial(ky.second));
      Scalar c = cx * cy;
      if (kx.second.parity() && ky.first.parity()) c = -c;
      for (const auto& [m1, c1] : ac.terms())
        for (const auto& [m2, c2] : bd.terms()) out.add_term(m1, m2, c * c1 * c2);
    }
  }
  return out;
}

namespace {

TensorElement coproduct_letter(const Letter& l) {
  using A = AlgebraElement;
  auto prim = [](const A& x, int c1, int c2) {
    return TensorElement::pure(x, A::cartan(c1, c2)) + TensorElement::pure(A::cartan(-c1, -c2), x);
  };
  switch (l.g) {
    case G::K: return TensorElement::pure(A::cartan(l.k.c1, l.k.c2), A::cartan(l.k.c1, l.k.c2));
    case G::E1: return prim(A::e1(), 1, 0);
    case G::F1: return prim(A::f1(), 1, 0);
    case G::E2: return prim(A::e2(), 0, 1);
    case G::F2: return prim(A::f2(), 0, 1);
    case G::E3: {
      const auto d1 = prim(A::e1(), 1, 0), d2 = prim(A::e2(), 0, 1);
      return d1 * d2 - d2 * d1 * q_param().inverse();
    }
    case G::F3: {
      const auto d1 = prim(A::f1(), 1, 0), d2 = prim(A::f2(), 0, 1);
      return d2 * d1 - d1 * d2 * q_param();
    }
  }
  return {};
}

const TensorElement& cached_coproduct_letter(const Letter& l) {
  static thread_local std::map<Letter, TensorElement> cache;
  auto it = cache.find(l);
  if (it == cache.end()) it = cache.emplace(l, coproduct_letter(l)).first;
  return it->second;
}

AlgebraElement antipode_letter(const Letter& l) {
  using A = AlgebraElement;
  switch (l.g) {
    case G::K: return A::cartan(-l.k.c1, -l.k.c2);
    case G::E1: return -cartan_conjugate(A::e1(), 1, 0);
    case G::F1: return -cartan_conjugate(A::f1(), 1, 0);
    case G::E2: return -cartan_conjugate(A::e2(), 0, 1);
    case G::F2: return -cartan_conjugate(A::f2(), 0, 1);
    case G::E3: {
      const A s1 = antipode_letter(L(G::E1)), s2 = antipode_letter(L(G::E2));
      return multiply(s2, s1) - multiply(s1, s2) * q_param().inverse();
    }
    case G::F3: {
      const A s1 = antipode_letter(L(G::F1)), s2 = antipode_letter(L(G::F2));
      return multiply(s1, s2) - multiply(s2, s1) * q_param();
    }
  }
  return {};
}

}  // namespace

TensorElement coproduct(const AlgebraElement& x) {
  TensorElement out;
  for (const auto& [m, c] : x.terms()) {
    TensorElement cur = TensorElement::pure(AlgebraElement::one(), AlgebraElement::one());
    for (const auto& l : letters_of(m)) cur = cur * cached_coproduct_letter(l);
    out += cur * c;
  }
  return out;
}

AlgebraElement antipode(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) {
    // S(w l) = (-1)^{|w||l|} S(l) S(w)
    AlgebraElement acc = AlgebraElement::one();
    int pw = 0;
    for (const auto& l : letters_of(m)) {
      acc = multiply(antipode_letter(l), acc);
      if (pw && l.parity()) acc = -acc;
      pw ^= l.parity();
    }
    out += acc * c;
  }
  return out;
}

Scalar counit(const AlgebraElement& x) {
  Scalar r(0);
  for (const auto& [m, c] : x.terms())
    if (m.is_cartan()) r += c;
  return r;
}

AlgebraElement multiply_antipode_left(const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [k, c] : t.terms())
    out += multiply(antipode(AlgebraElement::monomial(k.first)), AlgebraElement::monomial(k.second)) * c;
  return out;
}

AlgebraElement multiply_antipode_right(const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [k, c] : t.terms())
    out += multiply(AlgebraElement::monomial(k.first), antipode(AlgebraElement::monomial(k.second))) * c;
  return out;
}

// ---------------------------------------------------------------- output

std::string to_string(const PbwMonomial& m) {
  std::string out;
  auto put = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  auto power = [&](const char* name, int n) {
    if (n == 1) put(name);
    else if (n > 1) put(std::string(name) + "^" + std::to_string(n));
  };
  power("f1", m.f1);
  power("f3", m.f3);
  power("f2", m.f2);
  if (!m.k.is_identity()) put("K(" + std::to_string(m.k.c1) + "," + std::to_string(m.k.c2) + ")");
  power("e2", m.e2);
  power("e3", m.e3);
  power("e1", m.e1);
  return out.empty() ? "1" : out;
}

std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    std::string cs = to_string(c);
    bool neg = false;
    if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos) {
      neg = true;
      cs = cs.substr(1);
    }
    std::string term;
    if (m == PbwMonomial::one()) {
      term = cs;
    } else if (cs == "1") {
      term = to_string(m);
    } else {
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      term = cs + "*" + to_string(m);
    }
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

nlohmann::json to_json(const PbwMonomial& m) {
  return {{"f1", m.f1}, {"f3", m.f3}, {"f2", m.f2}, {"K", {m.k.c1, m.k.c2}},
          {"e2", m.e2}, {"e3", m.e3}, {"e1", m.e1}};
}

nlohmann::json to_json(const AlgebraElement& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : x.terms())
    arr.push_back({{"monomial", to_json(m)}, {"text", to_string(m)}, {"coeff", to_json(c)}});
  return arr;
}

}  // namespace sj
