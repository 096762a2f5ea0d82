#include "superjordan/series.hpp"

#include <map>
#include <stdexcept>

namespace sj {

namespace {

const AlgebraElement& zero_element() {
  static const AlgebraElement z;
  return z;
}

int half_steps(const Rational& alpha) {
  Rational twice = 2 * alpha;
  twice.canonicalize();
  if (twice.get_den() != 1) throw std::domain_error("alpha must be a half-integer");
  return static_cast<int>(twice.get_num().get_si());
}

HSeries exp_like(const HSeries& x, Scalar (*fact)(int)) {
  if (!x.has_zero_constant_term()) throw std::domain_error("exponential needs a zero constant term");
  HSeries out = HSeries::one(x.order());
  HSeries pw = HSeries::one(x.order());
  for (int n = 1; n <= x.order(); ++n) {
    pw = pw * x;
    out += pw * fact(n).inverse();
  }
  return out;
}

// h e1 q^alpha/(q-1) as a series; alpha given in half steps.
HSeries scaled_e1(int order, int half) {
  return HSeries::monomial(order, 1, AlgebraElement::e1() * (s_pow(half) / (q_param() - 1)));
}

}  // namespace

HSeries::HSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

HSeries::HSeries(int order, std::vector<AlgebraElement> coeffs) : HSeries(order) {
  if (coeffs.size() > static_cast<std::size_t>(order + 1)) coeffs.resize(order + 1);
  coeffs_ = std::move(coeffs);
}

HSeries HSeries::constant(int order, const AlgebraElement& c) { return HSeries(order, {c}); }

HSeries HSeries::monomial(int order, int k, const AlgebraElement& c) {
  if (k > order) return HSeries(order);
  std::vector<AlgebraElement> cs(k + 1);
  cs[k] = c;
  return HSeries(order, std::move(cs));
}

const AlgebraElement& HSeries::coeff(int n) const {
  if (n < 0 || n >= static_cast<int>(coeffs_.size())) return zero_element();
  return coeffs_[n];
}

HSeries& HSeries::operator+=(const HSeries& o) {
  if (o.order_ < order_) order_ = o.order_;
  coeffs_.resize(std::max<std::size_t>(coeffs_.size(), o.coeffs_.size()));
  coeffs_.resize(std::min<std::size_t>(coeffs_.size(), order_ + 1));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeff(static_cast<int>(n));
  return *this;
}

HSeries& HSeries::operator-=(const HSeries& o) { return *this += -o; }

HSeries& HSeries::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

HSeries HSeries::operator-() const {
  HSeries r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

HSeries operator*(const HSeries& a, const HSeries& b) {
  const int order = std::min(a.order_, b.order_);
  std::vector<AlgebraElement> cs(order + 1);
  for (int i = 0; i <= order; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.coeff(j).is_zero()) continue;
      cs[i + j] += multiply(a.coeff(i), b.coeff(j));
    }
  }
  return HSeries(order, std::move(cs));
}

HSeries HSeries::times_hbar() const {
  std::vector<AlgebraElement> cs(1);
  for (int n = 0; n < order_; ++n) cs.push_back(coeff(n));
  return HSeries(order_, std::move(cs));
}

bool operator==(const HSeries& a, const HSeries& b) { return !first_difference(a, b).has_value(); }

std::optional<int> first_difference(const HSeries& a, const HSeries& b) {
  const int order = std::min(a.order(), b.order());
  for (int n = 0; n <= order; ++n)
    if (!(a.coeff(n) == b.coeff(n))) return n;
  return std::nullopt;
}

HSeries exp_q(const HSeries& x) { return exp_like(x, q_factorial_asym); }
HSeries big_e_q(const HSeries& x) { return exp_like(x, q_factorial); }

HSeries series_inverse(const HSeries& x) {
  const AlgebraElement& c0 = x.coeff(0);
  if (c0.size() != 1 || !c0.terms().begin()->first.is_cartan())
    throw std::domain_error("series constant term is not an invertible Cartan monomial");
  const auto& [m, c] = *c0.terms().begin();
  const AlgebraElement y0 = AlgebraElement::monomial(PbwMonomial::cartan(-m.k.c1, -m.k.c2), c.inverse());
  std::vector<AlgebraElement> ys{y0};
  for (int n = 1; n <= x.order(); ++n) {
    AlgebraElement acc;
    for (int k = 1; k <= n; ++k) {
      if (x.coeff(k).is_zero() || ys[n - k].is_zero()) continue;
      acc += multiply(x.coeff(k), ys[n - k]);
    }
    ys.push_back(-multiply(y0, acc));
  }
  return HSeries(x.order(), std::move(ys));
}

HSeries twist_series(int order) { return big_e_q(scaled_e1(order, 0)); }

HSeries twist_inverse_series(int order) {
  static thread_local std::map<int, HSeries> cache;
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, series_inverse(twist_series(order))).first;
  return it->second;
}

HSeries t_alpha_series(const Rational& alpha, int order) {
  const int half = half_steps(alpha);
  if (half == 0) return HSeries::one(order);
  return twist_inverse_series(order) * big_e_q(scaled_e1(order, half));
}

DressedSeries operator*(const DressedSeries& a, const DressedSeries& b) {
  HSeries moved = b.body;
  if (a.c1 != 0 || a.c2 != 0) moved = b.body.map([&](const AlgebraElement& y) { return cartan_conjugate(y, a.c1, a.c2); });
  return {a.body * moved, a.c1 + b.c1, a.c2 + b.c2};
}

// ---------------------------------------------------------------- identities

std::string identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::ConjCartanH1: return "conj-h1";
    case IdentityId::GroupLaw: return "group-law";
    case IdentityId::ConjCartanH2: return "conj-h2";
    case IdentityId::ConjF1: return "conj-f1";
    case IdentityId::ConjF2: return "conj-f2";
    case IdentityId::ConjF3: return "conj-f3";
    case IdentityId::Square: return "t-square";
    case IdentityId::SquareLiteral: return "t-square-literal";
  }
  return "?";
}

int identity_arity(IdentityId id) {
  switch (id) {
    case IdentityId::ConjCartanH1: return 1;
    case IdentityId::GroupLaw: return 2;
    case IdentityId::ConjCartanH2: return 3;
    default: return 0;
  }
}

const std::vector<IdentityId>& gating_identities() {
  static const std::vector<IdentityId> ids{IdentityId::ConjCartanH1, IdentityId::GroupLaw, IdentityId::ConjCartanH2, IdentityId::ConjF1,
                                           IdentityId::ConjF2, IdentityId::ConjF3, IdentityId::Square};
  return ids;
}

std::vector<IdentityParams> identity_param_grid(IdentityId id) {
  const std::vector<Rational> values{1, -1, Rational(1, 2), Rational(-1, 2), 2};
  std::vector<IdentityParams> out;
  switch (identity_arity(id)) {
    case 0: out.push_back({}); break;
    case 1:
      for (const auto& a : values) out.push_back({a, 0});
      break;
    case 3:
      for (const auto& b : values) out.push_back({0, b});
      break;
    case 2:
      for (const auto& a : values)
        for (const auto& b : values) out.push_back({a, b});
      break;
  }
  return out;
}

std::pair<DressedSeries, DressedSeries> identity_sides(IdentityId id, const IdentityParams& p, int order) {
  using A = AlgebraElement;
  using D = DressedSeries;
  const HSeries G = twist_series(order);
  const HSeries Gi = twist_inverse_series(order);
  auto t = [&](const Rational& a) { return t_alpha_series(a, order); };
  auto K = [&](int c1, int c2) { return HSeries::constant(order, A::cartan(c1, c2)); };
  auto C = [&](const A& x) { return HSeries::constant(order, x); };
  const Scalar q = q_param();
  switch (id) {
    case IdentityId::ConjCartanH1: {
      // G^{-1} q^{alpha h1/2} G = t^(alpha) q^{alpha h1/2}
      const D lhs = D::plain(Gi) * D::cartan(order, p.alpha, 0) * D::plain(G);
      const D rhs = D::plain(t(p.alpha)) * D::cartan(order, p.alpha, 0);
      return {lhs, rhs};
    }
    case IdentityId::GroupLaw: {
      const Rational ab = p.alpha + p.beta;
      const D lhs = D::plain(t(ab)) * D::cartan(order, ab, 0);
      const D rhs = D::plain(t(p.alpha)) * D::cartan(order, p.alpha, 0) * D::plain(t(p.beta)) *
                    D::cartan(order, p.beta, 0);
      return {lhs, rhs};
    }
    case IdentityId::ConjCartanH2: {
      // G^{-1} q^{beta h2} G = t^(-beta) q^{beta h2}
      const D lhs = D::plain(Gi) * D::cartan(order, 0, 2 * p.beta) * D::plain(G);
      const D rhs = D::plain(t(-p.beta)) * D::cartan(order, 0, 2 * p.beta);
      return {lhs, rhs};
    }
    case IdentityId::ConjF1: {
      const HSeries lhs = Gi * C(A::f1()) * G;
      const Scalar k = (q_param() - 1).inverse() * (q - q.inverse()).inverse();
      const HSeries rhs = C(A::f1()) - ((t(1) * K(2, 0) - t(-1) * K(-2, 0)) * k).times_hbar();
      return {D::plain(lhs), D::plain(rhs)};
    }
    case IdentityId::ConjF2: return {D::plain(Gi * C(A::f2()) * G), D::plain(C(A::f2()))};
    case IdentityId::ConjF3: {
      const HSeries lhs = Gi * C(A::f3()) * G;
      const HSeries rhs = C(A::f3()) + (t(1) * C(A::f2()) * K(2, 0) * (q / (q - 1))).times_hbar();
      return {D::plain(lhs), D::plain(rhs)};
    }
    case IdentityId::Square:
    case IdentityId::SquareLiteral: {
      const HSeries lhs = t(2) * K(2, 0) - t(-2) * K(-2, 0);
      const HSeries second = id == IdentityId::Square ? t(-1) * K(-2, 0) * C(A::e1()) : K(-2, 0) * C(A::e1()) * t(-1);
      const HSeries bracket = t(1) * C(A::e1()) * K(2, 0) + second;
      const HSeries rhs = K(2, 0) - K(-2, 0) + (bracket * (q + 1)).times_hbar();
      return {D::plain(lhs), D::plain(rhs)};
    }
  }
  throw std::logic_error("unknown identity");
}

IdentityVerdict verify_identity(IdentityId id, const IdentityParams& p, int order) {
  IdentityVerdict v{id, p, "symbolic", false, id != IdentityId::SquareLiteral, std::nullopt, ""};
  const auto [lhs, rhs] = identity_sides(id, p, order);
  if (lhs.c1 != rhs.c1 || lhs.c2 != rhs.c2) {
    v.first_failing_order = 0;
    v.note = "Cartan factors differ";
    return v;
  }
  v.first_failing_order = first_difference(lhs.body, rhs.body);
  v.holds = !v.first_failing_order.has_value();
  return v;
}

std::vector<IdentityVerdict> verify_identities_symbolic(int order) {
  std::vector<IdentityVerdict> out;
  for (auto id : gating_identities())
    for (const auto& p : identity_param_grid(id)) out.push_back(verify_identity(id, p, order));
  out.push_back(verify_identity(IdentityId::SquareLiteral, {}, order));
  return out;
}

nlohmann::json to_json(const IdentityVerdict& v) {
  nlohmann::json j{{"identity", identity_name(v.id)},
                   {"channel", v.channel},
                   {"alpha", v.params.alpha.get_str()},
                   {"beta", v.params.beta.get_str()},
                   {"holds", v.holds},
                   {"gating", v.gating}};
  j["first_failing_order"] = v.first_failing_order ? nlohmann::json(*v.first_failing_order) : nlohmann::json(nullptr);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace sj
