#include "superjordan/jordanian.hpp"

#include <stdexcept>

namespace sj {

namespace {

Scalar twist_coeff() { return hbar() / (q_param() - 1); }

int half_steps(const Rational& alpha) {
  Rational t = 2 * alpha;
  t.canonicalize();
  if (t.get_den() != 1) throw std::domain_error("alpha must be a half-integer");
  return static_cast<int>(t.get_num().get_si());
}

Rational binomial(const Rational& alpha, int n) {
  Rational r = 1;
  for (int k = 0; k < n; ++k) r = r * (alpha - k) / (k + 1);
  return r;
}

struct RepContext {
  const Representation& rep;
  DressedMatrix mul(const DressedMatrix& a, const DressedMatrix& b) const {
    return {a.body * cartan_adjoint(rep, b.body, a.c1, a.c2), a.c1 + b.c1, a.c2 + b.c2};
  }
};

GradedMatrix identity_of(const Representation& rep) { return GradedMatrix::identity(rep.space()); }

}  // namespace

GradedMatrix limit_matrix(const GradedMatrix& m) {
  GradedMatrix out(m.codomain(), m.domain());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      try {
        out(i, j) = from_hcoeff(limit_s1(m(i, j)));
      } catch (const PoleAtQ1& e) {
        throw MatrixPoleAtQ1("entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + e.what(), i, j);
      }
    }
  return out;
}

std::vector<std::optional<int>> valuations(const GradedMatrix& m) {
  std::vector<std::optional<int>> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.push_back(m(i, j).is_zero() ? std::nullopt : std::optional<int>(order_at_s1(m(i, j))));
  return out;
}

GradedMatrix big_e_q_matrix(const GradedMatrix& x) {
  GradedMatrix out = GradedMatrix::identity(x.codomain());
  GradedMatrix pw = out;
  for (std::size_t n = 1; n <= x.rows(); ++n) {
    pw = pw * x;
    if (pw.is_zero()) return out;
    out += q_factorial(static_cast<int>(n)).inverse() * pw;
  }
  if (!(pw * x).is_zero()) throw NonTerminatingSeries("E_q argument is not nilpotent");
  return out;
}

GradedMatrix twist_G(const Representation& rep) { return big_e_q_matrix(twist_coeff() * rep.e1()); }

GradedMatrix twist_G_inv(const Representation& rep) { return inverse(twist_G(rep)); }

GradedMatrix t_alpha_rep(const Rational& alpha, const Representation& rep) {
  const int half = half_steps(alpha);
  if (half == 0) return identity_of(rep);
  return twist_G_inv(rep) * big_e_q_matrix((s_pow(half) * twist_coeff()) * rep.e1());
}

std::pair<DressedMatrix, DressedMatrix> identity_sides_rep(IdentityId id, const IdentityParams& p,
                                                           const Representation& rep) {
  using D = DressedMatrix;
  const RepContext ctx{rep};
  const GradedMatrix I = identity_of(rep);
  const GradedMatrix G = twist_G(rep);
  const GradedMatrix Gi = twist_G_inv(rep);
  auto t = [&](const Rational& a) { return t_alpha_rep(a, rep); };
  auto K = [&](int c1, int c2) { return cartan(rep, c1, c2); };
  auto plain = [](GradedMatrix m) { return D{std::move(m), 0, 0}; };
  auto dress = [&](const Rational& c1, const Rational& c2) { return D{I, c1, c2}; };
  const Scalar q = q_param();
  const Scalar a = twist_coeff();
  switch (id) {
    case IdentityId::ConjCartanH1:
      return {ctx.mul(ctx.mul(plain(Gi), dress(p.alpha, 0)), plain(G)), ctx.mul(plain(t(p.alpha)), dress(p.alpha, 0))};
    case IdentityId::GroupLaw: {
      const Rational ab = p.alpha + p.beta;
      const D lhs = ctx.mul(plain(t(ab)), dress(ab, 0));
      const D rhs = ctx.mul(ctx.mul(ctx.mul(plain(t(p.alpha)), dress(p.alpha, 0)), plain(t(p.beta))), dress(p.beta, 0));
      return {lhs, rhs};
    }
    case IdentityId::ConjCartanH2:
      return {ctx.mul(ctx.mul(plain(Gi), dress(0, 2 * p.beta)), plain(G)),
              ctx.mul(plain(t(-p.beta)), dress(0, 2 * p.beta))};
    case IdentityId::ConjF1: {
      const Scalar k = a / (q - q.inverse());
      return {plain(Gi * rep.f1() * G), plain(rep.f1() - k * (t(1) * K(2, 0) - t(-1) * K(-2, 0)))};
    }
    case IdentityId::ConjF2: return {plain(Gi * rep.f2() * G), plain(rep.f2())};
    case IdentityId::ConjF3:
      return {plain(Gi * rep.f3() * G), plain(rep.f3() + (q * a) * (t(1) * rep.f2() * K(2, 0)))};
    case IdentityId::Square:
    case IdentityId::SquareLiteral: {
      const GradedMatrix lhs = t(2) * K(2, 0) - t(-2) * K(-2, 0);
      const GradedMatrix second = id == IdentityId::Square ? t(-1) * K(-2, 0) * rep.e1() : K(-2, 0) * rep.e1() * t(-1);
      const GradedMatrix rhs = K(2, 0) - K(-2, 0) + (hbar() * (q + 1)) * (t(1) * rep.e1() * K(2, 0) + second);
      return {plain(lhs), plain(rhs)};
    }
  }
  throw std::logic_error("unknown identity");
}

IdentityVerdict verify_identity_rep(IdentityId id, const IdentityParams& p, const Representation& rep) {
  IdentityVerdict v{id, p, "rep:" + rep.name(), false, id != IdentityId::SquareLiteral, std::nullopt, ""};
  const auto [lhs, rhs] = identity_sides_rep(id, p, rep);
  if (lhs.c1 != rhs.c1 || lhs.c2 != rhs.c2) {
    v.note = "Cartan factors differ";
    return v;
  }
  const GradedMatrix diff = lhs.body - rhs.body;
  v.holds = diff.is_zero();
  if (!v.holds) v.note = std::to_string(diff.nonzero_count()) + " nonzero residual entries";
  return v;
}

std::vector<IdentityVerdict> verify_identities_rep(const Representation& rep) {
  std::vector<IdentityVerdict> out;
  for (auto id : gating_identities())
    for (const auto& p : identity_param_grid(id)) out.push_back(verify_identity_rep(id, p, rep));
  out.push_back(verify_identity_rep(IdentityId::SquareLiteral, {}, rep));
  return out;
}

GradedMatrix unipotent_power(const GradedMatrix& t, const Rational& alpha) {
  const GradedMatrix I = GradedMatrix::identity(t.codomain());
  const GradedMatrix n = t - I;
  GradedMatrix out = I;
  GradedMatrix pw = I;
  for (std::size_t k = 1; k <= t.rows(); ++k) {
    pw = pw * n;
    if (pw.is_zero()) return out;
    out += from_rational(binomial(alpha, static_cast<int>(k))) * pw;
  }
  if (!(pw * n).is_zero()) throw NonTerminatingSeries("matrix is not unipotent");
  return out;
}

TOperator T_limit(const Representation& rep) {
  TOperator t{limit_matrix(t_alpha_rep(1, rep)), GradedMatrix(rep.space(), rep.space()),
              GradedMatrix(rep.space(), rep.space())};
  t.T_inv = inverse(t.T);
  t.H1 = from_rational(Rational(1, 2)) * ((t.T + t.T_inv) * rep.h1());
  return t;
}

GradedMatrix closed_form_T(const Representation& rep, int sign) {
  const GradedMatrix e = limit_matrix(rep.e1());
  const GradedMatrix I = identity_of(rep);
  const Scalar h = hbar();
  const GradedMatrix root = unipotent_power(I + (h * h) * (e * e), Rational(1, 2));
  return (sign > 0 ? h : -h) * e + root;
}

bool TReport::all_pass() const {
  if (!difference_relation || !inverse_relation || !squared_relation || !closed_form_matches) return false;
  for (const auto& p : powers)
    if (!p.holds) return false;
  return true;
}

TReport t_report(const Representation& rep) {
  TReport r{T_limit(rep), false, false, false, {}, false};
  const GradedMatrix I = identity_of(rep);
  const GradedMatrix e = limit_matrix(rep.e1());
  const Scalar h = hbar();
  const GradedMatrix& T = r.t.T;
  const GradedMatrix& Ti = r.t.T_inv;
  r.difference_relation = T - Ti == (2 * h) * e;
  r.inverse_relation = T * Ti == I;
  r.squared_relation = T * T - Ti * Ti == (2 * h) * ((T + Ti) * e);
  for (const Rational& alpha : {Rational(2), Rational(-1), Rational(1, 2)}) {
    GradedMatrix expected = alpha == 2 ? T * T : alpha == -1 ? Ti : unipotent_power(T, alpha);
    r.powers.push_back({alpha, limit_matrix(t_alpha_rep(alpha, rep)) == expected});
  }
  r.closed_form_matches = closed_form_T(rep, 1) == T && closed_form_T(rep, -1) == Ti;
  return r;
}

GradedMatrix conjugated_R(const Representation& rep) {
  const Representation f = fundamental();
  const GradedMatrix M = graded_tensor(twist_G(f), twist_G(rep));
  const GradedMatrix Mi = graded_tensor(twist_G_inv(f), twist_G_inv(rep));
  return Mi * r_fund_arb(rep) * M;
}

AbcBlocks abc_blocks(const Representation& rep) {
  const auto& b = fund_arb_blocks();
  const GradedMatrix G = twist_G(rep);
  const GradedMatrix Gi = twist_G_inv(rep);
  auto conj = [&](const AlgebraElement& x) { return Gi * evaluate(x, rep) * G; };
  const Scalar a = twist_coeff();
  return {a * (conj(b.d1) - conj(b.d2)) + conj(b.a), conj(b.b) - a * conj(b.c), conj(b.c)};
}

GradedMatrix assemble_Rh(const Representation& rep) {
  const TOperator t = T_limit(rep);
  const GradedMatrix I = identity_of(rep);
  const GradedMatrix Z(rep.space(), rep.space());
  const Scalar h = hbar();
  const GradedMatrix upper = -h * t.H1 + (from_rational(Rational(1, 2)) * h) * (t.T - t.T_inv);
  return assemble_fund_blocks(rep, {{t.T, upper, Z}, {Z, t.T_inv, Z}, {Z, Z, I}});
}

bool TwistPipelineResult::verdict() const {
  return limit.has_value() && blocks_match && beta_limit_zero && gamma_limit_zero && limit_equals_assembled;
}

TwistPipelineResult limit_Rh(const Representation& rep) {
  TwistPipelineResult r{rep.name(), conjugated_R(rep), {}, std::nullopt, assemble_Rh(rep), false, false, false, false, ""};
  r.valuations = valuations(r.conjugated);
  const AbcBlocks abc = abc_blocks(rep);
  r.blocks_match = fund_block(r.conjugated, rep, 0, 1) == abc.alpha && fund_block(r.conjugated, rep, 0, 2) == abc.beta &&
                   fund_block(r.conjugated, rep, 1, 2) == abc.gamma;
  try {
    r.limit = limit_matrix(r.conjugated);
  } catch (const MatrixPoleAtQ1& e) {
    r.pole = e.what();
    return r;
  }
  r.beta_limit_zero = fund_block(*r.limit, rep, 0, 2).is_zero();
  r.gamma_limit_zero = fund_block(*r.limit, rep, 1, 2).is_zero();
  r.limit_equals_assembled = *r.limit == r.assembled;
  return r;
}

RhPropertyReport rh_property_report(const Representation& rep) {
  const Representation f = fundamental();
  const GradedMatrix rf = assemble_Rh(f);
  const GradedMatrix P = graded_flip(f.space(), f.space());
  RhPropertyReport out{ybe_check(rf, f.space()), false, P * rf * P * rf, false, 0, 0};
  out.flip_product_is_identity = out.flip_product == GradedMatrix::identity(rf.codomain());

  const GradedMatrix r = assemble_Rh(rep);
  const GradedMatrix I = GradedMatrix::identity(r.codomain());
  out.identity_at_zero = r.map([](const Scalar& x) { return substitute_hbar(x, 0); }) == I;
  const GradedMatrix n = r - I;
  out.hbar_degree = 0;
  for (std::size_t i = 0; i < n.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j) out.hbar_degree = std::max(out.hbar_degree, hbar_degree(n(i, j)));
  GradedMatrix pw = n;
  for (int k = 1; k <= static_cast<int>(n.rows()) + 1; ++k) {
    if (pw.is_zero()) {
      out.nilpotency_index = k;
      break;
    }
    pw = pw * n;
  }
  return out;
}

nlohmann::json valuations_json(const TwistPipelineResult& r) {
  nlohmann::json entries = nlohmann::json::array();
  const std::size_t n = r.conjugated.cols();
  int min_val = 0;
  for (std::size_t k = 0; k < r.valuations.size(); ++k) {
    if (!r.valuations[k]) continue;
    entries.push_back({k / n, k % n, *r.valuations[k]});
    min_val = std::min(min_val, *r.valuations[k]);
  }
  return {{"rep", r.rep}, {"dim", n}, {"min_valuation", min_val}, {"entries", std::move(entries)}};
}

nlohmann::json to_json(const TwistPipelineResult& r) {
  nlohmann::json j{{"rep", r.rep},
                   {"blocks_match", r.blocks_match},
                   {"beta_limit_zero", r.beta_limit_zero},
                   {"gamma_limit_zero", r.gamma_limit_zero},
                   {"limit_equals_assembled", r.limit_equals_assembled},
                   {"verdict", r.verdict()}};
  if (!r.pole.empty()) j["pole"] = r.pole;
  return j;
}

nlohmann::json to_json(const TReport& r) {
  nlohmann::json powers = nlohmann::json::array();
  for (const auto& p : r.powers) powers.push_back({{"alpha", p.alpha.get_str()}, {"holds", p.holds}});
  return {{"T", to_json(r.t.T)},
          {"difference_relation", r.difference_relation},
          {"inverse_relation", r.inverse_relation},
          {"squared_relation", r.squared_relation},
          {"powers", std::move(powers)},
          {"closed_form_matches", r.closed_form_matches},
          {"all_pass", r.all_pass()}};
}

}  // namespace sj
