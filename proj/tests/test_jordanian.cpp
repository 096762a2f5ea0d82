#include <doctest.h>

#include "superjordan/jordanian.hpp"

using namespace sj;

namespace {

const Scalar q = q_param();
const Scalar h = hbar();

GradedMatrix E(std::size_t i, std::size_t j) { return GradedMatrix::unit(fundamental().space(), i - 1, j - 1); }
GradedMatrix I3() { return GradedMatrix::identity(fundamental().space()); }

GradedMatrix at_h0(const GradedMatrix& m) {
  return m.map([](const Scalar& x) { return substitute_hbar(x, 0); });
}

}  // namespace

TEST_CASE("twist in fund") {
  const auto f = fundamental();
  const Scalar a = h / (q - 1);
  CHECK(twist_G(f) == I3() + a * E(1, 2));
  CHECK(twist_G_inv(f) == I3() - a * E(1, 2));
  CHECK(t_alpha_rep(0, f) == I3());
  for (const Rational& alpha : {Rational(1), Rational(2), Rational(-1), Rational(1, 2), Rational(-3, 2)}) {
    const int half = static_cast<int>(Rational(2 * alpha).get_num().get_si());
    CHECK(t_alpha_rep(alpha, f) == I3() + (h * (s_pow(half) - 1) / (q - 1)) * E(1, 2));
  }
  CHECK_THROWS_AS(t_alpha_rep(Rational(1, 3), f), std::domain_error);
  CHECK(limit_matrix(t_alpha_rep(1, f)) == I3() + h * E(1, 2));
  CHECK_THROWS_AS(big_e_q_matrix(I3()), NonTerminatingSeries);
}

TEST_CASE("twist in fund2 terminates") {
  const auto f2 = fund2();
  const auto G = twist_G(f2);
  CHECK(G * twist_G_inv(f2) == GradedMatrix::identity(f2.space()));
  CHECK((f2.e1() * f2.e1() * f2.e1()).is_zero());
  CHECK_FALSE((f2.e1() * f2.e1()).is_zero());
}

TEST_CASE("limits report poles with coordinates") {
  const auto f = fundamental();
  GradedMatrix m = I3();
  m(1, 2) = (q - 1).inverse();
  CHECK(valuations(m)[5] == std::optional<int>(-1));
  CHECK_FALSE(valuations(m)[1].has_value());
  try {
    limit_matrix(m);
    FAIL("expected a pole");
  } catch (const MatrixPoleAtQ1& e) {
    CHECK(e.row == 1);
    CHECK(e.col == 2);
  }
}

TEST_CASE("identities in representations") {
  for (const auto& rep : {fundamental(), fund2()}) {
    for (const auto& v : verify_identities_rep(rep)) {
      INFO(rep.name() << " " << identity_name(v.id) << " " << v.note);
      if (v.gating) CHECK(v.holds);
    }
  }
  const auto f = fundamental();
  CHECK(verify_identity_rep(IdentityId::ConjF2, {}, f).holds);
  CHECK(verify_identity_rep(IdentityId::ConjCartanH2, {0, 0}, f).holds);
  CHECK(verify_identity_rep(IdentityId::Square, {}, f).holds);
  CHECK_FALSE(verify_identity_rep(IdentityId::SquareLiteral, {}, fund2()).holds);
}

TEST_CASE("T operator") {
  const auto f = fundamental();
  const auto t = T_limit(f);
  CHECK(t.T == I3() + h * E(1, 2));
  CHECK(t.T_inv == I3() - h * E(1, 2));
  CHECK(t.H1 == f.h1());
  CHECK(closed_form_T(f) == t.T);
  CHECK(at_h0(closed_form_T(f)) == I3());
  for (const auto& rep : {f, fund2()}) {
    const auto r = t_report(rep);
    INFO(rep.name());
    CHECK(r.difference_relation);
    CHECK(r.inverse_relation);
    CHECK(r.squared_relation);
    CHECK(r.closed_form_matches);
    CHECK(r.powers.size() == 3);
    CHECK(r.all_pass());
  }
  CHECK(unipotent_power(I3() + h * E(1, 2), Rational(1, 2)) == I3() + (h / 2) * E(1, 2));
}

TEST_CASE("conjugated R and its blocks") {
  const auto f = fundamental();
  const auto R = conjugated_R(f);
  CHECK(at_h0(R) == at_h0(r_fund_arb(f)));
  const auto abc = abc_blocks(f);
  CHECK(fund_block(R, f, 1, 2) == abc.gamma);
  CHECK(fund_block(R, f, 0, 2) == abc.beta);
  CHECK(fund_block(R, f, 0, 1) == abc.alpha);
  CHECK(fund_block(R, f, 2, 2) == twist_G_inv(f) * cartan(f, -2, -4) * twist_G(f));
}

TEST_CASE("assembled R_h") {
  const auto f = fundamental();
  const auto Rh = assemble_Rh(f);
  CHECK(fund_block(Rh, f, 0, 1) == -h * f.h1() + (h * h) * E(1, 2));
  CHECK(fund_block(Rh, f, 0, 1) == -h * GradedMatrix::diagonal(f.space(), {1, -1, 0}) + (h * h) * E(1, 2));
  CHECK(fund_block(Rh, f, 1, 2).is_zero());
  CHECK(fund_block(Rh, f, 0, 2).is_zero());
  CHECK(at_h0(Rh) == GradedMatrix::identity(Rh.codomain()));
}

TEST_CASE("contraction limit") {
  for (const auto& rep : {fundamental(), fund2()}) {
    const auto r = limit_Rh(rep);
    INFO(rep.name() << " " << r.pole);
    CHECK(r.limit.has_value());
    CHECK(r.blocks_match);
    CHECK(r.beta_limit_zero);
    CHECK(r.gamma_limit_zero);
    CHECK(r.limit_equals_assembled);
    CHECK(r.verdict());
    for (const auto& v : r.valuations)
      if (v) CHECK(*v >= 0);
  }
}

TEST_CASE("R_h properties") {
  const auto p = rh_property_report(fundamental());
  CHECK(p.ybe.holds);
  CHECK(p.identity_at_zero);
  CHECK(p.hbar_degree == 2);
  CHECK(p.nilpotency_index > 0);
  const auto p2 = rh_property_report(fund2());
  CHECK(p2.identity_at_zero);
  MESSAGE("flip product is identity: " << p.flip_product_is_identity);
}
