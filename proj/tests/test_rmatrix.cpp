#include <doctest.h>

#include "superjordan/rmatrix.hpp"

using namespace sj;

namespace {

const Scalar q = q_param();

std::size_t idx(std::size_t i, std::size_t k) { return 3 * (i - 1) + (k - 1); }

}  // namespace

TEST_CASE("Cartan factor") {
  const auto f = fundamental();
  const auto K = kq(f, f);
  CHECK(K.is_diagonal());
  CHECK(K(idx(1, 1), idx(1, 1)) == Scalar(1));
  CHECK(K(idx(3, 3), idx(3, 3)) == q.pow(-2));
  CHECK(K(idx(2, 2), idx(2, 2)) == Scalar(1));
  // commutes with every Cartan image
  const auto f2 = fund2();
  CHECK(K * cartan(f2, 1, 0) == cartan(f2, 1, 0) * K);
  CHECK(K * cartan(f2, 0, 1) == cartan(f2, 0, 1) * K);
}

TEST_CASE("q-exponential factors") {
  const auto f = fundamental();
  const auto V9 = f.space().tensor(f.space());
  const auto x2 = -(q - q.inverse()) * graded_tensor(cartan(f, 0, -1) * f.e2(), f.f2() * cartan(f, 0, 1));
  CHECK(exp_q_matrix(x2) == GradedMatrix::identity(V9) + x2);
  CHECK_THROWS_AS(exp_q_matrix(GradedMatrix::identity(V9)), NonTerminatingSeries);

  // Degenerate representation with no raising images: Rhat = 1.
  const GradedMatrix Z(f.space(), f.space());
  const auto flat = f.with_image(Generator::E1, Z).with_image(Generator::E2, Z);
  CHECK(rhat_q(flat, f) == GradedMatrix::identity(V9));
}

TEST_CASE("R_q on fund (x) fund") {
  const auto f = fundamental();
  const auto b = r_q(f, f);
  CHECK(b.r == b.rhat * b.kq);
  CHECK(b.r(0, 0) == Scalar(1));
  CHECK(is_unit_triangular(b.rhat, f, f));
  CHECK_FALSE(is_unit_triangular(graded_flip(f.space(), f.space()), f, f));
  CHECK(determinant_is_unit_monomial(b.r));
  CHECK(b.r == r_fund_arb(f));
}

TEST_CASE("block form") {
  const auto f = fundamental();
  const auto R = r_fund_arb(f);
  CHECK(fund_block(R, f, 0, 0) == GradedMatrix::diagonal(f.space(), {1, q.inverse(), q.inverse()}));
  CHECK(fund_block(R, f, 2, 2) == evaluate(AlgebraElement::cartan(-2, -4), f));
  CHECK(fund_block(R, f, 1, 0).is_zero());
  // B has an f1 f2 part and an f3 part.
  const auto& B = fund_arb_blocks().b;
  PbwMonomial f1f2, f3;
  f1f2.f1 = 1;
  f1f2.f2 = 1;
  f1f2.k = {-1, -3};
  f3.f3 = 1;
  f3.k = {-1, -3};
  CHECK_FALSE(B.coefficient(f1f2).is_zero());
  CHECK_FALSE(B.coefficient(f3).is_zero());
}

TEST_CASE("Yang-Baxter checks") {
  const auto f = fundamental();
  const auto& V = f.space();
  CHECK(ybe_check(GradedMatrix::identity(V.tensor(V)), V).holds);
  CHECK(ybe_check(graded_flip(V, V), V).holds);
  const auto res = ybe_check(r_q(f, f).r, V);
  CHECK(res.holds);
  CHECK(res.nonzero == 0);
  // A diagonal twist of R breaks the equation.
  auto bad = r_q(f, f).r;
  bad(idx(1, 2), idx(2, 1)) += Scalar(1);
  CHECK_FALSE(ybe_check(bad, V).holds);
}

TEST_CASE("intertwining orientation") {
  const auto f = fundamental();
  const auto R = r_q(f, f).r;
  for (const auto& v : intertwiner_check(R, f, f)) {
    INFO(v.generator);
    CHECK(v.forward);
    if (v.generator[0] == 'K') CHECK(v.reverse);
    if (v.generator == "e1") CHECK_FALSE(v.reverse);
  }
  const auto I = GradedMatrix::identity(f.space().tensor(f.space()));
  const auto id = intertwiner_check(I, f, f);
  CHECK_FALSE(id[0].forward);
  CHECK_FALSE(id[0].reverse);
}
