#include <doctest.h>

#include <random>

#include "superjordan/series.hpp"

using namespace sj;

namespace {

using A = AlgebraElement;

const Scalar q = q_param();

A bracket_k(int c1, int c2) { return (A::cartan(c1, c2) - A::cartan(-c1, -c2)) * (q - q.inverse()).inverse(); }

PbwMonomial random_monomial(std::mt19937& rng) {
  std::uniform_int_distribution<int> small(0, 2), bit(0, 1), k(-2, 2);
  PbwMonomial m;
  m.f1 = small(rng);
  m.f3 = bit(rng);
  m.f2 = bit(rng);
  m.k = {k(rng), k(rng)};
  m.e2 = bit(rng);
  m.e3 = bit(rng);
  m.e1 = small(rng);
  return m;
}

// Short words keep the coproduct expansion small.
A random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-2, 2), g(0, 6), len(1, 3);
  const std::vector<A> gens{A::e1(), A::e2(), A::e3(), A::f1(), A::f2(), A::f3(), A::cartan(1, -1)};
  A x = A::scalar(Scalar(c(rng)) + s_pow(c(rng)));
  const int n = len(rng);
  for (int i = 0; i < n; ++i) x = x * gens[g(rng)];
  return x;
}

}  // namespace

TEST_CASE("straightening examples") {
  CHECK((A::e2() * A::e2()).is_zero());
  CHECK((A::f3() * A::f3()).is_zero());
  CHECK(A::e1() * A::f1() == A::f1() * A::e1() + bracket_k(2, 0));

  PbwMonomial e2e1;
  e2e1.e2 = 1;
  e2e1.e1 = 1;
  CHECK(A::e1() * A::e2() == A::monomial(e2e1, q.inverse()) + A::e3());
  // e3 and f3 as defined from the simple generators
  CHECK(A::e1() * A::e2() - A::e2() * A::e1() * q.inverse() == A::e3());
  CHECK(A::f2() * A::f1() - A::f1() * A::f2() * q == A::f3());
  CHECK(A::cartan(1, 0) * A::cartan(-1, 2) == A::cartan(0, 2));
}

TEST_CASE("supercommutator") {
  CHECK(supercommutator(A::e2(), A::f2()) == bracket_k(0, 2));
  CHECK(supercommutator(A::e1(), A::e1()).is_zero());
  CHECK(supercommutator(A::e2(), A::e2()).is_zero());
  CHECK(supercommutator(A::e1(), A::f2()).is_zero());
  CHECK(supercommutator(A::e2(), A::f1()).is_zero());
  CHECK_THROWS_AS(supercommutator(A::e1() + A::e2(), A::f1()), NotHomogeneous);
  // Cartan weights: K(c) e1 K(-c) = q^{(2 c1 - c2)/2} e1
  CHECK(A::cartan(1, 0) * A::e1() * A::cartan(-1, 0) == A::e1() * q);
  CHECK(A::cartan(0, 2) * A::e2() * A::cartan(0, -2) == A::e2());
  CHECK(A::cartan(2, 0) * A::e2() * A::cartan(-2, 0) == A::e2() * q.inverse());
}

TEST_CASE("Serre relations normalize to zero") {
  const A e1 = A::e1(), e2 = A::e2(), f1 = A::f1(), f2 = A::f2();
  const Scalar qq = q + q.inverse();
  CHECK((e1 * e1 * e2 - e1 * e2 * e1 * qq + e2 * e1 * e1).is_zero());
  CHECK((f1 * f1 * f2 - f1 * f2 * f1 * qq + f2 * f1 * f1).is_zero());
}

TEST_CASE("multiplication is associative on random monomials") {
  std::mt19937 rng(99);
  for (int t = 0; t < 40; ++t) {
    const A x = A::monomial(random_monomial(rng));
    const A y = A::monomial(random_monomial(rng));
    const A z = A::monomial(random_monomial(rng));
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("coproduct") {
  CHECK(coproduct(A::e1()) == TensorElement::pure(A::e1(), A::cartan(1, 0)) + TensorElement::pure(A::cartan(-1, 0), A::e1()));
  CHECK(coproduct(A::one()) == TensorElement::pure(A::one(), A::one()));
  CHECK(coproduct(A::e2() * A::e2()).is_zero());
  CHECK((coproduct(A::e2()) * coproduct(A::e2())).is_zero());

  std::mt19937 rng(4);
  for (int t = 0; t < 12; ++t) {
    const A x = random_element(rng), y = random_element(rng);
    CHECK(coproduct(x * y) == coproduct(x) * coproduct(y));
  }
}

TEST_CASE("antipode and counit") {
  CHECK(antipode(A::e1()) == -(A::e1() * q));
  CHECK(antipode(A::one()) == A::one());
  CHECK(counit(A::e2()).is_zero());
  CHECK(counit(A::cartan(3, -1) * Scalar(5)) == Scalar(5));

  const std::vector<A> gens{A::e1(), A::e2(), A::f1(), A::f2(), A::e3(), A::f3(), A::cartan(1, 0), A::cartan(-1, 0),
                            A::cartan(0, 1), A::cartan(0, -1)};
  for (const auto& x : gens) {
    CHECK(multiply_antipode_left(coproduct(x)) == A::scalar(counit(x)));
    CHECK(multiply_antipode_right(coproduct(x)) == A::scalar(counit(x)));
  }
  // Graded anti-morphism on a product of two odd generators.
  CHECK(antipode(A::e2() * A::f2()) == -(antipode(A::f2()) * antipode(A::e2())));
}

TEST_CASE("text and json forms") {
  PbwMonomial m;
  m.f1 = 2;
  m.f3 = 1;
  m.k = {1, 0};
  m.e1 = 1;
  CHECK(to_string(m) == "f1^2 f3 K(1,0) e1");
  CHECK(to_string(A::one()) == "1");
  CHECK(to_string(A()) == "0");
  CHECK(to_string(A::e1() * Scalar(-1)) == "-e1");
  const auto j = to_json(A::monomial(m, s_pow(1)));
  CHECK(j.size() == 1);
  CHECK(j[0]["monomial"]["f1"] == 2);
  CHECK(j[0]["text"] == "f1^2 f3 K(1,0) e1");
}

TEST_CASE("q-exponential series") {
  const int N = 6;
  CHECK(exp_q(HSeries(N)) == HSeries::one(N));
  const A x1 = A::e1() * (q - 1).inverse();
  const HSeries x = HSeries::monomial(N, 1, x1);
  const HSeries E = big_e_q(x);
  CHECK(E.coeff(0) == A::one());
  CHECK(E.coeff(1) == x1);
  CHECK(E.coeff(2) == x1 * x1 * q_factorial(2).inverse());
  CHECK(series_inverse(E) * E == HSeries::one(N));
  CHECK(E * series_inverse(E) == HSeries::one(N));
  CHECK_THROWS_AS(big_e_q(HSeries::one(N)), std::domain_error);
  CHECK_THROWS_AS(series_inverse(x), std::domain_error);
}

TEST_CASE("t-alpha series") {
  const int N = 4;
  CHECK(t_alpha_series(0, N) == HSeries::one(N));
  const HSeries t1 = t_alpha_series(1, N);
  CHECK(t1.coeff(0) == A::one());
  CHECK(t1.coeff(1) == A::e1());
  CHECK(t_alpha_series(2, N).coeff(1) == A::e1() * (q + 1));
  CHECK(t_alpha_series(make_rational(1, 2), N).coeff(1) == A::e1() * ((s_pow(1) - 1) / (q - 1)));
  CHECK_THROWS_AS(t_alpha_series(make_rational(1, 3), N), std::domain_error);
}

TEST_CASE("twist identities in PBW form") {
  const int N = 4;
  CHECK(verify_identity(IdentityId::ConjF2, {}, N).holds);
  CHECK(verify_identity(IdentityId::ConjCartanH1, {0, 0}, N).holds);
  CHECK(verify_identity(IdentityId::ConjF1, {}, N).holds);
  CHECK(verify_identity(IdentityId::ConjF3, {}, N).holds);
  CHECK(verify_identity(IdentityId::Square, {}, N).holds);
  for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{{1, 1}, {1, -1}, {make_rational(1, 2), make_rational(1, 2)}})
    CHECK(verify_identity(IdentityId::GroupLaw, {a, b}, N).holds);
  CHECK(verify_identity(IdentityId::ConjCartanH1, {make_rational(-1, 2), 0}, N).holds);
  CHECK(verify_identity(IdentityId::ConjCartanH2, {0, 2}, N).holds);

  // The literal printed form of the last identity breaks at order 2.
  const auto printed = verify_identity(IdentityId::SquareLiteral, {}, N);
  CHECK_FALSE(printed.holds);
  CHECK_FALSE(printed.gating);
  REQUIRE(printed.first_failing_order.has_value());
  CHECK(*printed.first_failing_order == 2);
}
