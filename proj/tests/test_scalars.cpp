#include <doctest.h>

#include <cmath>
#include <random>

#include "superjordan/scalar.hpp"

using namespace sj;

namespace {

const Scalar s = s_var();
const Scalar h = hbar();
const Scalar q = q_param();

HCoeff random_hcoeff(std::mt19937& rng, bool allow_den) {
  std::uniform_int_distribution<int> c(-3, 3), deg(0, 2);
  auto poly = [&] {
    std::vector<Rational> cs;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) cs.push_back(make_rational(c(rng), 1 + (i % 2)));
    return Polynomial<Rational>(std::move(cs));
  };
  auto n = poly();
  auto d = allow_den ? poly() : Polynomial<Rational>::one();
  if (d.is_zero()) d = Polynomial<Rational>::one();
  return HCoeff(n, d);
}

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  auto poly = [&] {
    std::vector<HCoeff> cs;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) cs.push_back(random_hcoeff(rng, i == 0));
    return Polynomial<HCoeff>(std::move(cs));
  };
  auto n = poly();
  auto d = poly();
  if (d.is_zero()) d = Polynomial<HCoeff>::one();
  return Scalar(n, d);
}

}  // namespace

TEST_CASE("field operations on named values") {
  CHECK((s - 1) + 1 == s);
  CHECK(s_pow(2).inverse() * s_pow(2) == Scalar(1));

  const Scalar qq = q - q.inverse();
  // (s^4 - 1)/s^2 after reduction.
  CHECK(qq.numerator() == Polynomial<HCoeff>(std::vector<HCoeff>{HCoeff(-1), 0, 0, 0, HCoeff(1)}));
  CHECK(qq.denominator() == Polynomial<HCoeff>::monomial(HCoeff(1), 2));

  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
  CHECK((s * s - 1) / (s - 1) == s + 1);
  CHECK((h / (q - 1)) * (q - 1) == h);
}

TEST_CASE("q-numbers use the corrected conventions") {
  CHECK(q_number(1) == Scalar(1));
  CHECK(q_number(2) == q + q.inverse());
  CHECK(q_number(3) == q * q + 1 + q.pow(-2));
  CHECK(q_number_asym(2) == 1 + q);
  CHECK(q_number_asym(3) == 1 + q + q * q);
  CHECK(q_factorial(3) == (q + q.inverse()) * (q * q + 1 + q.pow(-2)));
  CHECK(q_factorial_asym(0) == Scalar(1));
  CHECK(limit_s1(q_number(4)) == HCoeff(4));
}

TEST_CASE("valuation at s = 1") {
  CHECK(order_at_s1((s * s - 1) / (s - 1)) == 0);
  CHECK(order_at_s1((s - 1) * (s - 1)) == 2);
  CHECK(order_at_s1((q - 1).inverse()) == -1);
  CHECK(order_at_s1(h * (s - 1) / (s + 1)) == 1);
  CHECK_THROWS(order_at_s1(Scalar(0)));
}

TEST_CASE("limits at s = 1") {
  CHECK(limit_s1((q - q.inverse()) / (q - 1)) == HCoeff(2));
  CHECK(limit_s1(h / (q - 1) * (q - 1)) == h_var());
  CHECK_THROWS_AS(limit_s1((q - 1).inverse()), PoleAtQ1);
  CHECK(limit_s1(h * (s - 1)) == HCoeff(0));
  // h/(q-1) * (1 - q^-1) -> h
  CHECK(limit_s1(h / (q - 1) * (1 - q.inverse())) == h_var());
}

TEST_CASE("numeric evaluation") {
  CHECK(eval_numeric(s, 4.0, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  const double q0 = 1.21;
  const double direct = (q0 - 1.0 / q0) / (q0 - 1.0);
  CHECK(eval_numeric((q - q.inverse()) / (q - 1), q0, 0.0) == doctest::Approx(direct).epsilon(1e-13));
  CHECK(direct == doctest::Approx(1.826446).epsilon(1e-6));
  CHECK(eval_numeric(h, 2.0, 0.3) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK_THROWS_AS(eval_numeric((q - 1).inverse(), 1.0, 0.3), DivisionByZero);
}

TEST_CASE("h substitution and degree") {
  const Scalar x = (h * h + h * s) / (s + 2);
  CHECK(substitute_hbar(x, Rational(0)) == Scalar(0));
  CHECK(substitute_hbar(x, Rational(1)) == (1 + s) / (s + 2));
  CHECK(hbar_degree(h * h * 3 + h) == 2);
  CHECK(hbar_degree(Scalar(5)) == 0);
  CHECK(is_s_free(h / (h + 1)));
  CHECK_FALSE(is_s_free(h * s));
}

TEST_CASE("field laws on random values") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 60; ++trial) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK((a - a).denominator().is_one());
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("canonical form is unique") {
  // The same value built along different routes.
  const Scalar x1 = (s * s - 1) / (s * s - 2 * s + 1);
  const Scalar x2 = (s + 1) / (s - 1);
  CHECK(x1 == x2);
  const Scalar y1 = (h * s + h) / (h * h * s + h * h);
  CHECK(y1 == h.inverse());
  const Scalar z1 = (q - 1) / (s - 1) * (h + 1) / (h * h - 1);
  const Scalar z2 = (s + 1) / (h - 1);
  CHECK(z1 == z2);
}

TEST_CASE("numeric values near q = 1 converge to the exact limit") {
  std::mt19937 rng(7);
  const double h0 = 0.3;
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Scalar a = random_scalar(rng);
    if (a.is_zero()) continue;
    // Plant a removable singularity.
    a = a * (q - 1) / (s - 1);
    const int v = order_at_s1(a);
    if (v < 0) a = a * (s - 1).pow(-v);
    HCoeff lim;
    try {
      lim = limit_s1(a);
    } catch (const PoleAtQ1&) {
      FAIL("limit must exist after clearing the pole");
    }
    double exact;
    double near1, near2;
    try {
      exact = eval_numeric(lim, h0);
      near1 = eval_numeric(a, 1.0 + 1e-5, h0);
      near2 = eval_numeric(a, 1.0 + 2e-5, h0);
    } catch (const DivisionByZero&) {
      continue;  // h0 or a nearby s hits a pole of this random value
    }
    // First-order convergence, and second order after one Richardson step.
    CHECK(std::abs(near1 - exact) <= 1e-3 * (1.0 + std::abs(exact)));
    CHECK(std::abs((2.0 * near1 - near2) - exact) <= 1e-8 * (1.0 + std::abs(exact)));
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("json round trip and text form") {
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Scalar a = random_scalar(rng);
    CHECK(scalar_from_json(to_json(a)) == a);
  }
  CHECK(to_string(Scalar(0)) == "0");
  CHECK(to_string(s) == "s");
  CHECK(to_string(q - 1) == "s^2 - 1");
  CHECK(to_string(h / (s * s)) == "h/s^2");
  CHECK(to_string(Scalar(HCoeff(make_rational(1, 2))) * s) == "1/2*s");
}
