#include <doctest.h>

#include <random>

#include "superjordan/reps.hpp"

using namespace sj;

namespace {

using A = AlgebraElement;

const Scalar q = q_param();

Letter random_letter(std::mt19937& rng) {
  static const std::vector<Letter> pool{
      Letter::of(Generator::E1), Letter::of(Generator::E2), Letter::of(Generator::E3), Letter::of(Generator::F1),
      Letter::of(Generator::F2), Letter::of(Generator::F3), Letter::cartan(1, 0),      Letter::cartan(-1, 0),
      Letter::cartan(0, 1),      Letter::cartan(0, -1),     Letter::cartan(2, -1)};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

std::vector<Letter> random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::vector<Letter> w(len(rng));
  for (auto& l : w) l = random_letter(rng);
  return w;
}

}  // namespace

TEST_CASE("fundamental representation") {
  const auto f = fundamental();
  const auto& V = f.space();
  CHECK(f.e3() == GradedMatrix::unit(V, 0, 2));
  CHECK(f.f3() == GradedMatrix::unit(V, 2, 0));
  CHECK(evaluate(A::cartan(2, 0), f) == GradedMatrix::diagonal(V, {q, q.inverse(), 1}));
  CHECK(evaluate(A::e2() * A::e2(), f).is_zero());
  CHECK(evaluate(A::e3(), f) == f.e3());
  const auto report = validate(f);
  CHECK(report.all_pass());
  const auto* serre = report.find("serre-e");
  REQUIRE(serre);
  CHECK(serre->residual.is_zero());
}

TEST_CASE("broken representation is reported with a residual") {
  const auto f = fundamental();
  const auto broken = f.with_image(Generator::E2, GradedMatrix(f.space(), f.space()));
  const auto rep = validate(broken);
  CHECK_FALSE(rep.all_pass());
  const auto* c = rep.find("[e2,f2]");
  REQUIRE(c);
  CHECK_FALSE(c->holds);
  const auto expected = (q - q.inverse()).inverse() * (cartan(f, 0, 2) - cartan(f, 0, -2));
  CHECK(c->residual == expected);
  CHECK(rep.find("[e1,f1]")->holds);
}

TEST_CASE("weights must be half-integral") {
  const auto f = fundamental();
  CHECK_THROWS_AS(Representation("bad", f.space(), f.e1(), f.e2(), f.f1(), f.f2(),
                                 {{make_rational(1, 3), 0}, {0, 0}, {0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(rep_by_name("adjoint"), std::invalid_argument);
}

TEST_CASE("tensor representations") {
  const auto f = fundamental();
  const auto f2 = fund2();
  const auto& V = f.space();
  const auto half = GradedMatrix::diagonal(V, {s_pow(1), s_pow(-1), 1});
  const auto half_inv = GradedMatrix::diagonal(V, {s_pow(-1), s_pow(1), 1});
  CHECK(f2.e1() == graded_tensor(f.e1(), half) + graded_tensor(half_inv, f.e1()));
  CHECK(f2.weights()[0] == Weight{2, 0});
  CHECK(validate(f2).all_pass());
  CHECK(validate(fund3()).all_pass());

  // Coassociativity: both bracketings give the same images on the row-major triple basis.
  const auto left = fund3();
  const auto right = tensor_rep(f, f2);
  CHECK(left.e1() == right.e1());
  CHECK(left.e2() == right.e2());
  CHECK(left.f1() == right.f1());
  CHECK(left.f2() == right.f2());
  CHECK(left.weights() == right.weights());
}

TEST_CASE("odd images anticommute") {
  const auto f2 = fund2();
  CHECK((f2.e2() * f2.f1() - f2.f1() * f2.e2()).is_zero());
  CHECK((f2.e2() * f2.f2() + f2.f2() * f2.e2()) == (q - q.inverse()).inverse() * (cartan(f2, 0, 2) - cartan(f2, 0, -2)));
  CHECK((f2.e3() * f2.e3()).is_zero());
}

TEST_CASE("series evaluation") {
  const auto f = fundamental();
  const auto t1 = t_alpha_series(1, 4);
  CHECK(evaluate(t1, f) == GradedMatrix::identity(f.space()) + hbar() * f.e1());
  // e1 has nilpotency index 3 on fund (x) fund, so order 1 is too short.
  CHECK_THROWS_AS(evaluate(twist_series(1), fund2()), NonTerminatingSeries);
  CHECK_NOTHROW(evaluate(twist_series(3), fund2()));
}

TEST_CASE("normal forms agree with direct matrix products") {
  std::mt19937 rng(2026);
  for (const auto& rep : {fundamental(), fund2()}) {
    int mismatches = 0;
    for (int t = 0; t < 200; ++t) {
      const auto w = random_word(rng, 6);
      GradedMatrix direct = GradedMatrix::identity(rep.space());
      for (const auto& l : w) direct = direct * rep.image(l);
      if (!(evaluate(word(w), rep) == direct)) ++mismatches;
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("evaluation is multiplicative on random pairs") {
  std::mt19937 rng(77);
  const auto rep = fund2();
  for (int t = 0; t < 60; ++t) {
    const A x = word(random_word(rng, 3)) + word(random_word(rng, 3)) * s_pow(1);
    const A y = word(random_word(rng, 3));
    CHECK(evaluate(x * y, rep) == evaluate(x, rep) * evaluate(y, rep));
  }
}
