#include <doctest.h>

#include "superjordan/jordanian.hpp"
#include "superjordan/numeric.hpp"

using namespace sj;

TEST_CASE("numeric fundamental data") {
  const auto f = numeric::fund();
  CHECK(f.dim() == 3);
  CHECK(f.e3(1.21)(0, 2) == doctest::Approx(1.0));
  CHECK(f.f3(1.21)(2, 0) == doctest::Approx(1.0));
  const auto f2 = numeric::by_name("fund2", 1.21);
  CHECK(f2.dim() == 9);
  // odd generators square to zero
  CHECK((f2.e2 * f2.e2).norm() < 1e-14);
  CHECK((f2.f2 * f2.f2).norm() < 1e-14);
  CHECK_THROWS(numeric::by_name("adjoint", 1.21));
}

TEST_CASE("numeric R at the reference point") {
  for (const auto& c : numeric::spot_check(1.21, 0.3)) {
    INFO(c.label << " " << c.max_rel_error);
    CHECK(c.pass);
  }
  // an independent second point
  for (const auto& c : numeric::spot_check(0.7, -1.5)) {
    INFO(c.label << " " << c.max_rel_error);
    CHECK(c.pass);
  }
}

TEST_CASE("comparison detects a perturbation") {
  const auto f = fundamental();
  auto approx = numeric::r_q(numeric::fund(), numeric::fund(), 1.21);
  approx(0, 0) *= 1 + 1e-6;
  const auto c = numeric::compare("perturbed", r_q(f, f).r, approx, 1.21, 0.3, 1e-10);
  CHECK_FALSE(c.pass);
  CHECK(c.max_rel_error > 1e-7);
}
