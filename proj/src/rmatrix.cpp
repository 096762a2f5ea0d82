#include "superjordan/rmatrix.hpp"

#include <stdexcept>

namespace sj {

namespace {

Scalar qq() { return q_param() - q_param().inverse(); }

int s_exponent_of_kq(const Weight& a, const Weight& b) {
  // q^{-(...)} = s^{-2(...)}
  Rational e = -2 * (a.h1 * b.h2 + a.h2 * b.h1 + 2 * a.h2 * b.h2);
  e.canonicalize();
  if (e.get_den() != 1) throw std::domain_error("K_q exponent is not a half-integer");
  return static_cast<int>(e.get_num().get_si());
}

Rational height(const Weight& w) { return -w.h1 - 3 * w.h2; }

}  // namespace

GradedMatrix kq(const Representation& r1, const Representation& r2) {
  std::vector<Scalar> d;
  for (const auto& a : r1.weights())
    for (const auto& b : r2.weights()) d.push_back(s_pow(s_exponent_of_kq(a, b)));
  return GradedMatrix::diagonal(r1.space().tensor(r2.space()), d);
}

GradedMatrix exp_q_matrix(const GradedMatrix& x) {
  GradedMatrix out = GradedMatrix::identity(x.codomain());
  GradedMatrix pw = out;
  for (std::size_t n = 1; n <= x.rows(); ++n) {
    pw = pw * x;
    if (pw.is_zero()) return out;
    out += q_factorial_asym(static_cast<int>(n)).inverse() * pw;
  }
  if (!(pw * x).is_zero()) throw NonTerminatingSeries("exp_q argument is not nilpotent");
  return out;
}

GradedMatrix rhat_q(const Representation& r1, const Representation& r2) {
  auto K1 = [&](int a, int b) { return cartan(r1, a, b); };
  auto K2 = [&](int a, int b) { return cartan(r2, a, b); };
  const GradedMatrix x1 = qq() * graded_tensor(K1(-1, 0) * r1.e1(), r2.f1() * K2(1, 0));
  const GradedMatrix x3 = -qq() * graded_tensor(K1(-1, -1) * r1.e3(), r2.f3() * K2(1, 1));
  const GradedMatrix x2 = -qq() * graded_tensor(K1(0, -1) * r1.e2(), r2.f2() * K2(0, 1));
  return exp_q_matrix(x1) * exp_q_matrix(x3) * exp_q_matrix(x2);
}

RMatrixBundle r_q(const Representation& r1, const Representation& r2) {
  GradedMatrix k = kq(r1, r2);
  GradedMatrix rh = rhat_q(r1, r2);
  GradedMatrix r = rh * k;
  return {r1.name(), r2.name(), std::move(k), std::move(rh), std::move(r)};
}

const FundArbBlocks& fund_arb_blocks() {
  static const FundArbBlocks blocks = [] {
    using A = AlgebraElement;
    const Scalar c = qq();
    const Scalar si = s_pow(-1);
    FundArbBlocks b;
    b.d1 = A::cartan(0, -2);
    b.d2 = A::cartan(-2, -2);
    b.d3 = A::cartan(-2, -4);
    b.a = A::f1() * A::cartan(-1, -2) * (c * si);
    b.b = A::f1() * A::cartan(1, 0) * A::f2() * A::cartan(-2, -3) * (c * c * q_param().inverse()) +
          A::f3() * A::cartan(-1, -3) * (c * si);
    b.c = A::f2() * A::cartan(-2, -3) * (c * si);
    return b;
  }();
  return blocks;
}

GradedMatrix assemble_fund_blocks(const Representation& rep, const std::vector<std::vector<GradedMatrix>>& blocks) {
  const auto f = fundamental();
  const std::size_t n = rep.dim();
  GradedMatrix out(f.space().tensor(rep.space()), f.space().tensor(rep.space()));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out.set_block(i * n, j * n, blocks[i][j]);
  return out;
}

GradedMatrix fund_block(const GradedMatrix& m, const Representation& rep, std::size_t i, std::size_t j) {
  const std::size_t n = rep.dim();
  return m.block(i * n, j * n, rep.space(), rep.space());
}

GradedMatrix r_fund_arb(const Representation& rep) {
  const auto& b = fund_arb_blocks();
  const GradedMatrix Z(rep.space(), rep.space());
  return assemble_fund_blocks(rep, {{evaluate(b.d1, rep), evaluate(b.a, rep), evaluate(b.b, rep)},
                                    {Z, evaluate(b.d2, rep), evaluate(b.c, rep)},
                                    {Z, Z, evaluate(b.d3, rep)}});
}

YbeResult ybe_check(const GradedMatrix& r, const GradedSpace& v) {
  const GradedMatrix r12 = embed_12(r, v, v, v);
  const GradedMatrix r13 = embed_13(r, v, v, v);
  const GradedMatrix r23 = embed_23(r, v, v, v);
  YbeResult out{r12 * r13 * r23 - r23 * r13 * r12, 0, false};
  out.nonzero = out.residual.nonzero_count();
  out.holds = out.nonzero == 0;
  return out;
}

std::vector<IntertwinerVerdict> intertwiner_check(const GradedMatrix& r, const Representation& r1,
                                                  const Representation& r2) {
  const Representation t12 = tensor_rep(r1, r2);
  const Representation t21 = tensor_rep(r2, r1);
  const GradedMatrix p12 = graded_flip(r1.space(), r2.space());
  const GradedMatrix p21 = graded_flip(r2.space(), r1.space());
  auto opposite = [&](const GradedMatrix& x21) { return p21 * x21 * p12; };
  struct Item {
    const char* name;
    GradedMatrix d, dop;
  };
  const std::vector<Item> items{
      {"e1", t12.e1(), opposite(t21.e1())},
      {"e2", t12.e2(), opposite(t21.e2())},
      {"f1", t12.f1(), opposite(t21.f1())},
      {"f2", t12.f2(), opposite(t21.f2())},
      {"K(1,0)", cartan(t12, 1, 0), opposite(cartan(t21, 1, 0))},
      {"K(0,1)", cartan(t12, 0, 1), opposite(cartan(t21, 0, 1))},
  };
  std::vector<IntertwinerVerdict> out;
  for (const auto& it : items)
    out.push_back({it.name, r * it.d == it.dop * r, r * it.dop == it.d * r});
  return out;
}

bool is_unit_triangular(const GradedMatrix& m, const Representation& r1, const Representation& r2) {
  const std::size_t n2 = r2.dim();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& x = m(i, j);
      if (i == j) {
        if (!x.is_one()) return false;
        continue;
      }
      if (x.is_zero()) continue;
      if (!(height(r1.weights()[i / n2]) > height(r1.weights()[j / n2]))) return false;
    }
  return true;
}

bool determinant_is_unit_monomial(const GradedMatrix& m) {
  const Scalar d = determinant(m);
  if (d.is_zero() || !d.denominator().is_monomial() || !d.numerator().is_monomial()) return false;
  const HCoeff& c = d.numerator().lead();
  return c == HCoeff(1) || c == HCoeff(-1);
}

nlohmann::json to_json(const RMatrixBundle& b) {
  return {{"rep1", b.rep1}, {"rep2", b.rep2}, {"kq", to_json(b.kq)}, {"rhat", to_json(b.rhat)}, {"r", to_json(b.r)}};
}

nlohmann::json to_json(const std::vector<IntertwinerVerdict>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back({{"generator", x.generator}, {"forward", x.forward}, {"reverse", x.reverse}});
  return arr;
}

}  // namespace sj
