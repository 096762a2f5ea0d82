#include "superjordan/reps.hpp"

#include <stdexcept>

namespace sj {

namespace {

bool half_integral(const Rational& r) {
  Rational t = 2 * r;
  t.canonicalize();
  return t.get_den() == 1;
}

int integral_exponent(const Rational& r) {
  Rational t = r;
  t.canonicalize();
  if (t.get_den() != 1) throw std::domain_error("Cartan exponent is not an integral power of q^{1/2}");
  return static_cast<int>(t.get_num().get_si());
}

Rational pairing(const Weight& w, const Rational& c1, const Rational& c2) { return c1 * w.h1 + c2 * w.h2; }

}  // namespace

Representation::Representation(std::string name, GradedSpace space, GradedMatrix e1, GradedMatrix e2,
                               GradedMatrix f1, GradedMatrix f2, std::vector<Weight> weights)
    : name_(std::move(name)),
      space_(std::move(space)),
      e1_(std::move(e1)),
      e2_(std::move(e2)),
      f1_(std::move(f1)),
      f2_(std::move(f2)),
      weights_(std::move(weights)) {
  for (const auto* m : {&e1_, &e2_, &f1_, &f2_})
    if (m->codomain() != space_ || m->domain() != space_) throw std::invalid_argument("generator image has the wrong shape");
  if (weights_.size() != space_.dim()) throw std::invalid_argument("one weight per basis vector is required");
  for (const auto& w : weights_)
    if (!half_integral(w.h1) || !half_integral(w.h2)) throw std::invalid_argument("weights must lie in (1/2)Z");
}

GradedMatrix Representation::e3() const { return e1_ * e2_ - q_param().inverse() * (e2_ * e1_); }
GradedMatrix Representation::f3() const { return f2_ * f1_ - q_param() * (f1_ * f2_); }

GradedMatrix Representation::h1() const {
  std::vector<Scalar> d;
  for (const auto& w : weights_) d.push_back(from_rational(w.h1));
  return GradedMatrix::diagonal(space_, d);
}

GradedMatrix Representation::h2() const {
  std::vector<Scalar> d;
  for (const auto& w : weights_) d.push_back(from_rational(w.h2));
  return GradedMatrix::diagonal(space_, d);
}

GradedMatrix Representation::image(const Letter& l) const {
  switch (l.g) {
    case Generator::E1: return e1_;
    case Generator::E2: return e2_;
    case Generator::E3: return e3();
    case Generator::F1: return f1_;
    case Generator::F2: return f2_;
    case Generator::F3: return f3();
    case Generator::K: return cartan(*this, l.k.c1, l.k.c2);
  }
  throw std::logic_error("unknown generator");
}

Representation Representation::with_image(Generator g, GradedMatrix m) const {
  Representation r = *this;
  switch (g) {
    case Generator::E1: r.e1_ = std::move(m); break;
    case Generator::E2: r.e2_ = std::move(m); break;
    case Generator::F1: r.f1_ = std::move(m); break;
    case Generator::F2: r.f2_ = std::move(m); break;
    default: throw std::invalid_argument("only simple generator images can be replaced");
  }
  return r;
}

Representation fundamental() {
  const GradedSpace v({Parity::Even, Parity::Even, Parity::Odd});
  return Representation("fund", v, GradedMatrix::unit(v, 0, 1), GradedMatrix::unit(v, 1, 2),
                        GradedMatrix::unit(v, 1, 0), GradedMatrix::unit(v, 2, 1), {{1, 0}, {-1, 1}, {0, 1}});
}

Representation tensor_rep(const Representation& a, const Representation& b) {
  // Delta(x) = x (x) K_i^{1/2} + K_i^{-1/2} (x) x
  auto delta = [&](const GradedMatrix& xa, const GradedMatrix& xb, int c1, int c2) {
    return graded_tensor(xa, cartan(b, c1, c2)) + graded_tensor(cartan(a, -c1, -c2), xb);
  };
  std::vector<Weight> w;
  for (const auto& wa : a.weights())
    for (const auto& wb : b.weights()) w.push_back({wa.h1 + wb.h1, wa.h2 + wb.h2});
  std::string name = a.name() == "fund" && b.name() == "fund"    ? "fund2"
                     : a.name() == "fund2" && b.name() == "fund" ? "fund3"
                                                                 : a.name() + "(x)" + b.name();
  return Representation(std::move(name), a.space().tensor(b.space()), delta(a.e1(), b.e1(), 1, 0),
                        delta(a.e2(), b.e2(), 0, 1), delta(a.f1(), b.f1(), 1, 0), delta(a.f2(), b.f2(), 0, 1),
                        std::move(w));
}

Representation fund2() { return tensor_rep(fundamental(), fundamental()); }
Representation fund3() { return tensor_rep(fund2(), fundamental()); }

Representation rep_by_name(const std::string& name) {
  if (name == "fund") return fundamental();
  if (name == "fund2") return fund2();
  if (name == "fund3") return fund3();
  throw std::invalid_argument("unknown representation '" + name + "' (expected fund, fund2 or fund3)");
}

GradedMatrix cartan(const Representation& rep, const Rational& c1, const Rational& c2) {
  std::vector<Scalar> d;
  for (const auto& w : rep.weights()) d.push_back(s_pow(integral_exponent(pairing(w, c1, c2))));
  return GradedMatrix::diagonal(rep.space(), d);
}

GradedMatrix cartan_adjoint(const Representation& rep, const GradedMatrix& m, const Rational& c1, const Rational& c2) {
  if (c1 == 0 && c2 == 0) return m;
  GradedMatrix out = m;
  const auto& w = rep.weights();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      out(i, j) = m(i, j) * s_pow(integral_exponent(pairing(w[i], c1, c2) - pairing(w[j], c1, c2)));
    }
  return out;
}

GradedMatrix evaluate(const AlgebraElement& x, const Representation& rep) {
  GradedMatrix out(rep.space(), rep.space());
  const GradedMatrix e3 = rep.e3(), f3 = rep.f3();
  for (const auto& [m, c] : x.terms()) {
    GradedMatrix acc = rep.f1().pow(m.f1);
    if (m.f3) acc = acc * f3;
    if (m.f2) acc = acc * rep.f2();
    if (!m.k.is_identity()) acc = acc * cartan(rep, m.k.c1, m.k.c2);
    if (m.e2) acc = acc * rep.e2();
    if (m.e3) acc = acc * e3;
    if (m.e1) acc = acc * rep.e1().pow(m.e1);
    out += c * acc;
  }
  return out;
}

GradedMatrix evaluate(const HSeries& x, const Representation& rep) {
  if (!evaluate(x.coeff(x.order()), rep).is_zero())
    throw NonTerminatingSeries("series does not terminate within order " + std::to_string(x.order()) + " in " +
                               rep.name());
  GradedMatrix out(rep.space(), rep.space());
  Scalar hp(1);
  for (int n = 0; n <= x.order(); ++n) {
    if (!x.coeff(n).is_zero()) out += hp * evaluate(x.coeff(n), rep);
    hp *= hbar();
  }
  return out;
}

GradedMatrix matrix_supercommutator(const GradedMatrix& a, int pa, const GradedMatrix& b, int pb) {
  return pa && pb ? a * b + b * a : a * b - b * a;
}

bool ValidationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

const RelationCheck* ValidationReport::find(const std::string& relation) const {
  for (const auto& c : checks)
    if (c.relation == relation) return &c;
  return nullptr;
}

ValidationReport validate(const Representation& rep) {
  ValidationReport r{rep.name(), {}};
  auto check = [&](const std::string& name, const GradedMatrix& lhs, const GradedMatrix& rhs) {
    GradedMatrix res = rhs - lhs;
    const bool ok = res.is_zero();
    r.checks.push_back({name, ok, std::move(res)});
  };
  const GradedMatrix Z(rep.space(), rep.space());
  const GradedMatrix h1 = rep.h1(), h2 = rep.h2();
  const Scalar qq = q_param() - q_param().inverse();
  auto bracket_k = [&](int c1, int c2) { return qq.inverse() * (cartan(rep, c1, c2) - cartan(rep, -c1, -c2)); };

  struct Gen {
    const char* name;
    GradedMatrix m;
    int r1, r2;
  };
  const std::vector<Gen> gens{{"e1", rep.e1(), 2, -1}, {"e2", rep.e2(), -1, 0}, {"f1", rep.f1(), -2, 1}, {"f2", rep.f2(), 1, 0}};
  for (const auto& g : gens) {
    check(std::string("[h1,") + g.name + "]", h1 * g.m - g.m * h1, from_rational(g.r1) * g.m);
    check(std::string("[h2,") + g.name + "]", h2 * g.m - g.m * h2, from_rational(g.r2) * g.m);
  }
  check("[h1,h2]", h1 * h2 - h2 * h1, Z);
  check("[e1,f1]", matrix_supercommutator(rep.e1(), 0, rep.f1(), 0), bracket_k(2, 0));
  check("[e2,f2]", matrix_supercommutator(rep.e2(), 1, rep.f2(), 1), bracket_k(0, 2));
  check("[e1,f2]", matrix_supercommutator(rep.e1(), 0, rep.f2(), 1), Z);
  check("[e2,f1]", matrix_supercommutator(rep.e2(), 1, rep.f1(), 0), Z);
  check("e2^2", rep.e2() * rep.e2(), Z);
  check("f2^2", rep.f2() * rep.f2(), Z);
  const Scalar q2 = q_param() + q_param().inverse();
  auto serre = [&](const GradedMatrix& x1, const GradedMatrix& x2) {
    return x1 * x1 * x2 - q2 * (x1 * x2 * x1) + x2 * x1 * x1;
  };
  check("serre-e", serre(rep.e1(), rep.e2()), Z);
  check("serre-f", serre(rep.f1(), rep.f2()), Z);
  return r;
}

nlohmann::json to_json(const ValidationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"relation", c.relation}, {"holds", c.holds}};
    if (!c.holds) j["residual"] = to_json(c.residual);
    checks.push_back(std::move(j));
  }
  return {{"rep", r.rep}, {"all_pass", r.all_pass()}, {"checks", std::move(checks)}};
}

nlohmann::json to_json(const Representation& rep) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : rep.weights()) w.push_back({x.h1.get_str(), x.h2.get_str()});
  return {{"name", rep.name()},
          {"weights", std::move(w)},
          {"e1", to_json(rep.e1())},
          {"e2", to_json(rep.e2())},
          {"f1", to_json(rep.f1())},
          {"f2", to_json(rep.f2())}};
}

}  // namespace sj
