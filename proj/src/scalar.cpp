#include "superjordan/scalar.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace sj {

namespace {

using PolyQ = Polynomial<Rational>;
using PolyH = Polynomial<HCoeff>;

bool all_constant(const PolyH& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_constant()) return false;
  return true;
}

PolyQ constants_of(const PolyH& p) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.constant_value());
  return PolyQ(std::move(out));
}

PolyH lift(const PolyQ& p) {
  std::vector<HCoeff> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return PolyH(std::move(out));
}

// gcd of an h-free polynomial b with an arbitrary a: clear the h
// denominators of a, then intersect b with every h-slice of a over Q[s].
PolyH gcd_with_constant_side(const PolyH& a, const PolyH& b) {
  PolyQ common_den = PolyQ::one();
  for (const auto& c : a.coeffs()) {
    const auto& d = c.denominator();
    if (d.is_one()) continue;
    common_den = common_den * d.exact_div(gcd(common_den, d));
  }
  std::vector<std::vector<Rational>> slices;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const HCoeff& c = a.coeffs()[i];
    const PolyQ n = common_den.is_one() ? c.numerator()
                                        : c.numerator() * common_den.exact_div(c.denominator());
    for (std::size_t j = 0; j < n.coeffs().size(); ++j) {
      if (slices.size() <= j) slices.resize(j + 1);
      auto& sl = slices[j];
      if (sl.size() <= i) sl.resize(i + 1, Rational(0));
      sl[i] = n.coeffs()[j];
    }
  }
  PolyQ g = constants_of(b).monic();
  for (auto& sl : slices) {
    g = gcd(g, PolyQ(std::move(sl)));
    if (g.is_one()) break;
  }
  return lift(g);
}

std::string poly_to_string(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (!t.empty() && t[0] == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out;
}

std::string power_term(std::string coeff, const std::string& var, std::size_t k) {
  if (k == 0) return coeff;
  std::string v = var + (k > 1 ? "^" + std::to_string(k) : "");
  if (coeff == "1") return v;
  if (coeff == "-1") return "-" + v;
  return coeff + "*" + v;
}

std::string poly_q_to_string(const PolyQ& p, const std::string& var) {
  std::vector<std::string> terms;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    if (is_zero(p.coeffs()[k])) continue;
    terms.push_back(power_term(p.coeffs()[k].get_str(), var, k));
  }
  return poly_to_string(terms);
}

bool needs_parens(const std::string& s) {
  return s.find(' ') != std::string::npos || s.find('/') != std::string::npos;
}

std::string hcoeff_as_factor(const HCoeff& c) {
  std::string s = to_string(c);
  if (c.is_constant() || !needs_parens(s)) return s;
  return "(" + s + ")";
}

std::string poly_h_to_string(const PolyH& p) {
  std::vector<std::string> terms;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    if (p.coeffs()[k].is_zero()) continue;
    terms.push_back(power_term(hcoeff_as_factor(p.coeffs()[k]), "s", k));
  }
  return poly_to_string(terms);
}

nlohmann::json poly_q_json(const PolyQ& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

PolyQ poly_q_from_json(const nlohmann::json& j) {
  std::vector<Rational> cs;
  for (const auto& e : j) {
    Rational r(e.get<std::string>());
    r.canonicalize();
    cs.push_back(r);
  }
  return PolyQ(std::move(cs));
}

}  // namespace

PolyH PolynomialGcd<HCoeff>::gcd(const PolyH& a, const PolyH& b) {
  if (all_constant(b)) return gcd_with_constant_side(a, b);
  if (all_constant(a)) return gcd_with_constant_side(b, a);
  return euclid_gcd(a, b);
}

Scalar s_var() { return Scalar::variable(); }
HCoeff h_var() { return HCoeff::variable(); }
Scalar hbar() { return Scalar(HCoeff::variable()); }
Scalar q_param() { return Scalar::monomial(HCoeff(1), 2); }
Scalar s_pow(int k) { return Scalar::monomial(HCoeff(1), k); }
Scalar from_rational(const Rational& r) { return Scalar(HCoeff(r)); }
Scalar from_hcoeff(const HCoeff& c) { return Scalar(c); }

Scalar q_number(int n) {
  // (q^n - q^-n)/(q - q^-1) = s^{2-2n} (s^{4n} - 1)/(s^4 - 1)
  if (n == 0) return Scalar(0);
  const Scalar num = s_pow(2 * n) - s_pow(-2 * n);
  const Scalar den = s_pow(2) - s_pow(-2);
  return num / den;
}

Scalar q_factorial(int n) {
  Scalar r(1);
  for (int k = 2; k <= n; ++k) r *= q_number(k);
  return r;
}

Scalar q_number_asym(int n) {
  if (n == 0) return Scalar(0);
  return (Scalar(1) - s_pow(2 * n)) / (Scalar(1) - s_pow(2));
}

Scalar q_factorial_asym(int n) {
  Scalar r(1);
  for (int k = 2; k <= n; ++k) r *= q_number_asym(k);
  return r;
}

namespace {
int order_at_one(PolyH p) {
  int v = 0;
  while (p.value_at_one().is_zero()) {
    p = p.divide_by_x_minus_one();
    ++v;
  }
  return v;
}
}  // namespace

int order_at_s1(const Scalar& a) {
  if (a.is_zero()) throw std::domain_error("valuation of zero is undefined");
  return order_at_one(a.numerator()) - order_at_one(a.denominator());
}

HCoeff limit_s1(const Scalar& a) {
  if (a.is_zero()) return HCoeff(0);
  PolyH num = a.numerator();
  PolyH den = a.denominator();
  int v = 0;
  while (num.value_at_one().is_zero()) {
    num = num.divide_by_x_minus_one();
    ++v;
  }
  while (den.value_at_one().is_zero()) {
    den = den.divide_by_x_minus_one();
    --v;
  }
  if (v < 0) throw PoleAtQ1("pole of order " + std::to_string(-v) + " at q = 1: " + to_string(a));
  if (v > 0) return HCoeff(0);
  return num.value_at_one() / den.value_at_one();
}

Scalar substitute_hbar(const Scalar& a, const Rational& h0) {
  auto subst = [&](const PolyH& p) {
    std::vector<HCoeff> cs;
    for (const auto& c : p.coeffs()) {
      const Rational d = c.denominator().evaluate(h0);
      if (is_zero(d)) throw DivisionByZero("h substitution hits a pole");
      cs.emplace_back(Rational(c.numerator().evaluate(h0) / d));
    }
    return PolyH(std::move(cs));
  };
  PolyH den = subst(a.denominator());
  if (den.is_zero()) throw DivisionByZero("h substitution annihilates the denominator");
  return Scalar(subst(a.numerator()), den);
}

bool is_s_free(const Scalar& a) { return a.is_constant(); }

int hbar_degree(const Scalar& a) {
  if (a.is_zero()) return -1;
  if (!a.is_polynomial()) throw std::domain_error("hbar_degree: value has an s denominator");
  int deg = -1;
  for (const auto& c : a.numerator().coeffs()) {
    if (c.is_zero()) continue;
    if (!c.is_polynomial()) throw std::domain_error("hbar_degree: value has an h denominator");
    deg = std::max(deg, c.numerator().degree());
  }
  return deg;
}

double eval_numeric(const HCoeff& a, double h0) {
  auto ev = [&](const PolyQ& p) {
    double acc = 0.0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * h0 + it->get_d();
    return acc;
  };
  const double d = ev(a.denominator());
  if (d == 0.0) throw DivisionByZero("numeric evaluation at a pole in h");
  return ev(a.numerator()) / d;
}

double eval_numeric(const Scalar& a, double q0, double h0) {
  if (!(q0 > 0.0)) throw std::domain_error("numeric evaluation needs q0 > 0");
  const double s0 = std::sqrt(q0);
  auto ev = [&](const PolyH& p, double& scale) {
    double acc = 0.0;
    scale = 0.0;
    double pw = 1.0;
    for (const auto& c : p.coeffs()) {
      const double v = eval_numeric(c, h0);
      scale += std::abs(v) * pw;
      pw *= s0;
    }
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * s0 + eval_numeric(*it, h0);
    return acc;
  };
  double den_scale = 0.0, num_scale = 0.0;
  const double d = ev(a.denominator(), den_scale);
  if (std::abs(d) <= 1e-14 * den_scale) throw DivisionByZero("numeric evaluation at a pole in s");
  return ev(a.numerator(), num_scale) / d;
}

std::string to_string(const HCoeff& c) {
  const std::string n = poly_q_to_string(c.numerator(), "h");
  if (c.denominator().is_one()) return n;
  const std::string d = poly_q_to_string(c.denominator(), "h");
  auto wrap = [](const std::string& x) { return needs_parens(x) ? "(" + x + ")" : x; };
  return wrap(n) + "/" + wrap(d);
}

std::string to_string(const Scalar& a) {
  const std::string n = poly_h_to_string(a.numerator());
  if (a.denominator().is_one()) return n;
  const std::string d = poly_h_to_string(a.denominator());
  auto wrap = [](const std::string& x) {
    return x.find(' ') != std::string::npos || x.find('*') != std::string::npos || x.find('/') != std::string::npos
               ? "(" + x + ")"
               : x;
  };
  return wrap(n) + "/" + wrap(d);
}

nlohmann::json to_json(const HCoeff& c) {
  return {{"num", poly_q_json(c.numerator())}, {"den", poly_q_json(c.denominator())}};
}

nlohmann::json to_json(const Scalar& a) {
  auto side = [](const PolyH& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
  };
  return {{"num", side(a.numerator())}, {"den", side(a.denominator())}};
}

HCoeff hcoeff_from_json(const nlohmann::json& j) {
  return HCoeff(poly_q_from_json(j.at("num")), poly_q_from_json(j.at("den")));
}

Scalar scalar_from_json(const nlohmann::json& j) {
  auto side = [](const nlohmann::json& arr) {
    std::vector<HCoeff> cs;
    for (const auto& e : arr) cs.push_back(hcoeff_from_json(e));
    return PolyH(std::move(cs));
  };
  return Scalar(side(j.at("num")), side(j.at("den")));
}

}  // namespace sj
