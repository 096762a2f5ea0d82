#pragma once

// The coefficient field of everything: F = Q(h)(s), with s = q^{1/2} and h
// the deformation parameter. Limits are only ever taken in s, so the tower
// is Q -> Q(h) -> Q(h)(s) with h innermost.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "superjordan/rational.hpp"
#include "superjordan/rational_function.hpp"

namespace sj {

/// Element of Q(h).
using HCoeff = RationalFunction<Rational>;

template <>
struct PolynomialGcd<HCoeff> {
  static Polynomial<HCoeff> gcd(const Polynomial<HCoeff>& a, const Polynomial<HCoeff>& b);
};

/// Element of Q(h)(s).
using Scalar = RationalFunction<HCoeff>;

/// Raised by limit_s1 when a value has a pole at s = 1 (q = 1).
class PoleAtQ1 : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Generators and constants.
Scalar s_var();
Scalar hbar();
/// q = s^2.
Scalar q_param();
/// s^k = q^{k/2}.
Scalar s_pow(int k);
Scalar from_rational(const Rational& r);
Scalar from_hcoeff(const HCoeff& c);
HCoeff h_var();

/// Symmetric q-number [n] = (q^n - q^-n)/(q - q^-1).
Scalar q_number(int n);
/// [n]! = [n][n-1]...[1], [0]! = 1.
Scalar q_factorial(int n);
/// Asymmetric q-number (n)_q = (1 - q^n)/(1 - q).
Scalar q_number_asym(int n);
/// (n)_q! = (1)_q (2)_q ... (n)_q, (0)_q! = 1.
Scalar q_factorial_asym(int n);

/// v such that a = (s-1)^v u with u finite and nonzero at s = 1.
int order_at_s1(const Scalar& a);
/// Exact value at s = 1; throws PoleAtQ1 for negative valuation.
HCoeff limit_s1(const Scalar& a);
/// Substitute a rational value for h.
Scalar substitute_hbar(const Scalar& a, const Rational& h0);
/// True when a does not depend on s.
bool is_s_free(const Scalar& a);
/// Maximal h-degree of a value polynomial in h (no h denominators); -1 for 0.
int hbar_degree(const Scalar& a);

/// Floating-point value at q = q0 (s = sqrt(q0) > 0), h = h0.
double eval_numeric(const Scalar& a, double q0, double h0);
double eval_numeric(const HCoeff& a, double h0);

std::string to_string(const HCoeff& c);
std::string to_string(const Scalar& a);

nlohmann::json to_json(const HCoeff& c);
nlohmann::json to_json(const Scalar& a);
HCoeff hcoeff_from_json(const nlohmann::json& j);
Scalar scalar_from_json(const nlohmann::json& j);

}  // namespace sj
