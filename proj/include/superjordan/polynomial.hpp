#pragma once

// Dense univariate polynomials over an exact field F.
//
// F must be constructible from int, comparable with ==, closed under
// + - * / and provide a free function is_zero(const F&).

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superjordan/rational.hpp"

namespace sj {

namespace detail {
template <class T>
bool coeff_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(F c) {
    if (!detail::coeff_is_zero(c)) coeffs_.push_back(std::move(c));
  }
  explicit Polynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(F c, std::size_t degree) {
    Polynomial p;
    if (detail::coeff_is_zero(c)) return p;
    p.coeffs_.assign(degree + 1, F(0));
    p.coeffs_[degree] = std::move(c);
    return p;
  }
  static Polynomial one() { return Polynomial(F(1)); }
  static Polynomial variable() { return monomial(F(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == F(1); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<F>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i, zero past the degree.
  F coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : F(0); }
  const F& lead() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  /// Index of the lowest nonzero coefficient (x-adic valuation); 0 for zero.
  std::size_t low_order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!sj_is_zero(coeffs_[i])) return i;
    return 0;
  }
  /// True when the polynomial is c*x^k.
  bool is_monomial() const { return !coeffs_.empty() && low_order() + 1 == coeffs_.size(); }

  Polynomial shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Polynomial p;
    p.coeffs_.assign(k, F(0));
    p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return p;
  }
  /// Exact division by x^k; requires low_order() >= k.
  Polynomial unshifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    if (low_order() < k) throw std::domain_error("inexact division by x^k");
    Polynomial p;
    p.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
    return p;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    Polynomial p;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sj_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (sj_is_zero(b.coeffs_[j])) continue;
        p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    p.trim();
    return p;
  }
  Polynomial scaled(const F& c) const {
    if (detail::coeff_is_zero(c)) return {};
    if (c == F(1)) return *this;
    Polynomial p = *this;
    for (auto& x : p.coeffs_) x *= c;
    p.trim();
    return p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial r = *this;
    if (r.degree() < d.degree()) return {Polynomial{}, r};
    const bool monic = d.lead() == F(1);
    const F inv_lead = monic ? F(1) : F(1) / d.lead();
    std::vector<F> q(static_cast<std::size_t>(r.degree() - d.degree() + 1), F(0));
    const std::size_t dd = static_cast<std::size_t>(d.degree());
    for (int k = r.degree() - d.degree(); k >= 0; --k) {
      const std::size_t top = static_cast<std::size_t>(k) + dd;
      if (top >= r.coeffs_.size() || sj_is_zero(r.coeffs_[top])) continue;
      F c = monic ? r.coeffs_[top] : r.coeffs_[top] * inv_lead;
      for (std::size_t i = 0; i <= dd; ++i) {
        if (sj_is_zero(d.coeffs_[i])) continue;
        r.coeffs_[static_cast<std::size_t>(k) + i] -= c * d.coeffs_[i];
      }
      q[static_cast<std::size_t>(k)] = std::move(c);
    }
    r.trim();
    return {Polynomial(std::move(q)), r};
  }
  /// Division that must leave no remainder.
  Polynomial exact_div(const Polynomial& d) const {
    if (d.is_one()) return *this;
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
  }

  Polynomial monic() const {
    if (is_zero() || lead() == F(1)) return *this;
    return scaled(F(1) / lead());
  }

  template <class Ring>
  Ring evaluate(const Ring& x) const {
    Ring acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Ring(*it);
    return acc;
  }
  F evaluate(const F& x) const { return evaluate<F>(x); }

  /// Sum of coefficients, i.e. the value at x = 1.
  F value_at_one() const {
    F acc(0);
    for (const auto& c : coeffs_) acc += c;
    return acc;
  }
  /// Exact quotient by (x - 1); requires value_at_one() == 0.
  Polynomial divide_by_x_minus_one() const {
    if (is_zero()) return {};
    std::vector<F> q(coeffs_.size() - 1, F(0));
    F carry(0);
    for (std::size_t i = coeffs_.size(); i-- > 1;) {
      carry += coeffs_[i];
      q[i - 1] = carry;
    }
    carry += coeffs_[0];
    if (!sj_is_zero(carry)) throw std::domain_error("polynomial not divisible by (x-1)");
    return Polynomial(std::move(q));
  }

 private:
  static bool sj_is_zero(const F& x) { return detail::coeff_is_zero(x); }
  void trim() {
    while (!coeffs_.empty() && sj_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;  // low degree first
};

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <class F>
Polynomial<F> euclid_gcd(Polynomial<F> a, Polynomial<F> b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.is_constant()) return Polynomial<F>::one();
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Customization point for polynomial gcd over F; the default is plain
/// Euclid. Specialized where the coefficient field allows a cheaper route.
template <class F>
struct PolynomialGcd {
  static Polynomial<F> gcd(const Polynomial<F>& a, const Polynomial<F>& b) { return euclid_gcd(a, b); }
};

/// Monic gcd with the trivial cases short-circuited.
template <class F>
Polynomial<F> gcd(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial<F>::one();
  if (a.is_monomial() || b.is_monomial()) {
    const std::size_t k = std::min(a.low_order(), b.low_order());
    return Polynomial<F>::monomial(F(1), k);
  }
  return PolynomialGcd<F>::gcd(a, b);
}

}  // namespace sj
