#pragma once

// Fractions of univariate polynomials over an exact field F, kept in the
// canonical form num/den with gcd(num, den) = 1 and den monic. Zero is 0/1.
// Equal values therefore have identical representations.

#include <stdexcept>
#include <utility>

#include "superjordan/polynomial.hpp"

namespace sj {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class F>
class RationalFunction {
 public:
  using Poly = Polynomial<F>;
  using Coeff = F;

  RationalFunction() : den_(Poly::one()) {}
  RationalFunction(int c) : num_(F(c)), den_(Poly::one()) {}  // NOLINT(implicit)
  RationalFunction(const F& c) : num_(c), den_(Poly::one()) {}  // NOLINT(implicit)
  explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
  }

  static RationalFunction variable() { return RationalFunction(Poly::variable()); }
  /// c * x^k for any integer k; negative powers land in the denominator.
  static RationalFunction monomial(const F& c, int k) {
    if (k >= 0) return RationalFunction(Poly::monomial(c, static_cast<std::size_t>(k)));
    RationalFunction r;
    r.num_ = Poly(c);
    r.den_ = Poly::monomial(F(1), static_cast<std::size_t>(-k));
    return r;
  }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  /// True when the value does not depend on the variable.
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Constant term as an element of F; requires is_constant().
  F constant_value() const {
    if (!is_constant()) throw std::domain_error("rational function is not constant");
    return num_.coeff(0);
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ + b.num_);
    if (a.den_ == b.den_) {
      RationalFunction r;
      r.num_ = a.num_ + b.num_;
      r.den_ = a.den_;
      r.reduce_against(r.den_);
      return r;
    }
    // Henrici: only the common factor g can cancel against the new numerator.
    const Poly g = gcd(a.den_, b.den_);
    const Poly ad = a.den_.exact_div(g);
    const Poly bd = b.den_.exact_div(g);
    RationalFunction r;
    r.num_ = a.num_ * bd + b.num_ * ad;
    r.den_ = ad * b.den_;
    if (!g.is_one()) r.reduce_against(g);
    if (r.num_.is_zero()) r.den_ = Poly::one();
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ * b.num_);
    // Cross-cancellation keeps the result reduced without a full gcd.
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    RationalFunction r;
    r.num_ = a.num_.exact_div(g1) * b.num_.exact_div(g2);
    r.den_ = a.den_.exact_div(g2) * b.den_.exact_div(g1);
    r.make_monic();
    return r;
  }

  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    r.make_monic();
    return r;
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Integer power; negative exponents invert.
  RationalFunction pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RationalFunction result(1), base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return result;
  }

 private:
  void make_monic() {
    const F lc = den_.lead();
    if (lc == F(1)) return;
    const F inv = F(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  // Divide out gcd(num, g) where g is a known multiple of any common factor.
  void reduce_against(const Poly& g) {
    if (num_.is_zero()) {
      den_ = Poly::one();
      return;
    }
    const Poly c = gcd(num_, g);
    if (c.is_one()) return;
    num_ = num_.exact_div(c);
    den_ = den_.exact_div(c);
  }
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly::one();
      return;
    }
    make_monic();
    reduce_against(den_);
  }

  Poly num_;
  Poly den_;
};

template <class F>
bool is_zero(const RationalFunction<F>& x) {
  return x.is_zero();
}

}  // namespace sj
