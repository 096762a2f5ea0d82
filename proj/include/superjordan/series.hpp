#pragma once

// Truncated h-adic series with AlgebraElement coefficients, the two
// q-exponentials, and the t^(alpha) operators
//   G = E_q(h e1/(q-1)),   t^(alpha) = G^{-1} E_q(q^alpha h e1/(q-1)).

#include <optional>
#include <string>
#include <vector>

#include "superjordan/algebra.hpp"

namespace sj {

class HSeries {
 public:
  /// Zero series truncated at h^order.
  explicit HSeries(int order);
  HSeries(int order, std::vector<AlgebraElement> coeffs);
  static HSeries constant(int order, const AlgebraElement& c);
  static HSeries one(int order) { return constant(order, AlgebraElement::one()); }
  /// c * h^k
  static HSeries monomial(int order, int k, const AlgebraElement& c);

  int order() const { return order_; }
  /// Coefficient of h^n; zero beyond the stored length.
  const AlgebraElement& coeff(int n) const;
  bool has_zero_constant_term() const { return coeff(0).is_zero(); }

  HSeries& operator+=(const HSeries& o);
  HSeries& operator-=(const HSeries& o);
  HSeries& operator*=(const Scalar& c);
  friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
  friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
  friend HSeries operator*(HSeries a, const Scalar& c) { return a *= c; }
  friend HSeries operator*(const Scalar& c, HSeries a) { return a *= c; }
  friend HSeries operator*(const HSeries& a, const HSeries& b);
  HSeries operator-() const;

  /// Multiplies by h (shifts up one order, dropping the top coefficient).
  HSeries times_hbar() const;
  /// Applies f to each coefficient.
  template <class Fn>
  HSeries map(Fn f) const {
    std::vector<AlgebraElement> cs;
    for (int n = 0; n <= order_; ++n) cs.push_back(f(coeff(n)));
    return HSeries(order_, std::move(cs));
  }

  friend bool operator==(const HSeries& a, const HSeries& b);

 private:
  int order_;
  std::vector<AlgebraElement> coeffs_;
};

/// First h-order at which a and b differ (through min order), or nullopt.
std::optional<int> first_difference(const HSeries& a, const HSeries& b);

/// sum x^n/(n)_q!, (n)_q = (1-q^n)/(1-q). x must have zero constant term.
HSeries exp_q(const HSeries& x);
/// sum x^n/[n]!, [n] = (q^n-q^-n)/(q-q^-1). x must have zero constant term.
HSeries big_e_q(const HSeries& x);
/// Two-sided inverse; the constant term must be c*K(c1,c2) with c != 0.
HSeries series_inverse(const HSeries& x);

/// G = E_q(h e1/(q-1)) and its inverse.
HSeries twist_series(int order);
HSeries twist_inverse_series(int order);
/// t^(alpha) for alpha in (1/2)Z; throws std::domain_error otherwise.
HSeries t_alpha_series(const Rational& alpha, int order);

/// A series followed by a formal Cartan factor q^{(c1 h1 + c2 h2)/2} with
/// rational c. Products move the factor right:
///   (x, c)(y, d) = (x Ad_c(y), c + d),  Ad_c(y) = K(c) y K(c)^{-1}.
struct DressedSeries {
  HSeries body;
  Rational c1 = 0;
  Rational c2 = 0;

  static DressedSeries plain(HSeries s) { return {std::move(s), 0, 0}; }
  static DressedSeries cartan(int order, const Rational& c1, const Rational& c2) {
    return {HSeries::one(order), c1, c2};
  }
};

DressedSeries operator*(const DressedSeries& a, const DressedSeries& b);

// Twist identities, with a = h/(q-1) and t = t^(.):
//   ConjCartanH1   G^-1 q^{alpha h1/2} G = t(alpha) q^{alpha h1/2}
//   GroupLaw       t(a+b) q^{(a+b)h1/2} = t(a) q^{a h1/2} t(b) q^{b h1/2}
//   ConjCartanH2   G^-1 q^{beta h2} G = t(-beta) q^{beta h2}
//   ConjF1         G^-1 f1 G = f1 - a/(q-q^-1) (t(1) q^{h1} - t(-1) q^{-h1})
//   ConjF2         G^-1 f2 G = f2
//   ConjF3         G^-1 f3 G = f3 + q a t(1) f2 q^{h1}
//   Square         t(2) q^{h1} - t(-2) q^{-h1}
//                    = q^{h1} - q^{-h1} + h(q+1)(t(1) e1 q^{h1} + t(-1) q^{-h1} e1)
//   SquareLiteral  as Square with the last term q^{-h1} e1 t(-1); not gating.
enum class IdentityId { ConjCartanH1, GroupLaw, ConjCartanH2, ConjF1, ConjF2, ConjF3, Square, SquareLiteral };

struct IdentityParams {
  Rational alpha = 0;
  Rational beta = 0;
};

struct IdentityVerdict {
  IdentityId id;
  IdentityParams params;
  std::string channel;
  bool holds = false;
  /// Whether this identity counts toward the overall verdict.
  bool gating = true;
  /// First failing h-order (symbolic channel only).
  std::optional<int> first_failing_order;
  std::string note;
};

std::string identity_name(IdentityId id);
/// Which of alpha / beta the identity uses (0 none, 1 alpha, 2 both, 3 beta).
int identity_arity(IdentityId id);
/// Every identity except SquareLiteral.
const std::vector<IdentityId>& gating_identities();
/// Parameter instances for an identity drawn from {+-1, +-1/2, 2}.
std::vector<IdentityParams> identity_param_grid(IdentityId id);

/// Both sides of an identity as dressed h-series through the given order.
std::pair<DressedSeries, DressedSeries> identity_sides(IdentityId id, const IdentityParams& p, int order);
/// Symbolic check in PBW normal form through h^order.
IdentityVerdict verify_identity(IdentityId id, const IdentityParams& p, int order);
/// Every gating identity over its parameter grid, plus SquareLiteral.
std::vector<IdentityVerdict> verify_identities_symbolic(int order);

nlohmann::json to_json(const IdentityVerdict& v);

}  // namespace sj
