#pragma once

// The Hopf superalgebra U_q(sl(2|1)) in PBW normal form.
//
// Generators e1, f1 (even), e2, f2 (odd), and the group-like Cartan
// monomials K(c1, c2) = q^{(c1 h1 + c2 h2)/2}. The composite root vectors
//   e3 = e1 e2 - q^{-1} e2 e1,   f3 = f2 f1 - q f1 f2
// are odd. A PBW monomial is written
//   f1^a1 f3^a3 f2^a2 K(c1,c2) e2^b2 e3^b3 e1^b1,   a3, a2, b2, b3 in {0, 1}.
//
// The straightening table used by multiply():
//   e1 e2 = q^-1 e2 e1 + e3       f2 f1 = q f1 f2 + f3
//   e1 e3 = q e3 e1               f3 f1 = q^-1 f1 f3
//   e3 e2 = -q^-1 e2 e3           f2 f3 = -q f3 f2
//   e2^2 = e3^2 = f2^2 = f3^2 = 0
//   e1 f1 = f1 e1 + [K(2,0)]      e2 f2 = -f2 e2 + [K(0,2)]
//   e1 f2 = f2 e1                 e2 f1 = f1 e2
//   e1 f3 = f3 e1 - q f2 K(2,0)   e2 f3 = -f3 e2 + f1 K(0,-2)
//   e3 f1 = f1 e3 - q^-1 K(-2,0) e2
//   e3 f2 = -f2 e3 + K(0,2) e1
//   e3 f3 = -f3 e3 + [K(2,2)]
// where [K(c)] = (K(c) - K(-c))/(q - q^-1), and Cartan monomials move past
// root vectors by K(c) x = q^{(c1 r1 + c2 r2)/2} x K(c) with root weights
// r(e1) = (2,-1), r(e2) = (-1,0), r(e3) = (1,-1), r(f_i) = -r(e_i).

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "superjordan/scalar.hpp"

namespace sj {

struct CartanMonomial {
  int c1 = 0;
  int c2 = 0;

  bool is_identity() const { return c1 == 0 && c2 == 0; }
  CartanMonomial inverse() const { return {-c1, -c2}; }
  friend CartanMonomial operator*(CartanMonomial a, CartanMonomial b) { return {a.c1 + b.c1, a.c2 + b.c2}; }
  friend auto operator<=>(const CartanMonomial&, const CartanMonomial&) = default;
};

/// Root weight (r1, r2): [h_i, x] = r_i x.
struct RootWeight {
  int r1 = 0;
  int r2 = 0;
  friend RootWeight operator+(RootWeight a, RootWeight b) { return {a.r1 + b.r1, a.r2 + b.r2}; }
  friend bool operator==(const RootWeight&, const RootWeight&) = default;
};

struct PbwMonomial {
  int f1 = 0;
  int f3 = 0;
  int f2 = 0;
  CartanMonomial k;
  int e2 = 0;
  int e3 = 0;
  int e1 = 0;

  static PbwMonomial one() { return {}; }
  static PbwMonomial cartan(int c1, int c2) {
    PbwMonomial m;
    m.k = {c1, c2};
    return m;
  }
  bool is_cartan() const { return f1 == 0 && f3 == 0 && f2 == 0 && e2 == 0 && e3 == 0 && e1 == 0; }
  int parity() const { return (f3 + f2 + e2 + e3) & 1; }
  RootWeight weight() const;

  friend auto operator<=>(const PbwMonomial&, const PbwMonomial&) = default;
};

enum class Generator : std::uint8_t { F1, F3, F2, K, E2, E3, E1 };

/// One letter of a word: a generator, or a Cartan monomial when g == K.
struct Letter {
  Generator g = Generator::K;
  CartanMonomial k;

  static Letter of(Generator g) { return {g, {}}; }
  static Letter cartan(int c1, int c2) { return {Generator::K, {c1, c2}}; }
  int parity() const { return (g == Generator::F3 || g == Generator::F2 || g == Generator::E2 || g == Generator::E3) ? 1 : 0; }
  RootWeight weight() const;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class NotHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AlgebraElement {
 public:
  using Terms = std::map<PbwMonomial, Scalar>;

  AlgebraElement() = default;
  static AlgebraElement scalar(const Scalar& c);
  static AlgebraElement monomial(const PbwMonomial& m, const Scalar& c = Scalar(1));
  static AlgebraElement letter(const Letter& l);
  static AlgebraElement one() { return scalar(Scalar(1)); }

  static AlgebraElement e1();
  static AlgebraElement e2();
  static AlgebraElement e3();
  static AlgebraElement f1();
  static AlgebraElement f2();
  static AlgebraElement f3();
  static AlgebraElement cartan(int c1, int c2);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a monomial (zero when absent).
  Scalar coefficient(const PbwMonomial& m) const;
  /// 0 or 1 for parity-homogeneous elements; throws NotHomogeneous otherwise.
  int parity() const;
  bool is_homogeneous() const;

  void add_term(const PbwMonomial& m, const Scalar& c);

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
  friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  /// Non-negative integer power.
  AlgebraElement pow(unsigned n) const;

 private:
  Terms terms_;
};

/// PBW normal form of x*y.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
/// Normal form of a word of letters, multiplied left to right.
AlgebraElement word(const std::vector<Letter>& letters);
/// [a, b] = ab - (-1)^{|a||b|} ba for parity-homogeneous a, b.
AlgebraElement supercommutator(const AlgebraElement& a, const AlgebraElement& b);

/// Letters of a normal-form monomial, in written order.
std::vector<Letter> letters_of(const PbwMonomial& m);

/// K(c) x K(c)^{-1} for rational c = (c1, c2); the scalar factor on a
/// monomial of root weight r is q^{(c1 r1 + c2 r2)/2}, which must be an
/// integral power of s. Throws std::domain_error otherwise.
AlgebraElement cartan_conjugate(const AlgebraElement& x, const Rational& c1, const Rational& c2);

/// Element of U (x) U with graded multiplication (a(x)b)(c(x)d) = (-1)^{|b||c|} ac (x) bd.
class TensorElement {
 public:
  using Key = std::pair<PbwMonomial, PbwMonomial>;
  using Terms = std::map<Key, Scalar>;

  TensorElement() = default;
  static TensorElement pure(const AlgebraElement& a, const AlgebraElement& b);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const PbwMonomial& a, const PbwMonomial& b, const Scalar& c);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Scalar& c);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const Scalar& c) { return a *= c; }
  friend TensorElement operator*(const Scalar& c, TensorElement a) { return a *= c; }
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  Terms terms_;
};

/// Algebra morphism extending Delta(x_i) = x_i (x) K_i^{1/2} + K_i^{-1/2} (x) x_i
/// for x in {e, f}, Delta(K(c)) = K(c) (x) K(c).
TensorElement coproduct(const AlgebraElement& x);
/// Graded anti-morphism with S(x_i) = -K_i^{1/2} x_i K_i^{-1/2}, S(K(c)) = K(-c).
AlgebraElement antipode(const AlgebraElement& x);
/// epsilon(e_i) = epsilon(f_i) = 0, epsilon(K(c)) = 1.
Scalar counit(const AlgebraElement& x);
/// m (S (x) id) t and m (id (x) S) t.
AlgebraElement multiply_antipode_left(const TensorElement& t);
AlgebraElement multiply_antipode_right(const TensorElement& t);

std::string to_string(const PbwMonomial& m);
std::string to_string(const AlgebraElement& x);
nlohmann::json to_json(const PbwMonomial& m);
nlohmann::json to_json(const AlgebraElement& x);

}  // namespace sj
