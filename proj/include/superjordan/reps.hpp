#pragma once

// Finite-dimensional graded representations of U_q(sl(2|1)).
//
// The fundamental representation on C^{2|1} (parities 0, 0, 1):
//   e1 = E12, e2 = E23, f1 = E21, f2 = E32,  h1 = diag(1,-1,0), h2 = diag(0,1,1).
// Tensor products use (pi1 (x) pi2) o Delta with the Koszul-signed tensor.
// K(c1, c2) acts on a basis vector of weight (w1, w2) by s^{c1 w1 + c2 w2}.

#include <string>
#include <vector>

#include "superjordan/algebra.hpp"
#include "superjordan/graded.hpp"
#include "superjordan/series.hpp"

namespace sj {

struct Weight {
  Rational h1 = 0;
  Rational h2 = 0;
  friend bool operator==(const Weight&, const Weight&) = default;
};

class NonTerminatingSeries : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Representation {
 public:
  /// Throws std::invalid_argument on shape mismatch or weights outside (1/2)Z.
  Representation(std::string name, GradedSpace space, GradedMatrix e1, GradedMatrix e2, GradedMatrix f1,
                 GradedMatrix f2, std::vector<Weight> weights);

  const std::string& name() const { return name_; }
  const GradedSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const std::vector<Weight>& weights() const { return weights_; }

  const GradedMatrix& e1() const { return e1_; }
  const GradedMatrix& e2() const { return e2_; }
  const GradedMatrix& f1() const { return f1_; }
  const GradedMatrix& f2() const { return f2_; }
  /// e3 = e1 e2 - q^{-1} e2 e1, f3 = f2 f1 - q f1 f2.
  GradedMatrix e3() const;
  GradedMatrix f3() const;
  /// Image of a single letter.
  GradedMatrix image(const Letter& l) const;
  /// Diagonal weight matrices h1, h2.
  GradedMatrix h1() const;
  GradedMatrix h2() const;

  /// Copy with one simple generator image replaced (for negative tests).
  Representation with_image(Generator g, GradedMatrix m) const;

 private:
  std::string name_;
  GradedSpace space_;
  GradedMatrix e1_, e2_, f1_, f2_;
  std::vector<Weight> weights_;
};

Representation fundamental();
Representation tensor_rep(const Representation& a, const Representation& b);
/// fund (x) fund and (fund (x) fund) (x) fund.
Representation fund2();
Representation fund3();
/// "fund", "fund2" or "fund3"; throws std::invalid_argument otherwise.
Representation rep_by_name(const std::string& name);

/// Diagonal q^{(c1 h1 + c2 h2)/2}; throws std::domain_error if some
/// exponent c1 w1 + c2 w2 is not an integer.
GradedMatrix cartan(const Representation& rep, const Rational& c1, const Rational& c2);
/// K(c) m K(c)^{-1}, computed entrywise from weights.
GradedMatrix cartan_adjoint(const Representation& rep, const GradedMatrix& m, const Rational& c1, const Rational& c2);

GradedMatrix evaluate(const AlgebraElement& x, const Representation& rep);
/// sum_n h^n pi(x_n). The image of the top stored coefficient must vanish,
/// otherwise the truncation is visible and NonTerminatingSeries is thrown.
GradedMatrix evaluate(const HSeries& x, const Representation& rep);

/// Graded commutator of matrices with explicit parities.
GradedMatrix matrix_supercommutator(const GradedMatrix& a, int pa, const GradedMatrix& b, int pb);

struct RelationCheck {
  std::string relation;
  bool holds = false;
  /// rhs - lhs; zero when the relation holds.
  GradedMatrix residual;
};

struct ValidationReport {
  std::string rep;
  std::vector<RelationCheck> checks;
  bool all_pass() const;
  const RelationCheck* find(const std::string& relation) const;
};

ValidationReport validate(const Representation& rep);

nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const Representation& rep);

}  // namespace sj
