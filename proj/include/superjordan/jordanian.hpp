#pragma once

// Jordanian contraction of R_q on fund (x) V:
//   G = E_q(h e1/(q-1)),  t^(alpha) = G^{-1} E_q(q^alpha h e1/(q-1)),
//   R' = M^{-1} R_q M with M = pi_fund(G) (x) pi_V(G),
// and the q -> 1 limit
//   R_h = [[T, -h H1 + h/2 (T - T^-1), 0], [0, T^-1, 0], [0, 0, 1]],
//   T = lim t^(1),  H1 = (T + T^-1) h1 / 2.

#include <optional>
#include <string>
#include <vector>

#include "superjordan/rmatrix.hpp"

namespace sj {

/// PoleAtQ1 raised by an entrywise limit, with the entry position.
class MatrixPoleAtQ1 : public PoleAtQ1 {
 public:
  MatrixPoleAtQ1(const std::string& what, std::size_t row, std::size_t col)
      : PoleAtQ1(what), row(row), col(col) {}
  std::size_t row;
  std::size_t col;
};

/// Entrywise limit at s = 1; entries of the result are h-only.
GradedMatrix limit_matrix(const GradedMatrix& m);
/// Entrywise order at s = 1 (nullopt for zero entries), row-major.
std::vector<std::optional<int>> valuations(const GradedMatrix& m);

/// sum x^n/[n]! for nilpotent x; NonTerminatingSeries otherwise.
GradedMatrix big_e_q_matrix(const GradedMatrix& x);
GradedMatrix twist_G(const Representation& rep);
GradedMatrix twist_G_inv(const Representation& rep);
GradedMatrix t_alpha_rep(const Rational& alpha, const Representation& rep);

/// Matrix with a formal right Cartan factor q^{(c1 h1 + c2 h2)/2}.
struct DressedMatrix {
  GradedMatrix body;
  Rational c1 = 0;
  Rational c2 = 0;
};

/// Both sides of an identity in a representation.
std::pair<DressedMatrix, DressedMatrix> identity_sides_rep(IdentityId id, const IdentityParams& p,
                                                           const Representation& rep);
IdentityVerdict verify_identity_rep(IdentityId id, const IdentityParams& p, const Representation& rep);
/// Every gating identity over its parameter grid, plus SquareLiteral.
std::vector<IdentityVerdict> verify_identities_rep(const Representation& rep);

struct TOperator {
  GradedMatrix T;
  GradedMatrix T_inv;
  GradedMatrix H1;
};

struct TPowerCheck {
  Rational alpha;
  bool holds = false;
};

struct TReport {
  TOperator t;
  /// T - T^-1 = 2h e1 and T T^-1 = 1 (e1 at q = 1).
  bool difference_relation = false;
  bool inverse_relation = false;
  /// T^2 - T^-2 = 2h (T + T^-1) e1, the limit of Square.
  bool squared_relation = false;
  std::vector<TPowerCheck> powers;
  bool closed_form_matches = false;
  bool all_pass() const;
};

/// T = lim t^(1); throws PoleAtQ1.
TOperator T_limit(const Representation& rep);
/// Full report: relations, lim t^(alpha) = T^alpha for alpha in {2, -1, 1/2}, closed form.
TReport t_report(const Representation& rep);
/// sign * h e1 + sqrt(1 + h^2 e1^2), with e1 its q = 1 image.
GradedMatrix closed_form_T(const Representation& rep, int sign = 1);
/// (1 + N)^alpha for nilpotent N by the terminating binomial series.
GradedMatrix unipotent_power(const GradedMatrix& t, const Rational& alpha);

GradedMatrix conjugated_R(const Representation& rep);

struct AbcBlocks {
  GradedMatrix alpha;
  GradedMatrix beta;
  GradedMatrix gamma;
};
AbcBlocks abc_blocks(const Representation& rep);

struct TwistPipelineResult {
  std::string rep;
  GradedMatrix conjugated;
  std::vector<std::optional<int>> valuations;
  /// Present when no entry has a pole.
  std::optional<GradedMatrix> limit;
  GradedMatrix assembled;
  bool blocks_match = false;
  bool beta_limit_zero = false;
  bool gamma_limit_zero = false;
  bool limit_equals_assembled = false;
  std::string pole;  // description of the first pole, if any
  bool verdict() const;
};

TwistPipelineResult limit_Rh(const Representation& rep);
GradedMatrix assemble_Rh(const Representation& rep);

struct RhPropertyReport {
  YbeResult ybe;
  bool identity_at_zero = false;
  /// P R_h P R_h on fund (x) fund; not asserted.
  GradedMatrix flip_product;
  bool flip_product_is_identity = false;
  /// Highest h power in R_h - 1 and nilpotency index of R_h - 1 for the given rep.
  int hbar_degree = 0;
  int nilpotency_index = 0;
};

/// YBE and flip product use R_h on fund (x) fund; degrees use R_h(rep).
RhPropertyReport rh_property_report(const Representation& rep);

nlohmann::json to_json(const TwistPipelineResult& r);
nlohmann::json to_json(const TReport& r);
nlohmann::json valuations_json(const TwistPipelineResult& r);

}  // namespace sj
