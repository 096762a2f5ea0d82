#pragma once

// R_q = Rhat_q K_q in a pair of representations, with
//   K_q    = q^{-(h1 (x) h2 + h2 (x) h1 + 2 h2 (x) h2)}
//   Rhat_q = exp_q[(q-q^-1) K(-1,0)e1 (x) f1 K(1,0)]
//            exp_q[-(q-q^-1) K(-1,-1)e3 (x) f3 K(1,1)]
//            exp_q[-(q-q^-1) K(0,-1)e2 (x) f2 K(0,1)]
// and the block form of R_q on fund (x) V.

#include <string>
#include <vector>

#include "superjordan/reps.hpp"

namespace sj {

struct RMatrixBundle {
  std::string rep1;
  std::string rep2;
  GradedMatrix kq;
  GradedMatrix rhat;
  GradedMatrix r;
};

/// Throws std::domain_error if an exponent is not a multiple of 1/2.
GradedMatrix kq(const Representation& r1, const Representation& r2);
/// sum X^n/(n)_q! over a nilpotent X; NonTerminatingSeries otherwise.
GradedMatrix exp_q_matrix(const GradedMatrix& x);
GradedMatrix rhat_q(const Representation& r1, const Representation& r2);
RMatrixBundle r_q(const Representation& r1, const Representation& r2);

/// Upper blocks of R_q on fund (x) V as algebra elements (to be evaluated in V):
/// diag(K(0,-2), K(-2,-2), K(-2,-4)) with A, C, B in slots (1,2), (2,3), (1,3).
struct FundArbBlocks {
  AlgebraElement d1, d2, d3;
  AlgebraElement a, b, c;
};
const FundArbBlocks& fund_arb_blocks();
/// Assembles a 3x3 block operator on fund (x) V from blocks on V (row-major).
GradedMatrix assemble_fund_blocks(const Representation& rep, const std::vector<std::vector<GradedMatrix>>& blocks);
/// Block of a fund (x) V operator.
GradedMatrix fund_block(const GradedMatrix& m, const Representation& rep, std::size_t i, std::size_t j);
GradedMatrix r_fund_arb(const Representation& rep);

struct YbeResult {
  GradedMatrix residual;
  std::size_t nonzero = 0;
  bool holds = false;
};
/// R12 R13 R23 - R23 R13 R12 on V (x) V (x) V.
YbeResult ybe_check(const GradedMatrix& r, const GradedSpace& v);

struct IntertwinerVerdict {
  std::string generator;
  /// R Delta(x) = Delta'(x) R
  bool forward = false;
  /// R Delta'(x) = Delta(x) R
  bool reverse = false;
};
std::vector<IntertwinerVerdict> intertwiner_check(const GradedMatrix& r, const Representation& r1,
                                                  const Representation& r2);

/// Rhat is 1 on the diagonal and nonzero off the diagonal only where the
/// first tensor factor is raised (height -h1 - 3h2 increases).
bool is_unit_triangular(const GradedMatrix& m, const Representation& r1, const Representation& r2);
/// det = +-s^k.
bool determinant_is_unit_monomial(const GradedMatrix& m);

nlohmann::json to_json(const RMatrixBundle& b);
nlohmann::json to_json(const std::vector<IntertwinerVerdict>& v);

}  // namespace sj
