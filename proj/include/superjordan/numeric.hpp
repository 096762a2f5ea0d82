#pragma once

// Double-precision rebuild of R_q and R_h at a numeric point (q0, h0), from
// hard-coded fundamental matrices, used to spot-check the exact results.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "superjordan/graded.hpp"

namespace sj::numeric {

struct Rep {
  std::string name;
  Eigen::MatrixXd e1, e2, f1, f2;
  std::vector<std::pair<double, double>> weights;
  std::vector<int> parity;
  std::size_t dim() const { return parity.size(); }
  Eigen::MatrixXd e3(double q0) const { return e1 * e2 - (e2 * e1) / q0; }
  Eigen::MatrixXd f3(double q0) const { return f2 * f1 - q0 * (f1 * f2); }
};

Rep fund();
/// Coproduct rep at q0.
Rep tensor(const Rep& a, const Rep& b, double q0);
/// fund, fund2 or fund3 at q0.
Rep by_name(const std::string& name, double q0);

/// q0^{(c1 w1 + c2 w2)/2} on the weight diagonal.
Eigen::MatrixXd cartan(const Rep& r, double c1, double c2, double q0);
/// Graded tensor product; the sign depends on the column parities of a and both parities of b.
Eigen::MatrixXd graded_tensor(const Eigen::MatrixXd& a, const std::vector<int>& pa_col, const Eigen::MatrixXd& b,
                              const std::vector<int>& pb_row, const std::vector<int>& pb_col);

Eigen::MatrixXd r_q(const Rep& r1, const Rep& r2, double q0);
/// R_h on fund (x) rep; rep must be built at q0 = 1.
Eigen::MatrixXd r_h(const Rep& rep, double h0);

struct Comparison {
  std::string label;
  double max_rel_error = 0;
  std::size_t entries = 0;
  bool pass = false;
};

/// max |x - y| / max(|x|, |y|) over entries; where the exact entry is zero, |y| instead.
Comparison compare(const std::string& label, const GradedMatrix& exact, const Eigen::MatrixXd& approx, double q0,
                   double h0, double tol);

/// R_q and R_h on fund (x) fund and fund (x) fund2 against the exact builds.
std::vector<Comparison> spot_check(double q0, double h0, double tol = 1e-10);

}  // namespace sj::numeric
