#include "superjordan/numeric.hpp"

#include <cmath>
#include <stdexcept>

#include "superjordan/jordanian.hpp"

namespace sj::numeric {

namespace {

using Eigen::MatrixXd;

MatrixXd unit(std::size_t n, std::size_t i, std::size_t j) {
  MatrixXd m = MatrixXd::Zero(n, n);
  m(i, j) = 1;
  return m;
}

MatrixXd tensor_of(const MatrixXd& a, const Rep& ra, const MatrixXd& b, const Rep& rb) {
  return graded_tensor(a, ra.parity, b, rb.parity, rb.parity);
}

// sum x^n / (n)_q!
MatrixXd exp_q(const MatrixXd& x, double q0) {
  MatrixXd out = MatrixXd::Identity(x.rows(), x.cols());
  MatrixXd pw = out;
  double fact = 1;
  for (Eigen::Index n = 1; n <= x.rows(); ++n) {
    pw = pw * x;
    fact *= (1 - std::pow(q0, n)) / (1 - q0);
    out += pw / fact;
  }
  return out;
}

// sqrt(1 + N) for nilpotent N
MatrixXd unipotent_sqrt(const MatrixXd& n) {
  MatrixXd out = MatrixXd::Identity(n.rows(), n.cols());
  MatrixXd pw = out;
  double c = 1;
  for (Eigen::Index k = 1; k <= n.rows(); ++k) {
    c *= (0.5 - (k - 1)) / k;
    pw = pw * n;
    out += c * pw;
  }
  return out;
}

}  // namespace

Rep fund() {
  return {"fund", unit(3, 0, 1), unit(3, 1, 2), unit(3, 1, 0), unit(3, 2, 1), {{1, 0}, {-1, 1}, {0, 1}}, {0, 0, 1}};
}

Eigen::MatrixXd cartan(const Rep& r, double c1, double c2, double q0) {
  MatrixXd d = MatrixXd::Zero(r.dim(), r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i)
    d(i, i) = std::pow(q0, (c1 * r.weights[i].first + c2 * r.weights[i].second) / 2);
  return d;
}

Eigen::MatrixXd graded_tensor(const Eigen::MatrixXd& a, const std::vector<int>& pa_col, const Eigen::MatrixXd& b,
                              const std::vector<int>& pb_row, const std::vector<int>& pb_col) {
  const Eigen::Index r = b.rows(), c = b.cols();
  MatrixXd t = MatrixXd::Zero(a.rows() * r, a.cols() * c);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < r; ++k)
        for (Eigen::Index l = 0; l < c; ++l) {
          const bool odd = ((pb_row[k] + pb_col[l]) * pa_col[j]) % 2 != 0;
          t(i * r + k, j * c + l) = (odd ? -1 : 1) * a(i, j) * b(k, l);
        }
  return t;
}

Rep tensor(const Rep& a, const Rep& b, double q0) {
  auto delta = [&](const MatrixXd& xa, const MatrixXd& xb, double c1, double c2) -> MatrixXd {
    return tensor_of(xa, a, cartan(b, c1, c2, q0), b) + tensor_of(cartan(a, -c1, -c2, q0), a, xb, b);
  };
  Rep t;
  t.name = a.name == "fund" && b.name == "fund" ? "fund2" : a.name == "fund2" && b.name == "fund" ? "fund3" : "tensor";
  t.e1 = delta(a.e1, b.e1, 1, 0);
  t.e2 = delta(a.e2, b.e2, 0, 1);
  t.f1 = delta(a.f1, b.f1, 1, 0);
  t.f2 = delta(a.f2, b.f2, 0, 1);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < b.dim(); ++k) {
      t.weights.push_back({a.weights[i].first + b.weights[k].first, a.weights[i].second + b.weights[k].second});
      t.parity.push_back((a.parity[i] + b.parity[k]) % 2);
    }
  return t;
}

Rep by_name(const std::string& name, double q0) {
  if (name == "fund") return fund();
  if (name == "fund2") return tensor(fund(), fund(), q0);
  if (name == "fund3") return tensor(tensor(fund(), fund(), q0), fund(), q0);
  throw std::invalid_argument("unknown representation '" + name + "'");
}

Eigen::MatrixXd r_q(const Rep& r1, const Rep& r2, double q0) {
  const double c = q0 - 1 / q0;
  const MatrixXd x1 = c * tensor_of(cartan(r1, -1, 0, q0) * r1.e1, r1, r2.f1 * cartan(r2, 1, 0, q0), r2);
  const MatrixXd x3 = -c * tensor_of(cartan(r1, -1, -1, q0) * r1.e3(q0), r1, r2.f3(q0) * cartan(r2, 1, 1, q0), r2);
  const MatrixXd x2 = -c * tensor_of(cartan(r1, 0, -1, q0) * r1.e2, r1, r2.f2 * cartan(r2, 0, 1, q0), r2);
  MatrixXd k = MatrixXd::Zero(r1.dim() * r2.dim(), r1.dim() * r2.dim());
  for (std::size_t i = 0; i < r1.dim(); ++i)
    for (std::size_t j = 0; j < r2.dim(); ++j) {
      const auto& [a1, a2] = r1.weights[i];
      const auto& [b1, b2] = r2.weights[j];
      k(i * r2.dim() + j, i * r2.dim() + j) = std::pow(q0, -(a1 * b2 + a2 * b1 + 2 * a2 * b2));
    }
  return exp_q(x1, q0) * exp_q(x3, q0) * exp_q(x2, q0) * k;
}

Eigen::MatrixXd r_h(const Rep& rep, double h0) {
  const Eigen::Index n = static_cast<Eigen::Index>(rep.dim());
  const MatrixXd root = unipotent_sqrt(h0 * h0 * rep.e1 * rep.e1);
  const MatrixXd T = h0 * rep.e1 + root;
  const MatrixXd Ti = -h0 * rep.e1 + root;
  MatrixXd h1 = MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) h1(i, i) = rep.weights[i].first;
  const MatrixXd H1 = (T + Ti) * h1 / 2;
  MatrixXd out = MatrixXd::Zero(3 * n, 3 * n);
  out.block(0, 0, n, n) = T;
  out.block(0, n, n, n) = -h0 * H1 + h0 / 2 * (T - Ti);
  out.block(n, n, n, n) = Ti;
  out.block(2 * n, 2 * n, n, n) = MatrixXd::Identity(n, n);
  return out;
}

Comparison compare(const std::string& label, const GradedMatrix& exact, const Eigen::MatrixXd& approx, double q0,
                   double h0, double tol) {
  Comparison c{label, 0, exact.rows() * exact.cols(), false};
  if (static_cast<std::size_t>(approx.rows()) != exact.rows() || static_cast<std::size_t>(approx.cols()) != exact.cols())
    return c;
  for (std::size_t i = 0; i < exact.rows(); ++i)
    for (std::size_t j = 0; j < exact.cols(); ++j) {
      const double y = approx(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      // exact zeros are compared absolutely against rounding residue
      if (exact(i, j).is_zero()) {
        c.max_rel_error = std::max(c.max_rel_error, std::abs(y));
        continue;
      }
      const double x = eval_numeric(exact(i, j), q0, h0);
      const double scale = std::max(std::abs(x), std::abs(y));
      c.max_rel_error = std::max(c.max_rel_error, std::abs(x - y) / scale);
    }
  c.pass = c.max_rel_error <= tol;
  return c;
}

std::vector<Comparison> spot_check(double q0, double h0, double tol) {
  std::vector<Comparison> out;
  const Rep f = fund();
  for (const std::string name : {"fund", "fund2"}) {
    const Representation exact = rep_by_name(name);
    out.push_back(compare("R_q fund (x) " + name, sj::r_q(fundamental(), exact).r, r_q(f, by_name(name, q0), q0),
                          q0, h0, tol));
    out.push_back(compare("R_h fund (x) " + name, assemble_Rh(exact), r_h(by_name(name, 1), h0), q0, h0, tol));
  }
  return out;
}

}  // namespace sj::numeric
