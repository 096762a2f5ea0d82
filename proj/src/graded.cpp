#include "superjordan/graded.hpp"

#include <string>
#include <utility>

namespace sj {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}

int koszul(int a, int b) { return (a * b) & 1; }

nlohmann::json parities_json(const GradedSpace& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto p : v.parities()) arr.push_back(to_int(p));
  return arr;
}

GradedSpace space_from_json(const nlohmann::json& j) {
  std::vector<Parity> ps;
  for (const auto& e : j) ps.push_back(e.get<int>() ? Parity::Odd : Parity::Even);
  return GradedSpace(std::move(ps));
}

}  // namespace

GradedSpace::GradedSpace(std::vector<Parity> parities) : parities_(std::move(parities)) {
  if (parities_.empty()) throw DimensionMismatch("graded space must be nonempty");
}

GradedSpace GradedSpace::tensor(const GradedSpace& other) const {
  std::vector<Parity> ps;
  ps.reserve(dim() * other.dim());
  for (auto a : parities_)
    for (auto b : other.parities_) ps.push_back(parity_sum(a, b));
  return GradedSpace(std::move(ps));
}

GradedMatrix::GradedMatrix(GradedSpace codomain, GradedSpace domain)
    : codomain_(std::move(codomain)), domain_(std::move(domain)), entries_(codomain_.dim() * domain_.dim()) {}

GradedMatrix GradedMatrix::identity(const GradedSpace& space) {
  GradedMatrix m(space, space);
  for (std::size_t i = 0; i < space.dim(); ++i) m(i, i) = Scalar(1);
  return m;
}

GradedMatrix GradedMatrix::unit(const GradedSpace& space, std::size_t i, std::size_t j) {
  require(i < space.dim() && j < space.dim(), "matrix unit index out of range");
  GradedMatrix m(space, space);
  m(i, j) = Scalar(1);
  return m;
}

GradedMatrix GradedMatrix::diagonal(const GradedSpace& space, const std::vector<Scalar>& diag) {
  require(diag.size() == space.dim(), "diagonal length does not match space");
  GradedMatrix m(space, space);
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool GradedMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::size_t GradedMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& e : entries_)
    if (!e.is_zero()) ++n;
  return n;
}

bool GradedMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

GradedMatrix GradedMatrix::operator-() const {
  GradedMatrix m = *this;
  for (auto& e : m.entries_) e = -e;
  return m;
}

GradedMatrix& GradedMatrix::operator+=(const GradedMatrix& o) {
  require(codomain_ == o.codomain_ && domain_ == o.domain_, "gadd: graded spaces differ");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!o.entries_[i].is_zero()) entries_[i] += o.entries_[i];
  return *this;
}

GradedMatrix& GradedMatrix::operator-=(const GradedMatrix& o) {
  require(codomain_ == o.codomain_ && domain_ == o.domain_, "gadd: graded spaces differ");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!o.entries_[i].is_zero()) entries_[i] -= o.entries_[i];
  return *this;
}

GradedMatrix& GradedMatrix::operator*=(const Scalar& c) {
  for (auto& e : entries_)
    if (!e.is_zero()) e *= c;
  return *this;
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  require(a.domain_ == b.codomain_, "gmul: inner graded spaces differ");
  GradedMatrix c(a.codomain_, b.domain_);
  const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      const Scalar& aik = a.entries_[i * m + k];
      if (aik.is_zero()) continue;
      const bool unit = aik.is_one();
      for (std::size_t j = 0; j < p; ++j) {
        const Scalar& bkj = b.entries_[k * p + j];
        if (bkj.is_zero()) continue;
        if (unit)
          c.entries_[i * p + j] += bkj;
        else
          c.entries_[i * p + j] += aik * bkj;
      }
    }
  }
  return c;
}

GradedMatrix GradedMatrix::map(const std::function<Scalar(const Scalar&)>& f) const {
  GradedMatrix m = *this;
  for (auto& e : m.entries_) e = f(e);
  return m;
}

GradedMatrix GradedMatrix::block(std::size_t row0, std::size_t col0, const GradedSpace& codomain,
                                 const GradedSpace& domain) const {
  require(row0 + codomain.dim() <= rows() && col0 + domain.dim() <= cols(), "block out of range");
  GradedMatrix b(codomain, domain);
  for (std::size_t i = 0; i < codomain.dim(); ++i)
    for (std::size_t j = 0; j < domain.dim(); ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

void GradedMatrix::set_block(std::size_t row0, std::size_t col0, const GradedMatrix& b) {
  require(row0 + b.rows() <= rows() && col0 + b.cols() <= cols(), "block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(row0 + i, col0 + j) = b(i, j);
}

GradedMatrix GradedMatrix::pow(unsigned n) const {
  require(is_square(), "pow needs a square matrix");
  GradedMatrix result = identity(domain_);
  GradedMatrix base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

GradedMatrix gadd(const GradedMatrix& a, const GradedMatrix& b) { return a + b; }
GradedMatrix gmul(const GradedMatrix& a, const GradedMatrix& b) { return a * b; }

GradedMatrix graded_tensor(const GradedMatrix& a, const GradedMatrix& b) {
  GradedMatrix t(a.codomain().tensor(b.codomain()), a.domain().tensor(b.domain()));
  const std::size_t r = b.rows(), c = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      const int pj = a.domain().p(j);
      for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t l = 0; l < c; ++l) {
          const Scalar& bkl = b(k, l);
          if (bkl.is_zero()) continue;
          Scalar v = aij * bkl;
          if (koszul(b.codomain().p(k) + b.domain().p(l), pj)) v = -v;
          t(i * r + k, j * c + l) = std::move(v);
        }
      }
    }
  }
  return t;
}

GradedMatrix graded_flip(const GradedSpace& v, const GradedSpace& w) {
  GradedMatrix f(w.tensor(v), v.tensor(w));
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t k = 0; k < w.dim(); ++k)
      f(k * v.dim() + i, i * w.dim() + k) = koszul(v.p(i), w.p(k)) ? Scalar(-1) : Scalar(1);
  return f;
}

GradedMatrix embed_12(const GradedMatrix& r, const GradedSpace& u, const GradedSpace& v, const GradedSpace& w) {
  require(r.domain() == u.tensor(v) && r.codomain() == r.domain(), "embed_12: operator does not act on U(x)V");
  return graded_tensor(r, GradedMatrix::identity(w));
}

GradedMatrix embed_23(const GradedMatrix& r, const GradedSpace& u, const GradedSpace& v, const GradedSpace& w) {
  require(r.domain() == v.tensor(w) && r.codomain() == r.domain(), "embed_23: operator does not act on V(x)W");
  return graded_tensor(GradedMatrix::identity(u), r);
}

GradedMatrix embed_13(const GradedMatrix& r, const GradedSpace& u, const GradedSpace& v, const GradedSpace& w) {
  require(r.domain() == u.tensor(w) && r.codomain() == r.domain(), "embed_13: operator does not act on U(x)W");
  const GradedMatrix to_uwv = graded_tensor(GradedMatrix::identity(u), graded_flip(v, w));
  const GradedMatrix to_uvw = graded_tensor(GradedMatrix::identity(u), graded_flip(w, v));
  return to_uvw * graded_tensor(r, GradedMatrix::identity(v)) * to_uwv;
}

GradedMatrix inverse(const GradedMatrix& a) {
  require(a.rows() == a.cols(), "inverse needs a square matrix");
  const std::size_t n = a.rows();
  GradedMatrix work = a;
  GradedMatrix inv(a.domain(), a.codomain());
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = Scalar(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw DivisionByZero("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Scalar pinv = work(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!work(col, j).is_zero()) work(col, j) *= pinv;
      if (!inv(col, j).is_zero()) inv(col, j) *= pinv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const Scalar f = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!work(col, j).is_zero()) work(r, j) -= f * work(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Scalar determinant(const GradedMatrix& a) {
  require(a.rows() == a.cols(), "determinant needs a square matrix");
  const std::size_t n = a.rows();
  GradedMatrix work = a;
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(pivot, j), work(col, j));
      det = -det;
    }
    det *= work(col, col);
    const Scalar pinv = work(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work(r, col).is_zero()) continue;
      const Scalar f = work(r, col) * pinv;
      for (std::size_t j = col; j < n; ++j)
        if (!work(col, j).is_zero()) work(r, j) -= f * work(col, j);
    }
  }
  return det;
}

nlohmann::json to_json(const GradedMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) entries.push_back({i, j, to_json(m(i, j))});
  return {{"dim_row", m.rows()},
          {"dim_col", m.cols()},
          {"parities_row", parities_json(m.codomain())},
          {"parities_col", parities_json(m.domain())},
          {"entries", entries}};
}

GradedMatrix graded_matrix_from_json(const nlohmann::json& j) {
  GradedMatrix m(space_from_json(j.at("parities_row")), space_from_json(j.at("parities_col")));
  if (m.rows() != j.at("dim_row").get<std::size_t>() || m.cols() != j.at("dim_col").get<std::size_t>())
    throw DimensionMismatch("matrix json: dimensions disagree with parities");
  for (const auto& e : j.at("entries")) m(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()) = scalar_from_json(e.at(2));
  return m;
}

}  // namespace sj
