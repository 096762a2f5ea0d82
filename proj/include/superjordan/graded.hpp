#pragma once

// Z2-graded linear algebra over Scalar.
//
// Basis order of a tensor product V (x) W is row-major: (i, k) -> i*dim(W)+k.
// Operator parity is never stored; an entry (i, j) has parity p(i)+p(j).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <json.hpp>

#include "superjordan/scalar.hpp"

namespace sj {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int to_int(Parity p) { return static_cast<int>(p); }
inline Parity parity_sum(Parity a, Parity b) { return static_cast<Parity>((to_int(a) + to_int(b)) & 1); }

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GradedSpace {
 public:
  explicit GradedSpace(std::vector<Parity> parities);

  std::size_t dim() const { return parities_.size(); }
  Parity parity(std::size_t i) const { return parities_[i]; }
  int p(std::size_t i) const { return to_int(parities_[i]); }
  const std::vector<Parity>& parities() const { return parities_; }

  /// Row-major tensor product space.
  GradedSpace tensor(const GradedSpace& other) const;

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

 private:
  std::vector<Parity> parities_;
};

class GradedMatrix {
 public:
  /// Zero map domain -> codomain.
  GradedMatrix(GradedSpace codomain, GradedSpace domain);

  static GradedMatrix identity(const GradedSpace& space);
  /// Matrix unit E_ij (0-based) on a square space.
  static GradedMatrix unit(const GradedSpace& space, std::size_t i, std::size_t j);
  static GradedMatrix diagonal(const GradedSpace& space, const std::vector<Scalar>& diag);

  const GradedSpace& codomain() const { return codomain_; }
  const GradedSpace& domain() const { return domain_; }
  std::size_t rows() const { return codomain_.dim(); }
  std::size_t cols() const { return domain_.dim(); }
  bool is_square() const { return codomain_ == domain_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols() + j]; }
  /// Parity of the matrix unit at (i, j).
  Parity entry_parity(std::size_t i, std::size_t j) const {
    return parity_sum(codomain_.parity(i), domain_.parity(j));
  }

  bool is_zero() const;
  std::size_t nonzero_count() const;
  bool is_diagonal() const;

  GradedMatrix operator-() const;
  GradedMatrix& operator+=(const GradedMatrix& o);
  GradedMatrix& operator-=(const GradedMatrix& o);
  GradedMatrix& operator*=(const Scalar& c);
  friend GradedMatrix operator+(GradedMatrix a, const GradedMatrix& b) { return a += b; }
  friend GradedMatrix operator-(GradedMatrix a, const GradedMatrix& b) { return a -= b; }
  friend GradedMatrix operator*(const Scalar& c, GradedMatrix a) { return a *= c; }
  friend GradedMatrix operator*(GradedMatrix a, const Scalar& c) { return a *= c; }
  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
  friend bool operator==(const GradedMatrix&, const GradedMatrix&) = default;

  /// Applies f to every entry.
  GradedMatrix map(const std::function<Scalar(const Scalar&)>& f) const;

  /// Sub-matrix with the given row/column offsets and target spaces.
  GradedMatrix block(std::size_t row0, std::size_t col0, const GradedSpace& codomain,
                     const GradedSpace& domain) const;
  void set_block(std::size_t row0, std::size_t col0, const GradedMatrix& b);

  GradedMatrix pow(unsigned n) const;

 private:
  GradedSpace codomain_;
  GradedSpace domain_;
  std::vector<Scalar> entries_;  // row-major
};

/// Sum; spaces must agree.
GradedMatrix gadd(const GradedMatrix& a, const GradedMatrix& b);
/// Composition a*b; a.domain must equal b.codomain.
GradedMatrix gmul(const GradedMatrix& a, const GradedMatrix& b);

/// Koszul-signed tensor product:
/// (A (x) B)_{(i,k),(j,l)} = (-1)^{(p(k)+p(l)) p(j)} A_ij B_kl.
GradedMatrix graded_tensor(const GradedMatrix& a, const GradedMatrix& b);

/// v (x) w -> (-1)^{|v||w|} w (x) v, as a map V (x) W -> W (x) V.
GradedMatrix graded_flip(const GradedSpace& v, const GradedSpace& w);

/// Embeddings of an operator on a pair of factors into U (x) V (x) W.
GradedMatrix embed_12(const GradedMatrix& r, const GradedSpace& u, const GradedSpace& v, const GradedSpace& w);
GradedMatrix embed_23(const GradedMatrix& r, const GradedSpace& u, const GradedSpace& v, const GradedSpace& w);
/// R acts on U (x) W; realized as (1 (x) P_WV)(R (x) 1)(1 (x) P_VW).
GradedMatrix embed_13(const GradedMatrix& r, const GradedSpace& u, const GradedSpace& v, const GradedSpace& w);

/// Exact inverse by Gauss-Jordan elimination; throws DivisionByZero if singular.
GradedMatrix inverse(const GradedMatrix& a);
Scalar determinant(const GradedMatrix& a);

/// {dim_row, dim_col, parities_row, parities_col, entries: [[i, j, scalar], ...]}
nlohmann::json to_json(const GradedMatrix& m);
GradedMatrix graded_matrix_from_json(const nlohmann::json& j);

}  // namespace sj
