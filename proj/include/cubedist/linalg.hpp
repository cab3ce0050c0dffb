#pragma once

// Exact dense linear algebra over the rationals. Determinant, rank and solves
// run fraction-free (Bareiss) on integer-scaled rows, so no intermediate
// rational normalisation happens inside the elimination loops.

#include <cubedist/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubedist {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
  // Always zero; carried so callers can report it alongside other determinants.
  const Rational& determinant() const { return det_; }

 private:
  Rational det_{0};
};

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t size);
  static RationalMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_symmetric() const;
  RationalMatrix transpose() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalVector operator*(const RationalMatrix& a, const RationalVector& v);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector ones(std::size_t dim);

/// Exact determinant. The 0x0 determinant is 1.
Rational det(const RationalMatrix& m);

/// Exact rank over Q.
std::size_t rank(const RationalMatrix& m);

/// Solves m x = v exactly. Throws SingularMatrixError when det(m) = 0.
RationalVector solve(const RationalMatrix& m, const RationalVector& v);

RationalMatrix inverse(const RationalMatrix& m);

/// <m^{-1} v, v> computed as v . w with m w = v; m^{-1} is never formed.
Rational quad_form_inv(const RationalMatrix& m, const RationalVector& v);

/// [[corner, v^T], [v, m]].
RationalMatrix bordered(const RationalMatrix& m, const RationalVector& v, const Rational& corner);

/// A nonzero integer-valued x with m x = 0, scaled to gcd 1 with its first
/// nonzero entry positive, or nullopt when m has full column rank.
std::optional<RationalVector> nullspace_vector(const RationalMatrix& m);

/// det([[W, X], [Y, Z]]) through the Schur complement det(Z) det(W - X Z^{-1} Y).
/// Z must be invertible.
Rational schur_complement_det(const RationalMatrix& w, const RationalMatrix& x,
                              const RationalMatrix& y, const RationalMatrix& z);

/// Block assembly used by tests and the Schur route.
RationalMatrix block(const RationalMatrix& w, const RationalMatrix& x,
                     const RationalMatrix& y, const RationalMatrix& z);

}  // namespace cubedist
