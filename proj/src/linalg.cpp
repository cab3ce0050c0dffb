#include <cubedist/linalg.hpp>

#include <algorithm>
#include <utility>

namespace cubedist {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t size) {
  RationalMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<std::vector<Rational>> copy;
  copy.reserve(rows.size());
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(copy);
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector product: dimensions differ");
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

namespace {

template <typename Op>
RationalMatrix elementwise(const RationalMatrix& a, const RationalMatrix& b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("elementwise: shapes differ");
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = op(a(i, j), b(i, j));
  }
  return c;
}

}  // namespace

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  return elementwise(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  return elementwise(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  }
  return c;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: dimensions differ");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector ones(std::size_t dim) { return RationalVector(dim, Rational(1)); }

namespace {

// Row-major integer working matrix for fraction-free elimination.
struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> a;

  mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
  }
};

// Copies m (and any extra right-hand columns) into an integer matrix, scaling
// each row by the lcm of its denominators. Row scaling preserves the solution
// set and rank; det picks up the product of the scales.
IntegerMatrix scale_to_integers(const RationalMatrix& m, const RationalMatrix* rhs, mpz_class* scale_product) {
  const std::size_t extra = rhs ? rhs->cols() : 0;
  IntegerMatrix out{m.rows(), m.cols() + extra, {}};
  out.a.resize(out.rows * out.cols);
  if (scale_product) *scale_product = 1;

  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < extra; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)(i, j).get_den_mpz_t());
    auto put = [&](std::size_t j, const Rational& q) {
      mpz_class& dst = out.at(i, j);
      if (l == 1) {
        dst = q.get_num();
      } else {
        mpz_divexact(dst.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        dst *= q.get_num();
      }
    };
    for (std::size_t j = 0; j < m.cols(); ++j) put(j, m(i, j));
    for (std::size_t j = 0; j < extra; ++j) put(m.cols() + j, (*rhs)(i, j));
    if (scale_product) *scale_product *= l;
  }
  return out;
}

struct Echelon {
  std::vector<std::size_t> pivot_cols;
  int sign = 1;
};

// One-step Bareiss elimination over the first `elim_cols` columns. Every
// division is exact; after step k the active entries are (k+1)-minors.
Echelon bareiss(IntegerMatrix& a, std::size_t elim_cols) {
  Echelon e;
  mpz_class prev = 1;
  mpz_class t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < elim_cols && r < a.rows; ++c) {
    std::size_t p = r;
    while (p < a.rows && sgn(a.at(p, c)) == 0) ++p;
    if (p == a.rows) continue;
    if (p != r) {
      a.swap_rows(p, r);
      e.sign = -e.sign;
    }
    const mpz_class& pivot = a.at(r, c);
    for (std::size_t i = r + 1; i < a.rows; ++i) {
      const bool lead_zero = sgn(a.at(i, c)) == 0;
      for (std::size_t j = c + 1; j < a.cols; ++j) {
        mpz_class& x = a.at(i, j);
        x *= pivot;
        if (!lead_zero) {
          t = a.at(i, c) * a.at(r, j);
          x -= t;
        }
        if (prev != 1) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, c) = 0;
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

void require_square(const RationalMatrix& m, const char* what) {
  if (!m.square()) throw DimensionError(std::string(what) + ": matrix is not square");
}

// Back substitution on the upper-triangular integer block left by bareiss()
// for the right-hand columns starting at column n.
RationalMatrix back_substitute(IntegerMatrix& a, std::size_t n) {
  const std::size_t k = a.cols - n;
  RationalMatrix x(n, k);
  for (std::size_t col = 0; col < k; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational s(a.at(ii, n + col));
      for (std::size_t j = ii + 1; j < n; ++j) {
        if (sgn(a.at(ii, j)) != 0) s -= Rational(a.at(ii, j)) * x(j, col);
      }
      s /= Rational(a.at(ii, ii));
      x(ii, col) = s;
    }
  }
  return x;
}

RationalMatrix solve_many(const RationalMatrix& m, const RationalMatrix& rhs) {
  require_square(m, "solve");
  if (rhs.rows() != m.rows()) throw DimensionError("solve: right-hand side has wrong length");
  IntegerMatrix a = scale_to_integers(m, &rhs, nullptr);
  const Echelon e = bareiss(a, m.cols());
  if (e.pivot_cols.size() < m.rows()) throw SingularMatrixError("matrix is singular (det = 0)");
  return back_substitute(a, m.rows());
}

}  // namespace

Rational det(const RationalMatrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  mpz_class scale;
  IntegerMatrix a = scale_to_integers(m, nullptr, &scale);
  const Echelon e = bareiss(a, n);
  if (e.pivot_cols.size() < n) return 0;
  Rational d(a.at(n - 1, n - 1) * e.sign, scale);
  d.canonicalize();
  return d;
}

std::size_t rank(const RationalMatrix& m) {
  IntegerMatrix a = scale_to_integers(m, nullptr, nullptr);
  return bareiss(a, m.cols()).pivot_cols.size();
}

RationalVector solve(const RationalMatrix& m, const RationalVector& v) {
  RationalMatrix rhs(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) rhs(i, 0) = v[i];
  const RationalMatrix x = solve_many(m, rhs);
  RationalVector out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) out[i] = x(i, 0);
  return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
  require_square(m, "inverse");
  return solve_many(m, RationalMatrix::identity(m.rows()));
}

Rational quad_form_inv(const RationalMatrix& m, const RationalVector& v) {
  require_square(m, "quad_form_inv");
  if (v.size() != m.rows()) throw DimensionError("quad_form_inv: vector has wrong length");
  return dot(v, solve(m, v));
}

RationalMatrix bordered(const RationalMatrix& m, const RationalVector& v, const Rational& corner) {
  require_square(m, "bordered");
  if (v.size() != m.rows()) throw DimensionError("bordered: vector has wrong length");
  const std::size_t k = m.rows();
  RationalMatrix b(k + 1, k + 1);
  b(0, 0) = corner;
  for (std::size_t i = 0; i < k; ++i) {
    b(0, i + 1) = v[i];
    b(i + 1, 0) = v[i];
    for (std::size_t j = 0; j < k; ++j) b(i + 1, j + 1) = m(i, j);
  }
  return b;
}

std::optional<RationalVector> nullspace_vector(const RationalMatrix& m) {
  IntegerMatrix a = scale_to_integers(m, nullptr, nullptr);
  const Echelon e = bareiss(a, m.cols());
  const std::size_t r = e.pivot_cols.size();
  if (r == m.cols()) return std::nullopt;

  std::size_t free_col = 0;
  for (std::size_t k = 0; k < r && e.pivot_cols[k] == free_col; ++k) ++free_col;

  RationalVector x(m.cols());
  x[free_col] = 1;
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t pc = e.pivot_cols[k];
    Rational s = 0;
    for (std::size_t j = pc + 1; j < m.cols(); ++j) {
      if (sgn(x[j]) != 0) s += Rational(a.at(k, j)) * x[j];
    }
    x[pc] = -s / Rational(a.at(k, pc));
  }

  mpz_class l = 1;
  mpz_class g = 0;
  for (const auto& q : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> ints(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    ints[i] = x[i].get_num() * (l / x[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  const auto first = std::find_if(ints.begin(), ints.end(), [](const mpz_class& z) { return sgn(z) != 0; });
  if (sgn(*first) < 0) g = -g;
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = Rational(ints[i] / g);
  return x;
}

RationalMatrix block(const RationalMatrix& w, const RationalMatrix& x, const RationalMatrix& y,
                     const RationalMatrix& z) {
  if (w.rows() != x.rows() || y.rows() != z.rows() || w.cols() != y.cols() || x.cols() != z.cols()) {
    throw DimensionError("block: blocks are not conformable");
  }
  const std::size_t top = w.rows();
  const std::size_t left = w.cols();
  RationalMatrix out(top + y.rows(), left + x.cols());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      if (i < top) {
        out(i, j) = j < left ? w(i, j) : x(i, j - left);
      } else {
        out(i, j) = j < left ? y(i - top, j) : z(i - top, j - left);
      }
    }
  }
  return out;
}

Rational schur_complement_det(const RationalMatrix& w, const RationalMatrix& x, const RationalMatrix& y,
                              const RationalMatrix& z) {
  require_square(w, "schur_complement_det");
  require_square(z, "schur_complement_det");
  if (x.rows() != w.rows() || x.cols() != z.rows() || y.rows() != z.rows() || y.cols() != w.cols()) {
    throw DimensionError("schur_complement_det: blocks are not conformable");
  }
  return det(z) * det(w - x * inverse(z) * y);
}

}  // namespace cubedist
