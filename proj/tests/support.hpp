#pragma once

// Seeded generators and slow reference implementations shared by the suites.

#include <cubedist/hamming.hpp>
#include <cubedist/linalg.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing {

using cubedist::HammingPoint;
using cubedist::PointSet;
using cubedist::Rational;
using cubedist::RationalMatrix;
using cubedist::RationalVector;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo = -5, long hi = 5) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = cubedist::fraction(uniform(rng, lo, hi), uniform(rng, 1, 3));
  }
  return m;
}

inline RationalMatrix random_symmetric(Rng& rng, std::size_t size, long lo = -5, long hi = 5) {
  RationalMatrix m = random_matrix(rng, size, size, lo, hi);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
  }
  return m;
}

inline RationalVector random_vector(Rng& rng, std::size_t dim, long lo = -5, long hi = 5) {
  RationalVector v(dim);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return v;
}

// Laplace expansion along the first row.
inline Rational laplace_det(const RationalMatrix& m) {
  const std::size_t k = m.rows();
  if (k == 0) return 1;
  if (k == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (m(0, c) == 0) continue;
    RationalMatrix minor(k - 1, k - 1);
    for (std::size_t i = 1; i < k; ++i) {
      for (std::size_t j = 0, jj = 0; j < k; ++j) {
        if (j != c) minor(i - 1, jj++) = m(i, j);
      }
    }
    const Rational term = m(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

// Textbook Gauss-Jordan on rationals; returns false when singular.
inline bool gauss_jordan_inverse(RationalMatrix a, RationalMatrix& out) {
  const std::size_t k = a.rows();
  out = RationalMatrix::identity(k);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a(pivot, col) == 0) ++pivot;
    if (pivot == k) return false;
    for (std::size_t j = 0; j < k; ++j) {
      std::swap(a(col, j), a(pivot, j));
      std::swap(out(col, j), out(pivot, j));
    }
    const Rational inv = 1 / a(col, col);
    for (std::size_t j = 0; j < k; ++j) {
      a(col, j) *= inv;
      out(col, j) *= inv;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < k; ++j) {
        a(i, j) -= f * a(col, j);
        out(i, j) -= f * out(col, j);
      }
    }
  }
  return true;
}

inline Rational gauss_det(RationalMatrix a) {
  const std::size_t k = a.rows();
  Rational d = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a(pivot, col) == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a(col, j), a(pivot, j));
      d = -d;
    }
    d *= a(col, col);
    for (std::size_t i = col + 1; i < k; ++i) {
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < k; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return d;
}

// Character-by-character Hamming distance on the textual form.
inline unsigned string_distance(const std::string& a, const std::string& b) {
  unsigned d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

inline RationalMatrix brute_distance_matrix(const PointSet& s) {
  const auto strings = s.to_strings();
  RationalMatrix d(s.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) d(i, j) = string_distance(strings[i], strings[j]);
  }
  return d;
}

// Distinct points of H_n, the first one arbitrary (not forced to zero).
inline PointSet random_point_set(Rng& rng, unsigned n, std::size_t count) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> bits;
  while (bits.size() < count) {
    const std::uint64_t x = rng() & mask;
    if (std::find(bits.begin(), bits.end(), x) == bits.end()) bits.push_back(x);
  }
  return PointSet::from_bits(n, bits);
}

inline PointSet with_zero_base(const PointSet& s) { return cubedist::normalize(s); }

inline bool all_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace testing
