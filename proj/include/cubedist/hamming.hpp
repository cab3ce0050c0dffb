#pragma once

#include <cubedist/linalg.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cubedist {

inline constexpr unsigned kMinDimension = 2;
inline constexpr unsigned kMaxDimension = 64;

/// Raised for point lists that do not form a metric space of distinct points.
class DegenerateMetricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A vertex of {0,1}^n packed into one machine word.
///
/// Coordinate k is the k-th character of the textual form and lives in bit
/// (n - 1 - k), so integer order of bits() is lexicographic order of the
/// strings.
class HammingPoint {
 public:
  HammingPoint(unsigned dimension, std::uint64_t bits);

  static HammingPoint zero(unsigned dimension) { return HammingPoint(dimension, 0); }
  /// Parses a string of '0'/'1' characters; its length is the dimension.
  static HammingPoint parse(std::string_view text);

  unsigned dimension() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int coordinate(unsigned k) const { return static_cast<int>((bits_ >> (n_ - 1 - k)) & 1u); }
  unsigned weight() const;
  std::string to_string() const;

  friend bool operator==(const HammingPoint&, const HammingPoint&) = default;
  friend auto operator<=>(const HammingPoint&, const HammingPoint&) = default;

 private:
  unsigned n_;
  std::uint64_t bits_;
};

/// Coordinatewise XOR (the group operation of the cube).
HammingPoint operator^(const HammingPoint& x, const HammingPoint& y);

/// l1 distance, i.e. popcount of x XOR y.
unsigned distance(const HammingPoint& x, const HammingPoint& y);

/// Real dot product x . y of the 0/1 vectors.
unsigned dot(const HammingPoint& x, const HammingPoint& y);

/// An ordered list x_0, ..., x_m (m >= 1) of distinct points of one cube.
/// x_0 is the base point.
class PointSet {
 public:
  explicit PointSet(std::vector<HammingPoint> points);

  static PointSet parse(const std::vector<std::string>& points);
  static PointSet from_bits(unsigned dimension, std::span<const std::uint64_t> bits);

  unsigned dimension() const { return points_.front().dimension(); }
  /// Number of non-base points.
  std::size_t m() const { return points_.size() - 1; }
  std::size_t size() const { return points_.size(); }
  const std::vector<HammingPoint>& points() const { return points_; }
  const HammingPoint& operator[](std::size_t i) const { return points_[i]; }

  /// True when x_0 is the zero vector.
  bool normalized() const { return points_.front().bits() == 0; }

  std::vector<std::string> to_strings() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<HammingPoint> points_;
};

/// B (rows x_1..x_m), G = B B^T, u = diag(G) and the (m+1)x(m+1) distance
/// matrix D of a normalized point set.
struct DerivedMatrices {
  RationalMatrix B;
  RationalMatrix G;
  RationalVector u;
  RationalMatrix D;
};

/// Translates the set by x_0 so that the base point becomes 0. Distances are
/// unchanged.
PointSet normalize(const PointSet& s);

/// Pairwise distance matrix, straight from popcounts. Translation invariant.
RationalMatrix distance_matrix(const PointSet& s);

/// Builds B, G, u, D. Normalizes internally when x_0 != 0.
DerivedMatrices derive(const PointSet& s);

/// Whether {x_1, ..., x_m} is linearly independent over R. Exact rank test.
/// Requires a normalized set.
bool linear_independent(const PointSet& s);

/// Whether {x_0, ..., x_m} is affinely independent.
bool affinely_independent(const PointSet& s);

/// Throws std::invalid_argument when x_0 != 0.
void require_normalized(const PointSet& s, const char* operation);

}  // namespace cubedist
