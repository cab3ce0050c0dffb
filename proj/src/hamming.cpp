#include <cubedist/hamming.hpp>

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace cubedist {

namespace {

std::uint64_t dimension_mask(unsigned n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void check_dimension(unsigned n) {
  if (n < kMinDimension || n > kMaxDimension) {
    throw DimensionError("cube dimension must be in [2, 64], got " + std::to_string(n));
  }
}

}  // namespace

HammingPoint::HammingPoint(unsigned dimension, std::uint64_t bits) : n_(dimension), bits_(bits) {
  check_dimension(dimension);
  if ((bits & ~dimension_mask(dimension)) != 0) throw DimensionError("bit pattern exceeds cube dimension");
}

HammingPoint HammingPoint::parse(std::string_view text) {
  check_dimension(static_cast<unsigned>(text.size()));
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("coordinate must be '0' or '1'");
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return HammingPoint(static_cast<unsigned>(text.size()), bits);
}

unsigned HammingPoint::weight() const { return static_cast<unsigned>(std::popcount(bits_)); }

std::string HammingPoint::to_string() const {
  std::string s(n_, '0');
  for (unsigned k = 0; k < n_; ++k) s[k] = static_cast<char>('0' + coordinate(k));
  return s;
}

HammingPoint operator^(const HammingPoint& x, const HammingPoint& y) {
  if (x.dimension() != y.dimension()) throw DimensionError("points live in different cubes");
  return HammingPoint(x.dimension(), x.bits() ^ y.bits());
}

unsigned distance(const HammingPoint& x, const HammingPoint& y) { return (x ^ y).weight(); }

unsigned dot(const HammingPoint& x, const HammingPoint& y) {
  if (x.dimension() != y.dimension()) throw DimensionError("points live in different cubes");
  return static_cast<unsigned>(std::popcount(x.bits() & y.bits()));
}

PointSet::PointSet(std::vector<HammingPoint> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw DegenerateMetricError("a point set needs at least two points");
  const unsigned n = points_.front().dimension();
  std::unordered_set<std::uint64_t> seen;
  for (const auto& p : points_) {
    if (p.dimension() != n) throw DimensionError("points live in different cubes");
    if (!seen.insert(p.bits()).second) throw DegenerateMetricError("duplicate point " + p.to_string());
  }
}

PointSet PointSet::parse(const std::vector<std::string>& points) {
  std::vector<HammingPoint> out;
  out.reserve(points.size());
  for (const auto& s : points) out.push_back(HammingPoint::parse(s));
  return PointSet(std::move(out));
}

PointSet PointSet::from_bits(unsigned dimension, std::span<const std::uint64_t> bits) {
  std::vector<HammingPoint> out;
  out.reserve(bits.size());
  for (auto b : bits) out.emplace_back(dimension, b);
  return PointSet(std::move(out));
}

std::vector<std::string> PointSet::to_strings() const {
  std::vector<std::string> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.to_string());
  return out;
}

PointSet normalize(const PointSet& s) {
  if (s.normalized()) return s;
  std::vector<HammingPoint> out;
  out.reserve(s.size());
  for (const auto& p : s.points()) out.push_back(p ^ s[0]);
  return PointSet(std::move(out));
}

RationalMatrix distance_matrix(const PointSet& s) {
  RationalMatrix d(s.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      d(i, j) = distance(s[i], s[j]);
      d(j, i) = d(i, j);
    }
  }
  return d;
}

DerivedMatrices derive(const PointSet& input) {
  const PointSet s = normalize(input);
  const std::size_t m = s.m();
  const unsigned n = s.dimension();

  DerivedMatrices out{RationalMatrix(m, n), RationalMatrix(m, m), RationalVector(m), distance_matrix(s)};
  for (std::size_t i = 0; i < m; ++i) {
    const HammingPoint& xi = s[i + 1];
    for (unsigned k = 0; k < n; ++k) out.B(i, k) = xi.coordinate(k);
    for (std::size_t j = 0; j < m; ++j) out.G(i, j) = dot(xi, s[j + 1]);
    out.u[i] = xi.weight();
  }
  return out;
}

void require_normalized(const PointSet& s, const char* operation) {
  if (!s.normalized()) {
    throw std::invalid_argument(std::string(operation) + ": point set must be normalized (x_0 = 0)");
  }
}

bool linear_independent(const PointSet& s) {
  require_normalized(s, "linear_independent");
  const std::size_t m = s.m();
  if (m > s.dimension()) return false;
  RationalMatrix b(m, s.dimension());
  for (std::size_t i = 0; i < m; ++i) {
    for (unsigned k = 0; k < s.dimension(); ++k) b(i, k) = s[i + 1].coordinate(k);
  }
  return rank(b) == m;
}

bool affinely_independent(const PointSet& s) { return linear_independent(normalize(s)); }

}  // namespace cubedist
