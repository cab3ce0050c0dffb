#include <cubedist/negative_type.hpp>

#include <cubedist/identities.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace cubedist {

const char* to_string(RootKind kind) {
  switch (kind) {
    case RootKind::determinant:
      return "determinant";
    case RootKind::bordered:
      return "bordered";
    case RootKind::none_below_cap:
      return "none-below-cap";
    case RootKind::infinite:
      return "infinite";
  }
  return "unknown";
}

namespace {

constexpr double kZeroThreshold = 1e-9;

void require_p(double p) {
  if (!(p >= 1.0)) throw std::domain_error("exponent p must be >= 1");
}

Eigen::MatrixXd distances_as_double(const PointSet& s) {
  const std::size_t k = s.size();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double v = distance(s[i], s[j]);
      d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      d(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
    }
  }
  return d;
}

Eigen::MatrixXd entrywise_power(const Eigen::MatrixXd& base, double exponent) {
  // Zero diagonal stays zero for every positive exponent.
  return base.array().pow(exponent).matrix();
}

Eigen::MatrixXd bordered_ones(const Eigen::MatrixXd& m) {
  const Eigen::Index k = m.rows();
  Eigen::MatrixXd b(k + 1, k + 1);
  b(0, 0) = 0.0;
  b.row(0).tail(k).setOnes();
  b.col(0).tail(k).setOnes();
  b.bottomRightCorner(k, k) = m;
  return b;
}

// Sign and size of a determinant measured against the Hadamard bound, in log
// space so large exponents do not overflow.
struct DetSample {
  int sign = 0;
  double relative = 0.0;  // |det| / prod ||row_i||
  bool near_zero() const { return sign == 0 || relative <= kZeroThreshold; }
};

// Symmetric Ruiz equilibration S M S, S diagonal and positive, until every
// row's largest entry is close to 1. det keeps its sign.
Eigen::MatrixXd equilibrate(Eigen::MatrixXd m) {
  const Eigen::Index k = m.rows();
  Eigen::VectorXd s(k);
  for (int iter = 0; iter < 64; ++iter) {
    bool balanced = true;
    for (Eigen::Index i = 0; i < k; ++i) {
      const double r = m.row(i).cwiseAbs().maxCoeff();
      if (r == 0.0 || !std::isfinite(r)) return m;
      s(i) = 1.0 / std::sqrt(r);
      balanced = balanced && std::abs(r - 1.0) <= 1e-3;
    }
    if (balanced) break;
    m = s.asDiagonal() * m * s.asDiagonal();
  }
  return m;
}

DetSample sample_det(const Eigen::MatrixXd& raw) {
  const Eigen::MatrixXd m = equilibrate(raw);
  double log_hadamard = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double norm = m.row(i).norm();
    if (norm == 0.0) return {};
    log_hadamard += std::log(norm);
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  const auto& packed = lu.matrixLU();
  int sign = static_cast<int>(lu.permutationP().determinant());
  double log_abs = 0.0;
  for (Eigen::Index i = 0; i < packed.rows(); ++i) {
    const double pivot = packed(i, i);
    if (pivot == 0.0 || !std::isfinite(pivot)) return {};
    if (pivot < 0) sign = -sign;
    log_abs += std::log(std::abs(pivot));
  }
  return {sign, std::exp(log_abs - log_hadamard)};
}

struct Bracket {
  double lo;
  double hi;
  double residual;
};

// Bisects a sign change of `sample` on [lo, hi], where the sign at lo is
// lo_sign and neither endpoint is near zero.
template <typename Sampler>
Bracket bisect(Sampler&& sample, double lo, double hi, int lo_sign, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const DetSample s = sample(mid);
    if (s.near_zero()) return {mid, mid, s.relative};
    if (s.sign == lo_sign) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  return {lo, hi, sample(root).relative};
}

}  // namespace

PMetricMatrix dp_matrix(const PointSet& s, double p) {
  require_p(p);
  return {p, entrywise_power(distances_as_double(s), p)};
}

double restricted_form_max_eigenvalue(const PointSet& s, double p) {
  const Eigen::MatrixXd d = dp_matrix(s, p).entries;
  const Eigen::Index m = d.rows() - 1;
  // Basis e_i - e_0 of the hyperplane sum xi = 0.
  Eigen::MatrixXd r(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) r(i, j) = d(i + 1, j + 1) - d(i + 1, 0) - d(0, j + 1);
  }
  const double scale = d.maxCoeff();
  if (scale > 0) r /= scale;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(r, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().maxCoeff();
}

bool is_p_negative_type(const PointSet& s, double p, double tol) {
  return restricted_form_max_eigenvalue(s, p) <= tol;
}

NegTypeReport scan_supremal_negative_type(const Eigen::MatrixXd& base, double exponent_scale,
                                          const ScanOptions& options) {
  if (!(options.cap >= 1.0)) throw std::domain_error("cap must be >= 1");
  if (!(options.grid > 0.0) || !(options.tol > 0.0)) throw std::domain_error("grid and tol must be positive");

  auto sample_f = [&](double q) { return sample_det(entrywise_power(base, q * exponent_scale)); };
  auto sample_h = [&](double q) { return sample_det(bordered_ones(entrywise_power(base, q * exponent_scale))); };

  // Grid 1, 1 + step, ..., cap, plus the point where the exponent is exactly 1
  // (the integer matrix itself), where zeros of even multiplicity are common.
  std::vector<double> grid;
  for (long k = 0;; ++k) {
    const double q = 1.0 + static_cast<double>(k) * options.grid;
    if (q >= options.cap) break;
    grid.push_back(q);
  }
  grid.push_back(options.cap);
  const double unit_point = 1.0 / exponent_scale;
  if (unit_point > 1.0 && unit_point < options.cap) grid.push_back(unit_point);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  NegTypeReport report;
  report.cap = options.cap;

  DetSample prev_f = sample_f(grid.front());
  DetSample prev_h = sample_h(grid.front());
  if (prev_f.near_zero() || prev_h.near_zero()) {
    report.wp = report.p_lo = report.p_hi = grid.front();
    report.root_kind = prev_f.near_zero() ? RootKind::determinant : RootKind::bordered;
    report.residual = prev_f.near_zero() ? prev_f.relative : prev_h.relative;
    return report;
  }

  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double lo = grid[k - 1];
    const double hi = grid[k];
    const DetSample cur_f = sample_f(hi);
    const DetSample cur_h = sample_h(hi);

    std::optional<Bracket> best;
    RootKind best_kind = RootKind::determinant;
    auto consider = [&](const DetSample& prev, const DetSample& cur, auto& sampler, RootKind kind) {
      std::optional<Bracket> b;
      if (cur.sign != prev.sign && !cur.near_zero()) {
        b = bisect(sampler, lo, hi, prev.sign, options.tol);
      } else if (cur.near_zero()) {
        b = Bracket{hi, hi, cur.relative};
      }
      if (b && (!best || 0.5 * (b->lo + b->hi) < 0.5 * (best->lo + best->hi))) {
        best = b;
        best_kind = kind;
      }
    };
    consider(prev_f, cur_f, sample_f, RootKind::determinant);
    consider(prev_h, cur_h, sample_h, RootKind::bordered);

    if (best) {
      report.p_lo = best->lo;
      report.p_hi = best->hi;
      report.wp = 0.5 * (best->lo + best->hi);
      report.root_kind = best_kind;
      report.residual = best->residual;
      return report;
    }
    prev_f = cur_f;
    prev_h = cur_h;
  }

  report.root_kind = RootKind::none_below_cap;
  report.wp = options.cap;
  report.p_lo = options.cap;
  report.p_hi = std::numeric_limits<double>::infinity();
  report.residual = 0.0;
  return report;
}

NegTypeReport sanchez_wp(const PointSet& s, const ScanOptions& options) {
  if (det(distance_matrix(s)) == 0) {
    NegTypeReport r;
    r.wp = r.p_lo = r.p_hi = 1.0;
    r.root_kind = RootKind::determinant;
    r.cap = options.cap;
    r.exact = true;
    return r;
  }
  return scan_supremal_negative_type(distances_as_double(s), 1.0, options);
}

bool strict_p_negative_type(const PointSet& s, double p, const ScanOptions& options) {
  require_p(p);
  if (!is_p_negative_type(s, p, options.tol)) {
    throw NotNegativeTypeError("set is not of p-negative type at p = " + std::to_string(p));
  }
  if (p == 1.0) {
    const RationalMatrix d = distance_matrix(s);
    return det(d) != 0 && det(bordered(d, ones(s.size()), 0)) != 0;
  }
  const Eigen::MatrixXd dp = dp_matrix(s, p).entries;
  return !sample_det(dp).near_zero() && !sample_det(bordered_ones(dp)).near_zero();
}

MuruganClassification murugan_classify(const PointSet& s, const ScanOptions& options) {
  MuruganClassification c;
  c.affine_independent = affinely_independent(s);
  c.strict_1_neg_type = strict_p_negative_type(s, 1.0, options);
  const NegTypeReport r = sanchez_wp(s, options);
  c.wp_exceeds_1 = r.root_kind == RootKind::none_below_cap || r.wp > 1.0 + options.tol;
  return c;
}

std::pair<double, double> transform_scaling_check(const PointSet& s, double p, const ScanOptions& options) {
  if (std::isinf(p) && p > 0) {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
  }
  require_p(p);
  const NegTypeReport base = sanchez_wp(s, options);
  if (base.root_kind == RootKind::none_below_cap) {
    throw CapExceededError("supremal negative type of d_1 exceeds the cap");
  }
  ScanOptions scaled = options;
  scaled.cap = options.cap * p;
  const NegTypeReport lp = scan_supremal_negative_type(distances_as_double(s), 1.0 / p, scaled);
  if (lp.root_kind == RootKind::none_below_cap) {
    throw CapExceededError("supremal negative type of d_p exceeds the cap");
  }
  return {lp.wp, p * base.wp};
}

}  // namespace cubedist
