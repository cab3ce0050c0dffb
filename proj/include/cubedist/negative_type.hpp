#pragma once

// p-negative type of cube subsets and the supremal negative type through the
// zeros of det(D_p) and of the bordered determinant det [[0, 1^T], [1, D_p]].
//
// The bordered determinant equals -det(D_p) <D_p^{-1}1, 1> wherever D_p is
// invertible, so tracking it avoids inverting D_p near its own singularities.

#include <cubedist/hamming.hpp>

#include <Eigen/Dense>

#include <stdexcept>
#include <utility>

namespace cubedist {

class NotNegativeTypeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PMetricMatrix {
  double p = 1.0;
  Eigen::MatrixXd entries;
};

enum class RootKind {
  determinant,     // det(D_p) vanishes first
  bordered,        // <D_p^{-1}1, 1> vanishes first
  none_below_cap,  // no zero in [1, cap]; wp is only a lower bound
  infinite,        // discrete metric, never searched
};

const char* to_string(RootKind kind);

struct NegTypeReport {
  double wp = 1.0;
  RootKind root_kind = RootKind::determinant;
  double p_lo = 1.0;
  double p_hi = 1.0;
  // |value at wp| relative to the Hadamard bound of the matrix.
  double residual = 0.0;
  double cap = 16.0;
  // True when wp came from exact rational arithmetic.
  bool exact = false;
};

struct ScanOptions {
  double cap = 16.0;
  double tol = 1e-9;    // bisection bracket width and eigenvalue tolerance
  double grid = 0.125;  // coarse scan step
};

/// D_p = (d(x_i, x_j)^p). Throws std::domain_error when p < 1.
PMetricMatrix dp_matrix(const PointSet& s, double p);

/// Largest eigenvalue of the form sum D_p(i,j) xi_i xi_j restricted to
/// sum xi = 0, after scaling D_p to unit max entry.
double restricted_form_max_eigenvalue(const PointSet& s, double p);

/// Whether the restricted form is negative semidefinite within tol.
bool is_p_negative_type(const PointSet& s, double p, double tol = 1e-9);

/// Supremal negative type. Affinely dependent sets return 1 exactly
/// (det(D_1) = 0 checked in rational arithmetic); otherwise scans
/// det(D_p) and the bordered determinant over [1, cap] and bisects the
/// earliest zero.
NegTypeReport sanchez_wp(const PointSet& s, const ScanOptions& options = {});

/// Same scan for an arbitrary symmetric base matrix B, with the family
/// M(q) = B^(q * exponent_scale) entrywise, q in [1, cap].
NegTypeReport scan_supremal_negative_type(const Eigen::MatrixXd& base, double exponent_scale,
                                          const ScanOptions& options);

/// det(D_p) != 0 and <D_p^{-1}1, 1> != 0. Exact at p = 1, thresholded
/// otherwise. Throws NotNegativeTypeError when the set is not of
/// p-negative type.
bool strict_p_negative_type(const PointSet& s, double p, const ScanOptions& options = {});

struct MuruganClassification {
  bool affine_independent = false;
  bool strict_1_neg_type = false;
  bool wp_exceeds_1 = false;

  bool consistent() const {
    return affine_independent == strict_1_neg_type && strict_1_neg_type == wp_exceeds_1;
  }
};

MuruganClassification murugan_classify(const PointSet& s, const ScanOptions& options = {});

/// (wp of (X, d_p), p * wp of (X, d_1)). d_p(x, y) = d_1(x, y)^{1/p} on the
/// cube, so the first value is scanned over q in [1, p * cap] on the
/// matrices D^{q/p}. p = infinity yields (inf, inf) without a scan.
/// Throws CapExceededError when d_1 has no zero below the cap.
std::pair<double, double> transform_scaling_check(const PointSet& s, double p, const ScanOptions& options = {});

}  // namespace cubedist
