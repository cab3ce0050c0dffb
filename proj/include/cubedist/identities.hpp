#pragma once

// Closed-form determinant identities for distance matrices of cube subsets,
// each evaluated exactly so it can be compared against direct elimination.
//
// Notation: for a normalized set {0, x_1, ..., x_m} in H_n, G is the Gram
// matrix of x_1..x_m, u its diagonal and D the (m+1)x(m+1) distance matrix.

#include <cubedist/hamming.hpp>

#include <optional>
#include <stdexcept>

namespace cubedist {

/// Raised when an operation needs {x_1, ..., x_m} linearly independent.
class DependenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by kernel_witness on an independent set.
class NoDependenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when two independently computed sides of an identity disagree.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DetReport {
  std::size_t n = 0;
  std::size_t m = 0;
  Rational det_D;
  Rational det_G;
  Rational vol_sq;
  std::optional<Rational> gram_quad;  // <G^{-1}u, u>; absent when G is singular
  std::optional<Rational> dinv_ones;  // <D^{-1}1, 1>; absent when D is singular
  bool affinely_independent = false;
};

/// (-1)^{m-1} 2^{m-1} det [[0, u^T], [u, G]].
Rational det_via_lemma1(const PointSet& s);

/// (-1)^m 2^{m-1} det(G) <G^{-1}u, u>. Throws DependenceError when
/// {x_1..x_m} is dependent.
Rational det_via_thm2(const PointSet& s);

/// (-1)^n n 2^{n-1} det(G), valid for affinely independent sets with m = n.
/// Throws DependenceError otherwise.
Rational det_via_graham_winkler(const PointSet& s);

/// A nonzero c in ker(D) with sum c_j = 0, built from a linear dependence
/// sum_{j>=1} c_j x_j = 0 by setting c_0 = -sum c_j. Throws NoDependenceError
/// when {x_1..x_m} is independent.
RationalVector kernel_witness(const PointSet& s);

/// <G^{-1}u, u>. Throws DependenceError on singular G.
Rational gram_quad(const PointSet& s);

/// Evaluates det [[0, 1^T], [1, D]] directly and as (-1)^{m-1} 2^m det(G);
/// returns the common value or throws IdentityViolation.
Rational thm4_bordered_det(const PointSet& s);

/// <D^{-1}1, 1> by exact solve against D. Throws SingularMatrixError when the
/// set is affinely dependent. Any base point is accepted.
Rational dinv_ones(const PointSet& s);

/// Everything above for one set; fields needing invertibility are absent
/// instead of zero.
DetReport full_report(const PointSet& s);

}  // namespace cubedist
