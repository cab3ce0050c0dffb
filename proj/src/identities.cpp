#include <cubedist/identities.hpp>

namespace cubedist {

Rational det_via_lemma1(const PointSet& s) {
  require_normalized(s, "det_via_lemma1");
  const auto d = derive(s);
  const auto m = static_cast<unsigned>(s.m());
  return alternating_sign(m - 1) * power_of_two(m - 1) * det(bordered(d.G, d.u, 0));
}

Rational gram_quad(const PointSet& s) {
  require_normalized(s, "gram_quad");
  if (!linear_independent(s)) throw DependenceError("gram_quad: x_1..x_m are linearly dependent");
  const auto d = derive(s);
  return quad_form_inv(d.G, d.u);
}

Rational det_via_thm2(const PointSet& s) {
  require_normalized(s, "det_via_thm2");
  if (!linear_independent(s)) throw DependenceError("det_via_thm2: x_1..x_m are linearly dependent");
  const auto d = derive(s);
  const auto m = static_cast<unsigned>(s.m());
  return alternating_sign(m) * power_of_two(m - 1) * det(d.G) * quad_form_inv(d.G, d.u);
}

Rational det_via_graham_winkler(const PointSet& s) {
  const PointSet t = normalize(s);
  const unsigned n = t.dimension();
  if (t.m() != n || !linear_independent(t)) {
    throw DependenceError("det_via_graham_winkler: needs n+1 affinely independent points");
  }
  return alternating_sign(n) * Rational(n) * power_of_two(n - 1) * det(derive(t).G);
}

RationalVector kernel_witness(const PointSet& s) {
  require_normalized(s, "kernel_witness");
  const auto d = derive(s);
  // Columns of B^T are x_1..x_m; a null vector of B^T is a dependence.
  const auto dependence = nullspace_vector(d.B.transpose());
  if (!dependence) throw NoDependenceError("kernel_witness: x_1..x_m are linearly independent");

  RationalVector c(s.size());
  Rational total = 0;
  for (std::size_t j = 0; j < dependence->size(); ++j) {
    c[j + 1] = (*dependence)[j];
    total += c[j + 1];
  }
  c[0] = -total;
  return c;
}

Rational thm4_bordered_det(const PointSet& s) {
  require_normalized(s, "thm4_bordered_det");
  const auto d = derive(s);
  const auto m = static_cast<unsigned>(s.m());
  const Rational direct = det(bordered(d.D, ones(s.size()), 0));
  const Rational formula = alternating_sign(m - 1) * power_of_two(m) * det(d.G);
  if (direct != formula) {
    throw IdentityViolation("bordered determinant " + to_string(direct) + " != " + to_string(formula));
  }
  return direct;
}

Rational dinv_ones(const PointSet& s) { return quad_form_inv(distance_matrix(s), ones(s.size())); }

DetReport full_report(const PointSet& input) {
  const PointSet s = normalize(input);
  const auto d = derive(s);

  DetReport r;
  r.n = s.dimension();
  r.m = s.m();
  r.det_D = det(d.D);
  r.det_G = det(d.G);
  r.vol_sq = r.det_G;
  r.affinely_independent = linear_independent(s);
  if (r.affinely_independent) {
    r.gram_quad = quad_form_inv(d.G, d.u);
    r.dinv_ones = quad_form_inv(d.D, ones(s.size()));
  }
  return r;
}

}  // namespace cubedist
