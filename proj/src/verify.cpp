#include <cubedist/verify.hpp>

#include <cubedist/identities.hpp>

#include <algorithm>
#include <random>
#include <thread>

namespace cubedist {

namespace {

enum IdentityCheck : std::size_t {
  kDetFormula,
  kAffineCriterion,
  kKernelWitness,
  kDetFactorization,
  kFullDimensionQuad,
  kBorderedDet,
  kDinvGramProduct,
  kSimplexDet,
  kIdentityCheckCount
};

enum TreeCheck : std::size_t {
  kTreeIsometry,
  kGrahamPollak,
  kGrahamLovasz,
  kTwoOverN,
  kTreeAffine,
  kTreeCheckCount
};

void record(CheckTally& t, bool ok) { ++(ok ? t.passed : t.failed); }

void add_into(std::vector<CheckTally>& into, const std::vector<CheckTally>& from) {
  for (std::size_t i = 0; i < into.size(); ++i) {
    into[i].passed += from[i].passed;
    into[i].failed += from[i].failed;
  }
}

template <typename Work>
std::vector<CheckTally> run_split(std::uint64_t total, unsigned workers, std::vector<CheckTally> (*make)(),
                                  Work work) {
  workers = std::max(1u, workers);
  std::vector<std::vector<CheckTally>> partial(workers, make());
  {
    std::vector<std::jthread> threads;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t len = total / workers + (w < total % workers ? 1 : 0);
      threads.emplace_back([&, w, begin, len] { work(begin, begin + len, partial[w]); });
      begin += len;
    }
  }
  std::vector<CheckTally> out = make();
  for (const auto& p : partial) add_into(out, p);
  return out;
}

}  // namespace

bool VerifySummary::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.failed == 0; });
}

std::vector<CheckTally> make_identity_tallies() {
  return {{"det_formula"},    {"affine_criterion"}, {"kernel_witness"}, {"det_factorization"},
          {"full_dimension_quad"},  {"bordered_det"},         {"dinv_gram_product"},     {"simplex_det"}};
}

std::vector<CheckTally> make_tree_tallies() {
  return {{"tree_isometry"}, {"graham_pollak"}, {"graham_lovasz"}, {"tree_two_over_n"}, {"tree_affine"}};
}

void check_point_set(const PointSet& input, std::vector<CheckTally>& tallies, bool inject_fault) {
  const PointSet s = normalize(input);
  const auto n = s.dimension();
  const auto m = static_cast<unsigned>(s.m());
  const DerivedMatrices d = derive(s);
  const Rational det_d = det(distance_matrix(input));
  const bool independent = linear_independent(s);

  Rational formula = det_via_lemma1(s);
  if (inject_fault) formula += 1;
  record(tallies[kDetFormula], formula == det_d);
  record(tallies[kAffineCriterion], (det_d != 0) == independent);

  const Rational bordered_direct = det(bordered(d.D, ones(s.size()), 0));
  record(tallies[kBorderedDet], bordered_direct == alternating_sign(m - 1) * power_of_two(m) * det(d.G));

  if (!independent) {
    const RationalVector c = kernel_witness(s);
    const RationalVector dc = d.D * c;
    const bool nonzero = std::any_of(c.begin(), c.end(), [](const Rational& q) { return sgn(q) != 0; });
    const bool annihilated = std::all_of(dc.begin(), dc.end(), [](const Rational& q) { return sgn(q) == 0; });
    Rational sum = 0;
    for (const auto& q : c) sum += q;
    record(tallies[kKernelWitness], det_d == 0 && nonzero && annihilated && sum == 0);
    return;
  }

  record(tallies[kDetFactorization], det_via_thm2(s) == det_d && det_d != 0);
  const Rational quad = gram_quad(s);
  const Rational dinv = dinv_ones(s);
  record(tallies[kDinvGramProduct], dinv * quad == 2 && sgn(dinv) > 0);
  if (m == n) {
    record(tallies[kFullDimensionQuad], quad == n);
    record(tallies[kSimplexDet], det_d == det_via_graham_winkler(input));
  }
}

void check_tree(const UnweightedTree& t, std::vector<CheckTally>& tallies) {
  const RationalMatrix d = tree_distance_matrix(t);
  const PointSet image = embed_tree(t);
  const Rational two_over_n = fraction(2, static_cast<long>(t.edge_count()));

  record(tallies[kTreeIsometry], distance_matrix(image) == d && image.normalized());
  record(tallies[kGrahamPollak], det(d) == graham_pollak_det(t));
  record(tallies[kGrahamLovasz], d * graham_lovasz_inverse(t) == RationalMatrix::identity(t.vertex_count()));
  record(tallies[kTwoOverN], tree_dinv_ones(t) == two_over_n && quad_form_inv(d, ones(t.vertex_count())) == two_over_n);
  record(tallies[kTreeAffine], affinely_independent(image));
}

PointSet random_normalized_set(unsigned n, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), n};
  std::mt19937_64 engine(seq);
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t max_m = std::min<std::uint64_t>(2 * n, mask);
  const std::uint64_t m = 1 + engine() % max_m;
  std::vector<std::uint64_t> bits{0};
  while (bits.size() < m + 1) {
    const std::uint64_t x = engine() & mask;
    if (x != 0 && std::find(bits.begin(), bits.end(), x) == bits.end()) bits.push_back(x);
  }
  return PointSet::from_bits(n, bits);
}

VerifySummary verify_identities(const VerifyOptions& options) {
  VerifySummary summary;
  summary.checks = make_identity_tallies();

  for (unsigned n = kMinDimension; n <= options.n_cap; ++n) {
    // Every nonempty subset of the 2^n - 1 nonzero points, encoded as a mask.
    const std::uint64_t universe = (std::uint64_t{1} << n) - 1;
    const std::uint64_t total = (std::uint64_t{1} << universe) - 1;
    auto part = run_split(total, options.workers, make_identity_tallies,
                          [&](std::uint64_t lo, std::uint64_t hi, std::vector<CheckTally>& t) {
                            std::vector<std::uint64_t> bits;
                            for (std::uint64_t subset = lo + 1; subset <= hi; ++subset) {
                              bits.assign(1, 0);
                              for (std::uint64_t p = 1; p <= universe; ++p) {
                                if ((subset >> (p - 1)) & 1u) bits.push_back(p);
                              }
                              check_point_set(PointSet::from_bits(n, bits), t, options.inject_fault);
                            }
                          });
    add_into(summary.checks, part);
  }

  for (unsigned n = std::max(options.n_cap + 1, kMinDimension); n <= options.random_n_max; ++n) {
    auto part = run_split(options.samples, options.workers, make_identity_tallies,
                          [&](std::uint64_t lo, std::uint64_t hi, std::vector<CheckTally>& t) {
                            for (std::uint64_t i = lo; i < hi; ++i) {
                              check_point_set(random_normalized_set(n, options.seed, i), t, options.inject_fault);
                            }
                          });
    add_into(summary.checks, part);
  }

  std::vector<CheckTally> trees = make_tree_tallies();
  for (std::size_t k = 3; k <= options.tree_vertex_cap; ++k) {
    auto part = run_split(labeled_tree_count(k), options.workers, make_tree_tallies,
                          [&](std::uint64_t lo, std::uint64_t hi, std::vector<CheckTally>& t) {
                            for_each_labeled_tree(k, lo, hi - lo, [&](const UnweightedTree& tree) { check_tree(tree, t); });
                          });
    add_into(trees, part);
  }
  summary.checks.insert(summary.checks.end(), trees.begin(), trees.end());
  return summary;
}

nlohmann::ordered_json to_json(const VerifySummary& summary) {
  nlohmann::ordered_json j;
  j["all_passed"] = summary.all_passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : summary.checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}});
  }
  return j;
}

}  // namespace cubedist
