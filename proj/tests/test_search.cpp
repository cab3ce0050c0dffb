#include "support.hpp"

#include <cubedist/identities.hpp>
#include <cubedist/search.hpp>

#include <doctest.h>

#include <optional>

using namespace cubedist;

namespace {

// Minimum of the entry sum of D^{-1} over independent sets, by bitmask
// enumeration and Gauss-Jordan inversion.
std::optional<Rational> reference_minimum(unsigned n, std::size_t m) {
  const std::uint64_t universe = (std::uint64_t{1} << n) - 1;
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
    std::vector<std::uint64_t> bits{0};
    for (std::uint64_t p = 1; p <= universe; ++p)
      if ((mask >> (p - 1)) & 1u) bits.push_back(p);
    const auto s = PointSet::from_bits(n, bits);
    RationalMatrix inv;
    if (!testing::gauss_jordan_inverse(testing::brute_distance_matrix(s), inv)) continue;
    Rational sum = 0;
    for (std::size_t i = 0; i < inv.rows(); ++i)
      for (std::size_t j = 0; j < inv.cols(); ++j) sum += inv(i, j);
    if (!best || sum < *best) best = sum;
  }
  return best;
}

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("enumeration examples") {
    std::vector<std::vector<std::string>> seen;
    enumerate_normalized(2, 1, [&](const PointSet& s) { seen.push_back(s.to_strings()); });
    CHECK(seen == std::vector<std::vector<std::string>>{{"00", "01"}, {"00", "10"}, {"00", "11"}});

    std::size_t count = 0;
    enumerate_normalized(2, 3, [&](const PointSet& s) {
      ++count;
      CHECK(s == PointSet::parse({"00", "01", "10", "11"}));
    });
    CHECK(count == 1);

    count = 0;
    enumerate_normalized(3, 2, [&](const PointSet&) { ++count; });
    CHECK(count == 21);

    CHECK_THROWS_AS((enumerate_normalized(2, 4, [](const PointSet&) {})), std::invalid_argument);
    CHECK_THROWS_AS((enumerate_normalized(2, 0, [](const PointSet&) {})), std::invalid_argument);
    CHECK_THROWS_AS((enumerate_normalized(1, 1, [](const PointSet&) {})), std::invalid_argument);
  }

  TEST_CASE("enumeration order is lexicographic and complete") {
    for (unsigned n = 2; n <= 4; ++n) {
      for (std::size_t m = 1; m <= std::min<std::size_t>(4, (1u << n) - 1); ++m) {
        std::vector<std::vector<std::uint64_t>> all;
        enumerate_normalized(n, m, [&](const PointSet& s) {
          std::vector<std::uint64_t> bits;
          for (const auto& p : s.points()) bits.push_back(p.bits());
          CHECK(bits.front() == 0);
          CHECK(std::is_sorted(bits.begin() + 1, bits.end()));
          all.push_back(bits);
        });
        CHECK(all.size() == binomial((1u << n) - 1, m));
        CHECK(all.size() == normalized_subset_count(n, m));
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
      }
    }
  }

  TEST_CASE("enumerator resumes from a combination index") {
    std::vector<std::vector<std::uint64_t>> all;
    SubsetEnumerator full(4, 3);
    std::vector<std::uint64_t> cur;
    while (full.next(cur)) all.push_back(cur);
    for (std::uint64_t first : {0ULL, 1ULL, 17ULL, 200ULL, 454ULL}) {
      SubsetEnumerator part(4, 3, first);
      REQUIRE(part.next(cur));
      CHECK(cur == all[first]);
    }
    SubsetEnumerator past(4, 3, all.size());
    CHECK_FALSE(past.next(cur));
  }

  TEST_CASE("subset counts saturate") {
    CHECK(normalized_subset_count(5, 5) == 169911);
    CHECK(normalized_subset_count(3, 7) == 1);
    CHECK(normalized_subset_count(3, 8) == 0);
    CHECK(normalized_subset_count(64, 32) == UINT64_MAX);
  }

  TEST_CASE("minimum examples") {
    const auto r33 = min_dinv_ones(3, 3);
    CHECK(r33.min_value == fraction(2, 3));
    CHECK(r33.violations.empty());
    CHECK(r33.sets_examined == 35);
    CHECK(r33.slice_mismatches == 0);

    const auto r31 = min_dinv_ones(3, 1);
    CHECK(r31.min_value == fraction(2, 3));
    REQUIRE(r31.witness.has_value());
    CHECK(*r31.witness == PointSet::parse({"000", "111"}));

    const auto r55 = min_dinv_ones(5, 5);
    CHECK(r55.sets_examined == 169911);
    CHECK(r55.min_value == fraction(2, 5));
    CHECK(r55.slice_mismatches == 0);
    CHECK(r55.violations.empty());
  }

  TEST_CASE("minimum matches the reference enumeration") {
    for (unsigned n = 2; n <= 3; ++n) {
      for (std::size_t m = 1; m <= (1u << n) - 1; ++m) {
        CAPTURE(n);
        CAPTURE(m);
        const auto r = min_dinv_ones(n, m);
        CHECK(r.min_value == reference_minimum(n, m));
        CHECK(r.min_value.has_value() == (m <= n));
        if (r.witness) CHECK(dinv_ones(*r.witness) == *r.min_value);
      }
    }
  }

  TEST_CASE("m = 1 slice is antipodal") {
    for (unsigned n = 2; n <= 8; ++n) {
      const auto r = min_dinv_ones(n, 1);
      CHECK(r.min_value == fraction(2, n));
      REQUIRE(r.witness.has_value());
      CHECK((*r.witness)[1].weight() == n);
    }
  }

  TEST_CASE("independent values") {
    CHECK(independent_dinv_ones(3, {0b100, 0b010, 0b111}) == fraction(2, 3));
    CHECK_FALSE(independent_dinv_ones(2, {0b01, 0b10, 0b11}).has_value());
  }

  TEST_CASE("budget guard") {
    SearchOptions opts;
    opts.budget = 1000;
    try {
      (void)min_dinv_ones(5, 5, opts);
      FAIL("expected BudgetExceededError");
    } catch (const BudgetExceededError& e) {
      CHECK(e.required() == 169911);
    }
  }

  TEST_CASE("random probe") {
    const auto empty = random_probe(8, 6, 0, 1);
    CHECK(empty.sets_examined == 0);
    CHECK_FALSE(empty.min_value.has_value());
    CHECK(empty.seed == 1u);

    const auto a = random_probe(6, 4, 500, 99);
    const auto b = random_probe(6, 4, 500, 99);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(a.sets_examined == 500);
    CHECK(a.violations.empty());
    const auto c = random_probe(6, 4, 500, 100);
    CHECK(to_json(a).dump() != to_json(c).dump());

    CHECK_THROWS_AS(random_probe(2, 4, 10, 0), std::invalid_argument);
  }

  TEST_CASE("worker count does not change results") {
    for (unsigned workers : {2u, 3u, 4u, 7u}) {
      SearchOptions opts;
      opts.workers = workers;
      CHECK(to_json(min_dinv_ones(4, 3, opts)).dump() == to_json(min_dinv_ones(4, 3)).dump());
      CHECK(to_json(random_probe(7, 5, 300, 5, opts)).dump() == to_json(random_probe(7, 5, 300, 5)).dump());
    }
  }

  TEST_CASE("random minimum never beats the exhaustive one") {
    for (std::size_t m = 1; m <= 4; ++m) {
      const auto exhaustive = min_dinv_ones(4, m);
      const auto random = random_probe(4, m, 200, 3);
      if (random.min_value) CHECK(*random.min_value >= *exhaustive.min_value);
    }
  }

  TEST_CASE("JSON layout") {
    const auto j = to_json(min_dinv_ones(3, 3));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"n", "m", "mode", "sets_examined", "independent_count", "bound",
                                           "min_value", "witness", "violations", "slice_mismatches", "seed"});
    CHECK(j["min_value"] == "2/3");
    CHECK(j["seed"].is_null());
  }
}
