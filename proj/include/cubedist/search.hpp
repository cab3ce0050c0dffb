#pragma once

// Exhaustive and randomized search for the minimum of <D^{-1}1, 1> over
// affinely independent subsets {0, x_1, ..., x_m} of H_n, checked against
// the lower bound 2/n.

#include <cubedist/hamming.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubedist {

class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

enum class SearchMode { exhaustive, random };

struct Violation {
  std::vector<std::string> points;
  Rational value;
};

struct SearchResult {
  unsigned n = 0;
  std::size_t m = 0;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t sets_examined = 0;
  std::uint64_t independent_count = 0;
  std::optional<Rational> min_value;
  // Lexicographically least set (by sorted bit patterns) attaining min_value.
  std::optional<PointSet> witness;
  std::vector<Violation> violations;
  std::optional<std::uint64_t> seed;
  // Independent sets with m = n whose value differs from 2/n. Always zero
  // unless the arithmetic is broken.
  std::uint64_t slice_mismatches = 0;
};

struct SearchOptions {
  unsigned workers = 1;
  std::uint64_t budget = 100'000'000;
};

/// C(2^n - 1, m), saturating at UINT64_MAX.
std::uint64_t normalized_subset_count(unsigned n, std::size_t m);

/// Walks m-subsets of the nonzero points of H_n in lexicographic order of
/// their sorted bit patterns, starting from combination index `first`.
class SubsetEnumerator {
 public:
  SubsetEnumerator(unsigned n, std::size_t m, std::uint64_t first = 0);

  /// The current subset as sorted nonzero bit patterns, or false when done.
  bool next(std::vector<std::uint64_t>& out);

 private:
  std::uint64_t universe_;  // 2^n - 1 candidate points, encoded 1..universe_
  std::vector<std::uint64_t> current_;
  bool done_ = false;
};

/// Every normalized set {0} + m-subset of H_n \ {0}, in enumeration order.
void enumerate_normalized(unsigned n, std::size_t m, const std::function<void(const PointSet&)>& visit);

/// <D^{-1}1, 1> when {0, points...} is affinely independent, else nullopt.
/// `points` are the nonzero bit patterns x_1..x_m.
std::optional<Rational> independent_dinv_ones(unsigned n, const std::vector<std::uint64_t>& points);

SearchResult min_dinv_ones(unsigned n, std::size_t m, const SearchOptions& options = {});

SearchResult random_probe(unsigned n, std::size_t m, std::uint64_t trials, std::uint64_t seed,
                          const SearchOptions& options = {});

const char* to_string(SearchMode mode);
nlohmann::ordered_json to_json(const SearchResult& result);

}  // namespace cubedist
