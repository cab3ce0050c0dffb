#include <cubedist/search.hpp>

#include <cubedist/identities.hpp>

#include <algorithm>
#include <limits>
#include <random>
#include <thread>

namespace cubedist {

BudgetExceededError::BudgetExceededError(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("enumeration needs " + std::to_string(required) + " subsets, budget is " +
                         std::to_string(budget)),
      required_(required) {}

namespace {

using u128 = unsigned __int128;
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// C(universe, k) saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t universe, std::uint64_t k) {
  if (k > universe) return 0;
  k = std::min(k, universe - k);
  u128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // c * (universe - k + i) / i stays integral at every step.
    c = c * (universe - k + i) / i;
    if (c > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t universe_size(unsigned n) { return n == 64 ? kSaturated : (std::uint64_t{1} << n) - 1; }

void check_parameters(unsigned n, std::size_t m) {
  if (n < kMinDimension || n > kMaxDimension) throw std::invalid_argument("n must be in [2, 64]");
  if (m < 1 || m > universe_size(n)) throw std::invalid_argument("m must be in [1, 2^n - 1]");
}

PointSet with_origin(unsigned n, const std::vector<std::uint64_t>& points) {
  std::vector<std::uint64_t> all;
  all.reserve(points.size() + 1);
  all.push_back(0);
  all.insert(all.end(), points.begin(), points.end());
  return PointSet::from_bits(n, all);
}

// Running minimum plus counters for one contiguous slice of the work.
struct Partial {
  std::uint64_t examined = 0;
  std::uint64_t independent = 0;
  std::optional<Rational> min_value;
  std::vector<std::uint64_t> witness;
  std::vector<std::pair<std::vector<std::uint64_t>, Rational>> violations;
  std::uint64_t slice_mismatches = 0;

  void offer(const std::vector<std::uint64_t>& points, const Rational& value) {
    if (!min_value || value < *min_value || (value == *min_value && points < witness)) {
      min_value = value;
      witness = points;
    }
  }

  void merge(Partial&& other) {
    examined += other.examined;
    independent += other.independent;
    if (other.min_value) offer(other.witness, *other.min_value);
    for (auto& v : other.violations) violations.push_back(std::move(v));
    slice_mismatches += other.slice_mismatches;
  }
};

void evaluate(unsigned n, std::size_t m, const Rational& bound, const std::vector<std::uint64_t>& points,
              Partial& acc) {
  ++acc.examined;
  const auto value = independent_dinv_ones(n, points);
  if (!value) return;
  ++acc.independent;
  acc.offer(points, *value);
  if (*value < bound) acc.violations.emplace_back(points, *value);
  if (m == n && *value != bound) ++acc.slice_mismatches;
}

template <typename Work>
Partial run_partitioned(std::uint64_t total, unsigned workers, Work work) {
  workers = std::max(1u, workers);
  std::vector<Partial> partials(workers);
  const std::uint64_t chunk = total / workers;
  const std::uint64_t extra = total % workers;
  {
    std::vector<std::jthread> threads;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t len = chunk + (w < extra ? 1 : 0);
      if (workers == 1) {
        work(begin, len, partials[w]);
      } else {
        threads.emplace_back([&, w, begin, len] { work(begin, len, partials[w]); });
      }
      begin += len;
    }
  }
  Partial result;
  for (auto& p : partials) result.merge(std::move(p));
  return result;
}

SearchResult finish(unsigned n, std::size_t m, SearchMode mode, Partial&& acc) {
  SearchResult r;
  r.n = n;
  r.m = m;
  r.mode = mode;
  r.sets_examined = acc.examined;
  r.independent_count = acc.independent;
  r.min_value = acc.min_value;
  if (acc.min_value) r.witness = with_origin(n, acc.witness);
  for (auto& [points, value] : acc.violations) r.violations.push_back({with_origin(n, points).to_strings(), value});
  r.slice_mismatches = acc.slice_mismatches;
  return r;
}

}  // namespace

std::uint64_t normalized_subset_count(unsigned n, std::size_t m) { return binomial(universe_size(n), m); }

SubsetEnumerator::SubsetEnumerator(unsigned n, std::size_t m, std::uint64_t first) : universe_(universe_size(n)) {
  check_parameters(n, m);
  if (first >= normalized_subset_count(n, m)) {
    done_ = true;
    return;
  }
  // Lexicographic unranking: fix each position to the smallest value whose
  // block of completions still contains the target index.
  current_.resize(m);
  std::uint64_t rank = first;
  std::uint64_t candidate = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (;; ++candidate) {
      const std::uint64_t block = binomial(universe_ - candidate, m - 1 - i);
      if (rank < block) break;
      rank -= block;
    }
    current_[i] = candidate++;
  }
}

bool SubsetEnumerator::next(std::vector<std::uint64_t>& out) {
  if (done_) return false;
  out = current_;
  const std::size_t m = current_.size();
  std::size_t i = m;
  while (i-- > 0) {
    if (current_[i] < universe_ - (m - 1 - i)) {
      ++current_[i];
      for (std::size_t j = i + 1; j < m; ++j) current_[j] = current_[j - 1] + 1;
      return true;
    }
  }
  done_ = true;
  return true;
}

void enumerate_normalized(unsigned n, std::size_t m, const std::function<void(const PointSet&)>& visit) {
  SubsetEnumerator it(n, m);
  std::vector<std::uint64_t> points;
  while (it.next(points)) visit(with_origin(n, points));
}

std::optional<Rational> independent_dinv_ones(unsigned n, const std::vector<std::uint64_t>& points) {
  const std::size_t m = points.size();
  if (m > n) return std::nullopt;
  RationalMatrix b(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (unsigned k = 0; k < n; ++k) b(i, k) = static_cast<int>((points[i] >> (n - 1 - k)) & 1u);
  }
  if (rank(b) < m) return std::nullopt;
  return dinv_ones(with_origin(n, points));
}

SearchResult min_dinv_ones(unsigned n, std::size_t m, const SearchOptions& options) {
  check_parameters(n, m);
  const std::uint64_t total = normalized_subset_count(n, m);
  if (total > options.budget) throw BudgetExceededError(total, options.budget);
  const Rational bound = fraction(2, n);

  Partial acc = run_partitioned(total, options.workers, [&](std::uint64_t first, std::uint64_t len, Partial& out) {
    if (len == 0) return;
    SubsetEnumerator it(n, m, first);
    std::vector<std::uint64_t> points;
    for (std::uint64_t k = 0; k < len && it.next(points); ++k) evaluate(n, m, bound, points, out);
  });
  return finish(n, m, SearchMode::exhaustive, std::move(acc));
}

SearchResult random_probe(unsigned n, std::size_t m, std::uint64_t trials, std::uint64_t seed,
                          const SearchOptions& options) {
  check_parameters(n, m);
  const std::uint64_t mask = universe_size(n);
  const Rational bound = fraction(2, n);

  // Each trial owns an engine seeded from (seed, trial index), so the sample
  // does not depend on how trials are split across workers.
  Partial acc = run_partitioned(trials, options.workers, [&](std::uint64_t first, std::uint64_t len, Partial& out) {
    std::vector<std::uint64_t> points;
    for (std::uint64_t t = first; t < first + len; ++t) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
      std::mt19937_64 engine(seq);
      points.clear();
      while (points.size() < m) {
        const std::uint64_t x = engine() & mask;
        if (x == 0 || std::find(points.begin(), points.end(), x) != points.end()) continue;
        points.push_back(x);
      }
      std::sort(points.begin(), points.end());
      evaluate(n, m, bound, points, out);
    }
  });
  SearchResult r = finish(n, m, SearchMode::random, std::move(acc));
  r.seed = seed;
  return r;
}

const char* to_string(SearchMode mode) { return mode == SearchMode::exhaustive ? "exhaustive" : "random"; }

nlohmann::ordered_json to_json(const SearchResult& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["mode"] = to_string(r.mode);
  j["sets_examined"] = r.sets_examined;
  j["independent_count"] = r.independent_count;
  j["bound"] = to_string(fraction(2, r.n));
  j["min_value"] = r.min_value ? nlohmann::ordered_json(to_string(*r.min_value)) : nlohmann::ordered_json(nullptr);
  j["witness"] = r.witness ? nlohmann::ordered_json(r.witness->to_strings()) : nlohmann::ordered_json(nullptr);
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    j["violations"].push_back({{"points", v.points}, {"value", to_string(v.value)}});
  }
  j["slice_mismatches"] = r.slice_mismatches;
  j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace cubedist
