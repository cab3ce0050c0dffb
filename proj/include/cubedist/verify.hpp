#pragma once

// Sweeps that check every determinant identity and tree formula against
// direct elimination, counting passes and failures per identity.

#include <cubedist/hamming.hpp>
#include <cubedist/tree.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cubedist {

struct CheckTally {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct VerifyOptions {
  unsigned n_cap = 4;            // exhaustive over every subset of H_n containing 0, 2 <= n <= n_cap
  unsigned random_n_max = 6;     // seeded random subsets for n_cap < n <= random_n_max
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 20240101;
  std::size_t tree_vertex_cap = 8;  // every labeled tree on 3..cap vertices
  unsigned workers = 1;
  bool inject_fault = false;     // perturbs one identity; the harness must notice
};

struct VerifySummary {
  std::vector<CheckTally> checks;
  bool all_passed() const;
};

/// Identity checks for one point set (any base point), added into `tallies`,
/// which must come from make_identity_tallies().
std::vector<CheckTally> make_identity_tallies();
void check_point_set(const PointSet& s, std::vector<CheckTally>& tallies, bool inject_fault = false);

std::vector<CheckTally> make_tree_tallies();
void check_tree(const UnweightedTree& t, std::vector<CheckTally>& tallies);

/// Seeded random normalized set in H_n with m drawn from [1, min(2n, 2^n - 1)].
PointSet random_normalized_set(unsigned n, std::uint64_t seed, std::uint64_t index);

VerifySummary verify_identities(const VerifyOptions& options);

nlohmann::ordered_json to_json(const VerifySummary& summary);

}  // namespace cubedist
