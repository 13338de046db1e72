#pragma once

// Seeded search harness: generates small categories with cofibrations by
// closing random seeds inside ambient fixtures, then hunts for subdivision
// maps that fail to be bijections.  Reports are bit-replayable from the
// seed.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segal/cofcat.hpp"
#include "segal/polygon.hpp"
#include "segal/segal_maps.hpp"

namespace segal {

/// Named fixtures accepted in search configs: "Z", "PS2", "PS3", "PS2xPS2".
CofStructure fixture_by_name(const std::string& name);

/// Closes a random seed (always containing zero) inside the ambient; retries
/// with smaller seeds until the closure fits in max_objects.  Deterministic
/// in trial_seed.
CofStructure random_closure(const CofStructure& ambient, std::uint64_t trial_seed,
                            int max_objects,
                            std::vector<Obj>* seed_objects = nullptr);

struct SearchConfig {
  std::uint64_t seed = 0;
  std::vector<std::string> fixtures;  // checked before any random trials
  int random_trials = 0;
  std::string ambient = "PS2xPS2";
  int max_objects = 12;
  int max_level = 4;
};

struct SearchTrial {
  std::string source;  // "fixture:<name>" or "random"
  std::uint64_t trial_seed = 0;
  std::vector<Obj> seed_objects;  // ambient ids, random trials only
  int n_objects = 0;
  int n_morphisms = 0;
  std::vector<int> level_sizes;
  int triangulations_checked = 0;
  bool counterexample = false;
  std::string detail;  // certificate: the unreachable tuple or collision
};

struct SearchReport {
  SearchConfig config;
  std::vector<SearchTrial> trials;
  int counterexamples = 0;
};

/// Runs two_segal_map over every neither-classified triangulation of P_n,
/// 2 <= n <= max_level, on the iso(s.) set of each fixture and each random
/// closure.  Certificates are printed into the trial detail and verified
/// against the limit before being reported.
SearchReport counterexample_search(const SearchConfig& cfg);

}  // namespace segal
