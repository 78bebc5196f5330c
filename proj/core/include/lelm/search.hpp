// Copyright 2026 The lelm-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Randomized exploration of apparatus space: Haar fuzzing of the class-count
// ceilings and a derivative-free hill climb that tries to push the count up.
//
// Campaigns are reproducible: trial t uses seed (base seed + t), so results
// are independent of evaluation order and of the thread count.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lelm/apparatus.hpp"
#include "lelm/partition.hpp"
#include "lelm/types.hpp"

namespace lelm {

struct CampaignConfig {
  VarCount n;
  Statistics stats = Statistics::boson;
  int trials = 1;  // hill_climb: number of restarts
  std::uint64_t seed = 0;
  BoundMode mode = BoundMode::one_copy;
  double support_eps = 1e-9;
};

/// A class count above the mode's ceiling. Any entry signals an
/// implementation bug, not a physics result.
struct BoundViolation {
  int trial;
  std::uint64_t seed;
  std::uint64_t class_count;
};

struct CampaignReport {
  CampaignConfig config;
  std::map<std::uint64_t, std::uint64_t> histogram = {};  // class count -> trials
  std::uint64_t max_observed = 0;
  std::uint64_t bound = 0;
  std::vector<BoundViolation> violations = {};
  int best_trial = -1;  // first trial attaining max_observed
  std::optional<Apparatus> best = std::nullopt;
};

/// Partitions `trials` random apparatuses (Haar unitaries, or Haar
/// block-diagonal pairs in separate-channel mode) and histograms the class
/// counts. threads <= 1 runs serially; results are identical either way.
CampaignReport bound_campaign(const CampaignConfig& cfg, int threads = 1);

/// Random-restart local search: perturb by a Givens rotation of a random
/// output-mode pair with random phase and angle ~ step_scale, keep the
/// proposal when the class count does not decrease. Restart r starts from
/// warm_starts[r] when provided, otherwise from a Haar sample. cfg.trials
/// is the restart count; in separate-channel mode starts and proposals stay
/// channel-block-diagonal.
CampaignReport hill_climb(const CampaignConfig& cfg, int budget,
                          double step_scale,
                          const std::vector<Apparatus>& warm_starts = {},
                          int threads = 1);

}  // namespace lelm
