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

#include "lelm/search.hpp"

#include <atomic>
#include <cmath>
#include <future>
#include <random>
#include <thread>

namespace lelm {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t state = base ^ (salt * 0xD1B54A32D192ED03ull);
  return splitmix64(state);
}

/// Evaluates fn(0..count-1) into an index-ordered vector; the thread count
/// never changes the result.
template <typename Result, typename Fn>
std::vector<Result> run_indexed(int count, int threads, Fn&& fn) {
  std::vector<Result> results(count);
  if (threads <= 1 || count <= 1) {
    for (int t = 0; t < count; ++t) results[t] = fn(t);
    return results;
  }
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int t = next.fetch_add(1); t < count; t = next.fetch_add(1)) {
      results[t] = fn(t);
    }
  };
  const int pool = std::min(threads, count);
  std::vector<std::future<void>> futures;
  futures.reserve(pool);
  for (int w = 0; w < pool; ++w) {
    futures.push_back(std::async(std::launch::async, worker));
  }
  for (auto& f : futures) f.get();
  return results;
}

Apparatus sample_apparatus(const CampaignConfig& cfg, std::uint64_t trial_seed) {
  if (cfg.mode == BoundMode::one_copy) {
    return haar_random(cfg.n, trial_seed);
  }
  const int strings = cfg.n.string_count();
  return separate(haar_unitary(strings, derive_seed(trial_seed, 1)),
                  haar_unitary(strings, derive_seed(trial_seed, 2)), cfg.n);
}

std::uint64_t count_classes(const Apparatus& app, const CampaignConfig& cfg) {
  return partition_classes(SignatureTable::build(app, cfg.stats, cfg.support_eps))
      .class_count();
}

void validate(const CampaignConfig& cfg) {
  if (cfg.trials < 1) {
    throw std::invalid_argument("campaign: trials must be >= 1");
  }
  if (cfg.support_eps <= 0.0) {
    throw std::invalid_argument("campaign: support_eps must be positive");
  }
}

CampaignReport merge_report(const CampaignConfig& cfg,
                            const std::vector<std::uint64_t>& counts) {
  CampaignReport report{.config = cfg};
  report.bound = class_bound(cfg.n, cfg.mode);
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t count = counts[t];
    ++report.histogram[count];
    if (count > report.max_observed) {
      report.max_observed = count;
      report.best_trial = t;
    }
    if (count > report.bound) {
      report.violations.push_back(BoundViolation{t, cfg.seed + t, count});
    }
  }
  return report;
}

}  // namespace

CampaignReport bound_campaign(const CampaignConfig& cfg, int threads) {
  validate(cfg);
  const std::vector<std::uint64_t> counts = run_indexed<std::uint64_t>(
      cfg.trials, threads, [&](int trial) {
        return count_classes(sample_apparatus(cfg, cfg.seed + trial), cfg);
      });
  CampaignReport report = merge_report(cfg, counts);
  report.best = sample_apparatus(cfg, cfg.seed + report.best_trial);
  return report;
}

namespace {

struct ClimbResult {
  std::uint64_t best_count = 0;
  Eigen::MatrixXcd best_unitary;
};

ClimbResult climb_one(const CampaignConfig& cfg, int budget, double step_scale,
                      const std::vector<Apparatus>& warm_starts, int restart) {
  std::mt19937_64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const int dim = cfg.n.mode_count();
  const int strings = cfg.n.string_count();

  Apparatus current =
      restart < static_cast<int>(warm_starts.size())
          ? warm_starts[restart]
          : sample_apparatus(cfg, derive_seed(cfg.seed, 0x5EEDull + restart));
  std::uint64_t current_count = count_classes(current, cfg);

  ClimbResult best{current_count, current.unitary()};
  for (int iter = 0; iter < budget; ++iter) {
    // Draw the proposal before any early-out so the stream is stable.
    int p, q;
    if (cfg.mode == BoundMode::one_copy) {
      p = static_cast<int>(rng() % dim);
      q = static_cast<int>(rng() % (dim - 1));
      if (q >= p) ++q;
    } else {
      // Stay block-diagonal: rotate two modes of one channel.
      const int channel = static_cast<int>(rng() % 2);
      const int s1 = static_cast<int>(rng() % strings);
      int s2 = static_cast<int>(rng() % (strings - 1));
      if (s2 >= s1) ++s2;
      p = 2 * s1 + channel;
      q = 2 * s2 + channel;
    }
    const double theta = step_scale * gauss(rng);
    const double phi = angle(rng);
    if (theta == 0.0) continue;

    // Left-multiply by the Givens rotation in the (p, q) output plane.
    const Complex e_pos(std::cos(phi), std::sin(phi));
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Eigen::MatrixXcd u = current.unitary();
    const Eigen::RowVectorXcd row_p = u.row(p);
    const Eigen::RowVectorXcd row_q = u.row(q);
    u.row(p) = c * row_p - std::conj(e_pos) * s * row_q;
    u.row(q) = e_pos * s * row_p + c * row_q;

    Apparatus proposal(cfg.n, std::move(u));
    const std::uint64_t count = count_classes(proposal, cfg);
    if (count >= current_count) {  // keep ties to walk plateaus
      current = std::move(proposal);
      current_count = count;
      if (count > best.best_count) {
        best.best_count = count;
        best.best_unitary = current.unitary();
      }
    }
  }
  return best;
}

}  // namespace

CampaignReport hill_climb(const CampaignConfig& cfg, int budget,
                          double step_scale,
                          const std::vector<Apparatus>& warm_starts,
                          int threads) {
  validate(cfg);
  if (budget < 1) {
    throw std::invalid_argument("hill_climb: budget must be >= 1");
  }
  if (step_scale < 0.0) {
    throw std::invalid_argument("hill_climb: step_scale must be >= 0");
  }
  for (const Apparatus& app : warm_starts) {
    if (!(app.var_count() == cfg.n)) {
      throw std::invalid_argument("hill_climb: warm start has wrong n");
    }
  }

  const std::vector<ClimbResult> results = run_indexed<ClimbResult>(
      cfg.trials, threads, [&](int restart) {
        return climb_one(cfg, budget, step_scale, warm_starts, restart);
      });

  std::vector<std::uint64_t> counts(cfg.trials);
  for (int r = 0; r < cfg.trials; ++r) counts[r] = results[r].best_count;
  CampaignReport report = merge_report(cfg, counts);
  report.best = Apparatus(cfg.n, results[report.best_trial].best_unitary);
  return report;
}

}  // namespace lelm
