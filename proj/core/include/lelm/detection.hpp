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

// Detection-event amplitudes for hyper-Bell states.
//
// A complete detection event annihilates particles in two output modes
// {i, j} (possibly i = j). With c_i = sum_m conj(U(i,m)) a_m, the two-click
// amplitude for Bell state B is the vacuum expectation <0| c_j c_i |B>:
//
//   A(i,j|B) = 2^{-n/2} sum_s (-1)^{sigma_B(s)}
//              [ U*(i,2s-1) U*(j,2r_B(s)) +- U*(j,2s-1) U*(i,2r_B(s)) ]
//
// with + for bosons and - for fermions. Born-rule probabilities for
// number-resolved outcomes carry 1/(1 + delta_ij) for bosons.

#include <compare>
#include <cstdint>
#include <vector>

#include "lelm/apparatus.hpp"
#include "lelm/bell.hpp"
#include "lelm/types.hpp"

namespace lelm {

/// Unordered pair of 1-based detector indices, stored canonically with
/// first <= second. i == j is a double click in one detector.
struct OutcomePair {
  int first;
  int second;

  OutcomePair(int i, int j) : first(i < j ? i : j), second(i < j ? j : i) {}

  bool is_double_click() const { return first == second; }

  friend auto operator<=>(const OutcomePair&, const OutcomePair&) = default;
};

/// All 2^n (2^{n+1} + 1) outcomes, ordered (1,1), (1,2), ..., (D,D).
std::vector<OutcomePair> enumerate_outcomes(VarCount n);

/// Rank of an outcome in enumerate_outcomes order.
std::size_t outcome_rank(OutcomePair out, VarCount n);

/// A(i,j|B) above. Identically zero for fermions when i == j.
Complex outcome_amplitude(const Apparatus& app, Statistics stats,
                          const BellLabel& label, OutcomePair out);

/// |A|^2 / (1 + delta_ij) for bosons; |A|^2 for fermions. Sums to 1 over
/// all outcomes for any unitary apparatus.
double outcome_probability(const Apparatus& app, Statistics stats,
                           const BellLabel& label, OutcomePair out);

/// Outcomes with |A| > eps.
std::vector<OutcomePair> signature_support(const Apparatus& app,
                                           Statistics stats,
                                           const BellLabel& label,
                                           double eps = 1e-9);

/// Per-label detection signatures for one apparatus: every outcome with
/// |amplitude| > eps, in deterministic label/outcome order.
class SignatureTable {
 public:
  struct Entry {
    OutcomePair outcome;
    Complex amplitude;
  };

  static SignatureTable build(const Apparatus& app, Statistics stats,
                              double eps = 1e-9);

  VarCount var_count() const { return n_; }
  Statistics statistics() const { return stats_; }
  double support_epsilon() const { return eps_; }
  std::uint64_t label_count() const { return n_.label_count(); }

  const std::vector<Entry>& support(std::uint64_t label_index) const {
    return rows_.at(label_index);
  }

 private:
  SignatureTable(VarCount n, Statistics stats, double eps)
      : n_(n), stats_(stats), eps_(eps) {}

  VarCount n_;
  Statistics stats_;
  double eps_;
  std::vector<std::vector<Entry>> rows_;
};

/// <B| c_i^dag c_i |B>, accumulated from outcome probabilities as
/// sum_j p(i,j) (1 + delta_ij). Equals 2^{-n} for every Bell state and
/// every detector of a unitary apparatus: one click carries no information.
double expected_click_rate(const Apparatus& app, const BellLabel& label,
                           int out_mode);

/// The detection signature as a state: the projection of the
/// (anti)symmetrized product |i>|j> onto the one-per-channel subspace, in
/// LRVector coordinates. Computed by expanding the full first-quantized
/// tensor product, so it is an independent route to the same physics as
/// outcome_amplitude; <dsv(i,j)|bell_vector(B)> is proportional to
/// A(i,j|B) with one global constant.
LRVector detection_signature_vector(const Apparatus& app, Statistics stats,
                                    OutcomePair out);

}  // namespace lelm
