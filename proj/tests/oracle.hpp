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

// Test-only brute-force reference, independent of the library's closed-form
// amplitude path.
//
// States with exactly two particles are kept as explicit monomial
// coefficients c on a_m^dag a_k^dag |0>, with the creation operators in the
// literal order written (0-based modes), and annihilation operators are
// applied one at a time:
//   bosons:   a_p a_m^dag a_k^dag |0> = d_pm |k> + d_pk |m>
//   fermions: a_p a_m^dag a_k^dag |0> = d_pm |k> - d_pk |m>
// Bell states are produced by expanding the n-fold tensor product of
// single-variable Bell states term by term, never via pairing masks.

#include <vector>

#include "lelm/apparatus.hpp"
#include "lelm/bell.hpp"
#include "lelm/detection.hpp"
#include "lelm/types.hpp"

namespace lelm::oracle {

struct Monomial {
  int m;  // first creation operator, 0-based mode
  int k;  // second creation operator
  Complex coeff;
};

using TwoParticleState = std::vector<Monomial>;

/// |B> expanded from the per-variable Bell terms.
TwoParticleState bell_state(const BellLabel& label);

/// <0| c_j c_i |state> with c_i = sum_m conj(U(i,m)) a_m, evaluated by
/// applying the annihilators one at a time.
Complex amplitude(const Apparatus& app, Statistics stats,
                  const TwoParticleState& state, OutcomePair out);

Complex amplitude(const Apparatus& app, Statistics stats,
                  const BellLabel& label, OutcomePair out);

double probability(const Apparatus& app, Statistics stats,
                   const BellLabel& label, OutcomePair out);

std::vector<OutcomePair> support(const Apparatus& app, Statistics stats,
                                 const BellLabel& label, double eps = 1e-9);

/// Distinguishable classes by the O(labels^2) pairwise route: intersect
/// supports for every label pair, then grow components by repeated sweeps.
/// Returns sorted classes of label indices, ordered by smallest member.
std::vector<std::vector<std::uint64_t>> partition(const Apparatus& app,
                                                  Statistics stats,
                                                  double eps = 1e-9);

}  // namespace lelm::oracle
