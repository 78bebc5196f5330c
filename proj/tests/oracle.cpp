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

#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace lelm::oracle {

namespace {

// Single-variable Bell term: (left bit, right bit, sign).
struct VariableTerm {
  int left_bit;
  int right_bit;
  double sign;
};

std::vector<VariableTerm> token_terms(BellToken token) {
  switch (token) {
    case BellToken::phi_plus:
      return {{0, 0, 1.0}, {1, 1, 1.0}};
    case BellToken::phi_minus:
      return {{0, 0, 1.0}, {1, 1, -1.0}};
    case BellToken::psi_plus:
      return {{0, 1, 1.0}, {1, 0, 1.0}};
    case BellToken::psi_minus:
      return {{0, 1, 1.0}, {1, 0, -1.0}};
  }
  throw std::invalid_argument("bad token");
}

}  // namespace

TwoParticleState bell_state(const BellLabel& label) {
  const int n = label.var_count().value();
  // Expand the tensor product term by term: each variable contributes one of
  // its two (left bit, right bit, sign) branches.
  TwoParticleState state;
  const int branches = 1 << n;
  const double scale = std::pow(2.0, -0.5 * n);
  for (int choice = 0; choice < branches; ++choice) {
    int left_string = 0;
    int right_string = 0;
    double sign = 1.0;
    for (int v = 0; v < n; ++v) {
      const VariableTerm term =
          token_terms(label.tokens()[v])[(choice >> v) & 1];
      left_string |= term.left_bit << v;
      right_string |= term.right_bit << v;
      sign *= term.sign;
    }
    // Creation operators stay in the written (left, right) order; 1-based
    // mode 2s-1 is 0-based 2(s-1), 1-based 2s is 0-based 2s-1.
    state.push_back(Monomial{2 * left_string, 2 * right_string + 1,
                             Complex(sign * scale, 0.0)});
  }
  return state;
}

Complex amplitude(const Apparatus& app, Statistics stats,
                  const TwoParticleState& state, OutcomePair out) {
  const int dim = app.mode_count();
  const Eigen::MatrixXcd& u = app.unitary();
  const double swap_sign = (stats == Statistics::boson) ? 1.0 : -1.0;

  // Apply c_i: one-particle coefficients w(mode).
  std::vector<Complex> w(dim, Complex(0.0, 0.0));
  const int i = out.first - 1;
  for (const Monomial& mono : state) {
    // a_p (c a_m^dag a_k^dag |0>) = c (d_pm |k> +- d_pk |m>)
    w[mono.k] += std::conj(u(i, mono.m)) * mono.coeff;
    w[mono.m] += swap_sign * std::conj(u(i, mono.k)) * mono.coeff;
  }
  // Apply c_j and take the vacuum component.
  Complex acc(0.0, 0.0);
  const int j = out.second - 1;
  for (int m = 0; m < dim; ++m) {
    acc += std::conj(u(j, m)) * w[m];
  }
  return acc;
}

Complex amplitude(const Apparatus& app, Statistics stats,
                  const BellLabel& label, OutcomePair out) {
  return amplitude(app, stats, bell_state(label), out);
}

double probability(const Apparatus& app, Statistics stats,
                   const BellLabel& label, OutcomePair out) {
  const double weight = std::norm(amplitude(app, stats, label, out));
  if (stats == Statistics::boson && out.is_double_click()) {
    return weight / 2.0;
  }
  return weight;
}

std::vector<OutcomePair> support(const Apparatus& app, Statistics stats,
                                 const BellLabel& label, double eps) {
  std::vector<OutcomePair> result;
  for (const OutcomePair out : enumerate_outcomes(app.var_count())) {
    if (std::abs(amplitude(app, stats, label, out)) > eps) {
      result.push_back(out);
    }
  }
  return result;
}

std::vector<std::vector<std::uint64_t>> partition(const Apparatus& app,
                                                  Statistics stats,
                                                  double eps) {
  const std::uint64_t labels = app.var_count().label_count();
  std::vector<std::set<OutcomePair>> supports(labels);
  for (std::uint64_t idx = 0; idx < labels; ++idx) {
    const auto vec =
        support(app, stats, BellLabel::from_index(app.var_count(), idx), eps);
    supports[idx] = std::set<OutcomePair>(vec.begin(), vec.end());
  }
  auto confusable = [&](std::uint64_t a, std::uint64_t b) {
    for (const OutcomePair out : supports[a]) {
      if (supports[b].count(out)) return true;
    }
    return false;
  };
  // Naive component growth: sweep until no class index changes.
  std::vector<std::uint64_t> cls(labels);
  for (std::uint64_t idx = 0; idx < labels; ++idx) cls[idx] = idx;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t a = 0; a < labels; ++a) {
      for (std::uint64_t b = a + 1; b < labels; ++b) {
        if (cls[a] != cls[b] && confusable(a, b)) {
          const std::uint64_t from = std::max(cls[a], cls[b]);
          const std::uint64_t to = std::min(cls[a], cls[b]);
          for (std::uint64_t x = 0; x < labels; ++x) {
            if (cls[x] == from) cls[x] = to;
          }
          changed = true;
        }
      }
    }
  }
  std::vector<std::vector<std::uint64_t>> classes;
  std::vector<std::uint64_t> roots;
  for (std::uint64_t idx = 0; idx < labels; ++idx) {
    auto it = std::find(roots.begin(), roots.end(), cls[idx]);
    if (it == roots.end()) {
      roots.push_back(cls[idx]);
      classes.emplace_back();
      it = roots.end() - 1;
    }
    classes[static_cast<std::size_t>(it - roots.begin())].push_back(idx);
  }
  return classes;
}

}  // namespace lelm::oracle
