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

#include "lelm/detection.hpp"

#include <cmath>

namespace lelm {

namespace {

void require_outcome(const Apparatus& app, OutcomePair out) {
  if (out.first < 1 || out.second > app.mode_count()) {
    throw std::out_of_range("outcome modes out of 1.." +
                            std::to_string(app.mode_count()));
  }
}

void require_same_n(const Apparatus& app, const BellLabel& label) {
  if (!(app.var_count() == label.var_count())) {
    throw std::invalid_argument("apparatus and Bell label disagree on n");
  }
}

}  // namespace

std::vector<OutcomePair> enumerate_outcomes(VarCount n) {
  const int dim = n.mode_count();
  std::vector<OutcomePair> outs;
  outs.reserve(static_cast<std::size_t>(dim) * (dim + 1) / 2);
  for (int i = 1; i <= dim; ++i) {
    for (int j = i; j <= dim; ++j) {
      outs.emplace_back(i, j);
    }
  }
  return outs;
}

std::size_t outcome_rank(OutcomePair out, VarCount n) {
  const std::size_t dim = static_cast<std::size_t>(n.mode_count());
  const std::size_t i = static_cast<std::size_t>(out.first) - 1;
  const std::size_t j = static_cast<std::size_t>(out.second) - 1;
  return i * dim - i * (i + 1) / 2 + j;
}

Complex outcome_amplitude(const Apparatus& app, Statistics stats,
                          const BellLabel& label, OutcomePair out) {
  require_same_n(app, label);
  require_outcome(app, out);
  const VarCount n = app.var_count();
  const Eigen::MatrixXcd& u = app.unitary();
  const int i = out.first - 1;
  const int j = out.second - 1;
  const double swap_sign = (stats == Statistics::boson) ? 1.0 : -1.0;

  Complex acc(0.0, 0.0);
  for (int s = 1; s <= n.string_count(); ++s) {
    const int l = left_mode(s) - 1;
    const int r = right_mode(pairing(label, s)) - 1;
    const Complex term = std::conj(u(i, l)) * std::conj(u(j, r)) +
                         swap_sign * std::conj(u(j, l)) * std::conj(u(i, r));
    acc += sign(label, s) ? -term : term;
  }
  return std::pow(2.0, -0.5 * n.value()) * acc;
}

double outcome_probability(const Apparatus& app, Statistics stats,
                           const BellLabel& label, OutcomePair out) {
  const double weight = std::norm(outcome_amplitude(app, stats, label, out));
  if (stats == Statistics::boson && out.is_double_click()) {
    return weight / 2.0;  // Fock normalization of the two-photon outcome
  }
  return weight;
}

std::vector<OutcomePair> signature_support(const Apparatus& app,
                                           Statistics stats,
                                           const BellLabel& label,
                                           double eps) {
  if (eps <= 0.0) {
    throw std::invalid_argument("signature_support: eps must be positive");
  }
  std::vector<OutcomePair> support;
  for (const OutcomePair out : enumerate_outcomes(app.var_count())) {
    if (std::abs(outcome_amplitude(app, stats, label, out)) > eps) {
      support.push_back(out);
    }
  }
  return support;
}

SignatureTable SignatureTable::build(const Apparatus& app, Statistics stats,
                                     double eps) {
  if (eps <= 0.0) {
    throw std::invalid_argument("SignatureTable: eps must be positive");
  }
  SignatureTable table(app.var_count(), stats, eps);
  const std::vector<OutcomePair> outcomes = enumerate_outcomes(app.var_count());
  table.rows_.resize(table.label_count());
  for (std::uint64_t idx = 0; idx < table.label_count(); ++idx) {
    const BellLabel label = BellLabel::from_index(app.var_count(), idx);
    std::vector<Entry>& row = table.rows_[idx];
    for (const OutcomePair out : outcomes) {
      const Complex amp = outcome_amplitude(app, stats, label, out);
      if (std::abs(amp) > eps) {
        row.push_back(Entry{out, amp});
      }
    }
  }
  return table;
}

double expected_click_rate(const Apparatus& app, const BellLabel& label,
                           int out_mode) {
  require_same_n(app, label);
  if (out_mode < 1 || out_mode > app.mode_count()) {
    throw std::out_of_range("expected_click_rate: mode out of range");
  }
  // <B| c_i^dag c_i |B> = sum over unordered outcomes containing i of
  // p * (1 + delta_ij); statistics drop out, so accumulate the boson form.
  double rate = 0.0;
  for (int j = 1; j <= app.mode_count(); ++j) {
    const OutcomePair out(out_mode, j);
    const double p =
        outcome_probability(app, Statistics::boson, label, out);
    rate += out.is_double_click() ? 2.0 * p : p;
  }
  return rate;
}

LRVector detection_signature_vector(const Apparatus& app, Statistics stats,
                                    OutcomePair out) {
  require_outcome(app, out);
  const VarCount n = app.var_count();
  const int dim = n.mode_count();
  const Eigen::MatrixXcd& u = app.unitary();
  const double swap_sign = (stats == Statistics::boson) ? 1.0 : -1.0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // Full first-quantized tensor of (|i>|j> +- |j>|i>)/sqrt2 over the
  // 2^{n+1} x 2^{n+1} product basis |phi_m>_1 |phi_k>_2.
  Eigen::MatrixXcd tensor(dim, dim);
  const Eigen::RowVectorXcd row_i = u.row(out.first - 1);
  const Eigen::RowVectorXcd row_j = u.row(out.second - 1);
  for (int m = 0; m < dim; ++m) {
    for (int k = 0; k < dim; ++k) {
      tensor(m, k) =
          inv_sqrt2 * (row_i(m) * row_j(k) + swap_sign * row_j(m) * row_i(k));
    }
  }

  // Project onto the one-per-channel subspace and express in coordinates of
  // the (anti)symmetrized basis e_ab = (|2a-1>_1 |2b>_2 +- |2b>_1 |2a-1>_2)/sqrt2.
  LRVector vec(n);
  for (int a = 1; a <= n.string_count(); ++a) {
    for (int b = 1; b <= n.string_count(); ++b) {
      const int l = left_mode(a) - 1;
      const int r = right_mode(b) - 1;
      vec.at(a, b) = inv_sqrt2 * (tensor(l, r) + swap_sign * tensor(r, l));
    }
  }
  return vec;
}

}  // namespace lelm
