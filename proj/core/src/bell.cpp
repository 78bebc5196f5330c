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

#include "lelm/bell.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>

namespace lelm {

const char* to_string(Statistics stats) {
  return stats == Statistics::boson ? "boson" : "fermion";
}

const char* to_string(Channel channel) {
  return channel == Channel::left ? "L" : "R";
}

Channel mode_channel(int mode) {
  return (mode % 2 == 1) ? Channel::left : Channel::right;
}

int mode_value_string(int mode) { return (mode + 1) / 2; }

int left_mode(int value_string) { return 2 * value_string - 1; }

int right_mode(int value_string) { return 2 * value_string; }

const char* to_string(BellToken token) {
  switch (token) {
    case BellToken::phi_plus:
      return "phi+";
    case BellToken::phi_minus:
      return "phi-";
    case BellToken::psi_plus:
      return "psi+";
    case BellToken::psi_minus:
      return "psi-";
  }
  return "?";
}

BellLabel::BellLabel(std::vector<BellToken> tokens) : tokens_(std::move(tokens)) {
  VarCount n(static_cast<int>(tokens_.size()));  // validates 1..max
  for (int v = 0; v < n.value(); ++v) {
    const int code = static_cast<int>(tokens_[v]);
    if (code < 0 || code > 3) {
      throw std::invalid_argument("BellLabel: invalid token");
    }
    if (code >= 2) pairing_mask_ |= 1u << v;  // psi+- swap the eigenvalue
    if (code % 2 == 1) sign_mask_ |= 1u << v;  // phi-, psi- carry the sign
  }
}

BellLabel BellLabel::from_index(VarCount n, std::uint64_t index) {
  if (index >= n.label_count()) {
    throw std::out_of_range("BellLabel::from_index: index out of range");
  }
  std::vector<BellToken> tokens(n.value());
  // Variable 0 is the most significant base-4 digit.
  for (int v = n.value() - 1; v >= 0; --v) {
    tokens[v] = static_cast<BellToken>(index & 3u);
    index >>= 2;
  }
  return BellLabel(std::move(tokens));
}

std::uint64_t BellLabel::index() const {
  std::uint64_t idx = 0;
  for (const BellToken token : tokens_) {
    idx = (idx << 2) | static_cast<std::uint64_t>(token);
  }
  return idx;
}

std::string BellLabel::to_string() const {
  std::string out;
  for (std::size_t v = 0; v < tokens_.size(); ++v) {
    if (v > 0) out += " x ";
    out += lelm::to_string(tokens_[v]);
  }
  return out;
}

std::vector<BellLabel> enumerate_bell_labels(VarCount n) {
  std::vector<BellLabel> labels;
  labels.reserve(n.label_count());
  for (std::uint64_t idx = 0; idx < n.label_count(); ++idx) {
    labels.push_back(BellLabel::from_index(n, idx));
  }
  return labels;
}

namespace {

void require_string_index(VarCount n, int value_string) {
  if (value_string < 1 || value_string > n.string_count()) {
    throw std::out_of_range("value string out of range");
  }
}

}  // namespace

int pairing(const BellLabel& label, int value_string) {
  require_string_index(label.var_count(), value_string);
  const std::uint32_t bits = static_cast<std::uint32_t>(value_string - 1);
  return static_cast<int>(bits ^ label.pairing_mask()) + 1;
}

int sign(const BellLabel& label, int value_string) {
  require_string_index(label.var_count(), value_string);
  const std::uint32_t bits = static_cast<std::uint32_t>(value_string - 1);
  return std::popcount(bits & label.sign_mask()) & 1;
}

LRVector::LRVector(VarCount n)
    : n_(n), coeffs_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n.label_count()))) {}

Complex& LRVector::at(int left_string, int right_string) {
  require_string_index(n_, left_string);
  require_string_index(n_, right_string);
  return coeffs_(static_cast<Eigen::Index>(left_string - 1) * n_.string_count() +
                 (right_string - 1));
}

Complex LRVector::at(int left_string, int right_string) const {
  return const_cast<LRVector*>(this)->at(left_string, right_string);
}

LRVector bell_vector(const BellLabel& label) {
  const VarCount n = label.var_count();
  LRVector vec(n);
  const double amp = std::pow(2.0, -0.5 * n.value());
  for (int s = 1; s <= n.string_count(); ++s) {
    vec.at(s, pairing(label, s)) = sign(label, s) ? -amp : amp;
  }
  return vec;
}

Eigen::MatrixXcd reduced_density(const BellLabel& label, Statistics stats) {
  const VarCount n = label.var_count();
  const int dim = n.mode_count();
  const double swap_sign = (stats == Statistics::boson) ? 1.0 : -1.0;
  // (Anti)symmetrized first-quantized state, kept as a sparse list of
  // (mode of particle 1, mode of particle 2, coefficient), 0-based modes.
  struct Term {
    int m, k;
    double coeff;
  };
  std::vector<Term> terms;
  terms.reserve(2 * n.string_count());
  const double coeff = std::pow(2.0, -0.5 * n.value()) / std::sqrt(2.0);
  for (int s = 1; s <= n.string_count(); ++s) {
    const int m = left_mode(s) - 1;
    const int k = right_mode(pairing(label, s)) - 1;
    const double c = sign(label, s) ? -coeff : coeff;
    terms.push_back({m, k, c});
    terms.push_back({k, m, swap_sign * c});
  }
  // rho(k, k') = sum_m psi(m, k) conj(psi(m, k')), the trace over particle 1.
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (const Term& a : terms) {
    for (const Term& b : terms) {
      if (a.m == b.m) {
        rho(a.k, b.k) += Complex(a.coeff * b.coeff, 0.0);
      }
    }
  }
  return rho;
}

Complex inner_product(const LRVector& u, const LRVector& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  return u.coefficients().dot(v.coefficients());
}

}  // namespace lelm
