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

// Hyper-Bell basis over n two-state variables.
//
// Mode indexing (fixed across the library and all file formats):
//   * Single-particle input modes are 1-based, m = 1..2^{n+1}.
//   * Odd m is a left-channel state, even m a right-channel state:
//     m = 2s-1 is |chi_s, L> and m = 2s is |chi_s, R>, where the value
//     strings s run 1..2^n and bit v of (s-1) holds the eigenvalue of
//     variable v (v = 0 least significant).
//   * Bell labels are n-token sequences over {phi+, phi-, psi+, psi-},
//     enumerated lexicographically with variable 0 most significant and
//     token order phi+ < phi- < psi+ < psi-.
//
// Each label B carries an involutive pairing r_B of value strings and a
// sign function sigma_B, giving the state
//   |B> = 2^{-n/2} sum_s (-1)^{sigma_B(s)} |chi_s, L> |chi_{r_B(s)}, R>.

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "lelm/types.hpp"

namespace lelm {

Channel mode_channel(int mode);
/// s = ceil(m/2): the value string a mode carries.
int mode_value_string(int mode);
/// m = 2s-1, the left-channel mode for value string s.
int left_mode(int value_string);
/// m = 2s, the right-channel mode for value string s.
int right_mode(int value_string);

/// Single-variable Bell token. The numeric order fixes label enumeration.
enum class BellToken : int {
  phi_plus = 0,
  phi_minus = 1,
  psi_plus = 2,
  psi_minus = 3,
};

const char* to_string(BellToken token);

/// One of the 4^n hyper-Bell states, as a token per variable.
///
/// Derived masks (bit v = variable v):
///   pairing_mask: set iff token v is psi+/psi-  (the pairing flips bit v)
///   sign_mask:    set iff token v is phi-/psi-  (the minus branch)
class BellLabel {
 public:
  explicit BellLabel(std::vector<BellToken> tokens);

  /// Inverse of index(): the label of given lexicographic rank.
  static BellLabel from_index(VarCount n, std::uint64_t index);

  VarCount var_count() const { return VarCount(static_cast<int>(tokens_.size())); }
  const std::vector<BellToken>& tokens() const { return tokens_; }
  /// Lexicographic rank among the 4^n labels; variable 0 most significant.
  std::uint64_t index() const;
  std::uint32_t pairing_mask() const { return pairing_mask_; }
  std::uint32_t sign_mask() const { return sign_mask_; }
  /// ASCII rendering, e.g. "phi+ x psi-".
  std::string to_string() const;

  friend bool operator==(const BellLabel&, const BellLabel&) = default;

 private:
  std::vector<BellToken> tokens_;
  std::uint32_t pairing_mask_ = 0;
  std::uint32_t sign_mask_ = 0;
};

/// All 4^n labels in deterministic lexicographic order.
std::vector<BellLabel> enumerate_bell_labels(VarCount n);

/// r_B(s): the right-channel value string paired with left string s.
/// Involutive: pairing(B, pairing(B, s)) == s.
int pairing(const BellLabel& label, int value_string);

/// sigma_B(s) in {0, 1}: parity of the minus signs picked up at string s.
int sign(const BellLabel& label, int value_string);

/// Two-particle amplitudes on the one-per-channel subspace, indexed by the
/// ordered pair (a, b) of left/right value strings. Dimension 4^n.
class LRVector {
 public:
  explicit LRVector(VarCount n);

  VarCount var_count() const { return n_; }
  Eigen::Index dim() const { return coeffs_.size(); }

  /// 1-based value-string indices.
  Complex& at(int left_string, int right_string);
  Complex at(int left_string, int right_string) const;

  const Eigen::VectorXcd& coefficients() const { return coeffs_; }
  Eigen::VectorXcd& coefficients() { return coeffs_; }

  double norm() const { return coeffs_.norm(); }

 private:
  VarCount n_;
  Eigen::VectorXcd coeffs_;
};

/// The exact state vector of a hyper-Bell state: 2^n nonzero entries of
/// magnitude 2^{-n/2}, at (s, r_B(s)) with sign (-1)^{sigma_B(s)}.
LRVector bell_vector(const BellLabel& label);

/// Single-particle reduced density matrix of the (anti)symmetrized Bell
/// state, over all 2^{n+1} input modes. Equals 2^{-(n+1)} * I for every
/// label and both statistics; computed here by explicit partial trace.
Eigen::MatrixXcd reduced_density(const BellLabel& label, Statistics stats);

/// Hermitian inner product <u|v>. Throws std::invalid_argument on
/// dimension mismatch.
Complex inner_product(const LRVector& u, const LRVector& v);

}  // namespace lelm
