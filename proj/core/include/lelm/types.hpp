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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lelm {

using Complex = std::complex<double>;

/// Exchange statistics of the two-particle input.
enum class Statistics { boson, fermion };

const char* to_string(Statistics stats);

/// Spatial input channel. Odd 1-based mode indices are left-channel,
/// even indices right-channel.
enum class Channel { left, right };

const char* to_string(Channel channel);

/// Number of two-state variables the particle pair is entangled in.
///
/// Everything downstream scales as 16^n (4^n Bell states times roughly
/// 4^n detection outcomes), so the library enforces a hard cap.
class VarCount {
 public:
  static constexpr int max_vars = 8;

  explicit VarCount(int n) : n_(n) {
    if (n < 1 || n > max_vars) {
      throw std::out_of_range("VarCount: n must be in 1.." +
                              std::to_string(max_vars) + ", got " +
                              std::to_string(n));
    }
  }

  int value() const { return n_; }
  /// 2^n distinct value strings per channel.
  int string_count() const { return 1 << n_; }
  /// 2^{n+1} single-particle modes (and detectors).
  int mode_count() const { return 1 << (n_ + 1); }
  /// 4^n hyper-Bell states.
  std::uint64_t label_count() const { return std::uint64_t{1} << (2 * n_); }

  friend bool operator==(VarCount, VarCount) = default;

 private:
  int n_;
};

}  // namespace lelm
