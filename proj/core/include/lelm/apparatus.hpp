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

// Linear-evolution / local-measurement apparatuses.
//
// An apparatus is a 2^{n+1} x 2^{n+1} complex unitary over the
// single-particle input modes. Row i expresses output mode (detector) i in
// input-mode coordinates: |i> = sum_m U(i,m) |phi_m>. Constructors validate
// dimensions only; unitarity is checked explicitly (check_unitary) or on
// load, so that deliberately broken matrices remain representable in tests.

#include <Eigen/Dense>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

#include "lelm/bell.hpp"
#include "lelm/types.hpp"

namespace lelm {

class Apparatus {
 public:
  /// Takes ownership of the matrix; throws std::invalid_argument unless it
  /// is square with dimension 2^{n+1}.
  Apparatus(VarCount n, Eigen::MatrixXcd unitary);

  VarCount var_count() const { return n_; }
  int mode_count() const { return n_.mode_count(); }
  const Eigen::MatrixXcd& unitary() const { return u_; }

  /// U(i,m) with 1-based output/input mode indices.
  Complex entry(int out_mode, int in_mode) const {
    return u_(out_mode - 1, in_mode - 1);
  }

 private:
  VarCount n_;
  Eigen::MatrixXcd u_;
};

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// L/R Hadamard per value string: |2s-1> = (|chi_s,L> + |chi_s,R>)/sqrt2,
/// |2s> = (|chi_s,L> - |chi_s,R>)/sqrt2. Attains the one-copy optimum
/// 2^{n+1}-1 for both statistics.
Apparatus hadamard_lr(VarCount n);

/// Projective measurement of each channel in the {|0>,|1>}^n basis; the
/// identity matrix. Best separated-channel apparatus (2^n classes).
Apparatus projective_separate(VarCount n);

/// The 4x4 all-entries +-1/2 optimal apparatus for n = 1; equal to
/// compose(hadamard_lr(1), diagonal_rotation(1, {0})).
Apparatus uopt_n1();

/// Per-variable basis change to the diagonal basis {(|0>+-|1>)/sqrt2} for
/// every variable in `variables` (0-based), identically on both channels,
/// identity elsewhere. Channel-block-diagonal.
Apparatus diagonal_rotation(VarCount n, const std::set<int>& variables);

/// Matrix product outer.U * inner.U (detect with `outer` after evolving
/// inputs through `inner`). Throws std::invalid_argument on size mismatch.
Apparatus compose(const Apparatus& outer, const Apparatus& inner);

/// Channel-block-diagonal apparatus from 2^n x 2^n per-channel blocks:
/// odd outputs mix only left inputs via `left_block`, even outputs only
/// right inputs via `right_block`. Both blocks must be unitary.
Apparatus separate(const Eigen::MatrixXcd& left_block,
                   const Eigen::MatrixXcd& right_block, VarCount n);

/// Haar-distributed dim x dim unitary: i.i.d. standard complex Gaussian
/// entries, QR factorization, then the R-diagonal phase correction.
/// Deterministic for a given seed.
Eigen::MatrixXcd haar_unitary(int dim, std::uint64_t seed);

Apparatus haar_random(VarCount n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Inspection
// ---------------------------------------------------------------------------

/// Output mode decomposed as |i> = alpha |l_i> + beta |r_i> with |l_i>
/// (|r_i>) a unit superposition of left (right) channel inputs. alpha and
/// beta are taken real nonnegative; phases live in the channel vectors,
/// which are zero when the matching coefficient vanishes.
struct LRSplit {
  Complex alpha;
  Complex beta;
  Eigen::VectorXcd left;   // coordinates over |chi_s, L>, s = 1..2^n
  Eigen::VectorXcd right;  // coordinates over |chi_s, R>
};

LRSplit lr_split(const Apparatus& app, int out_mode);

struct UnitarityReport {
  bool pass;
  double max_deviation;  // max-entry |U U^dag - I|
  double tolerance;
};

UnitarityReport check_unitary(const Apparatus& app, double tol);

// ---------------------------------------------------------------------------
// File I/O
// ---------------------------------------------------------------------------
//
// Apparatus file: a UTF-8 JSON document with fields
//   n      integer
//   matrix 2^{n+1} rows of 2^{n+1} entries, each entry a [re, im] pair,
//          row-major, row i = output mode i (1-based semantics)
// The writer emits 17 significant digits, so save/load round-trips exactly.

class ApparatusParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ApparatusDimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ApparatusUnitarityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The canonical file serialization (also used verbatim by the CLI's
/// `matrix --format json`).
std::string apparatus_to_json(const Apparatus& app);

void save_apparatus(const Apparatus& app, const std::string& path);

/// Parses and validates an apparatus file. Throws ApparatusParseError on
/// malformed input, ApparatusDimensionError on size/n mismatch, and
/// ApparatusUnitarityError when U U^dag deviates from I beyond
/// `unitarity_tol`.
Apparatus load_apparatus(const std::string& path, double unitarity_tol = 1e-9);

/// Same validation pipeline, from an in-memory document.
Apparatus parse_apparatus(const std::string& json_text,
                          double unitarity_tol = 1e-9);

}  // namespace lelm
