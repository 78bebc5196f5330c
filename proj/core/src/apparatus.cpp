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

#include "lelm/apparatus.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace lelm {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

Apparatus::Apparatus(VarCount n, Eigen::MatrixXcd unitary)
    : n_(n), u_(std::move(unitary)) {
  const int dim = n.mode_count();
  if (u_.rows() != dim || u_.cols() != dim) {
    throw std::invalid_argument("Apparatus: matrix must be " +
                                std::to_string(dim) + "x" +
                                std::to_string(dim) + " for n = " +
                                std::to_string(n.value()));
  }
}

Apparatus hadamard_lr(VarCount n) {
  const int dim = n.mode_count();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (int s = 1; s <= n.string_count(); ++s) {
    const int l = left_mode(s) - 1;
    const int r = right_mode(s) - 1;
    u(l, l) = kInvSqrt2;
    u(l, r) = kInvSqrt2;
    u(r, l) = kInvSqrt2;
    u(r, r) = -kInvSqrt2;
  }
  return Apparatus(n, std::move(u));
}

Apparatus projective_separate(VarCount n) {
  return Apparatus(n, Eigen::MatrixXcd::Identity(n.mode_count(), n.mode_count()));
}

Apparatus uopt_n1() {
  Eigen::MatrixXcd u(4, 4);
  u << 1, 1, 1, 1,
       1, -1, 1, -1,
       1, 1, -1, -1,
       1, -1, -1, 1;
  u *= 0.5;
  return Apparatus(VarCount(1), std::move(u));
}

Apparatus diagonal_rotation(VarCount n, const std::set<int>& variables) {
  for (const int v : variables) {
    if (v < 0 || v >= n.value()) {
      throw std::invalid_argument("diagonal_rotation: variable index " +
                                  std::to_string(v) + " out of 0.." +
                                  std::to_string(n.value() - 1));
    }
  }
  std::uint32_t rotated = 0;
  for (const int v : variables) rotated |= 1u << v;

  const int strings = n.string_count();
  const int dim = n.mode_count();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (int sp = 0; sp < strings; ++sp) {
    for (int s = 0; s < strings; ++s) {
      // Per-variable factor: Hadamard on rotated variables, delta elsewhere.
      double entry = 1.0;
      bool zero = false;
      for (int v = 0; v < n.value() && !zero; ++v) {
        const int out_bit = (sp >> v) & 1;
        const int in_bit = (s >> v) & 1;
        if (rotated & (1u << v)) {
          entry *= (out_bit == 1 && in_bit == 1) ? -kInvSqrt2 : kInvSqrt2;
        } else if (out_bit != in_bit) {
          zero = true;
        }
      }
      if (zero) continue;
      u(left_mode(sp + 1) - 1, left_mode(s + 1) - 1) = entry;
      u(right_mode(sp + 1) - 1, right_mode(s + 1) - 1) = entry;
    }
  }
  return Apparatus(n, std::move(u));
}

Apparatus compose(const Apparatus& outer, const Apparatus& inner) {
  if (!(outer.var_count() == inner.var_count())) {
    throw std::invalid_argument("compose: apparatus sizes differ");
  }
  return Apparatus(outer.var_count(), outer.unitary() * inner.unitary());
}

Apparatus separate(const Eigen::MatrixXcd& left_block,
                   const Eigen::MatrixXcd& right_block, VarCount n) {
  const int strings = n.string_count();
  auto check_block = [&](const Eigen::MatrixXcd& block, const char* name) {
    if (block.rows() != strings || block.cols() != strings) {
      throw std::invalid_argument(std::string("separate: ") + name +
                                  " block must be " + std::to_string(strings) +
                                  "x" + std::to_string(strings));
    }
    const double dev = (block * block.adjoint() -
                        Eigen::MatrixXcd::Identity(strings, strings))
                           .cwiseAbs()
                           .maxCoeff();
    if (dev > 1e-9) {
      throw std::invalid_argument(std::string("separate: ") + name +
                                  " block is not unitary (deviation " +
                                  std::to_string(dev) + ")");
    }
  };
  check_block(left_block, "left");
  check_block(right_block, "right");

  const int dim = n.mode_count();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (int sp = 1; sp <= strings; ++sp) {
    for (int s = 1; s <= strings; ++s) {
      u(left_mode(sp) - 1, left_mode(s) - 1) = left_block(sp - 1, s - 1);
      u(right_mode(sp) - 1, right_mode(s) - 1) = right_block(sp - 1, s - 1);
    }
  }
  return Apparatus(n, std::move(u));
}

Eigen::MatrixXcd haar_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("haar_unitary: dim must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd a(dim, dim);
  // Row-major fill, real part before imaginary, so the stream layout is
  // part of the seeding contract.
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      a(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  // Fix the gauge: multiply column k by r_kk/|r_kk| so the distribution is
  // Haar rather than QR-convention dependent.
  const Eigen::VectorXcd r_diag = qr.matrixQR().diagonal();
  for (int k = 0; k < dim; ++k) {
    const double mag = std::abs(r_diag(k));
    const Complex phase = mag > 0.0 ? r_diag(k) / mag : Complex(1.0, 0.0);
    q.col(k) *= phase;
  }
  return q;
}

Apparatus haar_random(VarCount n, std::uint64_t seed) {
  return Apparatus(n, haar_unitary(n.mode_count(), seed));
}

LRSplit lr_split(const Apparatus& app, int out_mode) {
  const int dim = app.mode_count();
  if (out_mode < 1 || out_mode > dim) {
    throw std::out_of_range("lr_split: output mode out of range");
  }
  const int strings = app.var_count().string_count();
  LRSplit split;
  split.left = Eigen::VectorXcd::Zero(strings);
  split.right = Eigen::VectorXcd::Zero(strings);
  for (int s = 1; s <= strings; ++s) {
    split.left(s - 1) = app.entry(out_mode, left_mode(s));
    split.right(s - 1) = app.entry(out_mode, right_mode(s));
  }
  const double lnorm = split.left.norm();
  const double rnorm = split.right.norm();
  split.alpha = Complex(lnorm, 0.0);
  split.beta = Complex(rnorm, 0.0);
  if (lnorm > 0.0) {
    split.left /= lnorm;
  } else {
    split.left.setZero();
  }
  if (rnorm > 0.0) {
    split.right /= rnorm;
  } else {
    split.right.setZero();
  }
  return split;
}

UnitarityReport check_unitary(const Apparatus& app, double tol) {
  const int dim = app.mode_count();
  const double dev = (app.unitary() * app.unitary().adjoint() -
                      Eigen::MatrixXcd::Identity(dim, dim))
                         .cwiseAbs()
                         .maxCoeff();
  return UnitarityReport{dev <= tol, dev, tol};
}

// ---------------------------------------------------------------------------
// File I/O
// ---------------------------------------------------------------------------

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::string apparatus_to_json(const Apparatus& app) {
  const int dim = app.mode_count();
  std::ostringstream out;
  out << "{\n  \"n\": " << app.var_count().value() << ",\n  \"matrix\": [\n";
  for (int i = 0; i < dim; ++i) {
    out << "    [";
    for (int m = 0; m < dim; ++m) {
      const Complex e = app.unitary()(i, m);
      out << '[' << format_double(e.real()) << ", " << format_double(e.imag())
          << ']';
      if (m + 1 < dim) out << ", ";
    }
    out << ']' << (i + 1 < dim ? "," : "") << '\n';
  }
  out << "  ]\n}\n";
  return out.str();
}

void save_apparatus(const Apparatus& app, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("save_apparatus: cannot open " + path);
  }
  out << apparatus_to_json(app);
  if (!out) {
    throw std::runtime_error("save_apparatus: write failed for " + path);
  }
}

Apparatus parse_apparatus(const std::string& json_text, double unitarity_tol) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ApparatusParseError(std::string("apparatus file: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("matrix")) {
    throw ApparatusParseError(
        "apparatus file: expected an object with fields \"n\" and \"matrix\"");
  }
  if (!doc["n"].is_number_integer()) {
    throw ApparatusParseError("apparatus file: \"n\" must be an integer");
  }
  const long long n_raw = doc["n"].get<long long>();
  if (n_raw < 1 || n_raw > VarCount::max_vars) {
    throw ApparatusDimensionError("apparatus file: n = " +
                                  std::to_string(n_raw) + " out of 1.." +
                                  std::to_string(VarCount::max_vars));
  }
  const VarCount n(static_cast<int>(n_raw));
  const int dim = n.mode_count();

  const auto& rows = doc["matrix"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw ApparatusDimensionError(
        "apparatus file: matrix must have " + std::to_string(dim) +
        " rows, got " + std::to_string(rows.is_array() ? rows.size() : 0));
  }
  Eigen::MatrixXcd u(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ApparatusDimensionError("apparatus file: row " +
                                    std::to_string(i + 1) + " must have " +
                                    std::to_string(dim) + " entries");
    }
    for (int m = 0; m < dim; ++m) {
      const auto& entry = row[m];
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number() || !entry[1].is_number()) {
        throw ApparatusParseError("apparatus file: entry (" +
                                  std::to_string(i + 1) + "," +
                                  std::to_string(m + 1) +
                                  ") must be a [re, im] pair");
      }
      u(i, m) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  Apparatus app(n, std::move(u));
  const UnitarityReport report = check_unitary(app, unitarity_tol);
  if (!report.pass) {
    throw ApparatusUnitarityError(
        "apparatus file: matrix is not unitary (max deviation " +
        std::to_string(report.max_deviation) + " > tolerance " +
        std::to_string(unitarity_tol) + ")");
  }
  return app;
}

Apparatus load_apparatus(const std::string& path, double unitarity_tol) {
  std::ifstream in(path);
  if (!in) {
    throw ApparatusParseError("load_apparatus: cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_apparatus(buf.str(), unitarity_tol);
}

}  // namespace lelm
