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

// Distinguishable Bell-state classes.
//
// Two states sharing a support outcome cannot be told apart by that click
// pair, and reliability is transitive: classes are the connected components
// of the shares-an-outcome relation. For two copies measured in two
// apparatuses, states are confusable only if their supports intersect in
// both, and components are taken of that joint relation.

#include <cstdint>
#include <utility>
#include <vector>

#include "lelm/apparatus.hpp"
#include "lelm/detection.hpp"
#include "lelm/types.hpp"

namespace lelm {

/// Vertices are the 4^n label indices; the edge list is a generating set
/// (union-find closes it), not the transitive closure.
struct ConfusabilityGraph {
  std::uint64_t vertex_count = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
};

ConfusabilityGraph confusability_graph(const SignatureTable& table);

/// Edges join labels whose supports intersect in BOTH tables.
ConfusabilityGraph two_copy_confusability_graph(const SignatureTable& first,
                                                const SignatureTable& second);

/// Disjoint classes covering all 4^n labels. Classes are ordered by their
/// smallest member and members are sorted, so reports are stable.
struct Partition {
  VarCount n;
  std::vector<std::vector<std::uint64_t>> classes;

  std::uint64_t class_count() const { return classes.size(); }
  bool all_singletons() const {
    return class_count() == n.label_count();
  }
};

Partition components(const ConfusabilityGraph& graph, VarCount n);

Partition partition_classes(const SignatureTable& table);

Partition two_copy_partition(const SignatureTable& first,
                             const SignatureTable& second);

Partition two_copy_partition(const Apparatus& first, const Apparatus& second,
                             Statistics stats, double eps = 1e-9);

/// Which ceiling a partition is held to: 2^{n+1}-1 for a general one-copy
/// apparatus, 2^n when the channels never interfere.
enum class BoundMode { one_copy, separate_channel };

const char* to_string(BoundMode mode);

std::uint64_t class_bound(VarCount n, BoundMode mode);

struct BoundReport {
  bool pass;
  BoundMode mode;
  std::uint64_t class_count;
  std::uint64_t bound;
  std::vector<std::uint64_t> class_sizes;  // in class order
};

BoundReport verify_bound(const Partition& partition, VarCount n,
                         BoundMode mode);

/// Outcome ownership per class: `exclusive` outcomes appear in no other
/// class's support union, `shared` in at least one other's. For a partition
/// built from connected components the shared set is empty by construction;
/// it is reported anyway so arbitrary partitions can be audited.
struct ClassSignature {
  std::vector<std::uint64_t> members;
  std::vector<OutcomePair> exclusive;
  std::vector<OutcomePair> shared;
};

std::vector<ClassSignature> class_signature_report(const SignatureTable& table,
                                                   const Partition& partition);

}  // namespace lelm
