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

#include "lelm/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lelm {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::uint64_t count) : parent_(count), size_(count, 1) {
    std::iota(parent_.begin(), parent_.end(), std::uint64_t{0});
  }

  std::uint64_t find(std::uint64_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint64_t a, std::uint64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::uint64_t> parent_;
  std::vector<std::uint64_t> size_;
};

// Support sets as bitmasks over outcome ranks, for O(outcomes/64)
// intersection tests.
std::vector<std::vector<std::uint64_t>> support_masks(
    const SignatureTable& table) {
  const VarCount n = table.var_count();
  const int dim = n.mode_count();
  const std::size_t outcome_count =
      static_cast<std::size_t>(dim) * (dim + 1) / 2;
  const std::size_t words = (outcome_count + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(
      table.label_count(), std::vector<std::uint64_t>(words, 0));
  for (std::uint64_t idx = 0; idx < table.label_count(); ++idx) {
    for (const SignatureTable::Entry& entry : table.support(idx)) {
      const std::size_t rank = outcome_rank(entry.outcome, n);
      masks[idx][rank / 64] |= std::uint64_t{1} << (rank % 64);
    }
  }
  return masks;
}

bool intersects(const std::vector<std::uint64_t>& a,
                const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

void require_same_n(const SignatureTable& a, const SignatureTable& b) {
  if (!(a.var_count() == b.var_count())) {
    throw std::invalid_argument("signature tables disagree on n");
  }
}

}  // namespace

ConfusabilityGraph confusability_graph(const SignatureTable& table) {
  ConfusabilityGraph graph;
  graph.vertex_count = table.label_count();
  // First label seen per outcome; later labels sharing it get one edge each.
  std::map<OutcomePair, std::uint64_t> first_owner;
  for (std::uint64_t idx = 0; idx < table.label_count(); ++idx) {
    for (const SignatureTable::Entry& entry : table.support(idx)) {
      auto [it, inserted] = first_owner.try_emplace(entry.outcome, idx);
      if (!inserted && it->second != idx) {
        graph.edges.emplace_back(it->second, idx);
      }
    }
  }
  return graph;
}

ConfusabilityGraph two_copy_confusability_graph(const SignatureTable& first,
                                                const SignatureTable& second) {
  require_same_n(first, second);
  ConfusabilityGraph graph;
  graph.vertex_count = first.label_count();
  const auto masks1 = support_masks(first);
  const auto masks2 = support_masks(second);
  for (std::uint64_t a = 0; a < graph.vertex_count; ++a) {
    for (std::uint64_t b = a + 1; b < graph.vertex_count; ++b) {
      if (intersects(masks1[a], masks1[b]) && intersects(masks2[a], masks2[b])) {
        graph.edges.emplace_back(a, b);
      }
    }
  }
  return graph;
}

Partition components(const ConfusabilityGraph& graph, VarCount n) {
  if (graph.vertex_count != n.label_count()) {
    throw std::invalid_argument("components: vertex count does not match n");
  }
  UnionFind uf(graph.vertex_count);
  for (const auto& [a, b] : graph.edges) {
    if (a >= graph.vertex_count || b >= graph.vertex_count) {
      throw std::out_of_range("components: edge endpoint out of range");
    }
    uf.unite(a, b);
  }
  // Group by root; iterating labels in order keeps classes sorted by their
  // smallest member and members ascending.
  std::map<std::uint64_t, std::size_t> root_to_class;
  Partition partition{n, {}};
  for (std::uint64_t idx = 0; idx < graph.vertex_count; ++idx) {
    const std::uint64_t root = uf.find(idx);
    auto [it, inserted] = root_to_class.try_emplace(root, partition.classes.size());
    if (inserted) {
      partition.classes.emplace_back();
    }
    partition.classes[it->second].push_back(idx);
  }
  std::sort(partition.classes.begin(), partition.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return partition;
}

Partition partition_classes(const SignatureTable& table) {
  return components(confusability_graph(table), table.var_count());
}

Partition two_copy_partition(const SignatureTable& first,
                             const SignatureTable& second) {
  return components(two_copy_confusability_graph(first, second),
                    first.var_count());
}

Partition two_copy_partition(const Apparatus& first, const Apparatus& second,
                             Statistics stats, double eps) {
  if (!(first.var_count() == second.var_count())) {
    throw std::invalid_argument("two_copy_partition: apparatus sizes differ");
  }
  return two_copy_partition(SignatureTable::build(first, stats, eps),
                            SignatureTable::build(second, stats, eps));
}

const char* to_string(BoundMode mode) {
  return mode == BoundMode::one_copy ? "one-copy" : "separate-channel";
}

std::uint64_t class_bound(VarCount n, BoundMode mode) {
  return mode == BoundMode::one_copy
             ? (std::uint64_t{1} << (n.value() + 1)) - 1
             : (std::uint64_t{1} << n.value());
}

BoundReport verify_bound(const Partition& partition, VarCount n,
                         BoundMode mode) {
  if (!(partition.n == n)) {
    throw std::invalid_argument("verify_bound: partition was built for a different n");
  }
  BoundReport report;
  report.mode = mode;
  report.bound = class_bound(n, mode);
  report.class_count = partition.class_count();
  report.pass = report.class_count <= report.bound;
  report.class_sizes.reserve(partition.classes.size());
  for (const auto& members : partition.classes) {
    report.class_sizes.push_back(members.size());
  }
  return report;
}

std::vector<ClassSignature> class_signature_report(const SignatureTable& table,
                                                   const Partition& partition) {
  if (!(table.var_count() == partition.n)) {
    throw std::invalid_argument("class_signature_report: n mismatch");
  }
  // Count owning classes per outcome, then split each class's union into
  // exclusively-owned and shared outcomes.
  std::map<OutcomePair, int> owner_count;
  std::vector<std::set<OutcomePair>> unions(partition.classes.size());
  for (std::size_t c = 0; c < partition.classes.size(); ++c) {
    for (const std::uint64_t idx : partition.classes[c]) {
      for (const SignatureTable::Entry& entry : table.support(idx)) {
        unions[c].insert(entry.outcome);
      }
    }
    for (const OutcomePair out : unions[c]) {
      ++owner_count[out];
    }
  }
  std::vector<ClassSignature> report(partition.classes.size());
  for (std::size_t c = 0; c < partition.classes.size(); ++c) {
    report[c].members = partition.classes[c];
    for (const OutcomePair out : unions[c]) {
      (owner_count[out] == 1 ? report[c].exclusive : report[c].shared)
          .push_back(out);
    }
  }
  return report;
}

}  // namespace lelm
