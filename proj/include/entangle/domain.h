// Copyright 2026 The Entangle Authors
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

#ifndef ENTANGLE_DOMAIN_H_
#define ENTANGLE_DOMAIN_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "entangle/circuit.h"

namespace entangle {

/// Basis information for one qubit: standard (|0>/|1>), diagonal (|+>/|->)
/// or unknown.
enum class BasisLabel : std::uint8_t { kStandard, kDiagonal, kTop };

/// "s", "d" or "top".
std::string_view label_name(BasisLabel l);
std::optional<BasisLabel> label_from_name(std::string_view name);

using Block = std::vector<Qubit>;

/// A set partition of {0, ..., n-1} stored as a representative array.
///
/// parent[i] is the smallest member of the block holding i. That makes the
/// array unique per partition: [0,0,2,2,4] is {{0,1},{2,3},{4}}.
/// Invariants, for every i:
///   parent[i] <= i
///   parent[parent[i]] == parent[i]
///   parent[i] == min{ j : parent[j] == parent[i] }
class Partition {
 public:
  Partition() = default;

  /// The all-singletons partition of n elements.
  static Partition singletons(std::size_t n);

  /// Adopts an array that must already be canonical; throws
  /// std::invalid_argument otherwise.
  static Partition from_parents(std::vector<Qubit> parents);

  /// Encodes a collection of disjoint blocks covering 0..n-1 (any order).
  static Partition from_blocks(std::size_t n, const std::vector<Block>& blocks);

  std::size_t size() const { return parent_.size(); }
  std::span<const Qubit> parents() const { return parent_; }
  Qubit representative(Qubit i) const;

  bool same_block(Qubit i, Qubit j) const;
  std::size_t block_size(Qubit i) const;
  bool all_singletons() const;

  /// Blocks sorted by smallest member, members ascending.
  std::vector<Block> blocks() const;

  // In-place primitives. Each keeps the array canonical in O(n).

  /// Unites the blocks of i and j; the smaller representative survives.
  void unite(Qubit i, Qubit j);
  /// Moves i into a singleton; the rest of its block keeps together.
  void isolate(Qubit i);
  /// Exchanges the block memberships of i and i+1.
  void swap_adjacent(Qubit i);

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  explicit Partition(std::vector<Qubit> parent) : parent_(std::move(parent)) {}
  void check(Qubit i) const;

  std::vector<Qubit> parent_;
};

/// pi v [i, j]
Partition join(Partition p, Qubit i, Qubit j);
/// pi \ i
Partition split(Partition p, Qubit i);
Partition swap_adjacent(Partition p, Qubit i);

/// True iff the array satisfies the three representative invariants.
bool is_canonical(std::span<const Qubit> parents);

/// The abstract state: a basis label per qubit, the non-separability
/// partition and the same-level partition.
struct AbstractState {
  std::vector<BasisLabel> labels;
  Partition sep;
  Partition lvl;

  std::size_t size() const { return labels.size(); }
  friend bool operator==(const AbstractState&, const AbstractState&) = default;
};

/// All labels standard, both partitions all-singletons: the abstraction of
/// |0...0>.
AbstractState init_state(std::size_t n);

/// Exchanges everything known about qubits i and i+1.
AbstractState swap_adjacent(AbstractState st, Qubit i);

}  // namespace entangle

#endif  // ENTANGLE_DOMAIN_H_
