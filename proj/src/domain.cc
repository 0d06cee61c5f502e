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

#include "entangle/domain.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace entangle {

std::string_view label_name(BasisLabel l) {
  switch (l) {
    case BasisLabel::kStandard:
      return "s";
    case BasisLabel::kDiagonal:
      return "d";
    case BasisLabel::kTop:
      return "top";
  }
  return "?";
}

std::optional<BasisLabel> label_from_name(std::string_view name) {
  if (name == "s") return BasisLabel::kStandard;
  if (name == "d") return BasisLabel::kDiagonal;
  if (name == "top") return BasisLabel::kTop;
  return std::nullopt;
}

bool is_canonical(std::span<const Qubit> parents) {
  const std::size_t n = parents.size();
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Qubit r = parents[i];
    if (r > i) return false;
    if (parents[r] != r) return false;
    if (!seen[r]) {
      // The first occurrence of a representative must be the representative
      // itself, otherwise some smaller member is labeled by a larger index.
      if (r != i) return false;
      seen[r] = true;
    }
  }
  return true;
}

Partition Partition::singletons(std::size_t n) {
  std::vector<Qubit> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  return Partition(std::move(parent));
}

Partition Partition::from_parents(std::vector<Qubit> parents) {
  if (!is_canonical(parents)) {
    throw std::invalid_argument("partition array is not canonical");
  }
  return Partition(std::move(parents));
}

Partition Partition::from_blocks(std::size_t n,
                                 const std::vector<Block>& blocks) {
  constexpr Qubit kUnset = static_cast<Qubit>(-1);
  std::vector<Qubit> parent(n, kUnset);
  for (const Block& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    const Qubit rep = *std::min_element(b.begin(), b.end());
    for (Qubit q : b) {
      if (q >= n) throw std::invalid_argument("block member out of range");
      if (parent[q] != kUnset) {
        throw std::invalid_argument("qubit " + std::to_string(q) +
                                    " appears in two blocks");
      }
      parent[q] = rep;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (parent[i] == kUnset) {
      throw std::invalid_argument("qubit " + std::to_string(i) +
                                  " is not covered by any block");
    }
  }
  return Partition(std::move(parent));
}

void Partition::check(Qubit i) const {
  if (i >= parent_.size()) {
    throw std::out_of_range("qubit " + std::to_string(i) +
                            " out of range for partition of size " +
                            std::to_string(parent_.size()));
  }
}

Qubit Partition::representative(Qubit i) const {
  check(i);
  return parent_[i];
}

bool Partition::same_block(Qubit i, Qubit j) const {
  check(i);
  check(j);
  return parent_[i] == parent_[j];
}

std::size_t Partition::block_size(Qubit i) const {
  check(i);
  const Qubit r = parent_[i];
  return static_cast<std::size_t>(
      std::count(parent_.begin() + static_cast<std::ptrdiff_t>(r),
                 parent_.end(), r));
}

bool Partition::all_singletons() const {
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    if (parent_[i] != i) return false;
  }
  return true;
}

std::vector<Block> Partition::blocks() const {
  std::vector<Block> out;
  std::vector<std::size_t> slot(parent_.size());
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    if (parent_[i] == i) {
      slot[i] = out.size();
      out.push_back({i});
    } else {
      out[slot[parent_[i]]].push_back(i);
    }
  }
  return out;
}

void Partition::unite(Qubit i, Qubit j) {
  check(i);
  check(j);
  const Qubit a = parent_[i];
  const Qubit b = parent_[j];
  if (a == b) return;
  const Qubit lo = std::min(a, b);
  const Qubit hi = std::max(a, b);
  // Members of the block represented by hi are all >= hi.
  for (std::size_t k = hi; k < parent_.size(); ++k) {
    if (parent_[k] == hi) parent_[k] = lo;
  }
}

void Partition::isolate(Qubit i) {
  check(i);
  const Qubit rep = parent_[i];
  if (rep != i) {
    // i is not a representative, so the label i is unused.
    parent_[i] = i;
    return;
  }
  // i represents its block: promote the next-lowest member.
  std::size_t next = i + 1;
  while (next < parent_.size() && parent_[next] != i) ++next;
  if (next == parent_.size()) return;  // already a singleton
  for (std::size_t k = next; k < parent_.size(); ++k) {
    if (parent_[k] == i) parent_[k] = next;
  }
}

void Partition::swap_adjacent(Qubit i) {
  check(i);
  check(i + 1);
  const Qubit a = parent_[i];
  const Qubit b = parent_[i + 1];
  if (a == b) return;
  std::swap(parent_[i], parent_[i + 1]);
  // Only the two affected blocks can change representative; recompute both
  // before rewriting so the relabeling is simultaneous.
  auto min_member = [this](Qubit label) {
    for (std::size_t k = 0; k < parent_.size(); ++k) {
      if (parent_[k] == label) return static_cast<Qubit>(k);
    }
    return label;
  };
  const Qubit new_a = min_member(a);
  const Qubit new_b = min_member(b);
  for (Qubit& p : parent_) {
    if (p == a) {
      p = new_a;
    } else if (p == b) {
      p = new_b;
    }
  }
}

Partition join(Partition p, Qubit i, Qubit j) {
  p.unite(i, j);
  return p;
}

Partition split(Partition p, Qubit i) {
  p.isolate(i);
  return p;
}

Partition swap_adjacent(Partition p, Qubit i) {
  p.swap_adjacent(i);
  return p;
}

AbstractState init_state(std::size_t n) {
  return AbstractState{std::vector<BasisLabel>(n, BasisLabel::kStandard),
                       Partition::singletons(n), Partition::singletons(n)};
}

AbstractState swap_adjacent(AbstractState st, Qubit i) {
  if (i + 1 >= st.size()) {
    throw std::out_of_range("swap at " + std::to_string(i) +
                            " needs two wires in a state of size " +
                            std::to_string(st.size()));
  }
  std::swap(st.labels[i], st.labels[i + 1]);
  st.sep.swap_adjacent(i);
  st.lvl.swap_adjacent(i);
  return st;
}

}  // namespace entangle
