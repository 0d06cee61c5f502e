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

#ifndef ENTANGLE_CIRCUIT_H_
#define ENTANGLE_CIRCUIT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace entangle {

/// Index of a wire. Qubit 0 is the top wire and the most significant bit of a
/// computational basis index.
using Qubit = std::size_t;

enum class GateKind : std::uint8_t { kI, kX, kY, kZ, kH, kT, kSW, kCX };

inline constexpr GateKind kAllGates[] = {
    GateKind::kI, GateKind::kX, GateKind::kY,  GateKind::kZ,
    GateKind::kH, GateKind::kT, GateKind::kSW, GateKind::kCX};

std::string_view gate_name(GateKind g);
std::optional<GateKind> gate_from_name(std::string_view name);

/// 1 for the single-wire gates, 2 for SW and CX.
constexpr std::size_t gate_height(GateKind g) {
  return (g == GateKind::kSW || g == GateKind::kCX) ? 2 : 1;
}

enum class NodeKind : std::uint8_t { kGate, kTensor, kSeq };

using NodeId = std::uint32_t;

struct Node {
  NodeKind kind = NodeKind::kGate;
  GateKind gate = GateKind::kI;  // meaningful for kGate only
  NodeId left = 0;
  NodeId right = 0;
  std::uint32_t height = 1;
};

/// Syntax tree of a circuit built from gates, tensor (`**`) and sequence
/// (`oo`) nodes.
///
/// Nodes live in a flat arena and refer to their children by index, so very
/// deep trees (a long `oo` chain is left-deep) never recurse on destruction
/// or traversal. Every node caches its height.
class Circuit {
 public:
  explicit Circuit(GateKind g);

  static Circuit tensor(const Circuit& left, const Circuit& right);
  static Circuit seq(const Circuit& left, const Circuit& right);

  NodeId root() const { return root_; }
  const Node& node(NodeId id) const { return nodes_[id]; }
  const Node& root_node() const { return nodes_[root_]; }
  std::size_t node_count() const { return nodes_.size(); }

  /// Structural equality; independent of arena layout.
  friend bool operator==(const Circuit& a, const Circuit& b);

 private:
  friend class CircuitBuilder;
  Circuit() = default;

  std::vector<Node> nodes_;
  NodeId root_ = 0;
};

/// Incremental construction for large circuits: O(1) per node, unlike the
/// copying `Circuit::tensor` / `Circuit::seq` combinators.
class CircuitBuilder {
 public:
  NodeId gate(GateKind g);
  NodeId tensor(NodeId left, NodeId right);
  NodeId seq(NodeId left, NodeId right);

  /// Tensor stack of `count` identity gates; `count` must be positive.
  NodeId identities(std::size_t count);

  /// Finishes the circuit rooted at `root`. The builder is left empty.
  Circuit build(NodeId root);

 private:
  NodeId push(const Node& n);
  std::vector<Node> nodes_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& message, std::size_t left_height,
                  std::size_t right_height);
  std::size_t left_height() const { return left_height_; }
  std::size_t right_height() const { return right_height_; }

 private:
  std::size_t left_height_;
  std::size_t right_height_;
};

/// Parses the textual circuit language. `**` binds tighter than `oo`, both
/// are left-associative, `#` starts a comment running to end of line.
/// Throws ParseError.
Circuit parse_circuit(std::string_view text);

/// Number of wires spanned; a Seq node reports the height of its left child.
std::size_t height(const Circuit& c);

/// Returns the qubit count if every Seq node has children of equal height.
/// Otherwise throws ValidationError for the first offending Seq node in
/// post-order (leftmost, deepest first).
std::size_t validate(const Circuit& c);

/// Canonical text form; parse_circuit(to_string(c)) == c.
std::string to_string(const Circuit& c);

/// Visits every gate leaf left to right together with the wire index it
/// starts at. Seq children share the base index; the right child of a Tensor
/// starts at base + height(left).
template <typename Visit>
void for_each_gate(const Circuit& c, Visit&& visit) {
  struct Frame {
    NodeId id;
    Qubit base;
  };
  std::vector<Frame> stack{{c.root(), 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const Node& n = c.node(f.id);
    switch (n.kind) {
      case NodeKind::kGate:
        visit(n.gate, f.base);
        break;
      case NodeKind::kSeq:
        stack.push_back({n.right, f.base});
        stack.push_back({n.left, f.base});
        break;
      case NodeKind::kTensor:
        stack.push_back({n.right, f.base + c.node(n.left).height});
        stack.push_back({n.left, f.base});
        break;
    }
  }
}

/// Number of gate leaves.
std::size_t gate_count(const Circuit& c);

}  // namespace entangle

#endif  // ENTANGLE_CIRCUIT_H_
