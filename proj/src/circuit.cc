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

#include "entangle/circuit.h"

#include <cctype>
#include <limits>
#include <utility>

namespace entangle {

namespace {

constexpr std::string_view kGateNames[] = {"I", "X", "Y", "Z",
                                           "H", "T", "SW", "CX"};

// Copies the subtree arena of `src` into `dst`, returning the new root id.
NodeId append_arena(std::vector<Node>& dst, const Circuit& src) {
  const NodeId offset = static_cast<NodeId>(dst.size());
  for (std::size_t i = 0; i < src.node_count(); ++i) {
    Node n = src.node(static_cast<NodeId>(i));
    if (n.kind != NodeKind::kGate) {
      n.left += offset;
      n.right += offset;
    }
    dst.push_back(n);
  }
  return src.root() + offset;
}

}  // namespace

std::string_view gate_name(GateKind g) {
  return kGateNames[static_cast<std::size_t>(g)];
}

std::optional<GateKind> gate_from_name(std::string_view name) {
  for (GateKind g : kAllGates) {
    if (gate_name(g) == name) return g;
  }
  return std::nullopt;
}

Circuit::Circuit(GateKind g) {
  nodes_.push_back(Node{NodeKind::kGate, g, 0, 0,
                        static_cast<std::uint32_t>(gate_height(g))});
}

Circuit Circuit::tensor(const Circuit& left, const Circuit& right) {
  Circuit c;
  c.nodes_.reserve(left.node_count() + right.node_count() + 1);
  const NodeId l = append_arena(c.nodes_, left);
  const NodeId r = append_arena(c.nodes_, right);
  c.nodes_.push_back(Node{NodeKind::kTensor, GateKind::kI, l, r,
                          left.root_node().height + right.root_node().height});
  c.root_ = static_cast<NodeId>(c.nodes_.size() - 1);
  return c;
}

Circuit Circuit::seq(const Circuit& left, const Circuit& right) {
  Circuit c;
  c.nodes_.reserve(left.node_count() + right.node_count() + 1);
  const NodeId l = append_arena(c.nodes_, left);
  const NodeId r = append_arena(c.nodes_, right);
  c.nodes_.push_back(
      Node{NodeKind::kSeq, GateKind::kI, l, r, left.root_node().height});
  c.root_ = static_cast<NodeId>(c.nodes_.size() - 1);
  return c;
}

bool operator==(const Circuit& a, const Circuit& b) {
  std::vector<std::pair<NodeId, NodeId>> stack{{a.root(), b.root()}};
  while (!stack.empty()) {
    const auto [ia, ib] = stack.back();
    stack.pop_back();
    const Node& na = a.node(ia);
    const Node& nb = b.node(ib);
    if (na.kind != nb.kind) return false;
    if (na.kind == NodeKind::kGate) {
      if (na.gate != nb.gate) return false;
      continue;
    }
    stack.emplace_back(na.right, nb.right);
    stack.emplace_back(na.left, nb.left);
  }
  return true;
}

NodeId CircuitBuilder::push(const Node& n) {
  if (nodes_.size() >= std::numeric_limits<NodeId>::max()) {
    throw std::length_error("circuit exceeds the node limit");
  }
  nodes_.push_back(n);
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId CircuitBuilder::gate(GateKind g) {
  return push(Node{NodeKind::kGate, g, 0, 0,
                   static_cast<std::uint32_t>(gate_height(g))});
}

NodeId CircuitBuilder::tensor(NodeId left, NodeId right) {
  return push(Node{NodeKind::kTensor, GateKind::kI, left, right,
                   nodes_[left].height + nodes_[right].height});
}

NodeId CircuitBuilder::seq(NodeId left, NodeId right) {
  return push(
      Node{NodeKind::kSeq, GateKind::kI, left, right, nodes_[left].height});
}

NodeId CircuitBuilder::identities(std::size_t count) {
  if (count == 0) throw std::invalid_argument("identity stack needs a wire");
  NodeId acc = gate(GateKind::kI);
  for (std::size_t i = 1; i < count; ++i) acc = tensor(acc, gate(GateKind::kI));
  return acc;
}

Circuit CircuitBuilder::build(NodeId root) {
  if (root >= nodes_.size()) throw std::out_of_range("unknown root node");
  Circuit c;
  c.nodes_ = std::exchange(nodes_, {});
  c.root_ = root;
  return c;
}

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

ValidationError::ValidationError(const std::string& message,
                                 std::size_t left_height,
                                 std::size_t right_height)
    : std::runtime_error(message),
      left_height_(left_height),
      right_height_(right_height) {}

namespace {

enum class TokenKind { kGate, kTensor, kSeq, kLParen, kRParen, kEnd };

struct Token {
  TokenKind kind;
  GateKind gate = GateKind::kI;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) {
      t.kind = TokenKind::kEnd;
      t.text = "end of input";
      return t;
    }
    const char ch = text_[pos_];
    if (ch == '(' || ch == ')') {
      t.kind = ch == '(' ? TokenKind::kLParen : TokenKind::kRParen;
      t.text = std::string(1, ch);
      advance();
      return t;
    }
    if (ch == '*') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        t.kind = TokenKind::kTensor;
        t.text = "**";
        advance();
        advance();
        return t;
      }
      throw ParseError("unknown token '*' (did you mean '**'?)", t.line,
                       t.column);
    }
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) ||
              text_[end] == '_')) {
        ++end;
      }
      t.text = std::string(text_.substr(pos_, end - pos_));
      while (pos_ < end) advance();
      if (t.text == "oo") {
        t.kind = TokenKind::kSeq;
        return t;
      }
      if (auto g = gate_from_name(t.text)) {
        t.kind = TokenKind::kGate;
        t.gate = *g;
        return t;
      }
      throw ParseError("unknown token '" + t.text + "'", t.line, t.column);
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", t.line,
                     t.column);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// seq := tensor ("oo" tensor)* ; tensor := atom ("**" atom)* ;
// atom := gate | "(" seq ")"
class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Circuit parse() {
    if (look_.kind == TokenKind::kEnd) {
      throw ParseError("empty circuit", look_.line, look_.column);
    }
    const NodeId root = parse_seq();
    if (look_.kind == TokenKind::kRParen) {
      throw ParseError("unbalanced ')'", look_.line, look_.column);
    }
    if (look_.kind != TokenKind::kEnd) {
      throw ParseError("expected 'oo', '**' or end of input, found '" +
                           look_.text + "'",
                       look_.line, look_.column);
    }
    return builder_.build(root);
  }

 private:
  void shift() { look_ = lexer_.next(); }

  NodeId parse_seq() {
    NodeId acc = parse_tensor();
    while (look_.kind == TokenKind::kSeq) {
      const Token op = look_;
      shift();
      acc = builder_.seq(acc, parse_operand(op));
    }
    return acc;
  }

  NodeId parse_tensor() {
    NodeId acc = parse_atom();
    while (look_.kind == TokenKind::kTensor) {
      const Token op = look_;
      shift();
      if (!starts_atom()) dangling(op);
      acc = builder_.tensor(acc, parse_atom());
    }
    return acc;
  }

  NodeId parse_operand(const Token& op) {
    if (!starts_atom()) dangling(op);
    return parse_tensor();
  }

  NodeId parse_atom() {
    if (look_.kind == TokenKind::kGate) {
      const NodeId id = builder_.gate(look_.gate);
      shift();
      return id;
    }
    if (look_.kind == TokenKind::kLParen) {
      const Token open = look_;
      shift();
      if (look_.kind == TokenKind::kRParen) {
        throw ParseError("empty parentheses", look_.line, look_.column);
      }
      const NodeId inner = parse_seq();
      if (look_.kind != TokenKind::kRParen) {
        throw ParseError("unbalanced '(' opened here", open.line, open.column);
      }
      shift();
      return inner;
    }
    throw ParseError("expected a gate or '(', found '" + look_.text + "'",
                     look_.line, look_.column);
  }

  bool starts_atom() const {
    return look_.kind == TokenKind::kGate || look_.kind == TokenKind::kLParen;
  }

  [[noreturn]] void dangling(const Token& op) const {
    throw ParseError("dangling operator '" + op.text + "'", op.line,
                     op.column);
  }

  Lexer lexer_;
  CircuitBuilder builder_;
  Token look_;
};

}  // namespace

Circuit parse_circuit(std::string_view text) { return Parser(text).parse(); }

std::size_t height(const Circuit& c) { return c.root_node().height; }

std::size_t validate(const Circuit& c) {
  // Iterative post-order: children are fully checked before their parent.
  struct Frame {
    NodeId id;
    bool expanded;
  };
  std::vector<Frame> stack{{c.root(), false}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Node& n = c.node(f.id);
    if (n.kind == NodeKind::kGate) {
      stack.pop_back();
      continue;
    }
    if (!f.expanded) {
      f.expanded = true;
      const NodeId left = n.left;
      const NodeId right = n.right;
      stack.push_back({right, false});
      stack.push_back({left, false});
      continue;
    }
    stack.pop_back();
    if (n.kind == NodeKind::kSeq) {
      const std::size_t lh = c.node(n.left).height;
      const std::size_t rh = c.node(n.right).height;
      if (lh != rh) {
        throw ValidationError("'oo' composes circuits of height " +
                                  std::to_string(lh) + " and " +
                                  std::to_string(rh),
                              lh, rh);
      }
    }
  }
  return height(c);
}

std::string to_string(const Circuit& c) {
  // Work items are either a node to print or a literal to emit.
  struct Item {
    NodeId id;
    const char* literal;
  };
  std::string out;
  std::vector<Item> stack{{c.root(), nullptr}};
  auto push_child = [&](NodeId id, bool parens) {
    if (parens) stack.push_back({0, ")"});
    stack.push_back({id, nullptr});
    if (parens) stack.push_back({0, "("});
  };
  while (!stack.empty()) {
    const Item item = stack.back();
    stack.pop_back();
    if (item.literal != nullptr) {
      out += item.literal;
      continue;
    }
    const Node& n = c.node(item.id);
    const NodeKind lk = n.kind == NodeKind::kGate ? NodeKind::kGate
                                                  : c.node(n.left).kind;
    const NodeKind rk = n.kind == NodeKind::kGate ? NodeKind::kGate
                                                  : c.node(n.right).kind;
    switch (n.kind) {
      case NodeKind::kGate:
        out += gate_name(n.gate);
        break;
      case NodeKind::kSeq:
        push_child(n.right, rk == NodeKind::kSeq);
        stack.push_back({0, " oo "});
        push_child(n.left, false);
        break;
      case NodeKind::kTensor:
        push_child(n.right, rk != NodeKind::kGate);
        stack.push_back({0, " ** "});
        push_child(n.left, lk == NodeKind::kSeq);
        break;
    }
  }
  return out;
}

std::size_t gate_count(const Circuit& c) {
  std::size_t count = 0;
  for_each_gate(c, [&count](GateKind, Qubit) { ++count; });
  return count;
}

}  // namespace entangle
