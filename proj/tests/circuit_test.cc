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

#include <functional>
#include <memory>
#include <random>

#include "gtest/gtest.h"
#include "test_support.h"

namespace entangle {
namespace {

Circuit G(GateKind g) { return Circuit(g); }
Circuit T(const Circuit& a, const Circuit& b) { return Circuit::tensor(a, b); }
Circuit S(const Circuit& a, const Circuit& b) { return Circuit::seq(a, b); }

constexpr GateKind kH = GateKind::kH;
constexpr GateKind kI = GateKind::kI;
constexpr GateKind kX = GateKind::kX;
constexpr GateKind kZ = GateKind::kZ;
constexpr GateKind kCX = GateKind::kCX;

TEST(ParseCircuit, TensorBindsTighterThanSeq) {
  EXPECT_EQ(parse_circuit("H ** I oo CX"), S(T(G(kH), G(kI)), G(kCX)));
}

TEST(ParseCircuit, SingleGate) { EXPECT_EQ(parse_circuit("I"), G(kI)); }

TEST(ParseCircuit, ParenthesesOverridePrecedence) {
  EXPECT_EQ(parse_circuit("H ** (X oo Z)"), T(G(kH), S(G(kX), G(kZ))));
}

TEST(ParseCircuit, OperatorsAreLeftAssociative) {
  EXPECT_EQ(parse_circuit("H ** I ** X"), T(T(G(kH), G(kI)), G(kX)));
  EXPECT_EQ(parse_circuit("H oo X oo Z"), S(S(G(kH), G(kX)), G(kZ)));
}

TEST(ParseCircuit, AllGateNames) {
  for (GateKind g : kAllGates) {
    EXPECT_EQ(parse_circuit(gate_name(g)), G(g)) << gate_name(g);
  }
}

TEST(ParseCircuit, CommentsAndWhitespace) {
  const char* text =
      "# Bell pair\n"
      "  H**I   # prepare\n"
      "\too\n"
      "CX\n";
  EXPECT_EQ(parse_circuit(text), S(T(G(kH), G(kI)), G(kCX)));
}

TEST(ParseCircuit, RejectsUnknownTokenWithPosition) {
  try {
    parse_circuit("H ** I\noo CZ");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 4u);
    EXPECT_NE(std::string(e.what()).find("CZ"), std::string::npos);
  }
}

TEST(ParseCircuit, RejectsOtherControlledGates) {
  EXPECT_THROW(parse_circuit("CY"), ParseError);
  EXPECT_THROW(parse_circuit("CZ"), ParseError);
  EXPECT_THROW(parse_circuit("h"), ParseError);
}

TEST(ParseCircuit, RejectsDanglingOperators) {
  EXPECT_THROW(parse_circuit("H **"), ParseError);
  EXPECT_THROW(parse_circuit("H oo"), ParseError);
  EXPECT_THROW(parse_circuit("oo H"), ParseError);
  EXPECT_THROW(parse_circuit("H ** oo X"), ParseError);
  EXPECT_THROW(parse_circuit("H * I"), ParseError);
  try {
    parse_circuit("H oo\n  ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(ParseCircuit, RejectsUnbalancedParentheses) {
  EXPECT_THROW(parse_circuit("(H ** I"), ParseError);
  EXPECT_THROW(parse_circuit("H ** I)"), ParseError);
  EXPECT_THROW(parse_circuit("()"), ParseError);
  EXPECT_THROW(parse_circuit("H H"), ParseError);
  EXPECT_THROW(parse_circuit(""), ParseError);
  EXPECT_THROW(parse_circuit("  # nothing here\n"), ParseError);
}

TEST(Height, GateAndCompositionRules) {
  EXPECT_EQ(height(G(kCX)), 2u);
  EXPECT_EQ(height(G(GateKind::kSW)), 2u);
  EXPECT_EQ(height(G(GateKind::kT)), 1u);
  EXPECT_EQ(height(T(G(kH), G(kI))), 2u);
  EXPECT_EQ(height(S(T(G(kH), G(kI)), G(kCX))), 2u);
  // Seq reports its left child even when invalid.
  EXPECT_EQ(height(S(G(kH), G(kCX))), 1u);
}

TEST(Validate, Examples) {
  EXPECT_EQ(validate(S(T(G(kH), G(kI)), G(kCX))), 2u);
  EXPECT_EQ(validate(G(kI)), 1u);
  try {
    validate(S(G(kH), G(kCX)));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.left_height(), 1u);
    EXPECT_EQ(e.right_height(), 2u);
  }
}

TEST(Validate, ReportsLeftmostDeepestMismatch) {
  // Both (H oo CX) and the outer node mismatch; the inner one, reached first
  // in post-order, must be reported.
  const Circuit c = S(S(G(kH), G(kCX)), T(G(kCX), G(kCX)));
  try {
    validate(c);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.left_height(), 1u);
    EXPECT_EQ(e.right_height(), 2u);
  }
  const Circuit d = T(S(G(kI), G(kCX)), S(G(kCX), T(G(kI), G(kCX))));
  try {
    validate(d);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.left_height(), 1u);
    EXPECT_EQ(e.right_height(), 2u);
  }
}

TEST(ToString, CanonicalForm) {
  EXPECT_EQ(to_string(parse_circuit("(H ** I) oo CX")), "H ** I oo CX");
  EXPECT_EQ(to_string(parse_circuit("H ** (X oo Z)")), "H ** (X oo Z)");
  EXPECT_EQ(to_string(parse_circuit("H ** (I ** X)")), "H ** (I ** X)");
  EXPECT_EQ(to_string(parse_circuit("H oo (X oo Z)")), "H oo (X oo Z)");
  EXPECT_EQ(to_string(parse_circuit("((H oo X) ** I)")), "(H oo X) ** I");
}

// Independent tree used to enumerate shapes and to state the height rules.
struct RefTree {
  enum Kind { kLeaf, kTensor, kSeq } kind;
  GateKind gate = GateKind::kI;
  std::shared_ptr<RefTree> left, right;
};

std::size_t ref_height(const RefTree& t) {
  switch (t.kind) {
    case RefTree::kLeaf:
      return (t.gate == GateKind::kCX || t.gate == GateKind::kSW) ? 2 : 1;
    case RefTree::kSeq:
      return ref_height(*t.left);
    case RefTree::kTensor:
      return ref_height(*t.left) + ref_height(*t.right);
  }
  return 0;
}

bool ref_valid(const RefTree& t) {
  if (t.kind == RefTree::kLeaf) return true;
  if (!ref_valid(*t.left) || !ref_valid(*t.right)) return false;
  return t.kind != RefTree::kSeq ||
         ref_height(*t.left) == ref_height(*t.right);
}

Circuit to_circuit(const RefTree& t) {
  switch (t.kind) {
    case RefTree::kLeaf:
      return Circuit(t.gate);
    case RefTree::kTensor:
      return Circuit::tensor(to_circuit(*t.left), to_circuit(*t.right));
    case RefTree::kSeq:
      return Circuit::seq(to_circuit(*t.left), to_circuit(*t.right));
  }
  return Circuit(GateKind::kI);
}

std::vector<std::shared_ptr<RefTree>> all_trees(std::size_t leaves) {
  std::vector<std::shared_ptr<RefTree>> out;
  if (leaves == 1) {
    for (GateKind g : {GateKind::kI, GateKind::kCX}) {
      out.push_back(std::make_shared<RefTree>(RefTree{RefTree::kLeaf, g}));
    }
    return out;
  }
  for (std::size_t l = 1; l < leaves; ++l) {
    for (const auto& a : all_trees(l)) {
      for (const auto& b : all_trees(leaves - l)) {
        for (auto k : {RefTree::kTensor, RefTree::kSeq}) {
          out.push_back(
              std::make_shared<RefTree>(RefTree{k, GateKind::kI, a, b}));
        }
      }
    }
  }
  return out;
}

TEST(Validate, ExhaustiveOverSmallTrees) {
  std::size_t checked = 0;
  std::size_t accepted = 0;
  for (std::size_t leaves = 1; leaves <= 4; ++leaves) {
    for (const auto& t : all_trees(leaves)) {
      const Circuit c = to_circuit(*t);
      EXPECT_EQ(height(c), ref_height(*t));
      bool ok = true;
      try {
        EXPECT_EQ(validate(c), ref_height(*t));
      } catch (const ValidationError&) {
        ok = false;
      }
      EXPECT_EQ(ok, ref_valid(*t)) << to_string(c);
      ++checked;
      accepted += ok ? 1 : 0;
    }
  }
  EXPECT_EQ(checked, 2u + 8u + 64u + 640u);
  EXPECT_GT(accepted, 0u);
  EXPECT_LT(accepted, checked);
}

TEST(Circuit, TensorHeightIsAdditive) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Circuit a = testing::random_circuit(rng, 1 + rng() % 5, 1 + rng() % 3);
    const Circuit b = testing::random_circuit(rng, 1 + rng() % 5, 1 + rng() % 3);
    EXPECT_EQ(height(Circuit::tensor(a, b)), height(a) + height(b));
  }
}

TEST(Circuit, PrintParseRoundTrip) {
  std::mt19937_64 rng(11);
  for (const auto& t : all_trees(4)) {
    const Circuit c = to_circuit(*t);
    EXPECT_EQ(parse_circuit(to_string(c)), c) << to_string(c);
  }
  for (int i = 0; i < 200; ++i) {
    const Circuit a = testing::random_circuit(rng, 1 + rng() % 6, 1 + rng() % 6);
    const Circuit b = testing::random_circuit(rng, 1 + rng() % 6, 1 + rng() % 6);
    // Right-nested shapes exercise the parenthesization rules.
    for (const Circuit& c :
         {Circuit::tensor(a, b), Circuit::seq(a, Circuit::seq(a, a)),
          Circuit::tensor(a, Circuit::tensor(b, a))}) {
      EXPECT_EQ(parse_circuit(to_string(c)), c);
    }
  }
}

TEST(Circuit, DeepChainsDoNotRecurse) {
  std::string text = "H";
  for (int i = 0; i < 200000; ++i) text += " oo X";
  const Circuit c = parse_circuit(text);
  EXPECT_EQ(validate(c), 1u);
  EXPECT_EQ(gate_count(c), 200001u);
  EXPECT_EQ(to_string(c), text);
}

TEST(ForEachGate, VisitsLeavesWithBaseIndices) {
  std::vector<std::pair<GateKind, Qubit>> seen;
  for_each_gate(parse_circuit("H ** CX ** X oo I ** SW ** H"),
                [&](GateKind g, Qubit q) { seen.emplace_back(g, q); });
  const std::vector<std::pair<GateKind, Qubit>> want = {
      {kH, 0}, {kCX, 1}, {kX, 3}, {kI, 0}, {GateKind::kSW, 1}, {kH, 3}};
  EXPECT_EQ(seen, want);
}

}  // namespace
}  // namespace entangle
