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

#include "entangle/report.h"

#include <random>

#include "gtest/gtest.h"
#include "json.hpp"
#include "test_support.h"

namespace entangle {
namespace {

ResultDocument document(const std::string& text, AnalysisMode mode,
                        bool trace = false) {
  AnalysisResult r = analyze(parse_circuit(text), mode, trace);
  ResultDocument doc;
  doc.mode = mode;
  doc.state = r.state;
  if (trace) doc.trace = r.trace;
  return doc;
}

TEST(ToJson, BellDocument) {
  const auto j = nlohmann::json::parse(
      to_json(document("H ** I oo CX", AnalysisMode::kLevels)));
  EXPECT_EQ(j["qubits"], 2);
  EXPECT_EQ(j["mode"], "levels");
  EXPECT_EQ(j["labels"], nlohmann::json({"top", "top"}));
  EXPECT_EQ(j["separability"], nlohmann::json::parse("[[0,1]]"));
  EXPECT_EQ(j["levels"], nlohmann::json::parse("[[0,1]]"));
  EXPECT_FALSE(j.contains("trace"));
  EXPECT_FALSE(j.contains("soundness"));
}

TEST(ToJson, TraceAndSoundness) {
  ResultDocument doc = document("H ** I oo CX", AnalysisMode::kLevels, true);
  doc.soundness = SoundnessReport{};
  const auto j = nlohmann::json::parse(to_json(doc));
  ASSERT_EQ(j["trace"].size(), 3u);
  EXPECT_EQ(j["trace"][0]["step"], 1);
  EXPECT_EQ(j["trace"][0]["gate"], "H");
  EXPECT_EQ(j["trace"][0]["labels"], nlohmann::json({"d", "s"}));
  EXPECT_EQ(j["trace"][2]["gate"], "CX");
  EXPECT_EQ(j["trace"][2]["index"], 0);
  EXPECT_EQ(j["soundness"]["ok"], true);
  EXPECT_TRUE(j["soundness"]["violations"].empty());
}

TEST(ToText, Layout) {
  EXPECT_EQ(to_text(document("H ** I oo CX oo CX", AnalysisMode::kLevels)),
            "qubits: 2\n"
            "mode: levels\n"
            "labels: top s\n"
            "separability: {0} {1}\n"
            "levels: {0} {1}\n");
  const std::string traced =
      to_text(document("H ** I oo CX", AnalysisMode::kNoLevels, true));
  EXPECT_NE(traced.find("  3: CX @0  labels: top top  sep: {0,1}  lvl: {0} {1}"),
            std::string::npos)
      << traced;
}

TEST(FormatBlocks, SortedByMinimum) {
  EXPECT_EQ(format_blocks(Partition::from_parents({0, 1, 0, 1, 4})),
            "{0,2} {1,3} {4}");
}

TEST(StateFromJson, RoundTripsRandomAnalyses) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Circuit c = testing::random_circuit(rng, 1 + rng() % 9, 1 + rng() % 20);
    for (auto m : {AnalysisMode::kLevels, AnalysisMode::kNoLevels,
                   AnalysisMode::kUnsafeLeveling}) {
      ResultDocument doc;
      doc.mode = m;
      doc.state = analyze(c, m).state;
      const std::string text = to_json(doc);
      EXPECT_EQ(state_from_json(text), doc.state);
      EXPECT_EQ(to_json(doc), text);
    }
  }
}

TEST(StateFromJson, RejectsMalformedDocuments) {
  EXPECT_THROW(state_from_json("{"), std::invalid_argument);
  EXPECT_THROW(state_from_json("[]"), std::invalid_argument);
  EXPECT_THROW(state_from_json(R"({"labels":["x"],"separability":[[0]],"levels":[[0]]})"),
               std::invalid_argument);
  EXPECT_THROW(state_from_json(R"({"labels":["s","s"],"separability":[[0]],"levels":[[0],[1]]})"),
               std::invalid_argument);
  EXPECT_THROW(state_from_json(R"({"labels":["s"],"separability":"no","levels":[[0]]})"),
               std::invalid_argument);
  EXPECT_THROW(state_from_json(R"({"qubits":2,"labels":["s"],"separability":[[0]],"levels":[[0]]})"),
               std::invalid_argument);
}

}  // namespace
}  // namespace entangle
