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

#ifndef ENTANGLE_REPORT_H_
#define ENTANGLE_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entangle/analyzer.h"
#include "entangle/domain.h"
#include "entangle/oracle.h"

namespace entangle {

/// Everything `entangle analyze` reports for one circuit.
struct ResultDocument {
  AnalysisMode mode = AnalysisMode::kLevels;
  AbstractState state;
  std::optional<std::vector<TraceStep>> trace;
  std::optional<SoundnessReport> soundness;
};

/// One JSON object:
///   {"qubits": n, "mode": "...", "labels": ["s"|"d"|"top", ...],
///    "separability": [[...], ...], "levels": [[...], ...],
///    "trace": [{"step", "gate", "index", "labels", "separability",
///               "levels"}, ...],                      (optional)
///    "soundness": {"ok", "entanglement_ok", "level_ok", "label_ok",
///                  "violations": [{"kind", "qubits", "explanation"}]}}
///                                                      (optional)
/// Blocks are sorted by smallest member with members ascending.
std::string to_json(const ResultDocument& doc);

/// Human-readable rendering of the same content.
std::string to_text(const ResultDocument& doc);

/// Rebuilds the final abstract state from a document produced by to_json.
/// Throws std::invalid_argument on malformed input.
AbstractState state_from_json(std::string_view json_text);

/// "{0,1} {2}"
std::string format_blocks(const Partition& p);

}  // namespace entangle

#endif  // ENTANGLE_REPORT_H_
