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

#ifndef ENTANGLE_ANALYZER_H_
#define ENTANGLE_ANALYZER_H_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "entangle/circuit.h"
#include "entangle/domain.h"

namespace entangle {

enum class AnalysisMode {
  /// Tracks separability and same-level pairs; the sound default.
  kLevels,
  /// Ignores levels entirely: lvl stays all-singletons and entanglement
  /// only ever grows.
  kNoLevels,
  /// Also levels a CX pair whenever the target is labeled s, and never
  /// de-levels a CX target. Known to be unsound; kept to reproduce the
  /// failure.
  kUnsafeLeveling,
};

/// "levels", "no-levels" or "unsafe-leveling".
std::string_view mode_name(AnalysisMode m);
std::optional<AnalysisMode> mode_from_name(std::string_view name);

/// Applies gate g at wire i (CX: control i, target i+1; SW: wires i, i+1)
/// to `st` in place. Throws std::out_of_range if the gate does not fit.
void apply_gate_in_place(AbstractState& st, GateKind g, Qubit i,
                         AnalysisMode mode);

AbstractState apply_gate(AbstractState st, GateKind g, Qubit i,
                         AnalysisMode mode);

/// The CX rule for arbitrary, possibly non-adjacent or reversed, wires.
/// Throws std::invalid_argument if control == target and
/// std::out_of_range for indices outside the state.
void apply_cx_at_in_place(AbstractState& st, Qubit control, Qubit target,
                          AnalysisMode mode);

AbstractState apply_cx_at(AbstractState st, Qubit control, Qubit target,
                          AnalysisMode mode);

struct TraceStep {
  GateKind gate;
  Qubit index;
  AbstractState state;  // after the gate
};

struct AnalysisResult {
  AbstractState state;
  std::vector<TraceStep> trace;  // empty unless requested
};

/// Validates `c` and interprets it left to right from init_state(n).
/// Throws ValidationError.
AnalysisResult analyze(const Circuit& c, AnalysisMode mode,
                       bool with_trace = false);

/// Pairs (i < j) that `precise` keeps in different sep blocks while `coarse`
/// joins them.
std::vector<std::pair<Qubit, Qubit>> precision_delta(
    const AbstractState& precise, const AbstractState& coarse);

}  // namespace entangle

#endif  // ENTANGLE_ANALYZER_H_
