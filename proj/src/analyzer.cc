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

#include "entangle/analyzer.h"

#include <stdexcept>
#include <string>

namespace entangle {

namespace {

using enum BasisLabel;

void check_index(const AbstractState& st, Qubit i, std::string_view what) {
  if (i >= st.size()) {
    throw std::out_of_range(std::string(what) + " " + std::to_string(i) +
                            " out of range for " + std::to_string(st.size()) +
                            " qubits");
  }
}

void apply_hadamard(AbstractState& st, Qubit q, AnalysisMode mode) {
  switch (st.labels[q]) {
    case kStandard:
      st.labels[q] = kDiagonal;
      break;
    case kDiagonal:
      st.labels[q] = kStandard;
      break;
    case kTop:
      if (mode != AnalysisMode::kNoLevels) st.lvl.isolate(q);
      break;
  }
}

void apply_cx(AbstractState& st, Qubit control, Qubit target,
              AnalysisMode mode) {
  auto& b = st.labels;
  if (b[control] == kStandard || b[target] == kDiagonal) return;

  bool creates_level = b[control] == kDiagonal && b[target] == kStandard;
  if (mode == AnalysisMode::kUnsafeLeveling && b[target] == kStandard) {
    creates_level = true;
  }
  if (creates_level) {
    b[control] = kTop;
    b[target] = kTop;
    st.sep.unite(control, target);
    if (mode != AnalysisMode::kNoLevels) st.lvl.unite(control, target);
    return;
  }

  if (mode != AnalysisMode::kNoLevels && st.lvl.same_block(control, target)) {
    // A leveled target collapses to a basis state and factors out.
    b[target] = kStandard;
    st.sep.isolate(target);
    st.lvl.isolate(target);
    return;
  }

  b[control] = kTop;
  b[target] = kTop;
  st.sep.unite(control, target);
  // The target's bits now depend on the control, so any pairing the target
  // had with a level partner no longer holds.
  if (mode == AnalysisMode::kLevels) st.lvl.isolate(target);
}

}  // namespace

std::string_view mode_name(AnalysisMode m) {
  switch (m) {
    case AnalysisMode::kLevels:
      return "levels";
    case AnalysisMode::kNoLevels:
      return "no-levels";
    case AnalysisMode::kUnsafeLeveling:
      return "unsafe-leveling";
  }
  return "?";
}

std::optional<AnalysisMode> mode_from_name(std::string_view name) {
  for (AnalysisMode m : {AnalysisMode::kLevels, AnalysisMode::kNoLevels,
                         AnalysisMode::kUnsafeLeveling}) {
    if (mode_name(m) == name) return m;
  }
  return std::nullopt;
}

void apply_gate_in_place(AbstractState& st, GateKind g, Qubit i,
                         AnalysisMode mode) {
  if (i + gate_height(g) > st.size()) {
    throw std::out_of_range(std::string(gate_name(g)) + " at wire " +
                            std::to_string(i) + " does not fit in " +
                            std::to_string(st.size()) + " qubits");
  }
  switch (g) {
    case GateKind::kI:
    case GateKind::kX:
    case GateKind::kY:
    case GateKind::kZ:
      break;
    case GateKind::kH:
      apply_hadamard(st, i, mode);
      break;
    case GateKind::kT:
      if (st.labels[i] == kDiagonal) st.labels[i] = kTop;
      break;
    case GateKind::kCX:
      apply_cx(st, i, i + 1, mode);
      break;
    case GateKind::kSW:
      std::swap(st.labels[i], st.labels[i + 1]);
      st.sep.swap_adjacent(i);
      st.lvl.swap_adjacent(i);
      break;
  }
}

AbstractState apply_gate(AbstractState st, GateKind g, Qubit i,
                         AnalysisMode mode) {
  apply_gate_in_place(st, g, i, mode);
  return st;
}

void apply_cx_at_in_place(AbstractState& st, Qubit control, Qubit target,
                          AnalysisMode mode) {
  check_index(st, control, "control");
  check_index(st, target, "target");
  if (control == target) {
    throw std::invalid_argument("CX control and target must differ");
  }
  apply_cx(st, control, target, mode);
}

AbstractState apply_cx_at(AbstractState st, Qubit control, Qubit target,
                          AnalysisMode mode) {
  apply_cx_at_in_place(st, control, target, mode);
  return st;
}

AnalysisResult analyze(const Circuit& c, AnalysisMode mode, bool with_trace) {
  const std::size_t n = validate(c);
  AnalysisResult result{init_state(n), {}};
  if (with_trace) result.trace.reserve(gate_count(c));
  for_each_gate(c, [&](GateKind g, Qubit i) {
    apply_gate_in_place(result.state, g, i, mode);
    if (with_trace) result.trace.push_back({g, i, result.state});
  });
  return result;
}

std::vector<std::pair<Qubit, Qubit>> precision_delta(
    const AbstractState& precise, const AbstractState& coarse) {
  if (precise.size() != coarse.size()) {
    throw std::invalid_argument("states have different qubit counts");
  }
  std::vector<std::pair<Qubit, Qubit>> delta;
  for (Qubit i = 0; i < precise.size(); ++i) {
    for (Qubit j = i + 1; j < precise.size(); ++j) {
      if (!precise.sep.same_block(i, j) && coarse.sep.same_block(i, j)) {
        delta.emplace_back(i, j);
      }
    }
  }
  return delta;
}

}  // namespace entangle
