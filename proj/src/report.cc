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

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace entangle {

namespace {

using nlohmann::ordered_json;

ordered_json labels_json(const AbstractState& st) {
  ordered_json out = ordered_json::array();
  for (BasisLabel l : st.labels) out.push_back(label_name(l));
  return out;
}

ordered_json blocks_json(const Partition& p) {
  ordered_json out = ordered_json::array();
  for (const Block& b : p.blocks()) out.push_back(b);
  return out;
}

std::string labels_text(const AbstractState& st) {
  std::string out;
  for (std::size_t i = 0; i < st.labels.size(); ++i) {
    if (i != 0) out += ' ';
    out += label_name(st.labels[i]);
  }
  return out;
}

Partition partition_from_json(const nlohmann::json& j, std::size_t n,
                              const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw std::invalid_argument(std::string("missing array '") + key + "'");
  }
  std::vector<Block> blocks;
  for (const auto& b : j[key]) blocks.push_back(b.get<Block>());
  return Partition::from_blocks(n, blocks);
}

}  // namespace

std::string format_blocks(const Partition& p) {
  std::string out;
  for (const Block& b : p.blocks()) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(b[i]);
    }
    out += '}';
  }
  return out;
}

std::string to_json(const ResultDocument& doc) {
  ordered_json j;
  j["qubits"] = doc.state.size();
  j["mode"] = mode_name(doc.mode);
  j["labels"] = labels_json(doc.state);
  j["separability"] = blocks_json(doc.state.sep);
  j["levels"] = blocks_json(doc.state.lvl);
  if (doc.trace) {
    ordered_json steps = ordered_json::array();
    std::size_t step = 0;
    for (const TraceStep& t : *doc.trace) {
      ordered_json s;
      s["step"] = ++step;
      s["gate"] = gate_name(t.gate);
      s["index"] = t.index;
      s["labels"] = labels_json(t.state);
      s["separability"] = blocks_json(t.state.sep);
      s["levels"] = blocks_json(t.state.lvl);
      steps.push_back(std::move(s));
    }
    j["trace"] = std::move(steps);
  }
  if (doc.soundness) {
    const SoundnessReport& r = *doc.soundness;
    ordered_json s;
    s["ok"] = r.ok();
    s["entanglement_ok"] = r.entanglement_ok;
    s["level_ok"] = r.level_ok;
    s["label_ok"] = r.label_ok;
    ordered_json violations = ordered_json::array();
    for (const Violation& v : r.violations) {
      violations.push_back({{"kind", violation_name(v.kind)},
                            {"qubits", v.qubits},
                            {"explanation", v.explanation}});
    }
    s["violations"] = std::move(violations);
    j["soundness"] = std::move(s);
  }
  return j.dump(2) + "\n";
}

std::string to_text(const ResultDocument& doc) {
  std::ostringstream os;
  os << "qubits: " << doc.state.size() << "\n";
  os << "mode: " << mode_name(doc.mode) << "\n";
  os << "labels: " << labels_text(doc.state) << "\n";
  os << "separability: " << format_blocks(doc.state.sep) << "\n";
  os << "levels: " << format_blocks(doc.state.lvl) << "\n";
  if (doc.trace) {
    os << "trace:\n";
    std::size_t step = 0;
    for (const TraceStep& t : *doc.trace) {
      os << "  " << ++step << ": " << gate_name(t.gate) << " @" << t.index
         << "  labels: " << labels_text(t.state)
         << "  sep: " << format_blocks(t.state.sep)
         << "  lvl: " << format_blocks(t.state.lvl) << "\n";
    }
  }
  if (doc.soundness) {
    const SoundnessReport& r = *doc.soundness;
    if (r.ok()) {
      os << "oracle: ok\n";
    } else {
      os << "oracle: " << r.violations.size() << " violation(s)\n";
      for (const Violation& v : r.violations) {
        os << "  " << violation_name(v.kind) << ": " << v.explanation << "\n";
      }
    }
  }
  return os.str();
}

AbstractState state_from_json(std::string_view json_text) try {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array()) {
    throw std::invalid_argument("missing array 'labels'");
  }
  AbstractState st;
  for (const auto& l : j["labels"]) {
    const auto label = label_from_name(l.get<std::string>());
    if (!label) throw std::invalid_argument("unknown label " + l.dump());
    st.labels.push_back(*label);
  }
  const std::size_t n = st.labels.size();
  if (j.contains("qubits") && j["qubits"].get<std::size_t>() != n) {
    throw std::invalid_argument("'qubits' disagrees with label count");
  }
  st.sep = partition_from_json(j, n, "separability");
  st.lvl = partition_from_json(j, n, "levels");
  return st;
} catch (const nlohmann::json::exception& e) {
  throw std::invalid_argument(std::string("malformed result document: ") +
                              e.what());
}

}  // namespace entangle
