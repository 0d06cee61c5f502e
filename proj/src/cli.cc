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

#include "entangle/cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "entangle/analyzer.h"
#include "entangle/circuit.h"
#include "entangle/oracle.h"
#include "entangle/report.h"

namespace entangle {

namespace {

struct AnalyzeOptions {
  std::string file;
  std::string mode = "levels";
  bool no_levels = false;
  bool trace = false;
  std::string format = "text";
  bool check_oracle = false;
  std::size_t max_oracle_qubits = kDefaultOracleQubits;
};

// Reads and validates a circuit file. On failure writes a diagnostic and
// returns the exit code to use.
struct LoadedCircuit {
  std::optional<Circuit> circuit;
  int exit_code = kExitOk;
};

LoadedCircuit load(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << path << ": cannot open file\n";
    return {std::nullopt, kExitParseError};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    Circuit c = parse_circuit(buf.str());
    validate(c);
    return {std::move(c), kExitOk};
  } catch (const ParseError& e) {
    err << path << ":" << e.what() << "\n";
    return {std::nullopt, kExitParseError};
  } catch (const ValidationError& e) {
    err << path << ": invalid circuit: " << e.what() << "\n";
    return {std::nullopt, kExitValidationError};
  }
}

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out,
                std::ostream& err) {
  LoadedCircuit loaded = load(opt.file, err);
  if (!loaded.circuit) return loaded.exit_code;
  const Circuit& c = *loaded.circuit;

  const AnalysisMode mode = opt.no_levels ? AnalysisMode::kNoLevels
                                          : *mode_from_name(opt.mode);
  AnalysisResult result = analyze(c, mode, opt.trace);

  ResultDocument doc;
  doc.mode = mode;
  doc.state = std::move(result.state);
  if (opt.trace) doc.trace = std::move(result.trace);

  if (opt.check_oracle) {
    const std::size_t n = doc.state.size();
    if (n > opt.max_oracle_qubits) {
      err << opt.file << ": circuit has " << n
          << " qubits, above the oracle limit of " << opt.max_oracle_qubits
          << "\n";
      return kExitValidationError;
    }
    const DenseState exact = simulate(c, opt.max_oracle_qubits);
    doc.soundness = check_soundness(doc.state, exact, kDefaultEps,
                                    opt.max_oracle_qubits);
  }

  out << (opt.format == "json" ? to_json(doc) : to_text(doc));
  if (doc.soundness && !doc.soundness->ok()) {
    for (const Violation& v : doc.soundness->violations) {
      err << opt.file << ": soundness violation (" << violation_name(v.kind)
          << "): " << v.explanation << "\n";
    }
    return kExitSoundnessViolation;
  }
  return kExitOk;
}

int cmd_compare(const std::string& file, std::ostream& out,
                std::ostream& err) {
  LoadedCircuit loaded = load(file, err);
  if (!loaded.circuit) return loaded.exit_code;

  const AbstractState levels =
      analyze(*loaded.circuit, AnalysisMode::kLevels).state;
  const AbstractState no_levels =
      analyze(*loaded.circuit, AnalysisMode::kNoLevels).state;

  auto section = [&out](AnalysisMode m, const AbstractState& st) {
    out << mode_name(m) << ":\n";
    out << "  labels:";
    for (BasisLabel l : st.labels) out << ' ' << label_name(l);
    out << "\n  separability: " << format_blocks(st.sep) << "\n";
    out << "  levels: " << format_blocks(st.lvl) << "\n";
  };
  section(AnalysisMode::kLevels, levels);
  section(AnalysisMode::kNoLevels, no_levels);

  const auto delta = precision_delta(levels, no_levels);
  out << "precision delta:";
  if (delta.empty()) out << " none";
  for (const auto& [i, j] : delta) out << " (" << i << "," << j << ")";
  out << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Static entanglement analysis for quantum circuits", "entangle"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opt;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Analyze a circuit file");
  analyze_cmd->add_option("file", analyze_opt.file, "Circuit file")
      ->required();
  auto* mode_opt =
      analyze_cmd->add_option("--mode", analyze_opt.mode, "Analysis rules")
          ->check(CLI::IsMember({"levels", "no-levels", "unsafe-leveling"}));
  analyze_cmd
      ->add_flag("--no-levels", analyze_opt.no_levels,
                 "Same as --mode no-levels")
      ->excludes(mode_opt);
  analyze_cmd->add_flag("--trace", analyze_opt.trace,
                        "Include the state after every gate");
  analyze_cmd->add_option("--format", analyze_opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_flag("--check-oracle", analyze_opt.check_oracle,
                        "Compare against exact simulation");
  analyze_cmd->add_option("--max-oracle-qubits", analyze_opt.max_oracle_qubits,
                          "Qubit limit for --check-oracle")
      ->check(CLI::Range(std::size_t{1}, std::size_t{24}));

  std::string compare_file;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Compare the levels and no-levels analyses");
  compare_cmd->add_option("file", compare_file, "Circuit file")->required();

  // CLI11 wants argv order reversed when handed a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (analyze_cmd->parsed()) return cmd_analyze(analyze_opt, out, err);
  return cmd_compare(compare_file, out, err);
}

}  // namespace entangle
