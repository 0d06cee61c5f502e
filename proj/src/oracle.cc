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

#include "entangle/oracle.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace entangle {

namespace {

void check_limit(std::size_t n, std::size_t max_qubits) {
  if (n > max_qubits) {
    throw OracleLimitError("dense oracle limited to " +
                           std::to_string(max_qubits) + " qubits, got " +
                           std::to_string(n));
  }
  if (n >= 63) throw OracleLimitError("dense state too large");
}

std::uint64_t argmax_magnitude(const std::vector<Amplitude>& amps) {
  std::uint64_t best = 0;
  double best_mag = -1.0;
  for (std::uint64_t k = 0; k < amps.size(); ++k) {
    const double mag = std::norm(amps[k]);
    if (mag > best_mag) {
      best_mag = mag;
      best = k;
    }
  }
  return best;
}

}  // namespace

DenseState::DenseState(std::size_t n) : n_(n) {
  check_limit(n, 62);
  amps_.assign(std::uint64_t{1} << n, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

DenseState::DenseState(std::size_t n, std::vector<Amplitude> amps)
    : n_(n), amps_(std::move(amps)) {
  check_limit(n, 62);
  if (amps_.size() != (std::uint64_t{1} << n)) {
    throw std::invalid_argument("amplitude vector length must be 2^n");
  }
}

double DenseState::norm() const {
  double sum = 0.0;
  for (const Amplitude& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void DenseState::check(Qubit q) const {
  if (q >= n_) {
    throw std::out_of_range("qubit " + std::to_string(q) +
                            " out of range for " + std::to_string(n_) +
                            " qubits");
  }
}

void DenseState::apply_matrix(Qubit q, const Amplitude (&m)[2][2]) {
  check(q);
  const std::uint64_t stride = std::uint64_t{1} << (n_ - 1 - q);
  for (std::uint64_t k = 0; k < amps_.size(); ++k) {
    if ((k & stride) != 0) continue;
    const Amplitude a0 = amps_[k];
    const Amplitude a1 = amps_[k | stride];
    amps_[k] = m[0][0] * a0 + m[0][1] * a1;
    amps_[k | stride] = m[1][0] * a0 + m[1][1] * a1;
  }
}

void DenseState::apply(GateKind g, Qubit q) {
  using namespace std::complex_literals;
  const double r = 1.0 / std::numbers::sqrt2;
  switch (g) {
    case GateKind::kI:
      check(q);
      return;
    case GateKind::kX: {
      const Amplitude m[2][2] = {{0.0, 1.0}, {1.0, 0.0}};
      apply_matrix(q, m);
      return;
    }
    case GateKind::kY: {
      const Amplitude m[2][2] = {{0.0, -1i}, {1i, 0.0}};
      apply_matrix(q, m);
      return;
    }
    case GateKind::kZ: {
      const Amplitude m[2][2] = {{1.0, 0.0}, {0.0, -1.0}};
      apply_matrix(q, m);
      return;
    }
    case GateKind::kH: {
      const Amplitude m[2][2] = {{r, r}, {r, -r}};
      apply_matrix(q, m);
      return;
    }
    case GateKind::kT: {
      const Amplitude m[2][2] = {{1.0, 0.0},
                                 {0.0, std::polar(1.0, std::numbers::pi / 4)}};
      apply_matrix(q, m);
      return;
    }
    case GateKind::kCX:
      apply_cx(q, q + 1);
      return;
    case GateKind::kSW:
      apply_swap(q, q + 1);
      return;
  }
}

void DenseState::apply_cx(Qubit control, Qubit target) {
  check(control);
  check(target);
  if (control == target) {
    throw std::invalid_argument("CX control and target must differ");
  }
  const std::uint64_t cbit = std::uint64_t{1} << (n_ - 1 - control);
  const std::uint64_t tbit = std::uint64_t{1} << (n_ - 1 - target);
  for (std::uint64_t k = 0; k < amps_.size(); ++k) {
    if ((k & cbit) != 0 && (k & tbit) == 0) std::swap(amps_[k], amps_[k | tbit]);
  }
}

void DenseState::apply_swap(Qubit a, Qubit b) {
  check(a);
  check(b);
  if (a == b) return;
  const std::uint64_t abit = std::uint64_t{1} << (n_ - 1 - a);
  const std::uint64_t bbit = std::uint64_t{1} << (n_ - 1 - b);
  for (std::uint64_t k = 0; k < amps_.size(); ++k) {
    if ((k & abit) != 0 && (k & bbit) == 0) {
      std::swap(amps_[k], amps_[k ^ abit ^ bbit]);
    }
  }
}

DenseState DenseState::kron(const DenseState& tail) const {
  std::vector<Amplitude> out(amps_.size() * tail.amps_.size());
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    for (std::uint64_t j = 0; j < tail.amps_.size(); ++j) {
      out[i * tail.amps_.size() + j] = amps_[i] * tail.amps_[j];
    }
  }
  return DenseState(n_ + tail.n_, std::move(out));
}

DenseState simulate(const Circuit& c, std::size_t max_qubits) {
  const std::size_t n = validate(c);
  check_limit(n, max_qubits);
  DenseState s(n);
  for_each_gate(c, [&s](GateKind g, Qubit q) { s.apply(g, q); });
  return s;
}

std::vector<Substate> substates(const DenseState& s, double eps) {
  std::vector<Substate> rows;
  const auto& amps = s.amplitudes();
  for (std::uint64_t k = 0; k < amps.size(); ++k) {
    if (std::abs(amps[k]) > eps) rows.push_back({k, amps[k]});
  }
  return rows;
}

bool factorizes(const DenseState& s, std::uint64_t subset, double eps) {
  const std::size_t n = s.qubits();
  const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  subset &= full;
  if (subset == 0 || subset == full) return true;

  // Row coordinate: bits of qubits in `subset`; column: the complement.
  const auto& amps = s.amplitudes();
  std::vector<std::uint32_t> row_of(amps.size());
  std::vector<std::uint32_t> col_of(amps.size());
  std::size_t rows = 0;
  for (Qubit q = 0; q < n; ++q) rows += (subset >> q) & 1u;
  const std::size_t cols = n - rows;
  for (std::uint64_t k = 0; k < amps.size(); ++k) {
    std::uint32_t r = 0;
    std::uint32_t c = 0;
    for (Qubit q = 0; q < n; ++q) {
      const std::uint32_t bit = s.bit(k, q) ? 1u : 0u;
      if ((subset >> q) & 1u) {
        r = (r << 1) | bit;
      } else {
        c = (c << 1) | bit;
      }
    }
    row_of[k] = r;
    col_of[k] = c;
  }

  const std::uint64_t pivot = argmax_magnitude(amps);
  const Amplitude pivot_amp = amps[pivot];
  if (std::abs(pivot_amp) == 0.0) return true;
  const std::uint32_t pivot_row = row_of[pivot];
  const std::uint32_t pivot_col = col_of[pivot];

  std::vector<Amplitude> column(std::size_t{1} << rows);
  std::vector<Amplitude> row(std::size_t{1} << cols);
  for (std::uint64_t k = 0; k < amps.size(); ++k) {
    if (col_of[k] == pivot_col) column[row_of[k]] = amps[k];
    if (row_of[k] == pivot_row) row[col_of[k]] = amps[k];
  }

  double residual = 0.0;
  for (std::uint64_t k = 0; k < amps.size(); ++k) {
    const Amplitude approx = column[row_of[k]] * row[col_of[k]] / pivot_amp;
    residual += std::norm(amps[k] - approx);
  }
  return std::sqrt(residual) < eps;
}

Partition finest_separable_partition(const DenseState& s, double eps,
                                     std::size_t max_qubits) {
  const std::size_t n = s.qubits();
  check_limit(n, max_qubits);
  if (n <= 1) return Partition::singletons(n);

  // Refine a single class by every factorizable bipartition. Qubit 0 is kept
  // out of the subset so each bipartition is visited once.
  std::vector<std::size_t> cls(n, 0);
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 1; m < count; ++m) {
    const std::uint64_t subset = m << 1;
    if (!factorizes(s, subset, eps)) continue;
    std::map<std::pair<std::size_t, bool>, std::size_t> relabel;
    for (Qubit q = 0; q < n; ++q) {
      const auto key = std::make_pair(cls[q], ((subset >> q) & 1u) != 0);
      const auto [it, inserted] = relabel.try_emplace(key, relabel.size());
      cls[q] = it->second;
    }
  }

  std::map<std::size_t, Block> grouped;
  for (Qubit q = 0; q < n; ++q) grouped[cls[q]].push_back(q);
  std::vector<Block> blocks;
  for (auto& [id, block] : grouped) blocks.push_back(std::move(block));
  return Partition::from_blocks(n, blocks);
}

std::vector<std::pair<Qubit, Qubit>> levels_oracle(const DenseState& s,
                                                   double eps,
                                                   std::size_t max_qubits) {
  const std::size_t n = s.qubits();
  check_limit(n, max_qubits);
  const std::vector<Substate> rows = substates(s, eps);

  std::vector<bool> superposed(n, false);
  for (Qubit q = 0; q < n; ++q) {
    bool seen0 = false;
    bool seen1 = false;
    for (const Substate& r : rows) {
      (s.bit(r.index, q) ? seen1 : seen0) = true;
    }
    superposed[q] = seen0 && seen1;
  }

  std::vector<std::vector<bool>> leveled(n, std::vector<bool>(n, false));
  std::vector<std::pair<Qubit, Qubit>> pairs;
  for (Qubit i = 0; i < n; ++i) {
    if (!superposed[i]) continue;
    for (Qubit j = i + 1; j < n; ++j) {
      if (!superposed[j]) continue;
      const bool pattern = s.bit(rows.front().index, i) !=
                           s.bit(rows.front().index, j);
      const bool uniform =
          std::all_of(rows.begin(), rows.end(), [&](const Substate& r) {
            return (s.bit(r.index, i) != s.bit(r.index, j)) == pattern;
          });
      if (uniform) {
        leveled[i][j] = leveled[j][i] = true;
        pairs.emplace_back(i, j);
      }
    }
  }

  for (Qubit i = 0; i < n; ++i) {
    for (Qubit j = 0; j < n; ++j) {
      if (!leveled[i][j]) continue;
      for (Qubit k = 0; k < n; ++k) {
        if (k != i && leveled[j][k] && !leveled[i][k]) {
          throw std::logic_error("same-level relation is not transitive");
        }
      }
    }
  }
  return pairs;
}

std::string_view basis_name(ConcreteBasis b) {
  switch (b) {
    case ConcreteBasis::kStandard:
      return "standard";
    case ConcreteBasis::kDiagonal:
      return "diagonal";
    case ConcreteBasis::kNeither:
      return "neither";
  }
  return "?";
}

ConcreteBasis basis_oracle(const DenseState& s, Qubit q, double eps,
                           std::size_t max_qubits) {
  const std::size_t n = s.qubits();
  check_limit(n, max_qubits);
  if (q >= n) throw std::out_of_range("qubit out of range");
  if (!factorizes(s, std::uint64_t{1} << q, eps)) {
    return ConcreteBasis::kNeither;
  }

  // Read q's factor off the pivot's slice: fix every other qubit to the
  // pivot's values and vary q.
  const std::uint64_t qbit = std::uint64_t{1} << (n - 1 - q);
  const std::uint64_t pivot = argmax_magnitude(s.amplitudes());
  Amplitude u0 = s[pivot & ~qbit];
  Amplitude u1 = s[pivot | qbit];
  const double len = std::sqrt(std::norm(u0) + std::norm(u1));
  if (len == 0.0) return ConcreteBasis::kNeither;
  u0 /= len;
  u1 /= len;

  if (std::abs(u0) < eps || std::abs(u1) < eps) return ConcreteBasis::kStandard;
  if (std::abs(u0 - u1) < eps || std::abs(u0 + u1) < eps) {
    return ConcreteBasis::kDiagonal;
  }
  return ConcreteBasis::kNeither;
}

std::string_view violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::kEntanglement:
      return "entanglement";
    case ViolationKind::kLevel:
      return "level";
    case ViolationKind::kLabel:
      return "label";
  }
  return "?";
}

SoundnessReport check_soundness(const AbstractState& st, const DenseState& s,
                                double eps, std::size_t max_qubits) {
  const std::size_t n = s.qubits();
  if (st.size() != n || st.sep.size() != n || st.lvl.size() != n) {
    throw std::invalid_argument("abstract state has " +
                                std::to_string(st.size()) +
                                " qubits, concrete state has " +
                                std::to_string(n));
  }
  check_limit(n, max_qubits);
  SoundnessReport report;

  const Partition exact = finest_separable_partition(s, eps, max_qubits);
  for (Qubit i = 0; i < n; ++i) {
    for (Qubit j = i + 1; j < n; ++j) {
      if (exact.same_block(i, j) && !st.sep.same_block(i, j)) {
        report.entanglement_ok = false;
        report.violations.push_back(
            {ViolationKind::kEntanglement,
             {i, j},
             "qubits " + std::to_string(i) + " and " + std::to_string(j) +
                 " are entangled but the analysis separates them"});
      }
    }
  }

  const auto exact_levels = levels_oracle(s, eps, max_qubits);
  for (const Block& block : st.lvl.blocks()) {
    for (std::size_t a = 0; a < block.size(); ++a) {
      for (std::size_t b = a + 1; b < block.size(); ++b) {
        const std::pair<Qubit, Qubit> p{block[a], block[b]};
        if (std::find(exact_levels.begin(), exact_levels.end(), p) ==
            exact_levels.end()) {
          report.level_ok = false;
          report.violations.push_back(
              {ViolationKind::kLevel,
               {p.first, p.second},
               "qubits " + std::to_string(p.first) + " and " +
                   std::to_string(p.second) +
                   " are marked same-level but are not"});
        }
      }
    }
  }

  for (Qubit q = 0; q < n; ++q) {
    const BasisLabel label = st.labels[q];
    if (label == BasisLabel::kTop) continue;
    const ConcreteBasis want = label == BasisLabel::kStandard
                                   ? ConcreteBasis::kStandard
                                   : ConcreteBasis::kDiagonal;
    const ConcreteBasis got = basis_oracle(s, q, eps, max_qubits);
    if (got != want) {
      report.label_ok = false;
      report.violations.push_back(
          {ViolationKind::kLabel,
           {q},
           "qubit " + std::to_string(q) + " is labeled " +
               std::string(label_name(label)) + " but is " +
               std::string(basis_name(got))});
    }
  }
  return report;
}

}  // namespace entangle
