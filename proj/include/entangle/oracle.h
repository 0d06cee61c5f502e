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

#ifndef ENTANGLE_ORACLE_H_
#define ENTANGLE_ORACLE_H_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "entangle/circuit.h"
#include "entangle/domain.h"

namespace entangle {

inline constexpr double kDefaultEps = 1e-9;
inline constexpr std::size_t kDefaultOracleQubits = 12;

using Amplitude = std::complex<double>;

/// Thrown when a dense check is requested above the configured qubit limit.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact pure state of n qubits. Basis index bit (n-1-q) is the value of
/// qubit q, so qubit 0 is the leftmost ket position.
class DenseState {
 public:
  /// |0...0>
  explicit DenseState(std::size_t n);
  /// Takes amplitudes as given (length must be 2^n, norm is not enforced).
  DenseState(std::size_t n, std::vector<Amplitude> amps);

  std::size_t qubits() const { return n_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  Amplitude operator[](std::uint64_t index) const { return amps_[index]; }

  /// Bit value of qubit q in basis index `index`.
  bool bit(std::uint64_t index, Qubit q) const {
    return ((index >> (n_ - 1 - q)) & 1u) != 0;
  }

  double norm() const;

  void apply(GateKind g, Qubit q);  // single-wire gates, or SW/CX at q,q+1
  void apply_cx(Qubit control, Qubit target);
  void apply_swap(Qubit a, Qubit b);

  /// Tensor product; `this` occupies the leading (lower-index) qubits.
  DenseState kron(const DenseState& tail) const;

 private:
  void apply_matrix(Qubit q, const Amplitude (&m)[2][2]);
  void check(Qubit q) const;

  std::size_t n_;
  std::vector<Amplitude> amps_;
};

/// Runs `c` from |0...0>, visiting gates in the analyzer's order.
/// Throws ValidationError, or OracleLimitError above `max_qubits`.
DenseState simulate(const Circuit& c,
                    std::size_t max_qubits = kDefaultOracleQubits);

/// One nonzero computational-basis term.
struct Substate {
  std::uint64_t index;
  Amplitude amplitude;
};

/// Terms with |amplitude| > eps, in increasing basis-index order.
std::vector<Substate> substates(const DenseState& s, double eps = kDefaultEps);

/// True iff the state factorizes across (subset, complement). `subset` is a
/// bit mask over qubits with bit q set for qubit q. The test builds the
/// rank-1 cross approximation through the largest-magnitude amplitude and
/// requires the Frobenius norm of the residual to be below eps; that norm
/// bounds the second singular value of the reshaped amplitude matrix from
/// above, so the test never accepts a bipartition whose second singular
/// value is >= eps.
bool factorizes(const DenseState& s, std::uint64_t subset,
                double eps = kDefaultEps);

/// Finest partition the state factorizes over. Enumerates all 2^(n-1)
/// bipartitions; two qubits share a block iff no factorizable bipartition
/// separates them.
Partition finest_separable_partition(const DenseState& s,
                                     double eps = kDefaultEps,
                                     std::size_t max_qubits =
                                         kDefaultOracleQubits);

/// Pairs (i < j) on the same level: both qubits take both bit values across
/// the substates, and their bits are either always equal or always
/// different. Throws std::logic_error if the relation is not transitive.
std::vector<std::pair<Qubit, Qubit>> levels_oracle(
    const DenseState& s, double eps = kDefaultEps,
    std::size_t max_qubits = kDefaultOracleQubits);

enum class ConcreteBasis { kStandard, kDiagonal, kNeither };

std::string_view basis_name(ConcreteBasis b);

/// Standard iff qubit q factors out as |0> or |1> up to phase; diagonal iff
/// it factors out as |+> or |->; neither otherwise (including when q is
/// entangled).
ConcreteBasis basis_oracle(const DenseState& s, Qubit q,
                           double eps = kDefaultEps,
                           std::size_t max_qubits = kDefaultOracleQubits);

enum class ViolationKind { kEntanglement, kLevel, kLabel };

std::string_view violation_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::vector<Qubit> qubits;  // a pair, or one qubit for label violations
  std::string explanation;
};

struct SoundnessReport {
  bool entanglement_ok = true;
  bool level_ok = true;
  bool label_ok = true;
  std::vector<Violation> violations;

  bool ok() const { return entanglement_ok && level_ok && label_ok; }
};

/// Compares an abstract state against the exact state it should describe.
///   entanglement: qubits sharing an exact block must share a sep block
///   level: every pair in a lvl block must be on the same level
///   label: s must be a standard basis state, d a diagonal one
/// Throws std::invalid_argument on a qubit-count mismatch.
SoundnessReport check_soundness(const AbstractState& st, const DenseState& s,
                                double eps = kDefaultEps,
                                std::size_t max_qubits = kDefaultOracleQubits);

}  // namespace entangle

#endif  // ENTANGLE_ORACLE_H_
