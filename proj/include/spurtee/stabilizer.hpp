// Copyright 2026 The spurtee Authors
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

#ifndef SPURTEE_STABILIZER_HPP
#define SPURTEE_STABILIZER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spurtee/algebra.hpp"
#include "spurtee/pauli.hpp"

namespace spurtee {

enum class Side { B, E };

struct OutQubit {
  std::string label;
  Side side = Side::B;
};

/// Clifford isometry from 2K input qubits (0..K-1 the left leg, K..2K-1 the
/// right leg) to labeled output qubits, given by the stabilizers of its image
/// and the images of the input X and Z operators.
struct StabilizerIsometry {
  std::size_t K = 0;
  std::vector<OutQubit> outputs;
  std::vector<PauliOperator> stabilizers;
  std::vector<PauliOperator> x_images;
  std::vector<PauliOperator> z_images;

  std::size_t num_out() const { return outputs.size(); }
  LabelSet b_labels() const;
  LabelSet e_labels() const;
  void validate() const;

  /// Dense isometry with inputs (L, R) of dimension 2^K each and one output
  /// factor per qubit.
  Isometry isometry() const;
  /// Reads a Clifford isometry back from its dense matrix. Every output factor
  /// must be a qubit. Throws ValidationError if the matrix is not Clifford.
  static StabilizerIsometry from_dense(const Isometry& v, const LabelSet& b_labels,
                                       const LabelSet& e_labels, double tol = 1e-9);
  /// Uniform random Clifford unitary on nb + ne qubits applied to the inputs
  /// padded with |0> ancillas.
  static StabilizerIsometry random(std::size_t K, std::size_t nb, std::size_t ne, std::uint64_t seed);

  /// Tableau text: "K", "out", "S", "X<i>", "Z<i>" records.
  static StabilizerIsometry parse(const std::string& text);
  std::string serialize() const;
};

/// A stabilizer code with named qubits.
struct StabilizerCode {
  LabelSet labels;
  std::vector<PauliOperator> stabilizers;
  std::vector<PauliOperator> logical_x;
  std::vector<PauliOperator> logical_z;

  std::size_t num_logical() const { return logical_x.size(); }
  std::vector<std::size_t> indices(const LabelSet& names) const;
};

/// Encoder of the left input leg into the n-site open chain: site outputs
/// suffixed "_k" and the final right leg as qubits "C<j>".
StabilizerCode chain_code(const StabilizerIsometry& v, std::size_t n);

struct LogicalGroup {
  std::vector<BitVec> logicals;                // basis, as (x | z) over the logical qubits
  std::vector<PauliOperator> representatives;  // one physical Pauli per basis element
  std::size_t dim() const { return logicals.size(); }
};

/// Logical Paulis implementable by operators supported on `support`.
LogicalGroup logical_pauli_enumeration(const StabilizerCode& code, const LabelSet& support);

/// Expands "B", "E", "C" (and combinations like "BC") against an n = 1 chain code.
LabelSet chain_support(const StabilizerIsometry& v, const std::string& tokens);

struct AlgebraTable {
  std::size_t K = 0;
  std::size_t l = 0;
  std::size_t m = 0;
  std::vector<std::string> columns;  // per input qubit: "Z-only", "Z-and-X" or "neither"
};

/// Normal form of the algebra generated by the Paulis in `span`.
AlgebraTable algebra_table(const std::vector<BitVec>& span, std::size_t K);
AlgebraTable commutant_table(const AlgebraTable& table);
/// Dense algebra generated by the Pauli group spanned by `span` on K qubits.
OperatorAlgebra pauli_algebra(const std::vector<BitVec>& span, std::size_t K);

struct SptVerdict {
  bool nontrivial = false;
  std::optional<std::pair<PauliOperator, PauliOperator>> witness;
  std::size_t K = 0;
  std::size_t g_BC = 0;
  std::size_t g_E = 0;
  std::size_t g_A = 0;  // logicals on B C
  std::size_t g_B = 0;  // logicals on E C
  int cmi_bits = 0;     // g_A + g_B - 2K
  LogicalGroup L_A;
  LogicalGroup L_B;
  AlgebraTable A_table;
  AlgebraTable B_table;
};

SptVerdict spt_detect(const StabilizerIsometry& v);

/// Exact entropy, in bits, of `region` of the closed ring of length l. Region
/// labels are output labels suffixed "_k".
double stabilizer_entropy(const StabilizerIsometry& v, std::size_t l, const LabelSet& region);

}  // namespace spurtee

#endif  // SPURTEE_STABILIZER_HPP
