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

#ifndef SPURTEE_PAULI_HPP
#define SPURTEE_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spurtee/tensor.hpp"

namespace spurtee {

using BitVec = std::vector<std::uint8_t>;

/// i^phase * X^x * Z^z, qubit 0 leftmost (most significant in dense indices).
struct PauliOperator {
  BitVec x;
  BitVec z;
  int phase = 0;  // modulo 4

  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : x(n, 0), z(n, 0) {}

  /// Parses "+XIYZ", "-ZZ", "+iX", "-iY"; a missing sign means "+".
  static PauliOperator parse(std::string_view text);
  static PauliOperator single(std::size_t n, std::size_t qubit, char letter);
  static PauliOperator from_symplectic(const BitVec& xz);

  std::size_t num_qubits() const { return x.size(); }
  bool is_hermitian() const;
  bool is_identity() const;
  std::size_t weight() const;
  bool commutes_with(const PauliOperator& other) const;
  /// x bits followed by z bits.
  BitVec symplectic() const;
  /// Restriction to the listed qubits, in the listed order; phase of the letters kept.
  PauliOperator restricted(const std::vector<std::size_t>& qubits) const;
  /// Sign column plus I/X/Y/Z letters.
  std::string str() const;
  Matrix matrix() const;

  PauliOperator operator*(const PauliOperator& other) const;
  bool operator==(const PauliOperator&) const = default;
};

/// x1.z2 + z1.x2 mod 2.
int symplectic_product(const PauliOperator& a, const PauliOperator& b);
int symplectic_product(const BitVec& a, const BitVec& b);

/// Tr(P M) for the Pauli P, computed from the action P|s> = i^p (-1)^{z.s} |s ^ x>.
Complex pauli_trace(const PauliOperator& p, const Matrix& m);

// ---------------------------------------------------------------------------
// Dense GF(2) linear algebra. Rows are bit vectors of equal length.

struct Gf2Echelon {
  std::vector<BitVec> rows;          // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::vector<BitVec> combination;   // which input rows were summed into each row
};

/// Reduced row echelon form with pivots chosen left to right.
Gf2Echelon gf2_reduce(const std::vector<BitVec>& rows, std::size_t ncols);
std::size_t gf2_rank(const std::vector<BitVec>& rows, std::size_t ncols);
/// Basis of {v : rows * v = 0}.
std::vector<BitVec> gf2_null_space(const std::vector<BitVec>& rows, std::size_t ncols);
/// True if v lies in the row span.
bool gf2_in_span(const std::vector<BitVec>& rows, const BitVec& v);
BitVec gf2_add(const BitVec& a, const BitVec& b);

}  // namespace spurtee

#endif  // SPURTEE_PAULI_HPP
