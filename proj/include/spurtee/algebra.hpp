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

#ifndef SPURTEE_ALGEBRA_HPP
#define SPURTEE_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spurtee/channel.hpp"

namespace spurtee {

/// Unital *-closed operator span, stored as a Hilbert-Schmidt orthonormal basis.
class OperatorAlgebra {
 public:
  OperatorAlgebra() = default;
  /// `basis` holds vec(B_j) as orthonormal columns (d^2 x k).
  OperatorAlgebra(std::size_t ambient_dim, Matrix basis);

  static OperatorAlgebra full(std::size_t d);
  static OperatorAlgebra scalars(std::size_t d);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return static_cast<std::size_t>(basis_.cols()); }
  const Matrix& basis() const { return basis_; }
  Matrix element(std::size_t j) const;
  std::vector<Matrix> elements() const;

  /// Distance of `x` from the span, in Hilbert-Schmidt norm.
  double residual(const Matrix& x) const;
  /// Orthogonal projection of `x` onto the span.
  Matrix project(const Matrix& x) const;

  /// Largest residual of the product of two basis elements.
  double closure_defect() const;

 private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
};

/// Orthonormal basis of the column span; singular values below
/// rel_tol * largest are discarded.
Matrix orthonormal_span(const Matrix& columns, double rel_tol = 1e-9);
/// Right null space of `constraints` with the same relative cut.
Matrix null_space(const Matrix& constraints, double rel_tol = 1e-9);

Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, std::size_t d);

OperatorAlgebra algebra_closure(const std::vector<Matrix>& generators, std::size_t d,
                                double rel_tol = 1e-9);
/// Operators commuting with every element of `ops`.
OperatorAlgebra commutant_of(const std::vector<Matrix>& ops, std::size_t d, double rel_tol = 1e-9);
OperatorAlgebra commutant(const OperatorAlgebra& alg, double rel_tol = 1e-9);
OperatorAlgebra center(const OperatorAlgebra& alg, double rel_tol = 1e-9);

/// max over the basis of `inner` of its residual against `outer`.
double containment_residual(const OperatorAlgebra& inner, const OperatorAlgebra& outer);
double span_distance(const OperatorAlgebra& a, const OperatorAlgebra& b);

struct Block {
  std::size_t n = 0;     // matrix block size
  std::size_t mult = 0;  // multiplicity n'

  bool operator==(const Block&) const = default;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  /// Unitary whose columns align the algebra to the direct sum of M_n (x) I_mult,
  /// block by block, with the M_n index most significant inside a block.
  Matrix basis_change;
  double off_pattern = 0.0;
};

BlockDecomposition block_decomposition(const OperatorAlgebra& alg, std::uint64_t seed = 0);
/// Rebuilds the algebra spanned by the block pattern in the given basis.
OperatorAlgebra algebra_from_blocks(const BlockDecomposition& bd);
/// Blocks sorted by (n, mult) descending; used for reports and comparisons.
std::vector<Block> canonical_blocks(std::vector<Block> blocks);

/// Trace-preserving conditional expectation (HS projection) onto the algebra.
Matrix conditional_expectation(const OperatorAlgebra& alg, const Matrix& x);

/// Commutant of span{K_a^dagger K_b}.
OperatorAlgebra correctable_algebra(const KrausChannel& ch, double rel_tol = 1e-9);

struct RecoveryReport {
  bool pass = false;
  // A_{E^c} inside A_E' (always expected) and the reverse inclusion.
  double complementary_in_commutant = 0.0;
  double commutant_in_complementary = 0.0;
  // E(P(rho)) = E(rho) and P(E^dagger(O)) = E^dagger(O) residuals.
  double state_form = 0.0;
  double observable_form = 0.0;
  bool span_pass = false;
  bool projection_pass = false;
  OperatorAlgebra algebra;
  OperatorAlgebra complementary_algebra;
};

/// Complementary recovery decided twice: by span comparison and by the
/// conditional-expectation characterization. Throws NumericalError if the
/// two verdicts disagree.
RecoveryReport complementary_recovery_check(const KrausChannel& ch, const Tolerances& tol = {});

struct DualReport {
  bool pass = false;
  RecoveryReport e;
  RecoveryReport f;
  OperatorAlgebra A;
  OperatorAlgebra B;
};

DualReport dual_complementarity_check(const Isometry& v, const LabelSet& b_labels,
                                      const LabelSet& e_labels, std::size_t bond_dim,
                                      const Tolerances& tol = {});

struct SaturationEntry {
  std::string name;  // which of the four algebra families
  std::size_t n = 0;
  std::size_t dim_one = 0;
  std::size_t dim_n = 0;
  double residual = 0.0;
  bool equal = false;
};

struct AlgebraSaturationReport {
  bool pass = false;
  std::vector<SaturationEntry> entries;
};

AlgebraSaturationReport algebra_saturation_check(const Isometry& v, const LabelSet& b_labels,
                                                 const LabelSet& e_labels, std::size_t bond_dim,
                                                 std::size_t n_max, const ResourceCaps& caps = {},
                                                 const Tolerances& tol = {});

/// Number of singular values above rel_tol * largest of the operator reshuffled
/// across (cut | rest).
std::size_t operator_schmidt_rank(const Matrix& op, const SubsystemLayout& layout,
                                  const LabelSet& cut, double rel_tol = 1e-9);

}  // namespace spurtee

#endif  // SPURTEE_ALGEBRA_HPP
