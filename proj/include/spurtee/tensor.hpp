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

#ifndef SPURTEE_TENSOR_HPP
#define SPURTEE_TENSOR_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "spurtee/errors.hpp"

namespace spurtee {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using LabelSet = std::vector<std::string>;

struct Factor {
  std::string label;
  std::size_t dim = 1;

  bool operator==(const Factor&) const = default;
};

/// Ordered list of labeled tensor factors. Index arithmetic is row-major:
/// the first factor is the most significant digit of a basis index.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<Factor> factors);

  static SubsystemLayout single(std::string label, std::size_t dim);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  std::size_t total_dim() const;
  std::vector<std::size_t> dims() const;
  LabelSet labels() const;

  bool contains(std::string_view label) const;
  /// Throws ValidationError naming the label if it is absent.
  std::size_t index_of(std::string_view label) const;
  /// Product of the dims of the named factors.
  std::size_t dim_of(const LabelSet& labels) const;

  /// Factors named in `labels`, in this layout's order.
  SubsystemLayout subset(const LabelSet& labels) const;
  /// Factors not named in `labels`, in this layout's order.
  SubsystemLayout complement(const LabelSet& labels) const;
  SubsystemLayout concat(const SubsystemLayout& other) const;
  /// Appends `suffix` to every label.
  SubsystemLayout suffixed(std::string_view suffix) const;

  bool operator==(const SubsystemLayout&) const = default;

 private:
  std::vector<Factor> factors_;
};

struct DensityOperator {
  Matrix matrix;
  SubsystemLayout layout;

  /// Hermitian, unit trace and positive semidefinite within `tol`.
  void validate(double tol = 1e-10) const;
};

struct StateVector {
  Vector amplitudes;
  SubsystemLayout layout;

  void validate(double tol = 1e-10) const;
  DensityOperator projector() const;
};

// ---------------------------------------------------------------------------
// Index bookkeeping.

/// For each index of the permuted space (factors in `order`), the index of the
/// same basis element in the original space.
std::vector<std::size_t> permutation_map(std::span<const std::size_t> dims,
                                         std::span<const std::size_t> order);

/// Factor positions of `labels` followed by the remaining factors, each group
/// in layout order.
std::vector<std::size_t> split_order(const SubsystemLayout& layout, const LabelSet& first);

Vector permute_vector(const Vector& v, const SubsystemLayout& layout,
                      std::span<const std::size_t> order);
Matrix permute_operator(const Matrix& op, const SubsystemLayout& layout,
                        std::span<const std::size_t> order);
/// Row permutation only; used for isometries whose output layout is permuted.
Matrix permute_rows(const Matrix& op, const SubsystemLayout& layout,
                    std::span<const std::size_t> order);

/// Reshapes a pure state into the (kept x rest) coefficient matrix.
Matrix bipartite_matrix(const Vector& psi, const SubsystemLayout& layout, const LabelSet& keep);

// ---------------------------------------------------------------------------
// Operations.

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);
DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b);
StateVector tensor_product(const StateVector& a, const StateVector& b);

/// Reduction onto `keep`, factors returned in their original order.
DensityOperator partial_trace(const DensityOperator& rho, const LabelSet& keep);
/// Reduced state of a pure state without forming the full projector.
DensityOperator reduced_state(const StateVector& psi, const LabelSet& keep);

/// Eigenvalues below this are treated as exact zeros in entropies.
inline constexpr double kEntropyClip = 1e-12;

/// Ascending eigenvalues of a Hermitian matrix. Rejects non-Hermitian input.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& h, double hermitian_tol = 1e-10);
/// -sum lambda log2 lambda over eigenvalues above the clip.
double entropy_of_spectrum(const Eigen::VectorXd& eigenvalues);
double von_neumann_entropy(const Matrix& rho);
double von_neumann_entropy(const DensityOperator& rho);
/// Entropy of a region of a pure state; diagonalizes the smaller side.
double region_entropy(const StateVector& psi, const LabelSet& region);

/// sum_i |ii>/sqrt(D) on factors (label_a, label_b).
StateVector max_entangled(std::size_t dim, std::string label_a = "A1", std::string label_b = "A2");

/// Haar-distributed unitary; deterministic for a given seed.
Matrix haar_unitary(std::size_t dim, std::uint64_t seed);

/// Largest entrywise |M - M^dagger|.
double hermiticity_defect(const Matrix& m);

// Pauli matrices P0 = I, P1 = X, P2 = Y, P3 = Z.
Matrix pauli_matrix(int index);

}  // namespace spurtee

#endif  // SPURTEE_TENSOR_HPP
