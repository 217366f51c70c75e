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

#include "spurtee/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace spurtee {

void ResourceCaps::check(std::uint64_t entries, const std::string& what) const {
  if (entries > max_amplitudes) {
    std::ostringstream ss;
    ss << "resource cap: " << what << " needs " << entries << " complex entries (~"
       << (entries * 16) / (1024 * 1024) << " MiB) but the cap is " << max_amplitudes
       << "; raise --cap-amplitudes or reduce the size";
    throw ResourceCapError(ss.str());
  }
}

SubsystemLayout::SubsystemLayout(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::set<std::string> seen;
  for (const auto& f : factors_) {
    if (f.dim == 0) {
      throw ValidationError("layout factor '" + f.label + "' has dimension 0");
    }
    if (!seen.insert(f.label).second) {
      throw ValidationError("duplicate layout label '" + f.label + "'");
    }
  }
}

SubsystemLayout SubsystemLayout::single(std::string label, std::size_t dim) {
  return SubsystemLayout({Factor{std::move(label), dim}});
}

std::size_t SubsystemLayout::total_dim() const {
  std::size_t d = 1;
  for (const auto& f : factors_) d *= f.dim;
  return d;
}

std::vector<std::size_t> SubsystemLayout::dims() const {
  std::vector<std::size_t> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.dim);
  return out;
}

LabelSet SubsystemLayout::labels() const {
  LabelSet out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.label);
  return out;
}

bool SubsystemLayout::contains(std::string_view label) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return f.label == label; });
}

std::size_t SubsystemLayout::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].label == label) return i;
  }
  throw ValidationError("unknown subsystem label '" + std::string(label) + "'");
}

std::size_t SubsystemLayout::dim_of(const LabelSet& labels) const {
  std::size_t d = 1;
  for (const auto& l : labels) d *= factors_[index_of(l)].dim;
  return d;
}

SubsystemLayout SubsystemLayout::subset(const LabelSet& labels) const {
  std::set<std::size_t> wanted;
  for (const auto& l : labels) wanted.insert(index_of(l));
  std::vector<Factor> out;
  for (std::size_t i : wanted) out.push_back(factors_[i]);
  return SubsystemLayout(std::move(out));
}

SubsystemLayout SubsystemLayout::complement(const LabelSet& labels) const {
  std::set<std::size_t> drop;
  for (const auto& l : labels) drop.insert(index_of(l));
  std::vector<Factor> out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!drop.count(i)) out.push_back(factors_[i]);
  }
  return SubsystemLayout(std::move(out));
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout& other) const {
  std::vector<Factor> out = factors_;
  out.insert(out.end(), other.factors_.begin(), other.factors_.end());
  return SubsystemLayout(std::move(out));
}

SubsystemLayout SubsystemLayout::suffixed(std::string_view suffix) const {
  std::vector<Factor> out = factors_;
  for (auto& f : out) f.label += suffix;
  return SubsystemLayout(std::move(out));
}

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void DensityOperator::validate(double tol) const {
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  if (matrix.rows() != d || matrix.cols() != d) {
    throw ValidationError("density matrix shape does not match its layout");
  }
  if (hermiticity_defect(matrix) > tol) throw ValidationError("density matrix is not Hermitian");
  if (std::abs(matrix.trace() - Complex(1.0)) > tol) {
    throw ValidationError("density matrix does not have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) {
    throw ValidationError("density matrix has a negative eigenvalue");
  }
}

void StateVector::validate(double tol) const {
  if (amplitudes.size() != static_cast<Eigen::Index>(layout.total_dim())) {
    throw ValidationError("state vector length does not match its layout");
  }
  if (std::abs(amplitudes.norm() - 1.0) > tol) throw ValidationError("state vector is not normalized");
}

DensityOperator StateVector::projector() const {
  return DensityOperator{amplitudes * amplitudes.adjoint(), layout};
}

std::vector<std::size_t> permutation_map(std::span<const std::size_t> dims,
                                         std::span<const std::size_t> order) {
  const std::size_t m = dims.size();
  std::vector<std::size_t> stride(m, 1);
  for (std::size_t i = m; i-- > 1;) stride[i - 1] = stride[i] * dims[i];
  std::size_t total = 1;
  for (auto d : dims) total *= d;

  std::vector<std::size_t> map(total);
  std::vector<std::size_t> digit(m, 0);
  std::size_t old_index = 0;
  for (std::size_t t = 0; t < total; ++t) {
    map[t] = old_index;
    // Odometer over the new ordering: last position varies fastest.
    for (std::size_t j = m; j-- > 0;) {
      const std::size_t f = order[j];
      if (++digit[j] < dims[f]) {
        old_index += stride[f];
        break;
      }
      old_index -= (dims[f] - 1) * stride[f];
      digit[j] = 0;
    }
  }
  return map;
}

std::vector<std::size_t> split_order(const SubsystemLayout& layout, const LabelSet& first) {
  std::vector<bool> pick(layout.size(), false);
  for (const auto& l : first) pick[layout.index_of(l)] = true;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (pick[i]) order.push_back(i);
  }
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!pick[i]) order.push_back(i);
  }
  return order;
}

Vector permute_vector(const Vector& v, const SubsystemLayout& layout,
                      std::span<const std::size_t> order) {
  const auto dims = layout.dims();
  const auto map = permutation_map(dims, order);
  Vector out(v.size());
  for (std::size_t t = 0; t < map.size(); ++t) out(t) = v(map[t]);
  return out;
}

Matrix permute_operator(const Matrix& op, const SubsystemLayout& layout,
                        std::span<const std::size_t> order) {
  const auto dims = layout.dims();
  const auto map = permutation_map(dims, order);
  const auto n = static_cast<Eigen::Index>(map.size());
  Matrix out(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) out(r, c) = op(map[r], map[c]);
  }
  return out;
}

Matrix permute_rows(const Matrix& op, const SubsystemLayout& layout,
                    std::span<const std::size_t> order) {
  const auto dims = layout.dims();
  const auto map = permutation_map(dims, order);
  Matrix out(op.rows(), op.cols());
  for (std::size_t t = 0; t < map.size(); ++t) out.row(t) = op.row(map[t]);
  return out;
}

Matrix bipartite_matrix(const Vector& psi, const SubsystemLayout& layout, const LabelSet& keep) {
  const auto order = split_order(layout, keep);
  const auto map = permutation_map(layout.dims(), order);
  const std::size_t dk = layout.dim_of(keep);
  const std::size_t dr = layout.total_dim() / dk;
  Matrix m(dk, dr);
  for (std::size_t k = 0; k < dk; ++k) {
    for (std::size_t r = 0; r < dr; ++r) m(k, r) = psi(map[k * dr + r]);
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator{kron(a.matrix, b.matrix), a.layout.concat(b.layout)};
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  return StateVector{kron(a.amplitudes, b.amplitudes), a.layout.concat(b.layout)};
}

DensityOperator partial_trace(const DensityOperator& rho, const LabelSet& keep) {
  const auto& layout = rho.layout;
  const auto order = split_order(layout, keep);
  const auto map = permutation_map(layout.dims(), order);
  const std::size_t dk = layout.dim_of(keep);
  const std::size_t dr = layout.total_dim() / dk;
  Matrix out = Matrix::Zero(dk, dk);
  for (std::size_t kc = 0; kc < dk; ++kc) {
    for (std::size_t kr = 0; kr < dk; ++kr) {
      Complex acc = 0;
      for (std::size_t r = 0; r < dr; ++r) acc += rho.matrix(map[kr * dr + r], map[kc * dr + r]);
      out(kr, kc) = acc;
    }
  }
  return DensityOperator{std::move(out), layout.subset(keep)};
}

DensityOperator reduced_state(const StateVector& psi, const LabelSet& keep) {
  const Matrix m = bipartite_matrix(psi.amplitudes, psi.layout, keep);
  return DensityOperator{m * m.adjoint(), psi.layout.subset(keep)};
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& h, double hermitian_tol) {
  if (h.rows() != h.cols()) throw ValidationError("eigenvalues requested for a non-square matrix");
  if (h.size() == 0) return Eigen::VectorXd();
  if (hermiticity_defect(h) > hermitian_tol) {
    throw ValidationError("matrix is not Hermitian (defect above tolerance)");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");
  return es.eigenvalues();
}

double entropy_of_spectrum(const Eigen::VectorXd& eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda > kEntropyClip) s -= lambda * std::log2(lambda);
  }
  return s;
}

double von_neumann_entropy(const Matrix& rho) {
  return entropy_of_spectrum(hermitian_eigenvalues(rho));
}

double von_neumann_entropy(const DensityOperator& rho) { return von_neumann_entropy(rho.matrix); }

double region_entropy(const StateVector& psi, const LabelSet& region) {
  if (region.empty()) return 0.0;
  const std::size_t dk = psi.layout.dim_of(region);
  const std::size_t total = psi.layout.total_dim();
  if (dk * dk <= total) {
    return von_neumann_entropy(reduced_state(psi, region));
  }
  // Complement is smaller; the spectra agree for pure states.
  LabelSet rest = psi.layout.complement(region).labels();
  if (rest.empty()) return 0.0;
  return von_neumann_entropy(reduced_state(psi, rest));
}

StateVector max_entangled(std::size_t dim, std::string label_a, std::string label_b) {
  if (dim == 0) throw ValidationError("maximally entangled state needs dimension >= 1");
  Vector v = Vector::Zero(dim * dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t i = 0; i < dim; ++i) v(i * dim + i) = amp;
  return StateVector{std::move(v),
                     SubsystemLayout({Factor{std::move(label_a), dim}, Factor{std::move(label_b), dim}})};
}

Matrix haar_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw ValidationError("unitary dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0));
  Matrix g(dim, dim);
  for (Eigen::Index c = 0; c < g.cols(); ++c) {
    for (Eigen::Index r = 0; r < g.rows(); ++r) g(r, c) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    const Complex d = r(i, i);
    const double mag = std::abs(d);
    q.col(i) *= mag > 0 ? d / mag : Complex(1.0);
  }
  return q;
}

Matrix pauli_matrix(int index) {
  Matrix p = Matrix::Zero(2, 2);
  switch (index) {
    case 0:
      p(0, 0) = 1;
      p(1, 1) = 1;
      break;
    case 1:
      p(0, 1) = 1;
      p(1, 0) = 1;
      break;
    case 2:
      p(0, 1) = Complex(0, -1);
      p(1, 0) = Complex(0, 1);
      break;
    case 3:
      p(0, 0) = 1;
      p(1, 1) = -1;
      break;
    default:
      throw ValidationError("Pauli index must be 0..3");
  }
  return p;
}

}  // namespace spurtee
