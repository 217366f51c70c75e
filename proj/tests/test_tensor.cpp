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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spurtee/tensor.hpp"

using namespace spurtee;

namespace {

SubsystemLayout qubits(std::initializer_list<const char*> labels) {
  std::vector<Factor> f;
  for (const char* l : labels) f.push_back(Factor{l, 2});
  return SubsystemLayout(std::move(f));
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Layout, RejectsDuplicateAndZeroDims) {
  EXPECT_THROW(SubsystemLayout({Factor{"a", 2}, Factor{"a", 2}}), ValidationError);
  EXPECT_THROW(SubsystemLayout({Factor{"a", 0}}), ValidationError);
  const auto l = qubits({"a", "b", "c"});
  EXPECT_EQ(l.total_dim(), 8u);
  EXPECT_EQ(l.subset({"c", "a"}).labels(), (LabelSet{"a", "c"}));
  EXPECT_EQ(l.complement({"b"}).labels(), (LabelSet{"a", "c"}));
  EXPECT_THROW(l.index_of("zz"), ValidationError);
}

TEST(TensorProduct, IdentityAndBasisVectors) {
  EXPECT_LT(max_abs(kron(Matrix(Matrix::Identity(2, 2)), Matrix(Matrix::Identity(2, 2))) - Matrix::Identity(4, 4)), 1e-15);
  Vector zero = Vector::Zero(2), one = Vector::Zero(2);
  zero(0) = 1;
  one(1) = 1;
  const auto s = tensor_product(StateVector{zero, SubsystemLayout::single("a", 2)},
                                StateVector{one, SubsystemLayout::single("b", 2)});
  Vector e01 = Vector::Zero(4);
  e01(1) = 1;
  EXPECT_LT((s.amplitudes - e01).norm(), 1e-15);
  EXPECT_EQ(s.layout.labels(), (LabelSet{"a", "b"}));
}

TEST(TensorProduct, MatchesIndexArithmetic) {
  EXPECT_LT(max_abs(kron(pauli_matrix(1), pauli_matrix(3)) - oracle::kron(oracle::pauli(1), oracle::pauli(3))), 1e-15);
  std::mt19937_64 rng(3);
  const Matrix a = oracle::gaussian(3, 2, rng), b = oracle::gaussian(2, 4, rng);
  EXPECT_LT(max_abs(kron(a, b) - oracle::kron(a, b)), 1e-13);
}

TEST(PartialTrace, MaximallyEntangledReducesToMixed) {
  const auto w = max_entangled(2);
  const auto r = reduced_state(w, {"A1"});
  EXPECT_LT(max_abs(r.matrix - Matrix::Identity(2, 2) / 2.0), 1e-15);
}

TEST(PartialTrace, ProductStateAndUnknownLabel) {
  std::mt19937_64 rng(5);
  const DensityOperator a{oracle::random_density(2, rng), SubsystemLayout::single("A", 2)};
  const DensityOperator b{oracle::random_density(3, rng), SubsystemLayout::single("B", 3)};
  const auto ab = tensor_product(a, b);
  EXPECT_LT(max_abs(partial_trace(ab, {"A"}).matrix - a.matrix), 1e-14);
  try {
    partial_trace(ab, {"Q"});
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("Q"), std::string::npos);
  }
}

TEST(PartialTrace, MatchesOracleAndComposes) {
  std::mt19937_64 rng(7);
  const SubsystemLayout l({Factor{"A", 2}, Factor{"E", 3}, Factor{"C", 2}});
  const DensityOperator rho{oracle::random_density(12, rng), l};
  for (const LabelSet& keep : {LabelSet{"A"}, LabelSet{"E"}, LabelSet{"C", "A"}, LabelSet{"E", "C"}}) {
    std::vector<bool> mask;
    for (const auto& f : l.factors()) mask.push_back(std::find(keep.begin(), keep.end(), f.label) != keep.end());
    EXPECT_LT(max_abs(partial_trace(rho, keep).matrix - oracle::partial_trace(rho.matrix, {2, 3, 2}, mask)), 1e-14);
  }
  const auto step = partial_trace(partial_trace(rho, {"A", "C"}), {"A"});
  EXPECT_LT(max_abs(step.matrix - partial_trace(rho, {"A"}).matrix), 1e-12);
}

TEST(PartialTrace, ComplementarySpectraAgree) {
  std::mt19937_64 rng(11);
  const StateVector psi{oracle::random_state(8, rng), qubits({"a", "b", "c"})};
  const auto ea = hermitian_eigenvalues(reduced_state(psi, {"a"}).matrix);
  const auto ebc = hermitian_eigenvalues(reduced_state(psi, {"b", "c"}).matrix);
  std::vector<double> x(ea.data(), ea.data() + ea.size()), y(ebc.data(), ebc.data() + ebc.size());
  std::sort(x.rbegin(), x.rend());
  std::sort(y.rbegin(), y.rend());
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(x[i], y[i], 1e-10);
  for (std::size_t i = x.size(); i < y.size(); ++i) EXPECT_NEAR(y[i], 0.0, 1e-10);
}

TEST(Entropy, KnownValues) {
  EXPECT_NEAR(von_neumann_entropy(Matrix(Matrix::Identity(2, 2) / 2.0)), 1.0, 1e-12);
  std::mt19937_64 rng(13);
  const Vector v = oracle::random_state(5, rng);
  EXPECT_NEAR(von_neumann_entropy(Matrix(v * v.adjoint())), 0.0, 1e-10);
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 0.5, 0.25, 0.25;
  EXPECT_NEAR(von_neumann_entropy(d), 1.5, 1e-12);
}

TEST(Entropy, RejectsNonHermitian) {
  Matrix m = Matrix::Identity(2, 2) / 2.0;
  m(0, 1) = 0.3;
  EXPECT_THROW(von_neumann_entropy(m), ValidationError);
}

TEST(Entropy, BasisIndependentAndMatchesOracle) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    const Matrix rho = oracle::random_density(6, rng);
    const Matrix u = haar_unitary(6, 100 + t);
    EXPECT_NEAR(von_neumann_entropy(rho), von_neumann_entropy(Matrix(u * rho * u.adjoint())), 1e-9);
    EXPECT_NEAR(von_neumann_entropy(rho), oracle::entropy(rho), 1e-9);
  }
}

TEST(Entropy, SubadditivityAndStrongSubadditivity) {
  std::mt19937_64 rng(19);
  const SubsystemLayout l({Factor{"A", 2}, Factor{"B", 3}, Factor{"C", 2}, Factor{"D", 2}});
  for (int t = 0; t < 20; ++t) {
    const StateVector psi{oracle::random_state(24, rng), l};
    auto S = [&](const LabelSet& r) { return region_entropy(psi, r); };
    EXPECT_LE(S({"A", "B"}), S({"A"}) + S({"B"}) + 1e-9);
    EXPECT_GE(S({"A", "B"}) + S({"B", "C"}), S({"B"}) + S({"A", "B", "C"}) - 1e-9);
  }
}

TEST(MaxEntangled, Examples) {
  const auto one = max_entangled(1);
  EXPECT_EQ(one.amplitudes.size(), 1);
  EXPECT_NEAR(region_entropy(one, {"A1"}), 0.0, 1e-15);
  const auto two = max_entangled(2);
  EXPECT_NEAR(two.amplitudes(0).real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(two.amplitudes(3).real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(two.amplitudes(1)) + std::abs(two.amplitudes(2)), 0.0, 1e-15);
  EXPECT_NEAR(region_entropy(max_entangled(4), {"A1"}), 2.0, 1e-12);
  EXPECT_THROW(max_entangled(0), ValidationError);
}

TEST(Haar, UnitaryDeterministicAndUniform) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Matrix u = haar_unitary(4, s);
    EXPECT_LE(max_abs(u.adjoint() * u - Matrix::Identity(4, 4)), 1e-12);
  }
  EXPECT_EQ(haar_unitary(3, 42), haar_unitary(3, 42));
  double mean = 0.0;
  const int samples = 10000;
  for (int s = 0; s < samples; ++s) mean += std::norm(haar_unitary(2, s)(0, 0));
  EXPECT_NEAR(mean / samples, 0.5, 0.02);
}

TEST(Caps, ReportsEstimate) {
  ResourceCaps caps;
  caps.max_amplitudes = 100;
  try {
    caps.check(1000, "test object");
    FAIL() << "expected a cap error";
  } catch (const ResourceCapError& e) {
    EXPECT_NE(std::string(e.what()).find("test object"), std::string::npos);
  }
  EXPECT_NO_THROW(caps.check(100, "fits"));
}
