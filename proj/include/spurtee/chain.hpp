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

#ifndef SPURTEE_CHAIN_HPP
#define SPURTEE_CHAIN_HPP

#include <map>
#include <string>
#include <vector>

#include "spurtee/algebra.hpp"

namespace spurtee {

/// Translation-invariant fixed-point chain generated by V : (L, R) -> out.
/// The first input leg is contracted with the previous site.
struct ChainModel {
  Isometry V;
  std::size_t D = 0;
  LabelSet B_labels;
  LabelSet E_labels;
  ResourceCaps caps;
  /// Schmidt spectrum of the virtual pairs. Only the uniform spectrum is
  /// supported; a non-empty value is rejected.
  std::vector<double> spectrum;

  static ChainModel make(Isometry v, LabelSet b_labels, LabelSet e_labels, ResourceCaps caps = {});
  void validate() const;
  BoundaryChannels channels() const;
};

/// Pure state on A1, then per site the output factors suffixed "_k", then C.
struct ChainState {
  StateVector psi;
  std::size_t n = 0;
  LabelSet A;                  // {"A1"}
  std::vector<LabelSet> B;     // per site
  std::vector<LabelSet> E;     // per site
  LabelSet C;                  // {"C"}

  LabelSet all_B() const;
  LabelSet all_E() const;
};

ChainState build_open_chain(const ChainModel& model, std::size_t n);

/// Reduced state of rho^(n) on A1, B_1..B_n, C (E traced).
DensityOperator open_chain_rho(const ChainState& st);

enum class RingKeep { BOnly, BAndE };

/// Periodic chain of l sites. B-only reductions never form the full ring state.
DensityOperator build_closed_chain(const ChainModel& model, std::size_t l, RingKeep keep);

/// Labels of site k (1-based) of a ring or open chain.
LabelSet site_labels(const LabelSet& base, std::size_t k);

struct CmiReport {
  double value = 0.0;
  double S_AB = 0.0;
  double S_BC = 0.0;
  double S_B = 0.0;
  double S_ABC = 0.0;
  std::string method = "brute-force";
};

CmiReport cmi(const DensityOperator& rho, const LabelSet& a, const LabelSet& b, const LabelSet& c);
/// Same quantity on a pure state, diagonalizing the smaller side of each cut.
CmiReport cmi(const StateVector& psi, const LabelSet& a, const LabelSet& b, const LabelSet& c);
double mutual_information(const StateVector& psi, const LabelSet& a, const LabelSet& b);

struct SaturationReport {
  double cmi_one = 0.0;
  double cmi_two = 0.0;
  // Differences (n=1 value) - (n=2 value) for each condition.
  double diff_cmi = 0.0;
  double diff_abc = 0.0;  // I(A1 : B C)
  double diff_ab = 0.0;   // I(A1 : B)
  double diff_aec = 0.0;  // I(A1 : E C)
  bool cmi_saturated = false;
  bool abc_saturated = false;
  bool ab_saturated = false;
  bool aec_saturated = false;
  /// Both equivalences of the saturation proposition hold on these numbers.
  bool consistent = false;
};

SaturationReport saturation_check(const ChainModel& model, const Tolerances& tol = {});

/// sum_k p_k log2(n_k / n_k') + sum_l q_l log2(m_l / m_l').
double cmi_formula(const std::vector<Block>& a, const std::vector<Block>& b, std::size_t bond_dim);

/// (id (x) P_A)(|omega_D><omega_D|) on factors A1, A2.
DensityOperator omega_A_state(const OperatorAlgebra& alg, std::size_t bond_dim);
/// S(A2) - S(A1 A2) of omega_A plus the same for omega_B.
double coherent_information_route(const OperatorAlgebra& a, const OperatorAlgebra& b,
                                  std::size_t bond_dim);

struct LogicalSolution {
  Matrix particular;
  SubsystemLayout support;
  std::size_t kernel_dim = 0;
  bool unique = false;
  double residual = 0.0;
};

/// Expands region tokens against an n-site chain: "B", "E", "C", "B_k", "E_k",
/// or any literal factor label.
LabelSet expand_region(const ChainModel& model, std::size_t n, const std::vector<std::string>& tokens);

/// Operator on `support` that acts on the n-site encoding like O on the input.
LogicalSolution logical_operators(const ChainModel& model, const Matrix& op, std::size_t n,
                                  const LabelSet& support, const Tolerances& tol = {});

/// Iterated boundary channel as an isometry from the input leg to the open
/// chain's outputs (everything but A1).
Matrix chain_encoder(const ChainState& st, std::size_t bond_dim);

}  // namespace spurtee

#endif  // SPURTEE_CHAIN_HPP
