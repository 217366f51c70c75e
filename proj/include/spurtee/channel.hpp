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

#ifndef SPURTEE_CHANNEL_HPP
#define SPURTEE_CHANNEL_HPP

#include <string>
#include <vector>

#include "spurtee/tensor.hpp"

namespace spurtee {

/// Kraus operators below this Frobenius norm are dropped.
inline constexpr double kKrausTrim = 1e-12;

struct KrausChannel {
  std::vector<Matrix> kraus;
  SubsystemLayout in_layout;
  SubsystemLayout out_layout;

  /// Validates shapes and trace preservation, then trims negligible operators.
  static KrausChannel make(std::vector<Matrix> kraus, SubsystemLayout in_layout,
                           SubsystemLayout out_layout, double tol = 1e-10);

  std::size_t in_dim() const { return in_layout.total_dim(); }
  std::size_t out_dim() const { return out_layout.total_dim(); }
  std::size_t env_dim() const { return kraus.size(); }

  /// Largest entry of |sum K^dagger K - I|.
  double trace_preservation_defect() const;
};

struct Isometry {
  Matrix matrix;
  SubsystemLayout in_layout;
  SubsystemLayout out_layout;

  static Isometry make(Matrix matrix, SubsystemLayout in_layout, SubsystemLayout out_layout,
                       double tol = 1e-10);

  std::size_t in_dim() const { return in_layout.total_dim(); }
  std::size_t out_dim() const { return out_layout.total_dim(); }
  double isometry_defect() const;
};

Matrix apply(const KrausChannel& ch, const Matrix& rho);
DensityOperator apply(const KrausChannel& ch, const DensityOperator& rho);
/// Heisenberg picture: sum_a K_a^dagger O K_a.
Matrix adjoint_apply(const KrausChannel& ch, const Matrix& op);

/// V = sum_a K_a (x) |a>, environment appended as the last factor.
Isometry stinespring(const KrausChannel& ch, const std::string& env_label = "env");
/// Channel to the environment of the Stinespring dilation.
KrausChannel complementary(const KrausChannel& ch, const std::string& env_label = "env");
/// Unitary conjugation as a channel.
KrausChannel unitary_channel(const Matrix& u, const SubsystemLayout& layout);
KrausChannel identity_channel(const SubsystemLayout& layout);

/// Channel obtained from an isometry by tracing the output factors `drop`.
KrausChannel trace_channel_output(const Isometry& v, const LabelSet& drop);
/// Composes a channel with a partial trace of its output.
KrausChannel trace_out(const KrausChannel& ch, const LabelSet& drop);
/// Re-expresses the channel with at most in*out Kraus operators (Choi rank).
KrausChannel compress(const KrausChannel& ch);

struct BoundaryChannels {
  KrausChannel E;  // keeps the B factors
  KrausChannel F;  // keeps the E factors
};

BoundaryChannels boundary_channels(const Isometry& v, const LabelSet& b_labels,
                                   const LabelSet& e_labels);

/// Contracts one half of |omega_D> into the second input leg. The result maps
/// a D-dim leg to out (x) C with C of dimension D.
KrausChannel tilde(const KrausChannel& ch, std::size_t bond_dim, const std::string& c_label = "C");

/// n-fold composition of tilde(ch). Output factors are the channel's output
/// labels suffixed "_k" for k = 1..n, followed by the C leg.
KrausChannel iterate_tilde(const KrausChannel& ch, std::size_t bond_dim, std::size_t n,
                           const ResourceCaps& caps = {}, const std::string& c_label = "C");

}  // namespace spurtee

#endif  // SPURTEE_CHANNEL_HPP
