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

#ifndef SPURTEE_MODELS_HPP
#define SPURTEE_MODELS_HPP

#include <optional>
#include <string>

#include "spurtee/chain.hpp"
#include "spurtee/stabilizer.hpp"

namespace spurtee {

/// Isometry whose B output carries four Kraus branches (P_i (x) P_i U) / 2 and
/// whose two E qubits record the branch index i = 2 e0 + e1.
Isometry pauli_twirl_isometry(const Matrix& u);

/// Channel E' (x) id with E'(rho) = rho/2 + X rho X/4 + Z rho Z/4, dilated
/// into a qutrit environment.
Isometry product_trivial_isometry();

/// (l, r) -> (l, r) on B, |0> on a single E qubit.
Isometry identity_to_b_isometry();

/// CZ_{b,e} (H (x) I): left leg to b, right leg to e.
Isometry cluster_isometry();

struct Model {
  std::string spec;
  ChainModel chain;
  /// Present when the model is Clifford and its tableau is known.
  std::optional<StabilizerIsometry> stabilizer;
  std::string description;
};

/// Resolves a model spec string:
///   paulitwirl:identity | paulitwirl:haar[:seed] | paulitwirl:matrix:<json file>
///   product_trivial | identity_to_b | cluster
///   stabilizer:<tableau file> | custom:<channel json file>
/// `default_seed` is used by paulitwirl:haar when no seed is given.
Model resolve_model(const std::string& spec, std::uint64_t default_seed = 0, const ResourceCaps& caps = {});

std::string read_text_file(const std::string& path);

}  // namespace spurtee

#endif  // SPURTEE_MODELS_HPP
