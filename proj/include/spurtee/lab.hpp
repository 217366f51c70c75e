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

#ifndef SPURTEE_LAB_HPP
#define SPURTEE_LAB_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spurtee/models.hpp"
#include "spurtee/serialize.hpp"

namespace spurtee {

struct LabOptions {
  std::uint64_t seed = 0;
  ResourceCaps caps;
  Tolerances tol;
  unsigned workers = 1;
};

/// Full algebraic and entropic analysis of one model. The report carries a
/// top-level "consistent" flag that is false when routes that must agree do not.
Json analyze(const Model& model, const LabOptions& opt);

struct ScanRow {
  std::uint64_t seed = 0;
  std::size_t l = 0;
  double S_bits = 0.0;
  double c0_fit = 0.0;
  double residual = 0.0;
  std::string error;  // non-empty when the job failed on a resource cap
};

struct ScanResult {
  std::vector<ScanRow> rows;  // ordered by (seed, l) as requested
  std::vector<std::string> errors;
};

/// Closed-ring entropies S(rho_B) for each (seed, l). For paulitwirl:haar
/// without an explicit seed each scan seed selects the Haar draw.
ScanResult ring_scan(const std::string& spec, const std::vector<std::size_t>& ls,
                     const std::vector<std::uint64_t>& seeds, const LabOptions& opt);
std::string scan_csv(const ScanResult& r);
Json scan_json(const ScanResult& r, const std::string& spec, const LabOptions& opt);

/// Pauli string of length K ("X", "XZ", ...) as a D x D matrix, or a JSON matrix
/// file when `name` starts with "file:".
Matrix named_operator(const std::string& name, std::size_t bond_dim);

Json logical_report(const Model& model, const std::string& op_name, std::size_t n,
                    const std::vector<std::string>& support_tokens, const LabOptions& opt);

/// Stabilizer analysis plus the dense cross-check when the chain is small enough.
Json stab_report(const Model& model, const LabOptions& opt);

struct StabSample {
  std::uint64_t seed = 0;
  std::size_t K = 0, nb = 0, ne = 0;
  bool saturated = false;  // algebra saturation pre-filter
  bool nontrivial = false;
  double cmi = 0.0;
  int cmi_bits = 0;
  std::size_t g_BC = 0, g_E = 0;
  bool agree = false;
};

/// Random Clifford isometries with K <= 3 and at most three qubits on each side,
/// drawn until `saturated_target` pass the saturation pre-filter (at most
/// 50 draws per target sample). Every draw is returned.
std::vector<StabSample> stab_random_batch(std::size_t saturated_target, std::uint64_t seed, const LabOptions& opt);
Json to_json(const StabSample& s);

}  // namespace spurtee

#endif  // SPURTEE_LAB_HPP
