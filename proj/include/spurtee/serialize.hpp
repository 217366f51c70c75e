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

#ifndef SPURTEE_SERIALIZE_HPP
#define SPURTEE_SERIALIZE_HPP

#include "json.hpp"

#include "spurtee/chain.hpp"
#include "spurtee/stabilizer.hpp"

namespace spurtee {

using Json = nlohmann::ordered_json;

/// Nested arrays of [re, im] pairs, row by row.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json layout_to_json(const SubsystemLayout& layout);
SubsystemLayout layout_from_json(const Json& j);

/// Channel or isometry file:
///   {"kind": "kraus" | "isometry", "in": [dims], "out": [{label, dim}], "ops": [matrix...]}
/// Isometries may name their partition with "B": [...] and "E": [...];
/// otherwise labels starting with 'b' are B and the rest E. Kraus channels
/// become the B side of their Stinespring dilation.
ChainModel chain_model_from_json(const Json& j, const ResourceCaps& caps = {});
Json isometry_to_json(const Isometry& v, const LabelSet& b_labels, const LabelSet& e_labels);

Json blocks_to_json(const std::vector<Block>& blocks);
Json algebra_report(const OperatorAlgebra& alg, std::uint64_t seed);
Json to_json(const RecoveryReport& r);
Json to_json(const AlgebraSaturationReport& r);
Json to_json(const CmiReport& r);
Json to_json(const SaturationReport& r);
Json to_json(const AlgebraTable& t);
Json to_json(const SptVerdict& v);
Json to_json(const Tolerances& t);

}  // namespace spurtee

#endif  // SPURTEE_SERIALIZE_HPP
