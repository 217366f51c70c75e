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

#include "spurtee/serialize.hpp"

#include <algorithm>

namespace spurtee {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ValidationError("matrix must be a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ValidationError("matrix row " + std::to_string(r) + " has the wrong length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& e = row[c];
      if (e.is_number()) {
        m(r, c) = Complex(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
      } else {
        throw ValidationError("matrix entry (" + std::to_string(r) + ", " + std::to_string(c) +
                              ") must be a number or [re, im]");
      }
    }
  }
  return m;
}

Json layout_to_json(const SubsystemLayout& layout) {
  Json out = Json::array();
  for (const auto& f : layout.factors()) out.push_back({{"label", f.label}, {"dim", f.dim}});
  return out;
}

SubsystemLayout layout_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("layout must be an array of {label, dim}");
  std::vector<Factor> f;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("label") || !e.contains("dim") || !e["dim"].is_number_unsigned()) {
      throw ValidationError("layout entries need a string label and a positive dim");
    }
    f.push_back(Factor{e["label"].get<std::string>(), e["dim"].get<std::size_t>()});
  }
  return SubsystemLayout(std::move(f));
}

ChainModel chain_model_from_json(const Json& j, const ResourceCaps& caps) {
  if (!j.is_object()) throw ValidationError("channel spec must be a JSON object");
  for (const char* key : {"kind", "in", "out", "ops"}) {
    if (!j.contains(key)) throw ValidationError(std::string("channel spec is missing '") + key + "'");
  }
  const std::string kind = j["kind"].get<std::string>();
  std::vector<Factor> in_factors;
  const char* leg[] = {"L", "R"};
  if (!j["in"].is_array() || j["in"].size() != 2) {
    throw ValidationError("'in' must list the two input leg dimensions");
  }
  for (std::size_t i = 0; i < 2; ++i) in_factors.push_back(Factor{leg[i], j["in"][i].get<std::size_t>()});
  SubsystemLayout in(std::move(in_factors));
  SubsystemLayout out = layout_from_json(j["out"]);
  std::vector<Matrix> ops;
  for (const auto& op : j["ops"]) ops.push_back(matrix_from_json(op));

  if (kind == "isometry") {
    if (ops.size() != 1) throw ValidationError("an isometry spec carries exactly one matrix");
    LabelSet b, e;
    if (j.contains("B") || j.contains("E")) {
      if (j.contains("B")) b = j["B"].get<LabelSet>();
      if (j.contains("E")) e = j["E"].get<LabelSet>();
    } else {
      for (const auto& f : out.factors()) (f.label.rfind("b", 0) == 0 ? b : e).push_back(f.label);
    }
    return ChainModel::make(Isometry::make(std::move(ops[0]), in, out), b, e, caps);
  }
  if (kind == "kraus") {
    const KrausChannel ch = KrausChannel::make(std::move(ops), in, out);
    const Isometry v = stinespring(ch, "env");
    return ChainModel::make(v, out.labels(), {"env"}, caps);
  }
  throw ValidationError("channel kind must be 'kraus' or 'isometry'");
}

Json isometry_to_json(const Isometry& v, const LabelSet& b_labels, const LabelSet& e_labels) {
  Json in = Json::array();
  for (const auto& f : v.in_layout.factors()) in.push_back(f.dim);
  return Json{{"kind", "isometry"},
              {"in", in},
              {"out", layout_to_json(v.out_layout)},
              {"B", b_labels},
              {"E", e_labels},
              {"ops", Json::array({matrix_to_json(v.matrix)})}};
}

Json blocks_to_json(const std::vector<Block>& blocks) {
  Json out = Json::array();
  for (const auto& b : canonical_blocks(blocks)) out.push_back({b.n, b.mult});
  return out;
}

Json algebra_report(const OperatorAlgebra& alg, std::uint64_t seed) {
  const auto bd = block_decomposition(alg, seed);
  return Json{{"blocks", blocks_to_json(bd.blocks)},
              {"dim", alg.dim()},
              {"center_dim", center(alg).dim()},
              {"off_pattern", bd.off_pattern}};
}

Json to_json(const RecoveryReport& r) {
  return Json{{"pass", r.pass},
              {"max_residual", std::max({r.complementary_in_commutant, r.commutant_in_complementary,
                                         r.state_form, r.observable_form})},
              {"witnesses",
               {{"complementary_in_commutant", r.complementary_in_commutant},
                {"commutant_in_complementary", r.commutant_in_complementary},
                {"state_form", r.state_form},
                {"observable_form", r.observable_form}}},
              {"algebra_dim", r.algebra.dim()},
              {"complementary_algebra_dim", r.complementary_algebra.dim()}};
}

Json to_json(const AlgebraSaturationReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"family", e.name},
                       {"n", e.n},
                       {"dim_1", e.dim_one},
                       {"dim_n", e.dim_n},
                       {"residual", e.residual},
                       {"equal", e.equal}});
  }
  return Json{{"pass", r.pass}, {"entries", entries}};
}

Json to_json(const CmiReport& r) {
  return Json{{"value", r.value}, {"S_AB", r.S_AB}, {"S_BC", r.S_BC},
              {"S_B", r.S_B},     {"S_ABC", r.S_ABC}, {"method", r.method}};
}

Json to_json(const SaturationReport& r) {
  return Json{{"cmi_n1", r.cmi_one},
              {"cmi_n2", r.cmi_two},
              {"residual_cmi", r.diff_cmi},
              {"residual_A_BC", r.diff_abc},
              {"residual_A_B", r.diff_ab},
              {"residual_A_EC", r.diff_aec},
              {"cmi_saturated", r.cmi_saturated},
              {"A_BC_saturated", r.abc_saturated},
              {"A_B_saturated", r.ab_saturated},
              {"A_EC_saturated", r.aec_saturated},
              {"equivalences_hold", r.consistent}};
}

Json to_json(const AlgebraTable& t) {
  return Json{{"K", t.K}, {"l", t.l}, {"m", t.m}, {"columns", t.columns}};
}

Json to_json(const SptVerdict& v) {
  Json witness = nullptr;
  if (v.witness) witness = Json::array({v.witness->first.str(), v.witness->second.str()});
  Json la = Json::array(), lb = Json::array();
  for (const auto& b : v.L_A.logicals) la.push_back(PauliOperator::from_symplectic(b).str());
  for (const auto& b : v.L_B.logicals) lb.push_back(PauliOperator::from_symplectic(b).str());
  return Json{{"nontrivial", v.nontrivial},
              {"witness_paulis", witness},
              {"g_BC", v.g_BC},
              {"g_E", v.g_E},
              {"K", v.K},
              {"L_A", la},
              {"L_B", lb},
              {"cmi_bits", v.cmi_bits},
              {"A_table", to_json(v.A_table)},
              {"A_commutant_table", to_json(commutant_table(v.A_table))},
              {"B_table", to_json(v.B_table)}};
}

Json to_json(const Tolerances& t) {
  return Json{{"rank", t.rank},     {"span", t.span}, {"conditional", t.conditional},
              {"saturation", t.saturation}, {"cmi", t.cmi},   {"logical", t.logical}};
}

}  // namespace spurtee
