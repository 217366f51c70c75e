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

#include "spurtee/models.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "spurtee/serialize.hpp"

namespace spurtee {

namespace {

SubsystemLayout qubit_legs() { return SubsystemLayout({Factor{"L", 2}, Factor{"R", 2}}); }

SubsystemLayout qubits(std::initializer_list<const char*> labels) {
  std::vector<Factor> f;
  for (const char* l : labels) f.push_back(Factor{l, 2});
  return SubsystemLayout(std::move(f));
}

std::vector<std::string> split(const std::string& s, char sep, std::size_t max_parts) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (out.size() + 1 < max_parts) {
    const auto pos = s.find(sep, start);
    if (pos == std::string::npos) break;
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  out.push_back(s.substr(start));
  return out;
}

std::uint64_t parse_seed(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("bad seed '" + s + "' in model spec");
  }
}

std::optional<StabilizerIsometry> try_tableau(const ChainModel& m) {
  try {
    return StabilizerIsometry::from_dense(m.V, m.B_labels, m.E_labels);
  } catch (const ValidationError&) {
    return std::nullopt;
  } catch (const ResourceCapError&) {
    return std::nullopt;
  }
}

}  // namespace

Isometry pauli_twirl_isometry(const Matrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw ValidationError("twirl unitary must be 2x2");
  Matrix v(16, 4);
  for (int i = 0; i < 4; ++i) {
    const Matrix k = 0.5 * kron(pauli_matrix(i), pauli_matrix(i) * u);
    for (int b = 0; b < 4; ++b) v.row(b * 4 + i) = k.row(b);
  }
  return Isometry::make(std::move(v), qubit_legs(), qubits({"b0", "b1", "e0", "e1"}));
}

Isometry product_trivial_isometry() {
  const Matrix id2 = Matrix::Identity(2, 2);
  const Matrix ops[3] = {id2 / std::sqrt(2.0), pauli_matrix(1) / 2.0, pauli_matrix(3) / 2.0};
  Matrix v(12, 4);
  for (int a = 0; a < 3; ++a) {
    const Matrix k = kron(ops[a], id2);
    for (int b = 0; b < 4; ++b) v.row(b * 3 + a) = k.row(b);
  }
  return Isometry::make(std::move(v), qubit_legs(),
                        SubsystemLayout({Factor{"b0", 2}, Factor{"b1", 2}, Factor{"e", 3}}));
}

Isometry identity_to_b_isometry() {
  Matrix v = Matrix::Zero(8, 4);
  for (int b = 0; b < 4; ++b) v(b * 2, b) = 1;
  return Isometry::make(std::move(v), qubit_legs(), qubits({"b0", "b1", "e0"}));
}

Isometry cluster_isometry() {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  Matrix cz = Matrix::Identity(4, 4);
  cz(3, 3) = -1;
  return Isometry::make(cz * kron(h, Matrix::Identity(2, 2)), qubit_legs(), qubits({"b", "e"}));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Model resolve_model(const std::string& spec, std::uint64_t default_seed, const ResourceCaps& caps) {
  const auto parts = split(spec, ':', 3);
  const std::string& kind = parts[0];
  Model m;
  m.spec = spec;

  auto twirl = [&](const Matrix& u, std::string description) {
    m.chain = ChainModel::make(pauli_twirl_isometry(u), {"b0", "b1"}, {"e0", "e1"}, caps);
    m.description = std::move(description);
    m.stabilizer = try_tableau(m.chain);
  };

  if (kind == "paulitwirl") {
    const std::string which = parts.size() > 1 ? parts[1] : "identity";
    if (which == "identity") {
      if (parts.size() > 2) throw ValidationError("paulitwirl:identity takes no argument");
      twirl(Matrix::Identity(2, 2), "Pauli twirl dilation with U = I");
    } else if (which == "haar") {
      const std::uint64_t seed = parts.size() > 2 ? parse_seed(parts[2]) : default_seed;
      twirl(haar_unitary(2, seed), "Pauli twirl dilation with Haar U, seed " + std::to_string(seed));
      m.spec = "paulitwirl:haar:" + std::to_string(seed);
    } else if (which == "matrix") {
      if (parts.size() < 3) throw ValidationError("paulitwirl:matrix needs a file path");
      const Matrix u = matrix_from_json(Json::parse(read_text_file(parts[2])));
      if (u.rows() != 2 || u.cols() != 2 ||
          (u.adjoint() * u - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() > 1e-10) {
        throw ValidationError("paulitwirl:matrix expects a 2x2 unitary");
      }
      twirl(u, "Pauli twirl dilation with U from " + parts[2]);
    } else {
      throw ValidationError("unknown paulitwirl variant '" + which + "' (identity, haar[:seed], matrix:<file>)");
    }
    return m;
  }
  if (parts.size() > 1 && (kind == "product_trivial" || kind == "identity_to_b" || kind == "cluster")) {
    throw ValidationError("model '" + kind + "' takes no argument");
  }
  if (kind == "product_trivial") {
    m.chain = ChainModel::make(product_trivial_isometry(), {"b0", "b1"}, {"e"}, caps);
    m.description = "E' (x) id with Kraus weights {1/2, 1/4, 1/4} on {I, X, Z}";
    return m;
  }
  if (kind == "identity_to_b") {
    m.chain = ChainModel::make(identity_to_b_isometry(), {"b0", "b1"}, {"e0"}, caps);
    m.description = "inputs copied to B, E in |0>";
    m.stabilizer = try_tableau(m.chain);
    return m;
  }
  if (kind == "cluster") {
    m.chain = ChainModel::make(cluster_isometry(), {"b"}, {"e"}, caps);
    m.description = "CZ (H (x) I) cluster-type site tensor";
    m.stabilizer = try_tableau(m.chain);
    return m;
  }
  if (kind == "stabilizer") {
    if (parts.size() < 2) throw ValidationError("stabilizer model needs a tableau file");
    const std::string path = spec.substr(kind.size() + 1);
    StabilizerIsometry s = StabilizerIsometry::parse(read_text_file(path));
    m.chain = ChainModel::make(s.isometry(), s.b_labels(), s.e_labels(), caps);
    m.stabilizer = std::move(s);
    m.description = "Clifford isometry from " + path;
    return m;
  }
  if (kind == "custom") {
    if (parts.size() < 2) throw ValidationError("custom model needs a channel JSON file");
    const std::string path = spec.substr(kind.size() + 1);
    Json j;
    try {
      j = Json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
      throw ValidationError("cannot parse '" + path + "': " + e.what());
    }
    m.chain = chain_model_from_json(j, caps);
    m.description = "custom channel from " + path;
    m.stabilizer = try_tableau(m.chain);
    return m;
  }
  throw ValidationError("unknown model '" + kind +
                        "' (paulitwirl, product_trivial, identity_to_b, cluster, stabilizer, custom)");
}

}  // namespace spurtee
