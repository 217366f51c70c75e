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

#include "spurtee/stabilizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace spurtee {

namespace {

PauliOperator embed(const PauliOperator& p, std::size_t total, std::size_t offset) {
  PauliOperator out(total);
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    out.x[offset + q] = p.x[q];
    out.z[offset + q] = p.z[q];
  }
  out.phase = p.phase;
  return out;
}

// Hermitian Pauli with the given symplectic vector and sign (+1 or -1).
PauliOperator signed_pauli(const BitVec& xz, bool negative) {
  PauliOperator p = PauliOperator::from_symplectic(xz);
  if (negative) p.phase = (p.phase + 2) % 4;
  return p;
}

// Hermitian Pauli on n qubits from an index in [0, 4^n): two bits per qubit.
PauliOperator pauli_from_index(std::size_t index, std::size_t n) {
  PauliOperator p(n);
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t code = (index >> (2 * (n - 1 - q))) & 3;
    p.x[q] = (code == 1 || code == 2);
    p.z[q] = (code == 2 || code == 3);
  }
  std::size_t ny = 0;
  for (std::size_t q = 0; q < n; ++q) ny += p.x[q] & p.z[q];
  p.phase = static_cast<int>(ny % 4);
  return p;
}

// Dense expansion coefficients Tr(P M) / 2^n above `cut` in magnitude.
std::vector<std::pair<PauliOperator, Complex>> pauli_terms(const Matrix& m, std::size_t n, double cut) {
  std::vector<std::pair<PauliOperator, Complex>> out;
  const std::size_t count = std::size_t{1} << (2 * n);
  const double norm = static_cast<double>(std::size_t{1} << n);
  for (std::size_t i = 0; i < count; ++i) {
    PauliOperator p = pauli_from_index(i, n);
    const Complex c = pauli_trace(p, m) / norm;
    if (std::abs(c) > cut) out.emplace_back(std::move(p), c);
  }
  return out;
}

std::string at(std::size_t line, std::size_t col) {
  return "line " + std::to_string(line) + ", column " + std::to_string(col) + ": ";
}

// Symplectic complement projection: makes v orthogonal to every chosen pair.
BitVec symplectic_reduce(BitVec v, const std::vector<std::pair<BitVec, BitVec>>& pairs) {
  for (const auto& [a, b] : pairs) {
    const int with_b = symplectic_product(v, b);
    const int with_a = symplectic_product(v, a);
    if (with_b) v = gf2_add(v, a);
    if (with_a) v = gf2_add(v, b);
  }
  return v;
}

bool nonzero(const BitVec& v) {
  return std::any_of(v.begin(), v.end(), [](std::uint8_t b) { return b != 0; });
}

}  // namespace

LabelSet StabilizerIsometry::b_labels() const {
  LabelSet out;
  for (const auto& q : outputs) {
    if (q.side == Side::B) out.push_back(q.label);
  }
  return out;
}

LabelSet StabilizerIsometry::e_labels() const {
  LabelSet out;
  for (const auto& q : outputs) {
    if (q.side == Side::E) out.push_back(q.label);
  }
  return out;
}

void StabilizerIsometry::validate() const {
  const std::size_t n = num_out();
  if (K == 0) throw ValidationError("stabilizer isometry needs K >= 1");
  if (n < 2 * K) throw ValidationError("fewer output qubits than the 2K inputs");
  if (stabilizers.size() != n - 2 * K) {
    throw ValidationError("expected " + std::to_string(n - 2 * K) + " stabilizer generators, got " +
                          std::to_string(stabilizers.size()));
  }
  if (x_images.size() != 2 * K || z_images.size() != 2 * K) {
    throw ValidationError("need X and Z images for all 2K inputs");
  }
  std::vector<BitVec> rows;
  auto check_op = [&](const PauliOperator& p, const std::string& what) {
    if (p.num_qubits() != n) throw ValidationError(what + " has the wrong length");
    if (!p.is_hermitian()) throw ValidationError(what + " is not Hermitian");
    rows.push_back(p.symplectic());
  };
  for (std::size_t i = 0; i < stabilizers.size(); ++i) check_op(stabilizers[i], "stabilizer " + std::to_string(i));
  for (std::size_t i = 0; i < 2 * K; ++i) {
    check_op(x_images[i], "X" + std::to_string(i));
    check_op(z_images[i], "Z" + std::to_string(i));
  }
  if (gf2_rank(rows, 2 * n) != n + 2 * K) throw ValidationError("tableau rows are not independent");
  for (const auto& s : stabilizers) {
    for (const auto& t : stabilizers) {
      if (!s.commutes_with(t)) throw ValidationError("stabilizers do not commute");
    }
    for (std::size_t i = 0; i < 2 * K; ++i) {
      if (!s.commutes_with(x_images[i]) || !s.commutes_with(z_images[i])) {
        throw ValidationError("logical image does not commute with the stabilizers");
      }
    }
  }
  for (std::size_t i = 0; i < 2 * K; ++i) {
    for (std::size_t j = 0; j < 2 * K; ++j) {
      if (symplectic_product(x_images[i], x_images[j]) || symplectic_product(z_images[i], z_images[j]) ||
          symplectic_product(x_images[i], z_images[j]) != static_cast<int>(i == j)) {
        throw ValidationError("logical images do not reproduce the input commutation relations");
      }
    }
  }
}

Isometry StabilizerIsometry::isometry() const {
  validate();
  const std::size_t n = num_out();
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Matrix proj = Matrix::Identity(dim, dim);
  const Matrix id = Matrix::Identity(dim, dim);
  for (const auto& s : stabilizers) proj = proj * (id + s.matrix()) * 0.5;
  for (const auto& z : z_images) proj = proj * (id + z.matrix()) * 0.5;
  Eigen::Index best = 0;
  proj.colwise().norm().maxCoeff(&best);
  Vector v0 = proj.col(best);
  v0.normalize();

  const std::size_t m = 2 * K;
  const auto in = static_cast<Eigen::Index>(std::size_t{1} << m);
  Matrix v(dim, in);
  std::vector<Matrix> xs;
  for (const auto& x : x_images) xs.push_back(x.matrix());
  for (Eigen::Index col = 0; col < in; ++col) {
    Vector c = v0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((static_cast<std::size_t>(col) >> (m - 1 - i)) & 1) c = xs[i] * c;
    }
    v.col(col) = c;
  }
  std::vector<Factor> outs;
  for (const auto& q : outputs) outs.push_back(Factor{q.label, 2});
  const std::size_t d = std::size_t{1} << K;
  return Isometry::make(std::move(v), SubsystemLayout({Factor{"L", d}, Factor{"R", d}}),
                        SubsystemLayout(std::move(outs)));
}

StabilizerIsometry StabilizerIsometry::from_dense(const Isometry& v, const LabelSet& b_labels,
                                                  const LabelSet& e_labels, double tol) {
  boundary_channels(v, b_labels, e_labels);
  const std::size_t n = v.out_layout.size();
  for (const auto& f : v.out_layout.factors()) {
    if (f.dim != 2) throw ValidationError("output factor '" + f.label + "' is not a qubit");
  }
  std::size_t m = 0;
  while ((std::size_t{1} << m) < v.in_dim()) ++m;
  if ((std::size_t{1} << m) != v.in_dim() || m % 2 != 0 || m == 0) {
    throw ValidationError("input dimension must be 4^K");
  }
  if (n > 10) throw ResourceCapError("dense Clifford recognition limited to 10 output qubits");

  StabilizerIsometry out;
  out.K = m / 2;
  for (const auto& f : v.out_layout.factors()) {
    const bool is_b = std::find(b_labels.begin(), b_labels.end(), f.label) != b_labels.end();
    out.outputs.push_back(OutQubit{f.label, is_b ? Side::B : Side::E});
  }

  const std::size_t anc = n - m;
  const double weight = 1.0 / static_cast<double>(std::size_t{1} << anc);
  const Matrix proj = v.matrix * v.matrix.adjoint();
  const auto terms = pauli_terms(proj, n, 0.5 * weight);
  if (terms.size() != (std::size_t{1} << anc)) {
    throw ValidationError("isometry is not Clifford: image projector is not a stabilizer projector");
  }
  std::vector<BitVec> rows;
  for (const auto& [p, c] : terms) {
    if (std::abs(std::abs(c) - weight) > tol || std::abs(c.imag()) > tol) {
      throw ValidationError("isometry is not Clifford: irregular projector coefficients");
    }
    if (p.is_identity()) continue;
    BitVec sv = p.symplectic();
    std::vector<BitVec> trial = rows;
    trial.push_back(sv);
    if (gf2_rank(trial, 2 * n) > rows.size()) {
      rows.push_back(sv);
      out.stabilizers.push_back(signed_pauli(sv, c.real() < 0));
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (char letter : {'X', 'Z'}) {
      const Matrix in_op = PauliOperator::single(m, i, letter).matrix();
      const Matrix img = v.matrix * in_op * v.matrix.adjoint();
      const auto t = pauli_terms(img, n, 0.5 * weight);
      if (t.empty()) throw ValidationError("isometry is not Clifford: input Pauli has no Pauli image");
      const Complex c = t.front().second / weight;
      if (std::abs(std::abs(c) - 1.0) > tol || std::abs(c.imag()) > tol) {
        throw ValidationError("isometry is not Clifford: input Pauli image is not a signed Pauli");
      }
      PauliOperator image = signed_pauli(t.front().first.symplectic(), c.real() < 0);
      if ((image.matrix() * proj - img).cwiseAbs().maxCoeff() > tol) {
        throw ValidationError("isometry is not Clifford: conjugated Pauli is not a Pauli");
      }
      (letter == 'X' ? out.x_images : out.z_images).push_back(std::move(image));
    }
  }
  out.validate();
  return out;
}

StabilizerIsometry StabilizerIsometry::random(std::size_t K, std::size_t nb, std::size_t ne,
                                              std::uint64_t seed) {
  const std::size_t n = nb + ne;
  if (K == 0 || n < 2 * K) throw ValidationError("random Clifford isometry needs nb + ne >= 2K >= 2");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  auto draw = [&]() {
    BitVec v(2 * n);
    for (auto& b : v) b = coin(rng);
    return v;
  };
  std::vector<std::pair<BitVec, BitVec>> pairs;
  while (pairs.size() < n) {
    BitVec a = symplectic_reduce(draw(), pairs);
    if (!nonzero(a)) continue;
    BitVec b;
    do {
      b = symplectic_reduce(draw(), pairs);
    } while (symplectic_product(a, b) != 1);
    pairs.emplace_back(std::move(a), std::move(b));
  }

  StabilizerIsometry out;
  out.K = K;
  for (std::size_t i = 0; i < nb; ++i) out.outputs.push_back(OutQubit{"b" + std::to_string(i), Side::B});
  for (std::size_t i = 0; i < ne; ++i) out.outputs.push_back(OutQubit{"e" + std::to_string(i), Side::E});
  for (std::size_t j = 0; j < n; ++j) {
    const auto& [a, b] = pairs[j];
    if (j < 2 * K) {
      out.x_images.push_back(signed_pauli(a, coin(rng)));
      out.z_images.push_back(signed_pauli(b, coin(rng)));
    } else {
      out.stabilizers.push_back(signed_pauli(b, coin(rng)));
    }
  }
  out.validate();
  return out;
}

StabilizerIsometry StabilizerIsometry::parse(const std::string& text) {
  StabilizerIsometry out;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  bool have_k = false, have_out = false;
  std::vector<std::optional<PauliOperator>> xs, zs;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = raw.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    const std::size_t key_col = line.find(key) + 1;

    if (key == "K") {
      long long k = 0;
      if (!(ls >> k) || k <= 0) throw ValidationError(at(line_no, key_col + 2) + "expected a positive K");
      out.K = static_cast<std::size_t>(k);
      xs.assign(2 * out.K, std::nullopt);
      zs.assign(2 * out.K, std::nullopt);
      have_k = true;
      continue;
    }
    if (key == "out") {
      std::string tok;
      while (ls >> tok) {
        const std::size_t col = line.find(tok, key_col) + 1;
        const auto colon = tok.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 2 != tok.size() ||
            (tok.back() != 'B' && tok.back() != 'E')) {
          throw ValidationError(at(line_no, col) + "expected label:B or label:E, got '" + tok + "'");
        }
        out.outputs.push_back(OutQubit{tok.substr(0, colon), tok.back() == 'B' ? Side::B : Side::E});
      }
      have_out = true;
      continue;
    }
    if (!have_k || !have_out) {
      throw ValidationError(at(line_no, key_col) + "'K' and 'out' must precede Pauli rows");
    }
    std::string pauli_text;
    if (!(ls >> pauli_text)) throw ValidationError(at(line_no, key_col + key.size()) + "missing Pauli string");
    const std::size_t pcol = line.find(pauli_text, key_col + key.size() - 1) + 1;
    PauliOperator p;
    try {
      p = PauliOperator::parse(pauli_text);
    } catch (const ValidationError& e) {
      throw ValidationError(at(line_no, pcol) + e.what());
    }
    if (p.num_qubits() != out.outputs.size()) {
      throw ValidationError(at(line_no, pcol) + "Pauli string has " + std::to_string(p.num_qubits()) +
                            " letters but there are " + std::to_string(out.outputs.size()) + " outputs");
    }
    if (key == "S") {
      out.stabilizers.push_back(std::move(p));
    } else if ((key[0] == 'X' || key[0] == 'Z') && key.size() > 1 &&
               std::all_of(key.begin() + 1, key.end(), ::isdigit)) {
      const std::size_t i = std::stoul(key.substr(1));
      if (i >= 2 * out.K) throw ValidationError(at(line_no, key_col) + "input index out of range");
      auto& slot = key[0] == 'X' ? xs[i] : zs[i];
      if (slot) throw ValidationError(at(line_no, key_col) + "duplicate row " + key);
      slot = std::move(p);
    } else {
      throw ValidationError(at(line_no, key_col) + "unknown record '" + key + "'");
    }
  }
  if (!have_k || !have_out) throw ValidationError("tableau is missing its 'K' or 'out' line");
  for (std::size_t i = 0; i < 2 * out.K; ++i) {
    if (!xs[i] || !zs[i]) throw ValidationError("tableau is missing the image of input " + std::to_string(i));
    out.x_images.push_back(*xs[i]);
    out.z_images.push_back(*zs[i]);
  }
  out.validate();
  return out;
}

std::string StabilizerIsometry::serialize() const {
  std::ostringstream ss;
  ss << "K " << K << "\nout";
  for (const auto& q : outputs) ss << ' ' << q.label << ':' << (q.side == Side::B ? 'B' : 'E');
  ss << '\n';
  for (const auto& s : stabilizers) ss << "S " << s.str() << '\n';
  for (std::size_t i = 0; i < x_images.size(); ++i) {
    ss << 'X' << i << ' ' << x_images[i].str() << '\n';
    ss << 'Z' << i << ' ' << z_images[i].str() << '\n';
  }
  return ss.str();
}

std::vector<std::size_t> StabilizerCode::indices(const LabelSet& names) const {
  std::vector<std::size_t> out;
  for (const auto& nm : names) {
    auto it = std::find(labels.begin(), labels.end(), nm);
    if (it == labels.end()) throw ValidationError("unknown qubit label '" + nm + "'");
    out.push_back(static_cast<std::size_t>(it - labels.begin()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

StabilizerCode chain_code(const StabilizerIsometry& v, std::size_t n) {
  if (n == 0) throw ValidationError("chain code needs n >= 1");
  const std::size_t site = v.num_out();
  const std::size_t K = v.K;
  const std::size_t total = n * site + K;
  StabilizerCode code;
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& q : v.outputs) code.labels.push_back(q.label + "_" + std::to_string(k));
  }
  for (std::size_t j = 0; j < K; ++j) code.labels.push_back("C" + std::to_string(j));

  auto at_site = [&](const PauliOperator& p, std::size_t k) { return embed(p, total, (k - 1) * site); };
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& s : v.stabilizers) code.stabilizers.push_back(at_site(s, k));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = 0; j < K; ++j) {
      PauliOperator xr = at_site(v.x_images[K + j], k);
      PauliOperator zr = at_site(v.z_images[K + j], k);
      if (k < n) {
        code.stabilizers.push_back(xr * at_site(v.x_images[j], k + 1));
        code.stabilizers.push_back(zr * at_site(v.z_images[j], k + 1));
      } else {
        code.stabilizers.push_back(xr * PauliOperator::single(total, n * site + j, 'X'));
        code.stabilizers.push_back(zr * PauliOperator::single(total, n * site + j, 'Z'));
      }
    }
  }
  for (std::size_t j = 0; j < K; ++j) {
    code.logical_x.push_back(at_site(v.x_images[j], 1));
    code.logical_z.push_back(at_site(v.z_images[j], 1));
  }
  return code;
}

LogicalGroup logical_pauli_enumeration(const StabilizerCode& code, const LabelSet& support) {
  const auto idx = code.indices(support);
  const std::size_t t = idx.size();
  const std::size_t total = code.labels.size();
  const std::size_t k = code.num_logical();

  // Unknowns: x bits then z bits on the support qubits.
  std::vector<BitVec> constraints;
  for (const auto& s : code.stabilizers) {
    BitVec row(2 * t, 0);
    for (std::size_t i = 0; i < t; ++i) {
      row[i] = s.z[idx[i]];
      row[t + i] = s.x[idx[i]];
    }
    constraints.push_back(std::move(row));
  }
  const auto null = gf2_null_space(constraints, 2 * t);

  std::vector<PauliOperator> physical;
  std::vector<BitVec> images;
  for (const auto& v : null) {
    PauliOperator p(total);
    for (std::size_t i = 0; i < t; ++i) {
      p.x[idx[i]] = v[i];
      p.z[idx[i]] = v[t + i];
    }
    p = signed_pauli(p.symplectic(), false);
    BitVec l(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      l[i] = static_cast<std::uint8_t>(symplectic_product(p, code.logical_z[i]));
      l[k + i] = static_cast<std::uint8_t>(symplectic_product(p, code.logical_x[i]));
    }
    physical.push_back(std::move(p));
    images.push_back(std::move(l));
  }

  const auto ech = gf2_reduce(images, 2 * k);
  LogicalGroup out;
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    out.logicals.push_back(ech.rows[r]);
    PauliOperator rep(total);
    for (std::size_t j = 0; j < physical.size(); ++j) {
      if (ech.combination[r][j]) rep = rep * physical[j];
    }
    out.representatives.push_back(signed_pauli(rep.symplectic(), false));
  }
  return out;
}

LabelSet chain_support(const StabilizerIsometry& v, const std::string& tokens) {
  LabelSet out;
  for (char c : tokens) {
    if (c == 'B' || c == 'E') {
      for (const auto& q : v.outputs) {
        if ((q.side == Side::B) == (c == 'B')) out.push_back(q.label + "_1");
      }
    } else if (c == 'C') {
      for (std::size_t j = 0; j < v.K; ++j) out.push_back("C" + std::to_string(j));
    } else {
      throw ValidationError(std::string("support token must be made of B, E, C; got '") + c + "'");
    }
  }
  return out;
}

AlgebraTable algebra_table(const std::vector<BitVec>& span, std::size_t K) {
  const std::size_t g = gf2_rank(span, 2 * K);
  std::vector<BitVec> gram;
  for (const auto& a : span) {
    BitVec row;
    for (const auto& b : span) row.push_back(static_cast<std::uint8_t>(symplectic_product(a, b)));
    gram.push_back(std::move(row));
  }
  const std::size_t form_rank = gram.empty() ? 0 : gf2_rank(gram, span.size());
  AlgebraTable t;
  t.K = K;
  t.l = g - form_rank;
  t.m = t.l + form_rank / 2;
  for (std::size_t i = 0; i < K; ++i) {
    t.columns.push_back(i < t.l ? "Z-only" : (i < t.m ? "Z-and-X" : "neither"));
  }
  return t;
}

AlgebraTable commutant_table(const AlgebraTable& table) {
  AlgebraTable t = table;
  for (std::size_t i = 0; i < t.K; ++i) {
    t.columns[i] = i < t.l ? "Z-only" : (i < t.m ? "neither" : "Z-and-X");
  }
  return t;
}

OperatorAlgebra pauli_algebra(const std::vector<BitVec>& span, std::size_t K) {
  const std::size_t d = std::size_t{1} << K;
  std::vector<Matrix> gens;
  for (const auto& v : span) gens.push_back(PauliOperator::from_symplectic(v).matrix());
  return algebra_closure(gens, d);
}

SptVerdict spt_detect(const StabilizerIsometry& v) {
  v.validate();
  const StabilizerCode code = chain_code(v, 1);
  SptVerdict out;
  out.K = v.K;
  out.L_A = logical_pauli_enumeration(code, chain_support(v, "BC"));
  out.L_B = logical_pauli_enumeration(code, chain_support(v, "EC"));
  out.g_BC = out.L_A.dim();
  out.g_E = logical_pauli_enumeration(code, chain_support(v, "E")).dim();
  out.g_A = out.L_A.dim();
  out.g_B = out.L_B.dim();
  out.cmi_bits = static_cast<int>(out.g_A + out.g_B) - static_cast<int>(2 * v.K);
  out.A_table = algebra_table(out.L_A.logicals, v.K);
  out.B_table = algebra_table(out.L_B.logicals, v.K);
  for (const auto& p : out.L_A.logicals) {
    for (const auto& q : out.L_B.logicals) {
      if (symplectic_product(p, q) == 1) {
        out.nontrivial = true;
        out.witness = std::make_pair(PauliOperator::from_symplectic(p), PauliOperator::from_symplectic(q));
        return out;
      }
    }
  }
  return out;
}

double stabilizer_entropy(const StabilizerIsometry& v, std::size_t l, const LabelSet& region) {
  if (l < 2) throw ValidationError("ring length must be >= 2");
  v.validate();
  const std::size_t site = v.num_out();
  const std::size_t total = l * site;
  const std::size_t K = v.K;
  LabelSet labels;
  for (std::size_t k = 1; k <= l; ++k) {
    for (const auto& q : v.outputs) labels.push_back(q.label + "_" + std::to_string(k));
  }
  StabilizerCode ring{labels, {}, {}, {}};
  auto at_site = [&](const PauliOperator& p, std::size_t k) { return embed(p, total, (k - 1) * site); };
  for (std::size_t k = 1; k <= l; ++k) {
    const std::size_t next = k % l + 1;
    for (const auto& s : v.stabilizers) ring.stabilizers.push_back(at_site(s, k));
    for (std::size_t j = 0; j < K; ++j) {
      ring.stabilizers.push_back(at_site(v.x_images[K + j], k) * at_site(v.x_images[j], next));
      ring.stabilizers.push_back(at_site(v.z_images[K + j], k) * at_site(v.z_images[j], next));
    }
  }
  const auto in_region = ring.indices(region);
  std::vector<bool> inside(total, false);
  for (auto i : in_region) inside[i] = true;
  std::vector<BitVec> full, outside;
  for (const auto& s : ring.stabilizers) {
    full.push_back(s.symplectic());
    BitVec r;
    for (std::size_t q = 0; q < total; ++q) {
      if (!inside[q]) {
        r.push_back(s.x[q]);
        r.push_back(s.z[q]);
      }
    }
    outside.push_back(std::move(r));
  }
  const std::size_t rank_full = gf2_rank(full, 2 * total);
  if (rank_full != total) throw NumericalError("ring stabilizer group is not maximal");
  const std::size_t rank_out = outside.front().empty() ? 0 : gf2_rank(outside, outside.front().size());
  return static_cast<double>(in_region.size()) - static_cast<double>(total) + static_cast<double>(rank_out);
}

}  // namespace spurtee
