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

#include "spurtee/pauli.hpp"

namespace spurtee {

namespace {

int mod4(int v) { return ((v % 4) + 4) % 4; }

std::size_t count_y(const PauliOperator& p) {
  std::size_t n = 0;
  for (std::size_t q = 0; q < p.num_qubits(); ++q) n += p.x[q] & p.z[q];
  return n;
}

const Complex kIPow[4] = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};

}  // namespace

PauliOperator PauliOperator::parse(std::string_view text) {
  std::size_t pos = 0;
  int sign = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '-' ? 2 : 0;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    sign += 1;
    ++pos;
  }
  PauliOperator p(text.size() - pos);
  for (std::size_t q = 0; pos < text.size(); ++pos, ++q) {
    switch (text[pos]) {
      case 'I': case '_': break;
      case 'X': p.x[q] = 1; break;
      case 'Z': p.z[q] = 1; break;
      case 'Y': p.x[q] = 1; p.z[q] = 1; break;
      default:
        throw ValidationError("bad Pauli character '" + std::string(1, text[pos]) + "' at column " +
                              std::to_string(pos + 1));
    }
  }
  p.phase = mod4(sign + static_cast<int>(count_y(p)));
  return p;
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, char letter) {
  PauliOperator p(n);
  if (letter == 'X' || letter == 'Y') p.x[qubit] = 1;
  if (letter == 'Z' || letter == 'Y') p.z[qubit] = 1;
  if (letter == 'Y') p.phase = 1;
  return p;
}

PauliOperator PauliOperator::from_symplectic(const BitVec& xz) {
  const std::size_t n = xz.size() / 2;
  PauliOperator p(n);
  for (std::size_t q = 0; q < n; ++q) {
    p.x[q] = xz[q];
    p.z[q] = xz[n + q];
  }
  p.phase = mod4(static_cast<int>(count_y(p)));
  return p;
}

bool PauliOperator::is_hermitian() const {
  return (phase - static_cast<int>(count_y(*this))) % 2 == 0;
}

bool PauliOperator::is_identity() const { return weight() == 0; }

std::size_t PauliOperator::weight() const {
  std::size_t w = 0;
  for (std::size_t q = 0; q < num_qubits(); ++q) w += (x[q] | z[q]);
  return w;
}

bool PauliOperator::commutes_with(const PauliOperator& other) const {
  return symplectic_product(*this, other) == 0;
}

BitVec PauliOperator::symplectic() const {
  BitVec out(x);
  out.insert(out.end(), z.begin(), z.end());
  return out;
}

PauliOperator PauliOperator::restricted(const std::vector<std::size_t>& qubits) const {
  PauliOperator p(qubits.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    p.x[i] = x[qubits[i]];
    p.z[i] = z[qubits[i]];
  }
  const int letter_sign = phase - static_cast<int>(count_y(*this));
  p.phase = mod4(letter_sign + static_cast<int>(count_y(p)));
  return p;
}

std::string PauliOperator::str() const {
  const int s = mod4(phase - static_cast<int>(count_y(*this)));
  static const char* kSigns[4] = {"+", "+i", "-", "-i"};
  std::string out = kSigns[s];
  for (std::size_t q = 0; q < num_qubits(); ++q) {
    out += x[q] ? (z[q] ? 'Y' : 'X') : (z[q] ? 'Z' : 'I');
  }
  return out;
}

Matrix PauliOperator::matrix() const {
  Matrix m = Matrix::Identity(1, 1) * kIPow[mod4(phase)];
  for (std::size_t q = 0; q < num_qubits(); ++q) {
    Matrix f = Matrix::Identity(2, 2);
    if (x[q]) f = pauli_matrix(1) * f;
    if (z[q]) f = f * pauli_matrix(3);
    m = kron(m, f);
  }
  return m;
}

PauliOperator PauliOperator::operator*(const PauliOperator& other) const {
  if (num_qubits() != other.num_qubits()) throw ValidationError("Pauli sizes differ");
  PauliOperator p(num_qubits());
  int extra = 0;
  for (std::size_t q = 0; q < num_qubits(); ++q) {
    extra += z[q] & other.x[q];
    p.x[q] = x[q] ^ other.x[q];
    p.z[q] = z[q] ^ other.z[q];
  }
  p.phase = mod4(phase + other.phase + 2 * extra);
  return p;
}

int symplectic_product(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits()) throw ValidationError("Pauli sizes differ");
  int s = 0;
  for (std::size_t q = 0; q < a.num_qubits(); ++q) s ^= (a.x[q] & b.z[q]) ^ (a.z[q] & b.x[q]);
  return s;
}

int symplectic_product(const BitVec& a, const BitVec& b) {
  const std::size_t n = a.size() / 2;
  int s = 0;
  for (std::size_t q = 0; q < n; ++q) s ^= (a[q] & b[n + q]) ^ (a[n + q] & b[q]);
  return s;
}

Complex pauli_trace(const PauliOperator& p, const Matrix& m) {
  const std::size_t n = p.num_qubits();
  const std::size_t dim = std::size_t{1} << n;
  std::size_t xmask = 0, zmask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    if (p.x[q]) xmask |= bit;
    if (p.z[q]) zmask |= bit;
  }
  Complex acc = 0;
  for (std::size_t s = 0; s < dim; ++s) {
    // P |s> = i^p (-1)^{z.s} |s ^ x>, so <s^x| P |s> contributes M(s, s^x).
    const double sign = (__builtin_popcountll(zmask & s) & 1) ? -1.0 : 1.0;
    acc += sign * m(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s ^ xmask));
  }
  return acc * kIPow[((p.phase % 4) + 4) % 4];
}

BitVec gf2_add(const BitVec& a, const BitVec& b) {
  BitVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

Gf2Echelon gf2_reduce(const std::vector<BitVec>& rows, std::size_t ncols) {
  std::vector<BitVec> work = rows;
  std::vector<BitVec> comb(rows.size(), BitVec(rows.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) comb[i][i] = 1;

  Gf2Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < work.size(); ++c) {
    std::size_t piv = r;
    while (piv < work.size() && !work[piv][c]) ++piv;
    if (piv == work.size()) continue;
    std::swap(work[r], work[piv]);
    std::swap(comb[r], comb[piv]);
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (i != r && work[i][c]) {
        work[i] = gf2_add(work[i], work[r]);
        comb[i] = gf2_add(comb[i], comb[r]);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  work.resize(r);
  comb.resize(r);
  out.rows = std::move(work);
  out.combination = std::move(comb);
  return out;
}

std::size_t gf2_rank(const std::vector<BitVec>& rows, std::size_t ncols) {
  return gf2_reduce(rows, ncols).rows.size();
}

std::vector<BitVec> gf2_null_space(const std::vector<BitVec>& rows, std::size_t ncols) {
  const auto ech = gf2_reduce(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(ncols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < ech.rows.size(); ++i) {
      if (ech.rows[i][f]) v[ech.pivots[i]] = 1;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool gf2_in_span(const std::vector<BitVec>& rows, const BitVec& v) {
  if (rows.empty()) {
    for (auto b : v) {
      if (b) return false;
    }
    return true;
  }
  const std::size_t ncols = v.size();
  const std::size_t r0 = gf2_rank(rows, ncols);
  std::vector<BitVec> more = rows;
  more.push_back(v);
  return gf2_rank(more, ncols) == r0;
}

}  // namespace spurtee
