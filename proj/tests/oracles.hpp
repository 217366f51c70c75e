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

// Slow reference implementations used only by the tests. They share no code
// with the library beyond the Eigen types.

#ifndef SPURTEE_TESTS_ORACLES_HPP
#define SPURTEE_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline std::vector<std::size_t> digits(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> d(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    d[k] = index % dims[k];
    index /= dims[k];
  }
  return d;
}

inline std::size_t index_of(const std::vector<std::size_t>& d, const std::vector<std::size_t>& dims) {
  std::size_t i = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) i = i * dims[k] + d[k];
  return i;
}

// Entry-by-entry partial trace keeping the factors flagged in `keep`.
inline Matrix partial_trace(const Matrix& rho, const std::vector<std::size_t>& dims, const std::vector<bool>& keep) {
  std::vector<std::size_t> kd;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (keep[k]) kd.push_back(dims[k]);
  }
  std::size_t out = 1;
  for (auto d : kd) out *= d;
  Matrix r = Matrix::Zero(out, out);
  const auto total = static_cast<std::size_t>(rho.rows());
  for (std::size_t i = 0; i < total; ++i) {
    const auto di = digits(i, dims);
    for (std::size_t j = 0; j < total; ++j) {
      const auto dj = digits(j, dims);
      bool diag = true;
      std::vector<std::size_t> ki, kj;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (keep[k]) {
          ki.push_back(di[k]);
          kj.push_back(dj[k]);
        } else if (di[k] != dj[k]) {
          diag = false;
        }
      }
      if (diag) r(index_of(ki, kd), index_of(kj, kd)) += rho(i, j);
    }
  }
  return r;
}

// Entropy in bits from the singular values of a PSD matrix.
inline double entropy(const Matrix& rho) {
  Eigen::JacobiSVD<Matrix> svd(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double p = svd.singularValues()(i);
    if (p > 1e-12) s -= p * std::log2(p);
  }
  return s;
}

inline Matrix pauli(int i) {
  Matrix p(2, 2);
  switch (i) {
    case 1:
      p << 0, 1, 1, 0;
      break;
    case 2:
      p << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 3:
      p << 1, 0, 0, -1;
      break;
    default:
      p << 1, 0, 0, 1;
  }
  return p;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      for (Eigen::Index k = 0; k < b.rows(); ++k) {
        for (Eigen::Index l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return r;
}

// Pauli string "XZI..." as a dense matrix, first letter most significant.
inline Matrix pauli_string(const std::string& s) {
  Matrix m = Matrix::Identity(1, 1);
  for (char c : s) m = kron(m, pauli(c == 'X' ? 1 : c == 'Y' ? 2 : c == 'Z' ? 3 : 0));
  return m;
}

inline Matrix gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return m;
}

inline Vector random_state(Eigen::Index dim, std::mt19937_64& rng) {
  Vector v = gaussian(dim, 1, rng).col(0);
  return v / v.norm();
}

inline Matrix random_density(Eigen::Index dim, std::mt19937_64& rng) {
  const Matrix g = gaussian(dim, dim, rng);
  Matrix r = g * g.adjoint();
  return r / r.trace();
}

// Isometry from Gram-Schmidt on Gaussian columns.
inline Matrix random_isometry(Eigen::Index out, Eigen::Index in, std::mt19937_64& rng) {
  const Matrix g = gaussian(out, in, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(out, in);
}

// psi on factors `dims`; entropy of the factors flagged in `region`.
inline double region_entropy(const Vector& psi, const std::vector<std::size_t>& dims, const std::vector<bool>& region) {
  return entropy(partial_trace(psi * psi.adjoint(), dims, region));
}

}  // namespace oracle

#endif  // SPURTEE_TESTS_ORACLES_HPP
