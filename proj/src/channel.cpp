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

#include "spurtee/channel.hpp"

#include <cmath>
#include <set>

namespace spurtee {

namespace {

std::vector<Matrix> trimmed(std::vector<Matrix> kraus) {
  std::vector<Matrix> out;
  out.reserve(kraus.size());
  for (auto& k : kraus) {
    if (k.norm() >= kKrausTrim) out.push_back(std::move(k));
  }
  return out;
}

void check_partition(const SubsystemLayout& layout, const LabelSet& a, const LabelSet& b) {
  std::set<std::string> seen;
  for (const auto* group : {&a, &b}) {
    for (const auto& l : *group) {
      layout.index_of(l);
      if (!seen.insert(l).second) {
        throw ValidationError("label '" + l + "' appears in both halves of the partition");
      }
    }
  }
  if (seen.size() != layout.size()) {
    throw ValidationError("B and E labels do not cover every output factor");
  }
}

// Kraus operators K_d[k, :] = M[k * dd + d, :] after moving `drop` last.
std::vector<Matrix> split_rows(const Matrix& m, const SubsystemLayout& layout, const LabelSet& drop) {
  const auto keep = layout.complement(drop).labels();
  const auto order = split_order(layout, keep);
  const Matrix p = permute_rows(m, layout, order);
  const std::size_t dd = layout.dim_of(drop);
  const std::size_t dk = layout.total_dim() / dd;
  std::vector<Matrix> out;
  out.reserve(dd);
  for (std::size_t d = 0; d < dd; ++d) {
    Matrix k(dk, m.cols());
    for (std::size_t r = 0; r < dk; ++r) k.row(r) = p.row(r * dd + d);
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace

KrausChannel KrausChannel::make(std::vector<Matrix> kraus, SubsystemLayout in_layout,
                                SubsystemLayout out_layout, double tol) {
  if (kraus.empty()) throw ValidationError("channel needs at least one Kraus operator");
  const auto in = static_cast<Eigen::Index>(in_layout.total_dim());
  const auto out = static_cast<Eigen::Index>(out_layout.total_dim());
  for (const auto& k : kraus) {
    if (k.rows() != out || k.cols() != in) {
      throw ValidationError("Kraus operator shape " + std::to_string(k.rows()) + "x" +
                            std::to_string(k.cols()) + " does not match out x in = " +
                            std::to_string(out) + "x" + std::to_string(in));
    }
  }
  KrausChannel ch{trimmed(std::move(kraus)), std::move(in_layout), std::move(out_layout)};
  if (ch.kraus.empty()) throw ValidationError("all Kraus operators are zero");
  if (ch.trace_preservation_defect() > tol) {
    throw ValidationError("Kraus operators are not trace preserving (sum K^dagger K != I)");
  }
  return ch;
}

double KrausChannel::trace_preservation_defect() const {
  const auto d = static_cast<Eigen::Index>(in_dim());
  Matrix acc = Matrix::Zero(d, d);
  for (const auto& k : kraus) acc.noalias() += k.adjoint() * k;
  return (acc - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

Isometry Isometry::make(Matrix matrix, SubsystemLayout in_layout, SubsystemLayout out_layout,
                        double tol) {
  if (matrix.rows() != static_cast<Eigen::Index>(out_layout.total_dim()) ||
      matrix.cols() != static_cast<Eigen::Index>(in_layout.total_dim())) {
    throw ValidationError("isometry shape does not match its layouts");
  }
  Isometry v{std::move(matrix), std::move(in_layout), std::move(out_layout)};
  if (v.isometry_defect() > tol) throw ValidationError("matrix is not an isometry (V^dagger V != I)");
  return v;
}

double Isometry::isometry_defect() const {
  const auto d = matrix.cols();
  return (matrix.adjoint() * matrix - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

Matrix apply(const KrausChannel& ch, const Matrix& rho) {
  if (rho.rows() != static_cast<Eigen::Index>(ch.in_dim()) || rho.cols() != rho.rows()) {
    throw ValidationError("input operator does not match the channel input dimension");
  }
  const auto d = static_cast<Eigen::Index>(ch.out_dim());
  Matrix out = Matrix::Zero(d, d);
  for (const auto& k : ch.kraus) out.noalias() += k * rho * k.adjoint();
  return out;
}

DensityOperator apply(const KrausChannel& ch, const DensityOperator& rho) {
  if (rho.layout.dims() != ch.in_layout.dims()) {
    throw ValidationError("state layout does not match the channel input layout");
  }
  return DensityOperator{apply(ch, rho.matrix), ch.out_layout};
}

Matrix adjoint_apply(const KrausChannel& ch, const Matrix& op) {
  if (op.rows() != static_cast<Eigen::Index>(ch.out_dim()) || op.cols() != op.rows()) {
    throw ValidationError("observable does not match the channel output dimension");
  }
  const auto d = static_cast<Eigen::Index>(ch.in_dim());
  Matrix out = Matrix::Zero(d, d);
  for (const auto& k : ch.kraus) out.noalias() += k.adjoint() * op * k;
  return out;
}

Isometry stinespring(const KrausChannel& ch, const std::string& env_label) {
  const std::size_t r = ch.env_dim();
  const std::size_t out = ch.out_dim();
  Matrix v(out * r, ch.in_dim());
  for (std::size_t o = 0; o < out; ++o) {
    for (std::size_t a = 0; a < r; ++a) v.row(o * r + a) = ch.kraus[a].row(o);
  }
  return Isometry{std::move(v), ch.in_layout,
                  ch.out_layout.concat(SubsystemLayout::single(env_label, r))};
}

KrausChannel complementary(const KrausChannel& ch, const std::string& env_label) {
  const std::size_t r = ch.env_dim();
  std::vector<Matrix> ops;
  ops.reserve(ch.out_dim());
  for (std::size_t o = 0; o < ch.out_dim(); ++o) {
    Matrix f(r, ch.in_dim());
    for (std::size_t a = 0; a < r; ++a) f.row(a) = ch.kraus[a].row(o);
    ops.push_back(std::move(f));
  }
  return KrausChannel{trimmed(std::move(ops)), ch.in_layout, SubsystemLayout::single(env_label, r)};
}

KrausChannel unitary_channel(const Matrix& u, const SubsystemLayout& layout) {
  return KrausChannel::make({u}, layout, layout);
}

KrausChannel identity_channel(const SubsystemLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  return KrausChannel{{Matrix::Identity(d, d)}, layout, layout};
}

KrausChannel trace_channel_output(const Isometry& v, const LabelSet& drop) {
  auto ops = split_rows(v.matrix, v.out_layout, drop);
  return KrausChannel{trimmed(std::move(ops)), v.in_layout, v.out_layout.complement(drop)};
}

KrausChannel trace_out(const KrausChannel& ch, const LabelSet& drop) {
  std::vector<Matrix> ops;
  for (const auto& k : ch.kraus) {
    auto parts = split_rows(k, ch.out_layout, drop);
    for (auto& p : parts) ops.push_back(std::move(p));
  }
  KrausChannel out{trimmed(std::move(ops)), ch.in_layout, ch.out_layout.complement(drop)};
  if (out.kraus.size() > out.in_dim() * out.out_dim()) return compress(out);
  return out;
}

KrausChannel compress(const KrausChannel& ch) {
  const auto in = static_cast<Eigen::Index>(ch.in_dim());
  const auto out = static_cast<Eigen::Index>(ch.out_dim());
  Matrix stacked(in * out, static_cast<Eigen::Index>(ch.kraus.size()));
  for (std::size_t a = 0; a < ch.kraus.size(); ++a) {
    stacked.col(a) = Eigen::Map<const Vector>(ch.kraus[a].data(), in * out);
  }
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  std::vector<Matrix> ops;
  for (Eigen::Index j = 0; j < s.size(); ++j) {
    if (s(j) < kKrausTrim) break;
    Vector col = svd.matrixU().col(j) * s(j);
    ops.push_back(Eigen::Map<Matrix>(col.data(), out, in));
  }
  return KrausChannel{std::move(ops), ch.in_layout, ch.out_layout};
}

BoundaryChannels boundary_channels(const Isometry& v, const LabelSet& b_labels,
                                   const LabelSet& e_labels) {
  check_partition(v.out_layout, b_labels, e_labels);
  return BoundaryChannels{trace_channel_output(v, e_labels), trace_channel_output(v, b_labels)};
}

KrausChannel tilde(const KrausChannel& ch, std::size_t bond_dim, const std::string& c_label) {
  const std::size_t d = bond_dim;
  if (d == 0 || ch.in_dim() != d * d) {
    throw ValidationError("tilde needs a channel on D*D inputs; got input dimension " +
                          std::to_string(ch.in_dim()) + " for D = " + std::to_string(d));
  }
  const std::size_t out = ch.out_dim();
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Matrix> ops;
  ops.reserve(ch.kraus.size());
  for (const auto& k : ch.kraus) {
    Matrix t(out * d, d);
    for (std::size_t b = 0; b < out; ++b) {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) t(b * d + i, j) = scale * k(b, j * d + i);
      }
    }
    ops.push_back(std::move(t));
  }
  return KrausChannel{std::move(ops), SubsystemLayout::single(c_label + "0", d),
                      ch.out_layout.concat(SubsystemLayout::single(c_label, d))};
}

KrausChannel iterate_tilde(const KrausChannel& ch, std::size_t bond_dim, std::size_t n,
                           const ResourceCaps& caps, const std::string& c_label) {
  if (n == 0) throw ValidationError("iterate_tilde needs n >= 1");
  const KrausChannel step = tilde(ch, bond_dim, c_label);
  const std::size_t d = bond_dim;
  const std::size_t site = ch.out_dim();

  std::uint64_t out_dim = d;
  for (std::size_t k = 0; k < n; ++k) out_dim *= site;
  caps.check(out_dim * d, "iterated channel Kraus operator");

  std::vector<Matrix> current = step.kraus;
  std::size_t prefix = site;  // dimension of B_1..B_k
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Matrix> next;
    next.reserve(current.size() * step.kraus.size());
    for (const auto& a : current) {
      for (const auto& b : step.kraus) {
        Matrix m(prefix * site * d, d);
        for (std::size_t p = 0; p < prefix; ++p) {
          m.middleRows(p * site * d, site * d).noalias() = b * a.middleRows(p * d, d);
        }
        next.push_back(std::move(m));
      }
    }
    prefix *= site;
    KrausChannel tmp{trimmed(std::move(next)), step.in_layout,
                     SubsystemLayout::single("tmp", prefix * d)};
    if (tmp.kraus.size() > tmp.in_dim() * tmp.out_dim()) tmp = compress(tmp);
    current = std::move(tmp.kraus);
  }

  std::vector<Factor> factors;
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& f : ch.out_layout.factors()) {
      factors.push_back(Factor{f.label + "_" + std::to_string(k), f.dim});
    }
  }
  factors.push_back(Factor{c_label, d});
  return KrausChannel{std::move(current), step.in_layout, SubsystemLayout(std::move(factors))};
}

}  // namespace spurtee
