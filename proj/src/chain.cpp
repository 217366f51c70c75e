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

#include "spurtee/chain.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace spurtee {

namespace {

std::size_t integer_sqrt(std::size_t v) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(v))));
  return r * r == v ? r : 0;
}

LabelSet join(std::initializer_list<const LabelSet*> parts) {
  LabelSet out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

void check_disjoint(const SubsystemLayout& layout, std::initializer_list<const LabelSet*> parts) {
  std::set<std::string> seen;
  for (const auto* p : parts) {
    for (const auto& l : *p) {
      layout.index_of(l);
      if (!seen.insert(l).second) throw ValidationError("regions overlap on label '" + l + "'");
    }
  }
}

// out += a (x) b without forming the product.
void add_kron(Matrix& out, const Matrix& a, const Matrix& b) {
  const auto br = b.rows();
  const auto bc = b.cols();
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Complex s = a(i, j);
      if (s == Complex(0.0)) continue;
      out.block(i * br, j * bc, br, bc) += s * b;
    }
  }
}

// V restricted to a fixed second input leg: result(o, c) = V(o, c * D + c2).
Matrix leg_slice(const Matrix& v, std::size_t d, std::size_t c2) {
  Matrix s(v.rows(), static_cast<Eigen::Index>(d));
  for (std::size_t c = 0; c < d; ++c) s.col(c) = v.col(c * d + c2);
  return s;
}

SubsystemLayout site_layout(const SubsystemLayout& out, std::size_t k) {
  return out.suffixed("_" + std::to_string(k));
}

}  // namespace

ChainModel ChainModel::make(Isometry v, LabelSet b_labels, LabelSet e_labels, ResourceCaps caps) {
  ChainModel m;
  m.D = integer_sqrt(v.in_dim());
  m.V = std::move(v);
  m.B_labels = std::move(b_labels);
  m.E_labels = std::move(e_labels);
  m.caps = caps;
  m.validate();
  return m;
}

void ChainModel::validate() const {
  if (D == 0 || D * D != V.in_dim()) {
    throw ValidationError("isometry input dimension " + std::to_string(V.in_dim()) +
                          " is not a square D*D");
  }
  if (!spectrum.empty()) {
    throw ValidationError("only the uniform virtual spectrum is supported");
  }
  boundary_channels(V, B_labels, E_labels);
}

BoundaryChannels ChainModel::channels() const { return boundary_channels(V, B_labels, E_labels); }

LabelSet ChainState::all_B() const {
  LabelSet out;
  for (const auto& b : B) out.insert(out.end(), b.begin(), b.end());
  return out;
}

LabelSet ChainState::all_E() const {
  LabelSet out;
  for (const auto& e : E) out.insert(out.end(), e.begin(), e.end());
  return out;
}

LabelSet site_labels(const LabelSet& base, std::size_t k) {
  LabelSet out;
  for (const auto& l : base) out.push_back(l + "_" + std::to_string(k));
  return out;
}

ChainState build_open_chain(const ChainModel& model, std::size_t n) {
  const std::size_t d = model.D;
  const std::size_t out = model.V.out_dim();
  std::uint64_t total = d * d;
  for (std::size_t k = 0; k < n; ++k) total *= out;
  model.caps.check(total, "open chain state with n = " + std::to_string(n));

  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  Matrix psi = Matrix::Identity(d, d) * scale;  // rows: everything but C
  std::vector<Matrix> slices;
  for (std::size_t c2 = 0; c2 < d; ++c2) slices.push_back(leg_slice(model.V.matrix, d, c2));

  for (std::size_t k = 0; k < n; ++k) {
    Matrix next(psi.rows() * out, d);
    for (std::size_t c2 = 0; c2 < d; ++c2) {
      const Matrix y = psi * slices[c2].transpose() * scale;  // (p, o)
      for (Eigen::Index p = 0; p < y.rows(); ++p) {
        next.block(p * out, c2, out, 1) = y.row(p).transpose();
      }
    }
    psi = std::move(next);
  }

  ChainState st;
  st.n = n;
  st.A = {"A1"};
  st.C = {"C"};
  std::vector<Factor> factors{Factor{"A1", d}};
  for (std::size_t k = 1; k <= n; ++k) {
    const auto sl = site_layout(model.V.out_layout, k);
    factors.insert(factors.end(), sl.factors().begin(), sl.factors().end());
    st.B.push_back(site_labels(model.B_labels, k));
    st.E.push_back(site_labels(model.E_labels, k));
  }
  factors.push_back(Factor{"C", d});
  Vector amps(psi.size());
  for (Eigen::Index r = 0; r < psi.rows(); ++r) {
    for (Eigen::Index c = 0; c < psi.cols(); ++c) amps(r * psi.cols() + c) = psi(r, c);
  }
  st.psi = StateVector{std::move(amps), SubsystemLayout(std::move(factors))};
  return st;
}

DensityOperator open_chain_rho(const ChainState& st) {
  const LabelSet b = st.all_B();
  return reduced_state(st.psi, join({&st.A, &b, &st.C}));
}

DensityOperator build_closed_chain(const ChainModel& model, std::size_t l, RingKeep keep) {
  if (l < 2) throw ValidationError("closed chains need l >= 2");
  const std::size_t d = model.D;

  if (keep == RingKeep::BAndE) {
    const std::size_t out = model.V.out_dim();
    std::uint64_t dim = 1;
    for (std::size_t k = 0; k < l; ++k) dim *= out;
    model.caps.check(dim * dim, "closed ring density matrix with l = " + std::to_string(l));
    std::vector<Matrix> slices;
    for (std::size_t c2 = 0; c2 < d; ++c2) slices.push_back(leg_slice(model.V.matrix, d, c2));
    Vector amps = Vector::Zero(static_cast<Eigen::Index>(dim));
    for (std::size_t c0 = 0; c0 < d; ++c0) {
      // y(p, c): amplitude with the open right leg in state c.
      Matrix y(out, d);
      for (std::size_t c1 = 0; c1 < d; ++c1) y.col(c1) = model.V.matrix.col(c0 * d + c1);
      for (std::size_t k = 1; k < l; ++k) {
        Matrix next(y.rows() * out, d);
        for (std::size_t c2 = 0; c2 < d; ++c2) {
          const Matrix z = y * slices[c2].transpose();
          for (Eigen::Index p = 0; p < z.rows(); ++p) next.block(p * out, c2, out, 1) = z.row(p).transpose();
        }
        y = std::move(next);
      }
      amps += y.col(c0);
    }
    amps /= std::pow(static_cast<double>(d), static_cast<double>(l) / 2.0);
    std::vector<Factor> factors;
    for (std::size_t k = 1; k <= l; ++k) {
      const auto sl = site_layout(model.V.out_layout, k);
      factors.insert(factors.end(), sl.factors().begin(), sl.factors().end());
    }
    return DensityOperator{amps * amps.adjoint(), SubsystemLayout(std::move(factors))};
  }

  const KrausChannel e = model.channels().E;
  const std::size_t db = e.out_dim();
  std::uint64_t dim = 1;
  for (std::size_t k = 0; k < l; ++k) dim *= db;
  model.caps.check(dim * dim, "closed ring reduction on B with l = " + std::to_string(l));

  // T[alpha][beta] = E(|a c><a' c'|) / D with alpha = (a, a'), beta = (c, c').
  const std::size_t dd = d * d;
  std::vector<std::vector<Matrix>> t(dd, std::vector<Matrix>(dd));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t a2 = 0; a2 < d; ++a2) {
      for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t c2 = 0; c2 < d; ++c2) {
          Matrix m = Matrix::Zero(db, db);
          for (const auto& k : e.kraus) m.noalias() += k.col(a * d + c) * k.col(a2 * d + c2).adjoint();
          t[a * d + a2][c * d + c2] = m / static_cast<double>(d);
        }
      }
    }
  }

  Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t alpha = 0; alpha < dd; ++alpha) {
    std::vector<Matrix> x = t[alpha];
    for (std::size_t k = 2; k < l; ++k) {
      std::vector<Matrix> next(dd);
      const auto sz = x[0].rows() * static_cast<Eigen::Index>(db);
      for (std::size_t g = 0; g < dd; ++g) {
        next[g] = Matrix::Zero(sz, sz);
        for (std::size_t b = 0; b < dd; ++b) add_kron(next[g], x[b], t[b][g]);
      }
      x = std::move(next);
    }
    for (std::size_t b = 0; b < dd; ++b) add_kron(rho, x[b], t[b][alpha]);
  }

  std::vector<Factor> factors;
  for (std::size_t k = 1; k <= l; ++k) {
    const auto sl = site_layout(e.out_layout, k);
    factors.insert(factors.end(), sl.factors().begin(), sl.factors().end());
  }
  return DensityOperator{std::move(rho), SubsystemLayout(std::move(factors))};
}

CmiReport cmi(const DensityOperator& rho, const LabelSet& a, const LabelSet& b, const LabelSet& c) {
  check_disjoint(rho.layout, {&a, &b, &c});
  auto s = [&](const LabelSet& region) {
    if (region.empty()) return 0.0;
    return von_neumann_entropy(partial_trace(rho, region));
  };
  CmiReport r;
  r.S_AB = s(join({&a, &b}));
  r.S_BC = s(join({&b, &c}));
  r.S_B = s(b);
  r.S_ABC = s(join({&a, &b, &c}));
  r.value = r.S_AB + r.S_BC - r.S_B - r.S_ABC;
  return r;
}

CmiReport cmi(const StateVector& psi, const LabelSet& a, const LabelSet& b, const LabelSet& c) {
  check_disjoint(psi.layout, {&a, &b, &c});
  CmiReport r;
  r.S_AB = region_entropy(psi, join({&a, &b}));
  r.S_BC = region_entropy(psi, join({&b, &c}));
  r.S_B = region_entropy(psi, b);
  r.S_ABC = region_entropy(psi, join({&a, &b, &c}));
  r.value = r.S_AB + r.S_BC - r.S_B - r.S_ABC;
  return r;
}

double mutual_information(const StateVector& psi, const LabelSet& a, const LabelSet& b) {
  check_disjoint(psi.layout, {&a, &b});
  return region_entropy(psi, a) + region_entropy(psi, b) - region_entropy(psi, join({&a, &b}));
}

SaturationReport saturation_check(const ChainModel& model, const Tolerances& tol) {
  const ChainState one = build_open_chain(model, 1);
  const ChainState two = build_open_chain(model, 2);
  const LabelSet b1 = one.all_B(), b2 = two.all_B();
  const LabelSet e1 = one.all_E(), e2 = two.all_E();

  SaturationReport r;
  r.cmi_one = cmi(one.psi, one.A, b1, one.C).value;
  r.cmi_two = cmi(two.psi, two.A, b2, two.C).value;
  r.diff_cmi = r.cmi_one - r.cmi_two;
  r.diff_abc = mutual_information(one.psi, one.A, join({&b1, &one.C})) -
               mutual_information(two.psi, two.A, join({&b2, &two.C}));
  r.diff_ab = mutual_information(one.psi, one.A, b1) - mutual_information(two.psi, two.A, b2);
  r.diff_aec = mutual_information(one.psi, one.A, join({&e1, &one.C})) -
               mutual_information(two.psi, two.A, join({&e2, &two.C}));
  r.cmi_saturated = std::abs(r.diff_cmi) <= tol.saturation;
  r.abc_saturated = std::abs(r.diff_abc) <= tol.saturation;
  r.ab_saturated = std::abs(r.diff_ab) <= tol.saturation;
  r.aec_saturated = std::abs(r.diff_aec) <= tol.saturation;
  r.consistent = (r.cmi_saturated == (r.abc_saturated && r.ab_saturated)) &&
                 (r.ab_saturated == r.aec_saturated);
  return r;
}

double cmi_formula(const std::vector<Block>& a, const std::vector<Block>& b, std::size_t bond_dim) {
  auto side = [&](const std::vector<Block>& blocks, const char* name) {
    std::size_t total = 0;
    double value = 0.0;
    for (const auto& blk : blocks) {
      if (blk.n == 0 || blk.mult == 0) throw ValidationError(std::string("empty block in ") + name);
      total += blk.n * blk.mult;
      const double p = static_cast<double>(blk.n * blk.mult) / static_cast<double>(bond_dim);
      value += p * std::log2(static_cast<double>(blk.n) / static_cast<double>(blk.mult));
    }
    if (total != bond_dim) {
      throw ValidationError(std::string("blocks of ") + name + " cover dimension " + std::to_string(total) +
                            ", expected " + std::to_string(bond_dim));
    }
    return value;
  };
  return side(a, "A") + side(b, "B");
}

DensityOperator omega_A_state(const OperatorAlgebra& alg, std::size_t bond_dim) {
  const auto d = static_cast<Eigen::Index>(bond_dim);
  if (alg.ambient_dim() != bond_dim) throw ValidationError("algebra does not act on the bond space");
  Matrix w = Matrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      Matrix e = Matrix::Zero(d, d);
      e(i, j) = 1;
      w.block(i * d, j * d, d, d) = alg.project(e) / static_cast<double>(d);
    }
  }
  return DensityOperator{std::move(w), SubsystemLayout({Factor{"A1", bond_dim}, Factor{"A2", bond_dim}})};
}

double coherent_information_route(const OperatorAlgebra& a, const OperatorAlgebra& b,
                                  std::size_t bond_dim) {
  auto ic = [&](const OperatorAlgebra& alg) {
    const auto w = omega_A_state(alg, bond_dim);
    return von_neumann_entropy(partial_trace(w, {"A2"})) - von_neumann_entropy(w);
  };
  return ic(a) + ic(b);
}

LabelSet expand_region(const ChainModel& model, std::size_t n, const std::vector<std::string>& tokens) {
  LabelSet out;
  auto add = [&](const LabelSet& ls) {
    for (const auto& l : ls) {
      if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
  };
  for (const auto& tok : tokens) {
    if (tok == "B" || tok == "E") {
      for (std::size_t k = 1; k <= n; ++k) add(site_labels(tok == "B" ? model.B_labels : model.E_labels, k));
    } else if ((tok.rfind("B_", 0) == 0 || tok.rfind("E_", 0) == 0) && tok.size() > 2 &&
               std::all_of(tok.begin() + 2, tok.end(), ::isdigit)) {
      const std::size_t k = std::stoul(tok.substr(2));
      if (k == 0 || k > n) throw ValidationError("site index out of range in region token '" + tok + "'");
      add(site_labels(tok[0] == 'B' ? model.B_labels : model.E_labels, k));
    } else {
      bool known = tok == "C";
      for (std::size_t k = 1; k <= n && !known; ++k) {
        for (const auto* base : {&model.B_labels, &model.E_labels}) {
          const auto ls = site_labels(*base, k);
          known = known || std::find(ls.begin(), ls.end(), tok) != ls.end();
        }
      }
      if (!known) throw ValidationError("unknown region token '" + tok + "' (B, E, B_k, E_k, C or a site label)");
      add({tok});
    }
  }
  return out;
}

Matrix chain_encoder(const ChainState& st, std::size_t bond_dim) {
  const auto d = static_cast<Eigen::Index>(bond_dim);
  const Eigen::Index rest = st.psi.amplitudes.size() / d;
  Matrix w(rest, d);
  const double s = std::sqrt(static_cast<double>(bond_dim));
  for (Eigen::Index j = 0; j < d; ++j) w.col(j) = st.psi.amplitudes.segment(j * rest, rest) * s;
  return w;
}

LogicalSolution logical_operators(const ChainModel& model, const Matrix& op, std::size_t n,
                                  const LabelSet& support, const Tolerances& tol) {
  const auto d = static_cast<Eigen::Index>(model.D);
  if (n == 0) throw ValidationError("logical operators need n >= 1");
  if (op.rows() != d || op.cols() != d) throw ValidationError("operator must act on the D-dim input leg");

  const auto alg = correctable_algebra(iterate_tilde(model.channels().E, model.D, n, model.caps), tol.rank);
  if (alg.residual(op) > tol.conditional * std::max(1.0, op.norm())) {
    throw ValidationError("not encodable: operator is outside the correctable algebra");
  }

  const ChainState st = build_open_chain(model, n);
  const SubsystemLayout out_layout = st.psi.layout.complement(st.A);
  for (const auto& l : support) {
    if (!out_layout.contains(l)) throw ValidationError("support label '" + l + "' is not a chain output");
  }
  const Matrix w = chain_encoder(st, model.D);
  const auto order = split_order(out_layout, support);
  const Matrix wp = permute_rows(w, out_layout, order);
  const Matrix wop = permute_rows(w * op, out_layout, order);
  const auto s = static_cast<Eigen::Index>(out_layout.dim_of(support));
  const Eigen::Index r = w.rows() / s;

  Matrix m(s, r * d), nmat(s, r * d);
  for (Eigen::Index a = 0; a < s; ++a) {
    for (Eigen::Index b = 0; b < r; ++b) {
      m.block(a, b * d, 1, d) = wp.row(a * r + b);
      nmat.block(a, b * d, 1, d) = wop.row(a * r + b);
    }
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol.rank * sv(0)) ++rank;
  Matrix pinv = svd.matrixV().leftCols(rank) *
                sv.head(rank).cwiseInverse().asDiagonal() * svd.matrixU().leftCols(rank).adjoint();

  LogicalSolution sol;
  sol.particular = nmat * pinv;
  sol.residual = (sol.particular * m - nmat).cwiseAbs().maxCoeff();
  if (sol.residual > tol.logical) throw ValidationError("no logical operator on this support");
  sol.support = out_layout.subset(support);
  sol.kernel_dim = static_cast<std::size_t>(s * (s - rank));
  sol.unique = sol.kernel_dim == 0;
  return sol;
}

}  // namespace spurtee
