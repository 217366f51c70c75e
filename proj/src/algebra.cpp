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

#include "spurtee/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace spurtee {

namespace {

constexpr double kZeroNorm = 1e-14;

// Rows of (I (x) G - G^T (x) I), i.e. vec([G, X]) = C vec(X).
Matrix commutator_rows(const Matrix& g) {
  const auto d = g.rows();
  const Matrix id = Matrix::Identity(d, d);
  return kron(id, g) - kron(g.transpose(), id);
}

// Accumulates constraint rows, keeping only an upper-triangular factor with
// the same row space so tall stacks never materialize.
class RowCompressor {
 public:
  explicit RowCompressor(Eigen::Index cols) : cols_(cols), rows_(0, cols) {}

  void add(const Matrix& block) {
    const Eigen::Index old = rows_.rows();
    rows_.conservativeResize(old + block.rows(), Eigen::NoChange);
    rows_.bottomRows(block.rows()) = block;
    if (rows_.rows() > 4 * cols_) compact();
  }

  Matrix result() {
    compact();
    return rows_;
  }

 private:
  void compact() {
    if (rows_.rows() <= cols_) return;
    Eigen::HouseholderQR<Matrix> qr(rows_);
    rows_ = qr.matrixQR().topRows(cols_).triangularView<Eigen::Upper>();
  }

  Eigen::Index cols_;
  Matrix rows_;
};

Matrix null_space_of_rows(RowCompressor& rc, double rel_tol) {
  return null_space(rc.result(), rel_tol);
}

Matrix hermitian_part(const Matrix& m) { return (m + m.adjoint()) * 0.5; }
Matrix antihermitian_part(const Matrix& m) { return (m - m.adjoint()) * Complex(0, -0.5); }

// Random real combination of the Hermitian and anti-Hermitian parts.
Matrix generic_hermitian(const std::vector<Matrix>& elems, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix h = Matrix::Zero(elems.front().rows(), elems.front().cols());
  for (const auto& e : elems) {
    h += u(rng) * hermitian_part(e);
    h += u(rng) * antihermitian_part(e);
  }
  return hermitian_part(h);
}

// Eigenvalue clusters of a Hermitian matrix: groups of eigenvector columns.
std::vector<Matrix> eigen_clusters(const Matrix& h, double rel_gap) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<Matrix> out;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= ev.size(); ++i) {
    if (i == ev.size() || ev(i) - ev(i - 1) > rel_gap * scale) {
      out.push_back(es.eigenvectors().middleCols(start, i - start));
      start = i;
    }
  }
  return out;
}

Matrix polar_unitary(const Matrix& m, double* smallest) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  *smallest = svd.singularValues().minCoeff();
  return svd.matrixU() * svd.matrixV().adjoint();
}

double block_pattern_defect(const Matrix& t, const std::vector<Block>& blocks) {
  Matrix pattern = Matrix::Zero(t.rows(), t.cols());
  Eigen::Index off = 0;
  for (const auto& b : blocks) {
    const auto n = static_cast<Eigen::Index>(b.n);
    const auto m = static_cast<Eigen::Index>(b.mult);
    Matrix red = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index k = 0; k < n; ++k) {
        Complex acc = 0;
        for (Eigen::Index j = 0; j < m; ++j) acc += t(off + i * m + j, off + k * m + j);
        red(i, k) = acc / static_cast<double>(m);
      }
    }
    pattern.block(off, off, n * m, n * m) = kron(red, Matrix::Identity(m, m));
    off += n * m;
  }
  return (t - pattern).cwiseAbs().maxCoeff();
}

}  // namespace

Vector vec(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

Matrix unvec(const Vector& v, std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return Eigen::Map<const Matrix>(v.data(), n, n);
}

Matrix orthonormal_span(const Matrix& columns, double rel_tol) {
  if (columns.cols() == 0) return Matrix(columns.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) < kZeroNorm) return Matrix(columns.rows(), 0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > rel_tol * s(0)) ++r;
  return svd.matrixU().leftCols(r);
}

Matrix null_space(const Matrix& constraints, double rel_tol) {
  const auto c = constraints.cols();
  if (constraints.rows() == 0) return Matrix::Identity(c, c);
  Eigen::JacobiSVD<Matrix> svd(constraints, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) < kZeroNorm) return Matrix::Identity(c, c);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > rel_tol * s(0)) ++r;
  return svd.matrixV().rightCols(c - r);
}

OperatorAlgebra::OperatorAlgebra(std::size_t ambient_dim, Matrix basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  if (basis_.rows() != static_cast<Eigen::Index>(ambient_dim_ * ambient_dim_)) {
    throw ValidationError("algebra basis rows must equal d^2");
  }
}

OperatorAlgebra OperatorAlgebra::full(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d * d);
  return OperatorAlgebra(d, Matrix::Identity(n, n));
}

OperatorAlgebra OperatorAlgebra::scalars(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  Matrix b = vec(Matrix::Identity(n, n) / std::sqrt(static_cast<double>(d)));
  return OperatorAlgebra(d, std::move(b));
}

Matrix OperatorAlgebra::element(std::size_t j) const { return unvec(basis_.col(j), ambient_dim_); }

std::vector<Matrix> OperatorAlgebra::elements() const {
  std::vector<Matrix> out;
  out.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) out.push_back(element(j));
  return out;
}

double OperatorAlgebra::residual(const Matrix& x) const {
  const Vector v = vec(x);
  return (v - basis_ * (basis_.adjoint() * v)).norm();
}

Matrix OperatorAlgebra::project(const Matrix& x) const {
  const Vector v = vec(x);
  return unvec(basis_ * (basis_.adjoint() * v), ambient_dim_);
}

double OperatorAlgebra::closure_defect() const {
  const auto elems = elements();
  double worst = 0.0;
  for (const auto& a : elems) {
    for (const auto& b : elems) worst = std::max(worst, residual(a * b));
    worst = std::max(worst, residual(a.adjoint()));
  }
  return worst;
}

OperatorAlgebra algebra_closure(const std::vector<Matrix>& generators, std::size_t d,
                                double rel_tol) {
  const auto n = static_cast<Eigen::Index>(d);
  Matrix gen_cols(n * n, static_cast<Eigen::Index>(2 * generators.size()));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].rows() != n || generators[i].cols() != n) {
      throw ValidationError("generators must all be square of the ambient dimension");
    }
    gen_cols.col(2 * i) = vec(generators[i]);
    gen_cols.col(2 * i + 1) = vec(generators[i].adjoint());
  }
  const Matrix g_basis = orthonormal_span(gen_cols, rel_tol);
  std::vector<Matrix> gens;
  for (Eigen::Index j = 0; j < g_basis.cols(); ++j) gens.push_back(unvec(g_basis.col(j), d));

  Matrix start(n * n, g_basis.cols() + 1);
  start.col(0) = vec(Matrix::Identity(n, n));
  start.rightCols(g_basis.cols()) = g_basis;
  Matrix span = orthonormal_span(start, rel_tol);

  while (span.cols() < n * n) {
    Matrix grown(n * n, span.cols() * (1 + static_cast<Eigen::Index>(gens.size())));
    grown.leftCols(span.cols()) = span;
    Eigen::Index c = span.cols();
    for (const auto& g : gens) {
      for (Eigen::Index j = 0; j < span.cols(); ++j) grown.col(c++) = vec(g * unvec(span.col(j), d));
    }
    Matrix next = orthonormal_span(grown, rel_tol);
    if (next.cols() == span.cols()) break;
    span = std::move(next);
  }
  return OperatorAlgebra(d, std::move(span));
}

OperatorAlgebra commutant_of(const std::vector<Matrix>& ops, std::size_t d, double rel_tol) {
  const auto n = static_cast<Eigen::Index>(d);
  RowCompressor rc(n * n);
  for (const auto& g : ops) rc.add(commutator_rows(g));
  return OperatorAlgebra(d, null_space_of_rows(rc, rel_tol));
}

OperatorAlgebra commutant(const OperatorAlgebra& alg, double rel_tol) {
  return commutant_of(alg.elements(), alg.ambient_dim(), rel_tol);
}

OperatorAlgebra center(const OperatorAlgebra& alg, double rel_tol) {
  const Matrix& q = alg.basis();
  RowCompressor rc(q.cols());
  for (const auto& g : alg.elements()) rc.add(commutator_rows(g) * q);
  const Matrix coeffs = null_space_of_rows(rc, rel_tol);
  return OperatorAlgebra(alg.ambient_dim(), orthonormal_span(q * coeffs, rel_tol));
}

double containment_residual(const OperatorAlgebra& inner, const OperatorAlgebra& outer) {
  if (inner.ambient_dim() != outer.ambient_dim()) {
    throw ValidationError("algebras live on different ambient dimensions");
  }
  if (inner.dim() == 0) return 0.0;
  const Matrix& a = inner.basis();
  const Matrix& b = outer.basis();
  const Matrix r = a - b * (b.adjoint() * a);
  return r.colwise().norm().maxCoeff();
}

double span_distance(const OperatorAlgebra& a, const OperatorAlgebra& b) {
  return std::max(containment_residual(a, b), containment_residual(b, a));
}

std::vector<Block> canonical_blocks(std::vector<Block> blocks) {
  std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
    return x.n != y.n ? x.n > y.n : x.mult > y.mult;
  });
  return blocks;
}

BlockDecomposition block_decomposition(const OperatorAlgebra& alg, std::uint64_t seed) {
  const std::size_t d = alg.ambient_dim();
  const auto z = center(alg);
  const auto z_elems = z.elements();
  const auto a_elems = alg.elements();
  constexpr int kAttempts = 5;
  constexpr double kGap = 1e-7;

  std::string last_failure = "degenerate central element";
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt));
    const auto clusters = eigen_clusters(generic_hermitian(z_elems, rng), kGap);
    if (clusters.size() != z.dim()) {
      last_failure = "central element has " + std::to_string(clusters.size()) +
                     " eigenvalue clusters but the center has dimension " + std::to_string(z.dim());
      continue;
    }

    BlockDecomposition bd;
    bd.basis_change = Matrix(d, d);
    Eigen::Index col = 0;
    bool ok = true;
    for (const auto& w : clusters) {
      const auto r = static_cast<std::size_t>(w.cols());
      std::vector<Matrix> restricted;
      Matrix cols(w.cols() * w.cols(), static_cast<Eigen::Index>(a_elems.size()));
      for (std::size_t j = 0; j < a_elems.size(); ++j) {
        cols.col(j) = vec(w.adjoint() * a_elems[j] * w);
      }
      const Matrix rb = orthonormal_span(cols);
      for (Eigen::Index j = 0; j < rb.cols(); ++j) restricted.push_back(unvec(rb.col(j), r));
      const auto nk = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(rb.cols()))));
      if (nk == 0 || nk * nk != static_cast<std::size_t>(rb.cols()) || r % nk != 0) {
        ok = false;
        last_failure = "central block of rank " + std::to_string(r) + " carries an algebra of dimension " +
                       std::to_string(rb.cols());
        break;
      }
      const std::size_t mk = r / nk;
      bd.blocks.push_back(Block{nk, mk});
      if (nk == 1) {
        bd.basis_change.middleCols(col, w.cols()) = w;
        col += w.cols();
        continue;
      }
      const auto sub = eigen_clusters(generic_hermitian(restricted, rng), kGap);
      if (sub.size() != nk ||
          std::any_of(sub.begin(), sub.end(), [&](const Matrix& f) { return f.cols() != static_cast<Eigen::Index>(mk); })) {
        ok = false;
        last_failure = "generic block element has the wrong multiplicity pattern";
        break;
      }
      std::normal_distribution<double> normal;
      Matrix g = Matrix::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
      for (const auto& e : restricted) g += Complex(normal(rng), normal(rng)) * e;
      bd.basis_change.middleCols(col, mk) = w * sub[0];
      col += mk;
      for (std::size_t i = 1; i < nk; ++i) {
        double smallest = 0.0;
        const Matrix u = polar_unitary(sub[i].adjoint() * g * sub[0], &smallest);
        if (smallest < 1e-6) {
          ok = false;
          last_failure = "matrix-unit alignment hit a near-singular draw";
          break;
        }
        bd.basis_change.middleCols(col, mk) = w * sub[i] * u;
        col += mk;
      }
      if (!ok) break;
    }
    if (!ok) continue;

    double worst = 0.0;
    for (const auto& a : a_elems) {
      worst = std::max(worst, block_pattern_defect(bd.basis_change.adjoint() * a * bd.basis_change, bd.blocks));
    }
    bd.off_pattern = worst;
    if (worst > 1e-8) {
      std::ostringstream ss;
      ss << "block pattern violated by " << worst;
      last_failure = ss.str();
      continue;
    }
    return bd;
  }
  throw NumericalError("block decomposition failed after retries: " + last_failure);
}

OperatorAlgebra algebra_from_blocks(const BlockDecomposition& bd) {
  const auto d = bd.basis_change.rows();
  std::vector<Matrix> units;
  Eigen::Index off = 0;
  for (const auto& b : bd.blocks) {
    const auto n = static_cast<Eigen::Index>(b.n);
    const auto m = static_cast<Eigen::Index>(b.mult);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index k = 0; k < n; ++k) {
        Matrix e = Matrix::Zero(n, n);
        e(i, k) = 1;
        Matrix full = Matrix::Zero(d, d);
        full.block(off, off, n * m, n * m) = kron(e, Matrix::Identity(m, m));
        units.push_back(bd.basis_change * full * bd.basis_change.adjoint());
      }
    }
    off += n * m;
  }
  Matrix cols(d * d, static_cast<Eigen::Index>(units.size()));
  for (std::size_t j = 0; j < units.size(); ++j) cols.col(j) = vec(units[j]);
  return OperatorAlgebra(static_cast<std::size_t>(d), orthonormal_span(cols));
}

Matrix conditional_expectation(const OperatorAlgebra& alg, const Matrix& x) {
  if (x.rows() != static_cast<Eigen::Index>(alg.ambient_dim()) || x.cols() != x.rows()) {
    throw ValidationError("operator does not match the algebra's ambient dimension");
  }
  return alg.project(x);
}

OperatorAlgebra correctable_algebra(const KrausChannel& ch, double rel_tol) {
  const auto d = static_cast<Eigen::Index>(ch.in_dim());
  const Eigen::Index full = d * d;
  const Eigen::Index batch = std::max<Eigen::Index>(full, 64);
  Matrix span(full, 0);
  Matrix pending(full, batch);
  Eigen::Index filled = 0;
  auto flush = [&]() {
    Matrix both(full, span.cols() + filled);
    both << span, pending.leftCols(filled);
    span = orthonormal_span(both, rel_tol);
    filled = 0;
  };
  const auto r = static_cast<Eigen::Index>(ch.kraus.size());
  if (r * r <= 16 * full) {
    for (const auto& a : ch.kraus) {
      const Matrix ad = a.adjoint();
      for (const auto& b : ch.kraus) {
        pending.col(filled++) = vec(ad * b);
        if (filled == batch) {
          flush();
          if (span.cols() == full) break;
        }
      }
      if (span.cols() == full) break;
    }
  } else {
    // span{K_a^dag K_b} is spanned by products of generic Kraus combinations
    // A_u^dag B_v; sample until a whole batch adds nothing.
    std::mt19937_64 rng(0x5eedULL);
    std::normal_distribution<double> g;
    auto combo = [&]() {
      Matrix m = Matrix::Zero(ch.kraus.front().rows(), d);
      for (const auto& k : ch.kraus) m += Complex(g(rng), g(rng)) * k;
      return m;
    };
    const Eigen::Index step = 16;
    for (;;) {
      const Eigen::Index before = span.cols();
      for (Eigen::Index i = 0; i < step; ++i) pending.col(filled++) = vec(combo().adjoint() * combo());
      flush();
      if (span.cols() == full || span.cols() == before) break;
    }
  }
  if (filled > 0) flush();
  if (span.cols() == full) return OperatorAlgebra::scalars(static_cast<std::size_t>(d));
  std::vector<Matrix> ops;
  for (Eigen::Index j = 0; j < span.cols(); ++j) ops.push_back(unvec(span.col(j), d));
  return commutant_of(ops, static_cast<std::size_t>(d), rel_tol);
}

RecoveryReport complementary_recovery_check(const KrausChannel& ch, const Tolerances& tol) {
  RecoveryReport rep;
  rep.algebra = correctable_algebra(ch, tol.rank);
  rep.complementary_algebra = correctable_algebra(complementary(ch), tol.rank);
  const OperatorAlgebra comm = commutant(rep.algebra, tol.rank);
  rep.complementary_in_commutant = containment_residual(rep.complementary_algebra, comm);
  rep.commutant_in_complementary = containment_residual(comm, rep.complementary_algebra);
  rep.span_pass = rep.complementary_in_commutant <= tol.span && rep.commutant_in_complementary <= tol.span;

  const auto din = static_cast<Eigen::Index>(ch.in_dim());
  for (Eigen::Index i = 0; i < din; ++i) {
    for (Eigen::Index j = 0; j < din; ++j) {
      Matrix e = Matrix::Zero(din, din);
      e(i, j) = 1;
      const Matrix diff = spurtee::apply(ch, rep.algebra.project(e)) - spurtee::apply(ch, e);
      rep.state_form = std::max(rep.state_form, diff.cwiseAbs().maxCoeff());
    }
  }
  const auto dout = static_cast<Eigen::Index>(ch.out_dim());
  for (Eigen::Index o = 0; o < dout; ++o) {
    for (Eigen::Index p = 0; p < dout; ++p) {
      Matrix x = Matrix::Zero(din, din);
      for (const auto& k : ch.kraus) x.noalias() += k.row(o).adjoint() * k.row(p);
      const Matrix diff = rep.algebra.project(x) - x;
      rep.observable_form = std::max(rep.observable_form, diff.cwiseAbs().maxCoeff());
    }
  }
  rep.projection_pass = rep.state_form <= tol.conditional && rep.observable_form <= tol.conditional;
  if (rep.span_pass != rep.projection_pass) {
    std::ostringstream ss;
    ss << "complementary recovery verdicts disagree: span residuals ("
       << rep.complementary_in_commutant << ", " << rep.commutant_in_complementary
       << ") versus projection residuals (" << rep.state_form << ", " << rep.observable_form << ")";
    throw NumericalError(ss.str());
  }
  rep.pass = rep.span_pass;
  return rep;
}

DualReport dual_complementarity_check(const Isometry& v, const LabelSet& b_labels,
                                      const LabelSet& e_labels, std::size_t bond_dim,
                                      const Tolerances& tol) {
  const auto bc = boundary_channels(v, b_labels, e_labels);
  DualReport rep;
  rep.e = complementary_recovery_check(tilde(bc.E, bond_dim), tol);
  rep.f = complementary_recovery_check(tilde(bc.F, bond_dim), tol);
  rep.pass = rep.e.pass && rep.f.pass;
  rep.A = rep.e.algebra;
  rep.B = rep.f.algebra;
  return rep;
}

AlgebraSaturationReport algebra_saturation_check(const Isometry& v, const LabelSet& b_labels,
                                                 const LabelSet& e_labels, std::size_t bond_dim,
                                                 std::size_t n_max, const ResourceCaps& caps,
                                                 const Tolerances& tol) {
  if (n_max < 2) throw ValidationError("algebra saturation needs n_max >= 2");
  const auto bc = boundary_channels(v, b_labels, e_labels);
  AlgebraSaturationReport rep;
  rep.pass = true;
  struct Family {
    const char* name;
    const KrausChannel* ch;
    bool trace_c;
  };
  const Family families[] = {{"E", &bc.E, false}, {"F", &bc.F, false}, {"TrC.E", &bc.E, true}, {"TrC.F", &bc.F, true}};
  for (const auto& fam : families) {
    KrausChannel one = tilde(*fam.ch, bond_dim);
    if (fam.trace_c) one = trace_out(one, {"C"});
    const auto a1 = correctable_algebra(one, tol.rank);
    for (std::size_t n = 2; n <= n_max; ++n) {
      KrausChannel many = iterate_tilde(*fam.ch, bond_dim, n, caps);
      if (fam.trace_c) many = trace_out(many, {"C"});
      const auto an = correctable_algebra(many, tol.rank);
      SaturationEntry e;
      e.name = fam.name;
      e.n = n;
      e.dim_one = a1.dim();
      e.dim_n = an.dim();
      e.residual = span_distance(a1, an);
      e.equal = e.residual <= tol.span;
      rep.pass = rep.pass && e.equal;
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

std::size_t operator_schmidt_rank(const Matrix& op, const SubsystemLayout& layout,
                                  const LabelSet& cut, double rel_tol) {
  const auto total = static_cast<Eigen::Index>(layout.total_dim());
  if (op.rows() != total || op.cols() != total) {
    throw ValidationError("operator does not match the layout dimension");
  }
  const auto order = split_order(layout, cut);
  const Matrix p = permute_operator(op, layout, order);
  const auto dc = static_cast<Eigen::Index>(layout.dim_of(cut));
  const Eigen::Index dr = total / dc;
  Matrix r(dc * dc, dr * dr);
  for (Eigen::Index a = 0; a < dc; ++a) {
    for (Eigen::Index a2 = 0; a2 < dc; ++a2) {
      for (Eigen::Index b = 0; b < dr; ++b) {
        for (Eigen::Index b2 = 0; b2 < dr; ++b2) r(a * dc + a2, b * dr + b2) = p(a * dr + b, a2 * dr + b2);
      }
    }
  }
  Eigen::JacobiSVD<Matrix> svd(r);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) < kZeroNorm) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++rank;
  }
  return rank;
}

}  // namespace spurtee
