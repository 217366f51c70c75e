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

// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.

#include <sys/resource.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "spurtee/lab.hpp"

using namespace spurtee;

namespace {

constexpr double kSpanTol = 1e-8;
constexpr double kCmiTol = 1e-9;
constexpr double kFitTol = 1e-6;
constexpr double kOracleTol = 1e-9;
constexpr double kSaturationTol = 1e-8;
constexpr double kProjectionTol = 1e-9;
constexpr double kLogicalTol = 1e-9;
constexpr double kSptCmiTol = 1e-9;
constexpr std::uint64_t kHaarSeeds[] = {1, 2, 3};

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double peak_rss_gb() {
  rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  return static_cast<double>(ru.ru_maxrss) / (1024.0 * 1024.0);
}

int failures = 0;

void run(int id, const char* title, double budget_s, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  const double dt = seconds_since(t0);
  if (budget_s > 0) {
    std::ostringstream what;
    what << "runtime " << dt << " s over budget " << budget_s << " s";
    v.require(dt <= budget_s, what.str());
  }
  if (!v.pass) ++failures;
  std::printf("%s criterion %d: %s (%.1f s)%s\n", v.pass ? "PASS" : "FAIL", id, title, dt, v.detail.str().c_str());
  std::fflush(stdout);
}

Matrix twirl_unitary(std::uint64_t seed) {
  return seed == 0 ? Matrix(Matrix::Identity(2, 2)) : haar_unitary(2, seed);
}

ChainModel twirl_model(std::uint64_t seed) {
  return ChainModel::make(pauli_twirl_isometry(twirl_unitary(seed)), {"b0", "b1"}, {"e0", "e1"});
}

ChainModel random_dense_model(std::size_t nb, std::size_t ne, std::mt19937_64& rng) {
  std::vector<Factor> out;
  LabelSet b, e;
  for (std::size_t i = 0; i < nb + ne; ++i) {
    out.push_back(Factor{(i < nb ? "b" : "e") + std::to_string(i), 2});
    (i < nb ? b : e).push_back(out.back().label);
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << (nb + ne));
  return ChainModel::make(Isometry::make(oracle::random_isometry(dim, 4, rng),
                                         SubsystemLayout({Factor{"L", 2}, Factor{"R", 2}}),
                                         SubsystemLayout(std::move(out))),
                          b, e);
}

KrausChannel kraus_from_isometry(const Matrix& v, std::size_t in, std::size_t out, std::size_t r) {
  std::vector<Matrix> k;
  for (std::size_t a = 0; a < r; ++a) {
    Matrix m(out, in);
    for (std::size_t o = 0; o < out; ++o) m.row(o) = v.row(o * r + a);
    k.push_back(m);
  }
  return KrausChannel::make(k, SubsystemLayout::single("in", in), SubsystemLayout::single("out", out));
}

// Generic channels, plus channels with a protected factor: U (id_n (x) N) V.
KrausChannel random_channel(int t, std::mt19937_64& rng) {
  if (t % 2 == 0) {
    const std::size_t in = 2 + t % 3, out = 2 + (t / 2) % 3;
    const std::size_t r = std::max<std::size_t>(1 + (t / 3) % 4, (in + out - 1) / out);
    return kraus_from_isometry(oracle::random_isometry(out * r, in, rng), in, out, r);
  }
  const std::size_t n = 2, m = 1 + (t / 2) % 2, r = 1 + (t / 4) % 3;
  const Matrix noise = oracle::random_isometry(m * r, m, rng);
  const Matrix u = oracle::random_isometry(n * m, n * m, rng);
  const Matrix w = oracle::random_isometry(n * m, n * m, rng);
  std::vector<Matrix> k;
  for (std::size_t a = 0; a < r; ++a) {
    Matrix na(m, m);
    for (std::size_t o = 0; o < m; ++o) na.row(o) = noise.row(o * r + a);
    k.push_back(u * oracle::kron(Matrix::Identity(n, n), na) * w);
  }
  return KrausChannel::make(k, SubsystemLayout::single("in", n * m), SubsystemLayout::single("out", n * m));
}

OperatorAlgebra random_block_algebra(std::mt19937_64& rng) {
  std::vector<Block> blocks;
  std::size_t d = 0;
  const int count = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < count; ++i) {
    Block b{1 + rng() % 2, 1 + rng() % 2};
    blocks.push_back(b);
    d += b.n * b.mult;
  }
  const Matrix u = oracle::random_isometry(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d), rng);
  std::vector<Matrix> gens;
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.n; ++i) {
      for (std::size_t j = 0; j < b.n; ++j) {
        Matrix e = Matrix::Zero(b.n, b.n);
        e(i, j) = 1;
        Matrix full = Matrix::Zero(d, d);
        full.block(offset, offset, b.n * b.mult, b.n * b.mult) = oracle::kron(e, Matrix::Identity(b.mult, b.mult));
        gens.push_back(u * full * u.adjoint());
      }
    }
    offset += b.n * b.mult;
  }
  return algebra_closure(gens, d);
}

void criterion1(Verdict& v) {
  for (std::uint64_t s : {std::uint64_t{0}, kHaarSeeds[0], kHaarSeeds[1], kHaarSeeds[2]}) {
    const auto m = twirl_model(s);
    const auto dual = dual_complementarity_check(m.V, m.B_labels, m.E_labels, m.D);
    const std::string tag = "U seed " + std::to_string(s);
    v.require(dual.pass, tag + ": dual complementarity false");
    for (const auto* alg : {&dual.A, &dual.B}) {
      v.require(block_decomposition(*alg).blocks == std::vector<Block>{{2, 1}}, tag + ": blocks not [(2,1)]");
      v.require(span_distance(*alg, OperatorAlgebra::full(2)) <= kSpanTol, tag + ": span residual");
    }
  }
}

void criterion2(Verdict& v) {
  for (std::uint64_t s : {std::uint64_t{0}, kHaarSeeds[0], kHaarSeeds[1], kHaarSeeds[2]}) {
    const auto m = twirl_model(s);
    const auto dual = dual_complementarity_check(m.V, m.B_labels, m.E_labels, m.D);
    const auto st = build_open_chain(m, 1);
    const double brute = cmi(st.psi, st.A, st.all_B(), st.C).value;
    const double formula = cmi_formula(block_decomposition(dual.A).blocks, block_decomposition(dual.B).blocks, m.D);
    const double coherent = coherent_information_route(dual.A, dual.B, m.D);
    const std::string tag = "U seed " + std::to_string(s);
    v.require(std::abs(brute - 2.0) <= kCmiTol, tag + ": brute force " + std::to_string(brute));
    v.require(std::abs(formula - 2.0) <= kCmiTol, tag + ": formula " + std::to_string(formula));
    v.require(std::abs(coherent - 2.0) <= kCmiTol, tag + ": coherent information " + std::to_string(coherent));
  }
}

void criterion3(Verdict& v) {
  const std::vector<std::size_t> ls = {3, 4, 5, 6};
  LabOptions opt;
  const std::vector<std::uint64_t> seeds(std::begin(kHaarSeeds), std::end(kHaarSeeds));
  const auto haar = ring_scan("paulitwirl:haar", ls, seeds, opt);
  for (const auto& row : haar.rows) {
    std::printf("  ring haar seed %llu l %zu S %.9f c0_fit %.9f residual %.3e\n",
                static_cast<unsigned long long>(row.seed), row.l, row.S_bits, row.c0_fit, row.residual);
  }
  for (auto s : seeds) {
    for (const auto& row : haar.rows) {
      if (row.seed != s || row.l != ls.back()) continue;
      std::ostringstream what;
      what << "seed " << s << ": c0 " << row.c0_fit << " residual " << row.residual;
      v.require(row.error.empty(), what.str() + " cap error");
      v.require(row.residual <= kFitTol && row.c0_fit > 0.0 && row.c0_fit < 2.0, what.str());
    }
  }

  const auto id = ring_scan("paulitwirl:identity", ls, {0}, opt);
  const auto tableau = *resolve_model("paulitwirl:identity", 0).stabilizer;
  for (const auto& row : id.rows) {
    LabelSet region;
    for (std::size_t k = 1; k <= row.l; ++k) {
      for (const auto& x : site_labels({"b0", "b1"}, k)) region.push_back(x);
    }
    const double exact = stabilizer_entropy(tableau, row.l, region);
    std::printf("  ring identity l %zu S %.12f gf2 %.1f\n", row.l, row.S_bits, exact);
    v.require(std::abs(row.S_bits - exact) <= kOracleTol, "identity l " + std::to_string(row.l) + ": dense vs GF(2)");
    v.require(std::abs(exact - (2.0 * static_cast<double>(row.l) - 2.0)) <= kOracleTol, "identity GF(2) entropy");
    v.require(std::abs(row.c0_fit - 2.0) <= kOracleTol, "identity c0 " + std::to_string(row.c0_fit));
  }
  const double rss = peak_rss_gb();
  v.require(rss <= 4.0, "peak memory " + std::to_string(rss) + " GB");
}

void criterion4(Verdict& v) {
  std::mt19937_64 rng(4);
  std::vector<std::pair<std::string, ChainModel>> models;
  for (int t = 0; t < 24; ++t) {
    models.emplace_back("dense " + std::to_string(t), random_dense_model(1 + t % 2, 1 + (t / 2) % 2, rng));
  }
  for (std::uint64_t s = 0; s < 12; ++s) {
    const auto c = StabilizerIsometry::random(1, 1 + s % 2, 1 + (s / 2) % 2, s);
    models.emplace_back("clifford " + std::to_string(s), ChainModel::make(c.isometry(), c.b_labels(), c.e_labels()));
  }
  for (const char* spec : {"paulitwirl:identity", "paulitwirl:haar:1", "identity_to_b", "cluster", "product_trivial"}) {
    models.emplace_back(spec, resolve_model(spec, 0).chain);
  }
  int saturated = 0;
  Tolerances tol;
  tol.saturation = kSaturationTol;
  for (const auto& [name, m] : models) {
    const auto r = saturation_check(m, tol);
    const bool eq5 = r.cmi_saturated, eq6 = r.abc_saturated, eq7 = r.ab_saturated, eq8 = r.aec_saturated;
    saturated += eq5;
    v.require(eq5 == (eq6 && eq7), name + ": CMI saturation without both mutual informations");
    v.require(eq7 == eq8, name + ": B and EC conditions differ");
  }
  v.detail << " samples " << models.size() << ", saturated " << saturated;
}

void criterion5(Verdict& v) {
  std::mt19937_64 rng(5);
  int passing = 0;
  const int channels = 60;
  for (int t = 0; t < channels; ++t) {
    const auto ch = random_channel(t, rng);
    RecoveryReport rep;
    try {
      rep = complementary_recovery_check(ch);
    } catch (const NumericalError& e) {
      v.require(false, "channel " + std::to_string(t) + ": " + e.what());
      continue;
    }
    passing += rep.pass;
    v.require(rep.complementary_in_commutant <= kSpanTol, "channel " + std::to_string(t) + ": A_Ec not in A_E'");
    v.require((rep.state_form <= kProjectionTol) == (rep.observable_form <= kProjectionTol),
              "channel " + std::to_string(t) + ": state and observable forms differ");
    v.require((rep.state_form <= kProjectionTol) == rep.span_pass, "channel " + std::to_string(t) + ": span verdict differs");
  }
  for (int t = 0; t < 100; ++t) {
    const auto alg = random_block_algebra(rng);
    v.require(span_distance(commutant(commutant(alg)), alg) <= kSpanTol, "double commutant " + std::to_string(t));
  }
  for (int t = 0; t < 100; ++t) {
    const auto alg = random_block_algebra(rng);
    const auto d = static_cast<Eigen::Index>(alg.ambient_dim());
    const Matrix rho = oracle::random_density(d, rng);
    const Matrix x = oracle::gaussian(d, d, rng);
    const Matrix a = alg.project(oracle::gaussian(d, d, rng));
    const Matrix ex = conditional_expectation(alg, x);
    const std::string tag = "conditional expectation " + std::to_string(t);
    v.require((conditional_expectation(alg, ex) - ex).cwiseAbs().maxCoeff() <= kProjectionTol, tag + ": idempotent");
    v.require((conditional_expectation(alg, Matrix::Identity(d, d)) - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() <=
                  kProjectionTol, tag + ": unital");
    v.require(std::abs(ex.trace() - x.trace()) <= kProjectionTol, tag + ": trace");
    v.require(Eigen::SelfAdjointEigenSolver<Matrix>(conditional_expectation(alg, rho)).eigenvalues().minCoeff() >=
                  -kProjectionTol, tag + ": positive");
    v.require((conditional_expectation(alg, a * x) - a * ex).cwiseAbs().maxCoeff() <= kProjectionTol,
              tag + ": bimodule");
  }
  v.detail << " channels " << channels << ", complementary recovery on " << passing;
}

void criterion6(Verdict& v) {
  LabOptions opt;
  const auto batch = stab_random_batch(50, 6, opt);
  int saturated = 0, nontrivial = 0;
  for (const auto& s : batch) {
    const std::string tag = "seed " + std::to_string(s.seed);
    v.require(s.K <= 3, tag + ": K");
    v.require(s.g_BC + s.g_E == 2 * s.K, tag + ": g_BC + g_E != 2K");
    if (!s.saturated) continue;
    ++saturated;
    nontrivial += s.nontrivial;
    v.require(s.nontrivial == (s.cmi > kSptCmiTol), tag + ": verdict vs CMI mismatch");
  }
  v.require(saturated >= 50, "only " + std::to_string(saturated) + " saturated samples");
  v.detail << " draws " << batch.size() << ", saturated " << saturated << ", nontrivial " << nontrivial;
}

void criterion7(Verdict& v) {
  const Matrix x = pauli_matrix(1);
  for (std::uint64_t s : {std::uint64_t{0}, kHaarSeeds[0], kHaarSeeds[1], kHaarSeeds[2]}) {
    const Matrix u = twirl_unitary(s);
    const auto m = twirl_model(s);
    const auto sol = logical_operators(m, x, 1, expand_region(m, 1, {"B", "C"}));
    const Matrix expect = oracle::kron(oracle::kron(x, x), u.transpose() * x * u.conjugate());
    v.require(sol.unique, "seed " + std::to_string(s) + ": n = 1 logical not unique");
    v.require((sol.particular - expect).cwiseAbs().maxCoeff() <= kLogicalTol, "seed " + std::to_string(s) + ": logical differs");
  }
  for (std::uint64_t s : kHaarSeeds) {
    const auto model = resolve_model("paulitwirl:haar:" + std::to_string(s), 0);
    v.require(!model.stabilizer.has_value(), "Haar draw is Clifford");
    const auto sol = logical_operators(model.chain, x, 2, expand_region(model.chain, 2, {"B", "C"}));
    const auto rank = operator_schmidt_rank(sol.particular, sol.support, expand_region(model.chain, 2, {"B"}));
    v.require(rank > 1, "seed " + std::to_string(s) + ": n = 2 Schmidt rank " + std::to_string(rank));
    v.detail << " seed " << s << " rank " << rank;
  }
}

}  // namespace

int main() {
  run(1, "twirl algebras A = B = M2 and dual complementarity", 5.0, criterion1);
  run(2, "CMI, formula and coherent information equal 2", 10.0, criterion2);
  run(3, "closed ring S = 2l - c0 for Haar and identity U", 600.0, criterion3);
  run(4, "saturation equivalences on random and fixed-point isometries", 0.0, criterion4);
  run(5, "complementary recovery invariants on random channels", 0.0, criterion5);
  run(6, "SPT verdict matches CMI on saturated random Cliffords", 120.0, criterion6);
  run(7, "logical operators of X", 0.0, criterion7);
  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
