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

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spurtee/spurtee.h"

namespace {

constexpr int kExitNumerical = 4;

int exit_code(stee_status st) {
  switch (st) {
    case STEE_OK:
      return 0;
    case STEE_ERR_VALIDATION:
      return 2;
    case STEE_ERR_RESOURCE_CAP:
      return 3;
    case STEE_ERR_NUMERICAL:
      return kExitNumerical;
    default:
      return 1;
  }
}

const char* hint(stee_status st) {
  switch (st) {
    case STEE_ERR_VALIDATION:
      return "check the model spec and input files";
    case STEE_ERR_RESOURCE_CAP:
      return "lower --lmax or raise --cap-amplitudes";
    case STEE_ERR_NUMERICAL:
      return "try loosening the --tol-* thresholds";
    default:
      return nullptr;
  }
}

int fail(stee_status st) {
  std::cerr << "error: " << stee_last_error() << '\n';
  if (const char* h = hint(st)) std::cerr << "hint: " << h << '\n';
  return exit_code(st);
}

void emit(char* text) {
  std::fputs(text, stdout);
  const std::size_t n = std::strlen(text);
  if (n == 0 || text[n - 1] != '\n') std::fputc('\n', stdout);
  stee_free_string(text);
}

struct Model {
  stee_model* handle = nullptr;
  ~Model() { stee_model_close(handle); }
};

}  // namespace

int main(int argc, char** argv) {
  stee_options opt;
  stee_options_init(&opt);

  CLI::App app{"spurtee: boundary-state entanglement and operator-algebra lab"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string model = "paulitwirl:identity";
  std::string out = "json";
  app.add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  app.add_option("--workers", opt.workers, "worker threads for scans")->capture_default_str();
  app.add_option("--cap-amplitudes", opt.cap_amplitudes, "largest dense object, in complex amplitudes")
      ->capture_default_str();
  app.add_option("--tol-rank", opt.tol_rank)->capture_default_str();
  app.add_option("--tol-span", opt.tol_span)->capture_default_str();
  app.add_option("--tol-conditional", opt.tol_conditional)->capture_default_str();
  app.add_option("--tol-saturation", opt.tol_saturation)->capture_default_str();
  app.add_option("--tol-cmi", opt.tol_cmi)->capture_default_str();
  app.add_option("--tol-logical", opt.tol_logical)->capture_default_str();

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", model,
                    "paulitwirl:identity | paulitwirl:haar[:seed] | paulitwirl:matrix:<file> | product_trivial | "
                    "identity_to_b | cluster | stabilizer:<file> | custom:<file>")
        ->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "full algebraic and entropic report");
  add_model(analyze);

  auto* scan = app.add_subcommand("ring-scan", "closed-ring boundary entropies S(rho_B) versus l");
  add_model(scan);
  std::size_t lmin = 3, lmax = 6;
  std::vector<std::uint64_t> seeds;
  scan->add_option("--lmin", lmin)->capture_default_str()->check(CLI::PositiveNumber);
  scan->add_option("--lmax", lmax)->capture_default_str()->check(CLI::PositiveNumber);
  scan->add_option("--seeds", seeds, "scan seeds (default: --seed)")->delimiter(',');
  scan->add_option("--out", out, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto* logical = app.add_subcommand("logical", "logical operator on a support region");
  add_model(logical);
  std::string op = "X";
  std::uint64_t n = 1;
  std::string support = "B,C";
  logical->add_option("--op", op, "Pauli string or file:<matrix json>")->capture_default_str();
  logical->add_option("-n,--sites", n, "chain length")->capture_default_str()->check(CLI::PositiveNumber);
  logical->add_option("--support", support, "comma list of B, E, C, B_k, E_k or factor labels")
      ->capture_default_str();

  auto* stab = app.add_subcommand("stab", "stabilizer SPT verdict for a Clifford model");
  add_model(stab);
  bool tableau_only = false;
  std::uint64_t random_count = 0;
  stab->add_flag("--tableau", tableau_only, "print the model's tableau and exit");
  stab->add_option("--random", random_count, "draw random Clifford isometries until this many pass the saturation pre-filter");

  CLI11_PARSE(app, argc, argv);

  char* text = nullptr;
  stee_status st = STEE_OK;

  if (*scan) {
    if (lmin > lmax) {
      std::cerr << "error: --lmin exceeds --lmax\n";
      return 2;
    }
    std::vector<std::uint64_t> ls;
    for (std::size_t l = lmin; l <= lmax; ++l) ls.push_back(l);
    if (seeds.empty()) seeds.push_back(opt.seed);
    st = stee_ring_scan(model.c_str(), ls.data(), ls.size(), seeds.data(), seeds.size(), &opt,
                        out == "csv" ? STEE_FORMAT_CSV : STEE_FORMAT_JSON, &text);
    if (text) emit(text);
    return st == STEE_OK ? 0 : fail(st);
  }

  if (*stab && random_count > 0) {
    st = stee_stab_random_batch(random_count, &opt, &text);
    if (st != STEE_OK) return fail(st);
    emit(text);
    return 0;
  }

  Model m;
  st = stee_model_open(model.c_str(), &opt, &m.handle);
  if (st != STEE_OK) return fail(st);

  if (*analyze) {
    st = stee_analyze(m.handle, &opt, &text);
    if (st != STEE_OK) return fail(st);
    const bool consistent = std::strstr(text, "\"consistent\": true") != nullptr;
    emit(text);
    if (!consistent) {
      std::cerr << "error: analysis routes disagree; see the residuals in the report\n";
      return kExitNumerical;
    }
    return 0;
  }
  if (*logical) {
    st = stee_logical(m.handle, op.c_str(), n, support.c_str(), &opt, &text);
  } else if (tableau_only) {
    st = stee_model_tableau(m.handle, &text);
  } else {
    st = stee_stab(m.handle, &opt, &text);
  }
  if (st != STEE_OK) return fail(st);
  emit(text);
  return 0;
}
