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

#include "spurtee/spurtee.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "spurtee/lab.hpp"

struct stee_model {
  spurtee::Model model;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

spurtee::LabOptions lab_options(const stee_options* o) {
  stee_options d;
  stee_options_init(&d);
  if (!o) o = &d;
  spurtee::LabOptions lab;
  lab.seed = o->seed;
  lab.caps.max_amplitudes = o->cap_amplitudes;
  lab.workers = o->workers ? o->workers : 1;
  lab.tol.rank = o->tol_rank;
  lab.tol.span = o->tol_span;
  lab.tol.conditional = o->tol_conditional;
  lab.tol.saturation = o->tol_saturation;
  lab.tol.cmi = o->tol_cmi;
  lab.tol.logical = o->tol_logical;
  return lab;
}

template <typename F>
stee_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const spurtee::ValidationError& e) {
    set_error(e.what());
    return STEE_ERR_VALIDATION;
  } catch (const spurtee::ResourceCapError& e) {
    set_error(e.what());
    return STEE_ERR_RESOURCE_CAP;
  } catch (const spurtee::NumericalError& e) {
    set_error(e.what());
    return STEE_ERR_NUMERICAL;
  } catch (const nlohmann::json::exception& e) {
    set_error(std::string("invalid JSON input: ") + e.what());
    return STEE_ERR_VALIDATION;
  } catch (const std::exception& e) {
    set_error(e.what());
    return STEE_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return STEE_ERR_INTERNAL;
  }
}

stee_status require(bool ok, const char* what) {
  if (ok) return STEE_OK;
  set_error(what);
  return STEE_ERR_VALIDATION;
}

std::vector<std::string> split_csv(const char* s) {
  std::vector<std::string> out;
  if (!s) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

}  // namespace

extern "C" {

void stee_options_init(stee_options* options) {
  if (!options) return;
  const spurtee::Tolerances t;
  options->seed = 0;
  options->cap_amplitudes = spurtee::ResourceCaps{}.max_amplitudes;
  options->workers = 1;
  options->tol_rank = t.rank;
  options->tol_span = t.span;
  options->tol_conditional = t.conditional;
  options->tol_saturation = t.saturation;
  options->tol_cmi = t.cmi;
  options->tol_logical = t.logical;
}

stee_status stee_model_open(const char* spec, const stee_options* options, stee_model** out) {
  if (auto st = require(spec && out, "spec and out must be non-null")) return st;
  *out = nullptr;
  return guarded([&] {
    const auto lab = lab_options(options);
    auto* m = new stee_model{spurtee::resolve_model(spec, lab.seed, lab.caps)};
    *out = m;
    return STEE_OK;
  });
}

void stee_model_close(stee_model* model) { delete model; }

stee_status stee_model_describe(const stee_model* model, char** json_out) {
  if (auto st = require(model && json_out, "model and json_out must be non-null")) return st;
  return guarded([&] {
    const auto& cm = model->model.chain;
    spurtee::Json j{{"model", model->model.spec},
                    {"description", model->model.description},
                    {"D", cm.D},
                    {"B", cm.B_labels},
                    {"E", cm.E_labels},
                    {"clifford", model->model.stabilizer.has_value()},
                    {"isometry", spurtee::isometry_to_json(cm.V, cm.B_labels, cm.E_labels)}};
    *json_out = dup_string(j.dump(2));
    return STEE_OK;
  });
}

stee_status stee_model_tableau(const stee_model* model, char** text_out) {
  if (auto st = require(model && text_out, "model and text_out must be non-null")) return st;
  return guarded([&] {
    if (!model->model.stabilizer) {
      throw spurtee::ValidationError("model '" + model->model.spec + "' is not a Clifford isometry");
    }
    *text_out = dup_string(model->model.stabilizer->serialize());
    return STEE_OK;
  });
}

stee_status stee_analyze(const stee_model* model, const stee_options* options, char** json_out) {
  if (auto st = require(model && json_out, "model and json_out must be non-null")) return st;
  return guarded([&] {
    *json_out = dup_string(spurtee::analyze(model->model, lab_options(options)).dump(2));
    return STEE_OK;
  });
}

stee_status stee_ring_scan(const char* spec, const uint64_t* ls, size_t n_ls, const uint64_t* seeds,
                           size_t n_seeds, const stee_options* options, stee_format format, char** out) {
  if (auto st = require(spec && out && (ls || !n_ls) && (seeds || !n_seeds), "null argument to ring scan")) {
    return st;
  }
  if (auto st = require(n_ls > 0 && n_seeds > 0, "ring scan needs at least one length and one seed")) return st;
  return guarded([&] {
    const auto lab = lab_options(options);
    std::vector<std::size_t> lv;
    for (size_t i = 0; i < n_ls; ++i) {
      if (ls[i] < 1) throw spurtee::ValidationError("ring length must be at least 1");
      lv.push_back(static_cast<std::size_t>(ls[i]));
    }
    const std::vector<std::uint64_t> sv(seeds, seeds + n_seeds);
    const auto res = spurtee::ring_scan(spec, lv, sv, lab);
    *out = dup_string(format == STEE_FORMAT_CSV ? spurtee::scan_csv(res) : spurtee::scan_json(res, spec, lab).dump(2));
    if (!res.errors.empty()) {
      std::string msg;
      for (const auto& e : res.errors) msg += (msg.empty() ? "" : "\n") + e;
      set_error(msg);
      return STEE_ERR_RESOURCE_CAP;
    }
    return STEE_OK;
  });
}

stee_status stee_logical(const stee_model* model, const char* op, uint64_t n, const char* support_csv,
                         const stee_options* options, char** json_out) {
  if (auto st = require(model && op && json_out, "model, op and json_out must be non-null")) return st;
  if (auto st = require(n >= 1, "chain length must be at least 1")) return st;
  return guarded([&] {
    auto tokens = split_csv(support_csv);
    if (tokens.empty()) tokens = {"B", "C"};
    *json_out = dup_string(
        spurtee::logical_report(model->model, op, static_cast<std::size_t>(n), tokens, lab_options(options)).dump(2));
    return STEE_OK;
  });
}

stee_status stee_stab(const stee_model* model, const stee_options* options, char** json_out) {
  if (auto st = require(model && json_out, "model and json_out must be non-null")) return st;
  return guarded([&] {
    *json_out = dup_string(spurtee::stab_report(model->model, lab_options(options)).dump(2));
    return STEE_OK;
  });
}

stee_status stee_stab_random_batch(uint64_t saturated_target, const stee_options* options, char** json_out) {
  if (auto st = require(json_out != nullptr, "json_out must be non-null")) return st;
  return guarded([&] {
    const auto lab = lab_options(options);
    const auto samples = spurtee::stab_random_batch(static_cast<std::size_t>(saturated_target), lab.seed, lab);
    spurtee::Json arr = spurtee::Json::array();
    std::size_t saturated = 0, agree = 0;
    for (const auto& s : samples) {
      arr.push_back(spurtee::to_json(s));
      if (s.saturated) {
        ++saturated;
        if (s.agree) ++agree;
      }
    }
    spurtee::Json j{{"seed", lab.seed},
                    {"draws", samples.size()},
                    {"saturated", saturated},
                    {"saturated_agree", agree},
                    {"samples", arr}};
    *json_out = dup_string(j.dump(2));
    return STEE_OK;
  });
}

stee_status stee_entropy_bits(const double* interleaved, size_t dim, double* bits_out) {
  if (auto st = require(interleaved && bits_out && dim > 0, "null or empty matrix")) return st;
  return guarded([&] {
    spurtee::Matrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (size_t r = 0; r < dim; ++r) {
      for (size_t c = 0; c < dim; ++c) {
        const double* p = interleaved + 2 * (r * dim + c);
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = spurtee::Complex(p[0], p[1]);
      }
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10) throw spurtee::ValidationError("matrix is not Hermitian");
    if (std::abs(m.trace() - spurtee::Complex(1.0, 0.0)) > 1e-10) {
      throw spurtee::ValidationError("matrix does not have unit trace");
    }
    *bits_out = spurtee::von_neumann_entropy(m);
    return STEE_OK;
  });
}

const char* stee_last_error(void) { return g_last_error.c_str(); }

void stee_free_string(char* s) { std::free(s); }

const char* stee_version(void) { return "0.1.0"; }

}  // extern "C"
