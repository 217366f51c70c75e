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

#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "json.hpp"
#include "spurtee/spurtee.h"

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { stee_free_string(s); }
  nlohmann::json json() const { return nlohmann::json::parse(s); }
};

struct ModelHandle {
  stee_model* m = nullptr;
  ~ModelHandle() { stee_model_close(m); }
};

stee_options defaults() {
  stee_options o;
  stee_options_init(&o);
  return o;
}

}  // namespace

TEST(CApi, VersionAndDefaults) {
  EXPECT_STREQ(stee_version(), "0.1.0");
  const auto o = defaults();
  EXPECT_EQ(o.seed, 0u);
  EXPECT_EQ(o.cap_amplitudes, std::uint64_t{1} << 24);
  EXPECT_EQ(o.workers, 1u);
  EXPECT_DOUBLE_EQ(o.tol_cmi, 1e-9);
  EXPECT_DOUBLE_EQ(o.tol_span, 1e-8);
}

TEST(CApi, AnalyzeTwirl) {
  const auto o = defaults();
  ModelHandle h;
  ASSERT_EQ(stee_model_open("paulitwirl:identity", &o, &h.m), STEE_OK);
  Owned desc;
  ASSERT_EQ(stee_model_describe(h.m, &desc.s), STEE_OK);
  EXPECT_EQ(desc.json()["D"], 2);
  Owned out;
  ASSERT_EQ(stee_analyze(h.m, &o, &out.s), STEE_OK);
  const auto j = out.json();
  EXPECT_TRUE(j["consistent"].get<bool>());
  EXPECT_NEAR(j["formula"].get<double>(), 2.0, 1e-9);
  Owned tab;
  ASSERT_EQ(stee_model_tableau(h.m, &tab.s), STEE_OK);
  EXPECT_EQ(std::string(tab.s).rfind("K 1", 0), 0u);
}

TEST(CApi, ValidationErrors) {
  const auto o = defaults();
  stee_model* m = nullptr;
  EXPECT_EQ(stee_model_open("bogus", &o, &m), STEE_ERR_VALIDATION);
  EXPECT_EQ(m, nullptr);
  EXPECT_NE(std::string(stee_last_error()).find("unknown model"), std::string::npos);
  EXPECT_EQ(stee_model_open(nullptr, &o, &m), STEE_ERR_VALIDATION);

  ModelHandle haar;
  ASSERT_EQ(stee_model_open("paulitwirl:haar:3", &o, &haar.m), STEE_OK);
  Owned tab;
  EXPECT_EQ(stee_model_tableau(haar.m, &tab.s), STEE_ERR_VALIDATION);

  ModelHandle pt;
  ASSERT_EQ(stee_model_open("product_trivial", &o, &pt.m), STEE_OK);
  Owned lg;
  EXPECT_EQ(stee_logical(pt.m, "X", 1, "B,C", &o, &lg.s), STEE_ERR_VALIDATION);
  EXPECT_NE(std::string(stee_last_error()).find("not encodable"), std::string::npos);
}

TEST(CApi, Logical) {
  const auto o = defaults();
  ModelHandle h;
  ASSERT_EQ(stee_model_open("paulitwirl:haar:7", &o, &h.m), STEE_OK);
  Owned one, two;
  ASSERT_EQ(stee_logical(h.m, "X", 1, nullptr, &o, &one.s), STEE_OK);
  EXPECT_EQ(one.json()["operator_schmidt_rank"], 1);
  ASSERT_EQ(stee_logical(h.m, "X", 2, "B,C", &o, &two.s), STEE_OK);
  EXPECT_GT(two.json()["operator_schmidt_rank"].get<int>(), 1);
}

TEST(CApi, RingScanCsvAndCap) {
  auto o = defaults();
  const std::uint64_t ls[] = {2, 3};
  const std::uint64_t seeds[] = {0};
  Owned csv;
  ASSERT_EQ(stee_ring_scan("paulitwirl:identity", ls, 2, seeds, 1, &o, STEE_FORMAT_CSV, &csv.s), STEE_OK);
  EXPECT_EQ(std::string(csv.s).rfind("seed,l,S_bits,c0_fit,residual\n", 0), 0u);

  o.cap_amplitudes = 1 << 12;
  const std::uint64_t big[] = {2, 4};
  Owned partial;
  ASSERT_EQ(stee_ring_scan("paulitwirl:identity", big, 2, seeds, 1, &o, STEE_FORMAT_JSON, &partial.s),
            STEE_ERR_RESOURCE_CAP);
  ASSERT_NE(partial.s, nullptr);
  const auto j = partial.json();
  EXPECT_EQ(j["rows"].size(), 2u);
  EXPECT_NEAR(j["rows"][0]["S_bits"].get<double>(), 2.0, 1e-9);
  EXPECT_FALSE(j["errors"].empty());
}

TEST(CApi, Stab) {
  const auto o = defaults();
  ModelHandle h;
  ASSERT_EQ(stee_model_open("cluster", &o, &h.m), STEE_OK);
  Owned out;
  ASSERT_EQ(stee_stab(h.m, &o, &out.s), STEE_OK);
  const auto j = out.json();
  EXPECT_TRUE(j["verdict"]["nontrivial"].get<bool>());
  EXPECT_EQ(j["verdict"]["cmi_bits"], 1);

  Owned batch;
  ASSERT_EQ(stee_stab_random_batch(2, &o, &batch.s), STEE_OK);
  EXPECT_EQ(batch.json()["saturated"], 2);
}

TEST(CApi, EntropyBits) {
  const double mixed[] = {0.5, 0, 0, 0, 0, 0, 0.5, 0};
  double bits = -1;
  ASSERT_EQ(stee_entropy_bits(mixed, 2, &bits), STEE_OK);
  EXPECT_NEAR(bits, 1.0, 1e-12);
  const double skew[] = {0.5, 0, 0.1, 0, 0, 0, 0.5, 0};
  EXPECT_EQ(stee_entropy_bits(skew, 2, &bits), STEE_ERR_VALIDATION);
  const double heavy[] = {1, 0, 0, 0, 0, 0, 1, 0};
  EXPECT_EQ(stee_entropy_bits(heavy, 2, &bits), STEE_ERR_VALIDATION);
  EXPECT_EQ(stee_entropy_bits(nullptr, 2, &bits), STEE_ERR_VALIDATION);
}
