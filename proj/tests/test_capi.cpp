// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "json.hpp"
#include "spectra/spectra.h"

namespace {

using nlohmann::json;

struct StrFree {
  void operator()(char* s) const { spectra_string_free(s); }
};
using Str = std::unique_ptr<char, StrFree>;

struct RingFree {
  void operator()(spectra_ring* r) const { spectra_ring_free(r); }
};
using Ring = std::unique_ptr<spectra_ring, RingFree>;

Ring parse(const char* expr) {
  spectra_ring* r = nullptr;
  EXPECT_EQ(spectra_ring_parse(expr, &r), SPECTRA_OK) << expr << ": " << spectra_last_error();
  return Ring(r);
}

json take(char* s) {
  Str owned(s);
  return json::parse(owned.get());
}

const char* kSmallConfig =
    R"({"zmod_max":8,"gf_list":[[2,2]],"product_arity_max":2,"order_cap":16,"sym_members":["Z","F2[x]"],"sample_seed":3,"sample_count":2})";

TEST(CApi, VersionAndIds) {
  EXPECT_STREQ(spectra_version(), "1.0.0");
  const std::string ids = spectra_theorem_ids();
  EXPECT_EQ(ids.rfind("min_separation,", 0), 0u);
  EXPECT_NE(ids.find("theorem1"), std::string::npos);
  EXPECT_EQ(ids.substr(ids.size() - std::strlen("cross_validation")), "cross_validation");
}

TEST(CApi, ParseErrors) {
  spectra_ring* r = nullptr;
  EXPECT_EQ(spectra_ring_parse("Z/(3", &r), SPECTRA_PARSE);
  EXPECT_EQ(r, nullptr);
  EXPECT_NE(std::string(spectra_last_error()).find("position 2"), std::string::npos);
  EXPECT_EQ(spectra_ring_parse("loc(Z,(6))", &r), SPECTRA_SEMANTIC);
  EXPECT_NE(std::string(spectra_last_error()).find("not prime"), std::string::npos);
  EXPECT_EQ(spectra_ring_parse(nullptr, &r), SPECTRA_INVALID_ARGUMENT);
  EXPECT_EQ(spectra_ring_parse("Z", nullptr), SPECTRA_INVALID_ARGUMENT);
}

TEST(CApi, ErrorIsClearedOnSuccess) {
  spectra_ring* r = nullptr;
  spectra_ring_parse("Z/(3", &r);
  const Ring ok = parse("Z/12");
  EXPECT_STREQ(spectra_last_error(), "");
}

TEST(CApi, RingHandle) {
  const Ring r = parse("Z x GF(4)");
  EXPECT_STREQ(spectra_ring_expr(r.get()), "Z x GF(2^2)");
  EXPECT_EQ(spectra_ring_is_finite(r.get()), 0);
  EXPECT_EQ(spectra_ring_is_finite(parse("Z/12 x GF(2)").get()), 1);
  spectra_ring_free(nullptr);
}

TEST(CApi, InfoZ4) {
  char* out = nullptr;
  ASSERT_EQ(spectra_ring_info_json(parse("Z/4").get(), &out), SPECTRA_OK);
  const json j = take(out);
  EXPECT_EQ(j["order"], 4);
  EXPECT_EQ(j["absolutely_flat"], false);
  EXPECT_EQ(j["witness"], "2");
  EXPECT_EQ(j["nilradical_elements"], json({"0", "2"}));
}

TEST(CApi, InfoSymbolic) {
  char* out = nullptr;
  ASSERT_EQ(spectra_ring_info_json(parse("Z").get(), &out), SPECTRA_OK);
  const json j = take(out);
  EXPECT_EQ(j["order"], "infinite");
  EXPECT_EQ(j["absolutely_flat"], false);
  EXPECT_FALSE(j["witness"].is_null());
  ASSERT_EQ(spectra_ring_info_json(parse("Z/30").get(), &out), SPECTRA_OK);
  EXPECT_EQ(take(out)["absolutely_flat"], true);
}

TEST(CApi, SpecZ6Patch) {
  char* out = nullptr;
  ASSERT_EQ(spectra_spec_json(parse("Z/6").get(), "patch", &out), SPECTRA_OK);
  const json j = take(out);
  EXPECT_EQ(j["points"].size(), 2u);
  EXPECT_EQ(j["opens_count"], 4);
  EXPECT_EQ(j["hausdorff"], true);
  EXPECT_EQ(spectra_spec_json(parse("Z/6").get(), "discrete", &out), SPECTRA_INVALID_ARGUMENT);
}

TEST(CApi, SpecSymbolic) {
  char* out = nullptr;
  ASSERT_EQ(spectra_spec_json(parse("Z").get(), "flat", &out), SPECTRA_OK);
  const json j = take(out);
  EXPECT_EQ(j["engine"], "symbolic");
  EXPECT_EQ(j["minimal"], json({"(0)"}));
}

TEST(CApi, LocalizeZ12AtTwo) {
  char* out = nullptr;
  ASSERT_EQ(spectra_localize_json(parse("Z/12").get(), "2", &out), SPECTRA_OK);
  const json j = take(out);
  EXPECT_EQ(j["result_order"], 6);
  EXPECT_EQ(j["relations_hold"], true);
  ASSERT_EQ(spectra_localize_json(parse("Z/12").get(), "all", &out), SPECTRA_OK);
  EXPECT_EQ(take(out)["result_absolutely_flat"], true);
  EXPECT_NE(spectra_localize_json(parse("Z").get(), "2", &out), SPECTRA_OK);
}

TEST(CApi, Closure) {
  char* out = nullptr;
  ASSERT_EQ(spectra_closure_json(parse("Z/12").get(), "(2)", "zariski", &out), SPECTRA_OK);
  EXPECT_EQ(take(out)["closure"], json({"(2)"}));
  ASSERT_EQ(spectra_closure_json(parse("Z").get(), "(2);(3)", "patch", &out), SPECTRA_OK);
  EXPECT_EQ(take(out)["verdict"]["agree"], true);
  EXPECT_EQ(spectra_closure_json(parse("Z").get(), "(4)", "flat", &out), SPECTRA_NOT_PRIME);
}

TEST(CApi, VerifyUnknownTheorem) {
  char* report = nullptr;
  int agree = 0;
  EXPECT_EQ(spectra_verify("theorem9", nullptr, 0, 0, 1, &report, &agree), SPECTRA_UNKNOWN_THEOREM);
  EXPECT_EQ(report, nullptr);
}

TEST(CApi, VerifyBadConfig) {
  char* report = nullptr;
  int agree = 0;
  EXPECT_EQ(spectra_verify("all", "{\"zmod\":3}", 0, 0, 1, &report, &agree), SPECTRA_PARSE);
  EXPECT_EQ(spectra_verify("all", "{not json", 0, 0, 1, &report, &agree), SPECTRA_PARSE);
  EXPECT_EQ(spectra_verify("all", "{\"zmod_max\":0}", 0, 0, 1, &report, &agree), SPECTRA_INVALID_ARGUMENT);
}

TEST(CApi, VerifyAndRecheck) {
  char* report = nullptr;
  int agree = 0;
  ASSERT_EQ(spectra_verify("all", kSmallConfig, 0, 0, 2, &report, &agree), SPECTRA_OK) << spectra_last_error();
  const Str owned(report);
  EXPECT_EQ(agree, 1);
  std::istringstream in(report);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    const json v = json::parse(line);
    EXPECT_EQ(v["agree"], true) << line;
    ++lines;
  }
  EXPECT_GT(lines, 50u);

  char* summary = nullptr;
  int ok = 0;
  ASSERT_EQ(spectra_recheck(report, &summary, &ok), SPECTRA_OK);
  const json s = take(summary);
  EXPECT_EQ(ok, 1);
  EXPECT_EQ(s["verdicts"], lines);
  EXPECT_GT(s["certificates"].get<int>(), 0);
  EXPECT_EQ(s["disagreeing_verdicts"], 0);
}

TEST(CApi, SeedChangesOnlySampledWork) {
  char *a = nullptr, *b = nullptr, *c = nullptr;
  int agree = 0;
  ASSERT_EQ(spectra_verify("theorem1", kSmallConfig, 5, 1, 1, &a, &agree), SPECTRA_OK);
  ASSERT_EQ(spectra_verify("theorem1", kSmallConfig, 5, 1, 3, &b, &agree), SPECTRA_OK);
  ASSERT_EQ(spectra_verify("theorem1", kSmallConfig, 6, 1, 1, &c, &agree), SPECTRA_OK);
  const Str sa(a), sb(b), sc(c);
  EXPECT_STREQ(a, b);
  EXPECT_STRNE(a, c);
}

TEST(CApi, RecheckCatchesTampering) {
  char* report = nullptr;
  int agree = 0;
  ASSERT_EQ(spectra_verify("min_separation", kSmallConfig, 0, 0, 1, &report, &agree), SPECTRA_OK);
  std::string text(report);
  spectra_string_free(report);
  const std::size_t at = text.find("\"f\":");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 4, "\"f\":77777,\"g\":");
  char* summary = nullptr;
  int ok = 1;
  ASSERT_EQ(spectra_recheck(text.c_str(), &summary, &ok), SPECTRA_OK);
  const json s = take(summary);
  EXPECT_EQ(ok, 0);
  EXPECT_FALSE(s["failures"].empty());

  ASSERT_EQ(spectra_recheck("not json\n", &summary, &ok), SPECTRA_OK);
  EXPECT_EQ(ok, 0);
  spectra_string_free(summary);
}

TEST(CApi, VerifyCertificate) {
  int ok = 0;
  char* reason = nullptr;
  ASSERT_EQ(spectra_verify_certificate(
                R"({"engine":"symbolic","kind":"separation_witness","payload":{"a":2,"f":-5,"g":3,"maximal":5,"type":"max"},"ring":"Z"})",
                &ok, &reason),
            SPECTRA_OK);
  EXPECT_EQ(ok, 1);
  spectra_string_free(reason);
  ASSERT_EQ(spectra_verify_certificate(
                R"({"engine":"symbolic","kind":"separation_witness","payload":{"a":2,"f":-4,"g":3,"maximal":5,"type":"max"},"ring":"Z"})",
                &ok, &reason),
            SPECTRA_OK);
  EXPECT_EQ(ok, 0);
  ASSERT_NE(reason, nullptr);
  EXPECT_GT(std::strlen(reason), 0u);
  spectra_string_free(reason);
  EXPECT_EQ(spectra_verify_certificate("{}", &ok, nullptr), SPECTRA_PARSE);
}

TEST(CApi, DefaultConfig) {
  char* out = nullptr;
  ASSERT_EQ(spectra_default_config_json(&out), SPECTRA_OK);
  const json j = take(out);
  EXPECT_EQ(j["zmod_max"], 60);
  EXPECT_EQ(j["order_cap"], 64);
}

}  // namespace
