// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "spectra/corpus.hpp"
#include "spectra/error.hpp"
#include "spectra/ideal_lattice.hpp"

namespace spectra {
namespace {

using nlohmann::json;

ErrorCode code_of(const json& j) {
  try {
    config_from_json(j);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << j.dump();
  return ErrorCode::kIo;
}

std::set<std::string> exprs(const Corpus& c) {
  std::set<std::string> out;
  for (const CorpusItem& i : c.items) out.insert(i.expr);
  return out;
}

TEST(Config, JsonRoundTrip) {
  CorpusConfig c;
  c.zmod_max = 17;
  c.gf_list = {{3, 3}};
  c.sym_members = {"Z", "F5[x]"};
  c.sample_seed = 99;
  EXPECT_EQ(config_from_json(to_json(c)), c);
  EXPECT_EQ(config_from_json(json::object()), CorpusConfig{});
}

TEST(Config, Errors) {
  EXPECT_EQ(code_of({{"zmod_maximum", 3}}), ErrorCode::kParse);
  EXPECT_EQ(code_of({{"zmod_max", "ten"}}), ErrorCode::kParse);
  EXPECT_EQ(code_of(json::array()), ErrorCode::kParse);
  EXPECT_EQ(code_of({{"zmod_max", 0}}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of({{"sample_count", 0}}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of({{"order_cap", 300}}), ErrorCode::kInvalidArgument);
}

TEST(Corpus, DefaultContents) {
  const Corpus c = generate_corpus(CorpusConfig{});
  const auto names = exprs(c);
  for (int n = 1; n <= 60; ++n) EXPECT_TRUE(names.count("Z/" + std::to_string(n))) << n;
  EXPECT_TRUE(names.count("GF(2^2)"));
  EXPECT_TRUE(names.count("Z"));
  EXPECT_TRUE(std::any_of(names.begin(), names.end(), [](const std::string& s) { return s.find(" x ") != std::string::npos; }));
  for (const CorpusItem& i : c.items) {
    EXPECT_NE(!i.finite, !i.sym) << i.expr;
    if (i.finite) {
      EXPECT_LE(i.finite->order(), 64u) << i.expr;
    }
  }
  EXPECT_GE(c.finite_count(), 150u);
}

TEST(Corpus, TinyConfig) {
  CorpusConfig cfg;
  cfg.zmod_max = 2;
  cfg.gf_list.clear();
  cfg.product_arity_max = 2;
  cfg.order_cap = 4;
  cfg.sym_members.clear();
  const Corpus c = generate_corpus(cfg);
  // Z/1, Z/2 and Z/2 x Z/2; its proper quotients are all Z/2.
  EXPECT_EQ(c.items.size(), 3u);
  EXPECT_EQ(c.finite_count(), 3u);
}

TEST(Corpus, CapSkipsLargeRings) {
  CorpusConfig cfg;
  cfg.zmod_max = 6;
  cfg.gf_list = {{2, 3}};
  cfg.product_arity_max = 1;
  cfg.order_cap = 4;
  cfg.sym_members = {"Z", "loc(Z,(6))"};
  const Corpus c = generate_corpus(cfg);
  for (const CorpusItem& i : c.items)
    if (i.finite) {
      EXPECT_LE(i.finite->order(), 4u);
    }
  // Z/5, Z/6, GF(2^3) and the non-prime localization.
  EXPECT_EQ(c.skipped.size(), 4u);
  EXPECT_TRUE(exprs(c).count("Z"));
}

TEST(Corpus, QuotientsAreNewUpToIsomorphism) {
  CorpusConfig cfg;
  cfg.zmod_max = 12;
  cfg.gf_list.clear();
  cfg.product_arity_max = 1;
  cfg.sym_members.clear();
  // Every quotient of Z/n is some Z/d, already present.
  EXPECT_EQ(generate_corpus(cfg).items.size(), 12u);
}

TEST(Corpus, Deterministic) {
  const Corpus a = generate_corpus(CorpusConfig{}), b = generate_corpus(CorpusConfig{});
  ASSERT_EQ(a.items.size(), b.items.size());
  for (std::size_t i = 0; i < a.items.size(); ++i) EXPECT_EQ(a.items[i].expr, b.items[i].expr);
}

TEST(Fingerprint, InvariantUnderIsomorphism) {
  EXPECT_EQ(ring_fingerprint(*make_zmod(6)), ring_fingerprint(*product({make_zmod(2), make_zmod(3)})));
  EXPECT_NE(ring_fingerprint(*make_zmod(4)), ring_fingerprint(*product({make_zmod(2), make_zmod(2)})));
  EXPECT_NE(ring_fingerprint(*make_zmod(4)), ring_fingerprint(*make_gf(2, 2)));
}

}  // namespace
}  // namespace spectra
