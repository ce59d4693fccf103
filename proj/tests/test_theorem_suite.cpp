// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "spectra/error.hpp"
#include "spectra/ideal_lattice.hpp"
#include "spectra/parser.hpp"
#include "spectra/theorems.hpp"

namespace spectra {
namespace {

using nlohmann::json;

const json& side(const TheoremVerdict& v, const std::string& name) {
  for (const Side& s : v.sides)
    if (s.name == name) return s.value;
  static const json missing;
  ADD_FAILURE() << "no side " << name << " in " << v.theorem_id;
  return missing;
}

void expect_replays(const TheoremVerdict& v) {
  for (const Certificate& c : v.witnesses) {
    const CheckResult res = verify_certificate(c);
    EXPECT_TRUE(res.ok) << v.theorem_id << " on " << v.ring << ": " << res.reason << "\n" << to_json(c).dump();
  }
}

SymElem el(const SymPtr& r, const std::string& s) { return parse_element(*r, s); }

// Separation lemmas -------------------------------------------------------------------------

TEST(MinSeparation, Z12Example) {
  const RingPtr r = make_zmod(12);
  const Certificate c = min_separation_witness(r, principal_ideal(r, 2), {4});
  EXPECT_EQ(c.payload.at("f"), 3);
  EXPECT_EQ(c.payload.at("N"), 2);
  EXPECT_EQ((3 * 4 * 4) % 12, 0);
  EXPECT_TRUE(verify_certificate(c).ok);
}

TEST(MinSeparation, SymbolicPathGivesSameWitness) {
  const SymPtr r = parse_ring_expr("Z/12");
  const Certificate c = min_separation_witness(principal_prime(r, mpz_class(2)), {el(r, "4")});
  EXPECT_EQ(c.payload.at("f"), 3);
  EXPECT_EQ(c.payload.at("N"), 2);
  EXPECT_TRUE(verify_certificate(c).ok);
}

TEST(MinSeparation, EmptyCoverGivesOne) {
  const RingPtr r = make_zmod(18);
  const Certificate c = min_separation_witness(r, principal_ideal(r, 3), {});
  EXPECT_EQ(c.payload.at("f"), 1);
  const SymPtr z = parse_ring_expr("Z");
  EXPECT_EQ(min_separation_witness(zero_prime(z), {}).payload.at("f"), 1);
}

TEST(MinSeparation, Errors) {
  const RingPtr r = make_zmod(12);
  EXPECT_THROW(min_separation_witness(r, principal_ideal(r, 2), {3}), Error);  // (2) lies in D(3)
  EXPECT_THROW(min_separation_witness(r, principal_ideal(r, 6), {}), Error);   // not prime
  const SymPtr z = parse_ring_expr("Z");
  EXPECT_THROW(min_separation_witness(principal_prime(z, mpz_class(2)), {}), Error);  // not minimal
}

TEST(MinSeparation, ExhaustiveOracleOnSmallRings) {
  // Oracle: D(f) and D(g) are disjoint iff fg is nilpotent.
  for (std::size_t n : {8u, 12u, 18u, 24u, 36u, 48u}) {
    const RingPtr r = make_zmod(n);
    for (const Ideal& p : min_spec(r).primes) {
      const std::vector<Elem> cover = p.elements();
      const Certificate c = min_separation_witness(r, p, cover);
      const Elem f = c.payload.at("f").get<Elem>();
      EXPECT_FALSE(p.contains(f));
      for (Elem g : cover) EXPECT_TRUE(r->is_nilpotent(r->mul(f, g)));
    }
  }
}

TEST(MaxSeparation, IntegersExample) {
  const SymPtr z = parse_ring_expr("Z");
  const Certificate c = max_separation_witness(principal_prime(z, mpz_class(5)), el(z, "3"));
  EXPECT_EQ(c.payload.at("a"), 2);
  EXPECT_EQ(c.payload.at("f"), -5);
  EXPECT_TRUE(verify_certificate(c).ok);
}

TEST(MaxSeparation, Z12Example) {
  const RingPtr r = make_zmod(12);
  const Certificate c = max_separation_witness(r, principal_ideal(r, 3), 4);
  EXPECT_EQ(c.payload.at("a"), 1);
  EXPECT_EQ(c.payload.at("f"), 9);
  const SpecSet s = spec(r);
  EXPECT_EQ(vanishing_set(s, 9) & vanishing_set(s, 4), 0u);
  EXPECT_TRUE(verify_certificate(c).ok);
  EXPECT_THROW(max_separation_witness(r, principal_ideal(r, 3), 6), Error);
}

TEST(MaxSeparation, UnitInLocalization) {
  const SymPtr r = parse_ring_expr("loc(Z,(7))");
  const Certificate c = max_separation_witness(max_spectrum(r).sample(1).at(0), el(r, "3"));
  EXPECT_TRUE(verify_certificate(c).ok);
}

TEST(Separation, CheckersAgreeOnCatalog) {
  for (const char* s : {"Z", "F2[x]", "Z x Z", "loc(Z,(3))", "Z/12 x loc(Z,(7))", "F2[x]/(x^3+x)"}) {
    const SymPtr r = parse_ring_expr(s);
    for (const TheoremVerdict& v : {check_min_separation(r, 7, 5), check_max_separation(r, 7, 5)}) {
      EXPECT_TRUE(v.agree) << v.to_json().dump();
      expect_replays(v);
    }
  }
}

// Subspace separation -------------------------------------------------------------------------

TEST(Hausdorff, Z6Finite) {
  const TheoremVerdict v = check_min_hausdorff(make_zmod(6));
  EXPECT_TRUE(v.agree);
  expect_replays(v);
  EXPECT_TRUE(check_max_flat_hausdorff(make_zmod(6)).agree);
}

TEST(Hausdorff, ZxZTwoMinimalPoints) {
  const SymPtr r = parse_ring_expr("Z x Z");
  const TheoremVerdict v = check_min_hausdorff(r, 3, 5);
  EXPECT_TRUE(v.agree) << v.to_json().dump();
  expect_replays(v);
  EXPECT_EQ(min_primes(r).size(), 2u);
  // D((1,0)) and D((0,1)) separate them.
  const auto mins = min_primes(r);
  EXPECT_NE(contains(mins[0], el(r, "1,0")), contains(mins[1], el(r, "1,0")));
}

TEST(Hausdorff, MaxOfZSampled) {
  const TheoremVerdict v = check_max_flat_hausdorff(parse_ring_expr("Z"), 5, 5);
  EXPECT_TRUE(v.agree);
  EXPECT_EQ(side(v, "sampled_points"), 5);
  expect_replays(v);
}

// Flat compactness of Max ---------------------------------------------------------

TEST(Theorem1, Z12) {
  const TheoremVerdict v = check_theorem1(make_zmod(12));
  EXPECT_TRUE(v.agree);
  EXPECT_EQ(side(v, "max_flat_compact"), true);
  EXPECT_EQ(side(v, "quotient_absolutely_flat"), true);
  expect_replays(v);
  // f = 2 gives b = 2: 2 - 2*4 = -6 in (6).
  bool found = false;
  for (const Certificate& c : v.witnesses)
    if (c.payload.contains("pairs") && c.payload.value("method", "") == "modulo_ideal")
      for (const json& p : c.payload["pairs"])
        if (p["f"] == 2) {
          EXPECT_EQ(p["b"], 2);
          found = true;
        }
  EXPECT_TRUE(found);
}

TEST(Theorem1, IntegersAndPolynomials) {
  for (const char* s : {"Z", "F2[x]", "F3[x]"}) {
    const TheoremVerdict v = check_theorem1(parse_ring_expr(s), 1, 5);
    EXPECT_TRUE(v.agree) << s;
    EXPECT_EQ(side(v, "max_flat_compact"), false);
    EXPECT_EQ(side(v, "quotient_absolutely_flat"), false);
    expect_replays(v);
  }
}

TEST(Theorem1, AllQuotientsAndLocalizations) {
  std::vector<std::string> rings;
  for (int n = 1; n <= 100; ++n) rings.push_back("Z/" + std::to_string(n));
  for (int p : {2, 3, 5, 7, 11, 13}) rings.push_back("loc(Z,(" + std::to_string(p) + "))");
  rings.insert(rings.end(), {"Z x loc(Z,(5))", "loc(Z,(2)) x loc(Z,(3)) x Z/4", "F2[x] x Z/6"});
  for (const std::string& s : rings) {
    const TheoremVerdict v = check_theorem1(parse_ring_expr(s), 2, 3);
    EXPECT_TRUE(v.agree) << v.to_json().dump();
    expect_replays(v);
  }
}

TEST(Theorem1, FiniteRingsOracle) {
  // Finite rings have finite Max, hence compact; R/J(R) is a product of fields.
  for (std::size_t n = 1; n <= 60; ++n) {
    const TheoremVerdict v = check_theorem1(make_zmod(n));
    EXPECT_TRUE(v.agree);
    EXPECT_EQ(side(v, "max_flat_compact"), true);
  }
}

// Patch closure --------------------------------------------------------------------------------

TEST(PatchClosure, IntegersTwoPrimes) {
  const SymPtr z = parse_ring_expr("Z");
  const TheoremVerdict v = check_patch_closure(z, {principal_prime(z, mpz_class(2)), principal_prime(z, mpz_class(3))});
  EXPECT_TRUE(v.agree);
  EXPECT_EQ(side(v, "E"), json({"(2)", "(3)"}));
}

TEST(PatchClosure, EmptySet) {
  EXPECT_TRUE(check_patch_closure(parse_ring_expr("Z"), std::vector<SymPrime>{}).agree);
  EXPECT_TRUE(check_patch_closure(make_zmod(12), std::vector<std::size_t>{}).agree);
}

TEST(PatchClosure, Z12SinglePrime) {
  const RingPtr r = make_zmod(12);
  const SpecSet s = spec(r);
  const TheoremVerdict v = check_patch_closure(r, {s.index_of(principal_ideal(r, 2))});
  EXPECT_TRUE(v.agree);
  EXPECT_TRUE(check_patch_closure_all(r).agree);
}

TEST(PatchClosure, SampledOverInfiniteRings) {
  for (const char* s : {"Z", "F2[x]", "Z x F2[x]", "loc(Z,(5))"}) {
    const TheoremVerdict v = check_patch_closure_sampled(parse_ring_expr(s), 11, 20);
    EXPECT_TRUE(v.agree) << v.to_json().dump();
    EXPECT_EQ(side(v, "sets_checked"), 20);
  }
}

TEST(PatchClosure, RejectsNonPrime) {
  EXPECT_THROW(check_patch_closure(make_zmod(12), {7}), Error);
}

// Corollary ---------------------------------------------------------------------------------------

TEST(Corollary, Z12CandidateIsZ6) {
  const TheoremVerdict v = check_min_compact_corollary(make_zmod(12));
  EXPECT_TRUE(v.agree) << v.to_json().dump();
  expect_replays(v);
  bool scope = false;
  for (const std::string& n : v.notes) scope = scope || n.rfind("SCOPE:", 0) == 0;
  EXPECT_TRUE(scope);
}

TEST(Corollary, IntegersCandidateIsQ) {
  const TheoremVerdict v = check_min_compact_corollary(parse_ring_expr("Z"), 1, 5);
  EXPECT_TRUE(v.agree);
  EXPECT_EQ(side(v, "candidate"), json({"Q"}));
}

TEST(Corollary, Z30CandidateIsProductOfPrimeFields) {
  const TheoremVerdict v = check_min_compact_corollary(parse_ring_expr("Z/30"), 1, 5);
  EXPECT_TRUE(v.agree);
  const json cand = side(v, "candidate");
  ASSERT_EQ(cand.size(), 3u);
  EXPECT_EQ(side(v, "epimorphism"), "bijective");
}

// Polynomial covers --------------------------------------------------------------------------------

TEST(PolyCover, Z6Example) {
  const TheoremVerdict v = check_poly_cover_transfer(make_zmod(6), {{3, 2}});  // 2x + 3
  EXPECT_TRUE(v.agree);
  const auto cover = side(v, "coefficient_cover").get<std::vector<int>>();
  EXPECT_EQ(std::set<int>(cover.begin(), cover.end()), (std::set<int>{2, 3}));
  expect_replays(v);
}

TEST(PolyCover, ConstantOne) {
  const TheoremVerdict v = check_poly_cover_transfer(make_zmod(6), {{1}});
  EXPECT_TRUE(v.agree);
  EXPECT_EQ(side(v, "coefficient_cover"), json({1}));
}

TEST(PolyCover, Z30TwoPolynomials) {
  const TheoremVerdict v = check_poly_cover_transfer(make_zmod(30), {{15, 2}, {3}});
  EXPECT_TRUE(v.agree);
  expect_replays(v);
}

TEST(PolyCover, Errors) {
  EXPECT_THROW(check_poly_cover_transfer(make_zmod(6), {{0, 2}}), Error);   // (2)[x] holds 2x
  EXPECT_THROW(check_poly_cover_transfer(make_zmod(12), {{1}}), Error);     // not reduced
}

TEST(PolyCover, SampledCoversWork) {
  for (std::size_t n : {6u, 10u, 30u, 42u}) {
    const RingPtr r = make_zmod(n);
    EXPECT_TRUE(check_poly_cover_transfer(r, sample_cover_polys(r, n)).agree);
  }
}

// Noetherian flat opens -------------------------------------------------------------------------------

TEST(Noetherian, Examples) {
  const SymPtr z = parse_ring_expr("Z");
  const TheoremVerdict v = check_noetherian_flat_opens(z, {SymIdeal{z, {el(z, "12"), el(z, "18")}},
                                                          SymIdeal{z, {el(z, "1")}}});
  EXPECT_TRUE(v.agree);
  expect_replays(v);
  const SymPtr f2 = parse_ring_expr("F2[x]");
  EXPECT_TRUE(check_noetherian_flat_opens(f2, {SymIdeal{f2, {el(f2, "x^2+x"), el(f2, "x^3")}}}).agree);
}

TEST(Noetherian, SampledIdeals) {
  for (const char* s : {"Z", "F2[x]", "Z x Z/6", "loc(F3[x],(x^2+1))", "Z x GF(4)"}) {
    const SymPtr r = parse_ring_expr(s);
    const TheoremVerdict v = check_noetherian_flat_opens(r, sample_ideals(r, 99, 25), 10);
    EXPECT_TRUE(v.agree) << v.to_json().dump();
    EXPECT_EQ(side(v, "ideals"), 25);
    expect_replays(v);
  }
}

// Cross-validation ---------------------------------------------------------------------------------

TEST(CrossValidation, AllRingsAgree) {
  const auto rings = cross_validation_rings();
  EXPECT_GE(rings.size(), 200u);
  for (const SymPtr& r : rings) {
    const TheoremVerdict v = check_cross_validation(r);
    EXPECT_TRUE(v.agree) << v.to_json().dump();
  }
}

// Suite --------------------------------------------------------------------------------------------

TEST(Suite, Z4OnlyCorpus) {
  CorpusConfig cfg;
  cfg.zmod_max = 4;
  cfg.gf_list.clear();
  cfg.product_arity_max = 1;
  cfg.sym_members.clear();
  Corpus c = generate_corpus(cfg);
  Corpus only;
  for (const CorpusItem& i : c.items)
    if (i.expr == "Z/4") only.items.push_back(i);
  ASSERT_EQ(only.items.size(), 1u);
  const auto vs = run_suite(only, cfg, {"theorem1", 1});
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_TRUE(vs[0].agree);
  EXPECT_EQ(side(vs[0], "max_flat_compact"), true);
  EXPECT_EQ(side(vs[0], "quotient_absolutely_flat"), true);
}

TEST(Suite, EmptyCorpusEmptyReport) {
  CorpusConfig cfg;
  for (const std::string& id : theorem_ids())
    if (id != "cross_validation") {
      EXPECT_TRUE(run_suite(Corpus{}, cfg, {id, 2}).empty()) << id;
    }
}

TEST(Suite, UnknownIdRejected) {
  EXPECT_THROW(run_suite(Corpus{}, CorpusConfig{}, {"theorem9", 1}), Error);
}

TEST(Suite, SchemaValidation) {
  const TheoremVerdict v = check_theorem1(make_zmod(12));
  EXPECT_FALSE(validate_verdict_json(v.to_json()).has_value());
  json bad = v.to_json();
  bad["sides"][0]["value"] = 0.5;
  EXPECT_TRUE(validate_verdict_json(bad).has_value());
  json extra = v.to_json();
  extra["extra"] = 1;
  EXPECT_TRUE(validate_verdict_json(extra).has_value());
  json missing = v.to_json();
  missing.erase("agree");
  EXPECT_TRUE(validate_verdict_json(missing).has_value());
}

TEST(Suite, StableHashIsFnv1a) {
  EXPECT_EQ(stable_hash(""), 14695981039346656037ull);
  EXPECT_EQ(stable_hash("a"), 0xaf63dc4c8601ec8cull);
}

}  // namespace
}  // namespace spectra
