// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "spectra/certificate.hpp"
#include "spectra/error.hpp"
#include "spectra/ideal_lattice.hpp"
#include "spectra/number_theory.hpp"
#include "spectra/parser.hpp"
#include "spectra/poly.hpp"
#include "spectra/sym_ring.hpp"

namespace spectra {
namespace {

SymElem el(const SymPtr& r, const std::string& s) { return parse_element(*r, s); }

std::vector<std::string> prime_strings(const std::vector<SymPrime>& ps) {
  std::vector<std::string> out;
  for (const SymPrime& p : ps) out.push_back(p.to_string());
  return out;
}

// Parser ----------------------------------------------------------------------

TEST(Parser, GrammarExamples) {
  EXPECT_EQ(parse_ring_expr("Z/12")->kind(), SymKind::kQuotZ);
  EXPECT_EQ(parse_ring_expr("Z")->kind(), SymKind::kIntegers);
  EXPECT_EQ(parse_ring_expr("F3[x]")->kind(), SymKind::kPoly);
  EXPECT_EQ(parse_ring_expr("F2[x]/(x^3+x)")->kind(), SymKind::kQuotPoly);
  EXPECT_EQ(parse_ring_expr("loc(Z,(5))")->kind(), SymKind::kLocalize);
  const SymPtr p = parse_ring_expr("Z x GF(4)");
  ASSERT_EQ(p->kind(), SymKind::kProduct);
  ASSERT_EQ(p->factors().size(), 2u);
  EXPECT_EQ(p->factors()[0]->kind(), SymKind::kIntegers);
  EXPECT_EQ(p->factors()[1]->kind(), SymKind::kLifted);
  EXPECT_EQ(p->factors()[1]->order(), 4u);
}

TEST(Parser, WhitespaceInsensitive) {
  EXPECT_EQ(parse_ring_expr(" loc ( Z , ( 7 ) ) ")->expr(), parse_ring_expr("loc(Z,(7))")->expr());
  EXPECT_EQ(parse_ring_expr("F2[x]/(x^2 + x + 1)")->expr(), parse_ring_expr("F2[x]/(x^2+x+1)")->expr());
}

TEST(Parser, CanonicalExpressionRoundTrips) {
  for (const char* s : {"Z", "Z/12", "F2[x]", "F3[x]/(x^2+1)", "loc(Z,(5))", "loc(F2[x],(x))", "Z x GF(4)",
                        "GF(2^3)", "quot(Z/12, 4)", "Z x Z/6 x loc(Z,(3))", "Z/1000000007"}) {
    const SymPtr r = parse_ring_expr(s);
    EXPECT_EQ(parse_ring_expr(r->expr())->expr(), r->expr()) << s;
  }
}

TEST(Parser, NonPrimeLocalizationIsSemanticError) {
  try {
    parse_ring_expr("loc(Z,(6))");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not prime"), std::string::npos);
  }
  EXPECT_THROW(parse_ring_expr("loc(F2[x],(x^2+1))"), Error);  // (x+1)^2
}

TEST(Parser, SyntaxErrorsCarryPosition) {
  try {
    parse_ring_expr("Z/(3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse_ring_expr(""), ParseError);
  EXPECT_THROW(parse_ring_expr("Q"), ParseError);
  EXPECT_THROW(parse_ring_expr("Z x"), ParseError);
  EXPECT_THROW(parse_ring_expr("Z/0"), Error);
  EXPECT_THROW(parse_ring_expr("F6[x]"), Error);
}

TEST(Parser, QuotientLabelsRebuildTheirTables) {
  const std::vector<RingPtr> rings = {make_zmod(12), make_zmod(36), product({make_zmod(4), make_zmod(6)}),
                                      make_gf(2, 2), product({make_zmod(2), make_gf(2, 2)})};
  for (const RingPtr& r : rings)
    for (const Ideal& i : enumerate_ideals(r)) {
      if (i.is_unit_ideal()) continue;
      const RingPtr q = quotient(i).first;
      const RingPtr back = parse_finite_ring(q->label());
      ASSERT_EQ(back->order(), q->order()) << q->label();
      EXPECT_EQ(back->tables().add, q->tables().add) << q->label();
      EXPECT_EQ(back->tables().mul, q->tables().mul) << q->label();
    }
}

// Arithmetic against the finite lift -------------------------------------------------

TEST(Lift, ArithmeticCommutesWithLift) {
  std::mt19937_64 rng(9);
  for (const char* s : {"Z/36", "F2[x]/(x^4+x)", "F3[x]/(x^2+1)", "Z/6 x F2[x]/(x^2)", "Z/2 x Z/3 x Z/5"}) {
    const SymPtr r = parse_ring_expr(s);
    const RingPtr t = to_finite(*r);
    ASSERT_EQ(t->order(), *r->order());
    for (int k = 0; k < 200; ++k) {
      const SymElem a = sample_element(*r, rng), b = sample_element(*r, rng);
      EXPECT_EQ(lift_element(*r, sym_add(*r, a, b)), t->add(lift_element(*r, a), lift_element(*r, b))) << s;
      EXPECT_EQ(lift_element(*r, sym_mul(*r, a, b)), t->mul(lift_element(*r, a), lift_element(*r, b))) << s;
      EXPECT_TRUE(sym_equal(*r, element_at(*r, lift_element(*r, a)), a));
    }
  }
}

TEST(Lift, InfiniteRingsRefuse) {
  EXPECT_THROW(to_finite(*parse_ring_expr("Z")), Error);
  EXPECT_THROW(to_finite(*parse_ring_expr("Z/1000"), 256), Error);
}

TEST(Elements, JsonRoundTrip) {
  std::mt19937_64 rng(2);
  for (const char* s : {"Z", "Z/1000000007", "F3[x]", "loc(Z,(3))", "loc(F2[x],(x+1))", "Z x F2[x]", "GF(9)"}) {
    const SymPtr r = parse_ring_expr(s);
    for (int k = 0; k < 50; ++k) {
      const SymElem a = sample_element(*r, rng);
      EXPECT_TRUE(sym_equal(*r, element_from_json(*r, element_to_json(*r, a)), a)) << s;
      EXPECT_TRUE(sym_equal(*r, parse_element(*r, to_string(*r, a)), a)) << s << " " << to_string(*r, a);
    }
  }
}

TEST(Elements, LocalizationUnits) {
  const SymPtr r = parse_ring_expr("loc(Z,(5))");
  EXPECT_TRUE(sym_is_unit(*r, el(r, "3")));
  EXPECT_FALSE(sym_is_unit(*r, el(r, "10")));
  EXPECT_THROW(parse_element(*r, "1/5"), Error);
  const auto inv = sym_inverse(*r, el(r, "2/3"));
  ASSERT_TRUE(inv);
  EXPECT_TRUE(sym_equal(*r, sym_mul(*r, *inv, el(r, "2/3")), sym_one(*r)));
}

// Primes --------------------------------------------------------------------------------

TEST(Primes, MinimalPrimes) {
  EXPECT_EQ(prime_strings(min_primes(parse_ring_expr("Z"))), std::vector<std::string>{"(0)"});
  EXPECT_EQ(prime_strings(min_primes(parse_ring_expr("Z/12"))), (std::vector<std::string>{"(2)", "(3)"}));
  EXPECT_EQ(min_primes(parse_ring_expr("Z x Z")).size(), 2u);
  EXPECT_EQ(min_primes(parse_ring_expr("F2[x]/(x^4+x)")).size(), 3u);  // x(x+1)(x^2+x+1)
}

TEST(Primes, MaximalSpectrumOfZ) {
  const SpectrumDescriptor d = max_spectrum(parse_ring_expr("Z"));
  EXPECT_FALSE(d.finite());
  EXPECT_EQ(prime_strings(d.sample(5)), (std::vector<std::string>{"(2)", "(3)", "(5)", "(7)", "(11)"}));
}

TEST(Primes, MembershipAndOrder) {
  const SymPtr z = parse_ring_expr("Z");
  const SymPrime p2 = principal_prime(z, mpz_class(2));
  EXPECT_TRUE(contains(p2, el(z, "-14")));
  EXPECT_FALSE(contains(p2, el(z, "9")));
  EXPECT_TRUE(prime_subset(zero_prime(z), p2));
  EXPECT_FALSE(prime_subset(p2, zero_prime(z)));
  EXPECT_TRUE(is_maximal(p2));
  EXPECT_FALSE(is_maximal(zero_prime(z)));
  EXPECT_THROW(principal_prime(z, mpz_class(9)), Error);
  EXPECT_EQ(flat_closure_point(p2).size(), 2u);  // (0) and (2)
}

TEST(Primes, LiftedPrimesMatchFiniteSpectrum) {
  for (const char* s : {"Z/60", "F2[x]/(x^4+x)", "Z/4 x Z/3"}) {
    const SymPtr r = parse_ring_expr(s);
    const SpecSet fs = spec(to_finite(*r));
    const auto ps = spectrum(r).sample(1);
    ASSERT_EQ(ps.size(), fs.size()) << s;
    for (const SymPrime& p : ps) EXPECT_LT(fs.index_of(lift_prime(p)), fs.size());
  }
}

// Factoring ------------------------------------------------------------------------------

TEST(Factor, IntegersMultiplyBack) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 200; ++k) {
    const mpz_class n = mpz_class(std::to_string(1 + rng() % 1000000000ull));
    const IntFactorization f = factor_integer(n);
    mpz_class prod = f.unit;
    for (const auto& [p, e] : f.factors) {
      EXPECT_TRUE(is_prime_trial(p));
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    EXPECT_EQ(prod, n);
  }
  EXPECT_THROW(factor_integer(0), Error);
}

TEST(Factor, PolynomialsMultiplyBackAndIrreducibilityAgrees) {
  std::mt19937_64 rng(8);
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const FieldPtr f = GaloisField::make(q);
    for (int k = 0; k < 60; ++k) {
      std::vector<Elem> c(2 + rng() % 7);
      for (Elem& x : c) x = Elem(rng() % q);
      c.back() = 1;
      const FqPoly g(f, c);
      const PolyFactorization fac = factor(g);
      FqPoly prod = FqPoly::constant(f, fac.unit);
      for (const auto& [h, e] : fac.factors) {
        EXPECT_TRUE(is_irreducible(h));
        EXPECT_TRUE(is_irreducible_rabin(h));
        prod = prod * pow(h, e);
      }
      EXPECT_EQ(prod, g);
      EXPECT_EQ(is_irreducible(g), is_irreducible_rabin(g)) << g.to_string();
    }
  }
}

// Decisions ---------------------------------------------------------------------------------

TEST(Decide, AbsoluteFlatness) {
  EXPECT_FALSE(is_absolutely_flat_sym(parse_ring_expr("Z")).value);
  EXPECT_FALSE(is_absolutely_flat_sym(parse_ring_expr("F2[x]")).value);
  EXPECT_FALSE(is_absolutely_flat_sym(parse_ring_expr("loc(Z,(3))")).value);
  EXPECT_TRUE(is_absolutely_flat_sym(parse_ring_expr("Z/30")).value);
  EXPECT_FALSE(is_absolutely_flat_sym(parse_ring_expr("Z/12")).value);
  EXPECT_TRUE(is_absolutely_flat_sym(parse_ring_expr("F2[x]/(x^4+x)")).value);
  EXPECT_TRUE(is_absolutely_flat_sym(parse_ring_expr("F2[x]/(x^9+1)")).value);  // separable
  EXPECT_FALSE(is_absolutely_flat_sym(parse_ring_expr("F2[x]/(x^4+1)")).value);  // (x+1)^4
  EXPECT_TRUE(is_absolutely_flat_sym(parse_ring_expr("Z/1000000007")).value);
  EXPECT_FALSE(is_absolutely_flat_sym(parse_ring_expr("Z/2 x Z")).value);
}

TEST(Decide, AbsoluteFlatnessMatchesTablesForQuotients) {
  for (int n = 1; n <= 100; ++n) {
    const SymPtr r = parse_ring_expr("Z/" + std::to_string(n));
    EXPECT_EQ(is_absolutely_flat_sym(r).value, is_absolutely_flat(*to_finite(*r)).flat) << n;
  }
}

TEST(Decide, EuclidCertificateForZAndF2x) {
  for (const char* s : {"Z", "F2[x]"}) {
    const SymVerdict v = max_flat_compact(parse_ring_expr(s), 42, 5);
    EXPECT_FALSE(v.value);
    EXPECT_EQ(v.certificate.kind, CertKind::kEuclidNoncompact);
    EXPECT_EQ(v.certificate.payload.at("samples").size(), 5u);
    EXPECT_TRUE(verify_certificate(v.certificate).ok) << verify_certificate(v.certificate).reason;
  }
  EXPECT_TRUE(max_flat_compact(parse_ring_expr("loc(Z,(7))"), 1).value);
  EXPECT_TRUE(max_flat_compact(parse_ring_expr("Z/12"), 1).value);
}

TEST(Decide, EuclidWitnessAvoidsTheCollection) {
  // Independent replay: the witness divides 1 + product and is not in the collection.
  const SymVerdict v = max_flat_compact(parse_ring_expr("Z"), 123, 5);
  for (const auto& s : v.certificate.payload.at("samples")) {
    mpz_class prod = 1;
    for (const auto& c : s.at("collection")) prod *= c.get<long>();
    const mpz_class w = s.at("witness").get<long>();
    EXPECT_TRUE(mpz_divisible_p(mpz_class(prod + 1).get_mpz_t(), w.get_mpz_t()));
    for (const auto& c : s.at("collection")) EXPECT_NE(mpz_class(c.get<long>()), w);
  }
}

TEST(Decide, RadicalGeneratorsExamples) {
  const SymPtr z = parse_ring_expr("Z");
  const RadicalGeneration a = radical_finite_generation(SymIdeal{z, {el(z, "12"), el(z, "18")}});
  ASSERT_EQ(a.f.size(), 1u);
  EXPECT_EQ(to_string(*z, a.f[0]), "6");
  EXPECT_TRUE(verify_certificate(a.certificate).ok);

  const SymPtr f2 = parse_ring_expr("F2[x]");
  const RadicalGeneration b = radical_finite_generation(SymIdeal{f2, {el(f2, "x^2+x"), el(f2, "x^3")}});
  ASSERT_EQ(b.f.size(), 1u);
  EXPECT_EQ(to_string(*f2, b.f[0]), "x");

  const RadicalGeneration c = radical_finite_generation(SymIdeal{z, {el(z, "1")}});
  for (const SymPrime& p : max_spectrum(z).sample(10))
    EXPECT_FALSE(std::all_of(c.f.begin(), c.f.end(), [&](const SymElem& x) { return contains(p, x); }));
}

TEST(Decide, RadicalsOfQuotients) {
  for (int n = 2; n <= 100; ++n) {
    const SymPtr r = parse_ring_expr("Z/" + std::to_string(n));
    const RingPtr t = to_finite(*r);
    const Ideal nil = nilradical(t);
    const SymElem g = canonical_generator(nilradical_sym(r));
    EXPECT_EQ(principal_ideal(t, lift_element(*r, g)), nil) << n;
    EXPECT_EQ(principal_ideal(t, lift_element(*r, canonical_generator(jacobson_radical_sym(r)))), jacobson_radical(t));
  }
}

TEST(Decide, MinCompactnessSubcover) {
  const SymPtr r = parse_ring_expr("Z/30");
  const SymVerdict v = min_zariski_compact(r, {el(r, "6"), el(r, "10"), el(r, "15"), el(r, "1")});
  EXPECT_TRUE(v.value);
  EXPECT_TRUE(verify_certificate(v.certificate).ok);
  EXPECT_THROW(min_zariski_compact(r, {el(r, "6"), el(r, "10")}), Error);  // (2) holds both
}

TEST(Residue, FieldsAndKernels) {
  const SymPtr z = parse_ring_expr("Z");
  const ResidueField q = residue_field_sym(zero_prime(z));
  EXPECT_EQ(q.kind, ResidueField::Kind::kRationals);
  const ResidueField f5 = residue_field_sym(principal_prime(z, mpz_class(5)));
  EXPECT_EQ(f5.kind, ResidueField::Kind::kFinite);
  EXPECT_EQ(f5.finite->order(), 5u);
  EXPECT_EQ(residue_kernel(principal_prime(z, mpz_class(5)), f5), principal_prime(z, mpz_class(5)));
  const SymPtr big = parse_ring_expr("Z/1000000007");
  const SymPrime pb = min_primes(big).at(0);
  const ResidueField kb = residue_field_sym(pb);
  EXPECT_EQ(kb.kind, ResidueField::Kind::kPrimeField);
  EXPECT_EQ(kb.characteristic, mpz_class(1000000007));
  EXPECT_EQ(residue_kernel(pb, kb), pb);
  const SymPtr fx = parse_ring_expr("F3[x]");
  EXPECT_EQ(residue_field_sym(zero_prime(fx)).kind, ResidueField::Kind::kFunctionField);
}

}  // namespace
}  // namespace spectra
