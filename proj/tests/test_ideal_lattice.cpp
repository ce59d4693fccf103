// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "spectra/error.hpp"
#include "spectra/finite_ring.hpp"
#include "spectra/ideal_lattice.hpp"

namespace spectra {
namespace {

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> d;
  for (std::size_t k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  return out;
}

std::size_t radical_of(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t p : prime_divisors(n)) r *= p;
  return r;
}

TEST(Ideals, ZModIdealsAreDivisors) {
  for (std::size_t n = 1; n <= 64; ++n) {
    const RingPtr r = make_zmod(n);
    const auto ideals = enumerate_ideals(r);
    ASSERT_EQ(ideals.size(), divisors(n).size()) << n;
    std::set<std::size_t> sizes;
    for (const Ideal& i : ideals) sizes.insert(i.size());
    // (d) has n/d elements, one ideal per divisor.
    EXPECT_EQ(sizes.size(), ideals.size());
    for (std::size_t k = 1; k < ideals.size(); ++k) EXPECT_TRUE(ideal_less(ideals[k - 1], ideals[k]));
  }
}

TEST(Ideals, EnumerationBound) {
  EXPECT_THROW(enumerate_ideals(make_zmod(100)), Error);
  EXPECT_NO_THROW(enumerate_ideals(make_zmod(100), 128));
}

TEST(Ideals, SumAndIntersectionAreGcdAndLcm) {
  const RingPtr r = make_zmod(60);
  for (std::size_t a : divisors(60))
    for (std::size_t b : divisors(60)) {
      const Ideal ia = principal_ideal(r, Elem(a % 60)), ib = principal_ideal(r, Elem(b % 60));
      std::size_t g = a, h = b;
      while (h) {
        const std::size_t t = g % h;
        g = h;
        h = t;
      }
      const std::size_t l = a / g * b;
      EXPECT_EQ(ideal_sum(ia, ib), principal_ideal(r, Elem(g % 60)));
      EXPECT_EQ(ideal_intersection(ia, ib), principal_ideal(r, Elem(l % 60)));
    }
}

TEST(Ideals, GeneratedByTwoElements) {
  const RingPtr r = make_zmod(36);
  EXPECT_EQ(ideal_generated(r, {12, 18}), principal_ideal(r, 6));
  EXPECT_EQ(ideal_generated(r, {}), zero_ideal(r));
  EXPECT_TRUE(ideal_generated(r, {5}).is_unit_ideal());
}

TEST(Ideals, MakeRejectsNonIdeal) {
  const RingPtr r = make_zmod(6);
  ElementSet s;
  s.set(0);
  s.set(1);
  EXPECT_THROW(Ideal::make(r, s), Error);
}

TEST(Spec, ZModPrimesArePrimeDivisors) {
  for (std::size_t n = 2; n <= 64; ++n) {
    const RingPtr r = make_zmod(n);
    const SpecSet s = spec(r);
    const auto ps = prime_divisors(n);
    ASSERT_EQ(s.size(), ps.size()) << n;
    for (std::size_t p : ps) {
      const Ideal ip = principal_ideal(r, Elem(p % n));
      EXPECT_LT(s.index_of(ip), s.size());
      EXPECT_TRUE(is_prime(ip));
      EXPECT_TRUE(is_maximal(ip));
    }
    // Zero-dimensional: Min = Max = Spec.
    EXPECT_EQ(min_spec(r).size(), s.size());
    EXPECT_EQ(max_spec(r).size(), s.size());
  }
}

TEST(Spec, ZeroRingHasEmptySpectrum) {
  EXPECT_EQ(spec(make_zmod(1)).size(), 0u);
  EXPECT_TRUE(nilradical(make_zmod(1)).is_unit_ideal());
}

TEST(Spec, LocalFactorRouteAgrees) {
  const std::vector<RingPtr> rings = {make_zmod(60), product({make_zmod(4), make_gf(2, 2)}),
                                      product({make_zmod(2), make_zmod(3), make_zmod(9)}), make_gf(3, 2)};
  for (const RingPtr& r : rings) {
    const SpecSet a = spec(r), b = spec_via_local_factors(r);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.primes[i], b.primes[i]);
  }
}

TEST(Spec, LargeRingsUseLocalFactors) {
  const RingPtr r = make_zmod(210);
  EXPECT_EQ(spec(r, 64).size(), 4u);
}

TEST(Radicals, ZModNilradicalIsRadicalOfN) {
  for (std::size_t n = 2; n <= 64; ++n) {
    const RingPtr r = make_zmod(n);
    const Ideal expected = principal_ideal(r, Elem(radical_of(n) % n));
    EXPECT_EQ(nilradical(r), expected) << n;
    EXPECT_EQ(jacobson_radical(r), expected) << n;
    EXPECT_EQ(radical(zero_ideal(r)), expected);
  }
}

TEST(Radicals, NilradicalIsIntersectionOfPrimes) {
  const std::vector<RingPtr> rings = {product({make_zmod(4), make_zmod(9)}), product({make_zmod(8), make_gf(2, 2)}),
                                      make_zmod(50)};
  for (const RingPtr& r : rings) {
    Ideal acc = unit_ideal(r);
    for (const Ideal& p : spec(r).primes) acc = ideal_intersection(acc, p);
    EXPECT_EQ(acc, nilradical(r));
    for (std::size_t a = 0; a < r->order(); ++a) EXPECT_EQ(acc.contains(Elem(a)), r->is_nilpotent(Elem(a)));
  }
}

TEST(Residue, FieldsOfPrimes) {
  const RingPtr r = make_zmod(12);
  for (const Ideal& p : spec(r).primes) {
    const auto [k, pi] = residue_field(p);
    EXPECT_TRUE(k->is_field());
    EXPECT_EQ(hom_kernel(pi), p);
  }
  EXPECT_THROW(residue_field(principal_ideal(r, 6)), Error);
}

TEST(VanishingSets, ComplementaryAndMultiplicative) {
  const RingPtr r = product({make_zmod(6), make_zmod(4)});
  const SpecSet s = spec(r);
  for (std::size_t f = 0; f < r->order(); ++f) {
    EXPECT_EQ(vanishing_set(s, Elem(f)) | nonvanishing_set(s, Elem(f)), s.full());
    EXPECT_EQ(vanishing_set(s, Elem(f)) & nonvanishing_set(s, Elem(f)), 0u);
    for (std::size_t g = 0; g < r->order(); ++g)
      EXPECT_EQ(vanishing_set(s, r->mul(Elem(f), Elem(g))), vanishing_set(s, Elem(f)) | vanishing_set(s, Elem(g)));
  }
}

TEST(Pullback, QuotientMapEmbedsSpectrum) {
  const RingPtr r = make_zmod(30);
  const auto [q, pi] = quotient(principal_ideal(r, 5));
  const SpecSet sr = spec(r), sq = spec(q);
  const auto back = pullback_spec(pi, sr, sq);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(sr.primes[back[0]], principal_ideal(r, 5));
  EXPECT_EQ(preimage(pi, zero_ideal(q)), principal_ideal(r, 5));
}

}  // namespace
}  // namespace spectra
