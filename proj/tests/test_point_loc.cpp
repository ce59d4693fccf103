// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "spectra/corpus.hpp"
#include "spectra/error.hpp"
#include "spectra/ideal_lattice.hpp"
#include "spectra/pointwise.hpp"

namespace spectra {
namespace {

std::vector<RingPtr> small_targets() {
  return {make_zmod(1), make_zmod(2), make_zmod(3), make_zmod(4), make_zmod(5), make_zmod(6),
          make_gf(2, 2), product({make_zmod(2), make_zmod(2)}), make_zmod(8), make_zmod(9)};
}

TEST(Pointwise, Z12AtTwoIsZ6) {
  const RingPtr r = make_zmod(12);
  const PointwiseLocalization l = pointwise_localize(r, {2});
  EXPECT_TRUE(find_isomorphism(l.result, make_zmod(6)).has_value());
  EXPECT_TRUE(l.relations_hold);
  EXPECT_TRUE(l.spec_bijective);
  EXPECT_TRUE(l.kernel_in_nilradical);
  EXPECT_TRUE(l.kernel_is_nilradical);
  ASSERT_EQ(l.quasi_inverses.size(), 1u);
  const auto [s, x] = l.quasi_inverses[0];
  const FiniteRing& a = *l.result;
  const Elem e = l.eta(s);
  EXPECT_EQ(a.mul(a.mul(e, e), x), e);
  EXPECT_EQ(a.mul(a.mul(x, x), e), x);
}

TEST(Pointwise, UnitsAndZeroChangeNothing) {
  const RingPtr r = make_zmod(12);
  for (Elem s : {Elem(0), Elem(1), Elem(5), Elem(3)}) {
    // 3 is a unit mod 4 and zero mod 3, so it already has a quasi-inverse.
    const PointwiseLocalization l = pointwise_localize(r, {s});
    EXPECT_EQ(l.result->order(), 12u) << s;
    EXPECT_TRUE(l.eta.is_bijective());
  }
}

TEST(Pointwise, FullLocalizationIsReducedQuotient) {
  const Corpus c = generate_corpus(CorpusConfig{});
  std::size_t checked = 0;
  for (const CorpusItem& item : c.items) {
    if (!item.finite) continue;
    const RingPtr r = item.finite;
    const PointwiseLocalization l = full_pointwise_localize(r);
    ASSERT_TRUE(is_absolutely_flat(*l.result).flat) << item.expr;
    EXPECT_TRUE(l.relations_hold);
    EXPECT_TRUE(l.spec_bijective);
    EXPECT_TRUE(l.kernel_is_nilradical) << item.expr;
    // Oracle: R/N by table quotient.
    EXPECT_TRUE(find_isomorphism(l.result, quotient(nilradical(r)).first).has_value()) << item.expr;
    if (is_absolutely_flat(*r).flat) {
      EXPECT_TRUE(l.eta.is_bijective()) << item.expr;
    }
    ++checked;
  }
  EXPECT_GE(checked, 150u);
}

TEST(Pointwise, Idempotent) {
  for (std::size_t n : {8u, 12u, 18u, 36u, 50u}) {
    const PointwiseLocalization l = full_pointwise_localize(make_zmod(n));
    const PointwiseLocalization again = full_pointwise_localize(l.result);
    EXPECT_TRUE(again.eta.is_bijective()) << n;
  }
}

TEST(Pointwise, UniversalPropertyAgainstSmallTargets) {
  for (std::size_t n : {4u, 6u, 8u, 12u, 18u}) {
    const RingPtr r = make_zmod(n);
    for (std::size_t s = 0; s < n; ++s) {
      const PointwiseLocalization l = pointwise_localize(r, {Elem(s)});
      const UniversalPropertyReport rep = verify_universal_property(l, small_targets(), 9);
      EXPECT_TRUE(rep.ok()) << n << " at " << s << ": " << (rep.ok() ? "" : rep.violations[0]);
      EXPECT_GT(rep.pairs_checked, 0u);
    }
  }
}

TEST(Pointwise, UniversalPropertyRejectsWrongResult) {
  // Z/12 -> Z/2 also gives 2 a quasi-inverse, but Z/12 -> Z/3 does not factor through it.
  const RingPtr r = make_zmod(12), two = make_zmod(2);
  std::vector<Elem> m(12);
  for (std::size_t i = 0; i < 12; ++i) m[i] = Elem(i % 2);
  const PointwiseLocalization bogus{r, {2}, two, RingHom::make(r, two, m), {{2, 0}}};
  const UniversalPropertyReport rep = verify_universal_property(bogus, small_targets(), 9);
  EXPECT_FALSE(rep.ok());
}

TEST(Pointwise, BoundEnforced) {
  EXPECT_THROW(pointwise_localize(make_zmod(100), {2}, 64), Error);
}

TEST(Functorial, InducedMapIsUnique) {
  const RingPtr a = make_zmod(12), b = make_zmod(4);
  std::vector<Elem> m(12);
  for (std::size_t i = 0; i < 12; ++i) m[i] = Elem(i % 4);
  const FunctorialSquare sq = functorial_square(RingHom::make(a, b, m));
  ASSERT_TRUE(sq.induced.has_value());
  EXPECT_TRUE(sq.commutes);
  EXPECT_EQ(sq.candidates, 1u);
  EXPECT_EQ(sq.induced->source()->order(), 6u);
  EXPECT_EQ(sq.induced->target()->order(), 2u);
}

}  // namespace
}  // namespace spectra
