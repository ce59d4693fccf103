// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "spectra/error.hpp"
#include "spectra/finite_ring.hpp"
#include "spectra/ideal_lattice.hpp"

namespace spectra {
namespace {

bool squarefree(std::size_t n) {
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

// Reference GF(p^k) multiplication on coefficient vectors.
std::vector<unsigned> gf_mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                             const std::vector<unsigned>& modulus, unsigned p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<unsigned> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    const unsigned c = prod[d];
    if (!c) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + p * p - c * modulus[i]) % p;
  }
  prod.resize(k);
  return prod;
}

std::vector<unsigned> digits(std::size_t idx, unsigned p, std::size_t k) {
  std::vector<unsigned> d(k);
  for (auto& x : d) {
    x = unsigned(idx % p);
    idx /= p;
  }
  return d;
}

TEST(ZMod, TablesMatchModularArithmetic) {
  for (std::size_t n = 1; n <= 40; ++n) {
    const RingPtr r = make_zmod(n);
    ASSERT_EQ(r->order(), n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        ASSERT_EQ(r->add(Elem(a), Elem(b)), (a + b) % n);
        ASSERT_EQ(r->mul(Elem(a), Elem(b)), (a * b) % n);
      }
    EXPECT_FALSE(check_axioms(r->tables()).has_value());
  }
}

TEST(ZMod, UnitsAreCoprimeResidues) {
  for (std::size_t n = 2; n <= 60; ++n) {
    const RingPtr r = make_zmod(n);
    for (std::size_t a = 0; a < n; ++a) EXPECT_EQ(r->is_unit(Elem(a)), std::gcd(a, n) == 1) << n << " " << a;
  }
}

TEST(ZMod, AbsolutelyFlatIffSquarefree) {
  for (std::size_t n = 1; n <= 60; ++n) {
    const RingPtr r = make_zmod(n);
    const AbsoluteFlatness af = is_absolutely_flat(*r);
    EXPECT_EQ(af.flat, squarefree(n)) << n;
    EXPECT_EQ(is_reduced(*r), squarefree(n)) << n;
    if (af.flat) {
      EXPECT_EQ(af.witnesses.size(), n);
      for (const auto& w : af.witnesses) {
        const Elem f = w.element, g = w.inverse;
        EXPECT_EQ(r->mul(r->mul(f, f), g), f);
        EXPECT_EQ(r->mul(r->mul(g, g), f), g);
      }
    } else {
      ASSERT_TRUE(af.counterexample.has_value());
      const Elem c = *af.counterexample;
      for (std::size_t g = 0; g < n; ++g) EXPECT_NE(r->mul(r->mul(c, c), Elem(g)), c);
    }
  }
}

TEST(ZMod, Z4CounterexampleIsTwo) {
  const AbsoluteFlatness af = is_absolutely_flat(*make_zmod(4));
  ASSERT_TRUE(af.counterexample);
  EXPECT_EQ(*af.counterexample, 2);
}

TEST(GaloisField, MatchesReferenceMultiplication) {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
    const auto modulus = default_gf_modulus(p, k);
    const RingPtr r = make_gf(p, k);
    ASSERT_TRUE(r->is_field()) << p << "^" << k;
    for (std::size_t a = 0; a < r->order(); ++a)
      for (std::size_t b = 0; b < r->order(); ++b) {
        const auto prod = gf_mul(digits(a, p, k), digits(b, p, k), modulus, p);
        std::size_t idx = 0;
        for (std::size_t i = k; i-- > 0;) idx = idx * p + prod[i];
        ASSERT_EQ(r->mul(Elem(a), Elem(b)), idx);
      }
  }
}

TEST(GaloisField, ReducibleModulusRejected) {
  EXPECT_THROW(make_gf(2, 2, {0, 0, 1}), Error);  // x^2
}

TEST(Product, MixedRadixIndexing) {
  const RingPtr a = make_zmod(4), b = make_zmod(3);
  const RingPtr p = product({a, b});
  ASSERT_EQ(p->order(), 12u);
  for (std::size_t x = 0; x < 12; ++x)
    for (std::size_t y = 0; y < 12; ++y) {
      const std::size_t x0 = x % 4, x1 = x / 4, y0 = y % 4, y1 = y / 4;
      EXPECT_EQ(p->mul(Elem(x), Elem(y)), (x0 * y0) % 4 + 4 * ((x1 * y1) % 3));
      EXPECT_EQ(p->add(Elem(x), Elem(y)), (x0 + y0) % 4 + 4 * ((x1 + y1) % 3));
    }
  const auto proj = product_projections(p, {a, b});
  ASSERT_EQ(proj.size(), 2u);
  EXPECT_TRUE(proj[0].is_surjective());
}

TEST(Product, EmptyIsZeroRing) {
  const RingPtr z = product({});
  EXPECT_EQ(z->order(), 1u);
  EXPECT_EQ(z->zero(), z->one());
}

TEST(Product, CapEnforced) {
  EXPECT_THROW(product({make_zmod(16), make_zmod(17)}), Error);
}

TEST(Tables, AxiomViolationsReported) {
  RingTables t = make_zmod(4)->tables();
  t.mul[1 * 4 + 2] = 3;  // breaks commutativity
  EXPECT_TRUE(check_axioms(t).has_value());
  EXPECT_THROW(FiniteRing::from_tables(t), Error);
}

TEST(Quotient, Z12ByFourIsZ4) {
  const RingPtr r = make_zmod(12);
  const auto [q, pi] = quotient(principal_ideal(r, 4));
  EXPECT_EQ(q->order(), 4u);
  EXPECT_TRUE(find_isomorphism(q, make_zmod(4)).has_value());
  EXPECT_TRUE(pi.is_surjective());
  EXPECT_EQ(hom_kernel(pi), principal_ideal(r, 4));
}

TEST(Structure, IdempotentsCountLocalFactors) {
  // Z/n has 2^omega(n) idempotents and omega(n) local factors.
  for (std::size_t n = 2; n <= 60; ++n) {
    std::size_t omega = 0, m = n;
    for (std::size_t p = 2; p <= m; ++p)
      if (m % p == 0) {
        ++omega;
        while (m % p == 0) m /= p;
      }
    const RingPtr r = make_zmod(n);
    EXPECT_EQ(idempotents(*r).size(), std::size_t{1} << omega) << n;
    const auto factors = local_decomposition(r);
    EXPECT_EQ(factors.size(), omega);
    std::size_t total = 1;
    for (const auto& f : factors) {
      total *= f.factor->order();
      EXPECT_TRUE(is_local(*f.factor));
    }
    EXPECT_EQ(total, n);
    EXPECT_EQ(is_local(*r), omega == 1);
  }
}

TEST(Homs, ZModHomsExistIffDivides) {
  for (std::size_t n = 1; n <= 18; ++n)
    for (std::size_t m = 1; m <= 18; ++m) {
      const auto homs = enumerate_homs(make_zmod(n), make_zmod(m));
      EXPECT_EQ(homs.size(), n % m == 0 ? 1u : 0u) << n << " -> " << m;
    }
}

TEST(Homs, EveryEnumeratedMapIsAHom) {
  const RingPtr a = product({make_zmod(2), make_zmod(2)});
  const RingPtr b = product({make_zmod(2), make_zmod(2), make_zmod(2)});
  const auto homs = enumerate_homs(a, b);
  // Each coordinate of b picks one of the two projections of a.
  EXPECT_EQ(homs.size(), 8u);
  for (const RingHom& h : homs) EXPECT_FALSE(check_hom(*a, *b, h.table()).has_value());
}

TEST(Homs, IsomorphismChineseRemainder) {
  EXPECT_TRUE(find_isomorphism(make_zmod(6), product({make_zmod(2), make_zmod(3)})).has_value());
  EXPECT_FALSE(find_isomorphism(make_zmod(4), product({make_zmod(2), make_zmod(2)})).has_value());
  EXPECT_FALSE(find_isomorphism(make_gf(2, 2), make_zmod(4)).has_value());
}

TEST(QuasiInverse, RandomProductsOfFields) {
  std::mt19937_64 rng(17);
  const std::vector<RingPtr> fields = {make_zmod(2), make_zmod(3), make_zmod(5), make_gf(2, 2)};
  for (int t = 0; t < 20; ++t) {
    std::vector<RingPtr> fs;
    std::size_t order = 1;
    while (fs.size() < 3) {
      const RingPtr f = fields[rng() % fields.size()];
      if (order * f->order() > 256) break;
      order *= f->order();
      fs.push_back(f);
    }
    const RingPtr r = product(fs);
    for (std::size_t a = 0; a < r->order(); ++a) {
      const auto w = find_quasi_inverse(*r, Elem(a));
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(r->mul(r->mul(Elem(a), Elem(a)), w->inverse), Elem(a));
      EXPECT_EQ(r->mul(r->mul(w->inverse, w->inverse), Elem(a)), w->inverse);
    }
  }
}

TEST(FromInt, CanonicalMap) {
  const RingPtr r = make_zmod(7);
  EXPECT_EQ(r->from_int(-1), 6);
  EXPECT_EQ(r->from_int(15), 1);
  EXPECT_EQ(r->pow(3, 6), 1);
}

}  // namespace
}  // namespace spectra
