// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "spectra/error.hpp"
#include "spectra/finite_ring.hpp"
#include "spectra/topology.hpp"

namespace spectra {
namespace {

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

// Reference: close under pairwise union and intersection until stable.
std::vector<PointSet> naive_generate(std::size_t n, const std::vector<PointSet>& sub) {
  const PointSet full = n == 64 ? ~PointSet{0} : (PointSet{1} << n) - 1;
  std::set<PointSet> t(sub.begin(), sub.end());
  t.insert(0);
  t.insert(full);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<PointSet> cur(t.begin(), t.end());
    for (PointSet a : cur)
      for (PointSet b : cur) grew |= t.insert(a | b).second | t.insert(a & b).second;
  }
  return {t.begin(), t.end()};
}

TEST(Generate, MatchesNaiveClosureOnRandomSubbases) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<PointSet> sub(rng() % 5);
    for (PointSet& s : sub) s = rng() & ((PointSet{1} << n) - 1);
    const FiniteTopology t = generate(names(n), sub);
    EXPECT_EQ(t.opens(), naive_generate(n, sub));
  }
}

TEST(Generate, SierpinskiSpace) {
  const FiniteTopology t = generate(names(2), {0b01});
  EXPECT_EQ(t.opens().size(), 3u);
  EXPECT_FALSE(is_hausdorff(t));
  EXPECT_EQ(connected_components(t).size(), 1u);
  EXPECT_FALSE(is_totally_disconnected(t));
  EXPECT_EQ(closure(t, 0b01), 0b11u);
  EXPECT_EQ(closure(t, 0b10), 0b10u);
  EXPECT_EQ(t.minimal_neighbourhood(1), 0b11u);
  EXPECT_TRUE(is_clopen(t, 0b11));
  EXPECT_FALSE(is_clopen(t, 0b01));
}

TEST(Generate, DiscreteSpace) {
  const FiniteTopology t = generate(names(4), {1, 2, 4, 8});
  EXPECT_EQ(t.opens().size(), 16u);
  EXPECT_TRUE(is_hausdorff(t));
  EXPECT_TRUE(is_totally_disconnected(t));
  EXPECT_EQ(connected_components(t).size(), 4u);
}

TEST(Generate, TooManyPoints) {
  EXPECT_THROW(generate(names(65), {}), Error);
}

TEST(Subspace, InducedOpensAndEmbedding) {
  // Chain 0 < 1 < 2: opens {}, {0}, {0,1}, {0,1,2}.
  const FiniteTopology t = generate(names(3), {0b001, 0b011});
  const FiniteTopology sub = subspace(t, 0b101);
  ASSERT_EQ(sub.point_count(), 2u);
  EXPECT_EQ(sub.opens().size(), 3u);  // {}, {p0}, {p0,p2}
  for (PointSet o : sub.opens()) EXPECT_EQ(restrict_to(embed(o, 0b101), 0b101), o);
  EXPECT_EQ(embed(0b10, 0b101), 0b100u);
}

TEST(Subspace, ClosureIsSmallestClosedSuperset) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const PointSet full = (PointSet{1} << n) - 1;
    std::vector<PointSet> sub(1 + rng() % 4);
    for (PointSet& s : sub) s = rng() & full;
    const FiniteTopology t = generate(names(n), sub);
    const PointSet s = rng() & full;
    PointSet expect = full;
    for (PointSet o : t.opens())
      if ((full & ~o & s) == s) expect &= full & ~o;
    EXPECT_EQ(closure(t, s), expect);
  }
}

TEST(Compactness, SubcoverFromCover) {
  const FiniteTopology t = generate(names(3), {0b001, 0b010, 0b100});
  const auto res = is_quasi_compact(t, 0b111, {0b001, 0b011, 0b110, 0b100});
  EXPECT_TRUE(res.compact);
  PointSet u = 0;
  for (std::size_t i : res.subcover) u |= std::vector<PointSet>{0b001, 0b011, 0b110, 0b100}[i];
  EXPECT_EQ(u, 0b111u);
  EXPECT_THROW(is_quasi_compact(t, 0b111, {0b001}), Error);
}

TEST(SpecTopologies, FiniteRingsAreDiscrete) {
  // Primes of a finite ring are maximal, so all three topologies are discrete.
  for (std::size_t n : {2u, 6u, 12u, 30u, 60u}) {
    const RingPtr r = make_zmod(n);
    const std::size_t pts = spec(r).size();
    for (const FiniteTopology& t : {zariski_topology(r), flat_topology(r), patch_topology(r)}) {
      EXPECT_EQ(t.point_count(), pts);
      EXPECT_EQ(t.opens().size(), std::size_t{1} << pts);
    }
  }
}

TEST(SpecTopologies, Z6PatchHasTwoPointsFourOpens) {
  const FiniteTopology t = patch_topology(make_zmod(6));
  EXPECT_EQ(t.point_count(), 2u);
  EXPECT_EQ(t.opens().size(), 4u);
}

TEST(SpecTopologies, PatchRefinesBoth) {
  const RingPtr r = product({make_zmod(4), make_zmod(3), make_gf(2, 2)});
  const FiniteTopology z = zariski_topology(r), f = flat_topology(r), p = patch_topology(r);
  EXPECT_TRUE(is_finer(p, z));
  EXPECT_TRUE(is_finer(p, f));
}

TEST(SpecTopologies, SubbasisShapes) {
  const RingPtr r = make_zmod(12);
  const SpecSet s = spec(r);
  const auto d = spec_subbasis(s, SpecTopology::kZariski);
  const auto v = spec_subbasis(s, SpecTopology::kFlat);
  for (std::size_t f = 0; f < 12; ++f) {
    EXPECT_NE(std::find(d.begin(), d.end(), nonvanishing_set(s, Elem(f))), d.end());
    EXPECT_NE(std::find(v.begin(), v.end(), vanishing_set(s, Elem(f))), v.end());
  }
}

TEST(SpecTopologies, Names) {
  EXPECT_EQ(parse_spec_topology("patch"), SpecTopology::kPatch);
  EXPECT_FALSE(parse_spec_topology("discrete").has_value());
  EXPECT_EQ(to_string(SpecTopology::kFlat), "flat");
}

}  // namespace
}  // namespace spectra
