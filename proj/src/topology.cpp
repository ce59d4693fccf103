// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include "spectra/topology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "spectra/error.hpp"

namespace spectra {

namespace {

PointSet full_set(std::size_t n) {
  return n >= 64 ? ~PointSet{0} : (PointSet{1} << n) - 1;
}

}  // namespace

FiniteTopology::FiniteTopology(std::vector<std::string> points, std::vector<PointSet> opens)
    : points_(std::move(points)), opens_(std::move(opens)) {
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
}

PointSet FiniteTopology::full() const { return full_set(points_.size()); }

bool FiniteTopology::is_open(PointSet s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

PointSet FiniteTopology::minimal_neighbourhood(std::size_t point) const {
  PointSet n = full();
  for (const PointSet u : opens_)
    if (has_point(u, point)) n &= u;
  return n;
}

FiniteTopology generate(const std::vector<std::string>& points,
                        const std::vector<PointSet>& subbasis) {
  const std::size_t n = points.size();
  if (n > kMaxPoints)
    throw Error(ErrorCode::kBoundExceeded, "too many points for an explicit topology");
  const PointSet all = full_set(n);

  // Basis: finite intersections of sub-basic sets (the empty one is X).
  std::unordered_set<PointSet> basis_seen{all};
  std::vector<PointSet> basis{all};
  for (const PointSet s0 : subbasis) {
    const PointSet s = s0 & all;
    const std::size_t before = basis.size();
    for (std::size_t i = 0; i < before; ++i) {
      const PointSet b = basis[i] & s;
      if (basis_seen.insert(b).second) basis.push_back(b);
    }
    if (basis_seen.insert(s).second) basis.push_back(s);
  }
  // Intersections of new elements with each other are covered because each
  // sub-basic set was intersected with every element present before it.

  // Opens: all unions of basis elements.
  std::unordered_set<PointSet> seen{0};
  std::vector<PointSet> opens{0};
  for (const PointSet b : basis) {
    const std::size_t before = opens.size();
    for (std::size_t i = 0; i < before; ++i) {
      const PointSet u = opens[i] | b;
      if (seen.insert(u).second) {
        opens.push_back(u);
        if (opens.size() > kMaxOpens)
          throw Error(ErrorCode::kBoundExceeded, "topology exceeds open-set cap");
      }
    }
  }
  return FiniteTopology(points, std::move(opens));
}

std::string to_string(SpecTopology t) {
  switch (t) {
    case SpecTopology::kZariski: return "zariski";
    case SpecTopology::kFlat: return "flat";
    case SpecTopology::kPatch: return "patch";
  }
  return "?";
}

std::optional<SpecTopology> parse_spec_topology(const std::string& name) {
  if (name == "zariski") return SpecTopology::kZariski;
  if (name == "flat") return SpecTopology::kFlat;
  if (name == "patch") return SpecTopology::kPatch;
  return std::nullopt;
}

std::vector<PointSet> spec_subbasis(const SpecSet& s, SpecTopology kind) {
  const std::size_t n = s.ring->order();
  std::vector<PointSet> v(n), d(n);
  for (std::size_t f = 0; f < n; ++f) {
    v[f] = vanishing_set(s, Elem(f));
    d[f] = nonvanishing_set(s, Elem(f));
  }
  std::vector<PointSet> out;
  switch (kind) {
    case SpecTopology::kZariski: out = d; break;
    case SpecTopology::kFlat: out = v; break;
    case SpecTopology::kPatch:
      for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g) out.push_back(d[f] & v[g]);
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FiniteTopology spec_topology(const SpecSet& s, SpecTopology kind) {
  std::vector<std::string> labels;
  for (const Ideal& p : s.primes) labels.push_back(p.to_string());
  return generate(labels, spec_subbasis(s, kind));
}

FiniteTopology zariski_topology(const RingPtr& r) {
  return spec_topology(spec(r), SpecTopology::kZariski);
}
FiniteTopology flat_topology(const RingPtr& r) {
  return spec_topology(spec(r), SpecTopology::kFlat);
}
FiniteTopology patch_topology(const RingPtr& r) {
  return spec_topology(spec(r), SpecTopology::kPatch);
}

bool is_finer(const FiniteTopology& fine, const FiniteTopology& coarse) {
  if (fine.point_count() != coarse.point_count()) return false;
  for (const PointSet u : coarse.opens())
    if (!fine.is_open(u)) return false;
  return true;
}

PointSet closure(const FiniteTopology& t, PointSet s) {
  // Complement of the largest open set disjoint from s.
  PointSet outside = 0;
  for (const PointSet u : t.opens())
    if ((u & s) == 0) outside |= u;
  return t.full() & ~outside;
}

PointSet restrict_to(PointSet ambient_set, PointSet s) {
  PointSet out = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < 64; ++i) {
    if (!has_point(s, i)) continue;
    if (has_point(ambient_set, i)) out |= singleton(j);
    ++j;
  }
  return out;
}

PointSet embed(PointSet subspace_set, PointSet s) {
  PointSet out = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < 64; ++i) {
    if (!has_point(s, i)) continue;
    if (has_point(subspace_set, j)) out |= singleton(i);
    ++j;
  }
  return out;
}

FiniteTopology subspace(const FiniteTopology& t, PointSet s) {
  s &= t.full();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < t.point_count(); ++i)
    if (has_point(s, i)) labels.push_back(t.points()[i]);
  std::vector<PointSet> opens;
  for (const PointSet u : t.opens()) opens.push_back(restrict_to(u, s));
  return FiniteTopology(std::move(labels), std::move(opens));
}

bool is_hausdorff(const FiniteTopology& t) {
  const std::size_t n = t.point_count();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      bool separated = false;
      for (const PointSet u : t.opens()) {
        if (!has_point(u, x) || has_point(u, y)) continue;
        for (const PointSet v : t.opens())
          if (has_point(v, y) && (u & v) == 0) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) return false;
    }
  return true;
}

std::vector<PointSet> connected_components(const FiniteTopology& t) {
  // In a finite space, x and y lie in one component iff they are joined by a
  // chain of specializations (x in cl{y} or y in cl{x}).
  const std::size_t n = t.point_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t y = 0; y < n; ++y) {
    const PointSet cl = closure(t, singleton(y));
    for (std::size_t x = 0; x < n; ++x)
      if (x != y && has_point(cl, x)) parent[find(x)] = find(y);
  }
  std::vector<PointSet> comps;
  std::vector<std::size_t> root_slot(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t r = find(x);
    if (root_slot[r] == n) {
      root_slot[r] = comps.size();
      comps.push_back(0);
    }
    comps[root_slot[r]] |= singleton(x);
  }
  return comps;
}

bool is_totally_disconnected(const FiniteTopology& t) {
  for (const PointSet c : connected_components(t))
    if (std::popcount(c) > 1) return false;
  return true;
}

bool is_clopen(const FiniteTopology& t, PointSet s) {
  return t.is_open(s) && t.is_closed(s);
}

CompactnessResult is_quasi_compact(const FiniteTopology& t, PointSet s,
                                   const std::vector<PointSet>& cover) {
  PointSet covered = 0;
  for (const PointSet u : cover) {
    if (!t.is_open(u)) throw Error(ErrorCode::kInvalidArgument, "cover contains a non-open set");
    covered |= u;
  }
  if ((s & ~covered) != 0)
    throw Error(ErrorCode::kInvalidArgument, "family does not cover the set");
  // Greedy choice; any finite cover has a finite subcover, this picks one.
  CompactnessResult out{true, {}};
  PointSet remaining = s;
  while (remaining != 0) {
    std::size_t best = 0;
    int best_gain = -1;
    for (std::size_t i = 0; i < cover.size(); ++i) {
      const int gain = std::popcount(cover[i] & remaining);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    out.subcover.push_back(best);
    remaining &= ~cover[best];
  }
  std::sort(out.subcover.begin(), out.subcover.end());
  return out;
}

}  // namespace spectra
