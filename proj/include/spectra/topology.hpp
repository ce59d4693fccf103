// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

// Explicit topologies on finite point sets, stored as the full family of
// open subsets, and the Zariski, flat and patch topologies on the spectrum of
// a finite ring.

#ifndef SPECTRA_TOPOLOGY_HPP
#define SPECTRA_TOPOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectra/finite_ring.hpp"
#include "spectra/ideal_lattice.hpp"

namespace spectra {

using PointSet = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 64;
inline constexpr std::size_t kMaxOpens = std::size_t{1} << 20;

class FiniteTopology {
 public:
  FiniteTopology() = default;
  FiniteTopology(std::vector<std::string> points, std::vector<PointSet> opens);

  std::size_t point_count() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  /// Sorted ascending, no duplicates.
  const std::vector<PointSet>& opens() const noexcept { return opens_; }
  PointSet full() const;
  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const { return is_open(full() & ~s); }
  /// Smallest open set containing the point.
  PointSet minimal_neighbourhood(std::size_t point) const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.points_.size() == b.points_.size() && a.opens_ == b.opens_;
  }

 private:
  std::vector<std::string> points_;
  std::vector<PointSet> opens_;
};

/// Smallest topology containing the sub-basis. Throws Error(kBoundExceeded)
/// past kMaxOpens opens or kMaxPoints points.
FiniteTopology generate(const std::vector<std::string>& points,
                        const std::vector<PointSet>& subbasis);

enum class SpecTopology { kZariski, kFlat, kPatch };

std::string to_string(SpecTopology t);
std::optional<SpecTopology> parse_spec_topology(const std::string& name);

/// Sub-basis {D(f)}, {V(f)} or {D(f) & V(g)} over f, g in R.
std::vector<PointSet> spec_subbasis(const SpecSet& s, SpecTopology kind);
FiniteTopology spec_topology(const SpecSet& s, SpecTopology kind);
FiniteTopology zariski_topology(const RingPtr& r);
FiniteTopology flat_topology(const RingPtr& r);
FiniteTopology patch_topology(const RingPtr& r);

/// Opens of `coarse` are all opens of `fine`.
bool is_finer(const FiniteTopology& fine, const FiniteTopology& coarse);

PointSet closure(const FiniteTopology& t, PointSet s);

/// Induced topology on s; point i of the result is the i-th set bit of s.
FiniteTopology subspace(const FiniteTopology& t, PointSet s);
/// Re-embeds a subset of subspace(t, s) into t's indexing.
PointSet embed(PointSet subspace_set, PointSet s);
/// Restricts an ambient set to subspace coordinates.
PointSet restrict_to(PointSet ambient_set, PointSet s);

bool is_hausdorff(const FiniteTopology& t);
/// Connected components, each as a point set, in order of smallest point.
std::vector<PointSet> connected_components(const FiniteTopology& t);
bool is_totally_disconnected(const FiniteTopology& t);
bool is_clopen(const FiniteTopology& t, PointSet s);

struct CompactnessResult {
  bool compact = false;
  std::vector<std::size_t> subcover;  // indices into the supplied cover
};

/// Finite subcover of s from the given open cover. Throws
/// Error(kInvalidArgument) if the cover does not cover s or contains a
/// non-open set.
CompactnessResult is_quasi_compact(const FiniteTopology& t, PointSet s,
                                   const std::vector<PointSet>& cover);

inline bool has_point(PointSet s, std::size_t i) { return (s >> i) & 1u; }
inline PointSet singleton(std::size_t i) { return PointSet{1} << i; }

}  // namespace spectra

#endif  // SPECTRA_TOPOLOGY_HPP
