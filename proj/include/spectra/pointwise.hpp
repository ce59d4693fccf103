// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

// Pointwise localization S^(-1)R of a finite ring: the universal ring in
// which every element of S gets a quasi-inverse.

#ifndef SPECTRA_POINTWISE_HPP
#define SPECTRA_POINTWISE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spectra/finite_ring.hpp"

namespace spectra {

inline constexpr std::size_t kPointwiseBound = 64;
inline constexpr std::size_t kDefaultTargetBound = 16;

struct PointwiseLocalization {
  RingPtr source;
  std::vector<Elem> subset;
  RingPtr result;
  RingHom eta;
  std::vector<std::pair<Elem, Elem>> quasi_inverses;  // s -> x_s in result

  // Post-hoc checks, filled by the constructor functions.
  bool relations_hold = false;      // eta(s) = eta(s)^2 x_s, x_s = eta(s) x_s^2
  bool spec_bijective = false;      // pullback along eta
  bool kernel_in_nilradical = false;
  bool kernel_is_nilradical = false;
};

/// R/K for the least K giving every s a quasi-inverse, computed by killing
/// nonzero non-unit components in the local factors until none is left.
/// Throws Error(kBoundExceeded) when |R| > bound.
PointwiseLocalization pointwise_localize(const RingPtr& r, const std::vector<Elem>& s,
                                         std::size_t bound = kPointwiseBound);
/// S = all of R.
PointwiseLocalization full_pointwise_localize(const RingPtr& r, std::size_t bound = kPointwiseBound);

struct UniversalPropertyReport {
  std::size_t targets = 0;
  std::size_t pairs_checked = 0;  // (A, phi) with every phi(s) quasi-invertible
  std::size_t pairs_skipped = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// For every target A of order <= target_bound and every hom phi: R -> A
/// making each phi(s) quasi-invertible, checks that exactly one psi with
/// phi = psi o eta exists.
UniversalPropertyReport verify_universal_property(const PointwiseLocalization& l,
                                                  const std::vector<RingPtr>& targets,
                                                  std::size_t target_bound = kDefaultTargetBound);

struct FunctorialSquare {
  std::optional<RingHom> induced;  // A' -> B'
  std::size_t candidates = 0;       // homs A' -> B' closing the square
  bool commutes = false;
};

/// The hom R^(-1)R -> S^(-1)S induced by phi: R -> S, with a uniqueness count.
FunctorialSquare functorial_square(const RingHom& phi, std::size_t bound = kPointwiseBound);

}  // namespace spectra

#endif  // SPECTRA_POINTWISE_HPP
