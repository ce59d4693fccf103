// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SPECTRA_IDEAL_LATTICE_HPP
#define SPECTRA_IDEAL_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "spectra/finite_ring.hpp"

namespace spectra {

inline constexpr std::size_t kDefaultIdealEnumerationBound = 64;

/// Bit i set iff the i-th prime of a SpecSet is in the subset.
using PrimeMask = std::uint64_t;

struct SpecSet {
  RingPtr ring;
  std::vector<Ideal> primes;  // sorted by ideal_less

  std::size_t size() const { return primes.size(); }
  PrimeMask full() const {
    return primes.size() >= 64 ? ~PrimeMask{0} : (PrimeMask{1} << primes.size()) - 1;
  }
  /// Index of an equal prime, or size() when absent.
  std::size_t index_of(const Ideal& p) const;
};

Ideal zero_ideal(const RingPtr& r);
Ideal unit_ideal(const RingPtr& r);
Ideal principal_ideal(const RingPtr& r, Elem g);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// Smallest ideal containing gens.
Ideal ideal_generated(const RingPtr& r, const std::vector<Elem>& gens);

/// Every ideal exactly once, sorted by ideal_less. Throws
/// Error(kBoundExceeded) if |R| > bound.
std::vector<Ideal> enumerate_ideals(const RingPtr& r,
                                    std::size_t bound = kDefaultIdealEnumerationBound);

/// {f : f^k in I for some k <= |R|}
Ideal radical(const Ideal& i);
Ideal nilradical(const RingPtr& r);
/// Intersection of all maximal ideals.
Ideal jacobson_radical(const RingPtr& r);

bool is_prime(const Ideal& i);
bool is_maximal(const Ideal& i);

/// Prime ideals. Rings within the enumeration bound are handled by
/// filtering the ideal lattice; larger rings go through local_decomposition.
SpecSet spec(const RingPtr& r, std::size_t bound = kDefaultIdealEnumerationBound);
/// Same result as spec(), always via the local factors.
SpecSet spec_via_local_factors(const RingPtr& r);
SpecSet min_spec(const RingPtr& r);
SpecSet max_spec(const RingPtr& r);

/// R/p and the canonical map; throws Error(kNotPrime) unless p is prime.
std::pair<RingPtr, RingHom> residue_field(const Ideal& p);

PrimeMask vanishing_set(const SpecSet& s, Elem f);     // V(f)
PrimeMask nonvanishing_set(const SpecSet& s, Elem f);  // D(f)

/// For each prime of `target_spec`, the index in `source_spec` of its
/// preimage under phi. Throws if a preimage is missing from source_spec.
std::vector<std::size_t> pullback_spec(const RingHom& phi, const SpecSet& source_spec,
                                       const SpecSet& target_spec);
Ideal preimage(const RingHom& phi, const Ideal& q);

}  // namespace spectra

#endif  // SPECTRA_IDEAL_LATTICE_HPP
