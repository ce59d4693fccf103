// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

// One check per result about Min, Max and the flat and patch topologies.
// Each check computes the two sides of a statement with different
// procedures and attaches certificates for the replay verifier.

#ifndef SPECTRA_THEOREMS_HPP
#define SPECTRA_THEOREMS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "spectra/certificate.hpp"
#include "spectra/corpus.hpp"
#include "spectra/finite_ring.hpp"
#include "spectra/ideal_lattice.hpp"
#include "spectra/sym_ring.hpp"

namespace spectra {

struct Side {
  std::string name;
  nlohmann::json value;
};

struct TheoremVerdict {
  std::string theorem_id;
  std::string ring;
  std::vector<Side> sides;
  std::vector<Certificate> witnesses;
  bool agree = false;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// Known ids, in report order.
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);

// Separation witnesses -------------------------------------------------------

/// f outside p and N with f g^N = 0 for every g of the cover; throws
/// Error(kInvalidArgument) when p is not minimal or some g lies outside p.
Certificate min_separation_witness(const RingPtr& r, const Ideal& p, const std::vector<Elem>& cover);
Certificate min_separation_witness(const SymPrime& p, const std::vector<SymElem>& cover);

/// a and f in m with a g + f = 1; throws Error(kInvalidArgument) when g is
/// in m.
Certificate max_separation_witness(const RingPtr& r, const Ideal& m, Elem g);
Certificate max_separation_witness(const SymPrime& m, const SymElem& g);

// Checks --------------------------------------------------------------------

TheoremVerdict check_min_separation(const RingPtr& r);
TheoremVerdict check_min_separation(const SymPtr& r, std::uint64_t seed, std::size_t samples);
TheoremVerdict check_max_separation(const RingPtr& r);
TheoremVerdict check_max_separation(const SymPtr& r, std::uint64_t seed, std::size_t samples);

TheoremVerdict check_min_hausdorff(const RingPtr& r);
TheoremVerdict check_min_hausdorff(const SymPtr& r, std::uint64_t seed, std::size_t samples);
TheoremVerdict check_max_flat_hausdorff(const RingPtr& r);
TheoremVerdict check_max_flat_hausdorff(const SymPtr& r, std::uint64_t seed, std::size_t samples);

/// Flat compactness of Max against absolute flatness of R/J(R), plus b with
/// f - b f^2 in J(R) for f outside J(R) when Max is compact.
TheoremVerdict check_theorem1(const RingPtr& r);
TheoremVerdict check_theorem1(const SymPtr& r, std::uint64_t seed, std::size_t samples);

/// One set E of primes, given by indices into spec(r).
TheoremVerdict check_patch_closure(const RingPtr& r, const std::vector<std::size_t>& e);
/// Every E with |E| <= max_size.
TheoremVerdict check_patch_closure_all(const RingPtr& r, std::size_t max_size = 4);
TheoremVerdict check_patch_closure(const SymPtr& r, const std::vector<SymPrime>& e);
/// `count` seeded sets of at most 4 primes from a spectrum sample.
TheoremVerdict check_patch_closure_sampled(const SymPtr& r, std::uint64_t seed, std::size_t count);

TheoremVerdict check_min_compact_corollary(const RingPtr& r);
TheoremVerdict check_min_compact_corollary(const SymPtr& r, std::uint64_t seed, std::size_t samples);

/// polys[i] lists the coefficients of a polynomial over r, constant first.
/// Throws Error(kInvalidArgument) when r is not reduced or the polynomials
/// miss some p[x].
TheoremVerdict check_poly_cover_transfer(const RingPtr& r, const std::vector<std::vector<Elem>>& polys);
/// Seeded polynomials of degree <= 2 that cover Min(r[x]).
std::vector<std::vector<Elem>> sample_cover_polys(const RingPtr& r, std::uint64_t seed);

TheoremVerdict check_noetherian_flat_opens(const SymPtr& r, const std::vector<SymIdeal>& ideals,
                                           std::size_t maximal_samples = 10);
std::vector<SymIdeal> sample_ideals(const SymPtr& r, std::uint64_t seed, std::size_t count);

/// Singleton localizations with the universal property against `targets`
/// (only for |r| <= singleton_bound), and the full localization.
TheoremVerdict check_pointwise_localization(const RingPtr& r, const std::vector<RingPtr>& targets,
                                            std::size_t singleton_bound = 24,
                                            std::size_t target_bound = 12);

/// Symbolic verdicts on a finite catalog ring against its table.
TheoremVerdict check_cross_validation(const SymPtr& r);
/// Z/1..Z/64, monic moduli over F2 of degree <= 6 and over F3 of degree <= 3.
std::vector<SymPtr> cross_validation_rings();

// Suite ---------------------------------------------------------------------

struct SuiteOptions {
  std::string theorem = "all";
  std::size_t jobs = 1;
};

/// Verdicts in corpus order, theorem order within an item, cross-validation
/// last. Every witness is re-verified; a failed replay turns the verdict
/// into a disagreement.
std::vector<TheoremVerdict> run_suite(const Corpus& corpus, const CorpusConfig& config,
                                      const SuiteOptions& options = {});

/// Structural check against docs/verdict.schema.json; returns the first
/// violation.
std::optional<std::string> validate_verdict_json(const nlohmann::json& j);

/// 64-bit FNV-1a, used to derive per-item seeds.
std::uint64_t stable_hash(const std::string& s);

}  // namespace spectra

#endif  // SPECTRA_THEOREMS_HPP
