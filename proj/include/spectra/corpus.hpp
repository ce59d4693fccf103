// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SPECTRA_CORPUS_HPP
#define SPECTRA_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "spectra/finite_ring.hpp"
#include "spectra/sym_ring.hpp"

namespace spectra {

struct CorpusConfig {
  std::size_t zmod_max = 60;
  std::vector<std::pair<unsigned, unsigned>> gf_list = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}};
  std::size_t product_arity_max = 3;
  std::size_t order_cap = 64;
  std::vector<std::string> sym_members = default_sym_members();
  std::uint64_t sample_seed = 20260101;
  std::size_t sample_count = 5;

  static std::vector<std::string> default_sym_members();
  friend bool operator==(const CorpusConfig&, const CorpusConfig&) = default;
};

nlohmann::json to_json(const CorpusConfig& c);
/// Missing fields keep their defaults; throws Error(kParse) on wrong types
/// and Error(kInvalidArgument) on non-positive caps.
CorpusConfig config_from_json(const nlohmann::json& j);

/// Exactly one of finite / sym is set.
struct CorpusItem {
  std::string expr;
  RingPtr finite;
  SymPtr sym;
};

struct Corpus {
  std::vector<CorpusItem> items;
  std::vector<std::string> skipped;  // "<expr>: <reason>"

  std::size_t finite_count() const;
};

/// Z/1..Z/zmod_max, the listed fields, products of 2..arity factors within
/// the order cap, quotients of all of these by their ideals (new up to
/// isomorphism), then the symbolic members.
Corpus generate_corpus(const CorpusConfig& config);

/// Isomorphism-invariant summary used to bucket rings before a full
/// isomorphism search.
std::vector<std::size_t> ring_fingerprint(const FiniteRing& r);

}  // namespace spectra

#endif  // SPECTRA_CORPUS_HPP
