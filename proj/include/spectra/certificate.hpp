// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

// Witness objects attached to verdicts, and their verifiers. A verifier
// rebuilds the ring from its expression and replays the payload with plain
// arithmetic; it never calls the search procedures that produced it.

#ifndef SPECTRA_CERTIFICATE_HPP
#define SPECTRA_CERTIFICATE_HPP

#include <optional>
#include <string>

#include "json.hpp"

namespace spectra {

enum class CertKind {
  kFiniteSubcover,
  kEuclidNoncompact,
  kQuasiInverse,
  kAbsFlatCounterexample,
  kSeparationWitness,
  kRadicalGenerators,
};

std::string to_string(CertKind k);
std::optional<CertKind> parse_cert_kind(const std::string& s);

struct Certificate {
  CertKind kind = CertKind::kFiniteSubcover;
  std::string ring;    // ring expression
  std::string engine;  // "finite" or "symbolic"
  nlohmann::json payload = nlohmann::json::object();
};

nlohmann::json to_json(const Certificate& c);
/// Throws Error(kParse) on a malformed object.
Certificate certificate_from_json(const nlohmann::json& j);

struct CheckResult {
  bool ok = false;
  std::string reason;  // first failure
};

CheckResult verify_certificate(const Certificate& c);

}  // namespace spectra

#endif  // SPECTRA_CERTIFICATE_HPP
