// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "spectra/certificate.hpp"
#include "spectra/error.hpp"
#include "spectra/parser.hpp"
#include "spectra/theorems.hpp"

namespace spectra {
namespace {

using nlohmann::json;

Certificate cert(const std::string& text) { return certificate_from_json(json::parse(text)); }

void expect_rejected(Certificate c, const json::json_pointer& at, const json& value) {
  ASSERT_TRUE(verify_certificate(c).ok) << to_json(c).dump();
  c.payload[at] = value;
  const CheckResult res = verify_certificate(c);
  EXPECT_FALSE(res.ok) << to_json(c).dump();
  EXPECT_FALSE(res.reason.empty());
}

TEST(Certificates, KindNames) {
  for (CertKind k : {CertKind::kFiniteSubcover, CertKind::kEuclidNoncompact, CertKind::kQuasiInverse,
                     CertKind::kAbsFlatCounterexample, CertKind::kSeparationWitness, CertKind::kRadicalGenerators})
    EXPECT_EQ(parse_cert_kind(to_string(k)), k);
  EXPECT_FALSE(parse_cert_kind("proof").has_value());
}

TEST(Certificates, JsonRoundTrip) {
  const RingPtr r = make_zmod(12);
  const Certificate c = min_separation_witness(r, principal_ideal(r, 2), {4});
  const Certificate back = certificate_from_json(to_json(c));
  EXPECT_EQ(to_json(back), to_json(c));
}

TEST(Certificates, MalformedJsonThrows) {
  for (const char* bad : {R"({"engine":"finite","payload":{},"ring":"Z/4"})",
                          R"({"engine":"finite","kind":"proof","payload":{},"ring":"Z/4"})",
                          R"({"engine":"quantum","kind":"quasi_inverse","payload":{},"ring":"Z/4"})",
                          R"({"engine":"finite","kind":"quasi_inverse","payload":3,"ring":"Z/4"})",
                          R"([1,2])"}) {
    try {
      cert(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

TEST(Certificates, BadRingIsRejectedNotThrown) {
  Certificate c = cert(R"({"engine":"symbolic","kind":"abs_flat_counterexample",
                          "payload":{"element":2,"method":"valuation","prime":2},"ring":"Z/(3"})");
  EXPECT_FALSE(verify_certificate(c).ok);
}

TEST(Tampering, Euclid) {
  expect_rejected(cert(R"({"engine":"symbolic","kind":"euclid_noncompact","payload":{"method":"euclid",
      "samples":[{"cofactor":21,"collection":[41],"witness":2}]},"ring":"Z"})"),
                  json::json_pointer("/samples/0/cofactor"), 22);
}

TEST(Tampering, AbsFlatCounterexample) {
  expect_rejected(cert(R"({"engine":"symbolic","kind":"abs_flat_counterexample",
      "payload":{"element":2,"method":"valuation","prime":2},"ring":"Z"})"),
                  json::json_pointer("/element"), 1);
}

TEST(Tampering, MinSeparation) {
  const RingPtr r = make_zmod(12);
  expect_rejected(min_separation_witness(r, principal_ideal(r, 2), {4}), json::json_pointer("/f"), 1);
  expect_rejected(min_separation_witness(r, principal_ideal(r, 2), {4}), json::json_pointer("/N"), 0);
}

TEST(Tampering, MaxSeparation) {
  const SymPtr z = parse_ring_expr("Z");
  const Certificate c = max_separation_witness(principal_prime(z, mpz_class(5)), parse_element(*z, "3"));
  expect_rejected(c, json::json_pointer("/a"), 3);
  expect_rejected(c, json::json_pointer("/f"), -4);  // a g + f = 1 but f is not in (5)
}

TEST(Tampering, FiniteSubcover) {
  expect_rejected(cert(R"({"engine":"finite","kind":"finite_subcover",
      "payload":{"max":{"method":"table","primes":[[0,2]]}},"ring":"Z/4"})"),
                  json::json_pointer("/max/primes/0"), json::array({0}));
  expect_rejected(cert(R"({"engine":"symbolic","kind":"finite_subcover",
      "payload":{"cover":[1],"min":{"method":"domain"},"subcover":[0]},"ring":"Z"})"),
                  json::json_pointer("/cover/0"), 0);
}

TEST(Tampering, QuasiInverseTable) {
  expect_rejected(cert(R"j({"engine":"finite","kind":"quasi_inverse",
      "payload":{"method":"table","pairs":[[0,0],[1,1]]},"ring":"quot(Z/4, 2)"})j"),
                  json::json_pointer("/pairs/1/1"), 0);
  expect_rejected(cert(R"({"engine":"symbolic","kind":"quasi_inverse",
      "payload":{"method":"squarefree","primes":[2,3]},"ring":"Z/6"})"),
                  json::json_pointer("/primes/1"), 2);
}

TEST(Tampering, RadicalGenerators) {
  const SymPtr z = parse_ring_expr("Z");
  const RadicalGeneration g = radical_finite_generation(SymIdeal{z, {parse_element(*z, "12"), parse_element(*z, "18")}});
  expect_rejected(g.certificate, json::json_pointer("/f/0"), 12);
}

TEST(Replay, EveryWitnessOfAVerdictVerifies) {
  for (const char* s : {"Z", "F2[x]", "Z/12", "Z x Z/6", "loc(Z,(3))", "F3[x]/(x^2+1)"}) {
    const SymPtr r = parse_ring_expr(s);
    for (const TheoremVerdict& v : {check_theorem1(r, 4, 3), check_min_separation(r, 4, 3),
                                    check_max_separation(r, 4, 3), check_min_compact_corollary(r, 4, 3)})
      for (const Certificate& c : v.witnesses) {
        const CheckResult res = verify_certificate(certificate_from_json(json::parse(to_json(c).dump())));
        EXPECT_TRUE(res.ok) << to_json(c).dump() << ": " << res.reason;
      }
  }
}

}  // namespace
}  // namespace spectra
