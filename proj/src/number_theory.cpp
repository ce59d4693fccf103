// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include "spectra/number_theory.hpp"

#include "spectra/error.hpp"

namespace spectra {

const mpz_class kFactorBound("1000000000000");

IntFactorization factor_integer(const mpz_class& n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "cannot factor 0");
  mpz_class m = abs(n);
  if (m > kFactorBound)
    throw Error(ErrorCode::kBoundExceeded, "integer " + to_decimal(n) + " exceeds factor bound");
  IntFactorization out;
  out.unit = n < 0 ? -1 : 1;
  for (mpz_class d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      m /= d;
      ++e;
    }
    if (e) out.factors.emplace_back(d, e);
  }
  if (m > 1) out.factors.emplace_back(m, 1);
  return out;
}

bool is_prime_trial(const mpz_class& n) {
  if (n < 2) return false;
  const IntFactorization f = factor_integer(n);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

mpz_class radical_of(const mpz_class& n) {
  mpz_class r = 1;
  for (const auto& [p, e] : factor_integer(n).factors) r *= p;
  return r;
}

bool is_squarefree(const mpz_class& n) {
  for (const auto& [p, e] : factor_integer(n).factors)
    if (e > 1) return false;
  return true;
}

unsigned valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "valuation of 0");
  mpz_class m = n;
  unsigned e = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++e;
  }
  return e;
}

std::vector<mpz_class> first_primes(std::size_t count) {
  std::vector<mpz_class> out;
  for (unsigned long c = 2; out.size() < count; ++c) {
    bool prime = true;
    for (const mpz_class& p : out) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.emplace_back(c);
  }
  return out;
}

IntXgcd xgcd(const mpz_class& a, const mpz_class& b) {
  IntXgcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::string to_decimal(const mpz_class& n) { return n.get_str(10); }

}  // namespace spectra
