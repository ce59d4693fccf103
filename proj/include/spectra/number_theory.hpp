// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SPECTRA_NUMBER_THEORY_HPP
#define SPECTRA_NUMBER_THEORY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace spectra {

/// Largest |n| accepted by trial-division factoring.
extern const mpz_class kFactorBound;

struct IntFactorization {
  int unit = 1;  // sign
  std::vector<std::pair<mpz_class, unsigned>> factors;  // ascending primes
};

/// Trial division; throws Error(kBoundExceeded) if |n| > 10^12 and
/// Error(kInvalidArgument) if n == 0.
IntFactorization factor_integer(const mpz_class& n);
/// Trial-division primality for |n| <= 10^12.
bool is_prime_trial(const mpz_class& n);
/// Product of the distinct primes dividing n (n != 0).
mpz_class radical_of(const mpz_class& n);
bool is_squarefree(const mpz_class& n);
/// Exponent of the prime p in n != 0.
unsigned valuation(const mpz_class& n, const mpz_class& p);
/// The first `count` primes, ascending.
std::vector<mpz_class> first_primes(std::size_t count);

struct IntXgcd {
  mpz_class g, s, t;  // s*a + t*b = g >= 0
};
IntXgcd xgcd(const mpz_class& a, const mpz_class& b);

/// Decimal text of n.
std::string to_decimal(const mpz_class& n);

}  // namespace spectra

#endif  // SPECTRA_NUMBER_THEORY_HPP
