// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

// Univariate polynomials over a small finite field F_q, q = p^k.

#ifndef SPECTRA_POLY_HPP
#define SPECTRA_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "spectra/finite_ring.hpp"

namespace spectra {

class GaloisField {
 public:
  /// F_q for a prime power q, built with the default modulus.
  static std::shared_ptr<const GaloisField> make(unsigned q);

  unsigned q() const noexcept { return q_; }
  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  const RingPtr& ring() const noexcept { return ring_; }

  Elem zero() const { return ring_->zero(); }
  Elem one() const { return ring_->one(); }
  Elem add(Elem a, Elem b) const { return ring_->add(a, b); }
  Elem sub(Elem a, Elem b) const { return ring_->sub(a, b); }
  Elem mul(Elem a, Elem b) const { return ring_->mul(a, b); }
  Elem neg(Elem a) const { return ring_->neg(a); }
  Elem inv(Elem a) const;
  Elem from_int(long long k) const { return ring_->from_int(k); }
  std::string name(Elem a) const { return ring_->name(a); }

 private:
  GaloisField(unsigned q, unsigned p, unsigned k, RingPtr ring)
      : q_(q), p_(p), k_(k), ring_(std::move(ring)) {}

  unsigned q_, p_, k_;
  RingPtr ring_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

class FqPoly {
 public:
  FqPoly() = default;
  /// Coefficients from the constant term up; trailing zeros are trimmed.
  FqPoly(FieldPtr field, std::vector<Elem> coeffs);

  static FqPoly zero(const FieldPtr& f) { return FqPoly(f, {}); }
  static FqPoly constant(const FieldPtr& f, Elem c) { return FqPoly(f, {c}); }
  static FqPoly x(const FieldPtr& f) { return FqPoly(f, {f->zero(), f->one()}); }
  /// The monic polynomial of degree d whose lower coefficients are the
  /// base-q digits of index.
  static FqPoly monic_from_index(const FieldPtr& f, unsigned d, std::uint64_t index);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_->one(); }
  Elem lead() const { return c_.empty() ? field_->zero() : c_.back(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }

  FqPoly monic() const;
  FqPoly scale(Elem a) const;
  FqPoly shift(std::size_t k) const;  // times x^k
  /// Index of this polynomial as a residue: sum c_i q^i.
  std::uint64_t index() const;
  std::string to_string() const;

  friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator-(const FqPoly& a);
  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> c_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
FqPoly operator%(const FqPoly& a, const FqPoly& b);
bool divides(const FqPoly& d, const FqPoly& a);
/// Monic gcd (zero when both are zero).
FqPoly gcd(const FqPoly& a, const FqPoly& b);

struct PolyXgcd {
  FqPoly g, s, t;  // s*a + t*b = g, g monic or zero
};
PolyXgcd xgcd(const FqPoly& a, const FqPoly& b);

FqPoly pow(const FqPoly& a, unsigned e);
FqPoly powmod(const FqPoly& a, std::uint64_t e, const FqPoly& m);

/// Irreducibility by exhaustive search for a monic divisor of degree
/// 1..deg/2.
bool is_irreducible(const FqPoly& f);
/// Rabin's test: x^(q^n) = x mod f and gcd(x^(q^(n/r)) - x, f) = 1 for every
/// prime r | n. Shares nothing with the exhaustive search above.
bool is_irreducible_rabin(const FqPoly& f);

inline constexpr int kMaxFactorDegree = 24;
inline constexpr std::uint64_t kPolyFactorWork = std::uint64_t{1} << 22;

struct PolyFactorization {
  Elem unit;
  std::vector<std::pair<FqPoly, unsigned>> factors;  // monic irreducibles
};

/// Exhaustive divisor search by degree. Throws Error(kBoundExceeded) past
/// degree 24 or kPolyFactorWork trial divisions, Error(kInvalidArgument) on 0.
PolyFactorization factor(const FqPoly& f);
/// Product of the distinct monic irreducible factors.
FqPoly radical_of(const FqPoly& f);
bool is_squarefree(const FqPoly& f);
unsigned valuation(const FqPoly& f, const FqPoly& g);

/// Polynomial literal in x with integer coefficients (taken mod p), e.g.
/// "x^3 + 2x + 1" or "x^2-1".
FqPoly parse_poly(const FieldPtr& field, const std::string& text);

/// F_q[x]/(m) as a tabulated ring with index = sum c_i q^i.
RingPtr poly_quotient_ring(const FqPoly& modulus, const std::string& label,
                           std::size_t cap = kDefaultOrderCap);

}  // namespace spectra

#endif  // SPECTRA_POLY_HPP
