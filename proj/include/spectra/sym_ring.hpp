// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

// Catalog rings with possibly infinite spectra: Z, F_q[x], their quotients,
// their localizations at one prime, finite products, and tabulated finite
// rings. Everything is decided by structural recursion over the constructor
// tree.

#ifndef SPECTRA_SYM_RING_HPP
#define SPECTRA_SYM_RING_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "spectra/certificate.hpp"
#include "spectra/finite_ring.hpp"
#include "spectra/poly.hpp"

namespace spectra {

enum class SymKind { kIntegers, kPoly, kQuotZ, kQuotPoly, kLocalize, kProduct, kLifted };

inline constexpr std::size_t kMaxProductArity = 8;
inline constexpr unsigned kMaxPolyField = 9;

class SymRing;
using SymPtr = std::shared_ptr<const SymRing>;

// Elements ------------------------------------------------------------------

struct Fraction {
  mpz_class num, den;  // den > 0, gcd 1
};
struct PolyFraction {
  FqPoly num, den;  // den monic, gcd 1
};
struct FiniteElem {
  Elem index;
};
struct SymElem;
using Tuple = std::vector<SymElem>;

/// Integers for Z and Z/n; polynomials for F_q[x] and its quotients;
/// fractions for localizations and the fraction fields; tuples for products.
struct SymElem {
  std::variant<mpz_class, FqPoly, Fraction, PolyFraction, Tuple, FiniteElem> value;
};

class SymRing {
 public:
  static SymPtr integers();
  /// F_q[x], q <= 9.
  static SymPtr poly(unsigned q);
  /// Z/n, n != 0.
  static SymPtr quot_z(const mpz_class& n);
  /// F_q[x]/(m), m != 0.
  static SymPtr quot_poly(const FqPoly& modulus);
  /// base_(g) for base Z or F_q[x] and g a nonzero prime element; throws
  /// Error(kNotPrime) otherwise.
  static SymPtr localize(const SymPtr& base, const SymElem& generator);
  /// Nested products are flattened; arity <= 8.
  static SymPtr product(std::vector<SymPtr> factors);
  static SymPtr lifted(RingPtr finite);

  SymKind kind() const noexcept { return kind_; }
  /// Canonical ring expression; parse_ring_expr(expr()) rebuilds the ring.
  const std::string& expr() const noexcept { return expr_; }
  /// n for Z/n, p for Z_(p).
  const mpz_class& int_modulus() const noexcept { return n_; }
  /// m for F_q[x]/(m), the prime for a localization of F_q[x].
  const FqPoly& poly_modulus() const noexcept { return m_; }
  /// Coefficient field of polynomial-based rings.
  const FieldPtr& field() const noexcept { return field_; }
  const SymPtr& base() const noexcept { return base_; }
  const std::vector<SymPtr>& factors() const noexcept { return factors_; }
  const RingPtr& finite() const noexcept { return finite_; }
  bool poly_based() const { return static_cast<bool>(field_); }

  /// Cardinality when finite and at most 2^62, else nullopt.
  std::optional<std::uint64_t> order() const;

 private:
  SymRing() = default;
  friend RingPtr to_finite(const SymRing& r, std::size_t cap);

  SymKind kind_ = SymKind::kIntegers;
  std::string expr_;
  mpz_class n_;
  FqPoly m_;
  FieldPtr field_;
  SymPtr base_;
  std::vector<SymPtr> factors_;
  RingPtr finite_;
  mutable std::mutex lift_mu_;
  mutable RingPtr lift_;
};

SymElem sym_zero(const SymRing& r);
SymElem sym_one(const SymRing& r);
SymElem sym_from_int(const SymRing& r, long long k);
SymElem sym_add(const SymRing& r, const SymElem& a, const SymElem& b);
SymElem sym_neg(const SymRing& r, const SymElem& a);
SymElem sym_sub(const SymRing& r, const SymElem& a, const SymElem& b);
SymElem sym_mul(const SymRing& r, const SymElem& a, const SymElem& b);
SymElem sym_pow(const SymRing& r, const SymElem& a, unsigned e);
bool sym_equal(const SymRing& r, const SymElem& a, const SymElem& b);
bool sym_is_zero(const SymRing& r, const SymElem& a);
bool sym_is_unit(const SymRing& r, const SymElem& a);
std::optional<SymElem> sym_inverse(const SymRing& r, const SymElem& a);
/// Canonical form; throws Error(kInvalidArgument) if `a` is not an element.
SymElem normalize(const SymRing& r, const SymElem& a);
std::string to_string(const SymRing& r, const SymElem& a);
/// Element literal: an integer, a polynomial in x, "a/s" in a
/// localization, "e1,e2" (optionally parenthesized) in a product, and an
/// index or display name in a tabulated ring.
SymElem parse_element(const SymRing& r, const std::string& text);

/// Exact JSON encoding: integers as numbers when they fit in int64 and as
/// decimal strings otherwise, polynomials as coefficient-index arrays,
/// fractions as {"num","den"}, tuples as {"tuple": [...]}.
nlohmann::json element_to_json(const SymRing& r, const SymElem& a);
SymElem element_from_json(const SymRing& r, const nlohmann::json& j);

/// Deterministic pseudo-random element, biased toward small values.
SymElem sample_element(const SymRing& r, std::mt19937_64& rng);

// Finite lifts ----------------------------------------------------------------

/// The tabulated ring of a finite catalog ring; its label is r.expr().
/// Throws Error(kBoundExceeded) past the cap and Error(kInvalidArgument)
/// for infinite rings.
RingPtr to_finite(const SymRing& r, std::size_t cap = kDefaultOrderCap);
/// Index of an element in to_finite(r).
Elem lift_element(const SymRing& r, const SymElem& a);
/// Inverse of lift_element.
SymElem element_at(const SymRing& r, Elem index);

// Primes ----------------------------------------------------------------------

enum class PrimeKind { kZero, kPrincipalZ, kPrincipalPoly, kComponent, kContracted, kFinite };

struct SymPrime {
  SymPtr ring;
  PrimeKind kind = PrimeKind::kZero;
  mpz_class p;                              // kPrincipalZ
  FqPoly f;                                 // kPrincipalPoly, monic irreducible
  std::size_t index = 0;                    // kComponent
  std::shared_ptr<const SymPrime> inner;    // kComponent, kContracted
  ElementSet mask;                          // kFinite

  std::string to_string() const;
  friend bool operator==(const SymPrime& a, const SymPrime& b);
};

/// Primes as descriptors; each verifies primality of its data.
SymPrime zero_prime(const SymPtr& r);
SymPrime principal_prime(const SymPtr& r, const mpz_class& p);
SymPrime principal_prime(const SymPtr& r, const FqPoly& f);
SymPrime component_prime(const SymPtr& r, std::size_t i, const SymPrime& inner);
SymPrime contracted_prime(const SymPtr& r, const SymPrime& inner);
SymPrime finite_prime(const SymPtr& r, const ElementSet& mask);
/// The prime (g); throws Error(kNotPrime) when (g) is not prime.
SymPrime prime_generated_by(const SymPtr& r, const SymElem& g);
/// Text "(g)" with g an element literal.
SymPrime parse_prime(const SymPtr& r, const std::string& text);

bool contains(const SymPrime& p, const SymElem& f);
/// A generator of the prime, when principal.
std::optional<SymElem> prime_generator(const SymPrime& p);
/// p is contained in q.
bool prime_subset(const SymPrime& p, const SymPrime& q);
bool is_maximal(const SymPrime& p);
/// The corresponding prime of to_finite(ring).
Ideal lift_prime(const SymPrime& p);

struct PrimeFamily {
  std::string description;
  /// The first `count` members in a fixed order.
  std::function<std::vector<SymPrime>(std::size_t count)> enumerate;
  std::function<bool(const SymPrime&)> member;
  bool finite = false;
};

struct SpectrumDescriptor {
  std::vector<SymPrime> explicit_primes;
  std::vector<PrimeFamily> families;

  bool finite() const;
  /// Explicit primes followed by up to `per_family` members of each family.
  std::vector<SymPrime> sample(std::size_t per_family) const;
};

std::vector<SymPrime> min_primes(const SymPtr& r);
SpectrumDescriptor max_spectrum(const SymPtr& r);
SpectrumDescriptor spectrum(const SymPtr& r);
/// Primes contained in p; finite for every catalog ring.
std::vector<SymPrime> flat_closure_point(const SymPrime& p);

// Factoring and ideals --------------------------------------------------------

struct SymFactorization {
  SymElem unit;
  std::vector<std::pair<SymElem, unsigned>> factors;
};
/// Factorization in Z or F_q[x]; see factor_integer and factor.
SymFactorization factor(const SymRing& r, const SymElem& f);

/// A finitely generated ideal. Catalog rings other than tabulated ones are
/// principal ideal rings, and the operations below keep one generator.
struct SymIdeal {
  SymPtr ring;
  std::vector<SymElem> generators;

  std::string to_string() const;
};

/// One canonical generator of I for principal ideal rings: |gcd| in Z,
/// the monic gcd in F_q[x], gcd with the modulus in quotients, a power of
/// the prime in localizations, componentwise in products.
SymElem canonical_generator(const SymIdeal& i);
bool ideal_contains(const SymIdeal& i, const SymElem& f);
bool ideal_equal(const SymIdeal& a, const SymIdeal& b);

SymIdeal nilradical_sym(const SymPtr& r);
SymIdeal jacobson_radical_sym(const SymPtr& r);
/// R/I as a catalog ring.
SymPtr quotient_by(const SymIdeal& i);
/// Image of f under R -> quotient_by(i).
SymElem quotient_map(const SymIdeal& i, const SymPtr& q, const SymElem& f);

// Decisions -----------------------------------------------------------------

struct SymVerdict {
  bool value = false;
  Certificate certificate;
};

/// Absolute flatness decided by construction: fields yes, Z and F_q[x] no,
/// quotients iff the modulus is squarefree, products componentwise.
SymVerdict is_absolutely_flat_sym(const SymPtr& r);

/// Flat compactness of Max decided directly: finite Max is compact; an
/// infinite Max carries a Euclid certificate replayed on `samples` random
/// finite sub-collections.
SymVerdict max_flat_compact(const SymPtr& r, std::uint64_t seed, std::size_t samples = 5);

/// Finite subcover of {D(f) : f in cover} over Min(R). Throws
/// Error(kInvalidArgument) when the family misses a minimal prime.
SymVerdict min_zariski_compact(const SymPtr& r, const std::vector<SymElem>& cover);

struct ResidueField {
  enum class Kind { kFinite, kPrimeField, kRationals, kFunctionField };
  Kind kind = Kind::kFinite;
  RingPtr finite;  // kFinite
  FieldPtr base;   // kFunctionField: F_q(x)
  std::string name;
  mpz_class characteristic = 0;  // kPrimeField, too large to tabulate
};

/// Field of fractions of R/p with the canonical map.
ResidueField residue_field_sym(const SymPrime& p);
/// Image of f: FiniteElem, an integer residue (kPrimeField), Fraction or
/// PolyFraction.
SymElem residue_map(const SymPrime& p, const ResidueField& k, const SymElem& f);
/// The kernel of R -> residue_field_sym(p) computed from the field side:
/// characteristic, minimal polynomial of the image of x, or table search.
SymPrime residue_kernel(const SymPrime& p, const ResidueField& k);

struct RadicalGeneration {
  std::vector<SymElem> generators;  // of I
  std::vector<SymElem> f;           // V(I) = intersection of V(f_j)
  Certificate certificate;
};

/// Generators f_j with I = (f_j), so that V(I) is the finite intersection of
/// the V(f_j) and rad I = rad(f_j).
RadicalGeneration radical_finite_generation(const SymIdeal& i);

}  // namespace spectra

#endif  // SPECTRA_SYM_RING_HPP
