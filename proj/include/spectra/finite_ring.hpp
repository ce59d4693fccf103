// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

// Fully tabulated finite commutative rings with identity.
//
// Elements are indices into the addition and multiplication tables. Every
// algorithm downstream works by exhaustion over these tables, so orders are
// capped at kMaxOrder.

#ifndef SPECTRA_FINITE_RING_HPP
#define SPECTRA_FINITE_RING_HPP

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spectra {

inline constexpr std::size_t kMaxOrder = 256;
inline constexpr std::size_t kDefaultOrderCap = 256;

using Elem = std::uint16_t;
using ElementSet = std::bitset<kMaxOrder>;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

struct RingTables {
  std::size_t order = 0;
  std::vector<Elem> add;  // row-major order x order
  std::vector<Elem> mul;
  Elem zero = 0;
  Elem one = 0;
  std::string label;
  std::vector<std::string> names;  // optional display names, one per element
};

/// Returns a description of the first violated ring axiom, or nullopt.
std::optional<std::string> check_axioms(const RingTables& t);

class FiniteRing {
 public:
  /// Raw table constructor for user-supplied tables; always runs
  /// check_axioms and throws Error on failure.
  static RingPtr from_tables(RingTables tables);
  /// For constructions that satisfy the axioms by construction.
  static RingPtr trusted(RingTables tables);

  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  std::size_t order() const noexcept { return order_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }
  Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem pow(Elem a, std::size_t k) const;
  /// Image of the integer k under the canonical map Z -> R.
  Elem from_int(long long k) const;

  bool is_unit(Elem a) const { return inv_[a] != kNoInverse; }
  std::optional<Elem> inverse(Elem a) const;
  bool is_field() const;
  bool is_nilpotent(Elem a) const;
  bool is_idempotent(Elem a) const { return mul(a, a) == a; }

  const std::string& label() const noexcept { return label_; }
  std::string name(Elem a) const;
  ElementSet all() const;
  const RingTables& tables() const noexcept { return tables_; }

 private:
  static constexpr Elem kNoInverse = 0xFFFF;
  explicit FiniteRing(RingTables tables);

  RingTables tables_;
  std::size_t order_;
  const Elem* add_;
  const Elem* mul_;
  Elem zero_;
  Elem one_;
  std::string label_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

/// A set of elements of a ring closed under addition and multiplication by
/// arbitrary ring elements.
class Ideal {
 public:
  /// Verifies the ideal axioms; throws Error(kNotIdeal) otherwise.
  static Ideal make(RingPtr ring, const ElementSet& members);
  static Ideal trusted(RingPtr ring, const ElementSet& members);

  const RingPtr& ring() const noexcept { return ring_; }
  const ElementSet& members() const noexcept { return members_; }
  bool contains(Elem a) const { return members_.test(a); }
  std::size_t size() const { return members_.count(); }
  bool is_unit_ideal() const { return contains(ring_->one()); }
  bool is_zero_ideal() const { return size() == 1; }
  bool subset_of(const Ideal& other) const {
    return (members_ & ~other.members_).none();
  }
  std::vector<Elem> elements() const;
  /// Short display form: "(g)" for a principal ideal, else the member list.
  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.members_ == b.members_;
  }

 private:
  Ideal(RingPtr ring, const ElementSet& members)
      : ring_(std::move(ring)), members_(members) {}

  RingPtr ring_;
  ElementSet members_;
};

/// Returns true iff members is closed under + and under multiplication by R.
bool is_ideal(const FiniteRing& r, const ElementSet& members);

/// Orders ideals by (cardinality, sorted member list).
bool ideal_less(const Ideal& a, const Ideal& b);

class RingHom {
 public:
  /// Verifies that the map preserves 0, 1, + and x; throws otherwise.
  static RingHom make(RingPtr source, RingPtr target, std::vector<Elem> map);
  static RingHom trusted(RingPtr source, RingPtr target, std::vector<Elem> map);
  static RingHom identity(const RingPtr& r);

  Elem operator()(Elem a) const { return map_[a]; }
  const RingPtr& source() const noexcept { return source_; }
  const RingPtr& target() const noexcept { return target_; }
  const std::vector<Elem>& table() const noexcept { return map_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  /// after o this
  RingHom then(const RingHom& after) const;

 private:
  RingHom(RingPtr source, RingPtr target, std::vector<Elem> map)
      : source_(std::move(source)), target_(std::move(target)),
        map_(std::move(map)) {}

  RingPtr source_;
  RingPtr target_;
  std::vector<Elem> map_;
};

/// Returns a description of the first violated hom property, or nullopt.
std::optional<std::string> check_hom(const FiniteRing& source,
                                     const FiniteRing& target,
                                     const std::vector<Elem>& map);

/// A pair (f, g) with f = f^2 g and g = g^2 f.
struct QuasiInverseWitness {
  Elem element;
  Elem inverse;
};

struct AbsoluteFlatness {
  bool flat = false;
  std::vector<QuasiInverseWitness> witnesses;  // one per element when flat
  std::optional<Elem> counterexample;          // smallest failing element
};

struct LocalFactor {
  Elem idempotent;
  RingPtr factor;
  RingHom projection;
};

// Constructions -------------------------------------------------------------

RingPtr make_zmod(std::size_t n, std::size_t cap = kDefaultOrderCap);

/// GF(p^k) as F_p[a]/(modulus); modulus is monic of degree k, coefficients
/// listed from the constant term up. Element index = sum c_i p^i.
RingPtr make_gf(unsigned p, unsigned k, const std::vector<unsigned>& modulus,
                std::size_t cap = kDefaultOrderCap);
/// Smallest monic irreducible of degree k over F_p in index order.
std::vector<unsigned> default_gf_modulus(unsigned p, unsigned k);
/// GF(p^k) with the default modulus.
RingPtr make_gf(unsigned p, unsigned k);

/// Componentwise product. Element index is mixed radix with the first factor
/// least significant. The empty product is the zero ring.
RingPtr product(const std::vector<RingPtr>& factors,
                std::size_t cap = kDefaultOrderCap);
std::vector<RingHom> product_projections(const RingPtr& product_ring,
                                         const std::vector<RingPtr>& factors);

/// R/I with the canonical surjection. Cosets are indexed by increasing
/// smallest representative.
std::pair<RingPtr, RingHom> quotient(const Ideal& ideal);

// Absolute flatness ---------------------------------------------------------

/// Smallest-index g with f = f^2 g and g = g^2 f, if any. A one-sided
/// solution g' of f = f^2 g' is upgraded to the two-sided g'^2 f.
std::optional<QuasiInverseWitness> find_quasi_inverse(const FiniteRing& r,
                                                      Elem f);
AbsoluteFlatness is_absolutely_flat(const FiniteRing& r);
bool is_reduced(const FiniteRing& r);

// Structure -----------------------------------------------------------------

std::vector<Elem> idempotents(const FiniteRing& r);
/// Primitive orthogonal idempotents e_i with local factors e_i R.
std::vector<LocalFactor> local_decomposition(const RingPtr& r);
/// A finite ring is local iff its non-units form an ideal.
bool is_local(const FiniteRing& r);

Ideal hom_kernel(const RingHom& phi);
RingPtr hom_image(const RingHom& phi);

inline constexpr std::size_t kHomSearchLimit = 1u << 20;
/// Every ring hom A -> B. Homs are pinned down by the images of a greedy
/// ring-generating set of A, searched depth-first with propagation; throws
/// Error(kBoundExceeded) once more than `limit` search nodes are visited.
std::vector<RingHom> enumerate_homs(const RingPtr& a, const RingPtr& b,
                                    std::size_t limit = kHomSearchLimit);
/// Greedy generating set of r as a ring with identity.
std::vector<Elem> ring_generators(const FiniteRing& r);
/// Some isomorphism a -> b, if one exists.
std::optional<RingHom> find_isomorphism(const RingPtr& a, const RingPtr& b);

}  // namespace spectra

#endif  // SPECTRA_FINITE_RING_HPP
