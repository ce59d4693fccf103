// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include "spectra/ideal_lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "spectra/error.hpp"

namespace spectra {

namespace {

struct MaskLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const {
    for (std::size_t i = 0; i < kMaxOrder; ++i)
      if (a.test(i) != b.test(i)) return b.test(i);
    return false;
  }
};

}  // namespace

std::size_t SpecSet::index_of(const Ideal& p) const {
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (primes[i] == p) return i;
  return primes.size();
}

Ideal zero_ideal(const RingPtr& r) {
  ElementSet s;
  s.set(r->zero());
  return Ideal::trusted(r, s);
}

Ideal unit_ideal(const RingPtr& r) { return Ideal::trusted(r, r->all()); }

Ideal principal_ideal(const RingPtr& r, Elem g) {
  ElementSet s;
  for (std::size_t a = 0; a < r->order(); ++a) s.set(r->mul(g, Elem(a)));
  return Ideal::trusted(r, s);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  const FiniteRing& r = *a.ring();
  ElementSet s;
  const auto ea = a.elements();
  const auto eb = b.elements();
  for (const Elem x : ea)
    for (const Elem y : eb) s.set(r.add(x, y));
  return Ideal::trusted(a.ring(), s);
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  return Ideal::trusted(a.ring(), a.members() & b.members());
}

Ideal ideal_generated(const RingPtr& r, const std::vector<Elem>& gens) {
  Ideal acc = zero_ideal(r);
  for (const Elem g : gens) {
    if (g >= r->order())
      throw Error(ErrorCode::kInvalidArgument, "generator out of range");
    if (!acc.contains(g)) acc = ideal_sum(acc, principal_ideal(r, g));
  }
  return acc;
}

std::vector<Ideal> enumerate_ideals(const RingPtr& r, std::size_t bound) {
  if (r->order() > bound)
    throw Error(ErrorCode::kBoundExceeded,
                "ideal enumeration bound " + std::to_string(bound) + " exceeded by " +
                    r->label());
  // Fixpoint: every ideal is reachable from (0) by single-element extensions.
  std::map<ElementSet, bool, MaskLess> seen;
  std::vector<Ideal> out;
  std::deque<Ideal> work{zero_ideal(r)};
  seen[work.front().members()] = true;
  std::vector<Ideal> principals;
  for (std::size_t a = 0; a < r->order(); ++a) principals.push_back(principal_ideal(r, Elem(a)));
  while (!work.empty()) {
    Ideal cur = work.front();
    work.pop_front();
    for (std::size_t a = 0; a < r->order(); ++a) {
      if (cur.contains(Elem(a))) continue;
      Ideal next = ideal_sum(cur, principals[a]);
      if (seen.emplace(next.members(), true).second) work.push_back(next);
    }
    out.push_back(std::move(cur));
  }
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

Ideal radical(const Ideal& i) {
  const FiniteRing& r = *i.ring();
  ElementSet s;
  for (std::size_t f = 0; f < r.order(); ++f) {
    Elem power = Elem(f);
    for (std::size_t k = 1; k <= r.order(); ++k) {
      if (i.contains(power)) {
        s.set(f);
        break;
      }
      power = r.mul(power, Elem(f));
    }
  }
  return Ideal::trusted(i.ring(), s);
}

Ideal nilradical(const RingPtr& r) { return radical(zero_ideal(r)); }

Ideal jacobson_radical(const RingPtr& r) {
  ElementSet s = r->all();
  for (const Ideal& m : max_spec(r).primes) s &= m.members();
  return Ideal::trusted(r, s);
}

bool is_prime(const Ideal& i) {
  if (i.is_unit_ideal()) return false;
  const FiniteRing& r = *i.ring();
  for (std::size_t a = 0; a < r.order(); ++a) {
    if (i.contains(Elem(a))) continue;
    for (std::size_t b = a; b < r.order(); ++b)
      if (!i.contains(Elem(b)) && i.contains(r.mul(Elem(a), Elem(b)))) return false;
  }
  return true;
}

bool is_maximal(const Ideal& i) {
  if (i.is_unit_ideal()) return false;
  const RingPtr& r = i.ring();
  for (std::size_t a = 0; a < r->order(); ++a) {
    if (i.contains(Elem(a))) continue;
    if (!ideal_sum(i, principal_ideal(r, Elem(a))).is_unit_ideal()) return false;
  }
  return true;
}

SpecSet spec_via_local_factors(const RingPtr& r) {
  // Every prime of a finite ring is maximal; the maximal ideals are the
  // preimages of the maximal ideals of the local factors, i.e.
  // {x : e x is a non-unit of eR}.
  SpecSet out{r, {}};
  for (const LocalFactor& lf : local_decomposition(r)) {
    ElementSet s;
    for (std::size_t a = 0; a < r->order(); ++a)
      if (!lf.factor->is_unit(lf.projection(Elem(a)))) s.set(a);
    out.primes.push_back(Ideal::trusted(r, s));
  }
  std::sort(out.primes.begin(), out.primes.end(), ideal_less);
  return out;
}

SpecSet spec(const RingPtr& r, std::size_t bound) {
  if (r->order() > bound) return spec_via_local_factors(r);
  SpecSet out{r, {}};
  for (Ideal& i : enumerate_ideals(r, bound))
    if (is_prime(i)) out.primes.push_back(std::move(i));
  return out;
}

SpecSet min_spec(const RingPtr& r) {
  const SpecSet all = spec(r);
  SpecSet out{r, {}};
  for (const Ideal& p : all.primes) {
    bool minimal = true;
    for (const Ideal& q : all.primes)
      if (!(q == p) && q.subset_of(p)) minimal = false;
    if (minimal) out.primes.push_back(p);
  }
  return out;
}

SpecSet max_spec(const RingPtr& r) {
  const SpecSet all = spec(r);
  SpecSet out{r, {}};
  for (const Ideal& p : all.primes)
    if (is_maximal(p)) out.primes.push_back(p);
  return out;
}

std::pair<RingPtr, RingHom> residue_field(const Ideal& p) {
  if (!is_prime(p))
    throw Error(ErrorCode::kNotPrime, p.to_string() + " is not prime in " + p.ring()->label());
  auto [field, map] = quotient(p);
  // Finite domains are fields.
  if (!field->is_field())
    throw Error(ErrorCode::kNotPrime, "residue ring is not a field");
  return {field, map};
}

PrimeMask vanishing_set(const SpecSet& s, Elem f) {
  PrimeMask m = 0;
  for (std::size_t i = 0; i < s.primes.size(); ++i)
    if (s.primes[i].contains(f)) m |= PrimeMask{1} << i;
  return m;
}

PrimeMask nonvanishing_set(const SpecSet& s, Elem f) {
  return s.full() & ~vanishing_set(s, f);
}

Ideal preimage(const RingHom& phi, const Ideal& q) {
  ElementSet s;
  for (std::size_t a = 0; a < phi.source()->order(); ++a)
    if (q.contains(phi(Elem(a)))) s.set(a);
  return Ideal::trusted(phi.source(), s);
}

std::vector<std::size_t> pullback_spec(const RingHom& phi, const SpecSet& source_spec,
                                       const SpecSet& target_spec) {
  std::vector<std::size_t> out;
  for (const Ideal& q : target_spec.primes) {
    const Ideal p = preimage(phi, q);
    if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, "pullback is not prime");
    const std::size_t idx = source_spec.index_of(p);
    if (idx == source_spec.size())
      throw Error(ErrorCode::kInvalidArgument, "pullback missing from source spectrum");
    out.push_back(idx);
  }
  return out;
}

}  // namespace spectra
