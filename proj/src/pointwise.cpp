// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include "spectra/pointwise.hpp"

#include <algorithm>

#include "spectra/error.hpp"
#include "spectra/ideal_lattice.hpp"

namespace spectra {

namespace {

void check_invariants(PointwiseLocalization& l) {
  const FiniteRing& q = *l.result;
  l.relations_hold = true;
  for (const auto& [s, x] : l.quasi_inverses) {
    const Elem e = l.eta(s);
    l.relations_hold = l.relations_hold && q.mul(q.mul(e, e), x) == e && q.mul(e, q.mul(x, x)) == x;
  }
  const SpecSet src = spec(l.source);
  const SpecSet dst = spec(l.result);
  const std::vector<std::size_t> back = pullback_spec(l.eta, src, dst);
  std::vector<std::size_t> sorted = back;
  std::sort(sorted.begin(), sorted.end());
  l.spec_bijective = src.size() == dst.size() &&
                     std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  const Ideal k = hom_kernel(l.eta);
  const Ideal n = nilradical(l.source);
  l.kernel_in_nilradical = k.subset_of(n);
  l.kernel_is_nilradical = k == n;
}

}  // namespace

PointwiseLocalization pointwise_localize(const RingPtr& r, const std::vector<Elem>& s, std::size_t bound) {
  if (r->order() > bound)
    throw Error(ErrorCode::kBoundExceeded,
                "pointwise localization needs |R| <= " + std::to_string(bound) + ", got " + r->label());
  Ideal k = zero_ideal(r);
  for (;;) {
    const auto [q, pi] = quotient(k);
    std::vector<Elem> kill;
    for (const LocalFactor& lf : local_decomposition(q))
      for (Elem x : s) {
        const Elem c = lf.projection(pi(x));
        if (c != lf.factor->zero() && !lf.factor->is_unit(c)) kill.push_back(q->mul(lf.idempotent, pi(x)));
      }
    if (kill.empty()) break;
    k = preimage(pi, ideal_generated(q, kill));
  }
  auto [q, pi] = quotient(k);
  PointwiseLocalization l{r, s, q, pi, {}, false, false, false, false};
  for (Elem x : s) {
    const auto w = find_quasi_inverse(*q, pi(x));
    if (!w) throw Error(ErrorCode::kInvalidArgument, "kill fixpoint left " + r->name(x) + " without a quasi-inverse");
    l.quasi_inverses.emplace_back(x, w->inverse);
  }
  check_invariants(l);
  return l;
}

PointwiseLocalization full_pointwise_localize(const RingPtr& r, std::size_t bound) {
  std::vector<Elem> all(r->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = Elem(i);
  return pointwise_localize(r, all, bound);
}

UniversalPropertyReport verify_universal_property(const PointwiseLocalization& l,
                                                  const std::vector<RingPtr>& targets,
                                                  std::size_t target_bound) {
  UniversalPropertyReport rep;
  for (const RingPtr& a : targets) {
    if (a->order() > target_bound) continue;
    ++rep.targets;
    const std::vector<RingHom> from_r = enumerate_homs(l.source, a);
    const std::vector<RingHom> from_q = enumerate_homs(l.result, a);
    for (const RingHom& phi : from_r) {
      bool valid = true;
      for (Elem x : l.subset) valid = valid && find_quasi_inverse(*a, phi(x)).has_value();
      if (!valid) {
        ++rep.pairs_skipped;
        continue;
      }
      ++rep.pairs_checked;
      std::size_t found = 0;
      for (const RingHom& psi : from_q) {
        bool match = true;
        for (std::size_t x = 0; x < l.source->order() && match; ++x) match = psi(l.eta(Elem(x))) == phi(Elem(x));
        found += match;
      }
      if (found != 1) {
        std::string map;
        for (Elem v : phi.table()) map += (map.empty() ? "" : ",") + a->name(v);
        rep.violations.push_back(l.source->label() + " -> " + a->label() + " [" + map + "]: " +
                                 std::to_string(found) + " factorizations");
      }
    }
  }
  return rep;
}

FunctorialSquare functorial_square(const RingHom& phi, std::size_t bound) {
  const PointwiseLocalization la = full_pointwise_localize(phi.source(), bound);
  const PointwiseLocalization lb = full_pointwise_localize(phi.target(), bound);
  FunctorialSquare sq;
  for (const RingHom& cand : enumerate_homs(la.result, lb.result)) {
    bool match = true;
    for (std::size_t x = 0; x < phi.source()->order() && match; ++x)
      match = cand(la.eta(Elem(x))) == lb.eta(phi(Elem(x)));
    if (!match) continue;
    if (!sq.induced) sq.induced = cand;
    ++sq.candidates;
  }
  sq.commutes = sq.induced.has_value();
  return sq;
}

}  // namespace spectra
