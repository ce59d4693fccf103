// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

// Ideals, radicals, quotients and the certificate-bearing decisions on
// catalog rings.

#include <algorithm>

#include "spectra/error.hpp"
#include "spectra/ideal_lattice.hpp"
#include "spectra/number_theory.hpp"
#include "spectra/sym_ring.hpp"

namespace spectra {

using nlohmann::json;

namespace {

const mpz_class& zval(const SymElem& e) { return std::get<mpz_class>(e.value); }
const FqPoly& pval(const SymElem& e) { return std::get<FqPoly>(e.value); }

json ejson(const SymRing& r, const SymElem& e) { return element_to_json(r, e); }

mpz_class zgcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class zpow(const mpz_class& p, unsigned e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
  return r;
}

FqPoly one_poly(const FieldPtr& f) { return FqPoly::constant(f, f->one()); }

// Tabulated rings are re-read through their label, so their certificates
// use the finite engine.
Certificate cert(CertKind kind, const SymRing& r, json payload) {
  return Certificate{kind, r.expr(), r.kind() == SymKind::kLifted ? "finite" : "symbolic", std::move(payload)};
}

std::optional<Elem> principal_finite_generator(const RingPtr& r, const Ideal& i) {
  for (std::size_t g = 0; g < r->order(); ++g)
    if (i.contains(Elem(g)) && ideal_generated(r, {Elem(g)}) == i) return Elem(g);
  return std::nullopt;
}

std::vector<SymElem> finite_ideal_generators(const RingPtr& r, const Ideal& i) {
  if (auto g = principal_finite_generator(r, i)) return {SymElem{FiniteElem{*g}}};
  std::vector<SymElem> out;
  for (Elem e : i.elements()) out.push_back({FiniteElem{e}});
  return out;
}

Ideal finite_ideal(const SymIdeal& i) {
  std::vector<Elem> gens;
  for (const SymElem& g : i.generators)
    gens.push_back(std::get<FiniteElem>(normalize(*i.ring, g).value).index);
  return ideal_generated(i.ring->finite(), gens);
}

json members_json(const Ideal& i) {
  json a = json::array();
  for (Elem e : i.elements()) a.push_back(e);
  return a;
}

// Finite list of primes with a completeness argument the verifier can
// replay: "divisors" (all prime divisors of the modulus), "local" (the one
// maximal ideal of a localization), "domain" (just (0)), "table" (ideals of
// a tabulated ring whose union is the set of non-units), "components".
json prime_list_payload(const SymPtr& r, bool maximal) {
  switch (r->kind()) {
    case SymKind::kIntegers:
    case SymKind::kPoly:
      if (maximal) throw Error(ErrorCode::kInvalidArgument, "Max of " + r->expr() + " is infinite");
      return {{"method", "domain"}};
    case SymKind::kLocalize:
      if (!maximal) return {{"method", "domain"}};
      if (!r->poly_based()) return {{"method", "local"}, {"prime", ejson(*r->base(), {r->int_modulus()})}};
      return {{"method", "local"}, {"prime", ejson(*r->base(), {r->poly_modulus()})}};
    case SymKind::kQuotZ: {
      json ps = json::array();
      if (r->int_modulus() != 1)
        for (const auto& [p, e] : factor_integer(r->int_modulus()).factors)
          ps.push_back(ejson(*SymRing::integers(), {p}));
      return {{"method", "divisors"}, {"primes", ps}};
    }
    case SymKind::kQuotPoly: {
      json ps = json::array();
      if (r->poly_modulus().degree() >= 1)
        for (const auto& [f, e] : factor(r->poly_modulus()).factors)
          ps.push_back(ejson(*SymRing::poly(r->field()->q()), {f}));
      return {{"method", "divisors"}, {"primes", ps}};
    }
    case SymKind::kProduct: {
      json cs = json::array();
      for (const SymPtr& f : r->factors()) cs.push_back(prime_list_payload(f, maximal));
      return {{"method", "components"}, {"components", cs}};
    }
    case SymKind::kLifted: {
      json ps = json::array();
      const SpecSet s = maximal ? max_spec(r->finite()) : min_spec(r->finite());
      for (const Ideal& p : s.primes) ps.push_back(members_json(p));
      return {{"method", "table"}, {"primes", ps}};
    }
  }
  return nullptr;
}

}  // namespace

// Factoring and ideals ---------------------------------------------------------

SymFactorization factor(const SymRing& r, const SymElem& f0) {
  const SymElem f = normalize(r, f0);
  SymFactorization out;
  if (r.kind() == SymKind::kIntegers) {
    const IntFactorization fz = factor_integer(zval(f));
    out.unit = {mpz_class(fz.unit)};
    for (const auto& [p, e] : fz.factors) out.factors.emplace_back(SymElem{p}, e);
    return out;
  }
  if (r.kind() == SymKind::kPoly) {
    const PolyFactorization fp = factor(pval(f));
    out.unit = {FqPoly::constant(r.field(), fp.unit)};
    for (const auto& [g, e] : fp.factors) out.factors.emplace_back(SymElem{g}, e);
    return out;
  }
  throw Error(ErrorCode::kInvalidArgument, "factoring needs Z or F_q[x], got " + r.expr());
}

std::string SymIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) s += ",";
    s += spectra::to_string(*ring, generators[i]);
  }
  return s + ")";
}

SymElem canonical_generator(const SymIdeal& i) {
  const SymRing& r = *i.ring;
  switch (r.kind()) {
    case SymKind::kIntegers: {
      mpz_class g = 0;
      for (const SymElem& e : i.generators) g = zgcd(g, zval(normalize(r, e)));
      return {g};
    }
    case SymKind::kPoly: {
      FqPoly g = FqPoly::zero(r.field());
      for (const SymElem& e : i.generators) g = gcd(g, pval(normalize(r, e)));
      return {g};
    }
    case SymKind::kQuotZ: {
      mpz_class g = r.int_modulus();
      for (const SymElem& e : i.generators) g = zgcd(g, zval(normalize(r, e)));
      return normalize(r, {g});
    }
    case SymKind::kQuotPoly: {
      FqPoly g = r.poly_modulus();
      for (const SymElem& e : i.generators) g = gcd(g, pval(normalize(r, e)));
      return normalize(r, {g});
    }
    case SymKind::kLocalize: {
      std::optional<unsigned> v;
      for (const SymElem& e : i.generators) {
        const SymElem n = normalize(r, e);
        if (sym_is_zero(r, n)) continue;
        const unsigned w = r.poly_based()
                               ? valuation(std::get<PolyFraction>(n.value).num, r.poly_modulus())
                               : valuation(std::get<Fraction>(n.value).num, r.int_modulus());
        v = v ? std::min(*v, w) : w;
      }
      if (!v) return sym_zero(r);
      if (r.poly_based()) return normalize(r, {pow(r.poly_modulus(), *v)});
      return normalize(r, {zpow(r.int_modulus(), *v)});
    }
    case SymKind::kProduct: {
      Tuple t;
      for (std::size_t k = 0; k < r.factors().size(); ++k) {
        SymIdeal comp{r.factors()[k], {}};
        for (const SymElem& e : i.generators)
          comp.generators.push_back(std::get<Tuple>(normalize(r, e).value)[k]);
        t.push_back(canonical_generator(comp));
      }
      return {t};
    }
    case SymKind::kLifted: {
      const Ideal fi = finite_ideal(i);
      if (auto g = principal_finite_generator(r.finite(), fi)) return {FiniteElem{*g}};
      throw Error(ErrorCode::kInvalidArgument, "ideal is not principal in " + r.expr());
    }
  }
  return {};
}

bool ideal_contains(const SymIdeal& i, const SymElem& f0) {
  const SymRing& r = *i.ring;
  const SymElem f = normalize(r, f0);
  if (r.kind() == SymKind::kLifted) return finite_ideal(i).contains(std::get<FiniteElem>(f.value).index);
  if (r.kind() == SymKind::kProduct) {
    for (std::size_t k = 0; k < r.factors().size(); ++k) {
      SymIdeal comp{r.factors()[k], {}};
      for (const SymElem& e : i.generators)
        comp.generators.push_back(std::get<Tuple>(normalize(r, e).value)[k]);
      if (!ideal_contains(comp, std::get<Tuple>(f.value)[k])) return false;
    }
    return true;
  }
  const SymElem g = canonical_generator(i);
  switch (r.kind()) {
    case SymKind::kIntegers:
      return zval(g) == 0 ? zval(f) == 0 : mpz_divisible_p(zval(f).get_mpz_t(), zval(g).get_mpz_t()) != 0;
    case SymKind::kPoly:
      return divides(pval(g), pval(f));
    case SymKind::kQuotZ: {
      const mpz_class d = zval(g) == 0 ? r.int_modulus() : zval(g);
      return mpz_divisible_p(zval(f).get_mpz_t(), d.get_mpz_t()) != 0;
    }
    case SymKind::kQuotPoly: {
      const FqPoly d = pval(g).is_zero() ? r.poly_modulus() : pval(g);
      return divides(d, pval(f));
    }
    case SymKind::kLocalize: {
      if (sym_is_zero(r, f)) return true;
      if (sym_is_zero(r, g)) return false;
      if (r.poly_based())
        return valuation(std::get<PolyFraction>(f.value).num, r.poly_modulus()) >=
               valuation(std::get<PolyFraction>(g.value).num, r.poly_modulus());
      return valuation(std::get<Fraction>(f.value).num, r.int_modulus()) >=
             valuation(std::get<Fraction>(g.value).num, r.int_modulus());
    }
    default:
      return false;
  }
}

bool ideal_equal(const SymIdeal& a, const SymIdeal& b) {
  for (const SymElem& g : a.generators)
    if (!ideal_contains(b, g)) return false;
  for (const SymElem& g : b.generators)
    if (!ideal_contains(a, g)) return false;
  return true;
}

namespace {

SymIdeal radical_ideal(const SymPtr& r, bool jacobson) {
  switch (r->kind()) {
    case SymKind::kIntegers:
    case SymKind::kPoly:
      return {r, {sym_zero(*r)}};
    case SymKind::kLocalize:
      if (!jacobson) return {r, {sym_zero(*r)}};
      if (r->poly_based()) return {r, {normalize(*r, {r->poly_modulus()})}};
      return {r, {normalize(*r, {r->int_modulus()})}};
    case SymKind::kQuotZ:
      return {r, {normalize(*r, {r->int_modulus() == 1 ? mpz_class(1) : radical_of(r->int_modulus())})}};
    case SymKind::kQuotPoly:
      if (r->poly_modulus().degree() < 1) return {r, {sym_zero(*r)}};
      return {r, {normalize(*r, {radical_of(r->poly_modulus())})}};
    case SymKind::kProduct: {
      Tuple t;
      for (const SymPtr& f : r->factors()) t.push_back(canonical_generator(radical_ideal(f, jacobson)));
      return {r, {SymElem{t}}};
    }
    case SymKind::kLifted: {
      const Ideal i = jacobson ? jacobson_radical(r->finite()) : nilradical(r->finite());
      return {r, finite_ideal_generators(r->finite(), i)};
    }
  }
  return {r, {}};
}

}  // namespace

SymIdeal nilradical_sym(const SymPtr& r) { return radical_ideal(r, false); }
SymIdeal jacobson_radical_sym(const SymPtr& r) { return radical_ideal(r, true); }

SymPtr quotient_by(const SymIdeal& i) {
  const SymPtr& r = i.ring;
  switch (r->kind()) {
    case SymKind::kLifted:
      return SymRing::lifted(quotient(finite_ideal(i)).first);
    case SymKind::kProduct: {
      std::vector<SymPtr> fs;
      const Tuple g = std::get<Tuple>(canonical_generator(i).value);
      for (std::size_t k = 0; k < g.size(); ++k) fs.push_back(quotient_by({r->factors()[k], {g[k]}}));
      return SymRing::product(fs);
    }
    default:
      break;
  }
  const SymElem g = canonical_generator(i);
  switch (r->kind()) {
    case SymKind::kIntegers:
      return zval(g) == 0 ? r : SymRing::quot_z(zval(g));
    case SymKind::kPoly:
      return pval(g).is_zero() ? r : SymRing::quot_poly(pval(g));
    case SymKind::kQuotZ:
      return zval(g) == 0 ? r : SymRing::quot_z(zval(g));
    case SymKind::kQuotPoly:
      return pval(g).is_zero() ? r : SymRing::quot_poly(pval(g));
    case SymKind::kLocalize:
      if (sym_is_zero(*r, g)) return r;
      if (r->poly_based()) return SymRing::quot_poly(std::get<PolyFraction>(g.value).num);
      return SymRing::quot_z(std::get<Fraction>(g.value).num);
    default:
      break;
  }
  return r;
}

SymElem quotient_map(const SymIdeal& i, const SymPtr& q, const SymElem& f0) {
  const SymPtr& r = i.ring;
  const SymElem f = normalize(*r, f0);
  if (q.get() == r.get()) return f;
  switch (r->kind()) {
    case SymKind::kIntegers:
    case SymKind::kQuotZ:
      return normalize(*q, {zval(f)});
    case SymKind::kPoly:
    case SymKind::kQuotPoly:
      return normalize(*q, {pval(f)});
    case SymKind::kLocalize:
      if (!r->poly_based()) {
        const Fraction& x = std::get<Fraction>(f.value);
        const SymElem den_inv = *sym_inverse(*q, normalize(*q, {x.den}));
        return sym_mul(*q, normalize(*q, {x.num}), den_inv);
      } else {
        const PolyFraction& x = std::get<PolyFraction>(f.value);
        const SymElem den_inv = *sym_inverse(*q, normalize(*q, {x.den}));
        return sym_mul(*q, normalize(*q, {x.num}), den_inv);
      }
    case SymKind::kProduct: {
      const Tuple g = std::get<Tuple>(canonical_generator(i).value);
      const Tuple& x = std::get<Tuple>(f.value);
      Tuple t;
      for (std::size_t k = 0; k < x.size(); ++k) {
        const SymIdeal comp{r->factors()[k], {g[k]}};
        t.push_back(quotient_map(comp, q->factors()[k], x[k]));
      }
      return {t};
    }
    case SymKind::kLifted: {
      const auto [qr, pi] = quotient(finite_ideal(i));
      return {FiniteElem{pi(std::get<FiniteElem>(f.value).index)}};
    }
  }
  return f;
}

// Absolute flatness ------------------------------------------------------------

namespace {

json flat_payload(const SymPtr& r, bool& flat) {
  switch (r->kind()) {
    case SymKind::kIntegers:
      flat = false;
      return {{"method", "valuation"}, {"element", 2}, {"prime", 2}};
    case SymKind::kPoly:
      flat = false;
      return {{"method", "degree"}, {"element", ejson(*r, {FqPoly::x(r->field())})}};
    case SymKind::kLocalize:
      flat = false;
      if (!r->poly_based())
        return {{"method", "valuation"},
                {"element", ejson(*r, {r->int_modulus()})},
                {"prime", ejson(*r->base(), {r->int_modulus()})}};
      return {{"method", "valuation"},
              {"element", ejson(*r, {r->poly_modulus()})},
              {"prime", ejson(*r->base(), {r->poly_modulus()})}};
    case SymKind::kQuotZ: {
      json primes = json::array();
      unsigned top = 0;
      mpz_class rad = 1;
      if (r->int_modulus() != 1)
        for (const auto& [p, e] : factor_integer(r->int_modulus()).factors) {
          primes.push_back(ejson(*SymRing::integers(), {p}));
          top = std::max(top, e);
          rad *= p;
        }
      flat = top <= 1;
      if (flat) return {{"method", "squarefree"}, {"primes", primes}};
      return {{"method", "nilpotent"}, {"element", ejson(*r, {rad})}, {"exponent", top}};
    }
    case SymKind::kQuotPoly: {
      json primes = json::array();
      unsigned top = 0;
      FqPoly rad = one_poly(r->field());
      if (r->poly_modulus().degree() >= 1)
        for (const auto& [f, e] : factor(r->poly_modulus()).factors) {
          primes.push_back(ejson(*SymRing::poly(r->field()->q()), {f}));
          top = std::max(top, e);
          rad = rad * f;
        }
      flat = top <= 1;
      if (flat) return {{"method", "squarefree"}, {"primes", primes}};
      return {{"method", "nilpotent"}, {"element", ejson(*r, {rad})}, {"exponent", top}};
    }
    case SymKind::kProduct: {
      json comps = json::array();
      for (std::size_t i = 0; i < r->factors().size(); ++i) {
        bool f = true;
        json inner = flat_payload(r->factors()[i], f);
        if (!f) {
          flat = false;
          return {{"method", "component"}, {"index", i}, {"inner", inner}};
        }
        comps.push_back(inner);
      }
      flat = true;
      return {{"method", "components"}, {"components", comps}};
    }
    case SymKind::kLifted: {
      const AbsoluteFlatness af = is_absolutely_flat(*r->finite());
      flat = af.flat;
      if (!af.flat) return {{"method", "exhaustive"}, {"element", *af.counterexample}};
      json pairs = json::array();
      for (const auto& w : af.witnesses) pairs.push_back({w.element, w.inverse});
      return {{"method", "table"}, {"pairs", pairs}};
    }
  }
  return nullptr;
}

}  // namespace

SymVerdict is_absolutely_flat_sym(const SymPtr& r) {
  bool flat = true;
  json payload = flat_payload(r, flat);
  return {flat, cert(flat ? CertKind::kQuasiInverse : CertKind::kAbsFlatCounterexample, *r,
                     std::move(payload))};
}

// Compactness ------------------------------------------------------------------

namespace {

constexpr std::size_t kEuclidPoolZ = 30;
constexpr std::size_t kEuclidPoolPoly = 12;
constexpr std::size_t kEuclidMaxCollection = 4;

std::vector<std::size_t> pick_distinct(std::mt19937_64& rng, std::size_t pool, std::size_t k) {
  std::vector<std::size_t> out;
  while (out.size() < k) {
    const std::size_t i = rng() % pool;
    if (std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A maximal ideal avoided by every V(m_i) of the sub-collection: a prime
// factor of m_1...m_k + 1.
json euclid_payload(const SymPtr& r, std::mt19937_64& rng, std::size_t samples) {
  json out = json::array();
  if (r->kind() == SymKind::kIntegers) {
    const auto pool = first_primes(kEuclidPoolZ);
    for (std::size_t s = 0; s < samples; ++s) {
      const auto idx = pick_distinct(rng, pool.size(), 1 + rng() % kEuclidMaxCollection);
      mpz_class prod = 1;
      json coll = json::array();
      for (std::size_t i : idx) {
        prod *= pool[i];
        coll.push_back(ejson(*r, {pool[i]}));
      }
      const mpz_class n = prod + 1;
      const mpz_class w = factor_integer(n).factors.front().first;
      out.push_back({{"collection", coll}, {"witness", ejson(*r, {w})}, {"cofactor", ejson(*r, {mpz_class(n / w)})}});
    }
  } else {
    std::vector<FqPoly> pool;
    for (const SymPrime& p : max_spectrum(r).families.front().enumerate(kEuclidPoolPoly))
      pool.push_back(p.f);
    for (std::size_t s = 0; s < samples; ++s) {
      const auto idx = pick_distinct(rng, pool.size(), 1 + rng() % kEuclidMaxCollection);
      FqPoly prod = one_poly(r->field());
      json coll = json::array();
      for (std::size_t i : idx) {
        prod = prod * pool[i];
        coll.push_back(ejson(*r, {pool[i]}));
      }
      const FqPoly n = prod + one_poly(r->field());
      const FqPoly w = factor(n).factors.front().first;
      out.push_back({{"collection", coll},
                     {"witness", ejson(*r, {w})},
                     {"cofactor", ejson(*r, {divmod(n, w).first})}});
    }
  }
  return {{"method", "euclid"}, {"samples", out}};
}

json noncompact_payload(const SymPtr& r, std::mt19937_64& rng, std::size_t samples) {
  if (r->kind() == SymKind::kIntegers || r->kind() == SymKind::kPoly)
    return euclid_payload(r, rng, samples);
  if (r->kind() == SymKind::kProduct)
    for (std::size_t i = 0; i < r->factors().size(); ++i)
      if (!max_spectrum(r->factors()[i]).finite())
        return {{"method", "component"}, {"index", i}, {"inner", noncompact_payload(r->factors()[i], rng, samples)}};
  throw Error(ErrorCode::kInvalidArgument, "Max of " + r->expr() + " is finite");
}

}  // namespace

SymVerdict max_flat_compact(const SymPtr& r, std::uint64_t seed, std::size_t samples) {
  if (max_spectrum(r).finite())
    return {true, cert(CertKind::kFiniteSubcover, *r, {{"max", prime_list_payload(r, true)}})};
  std::mt19937_64 rng(seed);
  return {false, cert(CertKind::kEuclidNoncompact, *r, noncompact_payload(r, rng, samples))};
}

SymVerdict min_zariski_compact(const SymPtr& r, const std::vector<SymElem>& cover) {
  std::vector<std::size_t> sub;
  for (const SymPrime& p : min_primes(r)) {
    std::size_t i = 0;
    while (i < cover.size() && contains(p, cover[i])) ++i;
    if (i == cover.size())
      throw Error(ErrorCode::kInvalidArgument,
                  "the family does not cover the minimal prime " + p.to_string());
    sub.push_back(i);
  }
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  json c = json::array();
  for (const SymElem& e : cover) c.push_back(ejson(*r, e));
  return {true, cert(CertKind::kFiniteSubcover, *r,
                     {{"cover", c}, {"subcover", sub}, {"min", prime_list_payload(r, false)}})};
}

// Residue fields ---------------------------------------------------------------

ResidueField residue_field_sym(const SymPrime& p) {
  switch (p.kind) {
    case PrimeKind::kZero:
      if (p.ring->kind() == SymKind::kIntegers)
        return {ResidueField::Kind::kRationals, nullptr, nullptr, "Q"};
      return {ResidueField::Kind::kFunctionField, nullptr, p.ring->field(),
              "F" + std::to_string(p.ring->field()->q()) + "(x)"};
    case PrimeKind::kPrincipalZ: {
      if (p.p > mpz_class(static_cast<unsigned long>(kMaxOrder)))
        return {ResidueField::Kind::kPrimeField, nullptr, nullptr, "F_" + p.p.get_str(), p.p};
      RingPtr k = make_zmod(p.p.get_ui());
      return {ResidueField::Kind::kFinite, k, nullptr, k->label()};
    }
    case PrimeKind::kPrincipalPoly: {
      const std::string name = p.ring->expr() + "/(" + p.f.to_string() + ")";
      RingPtr k = poly_quotient_ring(p.f, name);
      return {ResidueField::Kind::kFinite, k, nullptr, name};
    }
    case PrimeKind::kContracted:
    case PrimeKind::kComponent:
      return residue_field_sym(*p.inner);
    case PrimeKind::kFinite: {
      RingPtr k = residue_field(Ideal::trusted(p.ring->finite(), p.mask)).first;
      return {ResidueField::Kind::kFinite, k, nullptr, k->label()};
    }
  }
  return {};
}

SymElem residue_map(const SymPrime& p, const ResidueField& k, const SymElem& f0) {
  const SymElem f = normalize(*p.ring, f0);
  switch (p.kind) {
    case PrimeKind::kZero:
      if (p.ring->kind() == SymKind::kIntegers) return {Fraction{zval(f), 1}};
      return {PolyFraction{pval(f), one_poly(p.ring->field())}};
    case PrimeKind::kPrincipalZ: {
      mpz_class r;
      mpz_mod(r.get_mpz_t(), zval(f).get_mpz_t(), p.p.get_mpz_t());
      if (k.kind == ResidueField::Kind::kPrimeField) return {r};
      return {FiniteElem{Elem(r.get_ui())}};
    }
    case PrimeKind::kPrincipalPoly:
      return {FiniteElem{Elem((pval(f) % p.f).index())}};
    case PrimeKind::kContracted:
      switch (p.ring->kind()) {
        case SymKind::kQuotZ:
        case SymKind::kQuotPoly:
          return residue_map(*p.inner, k, f);
        default: {
          const SymRing& base = *p.ring->base();
          if (!p.ring->poly_based()) {
            const Fraction& x = std::get<Fraction>(f.value);
            if (p.inner->kind == PrimeKind::kZero) return {x};
            const SymElem n = residue_map(*p.inner, k, {x.num});
            const SymElem d = residue_map(*p.inner, k, {x.den});
            if (k.kind == ResidueField::Kind::kPrimeField) {
              mpz_class di, out;
              mpz_invert(di.get_mpz_t(), zval(d).get_mpz_t(), k.characteristic.get_mpz_t());
              out = zval(n) * di;
              mpz_mod(out.get_mpz_t(), out.get_mpz_t(), k.characteristic.get_mpz_t());
              return {out};
            }
            const Elem di = *k.finite->inverse(std::get<FiniteElem>(d.value).index);
            return {FiniteElem{k.finite->mul(std::get<FiniteElem>(n.value).index, di)}};
          }
          const PolyFraction& x = std::get<PolyFraction>(f.value);
          if (p.inner->kind == PrimeKind::kZero) return {x};
          const SymElem n = residue_map(*p.inner, k, normalize(base, {x.num}));
          const SymElem d = residue_map(*p.inner, k, normalize(base, {x.den}));
          const Elem di = *k.finite->inverse(std::get<FiniteElem>(d.value).index);
          return {FiniteElem{k.finite->mul(std::get<FiniteElem>(n.value).index, di)}};
        }
      }
    case PrimeKind::kComponent:
      return residue_map(*p.inner, k, std::get<Tuple>(f.value)[p.index]);
    case PrimeKind::kFinite: {
      const auto [q, pi] = residue_field(Ideal::trusted(p.ring->finite(), p.mask));
      return {FiniteElem{pi(std::get<FiniteElem>(f.value).index)}};
    }
  }
  return {};
}

namespace {

// Kernel of the base ring (Z or F_q[x]) into k, read off from k alone.
SymPrime base_kernel(const SymPtr& base, const ResidueField& k, const SymPrime& via) {
  if (k.kind == ResidueField::Kind::kPrimeField) return principal_prime(base, k.characteristic);
  if (k.kind != ResidueField::Kind::kFinite) return zero_prime(base);
  const FiniteRing& f = *k.finite;
  if (base->kind() == SymKind::kIntegers) {
    unsigned long c = 1;
    for (Elem s = f.one(); s != f.zero(); s = f.add(s, f.one())) ++c;
    return principal_prime(base, mpz_class(c));
  }
  // Minimal polynomial of the image of x.
  const FieldPtr& F = base->field();
  const Elem xi = std::get<FiniteElem>(residue_map(via, k, {FqPoly::x(F)}).value).index;
  std::vector<Elem> consts;
  for (unsigned c = 0; c < F->q(); ++c)
    consts.push_back(std::get<FiniteElem>(residue_map(via, k, {FqPoly::constant(F, Elem(c))}).value).index);
  for (unsigned d = 1;; ++d) {
    std::uint64_t n = 1;
    for (unsigned i = 0; i < d; ++i) n *= F->q();
    for (std::uint64_t idx = 0; idx < n; ++idx) {
      const FqPoly g = FqPoly::monic_from_index(F, d, idx);
      Elem acc = f.zero();
      for (int i = g.degree(); i >= 0; --i) acc = f.add(f.mul(acc, xi), consts[g.coeff(i)]);
      if (acc == f.zero()) return principal_prime(base, g);
    }
  }
}

}  // namespace

SymPrime residue_kernel(const SymPrime& p, const ResidueField& k) {
  switch (p.kind) {
    case PrimeKind::kZero:
    case PrimeKind::kPrincipalZ:
    case PrimeKind::kPrincipalPoly:
      return base_kernel(p.ring, k, p);
    case PrimeKind::kContracted:
      return contracted_prime(p.ring, residue_kernel(*p.inner, k));
    case PrimeKind::kComponent:
      return component_prime(p.ring, p.index, residue_kernel(*p.inner, k));
    case PrimeKind::kFinite: {
      const auto [q, pi] = residue_field(Ideal::trusted(p.ring->finite(), p.mask));
      return finite_prime(p.ring, hom_kernel(pi).members());
    }
  }
  return p;
}

// Radicals -----------------------------------------------------------------------

namespace {

struct Bezout {
  SymElem f;
  std::vector<SymElem> c;  // f = sum c_i g_i
  std::vector<SymElem> q;  // g_i = q_i f
};

Bezout bezout(const SymPtr& r, const std::vector<SymElem>& gens) {
  const SymRing& R = *r;
  Bezout b;
  switch (R.kind()) {
    case SymKind::kIntegers:
    case SymKind::kQuotZ: {
      mpz_class g = R.kind() == SymKind::kQuotZ ? R.int_modulus() : mpz_class(0);
      std::vector<mpz_class> c(gens.size(), 0);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const IntXgcd x = xgcd(g, zval(normalize(R, gens[i])));
        for (auto& ci : c) ci *= x.s;
        c[i] = x.t;
        g = x.g;
      }
      b.f = normalize(R, {g});
      const mpz_class d = g == 0 ? mpz_class(1) : g;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        b.c.push_back(normalize(R, {c[i]}));
        b.q.push_back(normalize(R, {mpz_class(zval(normalize(R, gens[i])) / d)}));
      }
      return b;
    }
    case SymKind::kPoly:
    case SymKind::kQuotPoly: {
      FqPoly g = R.kind() == SymKind::kQuotPoly ? R.poly_modulus() : FqPoly::zero(R.field());
      std::vector<FqPoly> c(gens.size(), FqPoly::zero(R.field()));
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const PolyXgcd x = xgcd(g, pval(normalize(R, gens[i])));
        for (auto& ci : c) ci = ci * x.s;
        c[i] = x.t;
        g = x.g;
      }
      b.f = normalize(R, {g});
      for (std::size_t i = 0; i < gens.size(); ++i) {
        b.c.push_back(normalize(R, {c[i]}));
        const FqPoly gi = pval(normalize(R, gens[i]));
        b.q.push_back(normalize(R, {g.is_zero() ? FqPoly::zero(R.field()) : divmod(gi, g).first}));
      }
      return b;
    }
    case SymKind::kLocalize: {
      b.f = canonical_generator({r, gens});
      std::optional<std::size_t> pick;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (!pick && !sym_is_zero(R, gens[i]) && ideal_contains({r, {gens[i]}}, b.f)) pick = i;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const SymElem gi = normalize(R, gens[i]);
        if (pick && i == *pick) {
          // f / g_i is a unit of the localization.
          if (!R.poly_based()) {
            const Fraction& f = std::get<Fraction>(b.f.value);
            const Fraction& g = std::get<Fraction>(gi.value);
            b.c.push_back(normalize(R, {Fraction{f.num * g.den, f.den * g.num}}));
          } else {
            const PolyFraction& f = std::get<PolyFraction>(b.f.value);
            const PolyFraction& g = std::get<PolyFraction>(gi.value);
            b.c.push_back(normalize(R, {PolyFraction{f.num * g.den, f.den * g.num}}));
          }
        } else {
          b.c.push_back(sym_zero(R));
        }
        if (sym_is_zero(R, b.f)) {
          b.q.push_back(sym_zero(R));
        } else if (!R.poly_based()) {
          const Fraction& f = std::get<Fraction>(b.f.value);
          const Fraction& g = std::get<Fraction>(gi.value);
          b.q.push_back(normalize(R, {Fraction{g.num * f.den, g.den * f.num}}));
        } else {
          const PolyFraction& f = std::get<PolyFraction>(b.f.value);
          const PolyFraction& g = std::get<PolyFraction>(gi.value);
          b.q.push_back(normalize(R, {PolyFraction{g.num * f.den, g.den * f.num}}));
        }
      }
      return b;
    }
    case SymKind::kProduct: {
      std::vector<Bezout> parts;
      for (std::size_t k = 0; k < R.factors().size(); ++k) {
        std::vector<SymElem> comp;
        for (const SymElem& g : gens) comp.push_back(std::get<Tuple>(normalize(R, g).value)[k]);
        parts.push_back(bezout(R.factors()[k], comp));
      }
      Tuple f;
      for (const Bezout& p : parts) f.push_back(p.f);
      b.f = {f};
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Tuple c, q;
        for (const Bezout& p : parts) {
          c.push_back(p.c[i]);
          q.push_back(p.q[i]);
        }
        b.c.push_back({c});
        b.q.push_back({q});
      }
      return b;
    }
    case SymKind::kLifted: {
      // Breadth-first over the ideal, tracking one combination per element.
      const FiniteRing& t = *R.finite();
      std::vector<Elem> g;
      for (const SymElem& e : gens) g.push_back(std::get<FiniteElem>(normalize(R, e).value).index);
      std::vector<std::optional<std::vector<Elem>>> combo(t.order());
      combo[t.zero()] = std::vector<Elem>(g.size(), t.zero());
      std::vector<Elem> queue = {t.zero()};
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Elem e = queue[head];
        for (std::size_t i = 0; i < g.size(); ++i)
          for (std::size_t x = 0; x < t.order(); ++x) {
            const Elem n = t.add(e, t.mul(Elem(x), g[i]));
            if (combo[n]) continue;
            combo[n] = combo[e];
            (*combo[n])[i] = t.add((*combo[n])[i], Elem(x));
            queue.push_back(n);
          }
      }
      std::vector<Elem> members = queue;
      std::sort(members.begin(), members.end());
      const Ideal ideal = ideal_generated(R.finite(), g);
      for (Elem f : members) {
        if (ideal_generated(R.finite(), {f}) != ideal) continue;
        b.f = {FiniteElem{f}};
        for (std::size_t i = 0; i < g.size(); ++i) {
          b.c.push_back({FiniteElem{(*combo[f])[i]}});
          for (std::size_t x = 0; x < t.order(); ++x)
            if (t.mul(Elem(x), f) == g[i]) {
              b.q.push_back({FiniteElem{Elem(x)}});
              break;
            }
        }
        return b;
      }
      break;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "no Bezout data for " + R.expr());
}

bool has_lifted_part(const SymRing& r) {
  if (r.kind() == SymKind::kLifted) return true;
  if (r.kind() == SymKind::kProduct)
    for (const SymPtr& f : r.factors())
      if (has_lifted_part(*f)) return true;
  return false;
}

}  // namespace

RadicalGeneration radical_finite_generation(const SymIdeal& i) {
  const SymPtr& r = i.ring;
  RadicalGeneration out;
  for (const SymElem& g : i.generators) out.generators.push_back(normalize(*r, g));
  json gens = json::array();
  for (const SymElem& g : out.generators) gens.push_back(ejson(*r, g));

  if (has_lifted_part(*r) && r->order()) {
    const RingPtr f = to_finite(*r);
    std::vector<Elem> idx;
    for (const SymElem& g : out.generators) idx.push_back(lift_element(*r, g));
    const Ideal fi = ideal_generated(f, idx);
    json fs = json::array();
    if (auto g = principal_finite_generator(f, fi)) {
      out.f.push_back(element_at(*r, *g));
    } else {
      out.f = out.generators;
    }
    for (const SymElem& e : out.f) fs.push_back(ejson(*r, e));
    out.certificate = cert(CertKind::kRadicalGenerators, *r,
                           {{"method", "closure"}, {"generators", gens}, {"f", fs}});
    return out;
  }

  const Bezout b = bezout(r, out.generators);
  out.f = {b.f};
  json c = json::array(), q = json::array();
  for (const SymElem& e : b.c) c.push_back(ejson(*r, e));
  for (const SymElem& e : b.q) q.push_back(json::array({ejson(*r, e)}));
  out.certificate = cert(CertKind::kRadicalGenerators, *r,
                         {{"method", "bezout"},
                          {"generators", gens},
                          {"f", json::array({ejson(*r, b.f)})},
                          {"bezout", json::array({c})},
                          {"quotients", q}});
  return out;
}

}  // namespace spectra
