// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

// Replay of certificates. Only exact arithmetic, probabilistic primality
// (GMP) and Rabin's irreducibility test are used here; none of the search
// procedures that produce certificates are called.

#include "spectra/certificate.hpp"

#include <functional>
#include <set>

#include "spectra/error.hpp"
#include "spectra/parser.hpp"
#include "spectra/sym_ring.hpp"

namespace spectra {

using nlohmann::json;

namespace {

constexpr std::pair<CertKind, const char*> kKindNames[] = {
    {CertKind::kFiniteSubcover, "finite_subcover"},
    {CertKind::kEuclidNoncompact, "euclid_noncompact"},
    {CertKind::kQuasiInverse, "quasi_inverse"},
    {CertKind::kAbsFlatCounterexample, "abs_flat_counterexample"},
    {CertKind::kSeparationWitness, "separation_witness"},
    {CertKind::kRadicalGenerators, "radical_generators"},
};

}  // namespace

std::string to_string(CertKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "unknown";
}

std::optional<CertKind> parse_cert_kind(const std::string& s) {
  for (const auto& [kind, name] : kKindNames)
    if (s == name) return kind;
  return std::nullopt;
}

json to_json(const Certificate& c) {
  return {{"kind", to_string(c.kind)}, {"ring", c.ring}, {"engine", c.engine}, {"payload", c.payload}};
}

Certificate certificate_from_json(const json& j) {
  try {
    Certificate c;
    const auto kind = parse_cert_kind(j.at("kind").get<std::string>());
    if (!kind) throw Error(ErrorCode::kParse, "unknown certificate kind " + j.at("kind").dump());
    c.kind = *kind;
    c.ring = j.at("ring").get<std::string>();
    c.engine = j.at("engine").get<std::string>();
    if (c.engine != "finite" && c.engine != "symbolic") throw Error(ErrorCode::kParse, "unknown engine " + c.engine);
    c.payload = j.at("payload");
    if (!c.payload.is_object()) throw Error(ErrorCode::kParse, "certificate payload must be an object");
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed certificate: ") + e.what());
  }
}

namespace {

struct Reject {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Reject{why};
}

using Pred = std::function<bool(const SymElem&)>;

// Primitive predicates -----------------------------------------------------------

bool prime_z(const mpz_class& p) { return p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0; }

bool irreducible(const FqPoly& f) { return f.degree() >= 1 && f.is_monic() && is_irreducible_rabin(f); }

bool zdiv(const mpz_class& d, const mpz_class& a) {
  return d == 0 ? a == 0 : mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

bool pdiv(const FqPoly& d, const FqPoly& a) { return d.is_zero() ? a.is_zero() : divmod(a, d).second.is_zero(); }

unsigned zval(mpz_class n, const mpz_class& p) {
  unsigned v = 0;
  while (n != 0 && zdiv(p, n)) {
    n /= p;
    ++v;
  }
  return v;
}

unsigned pval(FqPoly f, const FqPoly& p) {
  unsigned v = 0;
  while (!f.is_zero() && pdiv(p, f)) {
    f = divmod(f, p).first;
    ++v;
  }
  return v;
}

const mpz_class& int_of(const SymElem& e) { return std::get<mpz_class>(e.value); }
const FqPoly& poly_of(const SymElem& e) { return std::get<FqPoly>(e.value); }

SymElem el(const SymRing& r, const json& j) {
  try {
    return element_from_json(r, j);
  } catch (const std::exception& e) {
    throw Reject{std::string("bad element ") + j.dump() + ": " + e.what()};
  }
}

const json& field(const json& p, const char* name) {
  require(p.is_object() && p.contains(name), std::string("payload lacks '") + name + "'");
  return p.at(name);
}

// f in (g), by the structure of the ring.
bool principal_member(const SymRing& r, const SymElem& g, const SymElem& f) {
  switch (r.kind()) {
    case SymKind::kIntegers:
      return zdiv(int_of(g), int_of(f));
    case SymKind::kPoly:
      return pdiv(poly_of(g), poly_of(f));
    case SymKind::kQuotZ: {
      mpz_class d;
      mpz_gcd(d.get_mpz_t(), int_of(g).get_mpz_t(), r.int_modulus().get_mpz_t());
      return zdiv(d, int_of(f));
    }
    case SymKind::kQuotPoly:
      return pdiv(gcd(poly_of(g), r.poly_modulus()), poly_of(f));
    case SymKind::kLocalize:
      if (sym_is_zero(r, f)) return true;
      if (sym_is_zero(r, g)) return false;
      if (r.poly_based())
        return pval(std::get<PolyFraction>(f.value).num, r.poly_modulus()) >=
               pval(std::get<PolyFraction>(g.value).num, r.poly_modulus());
      return zval(std::get<Fraction>(f.value).num, r.int_modulus()) >=
             zval(std::get<Fraction>(g.value).num, r.int_modulus());
    case SymKind::kProduct: {
      const Tuple& a = std::get<Tuple>(g.value);
      const Tuple& b = std::get<Tuple>(f.value);
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!principal_member(*r.factors()[i], a[i], b[i])) return false;
      return true;
    }
    case SymKind::kLifted: {
      const FiniteRing& t = *r.finite();
      const Elem ge = std::get<FiniteElem>(g.value).index, fe = std::get<FiniteElem>(f.value).index;
      for (std::size_t x = 0; x < t.order(); ++x)
        if (t.mul(Elem(x), ge) == fe) return true;
      return false;
    }
  }
  return false;
}

// Saturation of gens under + and multiplication by the ring.
ElementSet closure(const FiniteRing& t, const std::vector<Elem>& gens) {
  ElementSet s;
  s.set(t.zero());
  std::vector<Elem> work(gens.begin(), gens.end());
  while (!work.empty()) {
    const Elem g = work.back();
    work.pop_back();
    if (s.test(g)) continue;
    std::vector<Elem> mult;
    for (std::size_t x = 0; x < t.order(); ++x) mult.push_back(t.mul(Elem(x), g));
    std::vector<Elem> cur;
    for (std::size_t y = 0; y < t.order(); ++y)
      if (s.test(y)) cur.push_back(Elem(y));
    for (Elem m : mult)
      for (Elem y : cur) {
        const Elem z = t.add(m, y);
        if (!s.test(z)) work.push_back(z);
      }
    s.set(g);
    for (Elem m : mult)
      if (!s.test(m)) work.push_back(m);
  }
  return s;
}

bool is_ideal_set(const FiniteRing& t, const ElementSet& s) {
  if (!s.test(t.zero())) return false;
  for (std::size_t a = 0; a < t.order(); ++a) {
    if (!s.test(a)) continue;
    for (std::size_t b = 0; b < t.order(); ++b) {
      if (s.test(b) && !s.test(t.add(Elem(a), Elem(b)))) return false;
      if (!s.test(t.mul(Elem(a), Elem(b)))) return false;
    }
  }
  return true;
}

bool is_prime_set(const FiniteRing& t, const ElementSet& s) {
  if (s.test(t.one()) || !is_ideal_set(t, s)) return false;
  for (std::size_t a = 0; a < t.order(); ++a)
    for (std::size_t b = a; b < t.order(); ++b)
      if (s.test(t.mul(Elem(a), Elem(b))) && !s.test(a) && !s.test(b)) return false;
  return true;
}

bool unit_in_table(const FiniteRing& t, Elem a) {
  for (std::size_t x = 0; x < t.order(); ++x)
    if (t.mul(a, Elem(x)) == t.one()) return true;
  return false;
}

Elem index_of(const FiniteRing& t, const json& j) {
  require(j.is_number_integer(), "expected an element index");
  const long long v = j.get<long long>();
  require(v >= 0 && v < static_cast<long long>(t.order()), "element index out of range");
  return Elem(v);
}

// Complete lists of primes ------------------------------------------------------

std::vector<Pred> prime_list(const SymPtr& r, const json& p, bool maximal) {
  const std::string method = field(p, "method").get<std::string>();
  if (method == "domain") {
    require(!maximal, "'domain' lists no maximal ideals");
    require(r->kind() == SymKind::kIntegers || r->kind() == SymKind::kPoly || r->kind() == SymKind::kLocalize,
            r->expr() + " is not a catalog domain");
    const SymPtr keep = r;
    return {[keep](const SymElem& x) { return sym_is_zero(*keep, x); }};
  }
  if (method == "local") {
    require(maximal && r->kind() == SymKind::kLocalize, "'local' needs Max of a localization");
    if (!r->poly_based()) {
      const mpz_class q = int_of(el(*r->base(), field(p, "prime")));
      require(q == r->int_modulus() && prime_z(q), "localizing prime mismatch");
      return {[q](const SymElem& x) { return zval(std::get<Fraction>(x.value).num, q) >= 1 || std::get<Fraction>(x.value).num == 0; }};
    }
    const FqPoly q = poly_of(el(*r->base(), field(p, "prime")));
    require(q == r->poly_modulus() && irreducible(q), "localizing prime mismatch");
    return {[q](const SymElem& x) {
      const FqPoly& n = std::get<PolyFraction>(x.value).num;
      return n.is_zero() || pval(n, q) >= 1;
    }};
  }
  if (method == "divisors") {
    std::vector<Pred> out;
    const json& ps = field(p, "primes");
    require(ps.is_array(), "'primes' must be an array");
    if (r->kind() == SymKind::kQuotZ) {
      mpz_class m = r->int_modulus();
      std::set<std::string> seen;
      for (const json& e : ps) {
        const mpz_class q = int_of(el(*SymRing::integers(), e));
        require(prime_z(q), q.get_str() + " is not prime");
        require(seen.insert(q.get_str()).second, "repeated prime");
        require(zdiv(q, m), q.get_str() + " does not divide the rest of the modulus");
        while (zdiv(q, m)) m /= q;
        out.push_back([q](const SymElem& x) { return zdiv(q, int_of(x)); });
      }
      require(m == 1, "listed primes miss a divisor of the modulus");
      return out;
    }
    require(r->kind() == SymKind::kQuotPoly, "'divisors' needs Z/n or F_q[x]/(m)");
    const SymPtr base = SymRing::poly(r->field()->q());
    FqPoly m = r->poly_modulus();
    std::vector<FqPoly> seen;
    for (const json& e : ps) {
      const FqPoly q = poly_of(el(*base, e));
      require(irreducible(q), q.to_string() + " is not irreducible");
      require(std::find(seen.begin(), seen.end(), q) == seen.end(), "repeated factor");
      seen.push_back(q);
      require(pdiv(q, m), q.to_string() + " does not divide the rest of the modulus");
      while (pdiv(q, m)) m = divmod(m, q).first;
      out.push_back([q](const SymElem& x) { return pdiv(q, poly_of(x)); });
    }
    require(m.degree() == 0, "listed factors miss a divisor of the modulus");
    return out;
  }
  if (method == "components") {
    require(r->kind() == SymKind::kProduct, "'components' needs a product");
    const json& cs = field(p, "components");
    require(cs.is_array() && cs.size() == r->factors().size(), "component count mismatch");
    std::vector<Pred> out;
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (Pred q : prime_list(r->factors()[i], cs[i], maximal))
        out.push_back([i, q](const SymElem& x) { return q(std::get<Tuple>(x.value)[i]); });
    return out;
  }
  if (method == "table") {
    require(r->kind() == SymKind::kLifted, "'table' needs a tabulated ring");
    const FiniteRing& t = *r->finite();
    ElementSet uni;
    std::vector<ElementSet> sets;
    for (const json& members : field(p, "primes")) {
      ElementSet s;
      for (const json& e : members) s.set(index_of(t, e));
      require(is_prime_set(t, s), "listed set is not a prime ideal");
      require(std::find(sets.begin(), sets.end(), s) == sets.end(), "repeated prime");
      sets.push_back(s);
      uni |= s;
    }
    for (std::size_t a = 0; a < t.order(); ++a)
      require(uni.test(a) != unit_in_table(t, Elem(a)), "listed primes do not cover exactly the non-units");
    std::vector<Pred> out;
    for (const ElementSet& s : sets)
      out.push_back([s](const SymElem& x) { return s.test(std::get<FiniteElem>(x.value).index); });
    return out;
  }
  throw Reject{"unknown prime-list method " + method};
}

// Per-kind replays ----------------------------------------------------------------

void finite_subcover(const SymPtr& r, const json& p) {
  if (p.contains("max")) {
    prime_list(r, p.at("max"), true);
    return;
  }
  const auto mins = prime_list(r, field(p, "min"), false);
  const json& cover = field(p, "cover");
  std::vector<SymElem> c;
  for (const json& e : cover) c.push_back(el(*r, e));
  std::vector<std::size_t> sub;
  for (const json& i : field(p, "subcover")) {
    require(i.is_number_unsigned() && i.get<std::size_t>() < c.size(), "subcover index out of range");
    sub.push_back(i.get<std::size_t>());
  }
  for (std::size_t k = 0; k < mins.size(); ++k) {
    bool hit = false;
    for (std::size_t i : sub) hit = hit || !mins[k](c[i]);
    require(hit, "minimal prime #" + std::to_string(k) + " is not covered by the subcover");
  }
}

void euclid(const SymPtr& r, const json& p) {
  const std::string method = field(p, "method").get<std::string>();
  if (method == "component") {
    require(r->kind() == SymKind::kProduct, "'component' needs a product");
    const std::size_t i = field(p, "index").get<std::size_t>();
    require(i < r->factors().size(), "component index out of range");
    euclid(r->factors()[i], field(p, "inner"));
    return;
  }
  require(method == "euclid", "unknown method " + method);
  const json& samples = field(p, "samples");
  require(samples.is_array() && !samples.empty(), "no sub-collections replayed");
  for (const json& s : samples) {
    const json& coll = field(s, "collection");
    require(coll.is_array() && !coll.empty(), "empty sub-collection");
    if (r->kind() == SymKind::kIntegers) {
      mpz_class prod = 1;
      std::vector<mpz_class> ms;
      for (const json& e : coll) {
        const mpz_class m = int_of(el(*r, e));
        require(prime_z(m), m.get_str() + " does not generate a maximal ideal");
        ms.push_back(m);
        prod *= m;
      }
      const mpz_class w = int_of(el(*r, field(s, "witness")));
      const mpz_class c = int_of(el(*r, field(s, "cofactor")));
      require(prime_z(w), "witness " + w.get_str() + " is not prime");
      require(prod + 1 == c * w, "witness does not divide the product plus one");
      for (const mpz_class& m : ms) require(!zdiv(w, m), "witness lies in V(" + m.get_str() + ")");
    } else {
      require(r->kind() == SymKind::kPoly, "Euclid replay needs Z or F_q[x]");
      FqPoly prod = FqPoly::constant(r->field(), r->field()->one());
      std::vector<FqPoly> ms;
      for (const json& e : coll) {
        const FqPoly m = poly_of(el(*r, e));
        require(irreducible(m), m.to_string() + " does not generate a maximal ideal");
        ms.push_back(m);
        prod = prod * m;
      }
      const FqPoly w = poly_of(el(*r, field(s, "witness")));
      const FqPoly c = poly_of(el(*r, field(s, "cofactor")));
      require(irreducible(w), "witness " + w.to_string() + " is not irreducible");
      require(prod + FqPoly::constant(r->field(), r->field()->one()) == c * w,
              "witness does not divide the product plus one");
      for (const FqPoly& m : ms) require(!pdiv(w, m), "witness lies in V(" + m.to_string() + ")");
    }
  }
}

void quasi_inverse(const SymPtr& r, const json& p) {
  const std::string method = field(p, "method").get<std::string>();
  if (method == "table") {
    const RingPtr t = to_finite(*r);
    std::vector<bool> seen(t->order(), false);
    for (const json& pr : field(p, "pairs")) {
      require(pr.is_array() && pr.size() == 2, "pair expected");
      const Elem f = index_of(*t, pr[0]), g = index_of(*t, pr[1]);
      require(t->mul(t->mul(f, f), g) == f, "f != f^2 g for f = " + t->name(f));
      require(t->mul(t->mul(g, g), f) == g, "g != g^2 f for f = " + t->name(f));
      seen[f] = true;
    }
    for (std::size_t a = 0; a < t->order(); ++a) require(seen[a], "no quasi-inverse listed for " + t->name(Elem(a)));
    return;
  }
  if (method == "squarefree") {
    const json& ps = field(p, "primes");
    if (r->kind() == SymKind::kQuotZ) {
      mpz_class prod = 1;
      std::set<std::string> seen;
      for (const json& e : ps) {
        const mpz_class q = int_of(el(*SymRing::integers(), e));
        require(prime_z(q) && seen.insert(q.get_str()).second, q.get_str() + " is not a new prime");
        prod *= q;
      }
      require(prod == r->int_modulus(), "primes do not multiply to the modulus");
      return;
    }
    require(r->kind() == SymKind::kQuotPoly, "'squarefree' needs Z/n or F_q[x]/(m)");
    const SymPtr base = SymRing::poly(r->field()->q());
    FqPoly prod = FqPoly::constant(r->field(), r->field()->one());
    std::vector<FqPoly> seen;
    for (const json& e : ps) {
      const FqPoly q = poly_of(el(*base, e));
      require(irreducible(q) && std::find(seen.begin(), seen.end(), q) == seen.end(),
              q.to_string() + " is not a new irreducible");
      seen.push_back(q);
      prod = prod * q;
    }
    require(prod == r->poly_modulus(), "factors do not multiply to the modulus");
    return;
  }
  if (method == "components") {
    require(r->kind() == SymKind::kProduct, "'components' needs a product");
    const json& cs = field(p, "components");
    require(cs.is_array() && cs.size() == r->factors().size(), "component count mismatch");
    for (std::size_t i = 0; i < cs.size(); ++i) quasi_inverse(r->factors()[i], cs[i]);
    return;
  }
  if (method == "modulo_ideal") {
    std::vector<SymElem> gens;
    for (const json& g : field(p, "generators")) gens.push_back(el(*r, g));
    for (const json& pr : field(p, "pairs")) {
      const SymElem f = el(*r, field(pr, "f")), b = el(*r, field(pr, "b"));
      const json& cs = field(pr, "cofactors");
      require(cs.is_array() && cs.size() == gens.size(), "cofactor count mismatch");
      SymElem rhs = sym_zero(*r);
      for (std::size_t i = 0; i < gens.size(); ++i) rhs = sym_add(*r, rhs, sym_mul(*r, el(*r, cs[i]), gens[i]));
      const SymElem lhs = sym_sub(*r, f, sym_mul(*r, b, sym_mul(*r, f, f)));
      require(sym_equal(*r, lhs, rhs), "f - b f^2 is not the stated combination for f = " + to_string(*r, f));
    }
    return;
  }
  throw Reject{"unknown method " + method};
}

void counterexample(const SymPtr& r, const json& p) {
  const std::string method = field(p, "method").get<std::string>();
  if (method == "component") {
    require(r->kind() == SymKind::kProduct, "'component' needs a product");
    const std::size_t i = field(p, "index").get<std::size_t>();
    require(i < r->factors().size(), "component index out of range");
    counterexample(r->factors()[i], field(p, "inner"));
    return;
  }
  const SymElem f = el(*r, field(p, "element"));
  require(!sym_is_zero(*r, f), "the zero element has a quasi-inverse");
  if (method == "nilpotent") {
    const unsigned k = field(p, "exponent").get<unsigned>();
    require(k >= 1 && sym_is_zero(*r, sym_pow(*r, f, k)), "element is not nilpotent of the stated order");
    return;
  }
  if (method == "degree") {
    require(r->kind() == SymKind::kPoly && poly_of(f).degree() >= 1, "degree argument needs a nonconstant polynomial");
    return;
  }
  if (method == "valuation") {
    if (r->kind() == SymKind::kIntegers) {
      const mpz_class q = int_of(el(*r, field(p, "prime")));
      require(prime_z(q) && zval(int_of(f), q) >= 1, "valuation argument fails");
      return;
    }
    require(r->kind() == SymKind::kLocalize, "valuation argument needs Z or a localization");
    if (!r->poly_based()) {
      const mpz_class q = int_of(el(*r->base(), field(p, "prime")));
      require(q == r->int_modulus() && prime_z(q), "valuation must be at the localizing prime");
      require(zval(std::get<Fraction>(f.value).num, q) >= 1, "element is a unit");
      return;
    }
    const FqPoly q = poly_of(el(*r->base(), field(p, "prime")));
    require(q == r->poly_modulus() && irreducible(q), "valuation must be at the localizing prime");
    require(pval(std::get<PolyFraction>(f.value).num, q) >= 1, "element is a unit");
    return;
  }
  if (method == "exhaustive") {
    const RingPtr t = to_finite(*r);
    const Elem e = lift_element(*r, f);
    const Elem e2 = t->mul(e, e);
    for (std::size_t g = 0; g < t->order(); ++g)
      require(t->mul(e2, Elem(g)) != e, "found g with f = f^2 g");
    return;
  }
  throw Reject{"unknown method " + method};
}

bool maximal_generator(const SymPtr& r, const SymElem& g) {
  switch (r->kind()) {
    case SymKind::kIntegers:
      return prime_z(abs(int_of(g)));
    case SymKind::kPoly:
      return irreducible(poly_of(g).is_zero() ? poly_of(g) : poly_of(g).monic());
    case SymKind::kQuotZ: {
      mpz_class d;
      mpz_gcd(d.get_mpz_t(), int_of(g).get_mpz_t(), r->int_modulus().get_mpz_t());
      return prime_z(d);
    }
    case SymKind::kQuotPoly:
      return irreducible(gcd(poly_of(g), r->poly_modulus()));
    case SymKind::kLocalize:
      if (sym_is_zero(*r, g)) return false;
      if (r->poly_based()) return pval(std::get<PolyFraction>(g.value).num, r->poly_modulus()) == 1;
      return zval(std::get<Fraction>(g.value).num, r->int_modulus()) == 1;
    case SymKind::kProduct: {
      const Tuple& t = std::get<Tuple>(g.value);
      std::size_t nonunits = 0;
      bool ok = true;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (sym_is_unit(*r->factors()[i], t[i])) continue;
        ++nonunits;
        ok = ok && maximal_generator(r->factors()[i], t[i]);
      }
      return nonunits == 1 && ok;
    }
    case SymKind::kLifted: {
      const FiniteRing& t = *r->finite();
      const Elem ge = std::get<FiniteElem>(g.value).index;
      ElementSet m;
      for (std::size_t x = 0; x < t.order(); ++x) m.set(t.mul(Elem(x), ge));
      if (m.test(t.one())) return false;
      for (std::size_t x = 0; x < t.order(); ++x) {
        if (m.test(x)) continue;
        bool inv = false;
        for (std::size_t y = 0; y < t.order() && !inv; ++y) inv = m.test(t.sub(t.mul(Elem(x), Elem(y)), t.one()));
        if (!inv) return false;
      }
      return true;
    }
  }
  return false;
}

void separation(const SymPtr& r, const json& p) {
  const std::string type = field(p, "type").get<std::string>();
  if (type == "min") {
    const SymElem g = el(*r, field(p, "prime"));
    const SymElem f = el(*r, field(p, "f"));
    const unsigned n = field(p, "N").get<unsigned>();
    require(!principal_member(*r, g, f), "f lies in the prime");
    for (const json& c : field(p, "cover")) {
      const SymElem gi = el(*r, c);
      require(principal_member(*r, g, gi), "cover element outside the prime");
      require(sym_is_zero(*r, sym_mul(*r, f, sym_pow(*r, gi, n))), "f g_i^N != 0");
    }
    return;
  }
  if (type == "max") {
    const SymElem m = el(*r, field(p, "maximal"));
    const SymElem g = el(*r, field(p, "g")), a = el(*r, field(p, "a")), f = el(*r, field(p, "f"));
    require(sym_equal(*r, sym_add(*r, sym_mul(*r, a, g), f), sym_one(*r)), "a g + f != 1");
    require(principal_member(*r, m, f), "f is not in the maximal ideal");
    require(!principal_member(*r, m, g), "g lies in the maximal ideal");
    return;
  }
  if (type == "isolation") {
    const json& ps = field(p, "primes");
    const json& es = field(p, "elements");
    require(ps.is_array() && es.is_array() && ps.size() == es.size(), "primes and elements must pair up");
    std::vector<SymElem> gs, fs;
    for (const json& e : ps) gs.push_back(el(*r, e));
    for (const json& e : es) fs.push_back(el(*r, e));
    for (std::size_t j = 0; j < gs.size(); ++j)
      for (std::size_t k = 0; k < gs.size(); ++k)
        require(principal_member(*r, gs[k], fs[j]) == (j != k), "element does not isolate its prime");
    return;
  }
  if (type == "max_isolation") {
    require(maximal_generator(r, el(*r, field(p, "maximal"))), "generator does not span a maximal ideal");
    return;
  }
  throw Reject{"unknown separation type " + type};
}

void radical_generators(const SymPtr& r, const json& p) {
  std::vector<SymElem> gs, fs;
  for (const json& e : field(p, "generators")) gs.push_back(el(*r, e));
  for (const json& e : field(p, "f")) fs.push_back(el(*r, e));
  const std::string method = field(p, "method").get<std::string>();
  if (method == "closure") {
    const RingPtr t = to_finite(*r);
    std::vector<Elem> a, b;
    for (const SymElem& e : gs) a.push_back(lift_element(*r, e));
    for (const SymElem& e : fs) b.push_back(lift_element(*r, e));
    require(closure(*t, a) == closure(*t, b), "generated ideals differ");
    return;
  }
  require(method == "bezout", "unknown method " + method);
  const json& c = field(p, "bezout");
  const json& q = field(p, "quotients");
  require(c.is_array() && c.size() == fs.size(), "one Bezout row per f");
  require(q.is_array() && q.size() == gs.size(), "one quotient row per generator");
  for (std::size_t j = 0; j < fs.size(); ++j) {
    require(c[j].is_array() && c[j].size() == gs.size(), "Bezout row length");
    SymElem s = sym_zero(*r);
    for (std::size_t i = 0; i < gs.size(); ++i) s = sym_add(*r, s, sym_mul(*r, el(*r, c[j][i]), gs[i]));
    require(sym_equal(*r, s, fs[j]), "f is not the stated combination of the generators");
  }
  for (std::size_t i = 0; i < gs.size(); ++i) {
    require(q[i].is_array() && q[i].size() == fs.size(), "quotient row length");
    SymElem s = sym_zero(*r);
    for (std::size_t j = 0; j < fs.size(); ++j) s = sym_add(*r, s, sym_mul(*r, el(*r, q[i][j]), fs[j]));
    require(sym_equal(*r, s, gs[i]), "generator is not the stated multiple of f");
  }
}

}  // namespace

CheckResult verify_certificate(const Certificate& c) {
  try {
    SymPtr r = parse_ring_expr(c.ring);
    if (c.engine == "finite") {
      require(r->order().has_value(), "finite engine on an infinite ring");
      r = SymRing::lifted(to_finite(*r));
    } else {
      require(c.engine == "symbolic", "unknown engine " + c.engine);
    }
    switch (c.kind) {
      case CertKind::kFiniteSubcover: finite_subcover(r, c.payload); break;
      case CertKind::kEuclidNoncompact: euclid(r, c.payload); break;
      case CertKind::kQuasiInverse: quasi_inverse(r, c.payload); break;
      case CertKind::kAbsFlatCounterexample: counterexample(r, c.payload); break;
      case CertKind::kSeparationWitness: separation(r, c.payload); break;
      case CertKind::kRadicalGenerators: radical_generators(r, c.payload); break;
    }
    return {true, ""};
  } catch (const Reject& e) {
    return {false, e.why};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

}  // namespace spectra
