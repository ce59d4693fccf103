// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include "spectra/sym_ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "spectra/error.hpp"
#include "spectra/ideal_lattice.hpp"
#include "spectra/number_theory.hpp"

namespace spectra {

namespace {

template <class T>
const T& as(const SymElem& e, const SymRing& r) {
  if (const T* p = std::get_if<T>(&e.value)) return *p;
  throw Error(ErrorCode::kInvalidArgument, "element of the wrong shape for " + r.expr());
}

bool is_prime_int(const mpz_class& p) {
  if (p < 2) return false;
  if (p <= kFactorBound) return is_prime_trial(p);
  return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

bool same_ring(const SymPtr& a, const SymPtr& b) {
  return a == b || (a && b && a->expr() == b->expr());
}

Fraction make_fraction(mpz_class num, mpz_class den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return {num, den};
}

PolyFraction make_poly_fraction(const FqPoly& num, const FqPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  const FqPoly g = gcd(num, den);
  FqPoly n = divmod(num, g).first, d = divmod(den, g).first;
  const Elem k = d.field()->inv(d.lead());
  n = n.scale(k);
  d = d.scale(k);
  if (n.is_zero()) d = FqPoly::constant(d.field(), d.field()->one());
  return {n, d};
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& n) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::string trim(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

bool wrapped_in_parens(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0 && i + 1 != s.size()) return false;
  }
  return true;
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out{""};
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back();
      continue;
    }
    out.back() += c;
  }
  return out;
}

mpz_class parse_integer(const std::string& text) {
  const std::string t = trim(text);
  std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size()) throw ParseError(0, "integer", "empty integer literal");
  for (std::size_t j = i; j < t.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(t[j])))
      throw ParseError(j, "digit", "malformed integer '" + t + "'");
  return mpz_class(t[0] == '+' ? t.substr(1) : t, 10);
}

mpz_class mpz_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()), 10);
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()), 10);
  if (j.is_string()) return mpz_class(j.get<std::string>(), 10);
  throw Error(ErrorCode::kParse, "expected an integer in JSON");
}

nlohmann::json mpz_to_json(const mpz_class& n) {
  if (n.fits_slong_p()) return nlohmann::json(static_cast<long long>(n.get_si()));
  return nlohmann::json(n.get_str(10));
}

FqPoly poly_from_json(const FieldPtr& f, const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected a coefficient array");
  std::vector<Elem> c;
  for (const auto& x : j) {
    const auto v = x.get<long long>();
    if (v < 0 || v >= static_cast<long long>(f->q()))
      throw Error(ErrorCode::kParse, "coefficient out of range");
    c.push_back(Elem(v));
  }
  return FqPoly(f, std::move(c));
}

nlohmann::json poly_to_json(const FqPoly& p) {
  nlohmann::json a = nlohmann::json::array();
  for (Elem c : p.coeffs()) a.push_back(c);
  return a;
}

FqPoly random_poly(const FieldPtr& f, int max_degree, std::mt19937_64& rng) {
  const int d = max_degree < 0 ? -1 : static_cast<int>(rng() % (max_degree + 1));
  std::vector<Elem> c;
  for (int i = 0; i <= d; ++i) c.push_back(Elem(rng() % f->q()));
  return FqPoly(f, std::move(c));
}

}  // namespace

// Construction -------------------------------------------------------------------

SymPtr SymRing::integers() {
  static const SymPtr z = [] {
    auto r = std::shared_ptr<SymRing>(new SymRing());
    r->kind_ = SymKind::kIntegers;
    r->expr_ = "Z";
    return r;
  }();
  return z;
}

SymPtr SymRing::poly(unsigned q) {
  static std::mutex mu;
  static std::map<unsigned, SymPtr> cache;
  if (q > kMaxPolyField)
    throw Error(ErrorCode::kBoundExceeded, "polynomial rings need q <= 9");
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(q); it != cache.end()) return it->second;
  auto r = std::shared_ptr<SymRing>(new SymRing());
  r->kind_ = SymKind::kPoly;
  r->field_ = GaloisField::make(q);
  r->expr_ = "F" + std::to_string(q) + "[x]";
  cache.emplace(q, r);
  return r;
}

SymPtr SymRing::quot_z(const mpz_class& n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "Z/0 is not a catalog quotient; use Z");
  auto r = std::shared_ptr<SymRing>(new SymRing());
  r->kind_ = SymKind::kQuotZ;
  r->n_ = abs(n);
  r->expr_ = "Z/" + r->n_.get_str();
  return r;
}

SymPtr SymRing::quot_poly(const FqPoly& modulus) {
  if (modulus.is_zero())
    throw Error(ErrorCode::kInvalidArgument, "quotient by the zero polynomial; use F_q[x]");
  auto r = std::shared_ptr<SymRing>(new SymRing());
  r->kind_ = SymKind::kQuotPoly;
  r->field_ = modulus.field();
  r->m_ = modulus.monic();
  r->expr_ = "F" + std::to_string(r->field_->q()) + "[x]/(" + r->m_.to_string() + ")";
  return r;
}

SymPtr SymRing::localize(const SymPtr& base, const SymElem& generator) {
  auto r = std::shared_ptr<SymRing>(new SymRing());
  r->kind_ = SymKind::kLocalize;
  r->base_ = base;
  if (base->kind() == SymKind::kIntegers) {
    const mpz_class p = abs(as<mpz_class>(generator, *base));
    if (!is_prime_int(p))
      throw Error(ErrorCode::kNotPrime, "(" + p.get_str() + ") is not prime in Z");
    r->n_ = p;
    r->expr_ = "loc(Z,(" + p.get_str() + "))";
  } else if (base->kind() == SymKind::kPoly) {
    const FqPoly f = as<FqPoly>(normalize(*base, generator), *base).monic();
    if (!is_irreducible(f))
      throw Error(ErrorCode::kNotPrime,
                  "(" + f.to_string() + ") is not prime in " + base->expr());
    r->field_ = base->field();
    r->m_ = f;
    r->expr_ = "loc(" + base->expr() + ",(" + f.to_string() + "))";
  } else {
    throw Error(ErrorCode::kSemantic, "localization needs base Z or F_q[x], got " + base->expr());
  }
  return r;
}

SymPtr SymRing::product(std::vector<SymPtr> factors) {
  std::vector<SymPtr> flat;
  for (const SymPtr& f : factors) {
    if (f->kind() == SymKind::kProduct)
      flat.insert(flat.end(), f->factors().begin(), f->factors().end());
    else
      flat.push_back(f);
  }
  if (flat.empty()) return quot_z(1);
  if (flat.size() == 1) return flat[0];
  if (flat.size() > kMaxProductArity)
    throw Error(ErrorCode::kBoundExceeded, "product arity exceeds 8");
  auto r = std::shared_ptr<SymRing>(new SymRing());
  r->kind_ = SymKind::kProduct;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (i) r->expr_ += " x ";
    const std::string& e = flat[i]->expr();
    r->expr_ += e.find(" x ") != std::string::npos ? "(" + e + ")" : e;
  }
  r->factors_ = std::move(flat);
  return r;
}

SymPtr SymRing::lifted(RingPtr finite) {
  auto r = std::shared_ptr<SymRing>(new SymRing());
  r->kind_ = SymKind::kLifted;
  r->expr_ = finite->label();
  r->finite_ = std::move(finite);
  return r;
}

std::optional<std::uint64_t> SymRing::order() const {
  const mpz_class limit = mpz_class(1) << 62;
  switch (kind_) {
    case SymKind::kIntegers:
    case SymKind::kPoly:
    case SymKind::kLocalize:
      return std::nullopt;
    case SymKind::kQuotZ:
      if (n_ > limit) return std::nullopt;
      return n_.get_ui();
    case SymKind::kQuotPoly: {
      mpz_class n = 1;
      for (int i = 0; i < m_.degree(); ++i) n *= field_->q();
      if (n > limit) return std::nullopt;
      return n.get_ui();
    }
    case SymKind::kProduct: {
      mpz_class n = 1;
      for (const SymPtr& f : factors_) {
        const auto o = f->order();
        if (!o) return std::nullopt;
        n *= mpz_class(std::to_string(*o), 10);
        if (n > limit) return std::nullopt;
      }
      return n.get_ui();
    }
    case SymKind::kLifted:
      return finite_->order();
  }
  return std::nullopt;
}

// Elements -----------------------------------------------------------------------

SymElem normalize(const SymRing& r, const SymElem& a) {
  switch (r.kind()) {
    case SymKind::kIntegers:
      return {as<mpz_class>(a, r)};
    case SymKind::kPoly:
    case SymKind::kQuotPoly: {
      FqPoly p = as<FqPoly>(a, r);
      if (!p.field()) p = FqPoly::zero(r.field());
      if (p.field()->q() != r.field()->q())
        throw Error(ErrorCode::kInvalidArgument, "polynomial over the wrong field for " + r.expr());
      for (Elem c : p.coeffs())
        if (c >= r.field()->q()) throw Error(ErrorCode::kInvalidArgument, "bad coefficient");
      if (p.field() != r.field()) p = FqPoly(r.field(), p.coeffs());
      if (r.kind() == SymKind::kQuotPoly) p = p % r.poly_modulus();
      return {p};
    }
    case SymKind::kQuotZ:
      return {mod_pos(as<mpz_class>(a, r), r.int_modulus())};
    case SymKind::kLocalize: {
      if (!r.poly_based()) {
        Fraction f;
        if (const auto* n = std::get_if<mpz_class>(&a.value))
          f = make_fraction(*n, 1);
        else
          f = make_fraction(as<Fraction>(a, r).num, as<Fraction>(a, r).den);
        if (mpz_divisible_p(f.den.get_mpz_t(), r.int_modulus().get_mpz_t()))
          throw Error(ErrorCode::kInvalidArgument,
                      "denominator " + f.den.get_str() + " lies in the localizing prime");
        return {f};
      }
      PolyFraction f;
      if (const auto* n = std::get_if<FqPoly>(&a.value)) {
        FqPoly num = n->field() ? *n : FqPoly::zero(r.field());
        f = make_poly_fraction(num, FqPoly::constant(r.field(), r.field()->one()));
      } else {
        const auto& pf = as<PolyFraction>(a, r);
        f = make_poly_fraction(pf.num.field() ? pf.num : FqPoly::zero(r.field()), pf.den);
      }
      if (divides(r.poly_modulus(), f.den))
        throw Error(ErrorCode::kInvalidArgument, "denominator lies in the localizing prime");
      return {f};
    }
    case SymKind::kProduct: {
      const Tuple& t = as<Tuple>(a, r);
      if (t.size() != r.factors().size())
        throw Error(ErrorCode::kInvalidArgument, "tuple arity mismatch for " + r.expr());
      Tuple out;
      for (std::size_t i = 0; i < t.size(); ++i) out.push_back(normalize(*r.factors()[i], t[i]));
      return {out};
    }
    case SymKind::kLifted: {
      const FiniteElem e = as<FiniteElem>(a, r);
      if (e.index >= r.finite()->order())
        throw Error(ErrorCode::kInvalidArgument, "element index out of range");
      return {e};
    }
  }
  return a;
}

SymElem sym_zero(const SymRing& r) { return sym_from_int(r, 0); }
SymElem sym_one(const SymRing& r) { return sym_from_int(r, 1); }

SymElem sym_from_int(const SymRing& r, long long k) {
  switch (r.kind()) {
    case SymKind::kIntegers:
    case SymKind::kQuotZ:
      return normalize(r, {mpz_class(std::to_string(k), 10)});
    case SymKind::kPoly:
    case SymKind::kQuotPoly:
      return normalize(r, {FqPoly::constant(r.field(), r.field()->from_int(k))});
    case SymKind::kLocalize:
      if (!r.poly_based()) return normalize(r, {mpz_class(std::to_string(k), 10)});
      return normalize(r, {FqPoly::constant(r.field(), r.field()->from_int(k))});
    case SymKind::kProduct: {
      Tuple t;
      for (const SymPtr& f : r.factors()) t.push_back(sym_from_int(*f, k));
      return {t};
    }
    case SymKind::kLifted:
      return {FiniteElem{r.finite()->from_int(k)}};
  }
  return {};
}

namespace {

enum class Op { kAdd, kMul };

SymElem combine(const SymRing& r, const SymElem& a0, const SymElem& b0, Op op) {
  const SymElem a = normalize(r, a0), b = normalize(r, b0);
  switch (r.kind()) {
    case SymKind::kIntegers:
    case SymKind::kQuotZ: {
      const mpz_class& x = std::get<mpz_class>(a.value);
      const mpz_class& y = std::get<mpz_class>(b.value);
      return normalize(r, {op == Op::kAdd ? mpz_class(x + y) : mpz_class(x * y)});
    }
    case SymKind::kPoly:
    case SymKind::kQuotPoly: {
      const FqPoly& x = std::get<FqPoly>(a.value);
      const FqPoly& y = std::get<FqPoly>(b.value);
      return normalize(r, {op == Op::kAdd ? x + y : x * y});
    }
    case SymKind::kLocalize:
      if (!r.poly_based()) {
        const Fraction& x = std::get<Fraction>(a.value);
        const Fraction& y = std::get<Fraction>(b.value);
        if (op == Op::kAdd)
          return {make_fraction(x.num * y.den + y.num * x.den, x.den * y.den)};
        return {make_fraction(x.num * y.num, x.den * y.den)};
      } else {
        const PolyFraction& x = std::get<PolyFraction>(a.value);
        const PolyFraction& y = std::get<PolyFraction>(b.value);
        if (op == Op::kAdd)
          return {make_poly_fraction(x.num * y.den + y.num * x.den, x.den * y.den)};
        return {make_poly_fraction(x.num * y.num, x.den * y.den)};
      }
    case SymKind::kProduct: {
      const Tuple& x = std::get<Tuple>(a.value);
      const Tuple& y = std::get<Tuple>(b.value);
      Tuple t;
      for (std::size_t i = 0; i < x.size(); ++i)
        t.push_back(combine(*r.factors()[i], x[i], y[i], op));
      return {t};
    }
    case SymKind::kLifted: {
      const Elem x = std::get<FiniteElem>(a.value).index;
      const Elem y = std::get<FiniteElem>(b.value).index;
      return {FiniteElem{op == Op::kAdd ? r.finite()->add(x, y) : r.finite()->mul(x, y)}};
    }
  }
  return {};
}

}  // namespace

SymElem sym_add(const SymRing& r, const SymElem& a, const SymElem& b) {
  return combine(r, a, b, Op::kAdd);
}
SymElem sym_mul(const SymRing& r, const SymElem& a, const SymElem& b) {
  return combine(r, a, b, Op::kMul);
}
SymElem sym_neg(const SymRing& r, const SymElem& a) {
  return sym_mul(r, sym_from_int(r, -1), a);
}
SymElem sym_sub(const SymRing& r, const SymElem& a, const SymElem& b) {
  return sym_add(r, a, sym_neg(r, b));
}

SymElem sym_pow(const SymRing& r, const SymElem& a, unsigned e) {
  SymElem result = sym_one(r), base = normalize(r, a);
  while (e) {
    if (e & 1) result = sym_mul(r, result, base);
    base = sym_mul(r, base, base);
    e >>= 1;
  }
  return result;
}

bool sym_equal(const SymRing& r, const SymElem& a0, const SymElem& b0) {
  const SymElem a = normalize(r, a0), b = normalize(r, b0);
  switch (r.kind()) {
    case SymKind::kIntegers:
    case SymKind::kQuotZ:
      return std::get<mpz_class>(a.value) == std::get<mpz_class>(b.value);
    case SymKind::kPoly:
    case SymKind::kQuotPoly:
      return std::get<FqPoly>(a.value) == std::get<FqPoly>(b.value);
    case SymKind::kLocalize:
      if (!r.poly_based()) {
        const auto& x = std::get<Fraction>(a.value);
        const auto& y = std::get<Fraction>(b.value);
        return x.num == y.num && x.den == y.den;
      } else {
        const auto& x = std::get<PolyFraction>(a.value);
        const auto& y = std::get<PolyFraction>(b.value);
        return x.num == y.num && x.den == y.den;
      }
    case SymKind::kProduct: {
      const Tuple& x = std::get<Tuple>(a.value);
      const Tuple& y = std::get<Tuple>(b.value);
      for (std::size_t i = 0; i < x.size(); ++i)
        if (!sym_equal(*r.factors()[i], x[i], y[i])) return false;
      return true;
    }
    case SymKind::kLifted:
      return std::get<FiniteElem>(a.value).index == std::get<FiniteElem>(b.value).index;
  }
  return false;
}

bool sym_is_zero(const SymRing& r, const SymElem& a) { return sym_equal(r, a, sym_zero(r)); }

bool sym_is_unit(const SymRing& r, const SymElem& a0) {
  const SymElem a = normalize(r, a0);
  switch (r.kind()) {
    case SymKind::kIntegers:
      return abs(std::get<mpz_class>(a.value)) == 1;
    case SymKind::kPoly:
      return std::get<FqPoly>(a.value).degree() == 0;
    case SymKind::kQuotZ: {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), std::get<mpz_class>(a.value).get_mpz_t(), r.int_modulus().get_mpz_t());
      return g == 1;
    }
    case SymKind::kQuotPoly:
      return gcd(std::get<FqPoly>(a.value), r.poly_modulus()).degree() == 0;
    case SymKind::kLocalize:
      if (!r.poly_based()) {
        const auto& x = std::get<Fraction>(a.value);
        return x.num != 0 && !mpz_divisible_p(x.num.get_mpz_t(), r.int_modulus().get_mpz_t());
      } else {
        const auto& x = std::get<PolyFraction>(a.value);
        return !x.num.is_zero() && !divides(r.poly_modulus(), x.num);
      }
    case SymKind::kProduct: {
      const Tuple& x = std::get<Tuple>(a.value);
      for (std::size_t i = 0; i < x.size(); ++i)
        if (!sym_is_unit(*r.factors()[i], x[i])) return false;
      return true;
    }
    case SymKind::kLifted:
      return r.finite()->is_unit(std::get<FiniteElem>(a.value).index);
  }
  return false;
}

std::optional<SymElem> sym_inverse(const SymRing& r, const SymElem& a0) {
  if (!sym_is_unit(r, a0)) return std::nullopt;
  const SymElem a = normalize(r, a0);
  switch (r.kind()) {
    case SymKind::kIntegers:
      return a;
    case SymKind::kPoly: {
      const FqPoly& p = std::get<FqPoly>(a.value);
      return SymElem{FqPoly::constant(r.field(), r.field()->inv(p.lead()))};
    }
    case SymKind::kQuotZ: {
      mpz_class inv;
      if (r.int_modulus() == 1) return SymElem{mpz_class(0)};
      mpz_invert(inv.get_mpz_t(), std::get<mpz_class>(a.value).get_mpz_t(),
                 r.int_modulus().get_mpz_t());
      return normalize(r, {inv});
    }
    case SymKind::kQuotPoly: {
      const PolyXgcd g = xgcd(std::get<FqPoly>(a.value), r.poly_modulus());
      if (r.poly_modulus().degree() == 0) return sym_zero(r);
      return normalize(r, {g.s});
    }
    case SymKind::kLocalize:
      if (!r.poly_based()) {
        const auto& x = std::get<Fraction>(a.value);
        return SymElem{make_fraction(x.den, x.num)};
      } else {
        const auto& x = std::get<PolyFraction>(a.value);
        return SymElem{make_poly_fraction(x.den, x.num)};
      }
    case SymKind::kProduct: {
      const Tuple& x = std::get<Tuple>(a.value);
      Tuple t;
      for (std::size_t i = 0; i < x.size(); ++i) t.push_back(*sym_inverse(*r.factors()[i], x[i]));
      return SymElem{t};
    }
    case SymKind::kLifted:
      return SymElem{FiniteElem{*r.finite()->inverse(std::get<FiniteElem>(a.value).index)}};
  }
  return std::nullopt;
}

std::string to_string(const SymRing& r, const SymElem& a0) {
  const SymElem a = normalize(r, a0);
  switch (r.kind()) {
    case SymKind::kIntegers:
    case SymKind::kQuotZ:
      return std::get<mpz_class>(a.value).get_str();
    case SymKind::kPoly:
    case SymKind::kQuotPoly:
      return std::get<FqPoly>(a.value).to_string();
    case SymKind::kLocalize:
      if (!r.poly_based()) {
        const auto& x = std::get<Fraction>(a.value);
        return x.den == 1 ? x.num.get_str() : x.num.get_str() + "/" + x.den.get_str();
      } else {
        const auto& x = std::get<PolyFraction>(a.value);
        if (x.den.degree() == 0) return x.num.to_string();
        return "(" + x.num.to_string() + ")/(" + x.den.to_string() + ")";
      }
    case SymKind::kProduct: {
      const Tuple& x = std::get<Tuple>(a.value);
      std::string s = "(";
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += to_string(*r.factors()[i], x[i]);
      }
      return s + ")";
    }
    case SymKind::kLifted:
      return r.finite()->name(std::get<FiniteElem>(a.value).index);
  }
  return "?";
}

SymElem parse_element(const SymRing& r, const std::string& text0) {
  const std::string text = trim(text0);
  switch (r.kind()) {
    case SymKind::kIntegers:
    case SymKind::kQuotZ:
      return normalize(r, {parse_integer(wrapped_in_parens(text) ? text.substr(1, text.size() - 2) : text)});
    case SymKind::kPoly:
    case SymKind::kQuotPoly:
      return normalize(r, {parse_poly(r.field(), text)});
    case SymKind::kLocalize: {
      const auto parts = split_top(text, '/');
      if (parts.size() > 2) throw ParseError(0, "a/s", "malformed fraction '" + text + "'");
      auto strip = [](std::string s) {
        return wrapped_in_parens(s) ? s.substr(1, s.size() - 2) : s;
      };
      if (!r.poly_based()) {
        const mpz_class num = parse_integer(strip(parts[0]));
        const mpz_class den = parts.size() == 2 ? parse_integer(strip(parts[1])) : mpz_class(1);
        return normalize(r, {Fraction{num, den}});
      }
      const FqPoly num = parse_poly(r.field(), strip(parts[0]));
      const FqPoly den = parts.size() == 2 ? parse_poly(r.field(), strip(parts[1]))
                                           : FqPoly::constant(r.field(), r.field()->one());
      return normalize(r, {PolyFraction{num, den}});
    }
    case SymKind::kProduct: {
      const std::string inner = wrapped_in_parens(text) ? text.substr(1, text.size() - 2) : text;
      const auto parts = split_top(inner, ',');
      if (parts.size() != r.factors().size())
        throw ParseError(0, std::to_string(r.factors().size()) + " components",
                         "tuple '" + text + "' has the wrong arity");
      Tuple t;
      for (std::size_t i = 0; i < parts.size(); ++i)
        t.push_back(parse_element(*r.factors()[i], parts[i]));
      return {t};
    }
    case SymKind::kLifted: {
      const FiniteRing& f = *r.finite();
      if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }) && text.size() < 6) {
        const unsigned long v = std::stoul(text);
        if (v < f.order()) return {FiniteElem{Elem(v)}};
      }
      for (std::size_t i = 0; i < f.order(); ++i)
        if (trim(f.name(Elem(i))) == text) return {FiniteElem{Elem(i)}};
      throw ParseError(0, "element of " + r.expr(), "unknown element '" + text + "'");
    }
  }
  return {};
}

nlohmann::json element_to_json(const SymRing& r, const SymElem& a0) {
  const SymElem a = normalize(r, a0);
  switch (r.kind()) {
    case SymKind::kIntegers:
    case SymKind::kQuotZ:
      return mpz_to_json(std::get<mpz_class>(a.value));
    case SymKind::kPoly:
    case SymKind::kQuotPoly:
      return poly_to_json(std::get<FqPoly>(a.value));
    case SymKind::kLocalize:
      if (!r.poly_based()) {
        const auto& x = std::get<Fraction>(a.value);
        return {{"num", mpz_to_json(x.num)}, {"den", mpz_to_json(x.den)}};
      } else {
        const auto& x = std::get<PolyFraction>(a.value);
        return {{"num", poly_to_json(x.num)}, {"den", poly_to_json(x.den)}};
      }
    case SymKind::kProduct: {
      nlohmann::json t = nlohmann::json::array();
      const Tuple& x = std::get<Tuple>(a.value);
      for (std::size_t i = 0; i < x.size(); ++i) t.push_back(element_to_json(*r.factors()[i], x[i]));
      return {{"tuple", t}};
    }
    case SymKind::kLifted:
      return std::get<FiniteElem>(a.value).index;
  }
  return nullptr;
}

SymElem element_from_json(const SymRing& r, const nlohmann::json& j) {
  switch (r.kind()) {
    case SymKind::kIntegers:
    case SymKind::kQuotZ:
      return normalize(r, {mpz_from_json(j)});
    case SymKind::kPoly:
    case SymKind::kQuotPoly:
      return normalize(r, {poly_from_json(r.field(), j)});
    case SymKind::kLocalize:
      if (!j.is_object()) throw Error(ErrorCode::kParse, "expected a fraction object");
      if (!r.poly_based())
        return normalize(r, {Fraction{mpz_from_json(j.at("num")), mpz_from_json(j.at("den"))}});
      return normalize(r, {PolyFraction{poly_from_json(r.field(), j.at("num")),
                                        poly_from_json(r.field(), j.at("den"))}});
    case SymKind::kProduct: {
      if (!j.is_object() || !j.contains("tuple")) throw Error(ErrorCode::kParse, "expected a tuple");
      const auto& a = j.at("tuple");
      if (!a.is_array() || a.size() != r.factors().size())
        throw Error(ErrorCode::kParse, "tuple arity mismatch");
      Tuple t;
      for (std::size_t i = 0; i < a.size(); ++i) t.push_back(element_from_json(*r.factors()[i], a[i]));
      return {t};
    }
    case SymKind::kLifted: {
      const auto v = j.get<long long>();
      if (v < 0 || v >= static_cast<long long>(r.finite()->order()))
        throw Error(ErrorCode::kParse, "element index out of range");
      return {FiniteElem{Elem(v)}};
    }
  }
  return {};
}

SymElem sample_element(const SymRing& r, std::mt19937_64& rng) {
  switch (r.kind()) {
    case SymKind::kIntegers:
      return {mpz_class(static_cast<long>(rng() % 61) - 30)};
    case SymKind::kPoly:
      return {random_poly(r.field(), 3, rng)};
    case SymKind::kQuotZ: {
      const mpz_class v(std::to_string(rng()), 10);
      return {mod_pos(v, r.int_modulus())};
    }
    case SymKind::kQuotPoly:
      return normalize(r, {random_poly(r.field(), r.poly_modulus().degree() - 1, rng)});
    case SymKind::kLocalize:
      if (!r.poly_based()) {
        const mpz_class num(static_cast<long>(rng() % 61) - 30);
        mpz_class den;
        do {
          den = mpz_class(static_cast<long>(rng() % 30) + 1);
        } while (mpz_divisible_p(den.get_mpz_t(), r.int_modulus().get_mpz_t()));
        return {make_fraction(num, den)};
      } else {
        const FqPoly num = random_poly(r.field(), 2, rng);
        FqPoly den;
        do {
          den = random_poly(r.field(), 2, rng);
        } while (den.is_zero() || divides(r.poly_modulus(), den));
        return {make_poly_fraction(num, den)};
      }
    case SymKind::kProduct: {
      Tuple t;
      for (const SymPtr& f : r.factors()) t.push_back(sample_element(*f, rng));
      return {t};
    }
    case SymKind::kLifted:
      return {FiniteElem{Elem(rng() % r.finite()->order())}};
  }
  return {};
}

// Finite lifts -------------------------------------------------------------------

RingPtr to_finite(const SymRing& r, std::size_t cap) {
  {
    std::lock_guard<std::mutex> lock(r.lift_mu_);
    if (r.lift_ && r.lift_->order() <= cap) return r.lift_;
  }
  RingPtr out;
  switch (r.kind()) {
    case SymKind::kIntegers:
    case SymKind::kPoly:
    case SymKind::kLocalize:
      throw Error(ErrorCode::kInvalidArgument, r.expr() + " is infinite");
    case SymKind::kQuotZ:
      if (r.int_modulus() > mpz_class(std::to_string(cap), 10))
        throw Error(ErrorCode::kBoundExceeded, r.expr() + " exceeds order cap");
      out = make_zmod(r.int_modulus().get_ui(), cap);
      break;
    case SymKind::kQuotPoly:
      out = poly_quotient_ring(r.poly_modulus(), r.expr(), cap);
      break;
    case SymKind::kProduct: {
      std::vector<RingPtr> fs;
      for (const SymPtr& f : r.factors()) fs.push_back(to_finite(*f, cap));
      out = product(fs, cap);
      break;
    }
    case SymKind::kLifted:
      out = r.finite();
      if (out->order() > cap) throw Error(ErrorCode::kBoundExceeded, r.expr() + " exceeds order cap");
      break;
  }
  std::lock_guard<std::mutex> lock(r.lift_mu_);
  r.lift_ = out;
  return out;
}

Elem lift_element(const SymRing& r, const SymElem& a0) {
  const SymElem a = normalize(r, a0);
  switch (r.kind()) {
    case SymKind::kQuotZ:
      return Elem(std::get<mpz_class>(a.value).get_ui());
    case SymKind::kQuotPoly:
      return Elem(std::get<FqPoly>(a.value).index());
    case SymKind::kProduct: {
      const Tuple& t = std::get<Tuple>(a.value);
      std::size_t idx = 0, radix = 1;
      for (std::size_t i = 0; i < t.size(); ++i) {
        idx += lift_element(*r.factors()[i], t[i]) * radix;
        radix *= to_finite(*r.factors()[i])->order();
      }
      return Elem(idx);
    }
    case SymKind::kLifted:
      return std::get<FiniteElem>(a.value).index;
    default:
      throw Error(ErrorCode::kInvalidArgument, r.expr() + " is infinite");
  }
}

SymElem element_at(const SymRing& r, Elem index) {
  switch (r.kind()) {
    case SymKind::kQuotZ:
      return {mpz_class(static_cast<unsigned long>(index))};
    case SymKind::kQuotPoly: {
      std::vector<Elem> c;
      std::size_t code = index;
      for (int i = 0; i < r.poly_modulus().degree(); ++i) {
        c.push_back(Elem(code % r.field()->q()));
        code /= r.field()->q();
      }
      return {FqPoly(r.field(), std::move(c))};
    }
    case SymKind::kProduct: {
      Tuple t;
      std::size_t code = index;
      for (const SymPtr& f : r.factors()) {
        const std::size_t o = to_finite(*f)->order();
        t.push_back(element_at(*f, Elem(code % o)));
        code /= o;
      }
      return {t};
    }
    case SymKind::kLifted:
      return {FiniteElem{index}};
    default:
      throw Error(ErrorCode::kInvalidArgument, r.expr() + " is infinite");
  }
}

// Primes -------------------------------------------------------------------------

std::string SymPrime::to_string() const {
  switch (kind) {
    case PrimeKind::kZero:
      return "(0)";
    case PrimeKind::kPrincipalZ:
      return "(" + p.get_str() + ")";
    case PrimeKind::kPrincipalPoly:
      return "(" + f.to_string() + ")";
    case PrimeKind::kContracted:
      return inner->to_string();
    case PrimeKind::kComponent: {
      std::string s;
      for (std::size_t i = 0; i < ring->factors().size(); ++i) {
        if (i) s += " x ";
        s += i == index ? inner->to_string() : ring->factors()[i]->expr();
      }
      return s;
    }
    case PrimeKind::kFinite:
      return Ideal::trusted(ring->finite(), mask).to_string();
  }
  return "?";
}

bool operator==(const SymPrime& a, const SymPrime& b) {
  if (!same_ring(a.ring, b.ring) || a.kind != b.kind) return false;
  switch (a.kind) {
    case PrimeKind::kZero: return true;
    case PrimeKind::kPrincipalZ: return a.p == b.p;
    case PrimeKind::kPrincipalPoly: return a.f == b.f;
    case PrimeKind::kContracted: return *a.inner == *b.inner;
    case PrimeKind::kComponent: return a.index == b.index && *a.inner == *b.inner;
    case PrimeKind::kFinite: return a.mask == b.mask;
  }
  return false;
}

SymPrime zero_prime(const SymPtr& r) {
  switch (r->kind()) {
    case SymKind::kIntegers:
    case SymKind::kPoly:
      return SymPrime{r, PrimeKind::kZero, {}, {}, 0, nullptr, {}};
    case SymKind::kLocalize:
      return contracted_prime(r, zero_prime(r->base()));
    default:
      throw Error(ErrorCode::kNotPrime, "(0) is not prime in " + r->expr());
  }
}

SymPrime principal_prime(const SymPtr& r, const mpz_class& p0) {
  const mpz_class p = abs(p0);
  switch (r->kind()) {
    case SymKind::kIntegers:
      if (!is_prime_int(p)) throw Error(ErrorCode::kNotPrime, p.get_str() + " is not prime");
      return SymPrime{r, PrimeKind::kPrincipalZ, p, {}, 0, nullptr, {}};
    case SymKind::kQuotZ:
    case SymKind::kLocalize:
      if (r->kind() == SymKind::kLocalize && r->poly_based()) break;
      return contracted_prime(r, principal_prime(SymRing::integers(), p));
    default:
      break;
  }
  throw Error(ErrorCode::kNotPrime, "no integer prime descriptor for " + r->expr());
}

SymPrime principal_prime(const SymPtr& r, const FqPoly& f0) {
  switch (r->kind()) {
    case SymKind::kPoly: {
      const FqPoly f = as<FqPoly>(normalize(*r, {f0}), *r).monic();
      if (!is_irreducible(f))
        throw Error(ErrorCode::kNotPrime, f.to_string() + " is not irreducible");
      return SymPrime{r, PrimeKind::kPrincipalPoly, {}, f, 0, nullptr, {}};
    }
    case SymKind::kQuotPoly:
    case SymKind::kLocalize:
      if (!r->poly_based()) break;
      return contracted_prime(r, principal_prime(SymRing::poly(r->field()->q()), f0));
    default:
      break;
  }
  throw Error(ErrorCode::kNotPrime, "no polynomial prime descriptor for " + r->expr());
}

SymPrime component_prime(const SymPtr& r, std::size_t i, const SymPrime& inner) {
  if (r->kind() != SymKind::kProduct || i >= r->factors().size() ||
      !same_ring(r->factors()[i], inner.ring))
    throw Error(ErrorCode::kNotPrime, "bad component prime for " + r->expr());
  return SymPrime{r, PrimeKind::kComponent, {}, {}, i, std::make_shared<SymPrime>(inner), {}};
}

SymPrime contracted_prime(const SymPtr& r, const SymPrime& inner) {
  bool ok = false;
  switch (r->kind()) {
    case SymKind::kQuotZ:
      ok = inner.kind == PrimeKind::kPrincipalZ &&
           mpz_divisible_p(r->int_modulus().get_mpz_t(), inner.p.get_mpz_t());
      break;
    case SymKind::kQuotPoly:
      ok = inner.kind == PrimeKind::kPrincipalPoly && divides(inner.f, r->poly_modulus()) &&
           inner.f.field()->q() == r->field()->q();
      break;
    case SymKind::kLocalize:
      if (inner.kind == PrimeKind::kZero)
        ok = same_ring(inner.ring, r->base());
      else if (!r->poly_based())
        ok = inner.kind == PrimeKind::kPrincipalZ && inner.p == r->int_modulus();
      else
        ok = inner.kind == PrimeKind::kPrincipalPoly && inner.f == r->poly_modulus();
      break;
    default:
      break;
  }
  if (!ok)
    throw Error(ErrorCode::kNotPrime, inner.to_string() + " does not give a prime of " + r->expr());
  return SymPrime{r, PrimeKind::kContracted, {}, {}, 0, std::make_shared<SymPrime>(inner), {}};
}

SymPrime finite_prime(const SymPtr& r, const ElementSet& mask) {
  if (r->kind() != SymKind::kLifted)
    throw Error(ErrorCode::kNotPrime, "mask primes need a tabulated ring");
  if (!is_prime(Ideal::make(r->finite(), mask)))
    throw Error(ErrorCode::kNotPrime, "ideal is not prime in " + r->expr());
  return SymPrime{r, PrimeKind::kFinite, {}, {}, 0, nullptr, mask};
}

SymPrime prime_generated_by(const SymPtr& r, const SymElem& g0) {
  const SymElem g = normalize(*r, g0);
  const std::string shown = "(" + to_string(*r, g) + ")";
  auto fail = [&]() -> SymPrime {
    throw Error(ErrorCode::kNotPrime, shown + " is not prime in " + r->expr());
  };
  switch (r->kind()) {
    case SymKind::kIntegers: {
      const mpz_class& v = std::get<mpz_class>(g.value);
      if (v == 0) return zero_prime(r);
      if (!is_prime_int(abs(v))) return fail();
      return principal_prime(r, v);
    }
    case SymKind::kPoly: {
      const FqPoly& v = std::get<FqPoly>(g.value);
      if (v.is_zero()) return zero_prime(r);
      if (v.degree() < 1 || !is_irreducible(v)) return fail();
      return principal_prime(r, v);
    }
    case SymKind::kQuotZ: {
      mpz_class d;
      mpz_gcd(d.get_mpz_t(), std::get<mpz_class>(g.value).get_mpz_t(),
              r->int_modulus().get_mpz_t());
      if (!is_prime_int(d)) return fail();
      return principal_prime(r, d);
    }
    case SymKind::kQuotPoly: {
      const FqPoly d = gcd(std::get<FqPoly>(g.value), r->poly_modulus());
      if (d.degree() < 1 || !is_irreducible(d)) return fail();
      return principal_prime(r, d);
    }
    case SymKind::kLocalize:
      if (!r->poly_based()) {
        const mpz_class& num = std::get<Fraction>(g.value).num;
        if (num == 0) return zero_prime(r);
        if (valuation(num, r->int_modulus()) != 1) return fail();
        return principal_prime(r, r->int_modulus());
      } else {
        const FqPoly& num = std::get<PolyFraction>(g.value).num;
        if (num.is_zero()) return zero_prime(r);
        if (valuation(num, r->poly_modulus()) != 1) return fail();
        return principal_prime(r, r->poly_modulus());
      }
    case SymKind::kProduct: {
      const Tuple& t = std::get<Tuple>(g.value);
      std::optional<std::size_t> slot;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (sym_is_unit(*r->factors()[i], t[i])) continue;
        if (slot) return fail();
        slot = i;
      }
      if (!slot) return fail();
      return component_prime(r, *slot, prime_generated_by(r->factors()[*slot], t[*slot]));
    }
    case SymKind::kLifted: {
      const Ideal i = ideal_generated(r->finite(), {std::get<FiniteElem>(g.value).index});
      if (!is_prime(i)) return fail();
      return finite_prime(r, i.members());
    }
  }
  return fail();
}

SymPrime parse_prime(const SymPtr& r, const std::string& text0) {
  const std::string text = trim(text0);
  if (!wrapped_in_parens(text)) throw ParseError(0, "(generator)", "prime '" + text + "'");
  return prime_generated_by(r, parse_element(*r, text.substr(1, text.size() - 2)));
}

bool contains(const SymPrime& p, const SymElem& f0) {
  const SymElem f = normalize(*p.ring, f0);
  switch (p.kind) {
    case PrimeKind::kZero:
      return sym_is_zero(*p.ring, f);
    case PrimeKind::kPrincipalZ:
      return mpz_divisible_p(std::get<mpz_class>(f.value).get_mpz_t(), p.p.get_mpz_t()) != 0;
    case PrimeKind::kPrincipalPoly:
      return divides(p.f, std::get<FqPoly>(f.value));
    case PrimeKind::kContracted:
      switch (p.ring->kind()) {
        case SymKind::kQuotZ:
          return contains(*p.inner, {std::get<mpz_class>(f.value)});
        case SymKind::kQuotPoly:
          return contains(*p.inner, {std::get<FqPoly>(f.value)});
        default:
          if (!p.ring->poly_based()) return contains(*p.inner, {std::get<Fraction>(f.value).num});
          return contains(*p.inner, {std::get<PolyFraction>(f.value).num});
      }
    case PrimeKind::kComponent:
      return contains(*p.inner, std::get<Tuple>(f.value)[p.index]);
    case PrimeKind::kFinite:
      return p.mask.test(std::get<FiniteElem>(f.value).index);
  }
  return false;
}

std::optional<SymElem> prime_generator(const SymPrime& p) {
  const SymRing& r = *p.ring;
  switch (p.kind) {
    case PrimeKind::kZero:
      return sym_zero(r);
    case PrimeKind::kPrincipalZ:
      return SymElem{p.p};
    case PrimeKind::kPrincipalPoly:
      return SymElem{p.f};
    case PrimeKind::kContracted: {
      const auto g = prime_generator(*p.inner);
      return normalize(r, *g);
    }
    case PrimeKind::kComponent: {
      const auto g = prime_generator(*p.inner);
      if (!g) return std::nullopt;
      Tuple t;
      for (std::size_t i = 0; i < r.factors().size(); ++i)
        t.push_back(i == p.index ? *g : sym_one(*r.factors()[i]));
      return SymElem{t};
    }
    case PrimeKind::kFinite:
      for (std::size_t g = 0; g < r.finite()->order(); ++g)
        if (p.mask.test(g) && ideal_generated(r.finite(), {Elem(g)}).members() == p.mask)
          return SymElem{FiniteElem{Elem(g)}};
      return std::nullopt;
  }
  return std::nullopt;
}

bool prime_subset(const SymPrime& p, const SymPrime& q) {
  if (!same_ring(p.ring, q.ring)) return false;
  switch (p.kind) {
    case PrimeKind::kZero:
      return true;
    case PrimeKind::kPrincipalZ:
    case PrimeKind::kPrincipalPoly:
      return p == q;
    case PrimeKind::kContracted:
      return q.kind == PrimeKind::kContracted && prime_subset(*p.inner, *q.inner);
    case PrimeKind::kComponent:
      return q.kind == PrimeKind::kComponent && p.index == q.index &&
             prime_subset(*p.inner, *q.inner);
    case PrimeKind::kFinite:
      return q.kind == PrimeKind::kFinite && (p.mask & ~q.mask).none();
  }
  return false;
}

bool is_maximal(const SymPrime& p) {
  switch (p.kind) {
    case PrimeKind::kZero:
      return false;
    case PrimeKind::kPrincipalZ:
    case PrimeKind::kPrincipalPoly:
      return true;
    case PrimeKind::kContracted:
      return is_maximal(*p.inner);
    case PrimeKind::kComponent:
      return is_maximal(*p.inner);
    case PrimeKind::kFinite:
      return is_maximal(Ideal::trusted(p.ring->finite(), p.mask));
  }
  return false;
}

Ideal lift_prime(const SymPrime& p) {
  const RingPtr f = to_finite(*p.ring);
  ElementSet mask;
  for (std::size_t i = 0; i < f->order(); ++i)
    if (contains(p, element_at(*p.ring, Elem(i)))) mask.set(i);
  return Ideal::trusted(f, mask);
}

// Spectra ------------------------------------------------------------------------

bool SpectrumDescriptor::finite() const { return families.empty(); }

std::vector<SymPrime> SpectrumDescriptor::sample(std::size_t per_family) const {
  std::vector<SymPrime> out = explicit_primes;
  for (const PrimeFamily& f : families) {
    auto more = f.enumerate(per_family);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

namespace {

PrimeFamily rational_primes() {
  PrimeFamily fam;
  fam.description = "(p) for every rational prime p";
  fam.enumerate = [](std::size_t count) {
    std::vector<SymPrime> out;
    for (const mpz_class& p : first_primes(count))
      out.push_back(principal_prime(SymRing::integers(), p));
    return out;
  };
  fam.member = [](const SymPrime& p) {
    return p.kind == PrimeKind::kPrincipalZ && p.ring->kind() == SymKind::kIntegers;
  };
  return fam;
}

PrimeFamily monic_irreducibles(const SymPtr& r) {
  PrimeFamily fam;
  fam.description = "(f) for every monic irreducible f over F_" + std::to_string(r->field()->q());
  fam.enumerate = [r](std::size_t count) {
    std::vector<SymPrime> out;
    for (unsigned d = 1; out.size() < count; ++d) {
      std::uint64_t n = 1;
      for (unsigned i = 0; i < d; ++i) n *= r->field()->q();
      for (std::uint64_t idx = 0; idx < n && out.size() < count; ++idx) {
        const FqPoly f = FqPoly::monic_from_index(r->field(), d, idx);
        if (is_irreducible(f)) out.push_back(principal_prime(r, f));
      }
    }
    return out;
  };
  fam.member = [](const SymPrime& p) { return p.kind == PrimeKind::kPrincipalPoly; };
  return fam;
}

PrimeFamily component_family(const SymPtr& r, std::size_t i, PrimeFamily inner) {
  PrimeFamily fam;
  fam.description = "component " + std::to_string(i) + ": " + inner.description;
  fam.enumerate = [r, i, e = inner.enumerate](std::size_t count) {
    std::vector<SymPrime> out;
    for (const SymPrime& q : e(count)) out.push_back(component_prime(r, i, q));
    return out;
  };
  fam.member = [i, m = inner.member](const SymPrime& p) {
    return p.kind == PrimeKind::kComponent && p.index == i && m(*p.inner);
  };
  fam.finite = inner.finite;
  return fam;
}

std::vector<SymPrime> finite_primes(const SymPtr& r, const SpecSet& s) {
  std::vector<SymPrime> out;
  for (const Ideal& i : s.primes) out.push_back(SymPrime{r, PrimeKind::kFinite, {}, {}, 0, nullptr, i.members()});
  return out;
}

SpectrumDescriptor describe(const SymPtr& r, bool maximal_only) {
  SpectrumDescriptor d;
  switch (r->kind()) {
    case SymKind::kIntegers:
      if (!maximal_only) d.explicit_primes.push_back(zero_prime(r));
      d.families.push_back(rational_primes());
      break;
    case SymKind::kPoly:
      if (!maximal_only) d.explicit_primes.push_back(zero_prime(r));
      d.families.push_back(monic_irreducibles(r));
      break;
    case SymKind::kQuotZ:
    case SymKind::kQuotPoly:
      d.explicit_primes = min_primes(r);
      break;
    case SymKind::kLocalize:
      if (!maximal_only) d.explicit_primes.push_back(zero_prime(r));
      if (!r->poly_based())
        d.explicit_primes.push_back(principal_prime(r, r->int_modulus()));
      else
        d.explicit_primes.push_back(principal_prime(r, r->poly_modulus()));
      break;
    case SymKind::kProduct:
      for (std::size_t i = 0; i < r->factors().size(); ++i) {
        const SpectrumDescriptor inner = describe(r->factors()[i], maximal_only);
        for (const SymPrime& q : inner.explicit_primes)
          d.explicit_primes.push_back(component_prime(r, i, q));
        for (const PrimeFamily& f : inner.families) d.families.push_back(component_family(r, i, f));
      }
      break;
    case SymKind::kLifted:
      d.explicit_primes =
          finite_primes(r, maximal_only ? max_spec(r->finite()) : spec(r->finite()));
      break;
  }
  return d;
}

}  // namespace

std::vector<SymPrime> min_primes(const SymPtr& r) {
  std::vector<SymPrime> out;
  switch (r->kind()) {
    case SymKind::kIntegers:
    case SymKind::kPoly:
    case SymKind::kLocalize:
      out.push_back(zero_prime(r));
      break;
    case SymKind::kQuotZ:
      if (r->int_modulus() == 1) break;
      for (const auto& [p, e] : factor_integer(r->int_modulus()).factors)
        out.push_back(principal_prime(r, p));
      break;
    case SymKind::kQuotPoly:
      if (r->poly_modulus().degree() < 1) break;
      for (const auto& [f, e] : factor(r->poly_modulus()).factors)
        out.push_back(principal_prime(r, f));
      break;
    case SymKind::kProduct:
      for (std::size_t i = 0; i < r->factors().size(); ++i)
        for (const SymPrime& q : min_primes(r->factors()[i]))
          out.push_back(component_prime(r, i, q));
      break;
    case SymKind::kLifted:
      out = finite_primes(r, min_spec(r->finite()));
      break;
  }
  return out;
}

SpectrumDescriptor max_spectrum(const SymPtr& r) { return describe(r, true); }
SpectrumDescriptor spectrum(const SymPtr& r) { return describe(r, false); }

std::vector<SymPrime> flat_closure_point(const SymPrime& p) {
  switch (p.kind) {
    case PrimeKind::kZero:
      return {p};
    case PrimeKind::kPrincipalZ:
    case PrimeKind::kPrincipalPoly:
      return {zero_prime(p.ring), p};
    case PrimeKind::kContracted: {
      if (p.ring->kind() != SymKind::kLocalize) return {p};
      std::vector<SymPrime> out;
      for (const SymPrime& q : flat_closure_point(*p.inner)) out.push_back(contracted_prime(p.ring, q));
      return out;
    }
    case PrimeKind::kComponent: {
      std::vector<SymPrime> out;
      for (const SymPrime& q : flat_closure_point(*p.inner))
        out.push_back(component_prime(p.ring, p.index, q));
      return out;
    }
    case PrimeKind::kFinite: {
      std::vector<SymPrime> out;
      for (const SymPrime& q : finite_primes(p.ring, spec(p.ring->finite())))
        if ((q.mask & ~p.mask).none()) out.push_back(q);
      return out;
    }
  }
  return {};
}

}  // namespace spectra
