// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include "spectra/poly.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "spectra/error.hpp"

namespace spectra {

// GaloisField ---------------------------------------------------------------

std::shared_ptr<const GaloisField> GaloisField::make(unsigned q) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const GaloisField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(q); it != cache.end()) return it->second;

  unsigned p = 0;
  for (unsigned d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) throw Error(ErrorCode::kInvalidArgument, "field order must be >= 2");
  unsigned k = 0;
  unsigned m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1)
    throw Error(ErrorCode::kInvalidArgument, std::to_string(q) + " is not a prime power");
  auto field = std::shared_ptr<const GaloisField>(new GaloisField(q, p, k, make_gf(p, k)));
  cache.emplace(q, field);
  return field;
}

Elem GaloisField::inv(Elem a) const {
  auto i = ring_->inverse(a);
  if (!i) throw Error(ErrorCode::kInvalidArgument, "division by zero in F_" + std::to_string(q_));
  return *i;
}

// FqPoly --------------------------------------------------------------------

FqPoly::FqPoly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == field_->zero()) c_.pop_back();
}

FqPoly FqPoly::monic_from_index(const FieldPtr& f, unsigned d, std::uint64_t index) {
  std::vector<Elem> c(d + 1, f->zero());
  for (unsigned i = 0; i < d; ++i) {
    c[i] = Elem(index % f->q());
    index /= f->q();
  }
  c[d] = f->one();
  return FqPoly(f, std::move(c));
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  return scale(field_->inv(lead()));
}

FqPoly FqPoly::scale(Elem a) const {
  std::vector<Elem> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = field_->mul(c_[i], a);
  return FqPoly(field_, std::move(c));
}

FqPoly FqPoly::shift(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<Elem> c(k, field_->zero());
  c.insert(c.end(), c_.begin(), c_.end());
  return FqPoly(field_, std::move(c));
}

std::uint64_t FqPoly::index() const {
  std::uint64_t idx = 0;
  for (std::size_t i = c_.size(); i-- > 0;) idx = idx * field_->q() + c_[i];
  return idx;
}

std::string FqPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Elem c = c_[i];
    if (c == field_->zero()) continue;
    std::string coef = field_->name(c);
    if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += coef;
      continue;
    }
    if (c != field_->one()) out += coef;
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
  const FieldPtr& f = a.field_ ? a.field_ : b.field_;
  std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), f->zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f->add(a.coeff(i), b.coeff(i));
  return FqPoly(f, std::move(c));
}

FqPoly operator-(const FqPoly& a) {
  std::vector<Elem> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_->neg(a.c_[i]);
  return FqPoly(a.field_, std::move(c));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) { return a + (-b); }

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  const FieldPtr& f = a.field_ ? a.field_ : b.field_;
  if (a.is_zero() || b.is_zero()) return FqPoly::zero(f);
  std::vector<Elem> c(a.c_.size() + b.c_.size() - 1, f->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = f->add(c[i + j], f->mul(a.c_[i], b.c_[j]));
  return FqPoly(f, std::move(c));
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "polynomial division by zero");
  const FieldPtr& f = b.field();
  const Elem inv_lead = f->inv(b.lead());
  FqPoly r = a;
  std::vector<Elem> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, f->zero());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const std::size_t shift = r.degree() - b.degree();
    const Elem c = f->mul(r.lead(), inv_lead);
    q[shift] = c;
    r = r - b.scale(c).shift(shift);
  }
  return {FqPoly(f, std::move(q)), r};
}

FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }

bool divides(const FqPoly& d, const FqPoly& a) {
  if (d.is_zero()) return a.is_zero();
  return (a % d).is_zero();
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyXgcd xgcd(const FqPoly& a, const FqPoly& b) {
  const FieldPtr& f = a.field() ? a.field() : b.field();
  FqPoly r0 = a, r1 = b;
  FqPoly s0 = FqPoly::constant(f, f->one()), s1 = FqPoly::zero(f);
  FqPoly t0 = FqPoly::zero(f), t1 = FqPoly::constant(f, f->one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FqPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    FqPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem k = f->inv(r0.lead());
  return {r0.scale(k), s0.scale(k), t0.scale(k)};
}

FqPoly pow(const FqPoly& a, unsigned e) {
  FqPoly result = FqPoly::constant(a.field(), a.field()->one());
  FqPoly base = a;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

FqPoly powmod(const FqPoly& a, std::uint64_t e, const FqPoly& m) {
  FqPoly result = FqPoly::constant(a.field(), a.field()->one()) % m;
  FqPoly base = a % m;
  while (e) {
    if (e & 1) result = (result * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const FqPoly& f) {
  if (f.degree() < 1) return false;
  const FieldPtr& F = f.field();
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) {
      count *= F->q();
      if (count > kPolyFactorWork)
        throw Error(ErrorCode::kBoundExceeded, "irreducibility search exceeds work bound");
    }
    for (std::uint64_t idx = 0; idx < count; ++idx)
      if (divides(FqPoly::monic_from_index(F, d, idx), f)) return false;
  }
  return true;
}

bool is_irreducible_rabin(const FqPoly& f0) {
  if (f0.degree() < 1) return false;
  const FqPoly f = f0.monic();
  const unsigned n = static_cast<unsigned>(f.degree());
  const FieldPtr& F = f.field();
  const FqPoly x = FqPoly::x(F) % f;
  // frob[i] = x^(q^i) mod f
  std::vector<FqPoly> frob{x};
  for (unsigned i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), F->q(), f));
  if (!(frob[n] == x)) return false;
  for (unsigned r = 2; r <= n; ++r) {
    if (n % r) continue;
    bool prime = true;
    for (unsigned d = 2; d * d <= r; ++d)
      if (r % d == 0) prime = false;
    if (!prime) continue;
    if (gcd(frob[n / r] - x, f).degree() != 0) return false;
  }
  return true;
}

PolyFactorization factor(const FqPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kInvalidArgument, "cannot factor 0");
  if (f.degree() > kMaxFactorDegree)
    throw Error(ErrorCode::kBoundExceeded, "polynomial degree exceeds factor bound");
  const FieldPtr& F = f.field();
  PolyFactorization out{f.lead(), {}};
  FqPoly rest = f.monic();
  std::uint64_t work = 0;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= F->q();
    for (std::uint64_t idx = 0; idx < count && 2 * d <= rest.degree(); ++idx) {
      if (++work > kPolyFactorWork)
        throw Error(ErrorCode::kBoundExceeded, "polynomial factoring exceeds work bound");
      const FqPoly cand = FqPoly::monic_from_index(F, d, idx);
      unsigned e = 0;
      while (true) {
        auto [q, r] = divmod(rest, cand);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++e;
      }
      // The smallest-degree divisor left is irreducible.
      if (e) out.factors.emplace_back(cand, e);
    }
  }
  if (rest.degree() >= 1) {
    bool merged = false;
    for (auto& [g, e] : out.factors)
      if (g == rest) {
        ++e;
        merged = true;
      }
    if (!merged) out.factors.emplace_back(rest, 1);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.index() < b.first.index();
  });
  for (const auto& [g, e] : out.factors)
    if (!is_irreducible(g))
      throw Error(ErrorCode::kReducible, "factor " + g.to_string() + " failed irreducibility check");
  return out;
}

FqPoly radical_of(const FqPoly& f) {
  FqPoly r = FqPoly::constant(f.field(), f.field()->one());
  for (const auto& [g, e] : factor(f).factors) r = r * g;
  return r;
}

bool is_squarefree(const FqPoly& f) {
  for (const auto& [g, e] : factor(f).factors)
    if (e > 1) return false;
  return true;
}

unsigned valuation(const FqPoly& f, const FqPoly& g) {
  if (f.is_zero()) throw Error(ErrorCode::kInvalidArgument, "valuation of 0");
  unsigned e = 0;
  FqPoly m = f;
  while (true) {
    auto [q, r] = divmod(m, g);
    if (!r.is_zero()) return e;
    m = std::move(q);
    ++e;
  }
}

FqPoly parse_poly(const FieldPtr& field, const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&](long long& out) {
    skip();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    out = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out = out * 10 + (text[i] - '0');
      if (out > 1'000'000'000) throw ParseError(i, "smaller coefficient", "coefficient too large");
      ++i;
    }
    return true;
  };
  FqPoly acc = FqPoly::zero(field);
  bool first = true;
  skip();
  if (i == text.size()) throw ParseError(i, "polynomial", "empty polynomial");
  while (true) {
    skip();
    if (i >= text.size()) break;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
    } else if (!first) {
      throw ParseError(i, "'+' or '-'", "unexpected character");
    }
    first = false;
    long long coef = 1;
    const bool has_coef = number(coef);
    skip();
    if (has_coef && i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    unsigned exponent = 0;
    if (i < text.size() && text[i] == 'x') {
      ++i;
      exponent = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        long long e = 0;
        if (!number(e)) throw ParseError(i, "exponent", "missing exponent");
        if (e > 64) throw ParseError(i, "exponent <= 64", "exponent too large");
        exponent = static_cast<unsigned>(e);
      }
    } else if (!has_coef) {
      throw ParseError(i, "coefficient or x", "malformed term");
    }
    Elem c = field->from_int(coef);
    if (negative) c = field->neg(c);
    std::vector<Elem> term(exponent + 1, field->zero());
    term[exponent] = c;
    acc = acc + FqPoly(field, std::move(term));
  }
  return acc;
}

RingPtr poly_quotient_ring(const FqPoly& modulus, const std::string& label, std::size_t cap) {
  if (modulus.is_zero())
    throw Error(ErrorCode::kInvalidArgument, "quotient by the zero polynomial is infinite");
  const FieldPtr& F = modulus.field();
  const FqPoly m = modulus.monic();
  const unsigned d = static_cast<unsigned>(m.degree());
  std::size_t n = 1;
  for (unsigned i = 0; i < d; ++i) {
    n *= F->q();
    if (n > cap || n > kMaxOrder)
      throw Error(ErrorCode::kBoundExceeded, label + " exceeds order cap");
  }
  std::vector<FqPoly> elems;
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::vector<Elem> c(d, F->zero());
    std::size_t code = idx;
    for (unsigned i = 0; i < d; ++i) {
      c[i] = Elem(code % F->q());
      code /= F->q();
    }
    elems.emplace_back(F, std::move(c));
  }
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = Elem(((elems[a] + elems[b]) % m).index());
      t.mul[a * n + b] = Elem(((elems[a] * elems[b]) % m).index());
    }
  t.zero = 0;
  t.one = Elem(n == 1 ? 0 : 1);
  t.label = label;
  for (const FqPoly& e : elems) t.names.push_back(e.to_string());
  return FiniteRing::trusted(std::move(t));
}

}  // namespace spectra
