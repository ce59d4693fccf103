// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include "spectra/finite_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "spectra/error.hpp"

namespace spectra {

namespace {

std::string fmt_triple(const char* what, std::size_t a, std::size_t b,
                       std::size_t c) {
  std::ostringstream os;
  os << what << " fails at (" << a << ", " << b << ", " << c << ")";
  return os.str();
}

bool is_small_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over F_p as coefficient vectors, constant term first.
using PrimePoly = std::vector<unsigned>;

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + p * p - (lead * m[i]) % p) % p;
    trim(a);
  }
  return a;
}

PrimePoly digits(std::size_t index, unsigned p, unsigned k) {
  PrimePoly d(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = static_cast<unsigned>(index % p);
    index /= p;
  }
  return d;
}

std::size_t undigits(const PrimePoly& d, unsigned p) {
  std::size_t index = 0;
  for (std::size_t i = d.size(); i-- > 0;) index = index * p + d[i];
  return index;
}

bool prime_poly_irreducible(const PrimePoly& m, unsigned p) {
  const unsigned k = static_cast<unsigned>(m.size() - 1);
  // Every monic candidate divisor of degree 1..k/2.
  for (unsigned d = 1; 2 * d <= k; ++d) {
    std::size_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::size_t idx = 0; idx < count; ++idx) {
      PrimePoly cand = digits(idx, p, d);
      cand.push_back(1);
      if (poly_mod(m, cand, p).empty()) return false;
    }
  }
  return true;
}

std::string gf_name(std::size_t index, unsigned p, unsigned k) {
  if (k == 1) return std::to_string(index);
  const PrimePoly d = digits(index, p, k);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]);
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// Subring generated by gens (always containing 0 and 1).
ElementSet subring_closure(const FiniteRing& r, const std::vector<Elem>& gens) {
  ElementSet in;
  std::vector<Elem> known;
  std::vector<Elem> work{r.zero(), r.one()};
  work.insert(work.end(), gens.begin(), gens.end());
  while (!work.empty()) {
    const Elem x = work.back();
    work.pop_back();
    if (in.test(x)) continue;
    in.set(x);
    known.push_back(x);
    for (const Elem y : known) {
      for (const Elem z : {r.add(x, y), r.mul(x, y)})
        if (!in.test(z)) work.push_back(z);
    }
  }
  return in;
}

}  // namespace

std::optional<std::string> check_axioms(const RingTables& t) {
  const std::size_t n = t.order;
  if (n == 0) return "order must be positive";
  if (n > kMaxOrder) return "order exceeds " + std::to_string(kMaxOrder);
  if (t.add.size() != n * n || t.mul.size() != n * n)
    return "tables must be order x order";
  if (t.zero >= n || t.one >= n) return "zero/one out of range";
  if (!t.names.empty() && t.names.size() != n) return "names size mismatch";
  for (std::size_t i = 0; i < n * n; ++i)
    if (t.add[i] >= n || t.mul[i] >= n) return "table entry out of range";
  if (n > 1 && t.zero == t.one) return "one equals zero in a nonzero ring";
  auto A = [&](std::size_t a, std::size_t b) { return t.add[a * n + b]; };
  auto M = [&](std::size_t a, std::size_t b) { return t.mul[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (A(a, t.zero) != a) return "zero is not an additive identity";
    if (M(a, t.one) != a) return "one is not a multiplicative identity";
    bool has_neg = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) return fmt_triple("additive commutativity", a, b, 0);
      if (M(a, b) != M(b, a)) return fmt_triple("multiplicative commutativity", a, b, 0);
      if (A(a, b) == t.zero) has_neg = true;
    }
    if (!has_neg) return "element " + std::to_string(a) + " has no additive inverse";
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (A(A(a, b), c) != A(a, A(b, c)))
          return fmt_triple("additive associativity", a, b, c);
        if (M(M(a, b), c) != M(a, M(b, c)))
          return fmt_triple("multiplicative associativity", a, b, c);
        if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
          return fmt_triple("distributivity", a, b, c);
      }
  return std::nullopt;
}

// FiniteRing ----------------------------------------------------------------

FiniteRing::FiniteRing(RingTables tables)
    : tables_(std::move(tables)),
      order_(tables_.order),
      add_(tables_.add.data()),
      mul_(tables_.mul.data()),
      zero_(tables_.zero),
      one_(tables_.one),
      label_(tables_.label),
      neg_(order_, 0),
      inv_(order_, kNoInverse) {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) {
      if (add(Elem(a), Elem(b)) == zero_) neg_[a] = Elem(b);
      if (mul(Elem(a), Elem(b)) == one_) inv_[a] = Elem(b);
    }
}

RingPtr FiniteRing::from_tables(RingTables tables) {
  if (auto failure = check_axioms(tables))
    throw Error(ErrorCode::kInvalidArgument, "ring axioms violated: " + *failure);
  return trusted(std::move(tables));
}

RingPtr FiniteRing::trusted(RingTables tables) {
  return RingPtr(new FiniteRing(std::move(tables)));
}

Elem FiniteRing::pow(Elem a, std::size_t k) const {
  Elem result = one_;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem FiniteRing::from_int(long long k) const {
  // The additive order of 1 divides |R|, so reducing k mod |R| is exact.
  const long long n = static_cast<long long>(order_);
  long long m = k % n;
  if (m < 0) m += n;
  Elem acc = zero_;
  for (long long i = 0; i < m; ++i) acc = add(acc, one_);
  return acc;
}

std::optional<Elem> FiniteRing::inverse(Elem a) const {
  if (inv_[a] == kNoInverse) return std::nullopt;
  return inv_[a];
}

bool FiniteRing::is_field() const {
  if (order_ < 2) return false;
  for (std::size_t a = 0; a < order_; ++a)
    if (Elem(a) != zero_ && !is_unit(Elem(a))) return false;
  return true;
}

bool FiniteRing::is_nilpotent(Elem a) const {
  return pow(a, order_) == zero_;
}

std::string FiniteRing::name(Elem a) const {
  if (!tables_.names.empty()) return tables_.names[a];
  return std::to_string(a);
}

ElementSet FiniteRing::all() const {
  ElementSet s;
  for (std::size_t a = 0; a < order_; ++a) s.set(a);
  return s;
}

// Ideal ---------------------------------------------------------------------

bool is_ideal(const FiniteRing& r, const ElementSet& members) {
  if (!members.test(r.zero())) return false;
  const std::size_t n = r.order();
  for (std::size_t a = 0; a < n; ++a) {
    if (!members.test(a)) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (members.test(b) && !members.test(r.add(Elem(a), Elem(b)))) return false;
      if (!members.test(r.mul(Elem(a), Elem(b)))) return false;
    }
  }
  return true;
}

Ideal Ideal::make(RingPtr ring, const ElementSet& members) {
  for (std::size_t a = ring->order(); a < kMaxOrder; ++a)
    if (members.test(a))
      throw Error(ErrorCode::kNotIdeal, "ideal mask exceeds ring order");
  if (!is_ideal(*ring, members))
    throw Error(ErrorCode::kNotIdeal, "subset is not an ideal of " + ring->label());
  return Ideal(std::move(ring), members);
}

Ideal Ideal::trusted(RingPtr ring, const ElementSet& members) {
  return Ideal(std::move(ring), members);
}

std::vector<Elem> Ideal::elements() const {
  std::vector<Elem> out;
  for (std::size_t a = 0; a < ring_->order(); ++a)
    if (members_.test(a)) out.push_back(Elem(a));
  return out;
}

std::string Ideal::to_string() const {
  // Smallest generator producing the whole ideal, if principal.
  for (const Elem g : elements()) {
    ElementSet principal;
    for (std::size_t r = 0; r < ring_->order(); ++r)
      principal.set(ring_->mul(g, Elem(r)));
    if (principal == members_) return "(" + ring_->name(g) + ")";
  }
  std::string out = "{";
  bool first = true;
  for (const Elem a : elements()) {
    if (!first) out += ",";
    out += ring_->name(a);
    first = false;
  }
  return out + "}";
}

bool ideal_less(const Ideal& a, const Ideal& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::size_t n = a.ring()->order();
  // Lexicographic on sorted member lists.
  std::size_t i = 0, j = 0;
  while (i < n && j < n) {
    while (i < n && !a.contains(Elem(i))) ++i;
    while (j < n && !b.contains(Elem(j))) ++j;
    if (i == n || j == n) break;
    if (i != j) return i < j;
    ++i;
    ++j;
  }
  return false;
}

// RingHom -------------------------------------------------------------------

std::optional<std::string> check_hom(const FiniteRing& s, const FiniteRing& t,
                                     const std::vector<Elem>& map) {
  if (map.size() != s.order()) return "map size differs from source order";
  for (const Elem m : map)
    if (m >= t.order()) return "map entry out of range";
  if (map[s.zero()] != t.zero()) return "zero not preserved";
  if (map[s.one()] != t.one()) return "one not preserved";
  for (std::size_t a = 0; a < s.order(); ++a)
    for (std::size_t b = 0; b < s.order(); ++b) {
      if (map[s.add(Elem(a), Elem(b))] != t.add(map[a], map[b]))
        return fmt_triple("additivity", a, b, 0);
      if (map[s.mul(Elem(a), Elem(b))] != t.mul(map[a], map[b]))
        return fmt_triple("multiplicativity", a, b, 0);
    }
  return std::nullopt;
}

RingHom RingHom::make(RingPtr source, RingPtr target, std::vector<Elem> map) {
  if (auto failure = check_hom(*source, *target, map))
    throw Error(ErrorCode::kInvalidArgument, "not a ring hom: " + *failure);
  return RingHom(std::move(source), std::move(target), std::move(map));
}

RingHom RingHom::trusted(RingPtr source, RingPtr target, std::vector<Elem> map) {
  return RingHom(std::move(source), std::move(target), std::move(map));
}

RingHom RingHom::identity(const RingPtr& r) {
  std::vector<Elem> map(r->order());
  std::iota(map.begin(), map.end(), Elem(0));
  return RingHom(r, r, std::move(map));
}

bool RingHom::is_injective() const {
  ElementSet seen;
  for (const Elem m : map_) {
    if (seen.test(m)) return false;
    seen.set(m);
  }
  return true;
}

bool RingHom::is_surjective() const {
  ElementSet seen;
  for (const Elem m : map_) seen.set(m);
  return seen.count() == target_->order();
}

RingHom RingHom::then(const RingHom& after) const {
  std::vector<Elem> map(map_.size());
  for (std::size_t a = 0; a < map_.size(); ++a) map[a] = after(map_[a]);
  return RingHom(source_, after.target_, std::move(map));
}

// Constructions -------------------------------------------------------------

RingPtr make_zmod(std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "Z/n requires n >= 1");
  if (n > cap || n > kMaxOrder)
    throw Error(ErrorCode::kBoundExceeded,
                "Z/" + std::to_string(n) + " exceeds order cap " + std::to_string(cap));
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = Elem((a + b) % n);
      t.mul[a * n + b] = Elem((a * b) % n);
    }
  t.zero = 0;
  t.one = Elem(1 % n);
  t.label = "Z/" + std::to_string(n);
  return FiniteRing::trusted(std::move(t));
}

std::vector<unsigned> default_gf_modulus(unsigned p, unsigned k) {
  if (!is_small_prime(p))
    throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "GF degree must be >= 1");
  std::size_t count = 1;
  for (unsigned i = 0; i < k; ++i) {
    count *= p;
    if (count > kMaxOrder)
      throw Error(ErrorCode::kBoundExceeded, "GF order exceeds cap");
  }
  for (std::size_t idx = 0; idx < count; ++idx) {
    PrimePoly m = digits(idx, p, k);
    m.push_back(1);
    if (prime_poly_irreducible(m, p)) return m;
  }
  throw Error(ErrorCode::kReducible, "no irreducible modulus found");
}

RingPtr make_gf(unsigned p, unsigned k) {
  return make_gf(p, k, default_gf_modulus(p, k));
}

RingPtr make_gf(unsigned p, unsigned k, const std::vector<unsigned>& modulus,
                std::size_t cap) {
  if (!is_small_prime(p))
    throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "GF degree must be >= 1");
  if (modulus.size() != k + 1 || modulus.back() != 1)
    throw Error(ErrorCode::kInvalidArgument, "modulus must be monic of degree k");
  for (const unsigned c : modulus)
    if (c >= p) throw Error(ErrorCode::kInvalidArgument, "modulus coefficient >= p");
  std::size_t n = 1;
  for (unsigned i = 0; i < k; ++i) {
    n *= p;
    if (n > cap || n > kMaxOrder)
      throw Error(ErrorCode::kBoundExceeded, "GF order exceeds cap");
  }
  if (!prime_poly_irreducible(modulus, p))
    throw Error(ErrorCode::kReducible, "modulus is reducible over F_" + std::to_string(p));

  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const PrimePoly da = digits(a, p, k);
    for (std::size_t b = 0; b < n; ++b) {
      const PrimePoly db = digits(b, p, k);
      PrimePoly sum(k);
      for (unsigned i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      t.add[a * n + b] = Elem(undigits(sum, p));
      PrimePoly prod(2 * k, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      PrimePoly red = poly_mod(prod, modulus, p);
      red.resize(k, 0);
      t.mul[a * n + b] = Elem(undigits(red, p));
    }
  }
  t.zero = 0;
  t.one = 1;
  t.label = k == 1 ? "GF(" + std::to_string(p) + ")"
                   : "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
  if (k > 1)
    for (std::size_t a = 0; a < n; ++a) t.names.push_back(gf_name(a, p, k));
  return FiniteRing::trusted(std::move(t));
}

RingPtr product(const std::vector<RingPtr>& factors, std::size_t cap) {
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f->order();
    if (n > cap || n > kMaxOrder)
      throw Error(ErrorCode::kBoundExceeded, "product order exceeds cap");
  }
  auto split = [&](std::size_t index) {
    std::vector<Elem> parts(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      parts[i] = Elem(index % factors[i]->order());
      index /= factors[i]->order();
    }
    return parts;
  };
  auto join = [&](const std::vector<Elem>& parts) {
    std::size_t index = 0;
    for (std::size_t i = factors.size(); i-- > 0;)
      index = index * factors[i]->order() + parts[i];
    return Elem(index);
  };
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<std::vector<Elem>> parts(n);
  for (std::size_t a = 0; a < n; ++a) parts[a] = split(a);
  std::vector<Elem> s(factors.size()), m(factors.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        s[i] = factors[i]->add(parts[a][i], parts[b][i]);
        m[i] = factors[i]->mul(parts[a][i], parts[b][i]);
      }
      t.add[a * n + b] = join(s);
      t.mul[a * n + b] = join(m);
    }
  std::vector<Elem> zeros, ones;
  for (const auto& f : factors) {
    zeros.push_back(f->zero());
    ones.push_back(f->one());
  }
  t.zero = join(zeros);
  t.one = join(ones);
  if (factors.empty()) {
    t.label = "Z/1";
  } else {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) t.label += " x ";
      const std::string& l = factors[i]->label();
      t.label += l.find(" x ") != std::string::npos ? "(" + l + ")" : l;
    }
  }
  if (factors.size() > 1) {
    for (std::size_t a = 0; a < n; ++a) {
      std::string name = "(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) name += ",";
        name += factors[i]->name(parts[a][i]);
      }
      t.names.push_back(name + ")");
    }
  } else if (factors.size() == 1) {
    t.names = factors[0]->tables().names;
  }
  return FiniteRing::trusted(std::move(t));
}

std::vector<RingHom> product_projections(const RingPtr& product_ring,
                                         const std::vector<RingPtr>& factors) {
  std::vector<RingHom> out;
  std::size_t stride = 1;
  for (const auto& f : factors) {
    std::vector<Elem> map(product_ring->order());
    for (std::size_t a = 0; a < product_ring->order(); ++a)
      map[a] = Elem((a / stride) % f->order());
    out.push_back(RingHom::trusted(product_ring, f, std::move(map)));
    stride *= f->order();
  }
  return out;
}

namespace {

// Greedy ideal generators: smallest member not yet in the generated ideal.
std::vector<Elem> ideal_generators(const Ideal& ideal) {
  const FiniteRing& r = *ideal.ring();
  std::vector<Elem> gens;
  ElementSet current;
  current.set(r.zero());
  for (const Elem a : ideal.elements()) {
    if (current.test(a)) continue;
    gens.push_back(a);
    ElementSet principal;
    for (std::size_t x = 0; x < r.order(); ++x) principal.set(r.mul(a, Elem(x)));
    ElementSet sum;
    for (std::size_t x = 0; x < r.order(); ++x) {
      if (!current.test(x)) continue;
      for (std::size_t y = 0; y < r.order(); ++y)
        if (principal.test(y)) sum.set(r.add(Elem(x), Elem(y)));
    }
    current = sum;
  }
  return gens;
}

}  // namespace

std::pair<RingPtr, RingHom> quotient(const Ideal& ideal) {
  const RingPtr& rp = ideal.ring();
  const FiniteRing& r = *rp;
  if (!is_ideal(r, ideal.members()))
    throw Error(ErrorCode::kNotIdeal, "quotient by a non-ideal");
  const std::size_t n = r.order();
  std::vector<Elem> rep(n);
  for (std::size_t a = 0; a < n; ++a) {
    Elem best = Elem(a);
    for (const Elem i : ideal.elements()) best = std::min(best, r.add(Elem(a), i));
    rep[a] = best;
  }
  std::vector<Elem> reps;
  for (std::size_t a = 0; a < n; ++a)
    if (rep[a] == a) reps.push_back(Elem(a));
  std::vector<Elem> coset_of_rep(n, 0);
  for (std::size_t c = 0; c < reps.size(); ++c) coset_of_rep[reps[c]] = Elem(c);
  std::vector<Elem> map(n);
  for (std::size_t a = 0; a < n; ++a) map[a] = coset_of_rep[rep[a]];

  const std::size_t m = reps.size();
  RingTables t;
  t.order = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      t.add[a * m + b] = map[r.add(reps[a], reps[b])];
      t.mul[a * m + b] = map[r.mul(reps[a], reps[b])];
    }
  t.zero = map[r.zero()];
  t.one = map[r.one()];
  if (ideal.is_zero_ideal()) {
    t.label = r.label();
  } else {
    t.label = "quot(" + r.label();
    for (const Elem g : ideal_generators(ideal)) t.label += ", " + std::to_string(g);
    t.label += ")";
  }
  if (!r.tables().names.empty())
    for (const Elem a : reps) t.names.push_back(r.name(a));
  RingPtr q = FiniteRing::trusted(std::move(t));
  return {q, RingHom::trusted(rp, q, std::move(map))};
}

// Absolute flatness ---------------------------------------------------------

std::optional<QuasiInverseWitness> find_quasi_inverse(const FiniteRing& r, Elem f) {
  const Elem f2 = r.mul(f, f);
  for (std::size_t g = 0; g < r.order(); ++g) {
    if (r.mul(f2, Elem(g)) != f) continue;
    if (r.mul(r.mul(Elem(g), Elem(g)), f) == Elem(g)) return QuasiInverseWitness{f, Elem(g)};
    // One-sided solution; g^2 f is the two-sided quasi-inverse.
    const Elem h = r.mul(r.mul(Elem(g), Elem(g)), f);
    return QuasiInverseWitness{f, h};
  }
  return std::nullopt;
}

AbsoluteFlatness is_absolutely_flat(const FiniteRing& r) {
  AbsoluteFlatness out;
  for (std::size_t f = 0; f < r.order(); ++f) {
    auto w = find_quasi_inverse(r, Elem(f));
    if (!w) {
      out.flat = false;
      out.witnesses.clear();
      out.counterexample = Elem(f);
      return out;
    }
    out.witnesses.push_back(*w);
  }
  out.flat = true;
  return out;
}

bool is_reduced(const FiniteRing& r) {
  for (std::size_t a = 0; a < r.order(); ++a)
    if (Elem(a) != r.zero() && r.is_nilpotent(Elem(a))) return false;
  return true;
}

// Structure -----------------------------------------------------------------

std::vector<Elem> idempotents(const FiniteRing& r) {
  std::vector<Elem> out;
  for (std::size_t a = 0; a < r.order(); ++a)
    if (r.is_idempotent(Elem(a))) out.push_back(Elem(a));
  return out;
}

bool is_local(const FiniteRing& r) {
  if (r.order() < 2) return false;
  for (std::size_t a = 0; a < r.order(); ++a) {
    if (r.is_unit(Elem(a))) continue;
    for (std::size_t b = 0; b < r.order(); ++b)
      if (!r.is_unit(Elem(b)) && r.is_unit(r.add(Elem(a), Elem(b)))) return false;
  }
  return true;
}

std::vector<LocalFactor> local_decomposition(const RingPtr& rp) {
  const FiniteRing& r = *rp;
  const std::vector<Elem> idem = idempotents(r);
  std::vector<LocalFactor> out;
  for (const Elem e : idem) {
    if (e == r.zero()) continue;
    bool primitive = true;
    for (const Elem f : idem)
      if (f != r.zero() && f != e && r.mul(f, e) == f) {
        primitive = false;
        break;
      }
    if (!primitive) continue;

    std::vector<Elem> members;
    ElementSet seen;
    for (std::size_t a = 0; a < r.order(); ++a) seen.set(r.mul(e, Elem(a)));
    for (std::size_t a = 0; a < r.order(); ++a)
      if (seen.test(a)) members.push_back(Elem(a));
    std::vector<Elem> index_of(r.order(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) index_of[members[i]] = Elem(i);

    const std::size_t m = members.size();
    RingTables t;
    t.order = m;
    t.add.resize(m * m);
    t.mul.resize(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        t.add[a * m + b] = index_of[r.add(members[a], members[b])];
        t.mul[a * m + b] = index_of[r.mul(members[a], members[b])];
      }
    t.zero = index_of[r.zero()];
    t.one = index_of[e];
    t.label = r.label() + "[e=" + r.name(e) + "]";
    for (const Elem a : members) t.names.push_back(r.name(a));
    RingPtr factor = FiniteRing::trusted(std::move(t));
    std::vector<Elem> map(r.order());
    for (std::size_t a = 0; a < r.order(); ++a) map[a] = index_of[r.mul(e, Elem(a))];
    out.push_back(LocalFactor{e, factor, RingHom::trusted(rp, factor, std::move(map))});
  }
  return out;
}

Ideal hom_kernel(const RingHom& phi) {
  ElementSet k;
  const FiniteRing& s = *phi.source();
  for (std::size_t a = 0; a < s.order(); ++a)
    if (phi(Elem(a)) == phi.target()->zero()) k.set(a);
  return Ideal::trusted(phi.source(), k);
}

RingPtr hom_image(const RingHom& phi) {
  const FiniteRing& t = *phi.target();
  ElementSet img;
  for (const Elem m : phi.table()) img.set(m);
  std::vector<Elem> members;
  for (std::size_t a = 0; a < t.order(); ++a)
    if (img.test(a)) members.push_back(Elem(a));
  std::vector<Elem> index_of(t.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) index_of[members[i]] = Elem(i);
  const std::size_t m = members.size();
  RingTables tab;
  tab.order = m;
  tab.add.resize(m * m);
  tab.mul.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      tab.add[a * m + b] = index_of[t.add(members[a], members[b])];
      tab.mul[a * m + b] = index_of[t.mul(members[a], members[b])];
    }
  tab.zero = index_of[t.zero()];
  tab.one = index_of[t.one()];
  tab.label = "im(" + phi.source()->label() + " -> " + t.label() + ")";
  for (const Elem a : members) tab.names.push_back(t.name(a));
  return FiniteRing::trusted(std::move(tab));
}

std::vector<Elem> ring_generators(const FiniteRing& r) {
  std::vector<Elem> gens;
  ElementSet sub = subring_closure(r, gens);
  for (std::size_t a = 0; a < r.order(); ++a) {
    if (sub.test(a)) continue;
    gens.push_back(Elem(a));
    sub = subring_closure(r, gens);
  }
  return gens;
}

namespace {

constexpr Elem kUnset = 0xFFFF;

struct HomSearch {
  const RingPtr& ap;
  const RingPtr& bp;
  const std::vector<Elem>& gens;
  std::size_t limit;
  std::size_t nodes = 0;
  std::vector<RingHom> found;

  // Assigns x -> fx and closes under + and x against every known pair.
  static bool extend(const FiniteRing& a, const FiniteRing& b,
                     std::vector<Elem>& map, std::vector<Elem>& known, Elem x,
                     Elem fx) {
    std::vector<Elem> work;
    bool ok = true;
    auto assign = [&](Elem y, Elem fy) {
      if (map[y] == kUnset) {
        map[y] = fy;
        work.push_back(y);
      } else if (map[y] != fy) {
        ok = false;
      }
    };
    assign(x, fx);
    while (ok && !work.empty()) {
      const Elem y = work.back();
      work.pop_back();
      known.push_back(y);
      for (std::size_t i = 0; ok && i < known.size(); ++i) {
        const Elem z = known[i];
        assign(a.add(y, z), b.add(map[y], map[z]));
        if (ok) assign(a.mul(y, z), b.mul(map[y], map[z]));
      }
    }
    return ok;
  }

  void run(std::size_t level, const std::vector<Elem>& map,
           const std::vector<Elem>& known) {
    if (++nodes > limit)
      throw Error(ErrorCode::kBoundExceeded, "hom enumeration " + ap->label() +
                                                 " -> " + bp->label() +
                                                 " exceeds search limit");
    if (level == gens.size()) {
      if (std::find(map.begin(), map.end(), kUnset) == map.end())
        found.push_back(RingHom::trusted(ap, bp, map));
      return;
    }
    const Elem g = gens[level];
    if (map[g] != kUnset) {
      run(level + 1, map, known);
      return;
    }
    for (std::size_t v = 0; v < bp->order(); ++v) {
      std::vector<Elem> m2 = map;
      std::vector<Elem> k2 = known;
      if (extend(*ap, *bp, m2, k2, g, Elem(v))) run(level + 1, m2, k2);
    }
  }
};

}  // namespace

std::vector<RingHom> enumerate_homs(const RingPtr& ap, const RingPtr& bp,
                                    std::size_t limit) {
  const FiniteRing& a = *ap;
  const FiniteRing& b = *bp;
  const std::vector<Elem> gens = ring_generators(a);
  std::vector<Elem> map(a.order(), kUnset);
  std::vector<Elem> known;
  if (!HomSearch::extend(a, b, map, known, a.zero(), b.zero())) return {};
  if (!HomSearch::extend(a, b, map, known, a.one(), b.one())) return {};
  HomSearch search{ap, bp, gens, limit, 0, {}};
  search.run(0, map, known);
  return std::move(search.found);
}

std::optional<RingHom> find_isomorphism(const RingPtr& a, const RingPtr& b) {
  if (a->order() != b->order()) return std::nullopt;
  for (auto& h : enumerate_homs(a, b))
    if (h.is_bijective()) return h;
  return std::nullopt;
}

}  // namespace spectra
