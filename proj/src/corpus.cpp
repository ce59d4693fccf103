// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include "spectra/corpus.hpp"

#include <map>

#include "spectra/error.hpp"
#include "spectra/ideal_lattice.hpp"
#include "spectra/parser.hpp"

namespace spectra {

using nlohmann::json;

std::vector<std::string> CorpusConfig::default_sym_members() {
  std::vector<std::string> m = {
      "Z", "F2[x]", "F3[x]",
      "loc(Z,(2))", "loc(Z,(3))", "loc(Z,(5))", "loc(Z,(7))", "loc(Z,(11))", "loc(Z,(13))",
      "loc(F2[x],(x))", "loc(F3[x],(x^2+1))",
      "Z x Z", "Z x F2[x]", "Z x Z/6", "Z x loc(Z,(3))", "Z x Z x Z", "Z x GF(4)",
      "loc(Z,(2)) x loc(Z,(3))", "Z/12 x loc(Z,(7))", "F3[x] x Z/4 x loc(Z,(5))",
      "F2[x]/(x^2)", "F2[x]/(x^3+x)", "F2[x]/(x^4+x)", "F3[x]/(x^2+1)", "F2[x]/(x^9+1)",
      "Z/720", "Z/1001", "Z/1000000007",
  };
  for (int n = 61; n <= 100; ++n) m.push_back("Z/" + std::to_string(n));
  return m;
}

json to_json(const CorpusConfig& c) {
  json gf = json::array();
  for (const auto& [p, k] : c.gf_list) gf.push_back({p, k});
  return {{"zmod_max", c.zmod_max},
          {"gf_list", gf},
          {"product_arity_max", c.product_arity_max},
          {"order_cap", c.order_cap},
          {"sym_members", c.sym_members},
          {"sample_seed", c.sample_seed},
          {"sample_count", c.sample_count}};
}

CorpusConfig config_from_json(const json& j) {
  CorpusConfig c;
  try {
    if (!j.is_object()) throw Error(ErrorCode::kParse, "config must be an object");
    for (const auto& [key, v] : j.items()) {
      if (key == "zmod_max") c.zmod_max = v.get<std::size_t>();
      else if (key == "product_arity_max") c.product_arity_max = v.get<std::size_t>();
      else if (key == "order_cap") c.order_cap = v.get<std::size_t>();
      else if (key == "sample_seed") c.sample_seed = v.get<std::uint64_t>();
      else if (key == "sample_count") c.sample_count = v.get<std::size_t>();
      else if (key == "sym_members") c.sym_members = v.get<std::vector<std::string>>();
      else if (key == "gf_list") {
        c.gf_list.clear();
        for (const json& e : v) c.gf_list.emplace_back(e.at(0).get<unsigned>(), e.at(1).get<unsigned>());
      } else {
        throw Error(ErrorCode::kParse, "unknown config field '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad config: ") + e.what());
  }
  if (c.zmod_max == 0 || c.order_cap == 0 || c.product_arity_max == 0 || c.sample_count == 0)
    throw Error(ErrorCode::kInvalidArgument, "caps must be positive");
  if (c.order_cap > kMaxOrder) throw Error(ErrorCode::kInvalidArgument, "order_cap exceeds 256");
  return c;
}

std::size_t Corpus::finite_count() const {
  std::size_t n = 0;
  for (const CorpusItem& i : items) n += i.finite != nullptr;
  return n;
}

std::vector<std::size_t> ring_fingerprint(const FiniteRing& r) {
  std::size_t units = 0, idem = 0, nil = 0, sqzero = 0, squares = 0, chr = 1;
  ElementSet sq;
  for (std::size_t a = 0; a < r.order(); ++a) {
    const Elem e = Elem(a);
    units += r.is_unit(e);
    idem += r.is_idempotent(e);
    nil += r.is_nilpotent(e);
    sqzero += r.mul(e, e) == r.zero();
    sq.set(r.mul(e, e));
  }
  squares = sq.count();
  for (Elem s = r.one(); s != r.zero(); s = r.add(s, r.one())) ++chr;
  return {r.order(), units, idem, nil, sqzero, squares, chr};
}

namespace {

class Builder {
 public:
  void add(const std::string& expr, RingPtr r) {
    buckets_[ring_fingerprint(*r)].push_back(r);
    out_.items.push_back({expr, std::move(r), nullptr});
  }

  void add_sym(SymPtr r) { out_.items.push_back({r->expr(), nullptr, std::move(r)}); }

  // True when no ring already present is isomorphic to r.
  bool is_new(const RingPtr& r) {
    auto it = buckets_.find(ring_fingerprint(*r));
    if (it == buckets_.end()) return true;
    for (const RingPtr& other : it->second)
      if (find_isomorphism(r, other)) return false;
    return true;
  }

  void skip(const std::string& expr, const std::string& why) { out_.skipped.push_back(expr + ": " + why); }

  Corpus take() { return std::move(out_); }
  const std::vector<CorpusItem>& items() const { return out_.items; }

 private:
  Corpus out_;
  std::map<std::vector<std::size_t>, std::vector<RingPtr>> buckets_;
};

void products(const std::vector<RingPtr>& bases, std::size_t arity, std::size_t start,
              std::vector<RingPtr>& cur, std::size_t order, std::size_t cap, Builder& b) {
  if (cur.size() == arity) {
    RingPtr p = product(cur, cap);
    b.add(p->label(), p);
    return;
  }
  for (std::size_t i = start; i < bases.size(); ++i) {
    if (order * bases[i]->order() > cap) continue;
    cur.push_back(bases[i]);
    products(bases, arity, i, cur, order * bases[i]->order(), cap, b);
    cur.pop_back();
  }
}

}  // namespace

Corpus generate_corpus(const CorpusConfig& c) {
  Builder b;
  std::vector<RingPtr> bases;
  for (std::size_t n = 1; n <= c.zmod_max; ++n) {
    if (n > c.order_cap) {
      b.skip("Z/" + std::to_string(n), "order exceeds the cap");
      continue;
    }
    RingPtr r = make_zmod(n);
    b.add(r->label(), r);
    if (n >= 2) bases.push_back(r);
  }
  for (const auto& [p, k] : c.gf_list) {
    const std::string name = "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
    try {
      RingPtr r = parse_finite_ring(name, c.order_cap);
      b.add(r->label(), r);
      bases.push_back(r);
    } catch (const Error& e) {
      b.skip(name, e.what());
    }
  }
  for (std::size_t arity = 2; arity <= c.product_arity_max; ++arity) {
    std::vector<RingPtr> cur;
    products(bases, arity, 0, cur, 1, c.order_cap, b);
  }
  const std::size_t before = b.items().size();
  for (std::size_t i = 0; i < before; ++i) {
    const RingPtr r = b.items()[i].finite;
    if (r->order() > kDefaultIdealEnumerationBound) continue;
    for (const Ideal& ideal : enumerate_ideals(r)) {
      if (ideal.is_zero_ideal() || ideal.is_unit_ideal()) continue;
      RingPtr q = quotient(ideal).first;
      if (b.is_new(q)) b.add(q->label(), q);
    }
  }
  for (const std::string& e : c.sym_members) {
    try {
      b.add_sym(parse_ring_expr(e));
    } catch (const Error& err) {
      b.skip(e, err.what());
    }
  }
  return b.take();
}

}  // namespace spectra
