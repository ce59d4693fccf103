// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include "spectra/spectra.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "spectra/certificate.hpp"
#include "spectra/corpus.hpp"
#include "spectra/error.hpp"
#include "spectra/ideal_lattice.hpp"
#include "spectra/parser.hpp"
#include "spectra/pointwise.hpp"
#include "spectra/sym_ring.hpp"
#include "spectra/theorems.hpp"
#include "spectra/topology.hpp"

struct spectra_ring {
  spectra::SymPtr sym;
  spectra::RingPtr finite;  // set when the ring tabulates
};

namespace {

using nlohmann::json;
using namespace spectra;

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
spectra_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return SPECTRA_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<spectra_status>(static_cast<int>(e.code()));
  } catch (const json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return SPECTRA_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SPECTRA_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SPECTRA_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::kInvalidArgument, what);
}

json names(const FiniteRing& r, const std::vector<Elem>& xs) {
  json out = json::array();
  for (Elem x : xs) out.push_back(r.name(x));
  return out;
}

// Splits at separators outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

SpecTopology topology_arg(const char* name) {
  require(name != nullptr, "topology is required");
  const auto t = parse_spec_topology(name);
  if (!t) throw Error(ErrorCode::kInvalidArgument, std::string("unknown topology '") + name + "'");
  return *t;
}

// Follows a counterexample payload down to the offending element.
std::string flat_witness(const SymPtr& r, const json& payload) {
  if (payload.value("method", "") == "component") {
    const std::size_t i = payload.at("index").get<std::size_t>();
    return "component " + std::to_string(i) + ": " + flat_witness(r->factors().at(i), payload.at("inner"));
  }
  if (payload.contains("element")) {
    if (r->kind() == SymKind::kLifted) return r->finite()->name(payload.at("element").get<Elem>());
    return to_string(*r, element_from_json(*r, payload.at("element")));
  }
  return payload.dump();
}

json finite_info(const spectra_ring& h) {
  const FiniteRing& r = *h.finite;
  std::size_t units = 0;
  for (std::size_t a = 0; a < r.order(); ++a) units += r.is_unit(Elem(a));
  const Ideal nil = nilradical(h.finite);
  const Ideal jac = jacobson_radical(h.finite);
  const AbsoluteFlatness af = is_absolutely_flat(r);
  json j = {{"ring", h.sym->expr()},
            {"engine", "finite"},
            {"order", r.order()},
            {"units", units},
            {"idempotents", names(r, idempotents(r))},
            {"nilradical", nil.to_string()},
            {"nilradical_elements", names(r, nil.elements())},
            {"jacobson_radical", jac.to_string()},
            {"jacobson_radical_elements", names(r, jac.elements())},
            {"absolutely_flat", af.flat}};
  if (af.counterexample)
    j["witness"] = r.name(*af.counterexample);
  else
    j["witness"] = nullptr;
  return j;
}

json symbolic_info(const SymPtr& r) {
  const SymVerdict flat = is_absolutely_flat_sym(r);
  const auto order = r->order();
  json j = {{"ring", r->expr()},
            {"engine", "symbolic"},
            {"order", order ? json(*order) : json("infinite")},
            {"nilradical", nilradical_sym(r).to_string()},
            {"jacobson_radical", jacobson_radical_sym(r).to_string()},
            {"absolutely_flat", flat.value},
            {"certificate", to_json(flat.certificate)}};
  j["witness"] = flat.value ? json(nullptr) : json(flat_witness(r, flat.certificate.payload));
  return j;
}

json point_set(const std::vector<std::string>& pts, PointSet s) {
  json out = json::array();
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (has_point(s, i)) out.push_back(pts[i]);
  return out;
}

json prime_names(const std::vector<SymPrime>& ps) {
  json out = json::array();
  for (const SymPrime& p : ps) out.push_back(p.to_string());
  return out;
}

json describe(const SpectrumDescriptor& d) {
  json fams = json::array();
  for (const PrimeFamily& f : d.families) fams.push_back({{"description", f.description}, {"finite", f.finite}});
  return {{"explicit", prime_names(d.explicit_primes)}, {"families", fams}, {"finite", d.finite()}};
}

std::vector<SymPrime> parse_primes(const SymPtr& r, const char* text) {
  require(text != nullptr, "prime set is required");
  std::vector<SymPrime> out;
  for (const std::string& part : split_top(text, ';')) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_prime(r, part));
  }
  return out;
}

}  // namespace

extern "C" {

const char* spectra_version(void) { return "1.0.0"; }

const char* spectra_last_error(void) { return last_error.c_str(); }

void spectra_string_free(char* s) { std::free(s); }

const char* spectra_theorem_ids(void) {
  static const std::string ids = [] {
    std::string s;
    for (const std::string& id : theorem_ids()) s += (s.empty() ? "" : ",") + id;
    return s;
  }();
  return ids.c_str();
}

spectra_status spectra_ring_parse(const char* expr, spectra_ring** out) {
  return guard([&] {
    require(expr != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    auto h = std::make_unique<spectra_ring>();
    h->sym = parse_ring_expr(expr);
    const auto order = h->sym->order();
    if (order && *order <= kMaxOrder) h->finite = to_finite(*h->sym);
    *out = h.release();
  });
}

void spectra_ring_free(spectra_ring* r) { delete r; }

const char* spectra_ring_expr(const spectra_ring* r) { return r ? r->sym->expr().c_str() : ""; }

int spectra_ring_is_finite(const spectra_ring* r) { return r && r->finite ? 1 : 0; }

spectra_status spectra_ring_info_json(const spectra_ring* r, char** out) {
  return guard([&] {
    require(r != nullptr && out != nullptr, "null argument");
    *out = dup((r->finite ? finite_info(*r) : symbolic_info(r->sym)).dump());
  });
}

spectra_status spectra_spec_json(const spectra_ring* r, const char* topology, char** out) {
  return guard([&] {
    require(r != nullptr && out != nullptr, "null argument");
    const SpecTopology kind = topology_arg(topology);
    json j = {{"ring", r->sym->expr()}, {"topology", to_string(kind)}};
    if (r->finite) {
      const SpecSet s = spec(r->finite, kMaxOrder);
      const FiniteTopology t = spec_topology(s, kind);
      json opens = json::array();
      for (PointSet o : t.opens()) opens.push_back(point_set(t.points(), o));
      j["engine"] = "finite";
      j["points"] = t.points();
      j["opens_count"] = t.opens().size();
      j["opens"] = opens;
      j["hausdorff"] = is_hausdorff(t);
      j["totally_disconnected"] = is_totally_disconnected(t);
    } else {
      const SpectrumDescriptor d = spectrum(r->sym);
      j["engine"] = "symbolic";
      j["spectrum"] = describe(d);
      j["sample"] = prime_names(d.sample(5));
      j["minimal"] = prime_names(min_primes(r->sym));
      const SpectrumDescriptor mx = max_spectrum(r->sym);
      j["maximal"] = describe(mx);
    }
    *out = dup(j.dump());
  });
}

spectra_status spectra_localize_json(const spectra_ring* r, const char* elements, char** out) {
  return guard([&] {
    require(r != nullptr && out != nullptr && elements != nullptr, "null argument");
    if (!r->finite)
      throw Error(ErrorCode::kInvalidArgument, "pointwise localization needs a finite ring, got " + r->sym->expr());
    auto run = [&]() {
      if (std::string(elements) == "all") return full_pointwise_localize(r->finite, kMaxOrder);
      std::vector<Elem> s;
      for (const std::string& part : split_top(elements, ','))
        s.push_back(lift_element(*r->sym, parse_element(*r->sym, part)));
      return pointwise_localize(r->finite, s, kMaxOrder);
    };
    const PointwiseLocalization l = run();
    const FiniteRing& src = *r->finite;
    const FiniteRing& dst = *l.result;
    json qi = json::array();
    for (const auto& [s, x] : l.quasi_inverses) qi.push_back({src.name(s), dst.name(x)});
    json eta = json::array();
    for (Elem v : l.eta.table()) eta.push_back(dst.name(v));
    json j = {{"ring", r->sym->expr()},
              {"subset", names(src, l.subset)},
              {"result", dst.label()},
              {"result_order", dst.order()},
              {"eta", eta},
              {"quasi_inverses", qi},
              {"relations_hold", l.relations_hold},
              {"spec_bijective", l.spec_bijective},
              {"kernel_in_nilradical", l.kernel_in_nilradical},
              {"kernel_is_nilradical", l.kernel_is_nilradical},
              {"result_absolutely_flat", is_absolutely_flat(dst).flat}};
    *out = dup(j.dump());
  });
}

spectra_status spectra_closure_json(const spectra_ring* r, const char* primes, const char* topology,
                                    char** out) {
  return guard([&] {
    require(r != nullptr && out != nullptr, "null argument");
    const SpecTopology kind = topology_arg(topology);
    const std::vector<SymPrime> e = parse_primes(r->sym, primes);
    json j = {{"ring", r->sym->expr()}, {"topology", to_string(kind)}, {"set", prime_names(e)}};
    if (r->finite) {
      const SpecSet s = spec(r->finite, kMaxOrder);
      PointSet in = 0;
      for (const SymPrime& p : e) {
        const std::size_t i = s.index_of(lift_prime(p));
        require(i < s.size(), "prime missing from the spectrum");
        in |= singleton(i);
      }
      const FiniteTopology t = spec_topology(s, kind);
      j["engine"] = "finite";
      j["closure"] = point_set(t.points(), closure(t, in));
    } else {
      j["engine"] = "symbolic";
      json cl = json::array();
      switch (kind) {
        case SpecTopology::kFlat: {
          // Union of the flat point closures, each finite.
          std::vector<std::string> seen;
          for (const SymPrime& p : e)
            for (const SymPrime& q : flat_closure_point(p)) {
              const std::string n = q.to_string();
              if (std::find(seen.begin(), seen.end(), n) == seen.end()) seen.push_back(n);
            }
          cl = seen;
          break;
        }
        case SpecTopology::kZariski: {
          json parts = json::array();
          bool finite = true;
          for (const SymPrime& p : e) {
            if (is_maximal(p)) {
              parts.push_back(p.to_string());
            } else {
              finite = false;
              parts.push_back("V" + p.to_string());
            }
          }
          cl = parts;
          j["closure_finite"] = finite;
          if (!finite) {
            json sample = json::array();
            for (const SymPrime& q : spectrum(r->sym).sample(5))
              for (const SymPrime& p : e)
                if (prime_subset(p, q)) {
                  sample.push_back(q.to_string());
                  break;
                }
            j["sample"] = sample;
          }
          break;
        }
        case SpecTopology::kPatch: {
          const TheoremVerdict v = check_patch_closure(r->sym, e);
          cl = prime_names(e);
          j["verdict"] = v.to_json();
          break;
        }
      }
      j["closure"] = cl;
    }
    *out = dup(j.dump());
  });
}

spectra_status spectra_verify(const char* theorem, const char* config_json, uint64_t seed, int has_seed,
                              unsigned jobs, char** report, int* all_agree) {
  if (theorem && std::string(theorem) != "all" && !is_theorem_id(theorem)) {
    last_error = std::string("unknown theorem id '") + theorem + "'";
    return SPECTRA_UNKNOWN_THEOREM;
  }
  return guard([&] {
    require(theorem != nullptr && report != nullptr && all_agree != nullptr, "null argument");
    *report = nullptr;
    *all_agree = 0;
    const std::string id = theorem;
    CorpusConfig config = config_json ? config_from_json(json::parse(config_json)) : CorpusConfig{};
    if (has_seed) config.sample_seed = seed;
    const Corpus corpus = generate_corpus(config);
    const auto verdicts = run_suite(corpus, config, {id, jobs == 0 ? 1 : jobs});
    std::string text;
    bool agree = true;
    for (const TheoremVerdict& v : verdicts) {
      text += v.to_json().dump();
      text += '\n';
      agree = agree && v.agree;
    }
    *report = dup(text);
    *all_agree = agree ? 1 : 0;
  });
}

spectra_status spectra_recheck(const char* report, char** summary, int* ok) {
  return guard([&] {
    require(report != nullptr && summary != nullptr && ok != nullptr, "null argument");
    std::istringstream in(report);
    std::string line;
    std::size_t lineno = 0, verdicts = 0, certs = 0, disagree = 0;
    json failures = json::array();
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      ++verdicts;
      json v;
      try {
        v = json::parse(line);
      } catch (const json::exception& e) {
        failures.push_back({{"line", lineno}, {"reason", std::string("not JSON: ") + e.what()}});
        continue;
      }
      if (const auto bad = validate_verdict_json(v)) {
        failures.push_back({{"line", lineno}, {"reason", *bad}});
        continue;
      }
      if (!v.at("agree").get<bool>()) ++disagree;
      for (const json& w : v.at("witnesses")) {
        ++certs;
        CheckResult res;
        try {
          res = verify_certificate(certificate_from_json(w));
        } catch (const std::exception& e) {
          res = {false, e.what()};
        }
        if (!res.ok) failures.push_back({{"line", lineno}, {"reason", res.reason}});
      }
    }
    const json s = {{"verdicts", verdicts},
                    {"certificates", certs},
                    {"disagreeing_verdicts", disagree},
                    {"failures", failures}};
    *summary = dup(s.dump());
    *ok = failures.empty() ? 1 : 0;
  });
}

spectra_status spectra_verify_certificate(const char* certificate_json, int* ok, char** reason) {
  return guard([&] {
    require(certificate_json != nullptr && ok != nullptr, "null argument");
    const CheckResult res = verify_certificate(certificate_from_json(json::parse(certificate_json)));
    *ok = res.ok ? 1 : 0;
    if (reason) *reason = dup(res.reason);
  });
}

spectra_status spectra_default_config_json(char** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    *out = dup(to_json(CorpusConfig{}).dump(2));
  });
}

}  // extern "C"
