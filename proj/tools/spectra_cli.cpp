// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

// Command line front end. Talks to the library only through spectra.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "spectra/spectra.h"

namespace {

using nlohmann::json;

constexpr int kAgree = 0;
constexpr int kDisagree = 1;
constexpr int kUsage = 2;
constexpr int kFailure = 3;

// Owns a string returned by the library.
struct Owned {
  char* p = nullptr;
  ~Owned() { spectra_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Ring {
  spectra_ring* h = nullptr;
  ~Ring() { spectra_ring_free(h); }
};

int report_error(spectra_status s) {
  std::cerr << "error: " << spectra_last_error() << "\n";
  switch (s) {
    case SPECTRA_PARSE:
    case SPECTRA_SEMANTIC:
    case SPECTRA_INVALID_ARGUMENT:
    case SPECTRA_UNKNOWN_THEOREM:
    case SPECTRA_NOT_PRIME:
    case SPECTRA_NOT_IDEAL:
      return kUsage;
    default:
      return kFailure;
  }
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

std::string join(const json& arr) {
  std::string out;
  for (const json& x : arr) out += (out.empty() ? "" : ", ") + (x.is_string() ? x.get<std::string>() : x.dump());
  return out;
}

void print_info(const json& j) {
  std::cout << "ring: " << j["ring"].get<std::string>() << "\n";
  std::cout << "order: " << (j["order"].is_string() ? j["order"].get<std::string>() : j["order"].dump()) << "\n";
  if (j.contains("units")) std::cout << "units: " << j["units"] << "\n";
  if (j.contains("idempotents")) std::cout << "idempotents: " << join(j["idempotents"]) << "\n";
  std::cout << "nilradical: " << j["nilradical"].get<std::string>() << "\n";
  std::cout << "jacobson radical: " << j["jacobson_radical"].get<std::string>() << "\n";
  std::cout << "absolutely flat: " << (j["absolutely_flat"].get<bool>() ? "true" : "false");
  if (!j["witness"].is_null()) std::cout << ", witness " << j["witness"].get<std::string>();
  std::cout << "\n";
}

void print_spec(const json& j) {
  std::cout << "ring: " << j["ring"].get<std::string>() << "\n";
  std::cout << "topology: " << j["topology"].get<std::string>() << "\n";
  if (j["engine"] == "finite") {
    std::cout << j["points"].size() << " points, " << j["opens_count"] << " opens\n";
    std::cout << "points: " << join(j["points"]) << "\n";
    std::cout << "hausdorff: " << j["hausdorff"] << ", totally disconnected: " << j["totally_disconnected"] << "\n";
    return;
  }
  const json& sp = j["spectrum"];
  std::cout << "spectrum: " << (sp["finite"].get<bool>() ? "finite" : "infinite") << "\n";
  if (!sp["explicit"].empty()) std::cout << "explicit primes: " << join(sp["explicit"]) << "\n";
  for (const json& f : sp["families"]) std::cout << "family: " << f["description"].get<std::string>() << "\n";
  std::cout << "minimal: " << join(j["minimal"]) << "\n";
  std::cout << "sample: " << join(j["sample"]) << "\n";
}

void print_localize(const json& j) {
  std::cout << "ring: " << j["ring"].get<std::string>() << "\n";
  std::cout << "S: " << join(j["subset"]) << "\n";
  std::cout << "result: " << j["result"].get<std::string>() << " (order " << j["result_order"] << ")\n";
  for (const json& q : j["quasi_inverses"])
    std::cout << "  quasi-inverse of " << q[0].get<std::string>() << ": " << q[1].get<std::string>() << "\n";
  std::cout << "relations hold: " << j["relations_hold"] << "\n";
  std::cout << "spec bijective: " << j["spec_bijective"] << "\n";
  std::cout << "kernel in nilradical: " << j["kernel_in_nilradical"] << "\n";
  std::cout << "kernel is nilradical: " << j["kernel_is_nilradical"] << "\n";
  std::cout << "result absolutely flat: " << j["result_absolutely_flat"] << "\n";
}

void print_closure(const json& j) {
  std::cout << "ring: " << j["ring"].get<std::string>() << "\n";
  std::cout << "set: " << join(j["set"]) << "\n";
  std::cout << "closure (" << j["topology"].get<std::string>() << "): " << join(j["closure"]) << "\n";
  if (j.contains("sample")) std::cout << "sampled members: " << join(j["sample"]) << "\n";
  if (j.contains("verdict")) std::cout << "patch closure check agrees: " << j["verdict"]["agree"] << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of finite and catalog commutative rings"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print raw JSON");

  std::string expr, topology = "zariski", at, set;
  auto* ring = app.add_subcommand("ring", "Ring queries");
  ring->require_subcommand(1);
  auto* info = ring->add_subcommand("info", "Order, units, idempotents, radicals, absolute flatness");
  info->add_option("expr", expr, "Ring expression")->required();

  auto* spec = app.add_subcommand("spec", "Prime spectrum with a topology");
  spec->add_option("expr", expr, "Ring expression")->required();
  spec->add_option("--topology", topology, "zariski, flat or patch")
      ->check(CLI::IsMember({"zariski", "flat", "patch"}));

  auto* localize = app.add_subcommand("localize", "Pointwise localization");
  localize->add_option("expr", expr, "Ring expression")->required();
  localize->add_option("--at", at, "Comma separated elements, or 'all'")->required();

  auto* closure = app.add_subcommand("closure", "Closure of a finite set of primes");
  closure->add_option("expr", expr, "Ring expression")->required();
  closure->add_option("--set", set, "Primes as \"(g1);(g2)\"")->required();
  closure->add_option("--topology", topology, "zariski, flat or patch")
      ->check(CLI::IsMember({"zariski", "flat", "patch"}));

  std::string theorem = "all", corpus_file, recheck_file, out_file;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "Run the theorem suite; JSON lines on stdout");
  verify->add_option("--theorem", theorem, std::string("Theorem id or 'all': ") + spectra_theorem_ids());
  verify->add_option("--corpus", corpus_file, "Corpus configuration file (JSON)");
  auto* seed_opt = verify->add_option("--seed", seed, "Sampling seed");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--output", out_file, "Write the report here instead of stdout");
  verify->add_option("--recheck", recheck_file, "Re-verify an existing report instead of running");

  auto* config = app.add_subcommand("config", "Print the default corpus configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  if (*config) {
    Owned out;
    if (auto s = spectra_default_config_json(&out.p)) return report_error(s);
    std::cout << out.str() << "\n";
    return kAgree;
  }

  if (*verify) {
    if (!recheck_file.empty()) {
      std::string text;
      if (!read_file(recheck_file, text)) return kUsage;
      Owned summary;
      int ok = 0;
      if (auto s = spectra_recheck(text.c_str(), &summary.p, &ok)) return report_error(s);
      const json j = json::parse(summary.str());
      std::cout << summary.str() << "\n";
      if (!ok) return kDisagree;
      return j["disagreeing_verdicts"].get<std::size_t>() == 0 ? kAgree : kDisagree;
    }
    std::string cfg;
    if (!corpus_file.empty() && !read_file(corpus_file, cfg)) return kUsage;
    Owned report;
    int agree = 0;
    const spectra_status s = spectra_verify(theorem.c_str(), corpus_file.empty() ? nullptr : cfg.c_str(), seed,
                                            seed_opt->count() > 0, jobs, &report.p, &agree);
    if (s) return report_error(s);
    if (out_file.empty()) {
      std::fwrite(report.p, 1, report.str().size(), stdout);
    } else {
      std::ofstream out(out_file, std::ios::binary);
      out << report.str();
      if (!out) {
        std::cerr << "error: cannot write " << out_file << "\n";
        return kFailure;
      }
    }
    return agree ? kAgree : kDisagree;
  }

  Ring r;
  if (auto s = spectra_ring_parse(expr.c_str(), &r.h)) return report_error(s);
  Owned out;
  spectra_status s = SPECTRA_OK;
  void (*print)(const json&) = nullptr;
  if (*ring) {
    s = spectra_ring_info_json(r.h, &out.p);
    print = print_info;
  } else if (*spec) {
    s = spectra_spec_json(r.h, topology.c_str(), &out.p);
    print = print_spec;
  } else if (*localize) {
    s = spectra_localize_json(r.h, at.c_str(), &out.p);
    print = print_localize;
  } else {
    s = spectra_closure_json(r.h, set.c_str(), topology.c_str(), &out.p);
    print = print_closure;
  }
  if (s) return report_error(s);
  if (as_json)
    std::cout << out.str() << "\n";
  else
    print(json::parse(out.str()));
  return kAgree;
}
