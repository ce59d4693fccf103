// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#include "spectra/parser.hpp"

#include <cctype>

#include "spectra/error.hpp"
#include "spectra/ideal_lattice.hpp"
#include "spectra/number_theory.hpp"

namespace spectra {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        s_ += text[i];
        at_.push_back(i);
      }
    at_.push_back(text.size());
  }

  SymPtr parse() {
    if (s_.empty()) fail("ring expression", "empty input");
    SymPtr r = expr();
    if (i_ != s_.size()) fail("end of input or 'x'", "unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& expected, const std::string& what) const {
    throw ParseError(at_[std::min(i_, s_.size())], expected, what);
  }

  bool peek(const std::string& tok) const { return s_.compare(i_, tok.size(), tok) == 0; }

  void expect(const std::string& tok) {
    if (!peek(tok)) fail("'" + tok + "'", i_ < s_.size() ? "unexpected '" + std::string(1, s_[i_]) + "'" : "unexpected end of input");
    i_ += tok.size();
  }

  mpz_class integer() {
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == start) fail("integer", i_ < s_.size() ? "unexpected '" + std::string(1, s_[i_]) + "'" : "unexpected end of input");
    return mpz_class(s_.substr(start, i_ - start));
  }

  unsigned small(const mpz_class& n, const char* what) {
    if (n > 1000000) throw Error(ErrorCode::kSemantic, std::string(what) + " " + n.get_str() + " is too large");
    return static_cast<unsigned>(n.get_ui());
  }

  // Text up to the matching close paren; the cursor is left on it.
  std::string balanced_until(char stop) {
    const std::size_t start = i_;
    int depth = 0;
    while (i_ < s_.size()) {
      const char c = s_[i_];
      if (depth == 0 && (c == stop || (stop == ')' && c == ','))) break;
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++i_;
    }
    if (i_ == s_.size()) fail(std::string("'") + stop + "'", "unbalanced parentheses");
    return s_.substr(start, i_ - start);
  }

  SymPtr expr() {
    std::vector<SymPtr> fs;
    fs.push_back(factor());
    while (i_ < s_.size() && s_[i_] == 'x') {
      ++i_;
      fs.push_back(factor());
    }
    if (fs.size() == 1) return fs[0];
    // A parenthesized finite product stays one factor.
    for (auto& f : fs)
      if (f->kind() == SymKind::kProduct && f->order()) f = SymRing::lifted(to_finite(*f));
    try {
      return SymRing::product(fs);
    } catch (const Error& e) {
      throw Error(ErrorCode::kSemantic, e.what());
    }
  }

  SymPtr factor() {
    const std::size_t start = i_;
    try {
      if (peek("loc(")) return localization();
      if (peek("quot(")) return quotient_expr();
      if (peek("GF(")) return galois();
      if (peek("(")) {
        ++i_;
        SymPtr r = expr();
        expect(")");
        return r;
      }
      if (peek("Z")) {
        ++i_;
        if (i_ < s_.size() && s_[i_] == '/') {
          ++i_;
          const mpz_class n = integer();
          if (n == 0) throw Error(ErrorCode::kSemantic, "Z/0 is written Z");
          return SymRing::quot_z(n);
        }
        return SymRing::integers();
      }
      if (peek("F")) return polynomial();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kSemantic) throw;
      throw Error(ErrorCode::kSemantic, std::string(e.what()) + " (at position " +
                                            std::to_string(at_[std::min(start, s_.size())]) + ")");
    }
    fail("'Z', 'GF(', 'F', 'loc(', 'quot(' or '('",
         i_ < s_.size() ? "unexpected '" + std::string(1, s_[i_]) + "'" : "unexpected end of input");
  }

  SymPtr galois() {
    expect("GF(");
    const unsigned a = small(integer(), "field order");
    unsigned p = a, k = 1;
    if (i_ < s_.size() && s_[i_] == '^') {
      ++i_;
      k = small(integer(), "exponent");
    } else {
      p = 0;
      for (unsigned d = 2; d <= a && p == 0; ++d)
        if (a % d == 0) p = d;
      if (p == 0) throw Error(ErrorCode::kSemantic, "GF(" + std::to_string(a) + ") is not a field");
      for (unsigned m = a / p; m > 1; m /= p) {
        if (m % p) throw Error(ErrorCode::kSemantic, std::to_string(a) + " is not a prime power");
        ++k;
      }
    }
    expect(")");
    if (p < 2 || k == 0 || !is_prime_trial(p))
      throw Error(ErrorCode::kSemantic, "GF(" + std::to_string(p) + "^" + std::to_string(k) + "): not prime");
    RingPtr f = make_gf(p, k);
    return SymRing::lifted(f);
  }

  SymPtr polynomial() {
    expect("F");
    const unsigned q = small(integer(), "field order");
    expect("[x]");
    SymPtr base = SymRing::poly(q);
    if (i_ < s_.size() && s_[i_] == '/') {
      ++i_;
      expect("(");
      const std::size_t at = i_;
      const std::string text = balanced_until(')');
      expect(")");
      FqPoly m;
      try {
        m = parse_poly(base->field(), text);
      } catch (const Error& e) {
        throw ParseError(at_[at], "polynomial in x", e.what());
      }
      if (m.is_zero()) throw Error(ErrorCode::kSemantic, "quotient by the zero polynomial is written " + base->expr());
      return SymRing::quot_poly(m);
    }
    return base;
  }

  SymElem element(const SymRing& r) {
    const std::size_t at = i_;
    const std::string text = balanced_until(')');
    try {
      return parse_element(r, text);
    } catch (const Error& e) {
      throw ParseError(at_[at], "element of " + r.expr(), e.what());
    }
  }

  SymPtr localization() {
    expect("loc(");
    SymPtr base = expr();
    expect(",");
    expect("(");
    const SymElem g = element(*base);
    expect(")");
    expect(")");
    try {
      return SymRing::localize(base, g);
    } catch (const Error& e) {
      throw Error(ErrorCode::kSemantic, std::string("loc: ") + e.what());
    }
  }

  SymPtr quotient_expr() {
    expect("quot(");
    SymPtr base = expr();
    // Plain integers are indices into the tabulated ring.
    std::vector<std::pair<std::size_t, std::string>> gens;
    while (i_ < s_.size() && s_[i_] == ',') {
      ++i_;
      const std::size_t at = i_;
      gens.emplace_back(at, balanced_until(')'));
    }
    expect(")");
    if (!base->order())
      throw Error(ErrorCode::kSemantic, "quot needs a finite ring, got " + base->expr());
    const RingPtr f = to_finite(*base);
    std::vector<Elem> idx;
    for (const auto& [at, text] : gens) {
      const bool index = !text.empty() && text.find_first_not_of("0123456789") == std::string::npos;
      if (index && mpz_class(text) < static_cast<unsigned long>(f->order())) {
        idx.push_back(Elem(std::stoul(text)));
        continue;
      }
      try {
        idx.push_back(lift_element(*base, parse_element(*base, text)));
      } catch (const Error& e) {
        throw ParseError(at_[at], "element of " + base->expr(), e.what());
      }
    }
    return SymRing::lifted(quotient(ideal_generated(f, idx)).first);
  }

  std::string s_;
  std::vector<std::size_t> at_;
  std::size_t i_ = 0;
};

}  // namespace

SymPtr parse_ring_expr(const std::string& text) { return Parser(text).parse(); }

RingPtr parse_finite_ring(const std::string& text, std::size_t cap) {
  SymPtr r = parse_ring_expr(text);
  if (!r->order()) throw Error(ErrorCode::kSemantic, r->expr() + " is infinite");
  return to_finite(*r, cap);
}

}  // namespace spectra
