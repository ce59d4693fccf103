// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

// Ring expressions:
//
//   expr    := factor ('x' factor)*
//   factor  := 'Z' ['/' int] | 'GF(' int ['^' int] ')' | 'F' int '[x]' ['/(' poly ')']
//            | 'loc(' expr ',(' element '))' | 'quot(' expr (',' element)* ')'
//            | '(' expr ')'
//
// Whitespace is ignored. Finite constructions stay symbolic where a catalog
// constructor exists (Z/n, F_q[x]/(m), products); GF(q) and quot(...) are
// tabulated.

#ifndef SPECTRA_PARSER_HPP
#define SPECTRA_PARSER_HPP

#include <string>

#include "spectra/sym_ring.hpp"

namespace spectra {

/// Throws ParseError on syntax errors and Error(kSemantic) on well-formed
/// input that names no ring, e.g. a localization at a non-prime.
SymPtr parse_ring_expr(const std::string& text);

/// parse_ring_expr followed by to_finite.
RingPtr parse_finite_ring(const std::string& text, std::size_t cap = kDefaultOrderCap);

}  // namespace spectra

#endif  // SPECTRA_PARSER_HPP
