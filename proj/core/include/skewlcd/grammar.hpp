// SPDX-License-Identifier: Apache-2.0
//
// Text grammars for the library's external surfaces:
//   field spec   "GF(p^t; m0,m1,...,mt)"  (modulus optional: "GF(p^t)", "GF(p)")
//   element      "w^k", "0", "1", "c0+c1*w+..."
//   polynomial   "+"-separated terms "c*x^j", any order, emitted descending
//   ring element "a+v*b" with a, b in element grammar (parenthesized when compound)

#ifndef SKEWLCD_GRAMMAR_HPP
#define SKEWLCD_GRAMMAR_HPP

#include <string>

#include "skewlcd/field.hpp"
#include "skewlcd/ring.hpp"
#include "skewlcd/skew_poly.hpp"

namespace skewlcd {

FieldPtr parse_field(const std::string& spec);
std::string field_spec(const Field& field);

FieldElement parse_element(const FieldPtr& field, const std::string& text);

SkewPoly parse_poly(const FieldPtr& field, uint32_t r, const std::string& text);
std::string poly_str(const SkewPoly& f);

RingElement parse_ring_element(const FieldPtr& field, const std::string& text);
std::string ring_element_str(const RingElement& x);

}  // namespace skewlcd

#endif  // SKEWLCD_GRAMMAR_HPP
