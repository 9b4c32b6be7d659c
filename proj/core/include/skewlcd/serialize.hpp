// SPDX-License-Identifier: Apache-2.0
//
// JSON renderings of codes and census reports. The API speaks strings so
// the JSON implementation stays private to the library.

#ifndef SKEWLCD_SERIALIZE_HPP
#define SKEWLCD_SERIALIZE_HPP

#include <optional>
#include <string>

#include "skewlcd/census.hpp"
#include "skewlcd/ring.hpp"

namespace skewlcd {

/// {field, n, lambda, generator, G, k, lcd:{euclidean, hermitian}, d_bounded}
std::string code_json(const SkewConstaCode& code, uint32_t w_max = 4, unsigned threads = 1);

/// Codes schema extended with {alpha, beta, g1, g2, gray:{params, lcd}}.
std::string r_code_json(const RSkewCode& code, uint32_t w_max = 4, unsigned threads = 1);

/// {p, n, s, t, variant, formula_count, oracle_count?, factor_classes:{F_ir, F_red}}
std::string census_report_json(uint32_t p, uint32_t n, const std::string& variant_name,
                               const BigCount& formula, const std::optional<BigCount>& oracle,
                               const std::vector<FactorClasses>& classes);

}  // namespace skewlcd

#endif  // SKEWLCD_SERIALIZE_HPP
