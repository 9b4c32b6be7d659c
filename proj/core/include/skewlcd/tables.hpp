// SPDX-License-Identifier: Apache-2.0
//
// Bundled reference data and its verification: the scaled-generator tables
// over GF(16), the Gray-image parameter table over GF(4)+vGF(4), and the
// worked factorization/LCD examples over GF(16) and GF(9). Every row is
// recomputed from scratch and diffed against the stored expectation; these
// checks double as the repository's headline regression test.

#ifndef SKEWLCD_TABLES_HPP
#define SKEWLCD_TABLES_HPP

#include <string>
#include <vector>

namespace skewlcd {

struct RowCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

/// Skew w^5-constacyclic generators of length 4 over GF(16) obtained by
/// scaling the cyclic code <x^2+w*x+w^6> by each [4]-th root of w^5.
std::vector<RowCheck> verify_table1();

/// Skew cyclic generators of length 4 over GF(16) obtained by scaling
/// <x+w^3> by each [4]-th root of 1.
std::vector<RowCheck> verify_table2();

/// Gray-image parameters [2n, k, 2] of six LCD codes over GF(4)+vGF(4),
/// with the [36,33,2] row checked for both recorded generator variants.
std::vector<RowCheck> verify_table3(unsigned threads = 1);

/// The worked examples: two factorizations of x^4-1 over GF(16), four of
/// x^10-1 and four of x^10+1 over GF(9), the four LCD verdicts over
/// GF(9)+vGF(9), and the [36,33,2] quasi-cyclic example over GF(4)+vGF(4).
std::vector<RowCheck> verify_examples(unsigned threads = 1);

bool all_pass(const std::vector<RowCheck>& rows);

}  // namespace skewlcd

#endif  // SKEWLCD_TABLES_HPP
