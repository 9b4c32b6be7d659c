// SPDX-License-Identifier: Apache-2.0
//
// Enumeration of skew LCD constacyclic codes over F_{p^2} and over
// F_{p^2} + v F_{p^2}, theta the Frobenius a -> a^p, length n = 2k with
// k = p^s * t (p not dividing t), dimension k.
//
// The closed-form counts combine case-table prefactors N_1..N_4 with
// products over the factor classes of y^k -/+ 1 in F_p[y], y = x^2:
// self-reciprocal irreducible factors of y-degree > 1 (F_ir) and
// reciprocal pairs f * f-reciprocal (F_red). The `d` in the product
// factors is the degree in y. In characteristic 2 the negacyclic counts
// coincide with the cyclic ones (x^n + 1 = x^n - 1). A brute-force scan
// over monic generators validates every formula at desk scale.

#ifndef SKEWLCD_CENSUS_HPP
#define SKEWLCD_CENSUS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "skewlcd/codes.hpp"

namespace skewlcd {

using BigCount = boost::multiprecision::cpp_int;

enum class CensusVariant {
    euclidean_cyclic,
    hermitian_cyclic,
    euclidean_negacyclic,
    hermitian_negacyclic,
};

enum class RingLambda { one, minus_one, one_minus_two_v };

inline Inner variant_inner(CensusVariant v) {
    return (v == CensusVariant::hermitian_cyclic || v == CensusVariant::hermitian_negacyclic)
               ? Inner::hermitian
               : Inner::euclidean;
}
inline bool variant_negacyclic(CensusVariant v) {
    return v == CensusVariant::euclidean_negacyclic || v == CensusVariant::hermitian_negacyclic;
}

/// Complete commutative factorization of a monic polynomial over a prime
/// field by trial division against ascending-degree monic candidates.
std::vector<std::pair<SkewPoly, uint32_t>> factor_over_prime_field(const SkewPoly& f);

/// Monic-normalized reciprocal y^deg(f) * f(1/y); requires f(0) != 0.
SkewPoly reciprocal_monic(const SkewPoly& f);

/// Length parameters n = 2k, k = p^s * t_odd with p not dividing t_odd.
struct CensusInput {
    uint32_t p = 0;
    uint32_t n = 0;
    uint32_t k = 0;
    uint32_t s = 0;
    uint32_t t_odd = 0;

    static CensusInput derive(uint32_t p, uint32_t n);
};

/// Classified irreducible factors of y^k -/+ 1 over F_p (y = x^2); every
/// distinct factor carries multiplicity p^s in the full factorization.
struct FactorClasses {
    uint32_t p = 0;
    bool plus_modulus = false;  // true for y^k + 1
    uint32_t k = 0;
    uint32_t s = 0;
    uint32_t t_odd = 0;
    uint64_t multiplicity = 1;  // p^s
    std::vector<SkewPoly> linear_self_reciprocal;          // y -/+ 1
    std::vector<SkewPoly> self_reciprocal_irreducible;     // F_ir: deg_y > 1
    std::vector<std::pair<SkewPoly, SkewPoly>> reciprocal_pairs;  // F_red halves

    /// Product of all classified factors raised to the multiplicity;
    /// must reconstruct y^k -/+ 1 exactly.
    SkewPoly reconstruct() const;
};

FactorClasses factor_classes(uint32_t p, uint32_t k, bool plus_modulus);

/// Case-table prefactor N_1..N_4 (1-based index matching the four variants).
BigCount census_base_prefactor(uint32_t which, uint32_t p, uint32_t k, uint32_t s);

/// Closed-form count of skew LCD theta-constacyclic codes of length n and
/// dimension n/2 over F_{p^2} whose generator has no central divisor.
BigCount base_count(uint32_t p, uint32_t n, CensusVariant variant);

/// The six closed-form counts over F_{p^2} + v F_{p^2} for
/// lambda in {1, -1, 1-2v}; lambda = 1-2v requires odd characteristic.
BigCount r_count(uint32_t p, uint32_t n, RingLambda lambda, Inner inner);

/// The bundled F_{p^2} used by the census (theta: a -> a^p).
FieldPtr census_field(uint32_t p);

/// Independent oracle: exhaustively scans the q^k monic degree-k skew
/// polynomials over F_{p^2}, keeping right divisors of x^n -/+ 1 with no
/// central divisor that pass the gcrd LCD criterion.
uint64_t brute_force_census(uint32_t p, uint32_t n, CensusVariant variant,
                            uint64_t budget = 1'000'000, unsigned threads = 1);

/// R-level oracle: product of the two component counts.
BigCount brute_force_r_census(uint32_t p, uint32_t n, RingLambda lambda, Inner inner,
                              uint64_t budget = 1'000'000, unsigned threads = 1);

}  // namespace skewlcd

#endif  // SKEWLCD_CENSUS_HPP
