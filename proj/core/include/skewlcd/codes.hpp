// SPDX-License-Identifier: Apache-2.0
//
// Linear codes over F_q as canonical row spaces, their Euclidean/Hermitian
// duals, hulls and LCD certificates, skew constacyclic codes built from
// generator polynomials, bounded-weight minimum distance, and the
// delta^{[i]} scaling equivalence between constacyclic families.

#ifndef SKEWLCD_CODES_HPP
#define SKEWLCD_CODES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "skewlcd/matrix.hpp"
#include "skewlcd/skew_poly.hpp"

namespace skewlcd {

enum class Inner { euclidean, hermitian };

/// Linear [n, k] code, stored as the reduced echelon generator matrix so
/// code equality is matrix equality.
class LinearCode {
public:
    LinearCode() = default;
    /// Rows are reduced to canonical echelon form; zero rows dropped.
    static LinearCode from_rows(const Matrix& rows);
    static LinearCode full_space(const FieldPtr& field, uint32_t n);
    static LinearCode zero_code(const FieldPtr& field, uint32_t n);

    const FieldPtr& field() const { return gen_.field(); }
    uint32_t length() const { return static_cast<uint32_t>(gen_.cols()); }
    uint32_t dimension() const { return static_cast<uint32_t>(gen_.rows()); }
    const Matrix& generator_matrix() const { return gen_; }
    /// Parity-check matrix (generator of the Euclidean dual).
    const Matrix& parity_check() const;

    LinearCode dual(Inner inner) const;
    uint32_t hull_dim(Inner inner) const;
    /// Massey criterion: G G^T (conjugate-transpose for Hermitian) nonsingular.
    bool is_lcd_matrix(Inner inner) const;
    bool contains(const std::vector<FieldElement>& word) const;

    bool operator==(const LinearCode& rhs) const { return gen_ == rhs.gen_; }
    bool operator!=(const LinearCode& rhs) const { return !(*this == rhs); }

private:
    Matrix gen_;
    mutable std::optional<Matrix> parity_;
};

/// Result of a bounded-weight distance scan: either the exact minimum
/// distance (with a witness codeword) or the certified bound w_max + 1.
struct DistanceResult {
    uint32_t value = 0;
    bool exact = false;
    std::vector<FieldElement> witness;  // empty when not exact

    std::string str() const;
};

/// Scans all vectors of weight <= w_max for membership (syndrome test);
/// exact minimum distance when one is found, lower bound otherwise.
DistanceResult min_distance_bounded(const LinearCode& code, uint32_t w_max = 4,
                                    unsigned threads = 1);

/// Skew constacyclic code <g> of length n: rows are the coefficient
/// vectors of x^i * g (skew products), i = 0..n-deg(g)-1.
class SkewConstaCode {
public:
    SkewConstaCode() = default;
    const ConstaModulus& modulus() const { return modulus_; }
    const SkewPoly& generator() const { return gen_; }
    const SkewPoly& cofactor_poly() const { return cofactor_; }
    const LinearCode& code() const { return code_; }
    uint32_t length() const { return modulus_.n; }
    uint32_t dimension() const { return code_.dimension(); }
    /// Raw (non-reduced) generator rows x^i * g.
    Matrix shift_rows() const;

    friend SkewConstaCode from_generator_poly(const ConstaModulus& M, const SkewPoly& g);

private:
    ConstaModulus modulus_;
    SkewPoly gen_;
    SkewPoly cofactor_;
    LinearCode code_;
};

/// Requires g monic and a right divisor of x^n - lambda.
SkewConstaCode from_generator_poly(const ConstaModulus& M, const SkewPoly& g);

/// The lambda-twisted skew shift (c_0..c_{n-1}) -> (lambda*theta(c_{n-1}),
/// theta(c_0), ..., theta(c_{n-2})).
std::vector<FieldElement> twisted_shift(const ConstaModulus& M, const std::vector<FieldElement>& c);

/// gcrd criterion: gcrd(g, h-natural) = 1 (conjugated for Hermitian);
/// requires lambda^2 = 1 and the automorphism order dividing n. The verdict
/// is cross-checked against the Massey matrix test and throws on internal
/// disagreement.
bool is_skew_lcd(const SkewConstaCode& code, Inner inner);

/// All delta with delta^{[n]} = lambda, [i] = (p^{ri}-1)/(p^r-1).
std::vector<FieldElement> lambda_roots(const FieldPtr& field, uint32_t r, uint32_t n,
                                       const FieldElement& lambda);

/// The twisted exponents [i] reduced mod q-1, plus the scaling unit.
struct ScaleMap {
    FieldElement delta;
    std::vector<uint64_t> exponents;  // [0..n-1], mod q-1

    static ScaleMap create(const FieldElement& delta, uint32_t r, uint32_t n);
    /// c_i -> delta^{-[i]} c_i
    std::vector<FieldElement> apply(const std::vector<FieldElement>& word) const;
};

/// Monomial equivalence from a skew cyclic code (lambda = 1) to the skew
/// delta^{[n]}-constacyclic code with generator monic(sum g_i delta^{-[i]} x^i).
/// The classical equivalence statement assumes odd length; the map itself is
/// exposed for any n where delta exists.
SkewConstaCode scale_equivalence(const SkewConstaCode& code, const FieldElement& delta);

}  // namespace skewlcd

#endif  // SKEWLCD_CODES_HPP
