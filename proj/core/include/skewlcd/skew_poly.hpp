// SPDX-License-Identifier: Apache-2.0
//
// The non-commutative ring F_q[x; theta_r] of skew (Ore) polynomials with
// multiplication twisted by the Frobenius power theta_r: a -> a^{p^r},
//
//     (a x^i)(b x^j) = a theta_r^i(b) x^{i+j}.
//
// Provides right/left Euclidean division, gcrd, the skew reciprocal and
// coefficientwise conjugate operators, centrality tests, and exhaustive
// right-divisor enumeration of the constacyclic modulus x^n - lambda.
// With r a multiple of t the automorphism is the identity and the type
// doubles as plain commutative F_q[x].

#ifndef SKEWLCD_SKEW_POLY_HPP
#define SKEWLCD_SKEW_POLY_HPP

#include <cstdint>
#include <vector>

#include "skewlcd/field.hpp"

namespace skewlcd {

class SkewPoly {
public:
    SkewPoly() = default;
    /// Coefficients ascending (index i holds the x^i coefficient);
    /// trailing zeros are trimmed.
    SkewPoly(FieldPtr field, uint32_t r, std::vector<FieldElement> coeffs);

    static SkewPoly zero(FieldPtr field, uint32_t r);
    static SkewPoly one(FieldPtr field, uint32_t r);
    static SkewPoly monomial(FieldElement c, uint32_t degree, uint32_t r);
    /// x^n - lambda
    static SkewPoly binomial(uint32_t n, const FieldElement& lambda, uint32_t r);

    const FieldPtr& field() const { return field_; }
    uint32_t r() const { return r_; }
    /// Order of theta_r, i.e. t / gcd(t, r).
    uint32_t theta_order() const;

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int64_t degree() const { return static_cast<int64_t>(coeffs_.size()) - 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
    /// Coefficient of x^i (zero beyond the degree).
    FieldElement coeff(size_t i) const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement leading() const;

    SkewPoly operator+(const SkewPoly& rhs) const;
    SkewPoly operator-(const SkewPoly& rhs) const;
    SkewPoly operator*(const SkewPoly& rhs) const;
    SkewPoly operator-() const;
    bool operator==(const SkewPoly& rhs) const;
    bool operator!=(const SkewPoly& rhs) const { return !(*this == rhs); }

    /// Left scalar multiple c*f.
    SkewPoly scaled(const FieldElement& c) const;
    /// Left-normalized by the inverse of the leading coefficient.
    SkewPoly monic() const;

    struct DivMod;
    /// f = q*g + rem with deg rem < deg g.
    DivMod right_divmod(const SkewPoly& g) const;
    /// f = g*q + rem with deg rem < deg g.
    DivMod left_divmod(const SkewPoly& g) const;
    bool right_divisible_by(const SkewPoly& g) const;

    /// theta_r^i applied to a single element.
    FieldElement theta_pow(const FieldElement& a, uint64_t i) const;

    std::string str() const;

private:
    FieldPtr field_;
    uint32_t r_ = 1;
    std::vector<FieldElement> coeffs_;

    void trim();
};

struct SkewPoly::DivMod {
    SkewPoly quotient;
    SkewPoly remainder;
};

std::ostream& operator<<(std::ostream& os, const SkewPoly& f);

/// Monic greatest common right divisor via the right Euclidean algorithm.
SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g);

/// The "natural" reciprocal: for h of degree k the polynomial with i-th
/// coefficient theta_r^i(h_{k-i}).
SkewPoly skew_reciprocal(const SkewPoly& h);

/// Coefficientwise a -> a^{p^{t/2}}; requires even extension degree.
SkewPoly conjugate(const SkewPoly& f);

/// True iff all coefficients lie in the fixed subfield of theta_r and only
/// exponents divisible by the automorphism order appear.
bool is_central(const SkewPoly& f);

/// True iff some monic central polynomial of positive degree right-divides g
/// (left and right divisibility coincide for central divisors).
bool has_central_divisor(const SkewPoly& g);

/// N_n(c) = theta^{n-1}(c) * ... * theta(c) * c; the remainder of x^n - a
/// by x - c equals N_n(c) - a.
FieldElement skew_norm(const FieldElement& c, uint32_t r, uint32_t n);

/// The modulus x^n - lambda of a skew constacyclic family; centrality is
/// computed at construction, never assumed.
struct ConstaModulus {
    uint32_t n = 0;
    FieldElement lambda;
    SkewPoly poly;
    bool central = false;

    static ConstaModulus create(const FieldPtr& field, uint32_t r, uint32_t n,
                                const FieldElement& lambda);
    const FieldPtr& field() const { return poly.field(); }
    uint32_t r() const { return poly.r(); }
};

/// All monic degree-d right divisors of M.poly, by exhaustive scan over the
/// q^d coefficient tuples (throws when q^d exceeds the budget). Results are
/// sorted by coefficient tuple regardless of the worker count.
std::vector<SkewPoly> right_divisors(const ConstaModulus& M, uint32_t d,
                                     uint64_t budget = 10'000'000, unsigned threads = 1);

/// h with h*g = x^n - lambda; also checks g*h = x^n - lambda and throws when
/// the two-sided identity fails (it must hold whenever the modulus is central).
SkewPoly cofactor(const SkewPoly& g, const ConstaModulus& M);

}  // namespace skewlcd

#endif  // SKEWLCD_SKEW_POLY_HPP
