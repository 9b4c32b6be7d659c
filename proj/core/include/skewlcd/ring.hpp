// SPDX-License-Identifier: Apache-2.0
//
// The semi-local ring R = F_q + vF_q with v^2 = v: element arithmetic and
// the CRT split a+vb = v(a+b) + (1-v)a, R-linear skew constacyclic codes
// C = vC_1 + (1-v)C_2, the Gray isometry a+vb -> (a, a+b), Lee weight, and
// LCD certification over R.

#ifndef SKEWLCD_RING_HPP
#define SKEWLCD_RING_HPP

#include <cstdint>
#include <vector>

#include "skewlcd/codes.hpp"

namespace skewlcd {

/// a + v*b with a, b in F_q.
class RingElement {
public:
    RingElement() = default;
    RingElement(FieldElement a, FieldElement b) : a_(std::move(a)), b_(std::move(b)) {
        require_same_field(a_, b_);
    }
    static RingElement from_field(const FieldElement& a) { return {a, a.field()->zero()}; }
    static RingElement v(const FieldPtr& field) { return {field->zero(), field->one()}; }
    static RingElement one_minus_v(const FieldPtr& field) { return {field->one(), -field->one()}; }
    static RingElement zero(const FieldPtr& field) { return {field->zero(), field->zero()}; }
    static RingElement one(const FieldPtr& field) { return {field->one(), field->zero()}; }

    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldPtr& field() const { return a_.field(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    RingElement operator+(const RingElement& rhs) const { return {a_ + rhs.a_, b_ + rhs.b_}; }
    RingElement operator-(const RingElement& rhs) const { return {a_ - rhs.a_, b_ - rhs.b_}; }
    RingElement operator-() const { return {-a_, -b_}; }
    /// (a+vb)(c+vd) = ac + v(ad + bc + bd), from v^2 = v.
    RingElement operator*(const RingElement& rhs) const;

    /// Unit iff both CRT components a+b and a are nonzero.
    bool is_unit() const { return !a_.is_zero() && !(a_ + b_).is_zero(); }
    RingElement inverse() const;
    /// Fixes v, conjugates both field components.
    RingElement conj() const { return {a_.conj(), b_.conj()}; }

    /// (u, z) with x = v*u + (1-v)*z: u = a+b, z = a. A ring isomorphism
    /// onto F_q x F_q.
    std::pair<FieldElement, FieldElement> crt_split() const { return {a_ + b_, a_}; }
    static RingElement crt_join(const FieldElement& u, const FieldElement& z) {
        return {z, u - z};
    }

    bool operator==(const RingElement& rhs) const { return a_ == rhs.a_ && b_ == rhs.b_; }
    bool operator!=(const RingElement& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    FieldElement a_;
    FieldElement b_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& x);

using RVector = std::vector<RingElement>;

/// Per-coordinate (a, a+b), laid out as the two length-n blocks
/// (a-vector | (a+b)-vector); F_q-linear and bijective.
std::vector<FieldElement> gray_map(const RVector& x);
/// Inverse of gray_map.
RVector gray_unmap(const FieldPtr& field, const std::vector<FieldElement>& y);

/// wt_L(x) = sum_i wt_H(a_i) + wt_H(a_i + b_i) = wt_H(gray_map(x)).
uint32_t lee_weight(const RVector& x);

/// Skew (alpha + v*beta)-constacyclic code over R: C = vC_1 + (1-v)C_2
/// with C_1 skew (alpha+beta)-constacyclic and C_2 skew alpha-constacyclic.
class RSkewCode {
public:
    RSkewCode() = default;

    const FieldPtr& field() const { return alpha_.field(); }
    uint32_t length() const { return c1_.length(); }
    const FieldElement& alpha() const { return alpha_; }
    const FieldElement& beta() const { return beta_; }
    RingElement lambda() const { return {alpha_, beta_}; }
    const SkewConstaCode& c1() const { return c1_; }
    const SkewConstaCode& c2() const { return c2_; }

    /// |C| = q^{2n - deg g1 - deg g2}; this is the exponent.
    uint32_t cardinality_exponent() const { return c1_.dimension() + c2_.dimension(); }

    /// Stacked generator matrix [v G_1 ; (1-v) G_2] over R.
    std::vector<RVector> stacked_generator() const;

    /// Generator matrix of the Gray image: diag(G_2, G_1).
    Matrix gray_generator_matrix() const;
    LinearCode gray_image() const;

    bool contains(const RVector& word) const;

    friend RSkewCode r_code(const FieldPtr& field, uint32_t r, uint32_t n,
                            const FieldElement& alpha, const FieldElement& beta,
                            const SkewPoly& g1, const SkewPoly& g2);

private:
    FieldElement alpha_;
    FieldElement beta_;
    SkewConstaCode c1_;
    SkewConstaCode c2_;
};

/// Requires g1 | x^n - (alpha+beta) and g2 | x^n - alpha on the right.
RSkewCode r_code(const FieldPtr& field, uint32_t r, uint32_t n, const FieldElement& alpha,
                 const FieldElement& beta, const SkewPoly& g1, const SkewPoly& g2);

/// LCD over R iff both components are LCD (gcrd criterion); cross-checked
/// against nonsingularity of the Gray block matrix.
bool r_is_lcd(const RSkewCode& code, Inner inner);

/// Componentwise dual: C^perp = v C_1^perp + (1-v) C_2^perp, generators
/// monic(natural(h_i)) (conjugated for Hermitian).
RSkewCode r_dual(const RSkewCode& code, Inner inner);

struct GrayParams {
    uint32_t n2 = 0;  // 2n
    uint32_t k = 0;   // k1 + k2
    DistanceResult d; // min(d1, d2) when certifiable

    std::string str() const;
};

/// [2n, k1+k2, min(d1, d2)] with d from bounded-weight search on both
/// components.
GrayParams gray_params(const RSkewCode& code, uint32_t w_max = 4, unsigned threads = 1);

/// Simultaneous lambda-twisted theta-shift of both length-n blocks of a
/// length-2n word (the skew 2-quasi-cyclic shift).
std::vector<FieldElement> quasi_cyclic_shift(const std::vector<FieldElement>& word, uint32_t r,
                                             const FieldElement& lambda);

}  // namespace skewlcd

#endif  // SKEWLCD_RING_HPP
