// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in GF(p^t) = F_p[z]/(m(z)) with the Frobenius-power
// automorphisms a -> a^{p^r} and their fixed subfields.
//
// Fields are immutable after construction and shared through
// std::shared_ptr; elements carry their owning field and a canonical
// index (base-p digit encoding of the coefficient tuple), so copies,
// comparisons and hashing are O(1).

#ifndef SKEWLCD_FIELD_HPP
#define SKEWLCD_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skewlcd {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^t) as F_p[z]/(m(z)), m monic irreducible of degree t.
class Field : public std::enable_shared_from_this<Field> {
public:
    /// Validates p prime and m monic irreducible (exhaustive trial
    /// division, desk scale t <= 12). Coefficients ascending, length t+1.
    static FieldPtr create(uint32_t p, uint32_t t, std::vector<uint32_t> modulus,
                           std::string generator_symbol = "w");

    /// Field with the bundled default modulus for (p, t): the moduli the
    /// shipped examples depend on (GF(16): z^4+z+1, GF(9): z^2-z-1,
    /// GF(4): z^2+z+1), otherwise the lexicographically first monic
    /// irreducible whose root is primitive.
    static FieldPtr with_default_modulus(uint32_t p, uint32_t t,
                                         std::string generator_symbol = "w");

    uint32_t characteristic() const { return p_; }
    uint32_t extension_degree() const { return t_; }
    uint64_t size() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    const std::string& generator_symbol() const { return symbol_; }

    /// Multiplicative order of the class of z; equals q-1 iff primitive.
    uint64_t generator_order() const { return zorder_; }
    bool generator_is_primitive() const { return zorder_ == q_ - 1; }

    FieldElement zero() const;
    FieldElement one() const;
    /// The class of z (degree >= 2), or the residue 1 for prime fields.
    FieldElement generator() const;
    /// w^k (k may be negative); requires t >= 2.
    FieldElement generator_power(int64_t k) const;
    FieldElement from_coeffs(const std::vector<uint32_t>& coeffs) const;
    FieldElement from_index(uint64_t idx) const;
    /// Scalar c mod p embedded as a constant.
    FieldElement from_int(int64_t c) const;

    /// Exponent k with element = w^k, when z is primitive (table lookup,
    /// q <= 2^16); nullopt for 0 or non-primitive display.
    std::optional<uint64_t> discrete_log(const FieldElement& e) const;

    bool same_as(const Field& other) const;

    // Raw-index arithmetic; FieldElement wraps these.
    uint64_t add_idx(uint64_t a, uint64_t b) const;
    uint64_t sub_idx(uint64_t a, uint64_t b) const;
    uint64_t neg_idx(uint64_t a) const;
    uint64_t mul_idx(uint64_t a, uint64_t b) const;
    uint64_t inv_idx(uint64_t a) const;
    uint64_t pow_idx(uint64_t a, int64_t e) const;
    /// a^{p^r}; r is reduced mod t.
    uint64_t frobenius_idx(uint64_t a, uint32_t r) const;

    std::vector<uint32_t> decode(uint64_t idx) const;
    uint64_t encode(const std::vector<uint32_t>& coeffs) const;

private:
    Field() = default;

    uint32_t p_ = 0;
    uint32_t t_ = 0;
    uint64_t q_ = 0;
    std::vector<uint32_t> modulus_;
    std::string symbol_;
    uint64_t zorder_ = 0;
    // reduction of z^{t+i} as digit rows, i = 0..t-2
    std::vector<std::vector<uint32_t>> reduction_;
    // lookup tables, built when q <= 65536
    std::vector<uint64_t> exp_;        // exponent -> element (primitive z only)
    std::vector<uint64_t> dlog_;       // element -> exponent (primitive z only)
    std::vector<uint64_t> frob_;       // a -> a^p

    uint64_t mul_slow(uint64_t a, uint64_t b) const;
    void build_tables();
};

/// Element of a Field; value type, comparable and hashable.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr owner, uint64_t idx) : owner_(std::move(owner)), idx_(idx) {}

    const FieldPtr& field() const { return owner_; }
    uint64_t index() const { return idx_; }
    std::vector<uint32_t> coeffs() const { return owner_->decode(idx_); }
    bool is_zero() const { return idx_ == 0; }
    bool is_one() const { return idx_ == 1; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

    /// Multiplicative inverse; throws on zero.
    FieldElement inverse() const;
    FieldElement pow(int64_t e) const;
    /// theta_r: a -> a^{p^r}.
    FieldElement frobenius(uint32_t r) const;
    /// a -> a^{p^{t/2}}; requires even extension degree.
    FieldElement conj() const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    /// "0", "1", "w^k" when z is primitive; coefficient-tuple form otherwise.
    std::string str() const;

private:
    FieldPtr owner_;
    uint64_t idx_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

/// Order of theta_r on GF(p^t): t / gcd(t, r).
uint32_t automorphism_order(const Field& field, uint32_t r);

/// All a in the field with a^{p^r} = a; |result| = p^{gcd(r,t)}.
std::vector<FieldElement> fixed_subfield(const FieldPtr& field, uint32_t r);

void require_same_field(const FieldElement& a, const FieldElement& b);

}  // namespace skewlcd

template <>
struct std::hash<skewlcd::FieldElement> {
    size_t operator()(const skewlcd::FieldElement& e) const noexcept {
        return std::hash<uint64_t>{}(e.index());
    }
};

#endif  // SKEWLCD_FIELD_HPP
