// SPDX-License-Identifier: Apache-2.0

#include "skewlcd/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace skewlcd {

RingElement RingElement::operator*(const RingElement& rhs) const {
    const FieldElement ac = a_ * rhs.a_;
    return {ac, a_ * rhs.b_ + b_ * rhs.a_ + b_ * rhs.b_};
}

RingElement RingElement::inverse() const {
    if (!is_unit()) throw std::invalid_argument("ring element is not a unit");
    auto [u, z] = crt_split();
    return crt_join(u.inverse(), z.inverse());
}

std::string RingElement::str() const {
    auto wrap = [](const std::string& s) {
        return (s.find('+') != std::string::npos || s.find('-') != std::string::npos) ? "(" + s + ")"
                                                                                      : s;
    };
    if (b_.is_zero()) return a_.str();
    std::string vb = b_.is_one() ? "v" : "v*" + wrap(b_.str());
    if (a_.is_zero()) return vb;
    return wrap(a_.str()) + "+" + vb;
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << x.str(); }

std::vector<FieldElement> gray_map(const RVector& x) {
    std::vector<FieldElement> out;
    out.reserve(2 * x.size());
    for (const auto& e : x) out.push_back(e.a());
    for (const auto& e : x) out.push_back(e.a() + e.b());
    return out;
}

RVector gray_unmap(const FieldPtr& field, const std::vector<FieldElement>& y) {
    if (y.size() % 2 != 0) throw std::invalid_argument("gray preimage needs even length");
    const size_t n = y.size() / 2;
    RVector out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.emplace_back(y[i], y[n + i] - y[i]);
    (void)field;
    return out;
}

uint32_t lee_weight(const RVector& x) {
    uint32_t w = 0;
    for (const auto& e : x) {
        if (!e.a().is_zero()) ++w;
        if (!(e.a() + e.b()).is_zero()) ++w;
    }
    return w;
}

RSkewCode r_code(const FieldPtr& field, uint32_t r, uint32_t n, const FieldElement& alpha,
                 const FieldElement& beta, const SkewPoly& g1, const SkewPoly& g2) {
    RSkewCode out;
    out.alpha_ = alpha;
    out.beta_ = beta;
    const RingElement lam(alpha, beta);
    if (!lam.is_unit()) throw std::invalid_argument("alpha + v*beta must be a unit");
    const ConstaModulus m1 = ConstaModulus::create(field, r, n, alpha + beta);
    const ConstaModulus m2 = ConstaModulus::create(field, r, n, alpha);
    out.c1_ = from_generator_poly(m1, g1);
    out.c2_ = from_generator_poly(m2, g2);
    return out;
}

std::vector<RVector> RSkewCode::stacked_generator() const {
    const auto& field = this->field();
    const RingElement v = RingElement::v(field);
    const RingElement omv = RingElement::one_minus_v(field);
    std::vector<RVector> rows;
    const Matrix& g1 = c1_.code().generator_matrix();
    for (size_t i = 0; i < g1.rows(); ++i) {
        RVector row;
        for (size_t j = 0; j < g1.cols(); ++j) row.push_back(v * RingElement::from_field(g1.at(i, j)));
        rows.push_back(std::move(row));
    }
    const Matrix& g2 = c2_.code().generator_matrix();
    for (size_t i = 0; i < g2.rows(); ++i) {
        RVector row;
        for (size_t j = 0; j < g2.cols(); ++j) row.push_back(omv * RingElement::from_field(g2.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix RSkewCode::gray_generator_matrix() const {
    const auto& field = this->field();
    const uint32_t n = length();
    const Matrix& g1 = c1_.code().generator_matrix();
    const Matrix& g2 = c2_.code().generator_matrix();
    Matrix out(field, g1.rows() + g2.rows(), 2 * n);
    for (size_t i = 0; i < g2.rows(); ++i)
        for (size_t j = 0; j < n; ++j) out.at(i, j) = g2.at(i, j);
    for (size_t i = 0; i < g1.rows(); ++i)
        for (size_t j = 0; j < n; ++j) out.at(g2.rows() + i, n + j) = g1.at(i, j);
    return out;
}

LinearCode RSkewCode::gray_image() const { return LinearCode::from_rows(gray_generator_matrix()); }

bool RSkewCode::contains(const RVector& word) const {
    if (word.size() != length()) throw std::invalid_argument("word length mismatch");
    return gray_image().contains(gray_map(word));
}

bool r_is_lcd(const RSkewCode& code, Inner inner) {
    const bool components = is_skew_lcd(code.c1(), inner) && is_skew_lcd(code.c2(), inner);
    const bool gray = code.gray_image().is_lcd_matrix(inner);
    if (components != gray)
        throw std::logic_error("componentwise LCD verdict disagrees with the Gray block-matrix test");
    return components;
}

RSkewCode r_dual(const RSkewCode& code, Inner inner) {
    auto dual_gen = [&](const SkewConstaCode& c) {
        SkewPoly g = skew_reciprocal(c.cofactor_poly()).monic();
        if (inner == Inner::hermitian) g = conjugate(g);
        return g;
    };
    const uint32_t r = code.c1().generator().r();
    return r_code(code.field(), r, code.length(), code.alpha(), code.beta(), dual_gen(code.c1()),
                  dual_gen(code.c2()));
}

std::string GrayParams::str() const {
    std::ostringstream os;
    os << "[" << n2 << "," << k << "," << (d.exact ? std::to_string(d.value) : ">=" + std::to_string(d.value))
       << "]";
    return os.str();
}

GrayParams gray_params(const RSkewCode& code, uint32_t w_max, unsigned threads) {
    GrayParams out;
    out.n2 = 2 * code.length();
    out.k = code.cardinality_exponent();
    const DistanceResult d1 = min_distance_bounded(code.c1().code(), w_max, threads);
    const DistanceResult d2 = min_distance_bounded(code.c2().code(), w_max, threads);
    // the smaller value decides; on a tie an exact result beats a bound
    const DistanceResult& lo =
        (d1.value < d2.value || (d1.value == d2.value && d1.exact)) ? d1 : d2;
    out.d.value = lo.value;
    out.d.exact = lo.exact;
    if (lo.exact) out.d.witness = lo.witness;
    return out;
}

std::vector<FieldElement> quasi_cyclic_shift(const std::vector<FieldElement>& word, uint32_t r,
                                             const FieldElement& lambda) {
    if (word.size() % 2 != 0) throw std::invalid_argument("quasi-cyclic shift needs even length");
    const size_t n = word.size() / 2;
    std::vector<FieldElement> out;
    out.reserve(word.size());
    for (size_t block = 0; block < 2; ++block) {
        const size_t base = block * n;
        out.push_back(lambda * word[base + n - 1].frobenius(r));
        for (size_t i = 0; i + 1 < n; ++i) out.push_back(word[base + i].frobenius(r));
    }
    return out;
}

}  // namespace skewlcd
