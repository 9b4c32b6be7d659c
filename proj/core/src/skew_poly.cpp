// SPDX-License-Identifier: Apache-2.0

#include "skewlcd/skew_poly.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "skewlcd/parallel.hpp"

namespace skewlcd {

namespace {

void require_same_ring(const SkewPoly& f, const SkewPoly& g) {
    if (!f.field() || !g.field() || !f.field()->same_as(*g.field()))
        throw std::invalid_argument("skew polynomials belong to different fields");
    uint32_t t = f.field()->extension_degree();
    if (f.r() % t != g.r() % t)
        throw std::invalid_argument("skew polynomials use different automorphisms");
}

}  // namespace

SkewPoly::SkewPoly(FieldPtr field, uint32_t r, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), r_(r), coeffs_(std::move(coeffs)) {
    trim();
}

void SkewPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SkewPoly SkewPoly::zero(FieldPtr field, uint32_t r) { return SkewPoly(std::move(field), r, {}); }

SkewPoly SkewPoly::one(FieldPtr field, uint32_t r) {
    auto e = field->one();
    return SkewPoly(std::move(field), r, {e});
}

SkewPoly SkewPoly::monomial(FieldElement c, uint32_t degree, uint32_t r) {
    auto field = c.field();
    std::vector<FieldElement> cs(degree + 1, field->zero());
    cs[degree] = std::move(c);
    return SkewPoly(field, r, std::move(cs));
}

SkewPoly SkewPoly::binomial(uint32_t n, const FieldElement& lambda, uint32_t r) {
    auto field = lambda.field();
    std::vector<FieldElement> cs(n + 1, field->zero());
    cs[0] = -lambda;
    cs[n] = field->one();
    return SkewPoly(field, r, std::move(cs));
}

uint32_t SkewPoly::theta_order() const { return automorphism_order(*field_, r_); }

FieldElement SkewPoly::coeff(size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return field_->zero();
}

FieldElement SkewPoly::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

FieldElement SkewPoly::theta_pow(const FieldElement& a, uint64_t i) const {
    uint32_t t = field_->extension_degree();
    return a.frobenius(static_cast<uint32_t>((static_cast<uint64_t>(r_) % t) * (i % t) % t));
}

SkewPoly SkewPoly::operator+(const SkewPoly& rhs) const {
    require_same_ring(*this, rhs);
    std::vector<FieldElement> out(std::max(coeffs_.size(), rhs.coeffs_.size()), field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return SkewPoly(field_, r_, std::move(out));
}

SkewPoly SkewPoly::operator-() const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return SkewPoly(field_, r_, std::move(out));
}

SkewPoly SkewPoly::operator-(const SkewPoly& rhs) const { return *this + (-rhs); }

SkewPoly SkewPoly::operator*(const SkewPoly& rhs) const {
    require_same_ring(*this, rhs);
    if (is_zero() || rhs.is_zero()) return zero(field_, r_);
    std::vector<FieldElement> out(coeffs_.size() + rhs.coeffs_.size() - 1, field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j].is_zero()) continue;
            out[i + j] += coeffs_[i] * theta_pow(rhs.coeffs_[j], i);
        }
    }
    return SkewPoly(field_, r_, std::move(out));
}

bool SkewPoly::operator==(const SkewPoly& rhs) const {
    if (!field_ || !rhs.field_) return coeffs_.empty() && rhs.coeffs_.empty();
    if (!field_->same_as(*rhs.field_)) return false;
    return coeffs_ == rhs.coeffs_;
}

SkewPoly SkewPoly::scaled(const FieldElement& c) const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(c * a);
    return SkewPoly(field_, r_, std::move(out));
}

SkewPoly SkewPoly::monic() const {
    if (is_zero()) return *this;
    if (is_monic()) return *this;
    return scaled(leading().inverse());
}

SkewPoly::DivMod SkewPoly::right_divmod(const SkewPoly& g) const {
    require_same_ring(*this, g);
    if (g.is_zero()) throw std::invalid_argument("skew division by zero");
    SkewPoly q = zero(field_, r_);
    SkewPoly rem = *this;
    const int64_t dg = g.degree();
    const FieldElement lg = g.leading();
    while (!rem.is_zero() && rem.degree() >= dg) {
        const uint64_t d = static_cast<uint64_t>(rem.degree() - dg);
        // match leading terms: (c x^d)(lg x^dg) = c theta^d(lg) x^{d+dg}
        FieldElement c = rem.leading() * theta_pow(lg, d).inverse();
        SkewPoly term = monomial(c, static_cast<uint32_t>(d), r_);
        q = q + term;
        rem = rem - term * g;
    }
    return {q, rem};
}

SkewPoly::DivMod SkewPoly::left_divmod(const SkewPoly& g) const {
    require_same_ring(*this, g);
    if (g.is_zero()) throw std::invalid_argument("skew division by zero");
    const uint32_t t = field_->extension_degree();
    SkewPoly q = zero(field_, r_);
    SkewPoly rem = *this;
    const int64_t dg = g.degree();
    const FieldElement lg = g.leading();
    while (!rem.is_zero() && rem.degree() >= dg) {
        const uint64_t d = static_cast<uint64_t>(rem.degree() - dg);
        // match leading terms: (lg x^dg)(c x^d) = lg theta^dg(c) x^{dg+d}
        FieldElement v = lg.inverse() * rem.leading();
        // invert theta^dg by applying the complementary Frobenius power
        uint32_t e = static_cast<uint32_t>((static_cast<uint64_t>(r_) % t) * (static_cast<uint64_t>(dg) % t) % t);
        FieldElement c = v.frobenius((t - e) % t);
        SkewPoly term = monomial(c, static_cast<uint32_t>(d), r_);
        q = q + term;
        rem = rem - g * term;
    }
    return {q, rem};
}

bool SkewPoly::right_divisible_by(const SkewPoly& g) const { return right_divmod(g).remainder.is_zero(); }

std::string SkewPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const auto& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (!first) os << "+";
        first = false;
        std::string cs = c.str();
        bool compound = cs.find('+') != std::string::npos;
        if (i == 0) {
            os << (compound ? "(" + cs + ")" : cs);
            continue;
        }
        if (!c.is_one()) os << (compound ? "(" + cs + ")" : cs) << "*";
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SkewPoly& f) { return os << f.str(); }

SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g) {
    require_same_ring(f, g);
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcrd of two zero polynomials");
    SkewPoly a = f, b = g;
    while (!b.is_zero()) {
        auto dm = a.right_divmod(b);
        a = b;
        b = dm.remainder;
    }
    return a.monic();
}

SkewPoly skew_reciprocal(const SkewPoly& h) {
    if (h.is_zero()) throw std::invalid_argument("skew reciprocal of the zero polynomial");
    const size_t k = static_cast<size_t>(h.degree());
    std::vector<FieldElement> out;
    out.reserve(k + 1);
    for (size_t i = 0; i <= k; ++i) out.push_back(h.theta_pow(h.coeff(k - i), i));
    return SkewPoly(h.field(), h.r(), std::move(out));
}

SkewPoly conjugate(const SkewPoly& f) {
    if (f.field()->extension_degree() % 2 != 0)
        throw std::invalid_argument("conjugation requires even extension degree");
    std::vector<FieldElement> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(c.conj());
    return SkewPoly(f.field(), f.r(), std::move(out));
}

bool is_central(const SkewPoly& f) {
    if (f.is_zero()) return true;
    const uint32_t m = f.theta_order();
    for (size_t i = 0; i <= static_cast<size_t>(f.degree()); ++i) {
        const auto c = f.coeff(i);
        if (c.is_zero()) continue;
        if (i % m != 0) return false;
        if (c.frobenius(f.r()) != c) return false;
    }
    return true;
}

bool has_central_divisor(const SkewPoly& g) {
    if (g.is_zero()) return true;  // every central polynomial divides 0
    const uint32_t m = g.theta_order();
    const auto fixed = fixed_subfield(g.field(), g.r());
    const size_t dg = static_cast<size_t>(g.degree());
    for (size_t dm = m; dm <= dg; dm += m) {
        const size_t slots = dm / m;
        uint64_t count = 1;
        for (size_t i = 0; i < slots; ++i) count *= fixed.size();
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<FieldElement> cs(dm + 1, g.field()->zero());
            cs[dm] = g.field()->one();
            uint64_t v = idx;
            for (size_t j = 0; j < slots; ++j) {
                cs[j * m] = fixed[v % fixed.size()];
                v /= fixed.size();
            }
            SkewPoly c(g.field(), g.r(), std::move(cs));
            if (g.right_divisible_by(c)) return true;
        }
    }
    return false;
}

FieldElement skew_norm(const FieldElement& c, uint32_t r, uint32_t n) {
    FieldElement out = c.field()->one();
    for (uint32_t i = 0; i < n; ++i) out = out.frobenius(r) * c;
    return out;
}

ConstaModulus ConstaModulus::create(const FieldPtr& field, uint32_t r, uint32_t n,
                                    const FieldElement& lambda) {
    if (n == 0) throw std::invalid_argument("constacyclic length must be positive");
    if (lambda.is_zero()) throw std::invalid_argument("constacyclic unit lambda must be nonzero");
    if (!field->same_as(*lambda.field())) throw std::invalid_argument("lambda belongs to a different field");
    ConstaModulus M;
    M.n = n;
    M.lambda = lambda;
    M.poly = SkewPoly::binomial(n, lambda, r);
    M.central = is_central(M.poly);
    return M;
}

std::vector<SkewPoly> right_divisors(const ConstaModulus& M, uint32_t d, uint64_t budget,
                                     unsigned threads) {
    const auto& field = M.field();
    if (d > M.n) return {};
    if (d == 0) return {SkewPoly::one(field, M.r())};
    uint64_t space = 1;
    for (uint32_t i = 0; i < d; ++i) {
        if (space > budget / field->size()) throw std::invalid_argument("right-divisor scan budget exceeded");
        space *= field->size();
    }
    if (space > budget) throw std::invalid_argument("right-divisor scan budget exceeded");

    auto chunks = parallel_chunks(space, threads, [&](uint64_t lo, uint64_t hi) {
        std::vector<SkewPoly> found;
        for (uint64_t idx = lo; idx < hi; ++idx) {
            std::vector<FieldElement> cs(d + 1, field->zero());
            cs[d] = field->one();
            uint64_t v = idx;
            for (uint32_t j = 0; j < d; ++j) {
                cs[j] = field->from_index(v % field->size());
                v /= field->size();
            }
            SkewPoly g(field, M.r(), std::move(cs));
            if (M.poly.right_divisible_by(g)) found.push_back(std::move(g));
        }
        return found;
    });
    std::vector<SkewPoly> out;
    for (auto& c : chunks)
        for (auto& g : c) out.push_back(std::move(g));
    // chunks arrive in index order, so the result is already canonical
    return out;
}

SkewPoly cofactor(const SkewPoly& g, const ConstaModulus& M) {
    auto dm = M.poly.right_divmod(g);
    if (!dm.remainder.is_zero())
        throw std::invalid_argument("polynomial is not a right divisor of x^n - lambda");
    if (g * dm.quotient != M.poly)
        throw std::invalid_argument("cofactor is one-sided: g*h != x^n - lambda");
    return dm.quotient;
}

}  // namespace skewlcd
