// SPDX-License-Identifier: Apache-2.0

#include "skewlcd/field.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace skewlcd {

namespace {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// plain F_p[z] helpers on ascending digit vectors, used only for modulus
// validation and default-modulus search
using Digits = std::vector<uint32_t>;

Digits& trim(Digits& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Digits poly_mod(Digits f, const Digits& g, uint32_t p) {
    // g monic
    while (f.size() >= g.size() && !f.empty()) {
        uint32_t c = f.back();
        size_t shift = f.size() - g.size();
        if (c != 0) {
            for (size_t i = 0; i < g.size(); ++i) {
                uint64_t v = f[shift + i] + static_cast<uint64_t>(p - 1) * p;  // keep non-negative
                v -= static_cast<uint64_t>(c) * g[i] % p;
                f[shift + i] = static_cast<uint32_t>(v % p);
            }
        }
        f.pop_back();
        trim(f);
        if (f.size() < g.size()) break;
    }
    return f;
}

bool is_irreducible(const Digits& m, uint32_t p) {
    // exhaustive trial division by monic polynomials of degree 1..t/2
    const size_t t = m.size() - 1;
    for (size_t d = 1; 2 * d <= t; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t c = 0; c < count; ++c) {
            Digits g(d + 1, 0);
            g[d] = 1;
            uint64_t v = c;
            for (size_t i = 0; i < d; ++i) {
                g[i] = static_cast<uint32_t>(v % p);
                v /= p;
            }
            Digits r = poly_mod(m, g, p);
            if (r.empty()) return false;
        }
    }
    return true;
}

}  // namespace

FieldPtr Field::create(uint32_t p, uint32_t t, std::vector<uint32_t> modulus,
                       std::string generator_symbol) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic is not prime: " + std::to_string(p));
    if (t < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (modulus.size() != static_cast<size_t>(t) + 1)
        throw std::invalid_argument("modulus degree mismatch: expected degree " + std::to_string(t));
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (t > 1 && !is_irreducible(modulus, p))
        throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->t_ = t;
    f->q_ = 1;
    for (uint32_t i = 0; i < t; ++i) {
        if (f->q_ > (uint64_t(1) << 40) / p) throw std::invalid_argument("field too large");
        f->q_ *= p;
    }
    f->modulus_ = std::move(modulus);
    f->symbol_ = std::move(generator_symbol);

    // rows for z^{t}, z^{t+1}, ..., z^{2t-2}
    if (t >= 2) {
        Digits cur(t);
        for (uint32_t i = 0; i < t; ++i) cur[i] = (p - f->modulus_[i]) % p;
        f->reduction_.push_back(cur);
        for (uint32_t k = 1; k + 1 < t; ++k) {
            Digits nxt(t, 0);
            for (uint32_t i = 0; i + 1 < t; ++i) nxt[i + 1] = cur[i];
            uint32_t hi = cur[t - 1];
            for (uint32_t i = 0; i < t; ++i)
                nxt[i] = static_cast<uint32_t>((nxt[i] + static_cast<uint64_t>(hi) * f->reduction_[0][i]) % p);
            f->reduction_.push_back(nxt);
            cur = nxt;
        }
    }

    // order of the class of z
    if (t == 1) {
        f->zorder_ = 1;
    } else {
        uint64_t z = f->p_;  // digits (0,1,0,...)
        uint64_t acc = z;
        uint64_t ord = 1;
        while (acc != 1) {
            acc = f->mul_slow(acc, z);
            ++ord;
        }
        f->zorder_ = ord;
    }

    f->build_tables();
    return f;
}

void Field::build_tables() {
    if (q_ > 65536) return;
    if (generator_is_primitive() && t_ >= 2) {
        exp_.resize(q_ - 1);
        dlog_.assign(q_, 0);
        uint64_t z = p_;
        uint64_t acc = 1;
        for (uint64_t k = 0; k < q_ - 1; ++k) {
            exp_[k] = acc;
            dlog_[acc] = k;
            acc = mul_slow(acc, z);
        }
    }
    frob_.resize(q_);
    for (uint64_t a = 0; a < q_; ++a) {
        uint64_t r = 1;
        uint64_t b = a;
        uint64_t e = p_;
        while (e) {
            if (e & 1) r = mul_slow(r, b);
            b = mul_slow(b, b);
            e >>= 1;
        }
        frob_[a] = r;
    }
}

FieldPtr Field::with_default_modulus(uint32_t p, uint32_t t, std::string generator_symbol) {
    if (t == 1) return create(p, 1, {0, 1}, std::move(generator_symbol));
    if (p == 2 && t == 4) return create(2, 4, {1, 1, 0, 0, 1}, std::move(generator_symbol));
    if (p == 3 && t == 2) return create(3, 2, {2, 2, 1}, std::move(generator_symbol));
    if (p == 2 && t == 2) return create(2, 2, {1, 1, 1}, std::move(generator_symbol));
    // first monic irreducible (lex order on low coefficients) with primitive z;
    // falls back to the first irreducible if no primitive one exists
    if (!is_prime(p)) throw std::invalid_argument("field characteristic is not prime: " + std::to_string(p));
    uint64_t count = 1;
    for (uint32_t i = 0; i < t; ++i) count *= p;
    std::vector<uint32_t> first_irreducible;
    for (uint64_t c = 0; c < count; ++c) {
        Digits m(t + 1, 0);
        m[t] = 1;
        uint64_t v = c;
        for (uint32_t i = 0; i < t; ++i) {
            m[i] = static_cast<uint32_t>(v % p);
            v /= p;
        }
        if (!is_irreducible(m, p)) continue;
        if (first_irreducible.empty()) first_irreducible = m;
        auto f = create(p, t, m, generator_symbol);
        if (f->generator_is_primitive()) return f;
    }
    if (!first_irreducible.empty()) return create(p, t, first_irreducible, std::move(generator_symbol));
    throw std::logic_error("no irreducible modulus found");  // unreachable
}

std::vector<uint32_t> Field::decode(uint64_t idx) const {
    std::vector<uint32_t> out(t_);
    for (uint32_t i = 0; i < t_; ++i) {
        out[i] = static_cast<uint32_t>(idx % p_);
        idx /= p_;
    }
    return out;
}

uint64_t Field::encode(const std::vector<uint32_t>& coeffs) const {
    uint64_t idx = 0;
    for (size_t i = coeffs.size(); i-- > 0;) idx = idx * p_ + coeffs[i] % p_;
    return idx;
}

uint64_t Field::add_idx(uint64_t a, uint64_t b) const {
    uint64_t out = 0;
    uint64_t mult = 1;
    for (uint32_t i = 0; i < t_; ++i) {
        out += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

uint64_t Field::neg_idx(uint64_t a) const {
    uint64_t out = 0;
    uint64_t mult = 1;
    for (uint32_t i = 0; i < t_; ++i) {
        out += (p_ - a % p_) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

uint64_t Field::sub_idx(uint64_t a, uint64_t b) const { return add_idx(a, neg_idx(b)); }

uint64_t Field::mul_slow(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    std::vector<uint32_t> ca = decode(a), cb = decode(b);
    std::vector<uint64_t> prod(2 * t_ - 1, 0);
    for (uint32_t i = 0; i < t_; ++i) {
        if (ca[i] == 0) continue;
        for (uint32_t j = 0; j < t_; ++j)
            prod[i + j] = (prod[i + j] + static_cast<uint64_t>(ca[i]) * cb[j]) % p_;
    }
    for (uint32_t k = 2 * t_ - 2; k >= t_ && t_ >= 2; --k) {
        uint64_t c = prod[k];
        if (c != 0) {
            prod[k] = 0;
            const auto& row = reduction_[k - t_];
            for (uint32_t i = 0; i < t_; ++i) prod[i] = (prod[i] + c * row[i]) % p_;
        }
        if (k == t_) break;
    }
    uint64_t idx = 0;
    for (uint32_t i = t_; i-- > 0;) idx = idx * p_ + prod[i];
    return idx;
}

uint64_t Field::mul_idx(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[(dlog_[a] + dlog_[b]) % (q_ - 1)];
    return mul_slow(a, b);
}

uint64_t Field::pow_idx(uint64_t a, int64_t e) const {
    if (a == 0) {
        if (e < 0) throw std::invalid_argument("division by zero in field");
        return e == 0 ? 1 : 0;
    }
    uint64_t em = static_cast<uint64_t>(((e % static_cast<int64_t>(q_ - 1)) + static_cast<int64_t>(q_ - 1)) %
                                        static_cast<int64_t>(q_ - 1));
    if (!exp_.empty()) {
        unsigned __int128 k = static_cast<unsigned __int128>(dlog_[a]) * em;
        return exp_[static_cast<uint64_t>(k % (q_ - 1))];
    }
    uint64_t r = 1, b = a;
    while (em) {
        if (em & 1) r = mul_slow(r, b);
        b = mul_slow(b, b);
        em >>= 1;
    }
    return r;
}

uint64_t Field::inv_idx(uint64_t a) const {
    if (a == 0) throw std::invalid_argument("division by zero in field");
    return pow_idx(a, static_cast<int64_t>(q_ - 2));
}

uint64_t Field::frobenius_idx(uint64_t a, uint32_t r) const {
    r %= t_;
    if (!frob_.empty()) {
        uint64_t out = a;
        for (uint32_t i = 0; i < r; ++i) out = frob_[out];
        return out;
    }
    uint64_t out = a;
    for (uint32_t i = 0; i < r; ++i) out = pow_idx(out, p_);
    return out;
}

FieldElement Field::zero() const { return {shared_from_this(), 0}; }
FieldElement Field::one() const { return {shared_from_this(), 1}; }

FieldElement Field::generator() const {
    if (t_ == 1) return one();
    return {shared_from_this(), p_};
}

FieldElement Field::generator_power(int64_t k) const {
    if (t_ < 2) throw std::invalid_argument("prime field has no generator symbol");
    return {shared_from_this(), pow_idx(p_, k)};
}

FieldElement Field::from_coeffs(const std::vector<uint32_t>& coeffs) const {
    if (coeffs.size() > t_) throw std::invalid_argument("coefficient tuple longer than extension degree");
    return {shared_from_this(), encode(coeffs)};
}

FieldElement Field::from_index(uint64_t idx) const {
    if (idx >= q_) throw std::invalid_argument("element index out of range");
    return {shared_from_this(), idx};
}

FieldElement Field::from_int(int64_t c) const {
    int64_t m = c % static_cast<int64_t>(p_);
    if (m < 0) m += p_;
    return {shared_from_this(), static_cast<uint64_t>(m)};
}

std::optional<uint64_t> Field::discrete_log(const FieldElement& e) const {
    if (e.is_zero() || dlog_.empty() || !generator_is_primitive()) return std::nullopt;
    return dlog_[e.index()];
}

bool Field::same_as(const Field& other) const {
    if (this == &other) return true;
    return p_ == other.p_ && t_ == other.t_ && modulus_ == other.modulus_;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field() || !b.field() || !a.field()->same_as(*b.field()))
        throw std::invalid_argument("elements belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_field(*this, rhs);
    return {owner_, owner_->add_idx(idx_, rhs.idx_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    require_same_field(*this, rhs);
    return {owner_, owner_->sub_idx(idx_, rhs.idx_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_field(*this, rhs);
    return {owner_, owner_->mul_idx(idx_, rhs.idx_)};
}

FieldElement FieldElement::operator-() const { return {owner_, owner_->neg_idx(idx_)}; }

FieldElement FieldElement::inverse() const { return {owner_, owner_->inv_idx(idx_)}; }

FieldElement FieldElement::pow(int64_t e) const { return {owner_, owner_->pow_idx(idx_, e)}; }

FieldElement FieldElement::frobenius(uint32_t r) const { return {owner_, owner_->frobenius_idx(idx_, r)}; }

FieldElement FieldElement::conj() const {
    if (owner_->extension_degree() % 2 != 0)
        throw std::invalid_argument("conjugation requires even extension degree");
    return frobenius(owner_->extension_degree() / 2);
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    if (!owner_ || !rhs.owner_) return owner_ == rhs.owner_ && idx_ == rhs.idx_;
    return owner_->same_as(*rhs.owner_) && idx_ == rhs.idx_;
}

std::string FieldElement::str() const {
    if (idx_ == 0) return "0";
    if (idx_ == 1) return "1";
    const auto& f = *owner_;
    // prime-subfield values read as plain integers
    if (idx_ < f.characteristic()) return std::to_string(idx_);
    if (f.extension_degree() == 1) return std::to_string(idx_);
    if (auto k = f.discrete_log(*this)) {
        if (*k == 1) return f.generator_symbol();
        return f.generator_symbol() + "^" + std::to_string(*k);
    }
    // tuple form: c0+c1*w+c2*w^2+...
    std::ostringstream os;
    auto cs = coeffs();
    bool first = true;
    for (size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << cs[i];
        } else {
            if (cs[i] != 1) os << cs[i] << "*";
            os << f.generator_symbol();
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.str(); }

uint32_t automorphism_order(const Field& field, uint32_t r) {
    uint32_t t = field.extension_degree();
    uint32_t rr = r % t;
    if (rr == 0) return 1;
    return t / std::gcd(t, rr);
}

std::vector<FieldElement> fixed_subfield(const FieldPtr& field, uint32_t r) {
    std::vector<FieldElement> out;
    for (uint64_t a = 0; a < field->size(); ++a)
        if (field->frobenius_idx(a, r) == a) out.push_back(field->from_index(a));
    return out;
}

}  // namespace skewlcd
