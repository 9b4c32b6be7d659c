// SPDX-License-Identifier: Apache-2.0

#include "skewlcd/census.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewlcd/parallel.hpp"

namespace skewlcd {

namespace {

BigCount big_pow(BigCount base, uint64_t e) {
    BigCount r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

SkewPoly monic_from_index(const FieldPtr& field, uint32_t r, uint32_t d, uint64_t idx) {
    std::vector<FieldElement> cs(d + 1, field->zero());
    cs[d] = field->one();
    for (uint32_t j = 0; j < d; ++j) {
        cs[j] = field->from_index(idx % field->size());
        idx /= field->size();
    }
    return SkewPoly(field, r, std::move(cs));
}

}  // namespace

std::vector<std::pair<SkewPoly, uint32_t>> factor_over_prime_field(const SkewPoly& f_in) {
    const auto& field = f_in.field();
    if (field->extension_degree() != 1)
        throw std::invalid_argument("factorization is implemented over prime fields only");
    if (f_in.is_zero() || !f_in.is_monic())
        throw std::invalid_argument("factorization expects a monic polynomial");
    const uint64_t p = field->size();
    SkewPoly f = f_in;
    std::vector<std::pair<SkewPoly, uint32_t>> out;
    for (uint32_t d = 1; 2 * static_cast<int64_t>(d) <= f.degree(); ++d) {
        uint64_t space = 1;
        for (uint32_t i = 0; i < d; ++i) space *= p;
        for (uint64_t idx = 0; idx < space && 2 * static_cast<int64_t>(d) <= f.degree(); ++idx) {
            const SkewPoly g = monic_from_index(field, f.r(), d, idx);
            uint32_t mult = 0;
            while (true) {
                auto dm = f.right_divmod(g);
                if (!dm.remainder.is_zero()) break;
                f = dm.quotient;
                ++mult;
            }
            if (mult) out.emplace_back(g, mult);
        }
    }
    if (f.degree() >= 1) out.emplace_back(f, 1);
    return out;
}

SkewPoly reciprocal_monic(const SkewPoly& f) {
    if (f.is_zero() || f.coeff(0).is_zero())
        throw std::invalid_argument("reciprocal needs a nonzero constant term");
    std::vector<FieldElement> rev(f.coeffs().rbegin(), f.coeffs().rend());
    return SkewPoly(f.field(), f.r(), std::move(rev)).monic();
}

CensusInput CensusInput::derive(uint32_t p, uint32_t n) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("census length must be even and positive");
    CensusInput in;
    in.p = p;
    in.n = n;
    in.k = n / 2;
    in.s = 0;
    in.t_odd = in.k;
    while (in.t_odd % p == 0) {
        in.t_odd /= p;
        ++in.s;
    }
    return in;
}

FactorClasses factor_classes(uint32_t p, uint32_t k, bool plus_modulus) {
    const CensusInput in = CensusInput::derive(p, 2 * k);
    const FieldPtr fp = Field::create(p, 1, {0, 1});
    FactorClasses out;
    out.p = p;
    out.plus_modulus = plus_modulus;
    out.k = k;
    out.s = in.s;
    out.t_odd = in.t_odd;
    out.multiplicity = 1;
    for (uint32_t i = 0; i < in.s; ++i) out.multiplicity *= p;

    // y^k -/+ 1 = (y^t_odd -/+ 1)^{p^s} in characteristic p; the reduced
    // modulus is squarefree, so distinct factors all carry multiplicity p^s
    const FieldElement lam = plus_modulus ? -fp->one() : fp->one();
    const SkewPoly reduced = SkewPoly::binomial(in.t_odd, lam, 1);
    auto factors = factor_over_prime_field(reduced);

    std::vector<SkewPoly> seen_pair_halves;
    for (const auto& [f, mult] : factors) {
        if (mult != 1) throw std::logic_error("reduced census modulus is not squarefree");
        const SkewPoly rec = reciprocal_monic(f);
        if (f == rec) {
            if (f.degree() == 1)
                out.linear_self_reciprocal.push_back(f);
            else
                out.self_reciprocal_irreducible.push_back(f);
        } else {
            bool already = false;
            for (const auto& h : seen_pair_halves)
                if (h == f) already = true;
            if (!already) {
                seen_pair_halves.push_back(f);
                seen_pair_halves.push_back(rec);
                out.reciprocal_pairs.emplace_back(f, rec);
            }
        }
    }
    return out;
}

SkewPoly FactorClasses::reconstruct() const {
    const FieldPtr fp = Field::create(p, 1, {0, 1});
    SkewPoly prod = SkewPoly::one(fp, 1);
    for (const auto& f : linear_self_reciprocal) prod = prod * f;
    for (const auto& f : self_reciprocal_irreducible) prod = prod * f;
    for (const auto& [f, g] : reciprocal_pairs) prod = prod * f * g;
    SkewPoly out = SkewPoly::one(fp, 1);
    for (uint64_t i = 0; i < multiplicity; ++i) out = out * prod;
    return out;
}

BigCount census_base_prefactor(uint32_t which, uint32_t p, uint32_t k, uint32_t s) {
    uint64_t ps = 1;
    for (uint32_t i = 0; i < s; ++i) ps *= p;
    const bool k_even = (k % 2 == 0);
    switch (which) {
        case 1:
            if (p == 2) return big_pow(2, ps);  // 2^{2^s}
            if (k_even) return big_pow(BigCount(p), ps - 1) * big_pow(BigCount(p), ps - 1) * (BigCount(p) * p - 1);
            return big_pow(BigCount(p), ps - 1) * (BigCount(p) - (((p + 1) / 2) % 2 == 0 ? 1 : -1));
        case 2:
            if (p == 2 || k_even) return 0;
            return big_pow(BigCount(p), ps - 1) * (BigCount(p) + 1);
        case 3:
            if (k_even) return 1;
            return big_pow(BigCount(p), ps - 1) * (BigCount(p) - (((p - 1) / 2) % 2 == 0 ? 1 : -1));
        case 4:
            return k_even ? 1 : 0;
        default:
            throw std::invalid_argument("unsupported census variant");
    }
}

namespace {

// product over F_ir and F_red of the per-factor counts; d is the degree of
// the class representative in y = x^2
BigCount class_product(const FactorClasses& classes, bool squared) {
    const uint32_t p = classes.p;
    const uint64_t ps = classes.multiplicity;
    BigCount total = 1;
    for (const auto& f : classes.self_reciprocal_irreducible) {
        const uint64_t d = static_cast<uint64_t>(f.degree());
        if (d % 2 != 0) throw std::logic_error("self-reciprocal irreducible of odd degree > 1");
        const BigCount factor = (big_pow(BigCount(p), d) - big_pow(BigCount(p), d / 2)) *
                                big_pow(BigCount(p), d * (ps - 1));
        total *= squared ? factor * factor : factor;
    }
    for (const auto& [f, g] : classes.reciprocal_pairs) {
        const uint64_t d = static_cast<uint64_t>(f.degree() + g.degree());
        const BigCount factor =
            (1 + big_pow(BigCount(p), d / 2)) * big_pow(BigCount(p), (2 * ps - 1) * d / 2);
        total *= squared ? factor * factor : factor;
    }
    return total;
}

uint32_t delegated_variant_index(uint32_t p, CensusVariant v) {
    // x^n + 1 = x^n - 1 in characteristic 2: negacyclic counts are cyclic counts
    switch (v) {
        case CensusVariant::euclidean_cyclic: return 1;
        case CensusVariant::hermitian_cyclic: return 2;
        case CensusVariant::euclidean_negacyclic: return p == 2 ? 1 : 3;
        case CensusVariant::hermitian_negacyclic: return p == 2 ? 2 : 4;
    }
    throw std::invalid_argument("unsupported census variant");
}

}  // namespace

BigCount base_count(uint32_t p, uint32_t n, CensusVariant variant) {
    const CensusInput in = CensusInput::derive(p, n);
    const uint32_t which = delegated_variant_index(p, variant);
    const bool plus_modulus = variant_negacyclic(variant) && p != 2;
    const FactorClasses classes = factor_classes(p, in.k, plus_modulus);
    return census_base_prefactor(which, p, in.k, in.s) * class_product(classes, false);
}

BigCount r_count(uint32_t p, uint32_t n, RingLambda lambda, Inner inner) {
    const CensusInput in = CensusInput::derive(p, n);
    if (lambda == RingLambda::one_minus_two_v && p == 2)
        throw std::invalid_argument("lambda = 1-2v collapses to 1 in characteristic 2");
    const FactorClasses minus = factor_classes(p, in.k, false);
    const FactorClasses plus = factor_classes(p, in.k, p != 2);
    const uint32_t n1 = delegated_variant_index(p, CensusVariant::euclidean_cyclic);
    const uint32_t n2 = delegated_variant_index(p, CensusVariant::hermitian_cyclic);
    const uint32_t n3 = delegated_variant_index(p, CensusVariant::euclidean_negacyclic);
    const uint32_t n4 = delegated_variant_index(p, CensusVariant::hermitian_negacyclic);
    auto N = [&](uint32_t which) { return census_base_prefactor(which, p, in.k, in.s); };

    if (inner == Inner::euclidean) {
        switch (lambda) {
            case RingLambda::one:
                return N(n1) * N(n1) * class_product(minus, true);
            case RingLambda::minus_one:
                return N(n3) * N(n3) * class_product(plus, true);
            case RingLambda::one_minus_two_v:
                return N(n1) * N(n3) * class_product(minus, false) * class_product(plus, false);
        }
    } else {
        switch (lambda) {
            case RingLambda::one:
                return N(n2) * N(n2) * class_product(minus, true);
            case RingLambda::minus_one:
                // prefactor printed unsquared; N_4 is 0 or 1 so this equals the square
                return N(n4) * class_product(plus, true);
            case RingLambda::one_minus_two_v:
                return N(n4) * N(n2) * class_product(plus, false) * class_product(minus, false);
        }
    }
    throw std::invalid_argument("unsupported census variant");
}

FieldPtr census_field(uint32_t p) { return Field::with_default_modulus(p, 2); }

uint64_t brute_force_census(uint32_t p, uint32_t n, CensusVariant variant, uint64_t budget,
                            unsigned threads) {
    const CensusInput in = CensusInput::derive(p, n);
    const FieldPtr field = census_field(p);
    const uint32_t r = 1;
    uint64_t space = 1;
    for (uint32_t i = 0; i < in.k; ++i) {
        if (space > budget / field->size())
            throw std::invalid_argument("census oracle budget exceeded");
        space *= field->size();
    }
    if (space > budget) throw std::invalid_argument("census oracle budget exceeded");

    const FieldElement lam = variant_negacyclic(variant) ? -field->one() : field->one();
    const ConstaModulus M = ConstaModulus::create(field, r, n, lam);
    const bool herm = variant_inner(variant) == Inner::hermitian;

    return parallel_count(space, threads, [&](uint64_t idx) {
        const SkewPoly g = monic_from_index(field, r, in.k, idx);
        auto dm = M.poly.right_divmod(g);
        if (!dm.remainder.is_zero()) return false;
        if (has_central_divisor(g)) return false;
        SkewPoly hnat = skew_reciprocal(dm.quotient);
        if (herm) hnat = conjugate(hnat);
        return gcrd(g, hnat).degree() == 0;
    });
}

BigCount brute_force_r_census(uint32_t p, uint32_t n, RingLambda lambda, Inner inner,
                              uint64_t budget, unsigned threads) {
    if (lambda == RingLambda::one_minus_two_v && p == 2)
        throw std::invalid_argument("lambda = 1-2v collapses to 1 in characteristic 2");
    const bool herm = inner == Inner::hermitian;
    const CensusVariant cyc = herm ? CensusVariant::hermitian_cyclic : CensusVariant::euclidean_cyclic;
    const CensusVariant nega =
        herm ? CensusVariant::hermitian_negacyclic : CensusVariant::euclidean_negacyclic;
    switch (lambda) {
        case RingLambda::one: {
            const BigCount c = brute_force_census(p, n, cyc, budget, threads);
            return c * c;
        }
        case RingLambda::minus_one: {
            const BigCount c = brute_force_census(p, n, nega, budget, threads);
            return c * c;
        }
        case RingLambda::one_minus_two_v: {
            // C_1 negacyclic (alpha+beta = -1), C_2 cyclic (alpha = 1)
            const BigCount c1 = brute_force_census(p, n, nega, budget, threads);
            const BigCount c2 = brute_force_census(p, n, cyc, budget, threads);
            return c1 * c2;
        }
    }
    throw std::invalid_argument("unsupported census variant");
}

}  // namespace skewlcd
