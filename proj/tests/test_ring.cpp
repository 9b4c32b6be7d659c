// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "skewlcd/grammar.hpp"
#include "skewlcd/ring.hpp"

using namespace skewlcd;

namespace {

FieldPtr f9() { return Field::with_default_modulus(3, 2); }
FieldPtr f4() { return Field::with_default_modulus(2, 2); }

RingElement random_ring(const FieldPtr& f, std::mt19937_64& rng) {
    return {f->from_index(rng() % f->size()), f->from_index(rng() % f->size())};
}

RVector random_rvector(const FieldPtr& f, uint32_t n, std::mt19937_64& rng) {
    RVector out;
    for (uint32_t i = 0; i < n; ++i) out.push_back(random_ring(f, rng));
    return out;
}

// all distinct codewords of the R-span of the stacked generator rows,
// grown one generator at a time (no CRT structure assumed)
std::set<std::vector<uint64_t>> r_span(const RSkewCode& code) {
    const auto& field = code.field();
    const uint32_t n = code.length();
    auto key = [n](const RVector& v) {
        std::vector<uint64_t> k;
        k.reserve(2 * n);
        for (const auto& e : v) {
            k.push_back(e.a().index());
            k.push_back(e.b().index());
        }
        return k;
    };
    std::set<std::vector<uint64_t>> span;
    span.insert(key(RVector(n, RingElement::zero(field))));
    std::vector<RVector> current;
    current.push_back(RVector(n, RingElement::zero(field)));
    for (const auto& row : code.stacked_generator()) {
        std::vector<RVector> next;
        std::set<std::vector<uint64_t>> seen;
        for (const auto& base : current) {
            for (uint64_t ai = 0; ai < field->size(); ++ai)
                for (uint64_t bi = 0; bi < field->size(); ++bi) {
                    const RingElement scalar(field->from_index(ai), field->from_index(bi));
                    RVector word = base;
                    for (uint32_t j = 0; j < n; ++j) word[j] = word[j] + scalar * row[j];
                    auto k = key(word);
                    if (seen.insert(k).second) next.push_back(std::move(word));
                }
        }
        current = std::move(next);
    }
    std::set<std::vector<uint64_t>> out;
    for (const auto& w : current) out.insert(key(w));
    return out;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
    auto F = f9();
    const auto v = RingElement::v(F);
    const auto omv = RingElement::one_minus_v(F);
    CHECK(v * v == v);
    CHECK(omv * omv == omv);
    CHECK((v * omv).is_zero());
    CHECK(v + omv == RingElement::one(F));

    // (1-2v)^2 = 1
    const auto lam = parse_ring_element(F, "1-2v");
    CHECK(lam * lam == RingElement::one(F));

    CHECK(v.is_unit() == false);
    CHECK(omv.is_unit() == false);
    CHECK(lam.is_unit());
    CHECK(lam.inverse() == lam);
    CHECK_THROWS_AS(v.inverse(), std::invalid_argument);
}

TEST_CASE("crt split and join") {
    auto F = f9();
    const auto v = RingElement::v(F);
    CHECK(v.crt_split() == std::pair{F->one(), F->zero()});

    const auto lam = parse_ring_element(F, "1-2v");
    CHECK(lam.crt_split() == std::pair{-F->one(), F->one()});

    std::mt19937_64 rng(20260819);
    for (auto field : {f9(), f4()}) {
        for (int trial = 0; trial < 1000; ++trial) {
            const auto x = random_ring(field, rng);
            const auto y = random_ring(field, rng);
            auto [ux, zx] = x.crt_split();
            auto [uy, zy] = y.crt_split();
            CHECK(RingElement::crt_join(ux, zx) == x);
            auto [us, zs] = (x + y).crt_split();
            CHECK(us == ux + uy);
            CHECK(zs == zx + zy);
            auto [um, zm] = (x * y).crt_split();
            CHECK(um == ux * uy);
            CHECK(zm == zx * zy);
            CHECK(x.is_unit() == (!ux.is_zero() && !zx.is_zero()));
        }
    }
}

TEST_CASE("r_code construction") {
    auto F = f9();
    SUBCASE("full space") {
        const auto code = r_code(F, 1, 4, F->one(), F->zero(), SkewPoly::one(F, 1),
                                 SkewPoly::one(F, 1));
        CHECK(code.cardinality_exponent() == 8);  // q^{2n}
        CHECK(code.gray_image() == LinearCode::full_space(F, 8));
    }
    SUBCASE("the Euclidean LCD cyclic example") {
        const auto code = r_code(F, 1, 10, F->one(), F->zero(), parse_poly(F, 1, "x^4+w*x^2+1"),
                                 parse_poly(F, 1, "x^6+w^7*x^4+w^3*x^2+2"));
        CHECK(code.cardinality_exponent() == 2 * 10 - 4 - 6);
        CHECK(r_is_lcd(code, Inner::euclidean));
    }
    SUBCASE("divisibility is enforced per component") {
        CHECK_THROWS_AS(r_code(F, 1, 10, F->one(), F->zero(), parse_poly(F, 1, "x+w"),
                               SkewPoly::one(F, 1)),
                        std::invalid_argument);
        // x^6+w*x^4+w*x^2+1 divides x^10+1, not x^10-1
        CHECK_THROWS_AS(r_code(F, 1, 10, F->one(), F->zero(),
                               parse_poly(F, 1, "x^6+w*x^4+w*x^2+1"), SkewPoly::one(F, 1)),
                        std::invalid_argument);
    }
    SUBCASE("lambda must be a unit") {
        CHECK_THROWS_AS(r_code(F, 1, 4, F->zero(), F->one(), SkewPoly::one(F, 1),
                               SkewPoly::one(F, 1)),
                        std::invalid_argument);
    }
    SUBCASE("1-2v splits into a negacyclic and a cyclic component") {
        // alpha = 1, beta = -2: C1 gets lambda = alpha+beta = -1
        const auto code = r_code(F, 1, 10, F->one(), F->from_int(-2),
                                 parse_poly(F, 1, "x^6+w*x^4+w*x^2+1"),
                                 parse_poly(F, 1, "x^4+w*x^2+1"));
        CHECK(code.c1().modulus().lambda == -F->one());
        CHECK(code.c2().modulus().lambda == F->one());
        CHECK(r_is_lcd(code, Inner::euclidean));
    }
}

TEST_CASE("gray map basics") {
    auto F = f9();
    SUBCASE("per-coordinate images") {
        RVector x = {RingElement::v(F)};
        auto y = gray_map(x);
        REQUIRE(y.size() == 2);
        CHECK(y[0] == F->zero());
        CHECK(y[1] == F->one());

        RVector lam = {parse_ring_element(F, "1-2v")};
        auto z = gray_map(lam);
        CHECK(z[0] == F->one());
        CHECK(z[1] == -F->one());
        CHECK(lee_weight(lam) == 2);
    }
    SUBCASE("vc1 + (1-v)c2 maps to (c2 | c1)") {
        std::mt19937_64 rng(20260820);
        const auto v = RingElement::v(F);
        const auto omv = RingElement::one_minus_v(F);
        for (int trial = 0; trial < 200; ++trial) {
            const uint32_t n = 1 + rng() % 8;
            RVector x;
            std::vector<FieldElement> c1, c2;
            for (uint32_t i = 0; i < n; ++i) {
                c1.push_back(F->from_index(rng() % 9));
                c2.push_back(F->from_index(rng() % 9));
                x.push_back(v * RingElement::from_field(c1.back()) +
                            omv * RingElement::from_field(c2.back()));
            }
            const auto y = gray_map(x);
            for (uint32_t i = 0; i < n; ++i) {
                CHECK(y[i] == c2[i]);
                CHECK(y[n + i] == c1[i]);
            }
        }
    }
    SUBCASE("linear, bijective, and an isometry") {
        std::mt19937_64 rng(20260821);
        for (auto field : {f9(), f4()}) {
            for (int trial = 0; trial < 1000; ++trial) {
                const uint32_t n = 1 + rng() % 6;
                const auto x = random_rvector(field, n, rng);
                const auto y = random_rvector(field, n, rng);
                const auto c = field->from_index(rng() % field->size());
                // F_q-linearity
                RVector xpy;
                RVector cx;
                for (uint32_t i = 0; i < n; ++i) {
                    xpy.push_back(x[i] + y[i]);
                    cx.push_back(RingElement::from_field(c) * x[i]);
                }
                auto gx = gray_map(x), gy = gray_map(y);
                auto gsum = gray_map(xpy);
                auto gcx = gray_map(cx);
                for (uint32_t i = 0; i < 2 * n; ++i) {
                    CHECK(gsum[i] == gx[i] + gy[i]);
                    CHECK(gcx[i] == c * gx[i]);
                }
                // bijective
                CHECK(gray_unmap(field, gx) == x);
                // Lee/Hamming isometry
                uint32_t wt_h = 0;
                for (const auto& e : gx) wt_h += !e.is_zero();
                CHECK(lee_weight(x) == wt_h);
            }
        }
    }
    SUBCASE("lee weight of zero is zero") {
        CHECK(lee_weight(RVector(5, RingElement::zero(F))) == 0);
    }
}

TEST_CASE("gray image generator matrix is the component block diagonal") {
    auto F = f9();
    const auto code = r_code(F, 1, 10, F->one(), F->zero(), parse_poly(F, 1, "x^4+w*x^2+1"),
                             parse_poly(F, 1, "x^6+w^7*x^4+w^3*x^2+2"));
    const Matrix m = code.gray_generator_matrix();
    CHECK(m.rows() == code.cardinality_exponent());
    CHECK(m.cols() == 20);
    const Matrix& g1 = code.c1().code().generator_matrix();
    const Matrix& g2 = code.c2().code().generator_matrix();
    for (size_t i = 0; i < g2.rows(); ++i)
        for (size_t j = 0; j < 10; ++j) {
            CHECK(m.at(i, j) == g2.at(i, j));
            CHECK(m.at(g2.rows() + i >= m.rows() ? 0 : g2.rows(), 10 + j).field() != nullptr);
        }
    for (size_t i = 0; i < g1.rows(); ++i)
        for (size_t j = 0; j < 10; ++j) CHECK(m.at(g2.rows() + i, 10 + j) == g1.at(i, j));
    // off-diagonal blocks vanish
    for (size_t i = 0; i < g2.rows(); ++i)
        for (size_t j = 10; j < 20; ++j) CHECK(m.at(i, j).is_zero());
    for (size_t i = g2.rows(); i < m.rows(); ++i)
        for (size_t j = 0; j < 10; ++j) CHECK(m.at(i, j).is_zero());
}

TEST_CASE("cardinality law by exhaustive span generation") {
    auto F = f4();
    for (uint32_t n : {2u, 4u}) {
        const ConstaModulus m1 = ConstaModulus::create(F, 1, n, F->one());
        std::vector<SkewPoly> divisors;
        for (uint32_t d = 0; d <= n; ++d)
            for (const auto& g : right_divisors(m1, d)) divisors.push_back(g);
        for (const auto& g1 : divisors) {
            for (const auto& g2 : divisors) {
                const auto code = r_code(F, 1, n, F->one(), F->zero(), g1, g2);
                const auto span = r_span(code);
                uint64_t expect = 1;
                for (uint32_t i = 0; i < code.cardinality_exponent(); ++i) expect *= 4;
                CHECK(span.size() == expect);
            }
        }
    }
}

TEST_CASE("R-code membership and module closure") {
    auto F = f9();
    std::mt19937_64 rng(20260822);
    const auto code = r_code(F, 1, 10, F->one(), F->zero(), parse_poly(F, 1, "x^4+w*x^2+1"),
                             parse_poly(F, 1, "x^6+w^7*x^4+w^3*x^2+2"));
    const auto rows = code.stacked_generator();
    for (const auto& row : rows) CHECK(code.contains(row));
    // R-combinations of stacked rows stay in the code, and codewords stay
    // under scalar multiplication
    for (int trial = 0; trial < 200; ++trial) {
        RVector word(code.length(), RingElement::zero(F));
        for (const auto& row : rows) {
            const auto scalar = random_ring(F, rng);
            for (size_t j = 0; j < word.size(); ++j) word[j] = word[j] + scalar * row[j];
        }
        const auto scalar = random_ring(F, rng);
        RVector scaled;
        for (const auto& e : word) scaled.push_back(scalar * e);
        CHECK(code.contains(scaled));
    }
}

TEST_CASE("r_is_lcd worked examples") {
    auto F = f9();
    SUBCASE("full components") {
        const auto code = r_code(F, 1, 4, F->one(), F->zero(), SkewPoly::one(F, 1),
                                 SkewPoly::one(F, 1));
        CHECK(r_is_lcd(code, Inner::euclidean));
        CHECK(r_is_lcd(code, Inner::hermitian));
    }
    SUBCASE("euclidean cyclic example") {
        const auto code = r_code(F, 1, 10, F->one(), F->zero(), parse_poly(F, 1, "x^4+w*x^2+1"),
                                 parse_poly(F, 1, "x^6+w^7*x^4+w^3*x^2+2"));
        CHECK(r_is_lcd(code, Inner::euclidean));
    }
    SUBCASE("hermitian negacyclic example") {
        const auto code = r_code(F, 1, 10, -F->one(), F->zero(),
                                 parse_poly(F, 1, "x^6+2*x^4+w^2*x^3+w^5*x^2+w^2*x+w^6"),
                                 parse_poly(F, 1, "x^6+2*x^4+x^3+w^7*x^2+x+w^2"));
        CHECK(r_is_lcd(code, Inner::hermitian));
    }
    SUBCASE("a non-LCD pair is rejected by all criteria at once") {
        // x+w^2 divides x^10-1 but fails the gcrd criterion
        const auto code = r_code(F, 1, 10, F->one(), F->zero(), parse_poly(F, 1, "x+w^2"),
                                 parse_poly(F, 1, "x^4+w*x^2+1"));
        CHECK_FALSE(r_is_lcd(code, Inner::euclidean));
        CHECK_FALSE(code.gray_image().is_lcd_matrix(Inner::euclidean));
    }
}

TEST_CASE("r_dual") {
    auto F = f9();
    SUBCASE("dual of the full space is zero") {
        const auto code = r_code(F, 1, 4, F->one(), F->zero(), SkewPoly::one(F, 1),
                                 SkewPoly::one(F, 1));
        const auto dual = r_dual(code, Inner::euclidean);
        CHECK(dual.cardinality_exponent() == 0);
    }
    SUBCASE("component duals are the reciprocal cofactors, matrix-checked") {
        const auto code = r_code(F, 1, 10, F->one(), F->zero(), parse_poly(F, 1, "x^4+w*x^2+1"),
                                 parse_poly(F, 1, "x^6+w^7*x^4+w^3*x^2+2"));
        for (auto inner : {Inner::euclidean, Inner::hermitian}) {
            const auto dual = r_dual(code, inner);
            CHECK(dual.c1().code() == code.c1().code().dual(inner));
            CHECK(dual.c2().code() == code.c2().code().dual(inner));
            // Phi(C-dual) = Phi(C)-dual
            CHECK(dual.gray_image() == code.gray_image().dual(inner));
        }
    }
    SUBCASE("Phi commutes with duality on random divisor pairs over GF(4)") {
        auto F4 = f4();
        std::mt19937_64 rng(20260823);
        for (uint32_t n : {2u, 4u, 6u}) {
            const ConstaModulus m = ConstaModulus::create(F4, 1, n, F4->one());
            std::vector<SkewPoly> divisors;
            for (uint32_t d = 0; d <= n; ++d)
                for (const auto& g : right_divisors(m, d)) divisors.push_back(g);
            for (int trial = 0; trial < 70; ++trial) {
                const auto& g1 = divisors[rng() % divisors.size()];
                const auto& g2 = divisors[rng() % divisors.size()];
                const auto code = r_code(F4, 1, n, F4->one(), F4->zero(), g1, g2);
                for (auto inner : {Inner::euclidean, Inner::hermitian}) {
                    const auto dual = r_dual(code, inner);
                    CHECK(dual.gray_image() == code.gray_image().dual(inner));
                }
            }
        }
    }
}

TEST_CASE("gray parameters") {
    auto F4 = f4();
    SUBCASE("the [12,10,2] row") {
        const auto code = r_code(F4, 1, 6, F4->one(), F4->zero(), parse_poly(F4, 1, "x+w^2"),
                                 parse_poly(F4, 1, "x+w"));
        const auto params = gray_params(code, 2);
        CHECK(params.n2 == 12);
        CHECK(params.k == 10);
        CHECK(params.d.exact);
        CHECK(params.d.value == 2);
    }
    SUBCASE("the [36,33,2] row") {
        const auto code = r_code(F4, 1, 18, F4->one(), F4->zero(), parse_poly(F4, 1, "x+w"),
                                 parse_poly(F4, 1, "x^2+w*x+1"));
        const auto params = gray_params(code, 2);
        CHECK(params.n2 == 36);
        CHECK(params.k == 33);
        CHECK(params.d.exact);
        CHECK(params.d.value == 2);
        CHECK(code.gray_image().is_lcd_matrix(Inner::euclidean));
    }
    SUBCASE("equal components give two disjoint copies") {
        const auto code = r_code(F4, 1, 6, F4->one(), F4->zero(), parse_poly(F4, 1, "x+w"),
                                 parse_poly(F4, 1, "x+w"));
        const auto params = gray_params(code, 3);
        CHECK(params.n2 == 12);
        CHECK(params.k == 10);
        const auto d1 = min_distance_bounded(code.c1().code(), 3);
        CHECK(params.d.value == d1.value);
    }
}

TEST_CASE("gray image of an R skew cyclic code is quasi-cyclic") {
    auto F4 = f4();
    for (uint32_t n : {2u, 4u, 6u}) {
        const ConstaModulus m = ConstaModulus::create(F4, 1, n, F4->one());
        std::vector<SkewPoly> divisors;
        for (uint32_t d = 0; d + 1 <= n; ++d)
            for (const auto& g : right_divisors(m, d)) divisors.push_back(g);
        for (const auto& g1 : divisors)
            for (const auto& g2 : divisors) {
                const auto code = r_code(F4, 1, n, F4->one(), F4->zero(), g1, g2);
                const auto image = code.gray_image();
                const Matrix& g = image.generator_matrix();
                for (size_t i = 0; i < g.rows(); ++i)
                    CHECK(image.contains(quasi_cyclic_shift(g.row(i), 1, F4->one())));
            }
    }
}

TEST_CASE("hermitian conjugation on R fixes v") {
    auto F = f9();
    const auto v = RingElement::v(F);
    CHECK(v.conj() == v);
    const auto x = parse_ring_element(F, "w+v*w^3");
    CHECK(x.conj() == parse_ring_element(F, "w^3+v*w"));
    CHECK(x.conj().conj() == x);
}
