// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewlcd/grammar.hpp"

using namespace skewlcd;

TEST_CASE("field spec strings") {
    auto F9 = parse_field("GF(3^2; 2,2,1)");
    CHECK(F9->size() == 9);
    CHECK(field_spec(*F9) == "GF(3^2; 2,2,1)");

    auto F9d = parse_field("GF(3^2)");
    CHECK(F9d->modulus() == std::vector<uint32_t>{2, 2, 1});

    auto F5 = parse_field("GF(5)");
    CHECK(F5->size() == 5);
    CHECK(field_spec(*F5) == "GF(5)");

    CHECK(parse_field(" GF( 2^4 ; 1,1,0,0,1 ) ")->size() == 16);

    CHECK_THROWS_AS(parse_field("GF[3]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("GF(6)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("GF(2^2; 1,0,1)"), std::invalid_argument);  // reducible
}

TEST_CASE("element grammar") {
    auto F16 = parse_field("GF(2^4)");
    CHECK(parse_element(F16, "0") == F16->zero());
    CHECK(parse_element(F16, "1") == F16->one());
    CHECK(parse_element(F16, "w") == F16->generator());
    CHECK(parse_element(F16, "w^5") == F16->generator_power(5));
    CHECK(parse_element(F16, "1+w") == F16->one() + F16->generator());

    auto F9 = parse_field("GF(3^2)");
    CHECK(parse_element(F9, "2") == F9->from_int(2));
    CHECK(parse_element(F9, "-1") == -F9->one());
    CHECK(parse_element(F9, "2*w") == F9->from_int(2) * F9->generator());
    CHECK(parse_element(F9, "1+2*w") == F9->one() + F9->from_int(2) * F9->generator());
    CHECK(parse_element(F9, "w^8") == F9->one());

    CHECK_THROWS_AS(parse_element(F9, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(F9, "q^2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(F9, "w^"), std::invalid_argument);
}

TEST_CASE("element round trip on every element") {
    for (auto spec : {"GF(2^4)", "GF(3^2)", "GF(2^2)", "GF(5^2; 3,0,1)", "GF(7)"}) {
        auto f = parse_field(spec);
        for (uint64_t i = 0; i < f->size(); ++i) {
            auto e = f->from_index(i);
            CHECK(parse_element(f, e.str()) == e);
        }
    }
}

TEST_CASE("polynomial grammar") {
    auto F16 = parse_field("GF(2^4)");
    auto g = parse_poly(F16, 2, "x^2+w*x+w^6");
    CHECK(g.degree() == 2);
    CHECK(g.coeff(0) == F16->generator_power(6));
    CHECK(g.coeff(1) == F16->generator());
    CHECK(g.coeff(2) == F16->one());
    CHECK(g.str() == "x^2+w*x+w^6");

    // any term order, repeated terms summed, minus accepted
    CHECK(parse_poly(F16, 2, "w^6+x^2+w*x") == g);
    auto F9 = parse_field("GF(3^2)");
    CHECK(parse_poly(F9, 1, "x^10-1") == SkewPoly::binomial(10, F9->one(), 1));
    CHECK(parse_poly(F9, 1, "x^4+2*x^2+w*x+w^2").str() == "x^4+2*x^2+w*x+w^2");
    CHECK(parse_poly(F9, 1, "0").is_zero());
    CHECK(parse_poly(F9, 1, "x+x+x").str() == "0");  // 3x = 0 in char 3

    // parenthesized tuple-form coefficients
    auto F25 = parse_field("GF(5^2; 3,0,1)");
    auto h = parse_poly(F25, 1, "(1+2*w)*x^2+3");
    CHECK(h.coeff(2) == parse_element(F25, "1+2*w"));
    CHECK(parse_poly(F25, 1, h.str()) == h);

    CHECK_THROWS_AS(parse_poly(F9, 1, "x^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(F9, 1, "x^2y"), std::invalid_argument);
}

TEST_CASE("polynomial round trip on random polynomials") {
    std::mt19937_64 rng(42);
    for (auto spec : {"GF(2^4)", "GF(3^2)", "GF(5^2; 3,0,1)"}) {
        auto f = parse_field(spec);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<FieldElement> cs;
            const size_t deg = rng() % 7;
            for (size_t i = 0; i <= deg; ++i) cs.push_back(f->from_index(rng() % f->size()));
            SkewPoly p(f, 1, cs);
            CHECK(parse_poly(f, 1, p.str()) == p);
        }
    }
}

TEST_CASE("ring element grammar") {
    auto F9 = parse_field("GF(3^2)");
    auto v = RingElement::v(F9);
    CHECK(parse_ring_element(F9, "v") == v);
    CHECK(parse_ring_element(F9, "1+v") == RingElement::one(F9) + v);
    CHECK(parse_ring_element(F9, "w^3+v*w") ==
          RingElement(F9->generator_power(3), F9->generator()));
    CHECK(parse_ring_element(F9, "1-2*v") == RingElement(F9->one(), F9->from_int(-2)));
    CHECK(parse_ring_element(F9, "1-2v") == RingElement(F9->one(), F9->from_int(-2)));
    CHECK(parse_ring_element(F9, "(1+w)+v*(2+w)") ==
          RingElement(F9->one() + F9->generator(), F9->from_int(2) + F9->generator()));

    // emission round trip
    for (uint64_t ai = 0; ai < 9; ++ai)
        for (uint64_t bi = 0; bi < 9; ++bi) {
            RingElement x(F9->from_index(ai), F9->from_index(bi));
            CHECK(parse_ring_element(F9, x.str()) == x);
        }
}
