// SPDX-License-Identifier: Apache-2.0

#include "skewlcd/tables.hpp"

#include <algorithm>
#include <sstream>

#include "skewlcd/grammar.hpp"
#include "skewlcd/ring.hpp"

namespace skewlcd {

namespace {

struct ScaledRow {
    const char* delta;
    const char* generator;
};

constexpr ScaledRow kTable1[] = {
    {"w^2", "x^2+w^9*x+w"}, {"w^5", "x^2+w^6*x+w"}, {"w^8", "x^2+w^3*x+w"},
    {"w^11", "x^2+x+w"},    {"w^14", "x^2+w^12*x+w"},
};
constexpr const char* kTable1Base = "x^2+w*x+w^6";
constexpr const char* kTable1Lambda = "w^5";

constexpr ScaledRow kTable2[] = {
    {"1", "x+w^3"}, {"w^3", "x+w^6"}, {"w^6", "x+w^9"}, {"w^9", "x+w^12"}, {"w^12", "x+1"},
};
constexpr const char* kTable2Base = "x+w^3";
constexpr const char* kTable2Lambda = "1";

struct GrayRow {
    uint32_t n;
    const char* g1;
    const char* g2;
    uint32_t N, k, d;
    const char* note;
};

constexpr GrayRow kTable3[] = {
    {6, "x+w^2", "x+w", 12, 10, 2, ""},
    {10, "x+w^2", "x+w^2", 20, 18, 2, ""},
    {14, "x+w", "x^2+1", 28, 25, 2, ""},
    {14, "x+w", "x+w", 28, 26, 2, ""},
    {18, "x+w", "x^2+w*x+1", 36, 33, 2, "listed generators"},
    {18, "x+w^2", "x+w", 36, 34, 2, ""},
};
// the worked [36,33,2] example uses the conjugate generator pair
constexpr GrayRow kTable3Variant = {18, "x^2+w^2*x+1", "x+w^2", 36, 33, 2, "worked-example variant"};

struct Factorization {
    const char* left;
    const char* right;
};

constexpr Factorization kF16Products[] = {
    {"x^2+w*x+w^9", "x^2+w*x+w^6"},
    {"x^3+w^12*x^2+x+w^12", "x+w^3"},
};

constexpr Factorization kF9CyclicProducts[] = {
    {"x^4+w*x^2+1", "x^6+w^5*x^4+w*x^2+2"},
    {"x^4+w^3*x^2+1", "x^6+w^7*x^4+w^3*x^2+2"},
    {"x^4+2*x^2+w*x+w^2", "x^6+x^4+w^5*x^3+w^5*x^2+w*x+w^2"},
    {"x^4+2*x^2+w^5*x+w^6", "x^6+x^4+w*x^3+w^7*x^2+w^5*x+w^6"},
};

constexpr Factorization kF9NegacyclicProducts[] = {
    {"x^4+w^5*x^2+1", "x^6+w*x^4+w*x^2+1"},
    {"x^4+w^7*x^2+1", "x^6+w^3*x^4+w^3*x^2+1"},
    {"x^4+x^2+2*x+w^6", "x^6+2*x^4+x^3+w^7*x^2+x+w^2"},
    {"x^4+x^2+w^6*x+w^2", "x^6+2*x^4+w^2*x^3+w^5*x^2+w^2*x+w^6"},
};

struct LcdClaim {
    const char* name;
    int lambda;  // +1 or -1 (component values; beta = 0)
    const char* g1;
    const char* g2;
    Inner inner;
};

constexpr LcdClaim kF9LcdClaims[] = {
    {"euclidean cyclic LCD", +1, "x^4+w*x^2+1", "x^6+w^7*x^4+w^3*x^2+2", Inner::euclidean},
    {"hermitian cyclic LCD", +1, "x^4+2*x^2+w*x+w^2", "x^4+2*x^2+w^5*x+w^6", Inner::hermitian},
    {"euclidean negacyclic LCD", -1, "x^6+w*x^4+w*x^2+1", "x^6+w^3*x^4+w^3*x^2+1", Inner::euclidean},
    {"hermitian negacyclic LCD", -1, "x^6+2*x^4+w^2*x^3+w^5*x^2+w^2*x+w^6",
     "x^6+2*x^4+x^3+w^7*x^2+x+w^2", Inner::hermitian},
};

RowCheck scaled_row_check(const FieldPtr& field, uint32_t r, uint32_t n, const char* base,
                          const ScaledRow& row, int table_index) {
    const ConstaModulus cyclic = ConstaModulus::create(field, r, n, field->one());
    const SkewConstaCode base_code = from_generator_poly(cyclic, parse_poly(field, r, base));
    const FieldElement delta = parse_element(field, row.delta);
    const SkewConstaCode image = scale_equivalence(base_code, delta);
    RowCheck rc;
    rc.name = "table" + std::to_string(table_index) + " delta=" + std::string(row.delta);
    rc.expected = row.generator;
    rc.actual = image.generator().str();
    rc.pass = rc.actual == rc.expected;
    return rc;
}

RowCheck root_set_check(const FieldPtr& field, uint32_t r, uint32_t n, const char* lambda_str,
                        const ScaledRow* rows, size_t count, int table_index) {
    const FieldElement lambda = parse_element(field, lambda_str);
    auto roots = lambda_roots(field, r, n, lambda);
    std::vector<std::string> got;
    got.reserve(roots.size());
    for (const auto& d : roots) got.push_back(d.str());
    std::vector<std::string> want;
    for (size_t i = 0; i < count; ++i) want.push_back(rows[i].delta);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    auto join = [](const std::vector<std::string>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
        return s + "}";
    };
    RowCheck rc;
    rc.name = "table" + std::to_string(table_index) + " root set for lambda=" + lambda_str;
    rc.expected = join(want);
    rc.actual = join(got);
    rc.pass = rc.actual == rc.expected;
    return rc;
}

RowCheck gray_row_check(const FieldPtr& field, const GrayRow& row, unsigned threads) {
    RowCheck rc;
    std::ostringstream name;
    name << "gray [" << row.N << "," << row.k << "," << row.d << "] n=" << row.n << " g1=" << row.g1
         << " g2=" << row.g2;
    if (row.note[0]) name << " (" << row.note << ")";
    rc.name = name.str();
    std::ostringstream want;
    want << "[" << row.N << "," << row.k << "," << row.d << "] lcd=1";
    rc.expected = want.str();
    try {
        const RSkewCode code =
            r_code(field, 1, row.n, field->one(), field->zero(), parse_poly(field, 1, row.g1),
                   parse_poly(field, 1, row.g2));
        const GrayParams params = gray_params(code, 2, threads);
        const bool lcd = r_is_lcd(code, Inner::euclidean) &&
                         code.gray_image().is_lcd_matrix(Inner::euclidean);
        std::ostringstream got;
        got << params.str() << " lcd=" << (lcd ? 1 : 0);
        rc.actual = got.str();
        rc.pass = params.n2 == row.N && params.k == row.k && params.d.exact &&
                  params.d.value == row.d && lcd;
    } catch (const std::exception& e) {
        rc.actual = std::string("error: ") + e.what();
        rc.pass = false;
    }
    return rc;
}

RowCheck product_check(const FieldPtr& field, uint32_t r, uint32_t n, const FieldElement& lambda,
                       const Factorization& f, const std::string& label) {
    const SkewPoly left = parse_poly(field, r, f.left);
    const SkewPoly right = parse_poly(field, r, f.right);
    const SkewPoly modulus = SkewPoly::binomial(n, lambda, r);
    RowCheck rc;
    rc.name = label + ": (" + f.left + ")*(" + f.right + ")";
    rc.expected = modulus.str();
    const SkewPoly product = left * right;
    // the right factor must divide back out with zero remainder
    const auto dm = modulus.right_divmod(right);
    const bool recovered = dm.remainder.is_zero() && dm.quotient == left;
    rc.actual = product.str() + (recovered ? "" : " [cofactor not recovered]");
    rc.pass = product == modulus && recovered;
    return rc;
}

}  // namespace

std::vector<RowCheck> verify_table1() {
    const FieldPtr f16 = Field::with_default_modulus(2, 4);
    std::vector<RowCheck> out;
    out.push_back(root_set_check(f16, 2, 4, kTable1Lambda, kTable1, std::size(kTable1), 1));
    for (const auto& row : kTable1) out.push_back(scaled_row_check(f16, 2, 4, kTable1Base, row, 1));
    return out;
}

std::vector<RowCheck> verify_table2() {
    const FieldPtr f16 = Field::with_default_modulus(2, 4);
    std::vector<RowCheck> out;
    out.push_back(root_set_check(f16, 2, 4, kTable2Lambda, kTable2, std::size(kTable2), 2));
    for (const auto& row : kTable2) out.push_back(scaled_row_check(f16, 2, 4, kTable2Base, row, 2));
    return out;
}

std::vector<RowCheck> verify_table3(unsigned threads) {
    const FieldPtr f4 = Field::with_default_modulus(2, 2);
    std::vector<RowCheck> out;
    for (const auto& row : kTable3) out.push_back(gray_row_check(f4, row, threads));
    RowCheck variant = gray_row_check(f4, kTable3Variant, threads);
    // the two [36,33,2] generator records must validate independently; if
    // exactly one fails that is a source discrepancy, not a build failure
    const RowCheck& listed = out[4];
    if (listed.pass != variant.pass) {
        RowCheck note;
        note.name = "gray [36,33,2] variant discrepancy";
        note.expected = "both generator records valid";
        note.actual = std::string("only the ") + (listed.pass ? "listed" : "worked-example") +
                      " record validates";
        note.pass = true;  // reported, not fatal, while one record stands
        out.push_back(variant);
        out.push_back(note);
    } else {
        out.push_back(variant);
    }
    return out;
}

std::vector<RowCheck> verify_examples(unsigned threads) {
    std::vector<RowCheck> out;
    const FieldPtr f16 = Field::with_default_modulus(2, 4);
    for (const auto& f : kF16Products)
        out.push_back(product_check(f16, 2, 4, f16->one(), f, "x^4-1 over GF(16)"));

    const FieldPtr f9 = Field::with_default_modulus(3, 2);
    for (const auto& f : kF9CyclicProducts)
        out.push_back(product_check(f9, 1, 10, f9->one(), f, "x^10-1 over GF(9)"));
    for (const auto& f : kF9NegacyclicProducts)
        out.push_back(product_check(f9, 1, 10, -f9->one(), f, "x^10+1 over GF(9)"));

    for (const auto& claim : kF9LcdClaims) {
        RowCheck rc;
        rc.name = std::string("GF(9)+vGF(9) ") + claim.name;
        rc.expected = "lcd=1";
        try {
            const FieldElement alpha = claim.lambda > 0 ? f9->one() : -f9->one();
            const RSkewCode code = r_code(f9, 1, 10, alpha, f9->zero(),
                                          parse_poly(f9, 1, claim.g1), parse_poly(f9, 1, claim.g2));
            rc.actual = std::string("lcd=") + (r_is_lcd(code, claim.inner) ? "1" : "0");
            rc.pass = rc.actual == rc.expected;
        } catch (const std::exception& e) {
            rc.actual = std::string("error: ") + e.what();
        }
        out.push_back(rc);
    }

    // [36,33,2] quasi-cyclic worked example: parameters, LCD, and invariance
    // of the Gray image under the simultaneous two-block theta-shift
    {
        RowCheck rc;
        rc.name = "GF(4)+vGF(4) worked example [36,33,2]";
        rc.expected = "[36,33,2] lcd=1 quasi-shift-closed=1";
        try {
            const FieldPtr f4 = Field::with_default_modulus(2, 2);
            const RSkewCode code =
                r_code(f4, 1, 18, f4->one(), f4->zero(), parse_poly(f4, 1, kTable3Variant.g1),
                       parse_poly(f4, 1, kTable3Variant.g2));
            const GrayParams params = gray_params(code, 2, threads);
            const LinearCode image = code.gray_image();
            bool closed = true;
            const Matrix& g = image.generator_matrix();
            for (size_t i = 0; i < g.rows(); ++i)
                if (!image.contains(quasi_cyclic_shift(g.row(i), 1, f4->one()))) closed = false;
            const bool lcd = r_is_lcd(code, Inner::euclidean) && image.is_lcd_matrix(Inner::euclidean);
            std::ostringstream got;
            got << params.str() << " lcd=" << (lcd ? 1 : 0) << " quasi-shift-closed=" << (closed ? 1 : 0);
            rc.actual = got.str();
            rc.pass = params.n2 == 36 && params.k == 33 && params.d.exact && params.d.value == 2 &&
                      lcd && closed;
        } catch (const std::exception& e) {
            rc.actual = std::string("error: ") + e.what();
        }
        out.push_back(rc);
    }
    return out;
}

bool all_pass(const std::vector<RowCheck>& rows) {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

}  // namespace skewlcd
