// SPDX-License-Identifier: Apache-2.0

#include "skewlcd/serialize.hpp"

#include <json.hpp>

#include <limits>

#include "skewlcd/grammar.hpp"

namespace skewlcd {

namespace {

using json = nlohmann::ordered_json;

// census factor classes live in F_p[y], y = x^2
std::string y_poly(const SkewPoly& f) {
    std::string s = f.str();
    for (auto& c : s)
        if (c == 'x') c = 'y';
    return s;
}

json matrix_rows(const Matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json distance_json(const DistanceResult& d) {
    json out;
    out["exact"] = d.exact;
    if (d.exact) {
        out["d"] = d.value;
        json w = json::array();
        for (const auto& e : d.witness) w.push_back(e.str());
        out["witness"] = std::move(w);
    } else {
        out["lower_bound"] = d.value;
    }
    return out;
}

json lcd_json(const LinearCode& code) {
    json out;
    out["euclidean"] = code.is_lcd_matrix(Inner::euclidean);
    if (code.field()->extension_degree() % 2 == 0)
        out["hermitian"] = code.is_lcd_matrix(Inner::hermitian);
    else
        out["hermitian"] = nullptr;
    return out;
}

json big_json(const BigCount& v) {
    if (v <= BigCount(std::numeric_limits<int64_t>::max())) return static_cast<int64_t>(v);
    return v.str();
}

}  // namespace

std::string code_json(const SkewConstaCode& code, uint32_t w_max, unsigned threads) {
    json out;
    out["field"] = field_spec(*code.code().field());
    out["r"] = code.generator().r();
    out["n"] = code.length();
    out["lambda"] = code.modulus().lambda.str();
    out["generator"] = code.generator().str();
    out["G"] = matrix_rows(code.code().generator_matrix());
    out["k"] = code.dimension();
    out["lcd"] = lcd_json(code.code());
    if (code.dimension() > 0) out["d_bounded"] = distance_json(min_distance_bounded(code.code(), w_max, threads));
    return out.dump(2);
}

std::string r_code_json(const RSkewCode& code, uint32_t w_max, unsigned threads) {
    json out;
    out["field"] = field_spec(*code.field());
    out["r"] = code.c1().generator().r();
    out["n"] = code.length();
    out["lambda"] = code.lambda().str();
    out["alpha"] = code.alpha().str();
    out["beta"] = code.beta().str();
    out["g1"] = code.c1().generator().str();
    out["g2"] = code.c2().generator().str();
    json stacked = json::array();
    for (const auto& row : code.stacked_generator()) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.str());
        stacked.push_back(std::move(r));
    }
    out["G"] = std::move(stacked);
    out["k"] = code.cardinality_exponent();
    {
        json lcd;
        const bool eucl = r_is_lcd(code, Inner::euclidean);
        lcd["euclidean"] = eucl;
        if (code.field()->extension_degree() % 2 == 0)
            lcd["hermitian"] = r_is_lcd(code, Inner::hermitian);
        else
            lcd["hermitian"] = nullptr;
        out["lcd"] = std::move(lcd);
    }
    {
        const GrayParams params = gray_params(code, w_max, threads);
        json gray;
        gray["params"] = json::array({params.n2, params.k,
                                      params.d.exact ? json(params.d.value) : json(nullptr)});
        gray["d_bounded"] = distance_json(params.d);
        gray["lcd"] = lcd_json(code.gray_image());
        out["gray"] = std::move(gray);
    }
    return out.dump(2);
}

std::string census_report_json(uint32_t p, uint32_t n, const std::string& variant_name,
                               const BigCount& formula, const std::optional<BigCount>& oracle,
                               const std::vector<FactorClasses>& classes) {
    const CensusInput in = CensusInput::derive(p, n);
    json out;
    out["p"] = p;
    out["n"] = n;
    out["s"] = in.s;
    out["t"] = in.t_odd;
    out["variant"] = variant_name;
    out["formula_count"] = big_json(formula);
    if (oracle) {
        out["oracle_count"] = big_json(*oracle);
        out["agreement"] = (formula == *oracle);
    }
    json fc;
    json fir = json::array();
    json fred = json::array();
    for (const auto& c : classes) {
        const std::string mod = c.plus_modulus ? "x^n+1" : "x^n-1";
        for (const auto& f : c.self_reciprocal_irreducible) {
            json e;
            e["poly"] = y_poly(f);
            e["deg"] = f.degree();
            e["modulus"] = mod;
            fir.push_back(std::move(e));
        }
        for (const auto& [f, g] : c.reciprocal_pairs) {
            json e;
            e["poly"] = y_poly(f * g);
            e["halves"] = json::array({y_poly(f), y_poly(g)});
            e["deg"] = f.degree() + g.degree();
            e["modulus"] = mod;
            fred.push_back(std::move(e));
        }
    }
    fc["F_ir"] = std::move(fir);
    fc["F_red"] = std::move(fred);
    out["factor_classes"] = std::move(fc);
    return out.dump(2);
}

}  // namespace skewlcd
