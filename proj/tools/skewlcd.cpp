// SPDX-License-Identifier: Apache-2.0
//
// skewlcd: skew constacyclic / LCD code workbench over GF(q) and
// GF(q)+vGF(q).
//
//   factor     list right divisors of x^n - lambda with cofactors and LCD verdicts
//   lcd-check  certify a single code (or an R-code pair) as LCD
//   tables     recompute the bundled reference tables and diff them
//   census     closed-form LCD counts, optionally validated by brute force
//   search     sweep divisor pairs over R, append LCD finds to a catalog
//
// Exit codes: 0 ok, 1 mismatch (a diffed row or oracle disagreed), 2 error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <optional>

#include "skewlcd/catalog.hpp"
#include "skewlcd/census.hpp"
#include "skewlcd/grammar.hpp"
#include "skewlcd/serialize.hpp"
#include "skewlcd/tables.hpp"

using namespace skewlcd;
using json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    bool json_out = false;
    bool csv_out = false;
    unsigned threads = 1;
};

std::string now_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

Inner parse_inner(const std::string& s) {
    if (s == "euclidean") return Inner::euclidean;
    if (s == "hermitian") return Inner::hermitian;
    throw CLI::ValidationError("--inner", "must be euclidean or hermitian");
}

CensusVariant parse_variant(const std::string& s) {
    if (s == "euclid-cyclic") return CensusVariant::euclidean_cyclic;
    if (s == "herm-cyclic") return CensusVariant::hermitian_cyclic;
    if (s == "euclid-nega") return CensusVariant::euclidean_negacyclic;
    if (s == "herm-nega") return CensusVariant::hermitian_negacyclic;
    throw CLI::ValidationError("--variant",
                               "must be euclid-cyclic, herm-cyclic, euclid-nega or herm-nega");
}

RingLambda parse_ring_lambda(const std::string& s) {
    if (s == "1") return RingLambda::one;
    if (s == "-1") return RingLambda::minus_one;
    if (s == "1-2v" || s == "1-2*v") return RingLambda::one_minus_two_v;
    throw CLI::ValidationError("--r-lambda", "must be 1, -1 or 1-2v");
}

// (alpha, beta) for lambda in {1, -1, 1-2v}; 1-2v needs odd characteristic
std::pair<FieldElement, FieldElement> ring_lambda_components(const FieldPtr& field, RingLambda l) {
    switch (l) {
        case RingLambda::one: return {field->one(), field->zero()};
        case RingLambda::minus_one: return {-field->one(), field->zero()};
        case RingLambda::one_minus_two_v:
            if (field->characteristic() == 2)
                throw std::invalid_argument("lambda = 1-2v collapses to 1 in characteristic 2");
            return {field->one(), -(field->from_int(2))};
    }
    throw std::invalid_argument("unreachable");
}

std::string variant_name(CensusVariant v) {
    switch (v) {
        case CensusVariant::euclidean_cyclic: return "euclid-cyclic";
        case CensusVariant::hermitian_cyclic: return "herm-cyclic";
        case CensusVariant::euclidean_negacyclic: return "euclid-nega";
        case CensusVariant::hermitian_negacyclic: return "herm-nega";
    }
    return "?";
}

int run_factor(const GlobalOpts& g, const std::string& field_s, uint32_t r, uint32_t n,
               const std::string& lambda_s, uint32_t max_deg, uint64_t budget) {
    const FieldPtr field = parse_field(field_s);
    const FieldElement lambda = parse_element(field, lambda_s);
    const ConstaModulus M = ConstaModulus::create(field, r, n, lambda);
    const bool lcd_ok = (lambda * lambda == field->one()) &&
                        n % automorphism_order(*field, r) == 0;
    const bool herm_ok = field->extension_degree() % 2 == 0;

    json rows = json::array();
    for (uint32_t d = 0; d <= max_deg; ++d) {
        for (const auto& div : right_divisors(M, d, budget, g.threads)) {
            const SkewPoly h = cofactor(div, M);
            json row;
            row["degree"] = d;
            row["divisor"] = div.str();
            row["cofactor"] = h.str();
            if (lcd_ok) {
                const SkewConstaCode code = from_generator_poly(M, div);
                row["lcd_euclidean"] = is_skew_lcd(code, Inner::euclidean);
                if (herm_ok) row["lcd_hermitian"] = is_skew_lcd(code, Inner::hermitian);
            }
            rows.push_back(std::move(row));
        }
    }
    if (g.json_out) {
        json out;
        out["field"] = field_spec(*field);
        out["r"] = r;
        out["n"] = n;
        out["lambda"] = lambda.str();
        out["divisors"] = rows;
        std::cout << out.dump(2) << "\n";
    } else if (g.csv_out) {
        std::cout << "degree,divisor,cofactor,lcd_euclidean,lcd_hermitian\n";
        for (const auto& row : rows)
            std::cout << row["degree"] << ",\"" << row["divisor"].get<std::string>() << "\",\""
                      << row["cofactor"].get<std::string>() << "\","
                      << (row.contains("lcd_euclidean") ? row["lcd_euclidean"].dump() : "") << ","
                      << (row.contains("lcd_hermitian") ? row["lcd_hermitian"].dump() : "") << "\n";
    } else {
        std::cout << "right divisors of x^" << n << "-" << lambda.str() << " over "
                  << field_spec(*field) << ", theta = a^" << field->characteristic() << "^" << r
                  << "\n";
        for (const auto& row : rows) {
            std::cout << "  deg " << row["degree"] << ": " << row["divisor"].get<std::string>()
                      << "   cofactor: " << row["cofactor"].get<std::string>();
            if (row.contains("lcd_euclidean"))
                std::cout << "   LCD(e)=" << (row["lcd_euclidean"].get<bool>() ? "yes" : "no");
            if (row.contains("lcd_hermitian"))
                std::cout << " LCD(h)=" << (row["lcd_hermitian"].get<bool>() ? "yes" : "no");
            std::cout << "\n";
        }
        std::cout << rows.size() << " divisor(s)\n";
    }
    return 0;
}

int run_lcd_check_single(const GlobalOpts& g, const FieldPtr& field, uint32_t r, uint32_t n,
                         const FieldElement& lambda, const std::string& g_s, Inner inner) {
    const ConstaModulus M = ConstaModulus::create(field, r, n, lambda);
    const SkewPoly gen = parse_poly(field, r, g_s).monic();
    const SkewConstaCode code = from_generator_poly(M, gen);
    // the gcrd criterion needs lambda^2 = 1 and the automorphism order | n
    const bool gcrd_ok =
        lambda * lambda == field->one() && n % automorphism_order(*field, r) == 0;
    std::optional<SkewPoly> cert;
    if (gcrd_ok) {
        SkewPoly hnat = skew_reciprocal(code.cofactor_poly());
        if (inner == Inner::hermitian) hnat = conjugate(hnat);
        cert = gcrd(gen, hnat);
    }
    const uint32_t hull = code.code().hull_dim(inner);
    const bool by_matrix = code.code().is_lcd_matrix(inner);
    const bool verdict = by_matrix;
    bool agree = by_matrix == (hull == 0);
    if (cert) agree = agree && ((cert->degree() == 0) == by_matrix);
    if (g.json_out) {
        json out;
        out["field"] = field_spec(*field);
        out["n"] = n;
        out["lambda"] = lambda.str();
        out["g"] = gen.str();
        out["gcrd"] = cert ? json(cert->str()) : json(nullptr);
        out["hull_dim"] = hull;
        out["lcd"] = verdict;
        out["agreement"] = agree;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "g       = " << gen.str() << "\n";
        if (cert)
            std::cout << "gcrd    = " << cert->str()
                      << (cert->degree() == 0 ? "" : "   <- failure certificate") << "\n";
        else
            std::cout << "gcrd    = (criterion needs lambda^2 = 1 and order | n)\n";
        std::cout << "hull    = " << hull << "\n"
                  << "LCD     = " << (verdict ? "true" : "false") << "\n"
                  << "agree   = " << (agree ? "gcrd/hull/matrix consistent" : "INCONSISTENT")
                  << "\n";
    }
    return agree ? 0 : 1;
}

int run_lcd_check_pair(const GlobalOpts& g, const FieldPtr& field, uint32_t r, uint32_t n,
                       const FieldElement& alpha, const FieldElement& beta, const std::string& g1_s,
                       const std::string& g2_s, Inner inner) {
    const RSkewCode code = r_code(field, r, n, alpha, beta, parse_poly(field, r, g1_s).monic(),
                                  parse_poly(field, r, g2_s).monic());
    json comps = json::array();
    bool lcd = true;
    bool agree = true;
    for (const SkewConstaCode* c : {&code.c1(), &code.c2()}) {
        SkewPoly hnat = skew_reciprocal(c->cofactor_poly());
        if (inner == Inner::hermitian) hnat = conjugate(hnat);
        const SkewPoly cert = gcrd(c->generator(), hnat);
        const uint32_t hull = c->code().hull_dim(inner);
        const bool ok = cert.degree() == 0;
        lcd = lcd && ok;
        agree = agree && (ok == (hull == 0)) && (ok == c->code().is_lcd_matrix(inner));
        json j;
        j["g"] = c->generator().str();
        j["gcrd"] = cert.str();
        j["hull_dim"] = hull;
        j["lcd"] = ok;
        comps.push_back(std::move(j));
    }
    const bool gray_lcd = code.gray_image().is_lcd_matrix(inner);
    agree = agree && (lcd == gray_lcd);
    if (g.json_out) {
        json out;
        out["field"] = field_spec(*field);
        out["n"] = n;
        out["alpha"] = alpha.str();
        out["beta"] = beta.str();
        out["components"] = comps;
        out["lcd"] = lcd;
        out["gray_block_lcd"] = gray_lcd;
        out["agreement"] = agree;
        std::cout << out.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < comps.size(); ++i) {
            const auto& j = comps[i];
            std::cout << "g" << (i + 1) << "      = " << j["g"].get<std::string>() << "\n"
                      << "  gcrd  = " << j["gcrd"].get<std::string>()
                      << (j["lcd"].get<bool>() ? "" : "   <- failure certificate") << "\n"
                      << "  hull  = " << j["hull_dim"] << "\n";
        }
        std::cout << "LCD     = " << (lcd ? "true" : "false") << "\n"
                  << "gray    = " << (gray_lcd ? "nonsingular block matrix" : "singular block matrix")
                  << "\n"
                  << "agree   = " << (agree ? "gcrd/hull/matrix/gray consistent" : "INCONSISTENT")
                  << "\n";
    }
    return agree ? 0 : 1;
}

int run_tables(const GlobalOpts& g, const std::string& which) {
    std::vector<RowCheck> rows;
    if (which == "1")
        rows = verify_table1();
    else if (which == "2")
        rows = verify_table2();
    else if (which == "3")
        rows = verify_table3(g.threads);
    else if (which == "examples")
        rows = verify_examples(g.threads);
    else if (which == "all") {
        for (auto&& part : {verify_table1(), verify_table2(), verify_table3(g.threads),
                            verify_examples(g.threads)})
            rows.insert(rows.end(), part.begin(), part.end());
    } else {
        throw CLI::ValidationError("--which", "must be 1, 2, 3, examples or all");
    }

    if (g.json_out) {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"name", r.name}, {"expected", r.expected}, {"actual", r.actual},
                           {"pass", r.pass}});
        std::cout << out.dump(2) << "\n";
    } else if (g.csv_out) {
        std::cout << "name,expected,actual,pass\n";
        for (const auto& r : rows)
            std::cout << "\"" << r.name << "\",\"" << r.expected << "\",\"" << r.actual << "\","
                      << (r.pass ? 1 : 0) << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << (r.pass ? "ok   " : "DIFF ") << r.name << "\n      expected: " << r.expected
                      << "\n      actual:   " << r.actual << "\n";
        const size_t passed = static_cast<size_t>(
            std::count_if(rows.begin(), rows.end(), [](const RowCheck& r) { return r.pass; }));
        std::cout << passed << "/" << rows.size() << " rows match\n";
    }
    return all_pass(rows) ? 0 : 1;
}

int run_census(const GlobalOpts& g, uint32_t p, uint32_t n, const std::optional<std::string>& variant_s,
               const std::optional<std::string>& rlambda_s, const std::string& inner_s,
               bool with_oracle, uint64_t budget) {
    BigCount formula;
    std::optional<BigCount> oracle;
    std::string name;
    std::vector<FactorClasses> classes;
    const CensusInput in = CensusInput::derive(p, n);
    if (variant_s && rlambda_s)
        throw CLI::ValidationError("--variant", "give either --variant or --r-lambda, not both");
    if (variant_s) {
        const CensusVariant v = parse_variant(*variant_s);
        formula = base_count(p, n, v);
        name = variant_name(v);
        classes.push_back(factor_classes(p, in.k, variant_negacyclic(v) && p != 2));
        if (with_oracle) oracle = brute_force_census(p, n, v, budget, g.threads);
    } else if (rlambda_s) {
        const RingLambda l = parse_ring_lambda(*rlambda_s);
        const Inner inner = parse_inner(inner_s);
        formula = r_count(p, n, l, inner);
        name = std::string(inner == Inner::euclidean ? "euclidean" : "hermitian") + " lambda=" +
               *rlambda_s;
        if (l != RingLambda::minus_one) classes.push_back(factor_classes(p, in.k, false));
        if (l != RingLambda::one && p != 2) classes.push_back(factor_classes(p, in.k, true));
        if (with_oracle) oracle = brute_force_r_census(p, n, l, inner, budget, g.threads);
    } else {
        throw CLI::ValidationError("--variant", "one of --variant or --r-lambda is required");
    }

    if (g.json_out) {
        std::cout << census_report_json(p, n, name, formula, oracle, classes) << "\n";
    } else {
        std::cout << "census p=" << p << " n=" << n << " (k=" << in.k << " s=" << in.s
                  << " t=" << in.t_odd << ") " << name << "\n";
        std::cout << "  formula = " << formula.str() << "\n";
        if (oracle)
            std::cout << "  oracle  = " << oracle->str() << "  ["
                      << (formula == *oracle ? "agree" : "DISAGREE") << "]\n";
    }
    return (!oracle || formula == *oracle) ? 0 : 1;
}

int run_search(const GlobalOpts& g, const std::string& field_s, uint32_t r, uint32_t n,
               const std::optional<std::string>& rlambda_s, const std::string& alpha_s,
               const std::string& beta_s, uint32_t min_deg, uint32_t max_deg,
               const std::string& inner_s, uint32_t wmax, uint64_t budget,
               const std::optional<std::string>& catalog_path) {
    const FieldPtr field = parse_field(field_s);
    FieldElement alpha = field->one();
    FieldElement beta = field->zero();
    if (rlambda_s) {
        std::tie(alpha, beta) = ring_lambda_components(field, parse_ring_lambda(*rlambda_s));
    } else {
        alpha = parse_element(field, alpha_s);
        beta = parse_element(field, beta_s);
    }
    const Inner inner = parse_inner(inner_s);
    const ConstaModulus m1 = ConstaModulus::create(field, r, n, alpha + beta);
    const ConstaModulus m2 = ConstaModulus::create(field, r, n, alpha);

    std::vector<SkewPoly> g1s, g2s;
    for (uint32_t d = min_deg; d <= max_deg && d < n; ++d) {
        for (auto& f : right_divisors(m1, d, budget, g.threads)) g1s.push_back(std::move(f));
        for (auto& f : right_divisors(m2, d, budget, g.threads)) g2s.push_back(std::move(f));
    }

    Catalog catalog;
    if (catalog_path) catalog = Catalog::load(*catalog_path);
    const std::string stamp = now_utc();
    size_t found = 0, added = 0;
    for (const auto& g1 : g1s) {
        for (const auto& g2 : g2s) {
            const RSkewCode code = r_code(field, r, n, alpha, beta, g1, g2);
            if (code.c1().dimension() == 0 || code.c2().dimension() == 0) continue;
            if (!r_is_lcd(code, inner)) continue;
            ++found;
            const GrayParams params = gray_params(code, wmax, g.threads);
            if (catalog.add(make_catalog_entry(code, params, stamp))) ++added;
        }
    }
    if (catalog_path) catalog.save(*catalog_path);

    if (g.json_out) {
        std::cout << catalog.to_json() << "\n";
    } else if (g.csv_out) {
        std::cout << "field,n,alpha,beta,g1,g2,gray_n,gray_k,gray_d,d_exact,lcd_euclidean\n";
        for (const auto& e : catalog.entries())
            std::cout << "\"" << e.field << "\"," << e.n << "," << e.alpha << "," << e.beta << ",\""
                      << e.g1 << "\",\"" << e.g2 << "\"," << e.gray_n << "," << e.gray_k << ","
                      << e.gray_d << "," << e.d_exact << "," << e.lcd_euclidean << "\n";
    } else {
        for (const auto& e : catalog.entries())
            std::cout << "[" << e.gray_n << "," << e.gray_k << "," << e.gray_d
                      << (e.d_exact ? "" : "?") << "]  g1=" << e.g1 << "  g2=" << e.g2 << "  ("
                      << e.field << ", n=" << e.n << ")\n";
        std::cout << found << " LCD pair(s) swept, " << added << " new entr"
                  << (added == 1 ? "y" : "ies") << ", catalog holds " << catalog.entries().size()
                  << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew constacyclic / LCD code workbench over GF(q) and GF(q)+vGF(q)"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_flag("--json", g.json_out, "machine-readable JSON output");
    app.add_flag("--csv", g.csv_out, "CSV output");
    app.add_option("--threads", g.threads, "worker threads for sweep kernels")->default_val(1);

    // factor
    std::string f_field = "GF(2^4)", f_lambda = "1";
    uint32_t f_r = 1, f_n = 4, f_maxdeg = 3;
    uint64_t f_budget = 10'000'000;
    auto* factor = app.add_subcommand("factor", "list right divisors of x^n - lambda");
    factor->add_option("--field", f_field, "field spec, e.g. GF(2^4) or GF(3^2; 2,2,1)")->required();
    factor->add_option("--r", f_r, "automorphism power: theta = a^(p^r)")->required();
    factor->add_option("--n", f_n, "code length")->required();
    factor->add_option("--lambda", f_lambda, "constacyclic unit (element grammar)");
    factor->add_option("--max-deg", f_maxdeg, "largest divisor degree to scan");
    factor->add_option("--budget", f_budget, "scan budget (candidates per degree)");

    // lcd-check
    std::string l_field, l_lambda = "1", l_alpha = "1", l_beta = "0", l_g, l_g1, l_g2,
                l_inner = "euclidean";
    uint32_t l_r = 1, l_n = 0;
    auto* lcd = app.add_subcommand("lcd-check", "certify LCD-ness with gcrd + hull + matrix");
    lcd->add_option("--field", l_field)->required();
    lcd->add_option("--r", l_r)->required();
    lcd->add_option("--n", l_n)->required();
    lcd->add_option("--lambda", l_lambda, "field unit, or 1 / -1 / 1-2v for R-codes");
    lcd->add_option("--alpha", l_alpha, "R-code lambda = alpha + v*beta");
    lcd->add_option("--beta", l_beta);
    lcd->add_option("--g", l_g, "single generator over GF(q)");
    lcd->add_option("--g1", l_g1, "v-side generator over R");
    lcd->add_option("--g2", l_g2, "(1-v)-side generator over R");
    lcd->add_option("--inner", l_inner, "euclidean | hermitian");

    // tables
    std::string t_which = "all";
    auto* tables = app.add_subcommand("tables", "recompute bundled reference tables");
    tables->add_option("--which", t_which, "1 | 2 | 3 | examples | all");

    // census
    uint32_t c_p = 3, c_n = 4;
    std::optional<std::string> c_variant, c_rlambda;
    std::string c_inner = "euclidean";
    bool c_oracle = false;
    uint64_t c_budget = 1'000'000;
    auto* census = app.add_subcommand("census", "count LCD skew constacyclic codes");
    census->add_option("--p", c_p, "odd-or-2 prime; field is GF(p^2)")->required();
    census->add_option("--n", c_n, "length n = 2k")->required();
    census->add_option("--variant", c_variant, "euclid-cyclic | herm-cyclic | euclid-nega | herm-nega");
    census->add_option("--r-lambda", c_rlambda, "R-level lambda: 1 | -1 | 1-2v");
    census->add_option("--inner", c_inner, "inner product for --r-lambda");
    census->add_flag("--oracle", c_oracle, "also run the brute-force oracle");
    census->add_option("--budget", c_budget, "oracle enumeration budget");

    // search
    std::string s_field, s_alpha = "1", s_beta = "0", s_inner = "euclidean";
    std::optional<std::string> s_rlambda, s_catalog;
    uint32_t s_r = 1, s_n = 0, s_mindeg = 0, s_maxdeg = 1, s_wmax = 4;
    uint64_t s_budget = 10'000'000;
    auto* search = app.add_subcommand("search", "sweep divisor pairs over R for LCD codes");
    search->add_option("--field", s_field)->required();
    search->add_option("--r", s_r)->required();
    search->add_option("--n", s_n)->required();
    search->add_option("--lambda", s_rlambda, "R-level lambda: 1 | -1 | 1-2v");
    search->add_option("--alpha", s_alpha);
    search->add_option("--beta", s_beta);
    search->add_option("--min-deg", s_mindeg);
    search->add_option("--max-deg", s_maxdeg)->required();
    search->add_option("--inner", s_inner);
    search->add_option("--wmax", s_wmax, "distance search cutoff");
    search->add_option("--budget", s_budget);
    search->add_option("--catalog", s_catalog, "catalog JSON file to append to");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*factor) return run_factor(g, f_field, f_r, f_n, f_lambda, f_maxdeg, f_budget);
        if (*lcd) {
            const FieldPtr field = parse_field(l_field);
            if (!l_g.empty()) {
                return run_lcd_check_single(g, field, l_r, l_n, parse_element(field, l_lambda), l_g,
                                            parse_inner(l_inner));
            }
            if (l_g1.empty() || l_g2.empty())
                throw std::invalid_argument("lcd-check needs --g, or --g1 and --g2");
            FieldElement alpha = field->zero(), beta = field->zero();
            if (l_lambda == "1" || l_lambda == "-1" || l_lambda == "1-2v" || l_lambda == "1-2*v") {
                std::tie(alpha, beta) = ring_lambda_components(field, parse_ring_lambda(l_lambda));
            } else {
                alpha = parse_element(field, l_alpha);
                beta = parse_element(field, l_beta);
            }
            return run_lcd_check_pair(g, field, l_r, l_n, alpha, beta, l_g1, l_g2,
                                      parse_inner(l_inner));
        }
        if (*tables) return run_tables(g, t_which);
        if (*census) return run_census(g, c_p, c_n, c_variant, c_rlambda, c_inner, c_oracle, c_budget);
        if (*search)
            return run_search(g, s_field, s_r, s_n, s_rlambda, s_alpha, s_beta, s_mindeg, s_maxdeg,
                              s_inner, s_wmax, s_budget, s_catalog);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
