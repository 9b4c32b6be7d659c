// SPDX-License-Identifier: Apache-2.0

#include "skewlcd/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "skewlcd/grammar.hpp"

namespace skewlcd {

namespace {

using json = nlohmann::ordered_json;

void fnv_mix(uint64_t& h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
}

json entry_to_json(const CatalogEntry& e) {
    json j;
    j["field"] = e.field;
    j["r"] = e.r;
    j["n"] = e.n;
    j["alpha"] = e.alpha;
    j["beta"] = e.beta;
    j["g1"] = e.g1;
    j["g2"] = e.g2;
    j["gray"] = {{"n", e.gray_n}, {"k", e.gray_k}, {"d", e.gray_d}, {"d_exact", e.d_exact}};
    j["lcd"] = {{"euclidean", e.lcd_euclidean},
                {"hermitian", e.lcd_hermitian ? json(*e.lcd_hermitian) : json(nullptr)}};
    j["hash"] = e.hash;
    j["timestamp"] = e.timestamp;
    return j;
}

CatalogEntry entry_from_json(const json& j) {
    CatalogEntry e;
    e.field = j.at("field").get<std::string>();
    e.r = j.at("r").get<uint32_t>();
    e.n = j.at("n").get<uint32_t>();
    e.alpha = j.at("alpha").get<std::string>();
    e.beta = j.at("beta").get<std::string>();
    e.g1 = j.at("g1").get<std::string>();
    e.g2 = j.at("g2").get<std::string>();
    const auto& g = j.at("gray");
    e.gray_n = g.at("n").get<uint32_t>();
    e.gray_k = g.at("k").get<uint32_t>();
    e.gray_d = g.at("d").get<uint32_t>();
    e.d_exact = g.at("d_exact").get<bool>();
    const auto& l = j.at("lcd");
    e.lcd_euclidean = l.at("euclidean").get<bool>();
    if (!l.at("hermitian").is_null()) e.lcd_hermitian = l.at("hermitian").get<bool>();
    e.hash = j.at("hash").get<std::string>();
    e.timestamp = j.at("timestamp").get<std::string>();
    return e;
}

}  // namespace

std::string catalog_hash(const RSkewCode& code) {
    uint64_t h = 0xcbf29ce484222325ULL;
    fnv_mix(h, field_spec(*code.field()));
    fnv_mix(h, std::to_string(code.c1().generator().r()));
    fnv_mix(h, std::to_string(code.length()));
    fnv_mix(h, code.alpha().str());
    fnv_mix(h, code.beta().str());
    fnv_mix(h, code.c1().code().generator_matrix().str());
    fnv_mix(h, code.c2().code().generator_matrix().str());
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

CatalogEntry make_catalog_entry(const RSkewCode& code, const GrayParams& params,
                                std::string timestamp) {
    CatalogEntry e;
    e.field = field_spec(*code.field());
    e.r = code.c1().generator().r();
    e.n = code.length();
    e.alpha = code.alpha().str();
    e.beta = code.beta().str();
    e.g1 = code.c1().generator().str();
    e.g2 = code.c2().generator().str();
    e.gray_n = params.n2;
    e.gray_k = params.k;
    e.gray_d = params.d.value;
    e.d_exact = params.d.exact;
    e.lcd_euclidean = r_is_lcd(code, Inner::euclidean);
    if (code.field()->extension_degree() % 2 == 0)
        e.lcd_hermitian = r_is_lcd(code, Inner::hermitian);
    e.hash = catalog_hash(code);
    e.timestamp = std::move(timestamp);
    return e;
}

bool Catalog::add(CatalogEntry entry) {
    for (const auto& e : entries_)
        if (e.hash == entry.hash) return false;
    entries_.push_back(std::move(entry));
    sort_entries();
    return true;
}

void Catalog::sort_entries() {
    std::stable_sort(entries_.begin(), entries_.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.gray_n != b.gray_n) return a.gray_n < b.gray_n;
        if (a.gray_k != b.gray_k) return a.gray_k < b.gray_k;
        if (a.gray_d != b.gray_d) return a.gray_d > b.gray_d;
        return a.hash < b.hash;
    });
}

std::string Catalog::to_json() const {
    json arr = json::array();
    for (const auto& e : entries_) arr.push_back(entry_to_json(e));
    return arr.dump(2);
}

Catalog Catalog::from_json(const std::string& text) {
    Catalog c;
    const json arr = json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("catalog file must hold a JSON array");
    for (const auto& j : arr) c.entries_.push_back(entry_from_json(j));
    c.sort_entries();
    return c;
}

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return {};
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

void Catalog::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write catalog file: " + path);
    out << to_json() << "\n";
}

}  // namespace skewlcd
