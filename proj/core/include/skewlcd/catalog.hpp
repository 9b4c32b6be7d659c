// SPDX-License-Identifier: Apache-2.0
//
// Persisted catalog of discovered R-codes: JSON array on disk, entries
// deduplicated by a canonical generator-matrix hash and kept sorted by
// (2n, k, -d). Timestamps are recorded but never take part in equality.

#ifndef SKEWLCD_CATALOG_HPP
#define SKEWLCD_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "skewlcd/ring.hpp"

namespace skewlcd {

struct CatalogEntry {
    std::string field;
    uint32_t r = 1;
    uint32_t n = 0;
    std::string alpha;
    std::string beta;
    std::string g1;
    std::string g2;
    uint32_t gray_n = 0;
    uint32_t gray_k = 0;
    uint32_t gray_d = 0;
    bool d_exact = false;
    bool lcd_euclidean = false;
    std::optional<bool> lcd_hermitian;
    std::string hash;
    std::string timestamp;
};

/// FNV-1a over the field spec, lambda and the canonical (reduced echelon)
/// component generator matrices; identifies a code independent of which
/// divisor pair produced it.
std::string catalog_hash(const RSkewCode& code);

CatalogEntry make_catalog_entry(const RSkewCode& code, const GrayParams& params,
                                std::string timestamp);

class Catalog {
public:
    const std::vector<CatalogEntry>& entries() const { return entries_; }

    /// Inserts unless the hash is already present; keeps (2n, k, -d) order.
    bool add(CatalogEntry entry);

    std::string to_json() const;
    static Catalog from_json(const std::string& text);

    /// Missing file loads as an empty catalog.
    static Catalog load(const std::string& path);
    void save(const std::string& path) const;

private:
    std::vector<CatalogEntry> entries_;
    void sort_entries();
};

}  // namespace skewlcd

#endif  // SKEWLCD_CATALOG_HPP
