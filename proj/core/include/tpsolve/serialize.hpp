#ifndef TPSOLVE_SERIALIZE_HPP
#define TPSOLVE_SERIALIZE_HPP

#include <string>
#include <vector>

#include "tpsolve/catalog.hpp"
#include "tpsolve/series.hpp"

namespace tps {

/// {"base_point": number, "coeffs": [numbers]}; the order is implied by the
/// coefficient count. Numbers round-trip binary64 exactly.
std::string series_to_json(const Series& s);

/// Parses the series object form above. Throws ContractError on malformed
/// input.
Series series_from_json(const std::string& text);

/// JSON array of {name, params, base_point, interval}.
std::string catalog_listing_json(const std::vector<CatalogEntry>& entries);

} // namespace tps

#endif
