#include "tpsolve/serialize.hpp"

#include <json.hpp>

#include "tpsolve/errors.hpp"

namespace tps {

using nlohmann::json;

std::string series_to_json(const Series& s) {
    json j;
    j["base_point"] = s.base_point();
    j["coeffs"] = std::vector<double>(s.coeffs().begin(), s.coeffs().end());
    return j.dump();
}

Series series_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ContractError(std::string("Series JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("base_point") || !j.contains("coeffs"))
        throw ContractError("Series JSON: expected {\"base_point\": number, \"coeffs\": [...]}");
    if (!j["base_point"].is_number() || !j["coeffs"].is_array() || j["coeffs"].empty())
        throw ContractError("Series JSON: base_point must be a number and coeffs a non-empty array");
    std::vector<double> coeffs;
    coeffs.reserve(j["coeffs"].size());
    for (const auto& c : j["coeffs"]) {
        if (!c.is_number())
            throw ContractError("Series JSON: coefficients must be numbers");
        coeffs.push_back(c.get<double>());
    }
    return Series(j["base_point"].get<double>(), std::move(coeffs));
}

std::string catalog_listing_json(const std::vector<CatalogEntry>& entries) {
    json arr = json::array();
    for (const CatalogEntry& e : entries) {
        json item;
        item["name"] = e.name;
        item["params"] = json::object();
        for (const auto& [key, value] : e.params)
            item["params"][key] = value;
        item["base_point"] = e.base_point;
        item["interval"] = {e.interval[0], e.interval[1]};
        arr.push_back(std::move(item));
    }
    return arr.dump();
}

} // namespace tps
