#include <doctest.h>

#include <json.hpp>

#include <random>

#include "oracles.hpp"
#include "tpsolve/catalog.hpp"
#include "tpsolve/errors.hpp"
#include "tpsolve/serialize.hpp"

using tps::Series;

TEST_CASE("series JSON round-trips bit-exactly") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> scale(-12.0, 12.0);
    for (int trial = 0; trial < 50; ++trial) {
        Series s = oracles::random_polynomial(rng, 10, 10, scale(rng));
        s = s * std::exp2(scale(rng));
        const Series back = tps::series_from_json(tps::series_to_json(s));
        CHECK(back == s);
    }

    const Series tiny(0.25, {1e-300, -4.9406564584124654e-324, 1.7e308});
    CHECK(tps::series_from_json(tps::series_to_json(tiny)) == tiny);
}

TEST_CASE("series JSON schema") {
    const auto j = nlohmann::json::parse(tps::series_to_json(Series(0.5, {1.0, 2.0})));
    CHECK(j["base_point"] == 0.5);
    CHECK(j["coeffs"].size() == 2);

    const Series parsed = tps::series_from_json(R"({"base_point": -1.5, "coeffs": [3, 0, 1]})");
    CHECK(parsed.base_point() == -1.5);
    CHECK(parsed.order() == 2);
    CHECK(parsed[2] == 1.0);
}

TEST_CASE("malformed series JSON is rejected") {
    CHECK_THROWS_AS(tps::series_from_json("not json"), tps::ContractError);
    CHECK_THROWS_AS(tps::series_from_json("[1,2,3]"), tps::ContractError);
    CHECK_THROWS_AS(tps::series_from_json(R"({"coeffs": [1]})"), tps::ContractError);
    CHECK_THROWS_AS(tps::series_from_json(R"({"base_point": 0, "coeffs": []})"), tps::ContractError);
    CHECK_THROWS_AS(tps::series_from_json(R"({"base_point": 0, "coeffs": ["x"]})"),
                    tps::ContractError);
    CHECK_THROWS_AS(tps::series_from_json(R"({"base_point": "0", "coeffs": [1]})"),
                    tps::ContractError);
}

TEST_CASE("catalog listing JSON") {
    const auto listing = nlohmann::json::parse(tps::catalog_listing_json(tps::default_catalog()));
    REQUIRE(listing.is_array());
    REQUIRE(listing.size() == 6);
    for (const auto& item : listing) {
        CHECK(item.contains("name"));
        CHECK(item.contains("params"));
        CHECK(item.contains("base_point"));
        REQUIRE(item["interval"].is_array());
        CHECK(item["interval"].size() == 2);
    }
    CHECK(listing[1]["name"] == "cauchy_euler");
    CHECK(listing[1]["base_point"] == 1.0);
    CHECK(listing[3]["params"]["l"] == 1.0);
}
