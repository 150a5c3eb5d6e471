#include <catch2/catch_amalgamated.hpp>

#include "evasive/io.hpp"
#include "evasive/rng.hpp"

using namespace evasive;

TEST_CASE("params JSON round trip", "[io]") {
    const EvasiveParams p = gen_params(2, 4, 8);
    const nlohmann::json j = params_to_json(p);
    CHECK(j.at("version") == 1);
    CHECK(j.at("p") == 17);
    CHECK(j.at("degrees") == nlohmann::json({5, 4, 3, 2}));
    // Pivot positions are 1-based on disk.
    CHECK(j.at("pivot_set") == nlohmann::json({1, 3}));
    const EvasiveParams q = params_from_json(j);
    CHECK(params_to_json(q).dump(2) == j.dump(2));
}

TEST_CASE("params JSON rejects malformed input", "[io]") {
    const nlohmann::json good = params_to_json(gen_params(2, 4, 8));
    SECTION("missing field") {
        nlohmann::json j = good;
        j.erase("degrees");
        CHECK_THROWS_AS(params_from_json(j), ParameterError);
    }
    SECTION("wrong version") {
        nlohmann::json j = good;
        j["version"] = 99;
        CHECK_THROWS_AS(params_from_json(j), ParameterError);
    }
    SECTION("tampered pivot") {
        nlohmann::json j = good;
        j["pivot_set"] = {2, 4}; // degrees 4 and 2 are even, p-1 = 16
        CHECK_THROWS_AS(params_from_json(j), ParameterError);
    }
    SECTION("zero-based pivot") {
        nlohmann::json j = good;
        j["pivot_set"] = {0, 2};
        CHECK_THROWS_AS(params_from_json(j), ParameterError);
    }
    SECTION("composite modulus") {
        nlohmann::json j = good;
        j["p"] = 15;
        CHECK_THROWS_AS(params_from_json(j), ParameterError);
    }
}

TEST_CASE("subspace JSON round trip", "[io]") {
    const FieldCtx ctx(17);
    Rng rng(151);
    const AffineSubspace h = random_affine_subspace(rng, ctx, 8, 2);
    const nlohmann::json j = subspace_to_json(h);
    CHECK(j.at("p") == 17);
    CHECK(j.at("ambient_dim") == 8);
    CHECK(j.at("dim") == 2);
    const AffineSubspace g = subspace_from_json(j);
    CHECK(g.offset() == h.offset());
    CHECK(g.basis() == h.basis());
}

TEST_CASE("subspace JSON validation", "[io]") {
    nlohmann::json j;
    j["p"] = 7;
    j["ambient_dim"] = 2;
    j["dim"] = 1;
    j["offset"] = {0, 0};
    j["basis"] = {{1, 1}};
    CHECK_NOTHROW(subspace_from_json(j));
    SECTION("coordinate out of range") {
        j["offset"] = {9, 0};
        CHECK_THROWS_AS(subspace_from_json(j), ParameterError);
    }
    SECTION("dependent rows") {
        j["dim"] = 2;
        j["basis"] = {{1, 1}, {2, 2}};
        CHECK_THROWS_AS(subspace_from_json(j), ParameterError);
    }
    SECTION("ragged basis") {
        j["basis"] = {{1}};
        CHECK_THROWS_AS(subspace_from_json(j), ParameterError);
    }
}

TEST_CASE("point CSV parsing and formatting", "[io]") {
    const FieldCtx ctx(7);
    const Point x = parse_point(ctx, "6,1,0,0", 4);
    CHECK(format_point(x) == "6,1,0,0");
    CHECK_THROWS_AS(parse_point(ctx, "6,1,0", 4), ParameterError);
    CHECK_THROWS_AS(parse_point(ctx, "7,1,0,0", 4), ParameterError); // not below p
    CHECK_THROWS_AS(parse_point(ctx, "a,b,c,d", 4), ParameterError);
    CHECK_THROWS_AS(parse_point(ctx, "1,,2,3", 4), ParameterError);
}
