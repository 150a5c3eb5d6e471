#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "evasive/io.hpp"
#include "evasive/params.hpp"

using namespace evasive;

TEST_CASE("gen_field_plan worked examples", "[params]") {
    SECTION("k=2, n=16") {
        const FieldPlan plan = gen_field_plan(2, 16);
        CHECK(plan.K == 15);
        CHECK(plan.special_degrees == std::vector<u64>{5, 3});
        CHECK(plan.p == 17);
        CHECK(std::gcd<u64>(plan.p - 1, 5) == 1);
        CHECK(std::gcd<u64>(plan.p - 1, 3) == 1);
    }
    SECTION("k=1, n=2") {
        const FieldPlan plan = gen_field_plan(1, 2);
        CHECK(plan.K == 3);
        CHECK(plan.special_degrees == std::vector<u64>{3});
        CHECK(plan.p == 5);
    }
}

TEST_CASE("field plans satisfy every invariant on a parameter grid", "[params]") {
    for (std::size_t k = 1; k <= 6; ++k) {
        for (u64 n : {16ull, 100ull, 1000ull}) {
            const FieldPlan plan = gen_field_plan(k, n);
            INFO("k=" << k << " n=" << n << " p=" << plan.p << " K=" << plan.K);
            CHECK(is_prime(plan.p));
            CHECK(plan.p % plan.K == 2);
            CHECK(plan.p > n);
            CHECK(plan.p <= 2 * n * plan.K);
            REQUIRE(plan.special_degrees.size() == k);
            for (std::size_t i = 0; i < k; ++i) {
                const u64 d = plan.special_degrees[i];
                CHECK(d > 1);
                CHECK(d % 2 == 1);
                CHECK(plan.K % d == 0);
                CHECK(std::gcd(plan.p - 1, d) == 1);
                if (i + 1 < k) CHECK(d > plan.special_degrees[i + 1]);
            }
            CHECK(plan.special_degrees.front() <= plan.K);
        }
    }
}

TEST_CASE("gen_params worked examples", "[params]") {
    SECTION("k=2, m=4, n=8") {
        const EvasiveParams p = gen_params(2, 4, 8);
        CHECK(p.ctx.modulus() == 17);
        CHECK(p.degrees == std::vector<u64>{5, 4, 3, 2});
        CHECK(p.gammas == std::vector<u64>{1, 2, 3, 4});
        // Pivots sit at the special degrees 5 and 3.
        CHECK(p.pivot_set == std::vector<std::size_t>{0, 2});
        CHECK(p.inv_exponents == std::vector<u64>{13, 11});
        std::size_t coprime = 0;
        for (u64 d : p.degrees)
            if (std::gcd<u64>(p.ctx.modulus() - 1, d) == 1) ++coprime;
        CHECK(coprime >= 2);
    }
    SECTION("k=1, m=1, n=3") {
        const EvasiveParams p = gen_params(1, 1, 3);
        CHECK(p.ctx.modulus() == 5);
        CHECK(p.degrees == std::vector<u64>{3});
        CHECK(p.pivot_set == std::vector<std::size_t>{0});
    }
    SECTION("m must divide n") { CHECK_THROWS_AS(gen_params(2, 3, 8), ParameterError); }
    SECTION("m must reach k") { CHECK_THROWS_AS(gen_params(3, 2, 4), ParameterError); }
}

TEST_CASE("generated degrees are strictly decreasing with enough co-prime entries", "[params]") {
    for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t m = k; m <= k + 3; ++m) {
            const EvasiveParams p = gen_params(k, m, m * 2);
            INFO("k=" << k << " m=" << m << " p=" << p.ctx.modulus());
            std::size_t coprime = 0;
            for (std::size_t j = 0; j < p.degrees.size(); ++j) {
                if (j + 1 < p.degrees.size()) CHECK(p.degrees[j] > p.degrees[j + 1]);
                if (std::gcd<u64>(p.ctx.modulus() - 1, p.degrees[j]) == 1) ++coprime;
            }
            CHECK(coprime >= k);
            CHECK(p.ctx.modulus() > p.m);
            CHECK_NOTHROW(validate_params(p));
        }
    }
}

TEST_CASE("identical inputs serialize byte-identically", "[params]") {
    const std::string a = params_to_json(gen_params(2, 4, 8)).dump(2);
    const std::string b = params_to_json(gen_params(2, 4, 8)).dump(2);
    CHECK(a == b);
}

TEST_CASE("validate_params rejects tampered instances", "[params]") {
    SECTION("wrong inverse exponent") {
        EvasiveParams p = gen_params(2, 4, 8);
        p.inv_exponents[0] += 1;
        CHECK_THROWS_AS(validate_params(p), ParameterError);
    }
    SECTION("pivot degree not co-prime") {
        EvasiveParams p = gen_params(2, 4, 8);
        p.pivot_set = {1, 3}; // degrees 4 and 2 share a factor with p-1 = 16
        CHECK_THROWS_AS(validate_params(p), ParameterError);
    }
    SECTION("duplicate generators") {
        EvasiveParams p = gen_params(2, 4, 8);
        p.gammas[1] = p.gammas[0];
        CHECK_THROWS_AS(validate_params(p), ParameterError);
    }
    SECTION("non-decreasing degrees") {
        EvasiveParams p = gen_params(2, 4, 8);
        std::swap(p.degrees[0], p.degrees[1]);
        CHECK_THROWS_AS(validate_params(p), ParameterError);
    }
}
