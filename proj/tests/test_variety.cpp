#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "evasive/params.hpp"
#include "evasive/variety.hpp"

using namespace evasive;

namespace {

MatrixFp from_values(const FieldCtx& ctx, const std::vector<std::vector<u64>>& rows) {
    MatrixFp m(ctx, rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = ctx.element(rows[i][j]);
    return m;
}

Point pt(const FieldCtx& ctx, std::initializer_list<u64> vals) {
    Point p;
    for (u64 v : vals) p.push_back(ctx.element(v));
    return p;
}

// The hand-built block over F_7: f(x) = x_1^5 + x_2^2, pivot on column 1.
BlockVariety block_f7() {
    const FieldCtx f7(7);
    return BlockVariety(f7, from_values(f7, {{1, 1}}), {5, 2}, {0});
}

BlockVariety block_f17() { return BlockVariety(gen_params(2, 4, 8)); }

std::vector<Point> all_tuples(const FieldCtx& ctx, std::size_t len) {
    std::vector<Point> out;
    std::vector<u64> tuple(len, 0);
    for (;;) {
        Point p;
        for (u64 v : tuple) p.push_back(ctx.element(v));
        out.push_back(std::move(p));
        std::size_t i = len;
        while (i > 0 && ++tuple[i - 1] == ctx.modulus()) tuple[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

} // namespace

TEST_CASE("evaluate on the worked block", "[variety]") {
    const BlockVariety v = block_f7();
    const FieldCtx f7 = v.ctx();
    CHECK(v.evaluate(pt(f7, {6, 1})) == std::vector<FieldElement>{f7.zero()}); // 6^5 + 1 = 0 mod 7
    CHECK(v.evaluate(pt(f7, {0, 0})) == std::vector<FieldElement>{f7.zero()});
    CHECK(v.evaluate(pt(f7, {1, 1})) == std::vector<FieldElement>{f7.element(2)});
    CHECK_THROWS_AS(v.evaluate(pt(f7, {1, 1, 1})), UsageError);
}

TEST_CASE("member", "[variety]") {
    const BlockVariety v = block_f7();
    const FieldCtx f7 = v.ctx();
    CHECK(v.member(pt(f7, {6, 1})));
    CHECK(v.member(pt(f7, {0, 0})));
    CHECK_FALSE(v.member(pt(f7, {1, 1})));
}

TEST_CASE("encode places the message on the free coordinates", "[variety]") {
    const BlockVariety v = block_f7();
    const FieldCtx f7 = v.ctx();
    const Point x = v.encode(pt(f7, {1}));
    CHECK(v.member(x)); // the oracle behind the frozen value
    CHECK(x == pt(f7, {6, 1}));
    CHECK(v.encode(pt(f7, {0})) == pt(f7, {0, 0}));
}

TEST_CASE("encode lands in the variety for every message", "[variety]") {
    const BlockVariety v = block_f17();
    for (const Point& z : all_tuples(v.ctx(), 2)) CHECK(v.member(v.encode(z)));
}

TEST_CASE("decode projects members and rejects outsiders", "[variety]") {
    const BlockVariety v = block_f7();
    const FieldCtx f7 = v.ctx();
    CHECK(v.decode(pt(f7, {6, 1})) == pt(f7, {1}));
    CHECK(v.decode(pt(f7, {0, 0})) == pt(f7, {0}));
    CHECK_THROWS_AS(v.decode(pt(f7, {1, 1})), NotAMemberError);
}

TEST_CASE("enumerate counts exactly p^(m-k)", "[variety]") {
    CHECK(block_f7().enumerate().size() == 7);
    CHECK(block_f17().enumerate().size() == 289);
    // x^3 = 0 has only the zero solution.
    const FieldCtx f5(5);
    const BlockVariety tiny(f5, from_values(f5, {{1}}), {3}, {0});
    const auto points = tiny.enumerate();
    REQUIRE(points.size() == 1);
    CHECK(points.front() == pt(f5, {0}));
}

TEST_CASE("enumerate refuses above the guard", "[variety]") {
    CHECK_THROWS_AS(block_f17().enumerate(1000), GuardExceededError);
}

TEST_CASE("encode and decode are mutually inverse bijections", "[variety]") {
    for (const BlockVariety& v : {block_f7(), block_f17()}) {
        const std::size_t free_len = v.block_len() - v.equations();
        std::set<Point> images;
        for (const Point& z : all_tuples(v.ctx(), free_len)) {
            const Point x = v.encode(z);
            CHECK(v.decode(x) == z);
            images.insert(x);
        }
        const auto enumerated = v.enumerate();
        // Same point set: enumeration equals the encode image, so
        // encode(decode(x)) = x across the whole variety.
        CHECK(images == std::set<Point>(enumerated.begin(), enumerated.end()));
        for (const Point& x : enumerated) CHECK(v.encode(v.decode(x)) == x);
    }
}

TEST_CASE("within a block, subspaces of dimension r meet at most d_1^r points", "[variety]") {
    // Exhaustive over all lines of F_7^2 and F_7^3 via canonical echelon maps.
    const FieldCtx f7(7);
    const std::vector<BlockVariety> instances = {
        block_f7(),
        BlockVariety(f7, from_values(f7, {{1, 2, 3}}), {5, 3, 2}, {0}),
    };
    for (const auto& v : instances) {
        const std::size_t m = v.block_len();
        const u64 d1 = v.max_degree();
        std::size_t lines = 0;
        for (std::size_t pivot = 0; pivot < m; ++pivot) {
            // Coordinates before the pivot are constants; after it, affine
            // forms in the single parameter.
            std::vector<std::size_t> tail(m - pivot - 1);
            const std::size_t combos_before = pivot;
            std::vector<u64> cvals(combos_before, 0), avals(2 * tail.size(), 0);
            const auto count_members = [&](const EchelonMap& emap) {
                std::size_t count = 0;
                for (u64 t = 0; t < 7; ++t)
                    if (v.member(emap.apply({f7.element(t)}))) ++count;
                return count;
            };
            for (;;) {
                std::vector<AffineForm> coords;
                for (std::size_t j = 0; j < pivot; ++j)
                    coords.push_back(AffineForm{f7.element(cvals[j]), {f7.zero()}});
                coords.push_back(AffineForm{f7.zero(), {f7.one()}});
                for (std::size_t j = 0; j < tail.size(); ++j)
                    coords.push_back(
                        AffineForm{f7.element(avals[2 * j]), {f7.element(avals[2 * j + 1])}});
                const EchelonMap emap(f7, {pivot}, coords);
                ++lines;
                CHECK(count_members(emap) <= d1);
                // Odometer over all constants and coefficients.
                std::size_t i = 0;
                for (; i < cvals.size(); ++i) {
                    if (++cvals[i] < 7) break;
                    cvals[i] = 0;
                }
                if (i < cvals.size()) continue;
                for (i = 0; i < avals.size(); ++i) {
                    if (++avals[i] < 7) break;
                    avals[i] = 0;
                }
                if (i == avals.size()) break;
            }
        }
        // Every line of F_7^m has exactly one canonical echelon form.
        const std::size_t expected = (m == 2) ? 56 : 2793;
        CHECK(lines == expected);
    }
}

TEST_CASE("construction rejects broken instances", "[variety]") {
    const FieldCtx f7(7);
    // Pivot degree shares a factor with p-1.
    CHECK_THROWS_AS(BlockVariety(f7, from_values(f7, {{1, 1}}), {5, 2}, {1}), ParameterError);
    // Degrees not strictly decreasing.
    CHECK_THROWS_AS(BlockVariety(f7, from_values(f7, {{1, 1}}), {2, 2}, {0}), ParameterError);
    // Singular pivot minor.
    CHECK_THROWS_AS(BlockVariety(f7, from_values(f7, {{0, 1}}), {5, 2}, {0}), ParameterError);
}
