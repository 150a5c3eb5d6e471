#pragma once

#include <random>
#include <vector>

#include "evasive/field.hpp"
#include "evasive/linalg.hpp"

namespace evasive {

/// All randomized paths run on mt19937_64, whose output sequence is fixed by
/// the standard, with rejection sampling below; identical seeds reproduce
/// bit-identically on any platform.
using Rng = std::mt19937_64;

/// Unbiased uniform draw from [0, bound).
inline u64 uniform_below(Rng& rng, u64 bound) {
    if (bound == 0) throw UsageError("uniform_below: empty range");
    const u64 limit = std::numeric_limits<u64>::max() - std::numeric_limits<u64>::max() % bound;
    u64 draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

inline FieldElement uniform_element(Rng& rng, const FieldCtx& ctx) {
    return ctx.element(uniform_below(rng, ctx.modulus()));
}

inline Point uniform_point(Rng& rng, const FieldCtx& ctx, std::size_t n) {
    Point x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i) x.push_back(uniform_element(rng, ctx));
    return x;
}

/// Uniformly seeded affine subspace of dimension exactly r: direction rows
/// are redrawn until they are independent.
inline AffineSubspace random_affine_subspace(Rng& rng, const FieldCtx& ctx, std::size_t n,
                                             std::size_t r) {
    if (r > n) throw ParameterError("random_affine_subspace: dimension exceeds ambient dimension");
    for (;;) {
        MatrixFp basis(ctx, r, n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) basis.at(i, j) = uniform_element(rng, ctx);
        if (rank(basis) != r) continue;
        return AffineSubspace(uniform_point(rng, ctx, n), std::move(basis));
    }
}

} // namespace evasive
