#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "evasive/errors.hpp"
#include "evasive/evasive_set.hpp"
#include "evasive/field.hpp"
#include "evasive/linalg.hpp"
#include "evasive/poly.hpp"
#include "evasive/variety.hpp"

namespace evasive {

/// Reduction of one block system restricted to an r-dimensional subspace:
/// after mixing the equations by the inverse pivot minor and substituting
/// t_i -> t_i^{D_i}, equation i becomes h_i(t) = t_i^D + r_i(t) with
/// deg(r_i) < D, where D is the product of the pivot-column degrees.
struct TriangularSystem {
    std::vector<std::size_t> pivots;            // echelon pivots of the subspace map
    MatrixFp mixing;                            // rows u_i of the inverse pivot minor
    std::vector<std::vector<FieldElement>> cross; // c[i][t]: residual coefficient of free column t
    std::vector<std::size_t> free_cols;         // block columns outside the pivots
    u64 degree_product;                         // D
    std::vector<u64> var_exponents;             // D_i = D / d_{j_i}
    std::vector<MultiPoly> residuals;           // r_i, total degree < D

    std::size_t dim() const noexcept { return pivots.size(); }

    /// h_i = t_i^D + r_i.
    MultiPoly h(std::size_t i) const {
        MultiPoly out = residuals[i];
        MultiPoly::Exponents lead(dim(), 0);
        lead[i] = degree_product;
        out.add_term(lead, out.ctx().one());
        return out;
    }
};

/// Carries one restricted block coordinate as a polynomial in the subspace
/// parameters with each t_i already replaced by t_i^{D_i}.
inline TriangularSystem triangularize(const BlockVariety& v, const EchelonMap& emap) {
    if (emap.ambient_dim() != v.block_len())
        throw UsageError("triangularize: map ambient does not match block length");
    const std::size_t r = emap.dim();
    if (r > v.equations()) throw DimensionError("triangularize: subspace dimension exceeds k");
    const FieldCtx ctx = v.ctx();
    const auto& pivots = emap.pivots();

    std::vector<std::size_t> first_rows(r);
    std::iota(first_rows.begin(), first_rows.end(), 0);
    MatrixFp mixing(ctx, 0, 0);
    try {
        mixing = inverse(v.matrix().submatrix(first_rows, pivots));
    } catch (const SingularMatrixError&) {
        throw InternalError("triangularize: pivot minor is singular; matrix is not strongly regular");
    }

    std::vector<std::size_t> free_cols;
    {
        std::size_t next = 0;
        for (std::size_t j = 0; j < v.block_len(); ++j) {
            if (next < r && pivots[next] == j)
                ++next;
            else
                free_cols.push_back(j);
        }
    }

    u64 degree_product = 1;
    for (std::size_t i = 0; i < r; ++i) degree_product *= v.degrees()[pivots[i]];
    std::vector<u64> var_exponents;
    var_exponents.reserve(r);
    for (std::size_t i = 0; i < r; ++i) var_exponents.push_back(degree_product / v.degrees()[pivots[i]]);

    std::vector<std::vector<FieldElement>> cross(r);
    for (std::size_t i = 0; i < r; ++i) {
        cross[i].reserve(free_cols.size());
        for (std::size_t t = 0; t < free_cols.size(); ++t) {
            FieldElement acc = ctx.zero();
            for (std::size_t s = 0; s < r; ++s) acc += mixing.at(i, s) * v.matrix().at(s, free_cols[t]);
            cross[i].push_back(acc);
        }
    }

    // Free-column contribution l_j(t_1^{D_1}, ..., t_r^{D_r})^{d_j}, shared
    // across equations up to the per-equation coefficient.
    std::vector<MultiPoly> raised;
    raised.reserve(free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        const AffineForm& form = emap.coord(free_cols[t]);
        MultiPoly affine(ctx, r);
        affine.add_term(MultiPoly::Exponents(r, 0), form.constant);
        for (std::size_t s = 0; s < r; ++s) {
            MultiPoly::Exponents e(r, 0);
            e[s] = var_exponents[s];
            affine.add_term(e, form.coeffs[s]);
        }
        raised.push_back(affine.pow(v.degrees()[free_cols[t]]));
    }

    std::vector<MultiPoly> residuals;
    residuals.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        MultiPoly ri(ctx, r);
        for (std::size_t t = 0; t < free_cols.size(); ++t) ri += raised[t].scaled(cross[i][t]);
        if (ri.total_degree() >= static_cast<long>(degree_product))
            throw InternalError("triangularize: residual degree reaches the leading degree");
        residuals.push_back(std::move(ri));
    }

    return TriangularSystem{pivots,         std::move(mixing), std::move(cross), std::move(free_cols),
                            degree_product, std::move(var_exponents), std::move(residuals)};
}

enum class SolverKind {
    exhaustive, // enumerate the p^r parameter values of the normalized map
    univariate  // scan roots of the restricted polynomials; dim <= 1 only
};

namespace detail {

inline void check_count_bound(std::size_t count, u64 d1, std::size_t r, const char* who) {
    u64 bound = 1;
    for (std::size_t i = 0; i < r; ++i) bound *= d1;
    if (count > bound)
        throw InternalError(std::string(who) + ": solution count " + std::to_string(count) +
                            " exceeds bound " + std::to_string(bound));
}

inline std::vector<Point> solve_block_emap(const BlockVariety& v, const EchelonMap& emap,
                                           SolverKind kind, u64 guard) {
    const FieldCtx ctx = v.ctx();
    const u64 p = ctx.modulus();
    const std::size_t r = emap.dim();
    std::vector<Point> out;
    if (kind == SolverKind::univariate) {
        if (r > 1)
            throw ParameterError("solve_block: univariate solver needs a system in one variable");
        if (r == 0) {
            const Point x = emap.apply({});
            if (v.member(x)) out.push_back(x);
            return out;
        }
        // Restrict each f_i along the map and scan all t in F_p.
        std::vector<MultiPoly> restricted;
        restricted.reserve(v.equations());
        std::vector<MultiPoly> coord_powers;
        coord_powers.reserve(v.block_len());
        for (std::size_t j = 0; j < v.block_len(); ++j) {
            const AffineForm& form = emap.coord(j);
            MultiPoly affine(ctx, 1);
            affine.add_term(MultiPoly::Exponents{0}, form.constant);
            affine.add_term(MultiPoly::Exponents{1}, form.coeffs[0]);
            coord_powers.push_back(affine.pow(v.degrees()[j]));
        }
        for (std::size_t i = 0; i < v.equations(); ++i) {
            MultiPoly gi(ctx, 1);
            for (std::size_t j = 0; j < v.block_len(); ++j)
                gi += coord_powers[j].scaled(v.matrix().at(i, j));
            restricted.push_back(std::move(gi));
        }
        for (u64 t = 0; t < p; ++t) {
            const Point at{ctx.element(t)};
            bool zero = true;
            for (const auto& gi : restricted)
                if (!gi.eval(at).is_zero()) {
                    zero = false;
                    break;
                }
            if (zero) out.push_back(emap.apply(at));
        }
    } else {
        if (checked_pow(p, r, guard) > guard)
            throw GuardExceededError("solve_block: p^r exceeds guard " + std::to_string(guard));
        std::vector<u64> tuple(r, 0);
        do {
            Point t;
            t.reserve(r);
            for (u64 s : tuple) t.push_back(ctx.element(s));
            Point x = emap.apply(t);
            if (v.member(x)) out.push_back(std::move(x));
        } while (next_tuple(tuple, p));
    }
    std::sort(out.begin(), out.end());
    check_count_bound(out.size(), v.max_degree(), r, "solve_block");
    return out;
}

/// Sub-map onto the first `prefix` coordinates, in the first r1 parameters.
inline EchelonMap prefix_map(const EchelonMap& emap, std::size_t prefix, std::size_t r1) {
    std::vector<std::size_t> pivots(emap.pivots().begin(),
                                    emap.pivots().begin() + static_cast<std::ptrdiff_t>(r1));
    std::vector<AffineForm> coords;
    coords.reserve(prefix);
    for (std::size_t j = 0; j < prefix; ++j) {
        const AffineForm& form = emap.coord(j);
        for (std::size_t s = r1; s < form.coeffs.size(); ++s)
            if (!form.coeffs[s].is_zero())
                throw InternalError("prefix_map: early coordinate depends on a late parameter");
        coords.push_back(AffineForm{form.constant,
                                    {form.coeffs.begin(),
                                     form.coeffs.begin() + static_cast<std::ptrdiff_t>(r1)}});
    }
    return EchelonMap(emap.ctx(), std::move(pivots), std::move(coords));
}

/// Sub-map onto the coordinates past `prefix` after fixing the first r1
/// parameters to tau; pivots shift down by `prefix`.
inline EchelonMap suffix_map(const EchelonMap& emap, std::size_t prefix, const Point& tau) {
    const std::size_t r1 = tau.size();
    const std::size_t r = emap.dim();
    std::vector<std::size_t> pivots;
    for (std::size_t i = r1; i < r; ++i) pivots.push_back(emap.pivots()[i] - prefix);
    std::vector<AffineForm> coords;
    coords.reserve(emap.ambient_dim() - prefix);
    for (std::size_t j = prefix; j < emap.ambient_dim(); ++j) {
        const AffineForm& form = emap.coord(j);
        FieldElement constant = form.constant;
        for (std::size_t s = 0; s < r1; ++s) constant += form.coeffs[s] * tau[s];
        coords.push_back(AffineForm{constant,
                                    {form.coeffs.begin() + static_cast<std::ptrdiff_t>(r1),
                                     form.coeffs.end()}});
    }
    return EchelonMap(emap.ctx(), std::move(pivots), std::move(coords));
}

struct IntersectTrace {
    // Per completed branch, the per-block projection dimensions; each sums
    // to the dimension of the original subspace.
    std::vector<std::vector<std::size_t>> branch_dims;
};

inline std::vector<Point> intersect_rec(const BlockVariety& v, const EchelonMap& emap,
                                        std::size_t blocks_left, SolverKind kind, u64 guard,
                                        std::vector<std::size_t>& path, IntersectTrace* trace) {
    if (blocks_left == 0) {
        if (emap.dim() != 0) throw InternalError("intersect: leftover parameters past the last block");
        if (trace) trace->branch_dims.push_back(path);
        return {Point{}};
    }
    const std::size_t m = v.block_len();
    std::size_t r1 = 0;
    while (r1 < emap.dim() && emap.pivots()[r1] < m) ++r1;

    const EchelonMap head = prefix_map(emap, m, r1);
    const std::vector<Point> sols = solve_block_emap(v, head, kind, guard);
    std::vector<Point> out;
    for (const Point& s : sols) {
        Point tau;
        tau.reserve(r1);
        for (std::size_t i = 0; i < r1; ++i) tau.push_back(s[emap.pivots()[i]]);
        const EchelonMap tail = suffix_map(emap, m, tau);
        path.push_back(r1);
        const std::vector<Point> rest = intersect_rec(v, tail, blocks_left - 1, kind, guard, path, trace);
        path.pop_back();
        for (const Point& q : rest) {
            Point full = s;
            full.insert(full.end(), q.begin(), q.end());
            out.push_back(std::move(full));
        }
    }
    return out;
}

} // namespace detail

using detail::IntersectTrace;

/// All points of the block variety on H, for dim(H) <= k. The default solver
/// enumerates the p^r parameters of the normalized map.
inline std::vector<Point> solve_block(const BlockVariety& v, const AffineSubspace& h,
                                      SolverKind kind = SolverKind::exhaustive,
                                      u64 guard = 10'000'000) {
    if (h.ambient_dim() != v.block_len())
        throw UsageError("solve_block: subspace ambient does not match block length");
    if (h.dim() > v.equations())
        throw DimensionError("solve_block: subspace dimension " + std::to_string(h.dim()) +
                             " exceeds k = " + std::to_string(v.equations()));
    return detail::solve_block_emap(v, normalize(h), kind, guard);
}

/// S intersect H by block recursion: solve the projection of H onto the
/// first block, fix each solution, and recurse on the remaining blocks with
/// the correspondingly restricted subspace. Output is lexicographic and its
/// size never exceeds d_1^{dim H}.
inline std::vector<Point> intersect_set(const EvasiveSet& s, const AffineSubspace& h,
                                        SolverKind kind = SolverKind::exhaustive,
                                        u64 guard = 10'000'000, IntersectTrace* trace = nullptr) {
    if (h.ambient_dim() != s.point_len())
        throw UsageError("intersect_set: subspace ambient does not match n");
    if (h.dim() > s.block().equations())
        throw DimensionError("intersect_set: subspace dimension " + std::to_string(h.dim()) +
                             " exceeds k = " + std::to_string(s.block().equations()));
    const EchelonMap emap = normalize(h);
    std::vector<std::size_t> path;
    std::vector<Point> out =
        detail::intersect_rec(s.block(), emap, s.blocks(), kind, guard, path, trace);
    detail::check_count_bound(out.size(), s.max_degree(), h.dim(), "intersect_set");
    return out;
}

} // namespace evasive
