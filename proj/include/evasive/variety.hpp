#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "evasive/errors.hpp"
#include "evasive/field.hpp"
#include "evasive/linalg.hpp"
#include "evasive/params.hpp"

namespace evasive {

namespace detail {

/// p^e if it stays within limit, otherwise limit + 1.
inline u64 checked_pow(u64 p, std::size_t e, u64 limit) {
    u64 result = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (result > limit / p) return limit + 1;
        result *= p;
    }
    return result;
}

/// Lexicographic odometer over F_p^len; returns false after the last tuple.
inline bool next_tuple(std::vector<u64>& t, u64 p) {
    for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < p) return true;
        t[i] = 0;
    }
    return false;
}

} // namespace detail

/// One block of the construction: the common zero set in F^m of
///   f_i(x) = sum_j A[i][j] * x_j^{d_j},   i = 1..k,
/// where the degrees at the pivot columns are co-prime to p-1. Membership is
/// a direct evaluation; encode/decode realize the bijection between F^{m-k}
/// and the block via the regular pivot minor of A.
class BlockVariety {
public:
    BlockVariety(const FieldCtx& ctx, MatrixFp a, std::vector<u64> degrees,
                 std::vector<std::size_t> pivots)
        : ctx_(ctx),
          a_(std::move(a)),
          degrees_(std::move(degrees)),
          pivots_(std::move(pivots)),
          mixing_(ctx, 0, 0) {
        const std::size_t k = a_.rows(), m = a_.cols();
        if (a_.modulus() != ctx_.modulus()) throw UsageError("BlockVariety: matrix from wrong field");
        if (k < 1 || k > m) throw ParameterError("BlockVariety: need 1 <= k <= m");
        if (degrees_.size() != m) throw ParameterError("BlockVariety: expected m degrees");
        for (std::size_t j = 0; j < m; ++j) {
            if (degrees_[j] < 1) throw ParameterError("BlockVariety: degrees must be positive");
            if (j + 1 < m && degrees_[j] <= degrees_[j + 1])
                throw ParameterError("BlockVariety: degrees must be strictly decreasing");
        }
        if (pivots_.size() != k) throw ParameterError("BlockVariety: expected k pivot columns");
        for (std::size_t i = 0; i < k; ++i) {
            if (pivots_[i] >= m) throw ParameterError("BlockVariety: pivot column out of range");
            if (i + 1 < k && pivots_[i] >= pivots_[i + 1])
                throw ParameterError("BlockVariety: pivot columns must be strictly increasing");
            // Throws unless the pivot degree is co-prime to p-1.
            inv_exponents_.push_back(ctx_.modulus() == 2
                                         ? 1
                                         : mod_inverse(degrees_[pivots_[i]], ctx_.modulus() - 1));
        }
        std::size_t next = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (next < k && pivots_[next] == j)
                ++next;
            else
                free_cols_.push_back(j);
        }
        try {
            mixing_ = inverse(a_.submatrix(all_rows(), pivots_));
        } catch (const SingularMatrixError&) {
            throw ParameterError("BlockVariety: pivot minor of A is singular");
        }
    }

    explicit BlockVariety(const EvasiveParams& params)
        : BlockVariety(params.ctx, params.matrix(), params.degrees, params.pivot_set) {}

    FieldCtx ctx() const noexcept { return ctx_; }
    std::size_t equations() const noexcept { return a_.rows(); }  // k
    std::size_t block_len() const noexcept { return a_.cols(); }  // m
    const std::vector<u64>& degrees() const noexcept { return degrees_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    const std::vector<std::size_t>& free_cols() const noexcept { return free_cols_; }
    const MatrixFp& matrix() const noexcept { return a_; }
    /// Inverse of the pivot minor; its rows mix f_1..f_k so that row i
    /// isolates x_{j_i}^{d_{j_i}}.
    const MatrixFp& pivot_mixing() const noexcept { return mixing_; }
    u64 max_degree() const noexcept { return degrees_.front(); }

    /// (f_1(x), ..., f_k(x)).
    std::vector<FieldElement> evaluate(const Point& x) const {
        check_arity(x, block_len(), "evaluate");
        std::vector<FieldElement> powers;
        powers.reserve(block_len());
        for (std::size_t j = 0; j < block_len(); ++j) powers.push_back(pow(x[j], degrees_[j]));
        std::vector<FieldElement> out;
        out.reserve(equations());
        for (std::size_t i = 0; i < equations(); ++i) {
            FieldElement acc = ctx_.zero();
            for (std::size_t j = 0; j < block_len(); ++j) acc += a_.at(i, j) * powers[j];
            out.push_back(acc);
        }
        return out;
    }

    bool member(const Point& x) const {
        for (const auto& v : evaluate(x))
            if (!v.is_zero()) return false;
        return true;
    }

    /// The bijection F^{m-k} -> block: z fills the free coordinates
    /// unchanged, and the pivot coordinates are the unique completion.
    Point encode(const Point& z) const {
        check_arity(z, free_cols_.size(), "encode");
        Point b;
        b.reserve(equations());
        for (std::size_t i = 0; i < equations(); ++i) {
            FieldElement acc = ctx_.zero();
            for (std::size_t t = 0; t < free_cols_.size(); ++t)
                acc += a_.at(i, free_cols_[t]) * pow(z[t], degrees_[free_cols_[t]]);
            b.push_back(-acc);
        }
        const Point y = mixing_ * b;
        Point x(block_len(), ctx_.zero());
        for (std::size_t t = 0; t < free_cols_.size(); ++t) x[free_cols_[t]] = z[t];
        for (std::size_t i = 0; i < equations(); ++i)
            x[pivots_[i]] = y[i].is_zero() ? ctx_.zero() : pow(y[i], inv_exponents_[i]);
        return x;
    }

    /// Inverse of encode: projection onto the free coordinates.
    Point decode(const Point& x) const {
        check_arity(x, block_len(), "decode");
        if (!member(x)) throw NotAMemberError("decode: point is not in the variety");
        Point z;
        z.reserve(free_cols_.size());
        for (std::size_t j : free_cols_) z.push_back(x[j]);
        return z;
    }

    /// Test oracle: every point of F^m passing member, in lexicographic
    /// order. Refuses when p^m exceeds the guard.
    std::vector<Point> enumerate(u64 guard = 10'000'000) const {
        const u64 p = ctx_.modulus();
        if (detail::checked_pow(p, block_len(), guard) > guard)
            throw GuardExceededError("enumerate: p^m exceeds guard " + std::to_string(guard));
        std::vector<Point> out;
        std::vector<u64> tuple(block_len(), 0);
        do {
            Point x;
            x.reserve(block_len());
            for (u64 v : tuple) x.push_back(ctx_.element(v));
            if (member(x)) out.push_back(std::move(x));
        } while (detail::next_tuple(tuple, p));
        return out;
    }

private:
    std::vector<std::size_t> all_rows() const {
        std::vector<std::size_t> r(a_.rows());
        std::iota(r.begin(), r.end(), 0);
        return r;
    }

    static void check_arity(const Point& x, std::size_t want, const char* who) {
        if (x.size() != want)
            throw UsageError(std::string(who) + ": expected " + std::to_string(want) +
                             " coordinates, got " + std::to_string(x.size()));
    }

    FieldCtx ctx_;
    MatrixFp a_;
    std::vector<u64> degrees_;
    std::vector<std::size_t> pivots_;
    std::vector<u64> inv_exponents_;
    std::vector<std::size_t> free_cols_;
    MatrixFp mixing_;
};

} // namespace evasive
