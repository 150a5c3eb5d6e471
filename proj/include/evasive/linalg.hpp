#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "evasive/errors.hpp"
#include "evasive/field.hpp"

namespace evasive {

/// Dense row-major matrix over F_p.
class MatrixFp {
public:
    MatrixFp(const FieldCtx& ctx, std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), p_(ctx.modulus()), data_(rows * cols, ctx.zero()) {}

    static MatrixFp from_rows(const FieldCtx& ctx, const std::vector<Point>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        MatrixFp m(ctx, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw UsageError("MatrixFp::from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    u64 modulus() const noexcept { return p_; }
    FieldCtx ctx() const { return FieldCtx(p_); }

    FieldElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const FieldElement& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Point row(std::size_t i) const {
        Point r;
        r.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
        return r;
    }

    Point col(std::size_t j) const {
        Point c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
        return c;
    }

    /// Restriction to the given rows and columns, in the given order.
    MatrixFp submatrix(const std::vector<std::size_t>& row_idx,
                       const std::vector<std::size_t>& col_idx) const {
        MatrixFp s(ctx(), row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j) s.at(i, j) = at(row_idx[i], col_idx[j]);
        return s;
    }

    friend Point operator*(const MatrixFp& a, const Point& x) {
        if (x.size() != a.cols_) throw UsageError("matrix-vector product: arity mismatch");
        const FieldCtx ctx = a.ctx();
        Point y;
        y.reserve(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            FieldElement acc = ctx.zero();
            for (std::size_t j = 0; j < a.cols_; ++j) acc += a.at(i, j) * x[j];
            y.push_back(acc);
        }
        return y;
    }

    friend bool operator==(const MatrixFp& a, const MatrixFp& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    u64 p_;
    std::vector<FieldElement> data_;
};

namespace detail {

/// In-place reduced row echelon form; returns the pivot columns in order.
inline std::vector<std::size_t> row_reduce(MatrixFp& m) {
    const FieldCtx ctx = m.ctx();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        const FieldElement scale = inv(m.at(row, col));
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) *= scale;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            const FieldElement f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

inline std::size_t rank(MatrixFp m) { return detail::row_reduce(m).size(); }

inline FieldElement determinant(const MatrixFp& a) {
    if (a.rows() != a.cols()) throw UsageError("determinant: matrix not square");
    const FieldCtx ctx = a.ctx();
    MatrixFp m = a;
    FieldElement det = ctx.one();
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m.at(sel, col).is_zero()) ++sel;
        if (sel == n) return ctx.zero();
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        const FieldElement scale = inv(m.at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const FieldElement f = m.at(i, col) * scale;
            for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

/// Unique solution of Ax = b for regular square A (Gaussian elimination).
inline Point solve(const MatrixFp& a, const Point& b) {
    if (a.rows() != a.cols()) throw UsageError("solve: matrix not square");
    if (b.size() != a.rows()) throw UsageError("solve: right-hand side arity mismatch");
    const std::size_t n = a.rows();
    MatrixFp aug(a.ctx(), n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    const auto pivots = detail::row_reduce(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() == n))
        throw SingularMatrixError("solve: singular matrix");
    return aug.col(n);
}

inline MatrixFp inverse(const MatrixFp& a) {
    if (a.rows() != a.cols()) throw UsageError("inverse: matrix not square");
    const std::size_t n = a.rows();
    const FieldCtx ctx = a.ctx();
    MatrixFp aug(ctx, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = ctx.one();
    }
    const auto pivots = detail::row_reduce(aug);
    for (std::size_t i = 0; i < n; ++i)
        if (i >= pivots.size() || pivots[i] != i)
            throw SingularMatrixError("inverse: singular matrix");
    MatrixFp out(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

/// k x m matrix A with A[i][j] = gamma_j^i, i = 1..k. Generators must be
/// distinct and nonzero so that every minor is regular.
inline MatrixFp vandermonde(const FieldCtx& ctx, std::size_t k, const std::vector<FieldElement>& gammas) {
    const std::size_t m = gammas.size();
    for (std::size_t j = 0; j < m; ++j) {
        if (gammas[j].modulus() != ctx.modulus()) throw UsageError("vandermonde: generator from wrong field");
        if (gammas[j].is_zero()) throw ParameterError("vandermonde: generators must be nonzero");
        for (std::size_t j2 = j + 1; j2 < m; ++j2)
            if (gammas[j] == gammas[j2]) throw ParameterError("vandermonde: generators must be distinct");
    }
    MatrixFp a(ctx, k, m);
    for (std::size_t j = 0; j < m; ++j) {
        FieldElement v = gammas[j];
        for (std::size_t i = 0; i < k; ++i) {
            a.at(i, j) = v;
            v *= gammas[j];
        }
    }
    return a;
}

namespace detail {

/// Advances idx to the next r-combination of {0..n-1}; false when exhausted.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t r = idx.size();
    for (std::size_t i = r; i-- > 0;) {
        if (idx[i] + (r - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline u64 binomial(u64 n, u64 r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    u64 result = 1;
    for (u64 i = 1; i <= r; ++i) result = result * (n - r + i) / i;
    return result;
}

} // namespace detail

/// Test oracle: true iff for every r <= rows, the restriction of A to its
/// first r rows is r-regular, meaning every choice of r columns gives a
/// regular r x r minor. (Arbitrary row subsets would be too strong: already
/// over F_7, rows 1 and 3 of a Vandermonde matrix produce the singular minor
/// gamma_a gamma_b (gamma_b - gamma_a)(gamma_b + gamma_a) whenever
/// gamma_a + gamma_b = 0.) Refuses when the minor count exceeds the guard.
inline bool is_strongly_regular(const MatrixFp& a, u64 guard = 1'000'000) {
    const std::size_t k = a.rows(), m = a.cols();
    if (k > m) throw UsageError("is_strongly_regular: requires rows <= cols");
    u64 total = 0;
    for (std::size_t r = 1; r <= k; ++r) total += detail::binomial(m, r);
    if (total > guard)
        throw GuardExceededError("is_strongly_regular: " + std::to_string(total) +
                                 " minors exceed guard " + std::to_string(guard));
    for (std::size_t r = 1; r <= k; ++r) {
        std::vector<std::size_t> rsel(r);
        std::iota(rsel.begin(), rsel.end(), 0);
        std::vector<std::size_t> csel(r);
        std::iota(csel.begin(), csel.end(), 0);
        do {
            if (determinant(a.submatrix(rsel, csel)).is_zero()) return false;
        } while (detail::next_combination(csel, m));
    }
    return true;
}

/// Affine subspace of F^n given as offset + row span of a full-rank basis.
/// Dependent basis rows are rejected, not reduced.
class AffineSubspace {
public:
    AffineSubspace(Point offset, MatrixFp basis) : offset_(std::move(offset)), basis_(std::move(basis)) {
        if (offset_.size() != basis_.cols())
            throw UsageError("AffineSubspace: offset arity does not match basis columns");
        for (const auto& c : offset_)
            if (c.modulus() != basis_.modulus()) throw UsageError("AffineSubspace: mixed moduli");
        if (basis_.rows() > basis_.cols())
            throw ParameterError("AffineSubspace: dimension exceeds ambient dimension");
        if (rank(basis_) != basis_.rows())
            throw ParameterError("AffineSubspace: basis rows are linearly dependent");
    }

    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Point& offset() const noexcept { return offset_; }
    const MatrixFp& basis() const noexcept { return basis_; }
    FieldCtx ctx() const { return basis_.ctx(); }

    /// offset + sum t_i * basis_i; enumerating t over F^r walks the subspace.
    Point point_at(const Point& t) const {
        if (t.size() != dim()) throw UsageError("AffineSubspace::point_at: parameter arity mismatch");
        Point x = offset_;
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < ambient_dim(); ++j) x[j] += t[i] * basis_.at(i, j);
        return x;
    }

private:
    Point offset_;
    MatrixFp basis_;
};

/// Affine function of parameters t_1..t_r.
struct AffineForm {
    FieldElement constant;
    std::vector<FieldElement> coeffs;

    FieldElement eval(const Point& t) const {
        if (t.size() != coeffs.size()) throw UsageError("AffineForm::eval: parameter arity mismatch");
        FieldElement acc = constant;
        for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * t[i];
        return acc;
    }
};

/// Upper-echelon parametrization of an affine subspace: pivot coordinate j_i
/// is exactly t_i, coordinates before j_1 are constant, and coordinates
/// before j_i involve only t_1..t_{i-1}.
class EchelonMap {
public:
    EchelonMap(const FieldCtx& ctx, std::vector<std::size_t> pivots, std::vector<AffineForm> coords)
        : p_(ctx.modulus()), pivots_(std::move(pivots)), coords_(std::move(coords)) {
        const std::size_t r = pivots_.size();
        for (const auto& form : coords_) {
            if (form.coeffs.size() != r) throw ParameterError("EchelonMap: ragged coefficient rows");
            if (form.constant.modulus() != p_) throw UsageError("EchelonMap: mixed moduli");
        }
        for (std::size_t i = 0; i + 1 < r; ++i)
            if (pivots_[i] >= pivots_[i + 1]) throw ParameterError("EchelonMap: pivots not increasing");
        if (r > 0 && pivots_.back() >= coords_.size())
            throw ParameterError("EchelonMap: pivot out of range");
        check_structure();
    }

    std::size_t ambient_dim() const noexcept { return coords_.size(); }
    std::size_t dim() const noexcept { return pivots_.size(); }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    const AffineForm& coord(std::size_t j) const { return coords_[j]; }
    FieldCtx ctx() const { return FieldCtx(p_); }

    Point apply(const Point& t) const {
        if (t.size() != dim()) throw UsageError("EchelonMap::apply: parameter arity mismatch");
        Point x;
        x.reserve(coords_.size());
        for (const auto& form : coords_) x.push_back(form.eval(t));
        return x;
    }

private:
    void check_structure() const {
        const FieldCtx ctx(p_);
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            const AffineForm& form = coords_[pivots_[i]];
            if (!form.constant.is_zero()) throw ParameterError("EchelonMap: pivot coordinate has offset");
            for (std::size_t s = 0; s < form.coeffs.size(); ++s) {
                const bool want_one = (s == i);
                if (form.coeffs[s] != (want_one ? ctx.one() : ctx.zero()))
                    throw ParameterError("EchelonMap: pivot coordinate is not the bare parameter");
            }
        }
        // Coordinates left of pivot j_i may involve only t_1..t_{i-1}.
        for (std::size_t i = 0; i < pivots_.size(); ++i)
            for (std::size_t j = 0; j < pivots_[i]; ++j)
                for (std::size_t s = i; s < pivots_.size(); ++s)
                    if (!coords_[j].coeffs[s].is_zero())
                        throw ParameterError("EchelonMap: coordinate ahead of its pivot");
    }

    u64 p_;
    std::vector<std::size_t> pivots_;
    std::vector<AffineForm> coords_;
};

/// Upper-echelon normal form of H with leftmost-minimal pivots. The image of
/// the returned map equals H exactly.
inline EchelonMap normalize(const AffineSubspace& h) {
    const FieldCtx ctx = h.ctx();
    MatrixFp basis = h.basis();
    const auto pivots = detail::row_reduce(basis);
    if (pivots.size() != h.dim())
        throw InternalError("normalize: basis rank changed under reduction");
    // Clear the pivot coordinates of the offset so each pivot coordinate of
    // the map is the bare parameter.
    Point offset = h.offset();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const FieldElement c = offset[pivots[i]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < h.ambient_dim(); ++j) offset[j] -= c * basis.at(i, j);
    }
    std::vector<AffineForm> coords;
    coords.reserve(h.ambient_dim());
    for (std::size_t j = 0; j < h.ambient_dim(); ++j) {
        AffineForm form{offset[j], {}};
        form.coeffs.reserve(pivots.size());
        for (std::size_t i = 0; i < pivots.size(); ++i) form.coeffs.push_back(basis.at(i, j));
        coords.push_back(std::move(form));
    }
    return EchelonMap(ctx, pivots, std::move(coords));
}

} // namespace evasive
