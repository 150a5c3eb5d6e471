#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "evasive/errors.hpp"
#include "evasive/field.hpp"

namespace evasive {

/// Sparse multivariate polynomial over F_p in a fixed number of variables.
/// Sized for the triangularized block systems: few variables, modest degrees.
class MultiPoly {
public:
    using Exponents = std::vector<u64>;

    MultiPoly(const FieldCtx& ctx, std::size_t nvars) : p_(ctx.modulus()), nvars_(nvars) {}

    static MultiPoly constant(const FieldCtx& ctx, std::size_t nvars, const FieldElement& c) {
        MultiPoly poly(ctx, nvars);
        poly.add_term(Exponents(nvars, 0), c);
        return poly;
    }

    static MultiPoly variable(const FieldCtx& ctx, std::size_t nvars, std::size_t index) {
        if (index >= nvars) throw UsageError("MultiPoly::variable: index out of range");
        MultiPoly poly(ctx, nvars);
        Exponents e(nvars, 0);
        e[index] = 1;
        poly.add_term(e, ctx.one());
        return poly;
    }

    std::size_t nvars() const noexcept { return nvars_; }
    FieldCtx ctx() const { return FieldCtx(p_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Exponents, FieldElement>& terms() const noexcept { return terms_; }

    /// Total degree; -1 for the zero polynomial.
    long total_degree() const {
        long deg = -1;
        for (const auto& [e, c] : terms_) {
            const u64 sum = std::accumulate(e.begin(), e.end(), u64{0});
            deg = std::max(deg, static_cast<long>(sum));
        }
        return deg;
    }

    void add_term(const Exponents& e, const FieldElement& c) {
        if (e.size() != nvars_) throw UsageError("MultiPoly::add_term: exponent arity mismatch");
        if (c.modulus() != p_) throw UsageError("MultiPoly::add_term: coefficient from wrong field");
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        } else if (c.is_zero()) {
            terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }

    MultiPoly& operator-=(const MultiPoly& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly out(a.ctx(), a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.nvars_);
                for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    MultiPoly scaled(const FieldElement& s) const {
        MultiPoly out(ctx(), nvars_);
        for (const auto& [e, c] : terms_) out.add_term(e, c * s);
        return out;
    }

    MultiPoly pow(u64 e) const {
        MultiPoly result = constant(ctx(), nvars_, ctx().one());
        MultiPoly base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    /// Substitutes t_i -> t_i^{exps[i]}.
    MultiPoly raise_vars(const std::vector<u64>& exps) const {
        if (exps.size() != nvars_) throw UsageError("MultiPoly::raise_vars: arity mismatch");
        MultiPoly out(ctx(), nvars_);
        for (const auto& [e, c] : terms_) {
            Exponents raised(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) raised[i] = e[i] * exps[i];
            out.add_term(raised, c);
        }
        return out;
    }

    FieldElement eval(const Point& at) const {
        if (at.size() != nvars_) throw UsageError("MultiPoly::eval: arity mismatch");
        const FieldCtx c = ctx();
        FieldElement acc = c.zero();
        for (const auto& [e, coeff] : terms_) {
            FieldElement term = coeff;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i] > 0) term *= evasive::pow(at[i], e[i]);
            acc += term;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.p_ == b.p_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const MultiPoly& o) const {
        if (p_ != o.p_ || nvars_ != o.nvars_)
            throw UsageError("MultiPoly: incompatible operands");
    }

    u64 p_;
    std::size_t nvars_;
    std::map<Exponents, FieldElement> terms_;
};

} // namespace evasive
