#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "evasive/errors.hpp"

namespace evasive {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace detail {

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 pow_mod(u64 a, u64 e, u64 m) {
    u64 result = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return result;
}

} // namespace detail

/// Deterministic Miller-Rabin, exact for every 64-bit input.
inline bool is_prime(u64 m) {
    if (m < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (m == q) return true;
        if (m % q == 0) return false;
    }
    u64 d = m - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is exact for the full 64-bit range.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = detail::pow_mod(a, d, m);
        if (x == 1 || x == m - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mul_mod(x, x, m);
            if (x == m - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Inverse of a modulo mod via extended Euclid; requires gcd(a, mod) = 1.
inline u64 mod_inverse(u64 a, u64 mod) {
    if (mod == 0) throw ParameterError("mod_inverse: modulus must be positive");
    if (mod == 1) return 0;
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(mod), new_r = static_cast<std::int64_t>(a % mod);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1)
        throw ParameterError("mod_inverse: " + std::to_string(a) + " is not invertible modulo " +
                             std::to_string(mod));
    if (t < 0) t += static_cast<std::int64_t>(mod);
    return static_cast<u64>(t);
}

class FieldElement;

/// A prime field F_p. Cheap to copy; equality means same modulus.
class FieldCtx {
public:
    explicit FieldCtx(u64 p) : p_(p) {
        if (!is_prime(p))
            throw ParameterError("FieldCtx: modulus " + std::to_string(p) + " is not prime");
    }

    u64 modulus() const noexcept { return p_; }

    FieldElement element(u64 value) const noexcept;
    FieldElement zero() const noexcept;
    FieldElement one() const noexcept;

    bool operator==(const FieldCtx&) const noexcept = default;

private:
    u64 p_;
};

/// Canonical residue in [0, p), tagged with its modulus.
class FieldElement {
public:
    FieldElement(const FieldCtx& ctx, u64 value) noexcept
        : v_(value % ctx.modulus()), p_(ctx.modulus()) {}

    u64 value() const noexcept { return v_; }
    u64 modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElement& operator+=(const FieldElement& o) {
        check_same(o);
        v_ = (v_ >= p_ - o.v_ && o.v_ != 0) ? v_ - (p_ - o.v_) : v_ + o.v_;
        return *this;
    }
    FieldElement& operator-=(const FieldElement& o) {
        check_same(o);
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + (p_ - o.v_);
        return *this;
    }
    FieldElement& operator*=(const FieldElement& o) {
        check_same(o);
        v_ = detail::mul_mod(v_, o.v_, p_);
        return *this;
    }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }

    FieldElement operator-() const {
        FieldElement r = *this;
        r.v_ = (v_ == 0) ? 0 : p_ - v_;
        return r;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) noexcept { return !(a == b); }
    // Canonical-value order; meaningful within a single field.
    friend bool operator<(const FieldElement& a, const FieldElement& b) noexcept { return a.v_ < b.v_; }

private:
    void check_same(const FieldElement& o) const {
        if (p_ != o.p_)
            throw UsageError("field elements bound to different moduli (" + std::to_string(p_) +
                             " vs " + std::to_string(o.p_) + ")");
    }

    u64 v_;
    u64 p_;
};

inline FieldElement FieldCtx::element(u64 value) const noexcept { return FieldElement(*this, value); }
inline FieldElement FieldCtx::zero() const noexcept { return element(0); }
inline FieldElement FieldCtx::one() const noexcept { return element(1); }

/// a^e by square-and-multiply; pow(0,0) = 1.
inline FieldElement pow(const FieldElement& a, u64 e) {
    FieldCtx ctx(a.modulus());
    return ctx.element(detail::pow_mod(a.value(), e, a.modulus()));
}

/// Multiplicative inverse via Fermat; inv(0) is an error.
inline FieldElement inv(const FieldElement& a) {
    if (a.is_zero()) throw DivisionByZeroError("inv: zero has no inverse");
    return pow(a, a.modulus() - 2);
}

/// The unique x with x^d = a, for gcd(d, p-1) = 1. root(0, d) = 0.
inline FieldElement root(const FieldElement& a, u64 d) {
    if (d == 0) throw ParameterError("root: degree must be positive");
    const u64 p = a.modulus();
    if (p == 2) return a; // x^d = x on F_2
    const u64 e = mod_inverse(d, p - 1);
    if (a.is_zero()) return a;
    return pow(a, e);
}

/// Point of F^n (and message of F^{(1-eps)n}); coordinates share one field.
using Point = std::vector<FieldElement>;

} // namespace evasive
