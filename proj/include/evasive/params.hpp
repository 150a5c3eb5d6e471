#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "evasive/errors.hpp"
#include "evasive/field.hpp"
#include "evasive/linalg.hpp"

namespace evasive {

/// Prime p together with k degrees > 1 co-prime to p-1, produced by the
/// deterministic arithmetic-progression search.
struct FieldPlan {
    u64 p;
    std::vector<u64> special_degrees; // strictly decreasing, all > 1
    u64 K;                            // product of the first ceil(log2(k+1)) odd primes
};

/// Deterministic: computes K, picks the k smallest odd divisors of K above 1,
/// and scans (n, 2nK] for the first prime congruent to 2 mod K. Such a prime
/// has p-1 co-prime to K and hence to every chosen degree.
inline FieldPlan gen_field_plan(std::size_t k, u64 n) {
    if (k < 1) throw ParameterError("gen_field_plan: k must be at least 1");
    std::size_t count = 0;
    while ((u64{1} << count) < static_cast<u64>(k) + 1) ++count;
    std::vector<u64> primes;
    for (u64 c = 3; primes.size() < count; c += 2)
        if (is_prime(c)) primes.push_back(c);
    u64 K = 1;
    for (u64 q : primes) K *= q;

    std::vector<u64> divisors{1};
    for (u64 q : primes) {
        const std::size_t s = divisors.size();
        for (std::size_t i = 0; i < s; ++i) divisors.push_back(divisors[i] * q);
    }
    std::sort(divisors.begin(), divisors.end());
    divisors.erase(divisors.begin()); // drop 1
    if (divisors.size() < k) throw ParameterError("gen_field_plan: not enough divisors of K");
    std::vector<u64> degrees(divisors.begin(), divisors.begin() + static_cast<std::ptrdiff_t>(k));
    std::reverse(degrees.begin(), degrees.end());

    const u64 limit = 2 * n * K;
    u64 p = n + 1;
    p += (2 % K + K - p % K) % K; // first candidate > n with p = 2 mod K
    for (; p <= limit; p += K) {
        if (is_prime(p)) {
            for (u64 d : degrees)
                if (std::gcd(p - 1, d) != 1)
                    throw InternalError("gen_field_plan: degree not co-prime to p-1");
            return FieldPlan{p, std::move(degrees), K};
        }
    }
    throw SearchExhaustedError("gen_field_plan: no prime = 2 mod " + std::to_string(K) +
                               " in (" + std::to_string(n) + ", " + std::to_string(limit) + "]");
}

/// Complete description of one construction instance.
struct EvasiveParams {
    FieldCtx ctx;
    std::size_t k; // subspace-dimension budget
    std::size_t m; // block length, k/eps
    std::size_t n; // ambient dimension, multiple of m
    std::vector<u64> degrees;            // d_1 > ... > d_m >= 1
    std::vector<u64> gammas;             // m distinct nonzero generators
    std::vector<std::size_t> pivot_set;  // 0-based positions of the k degrees co-prime to p-1
    std::vector<u64> inv_exponents;      // e_i = degrees[pivot_set[i]]^{-1} mod p-1

    std::size_t blocks() const noexcept { return n / m; }

    std::vector<FieldElement> gamma_elements() const {
        std::vector<FieldElement> g;
        g.reserve(gammas.size());
        for (u64 v : gammas) g.push_back(ctx.element(v));
        return g;
    }

    /// The k x m generator matrix A with A[i][j] = gamma_j^i.
    MatrixFp matrix() const { return vandermonde(ctx, k, gamma_elements()); }
};

/// Re-checks every structural invariant; used when loading from a file.
inline void validate_params(const EvasiveParams& p) {
    const u64 mod = p.ctx.modulus();
    if (p.k < 1) throw ParameterError("params: k must be at least 1");
    if (p.m < p.k) throw ParameterError("params: m must be at least k");
    if (p.n == 0 || p.n % p.m != 0) throw ParameterError("params: m must divide n");
    if (p.degrees.size() != p.m) throw ParameterError("params: expected m degrees");
    for (std::size_t j = 0; j < p.m; ++j) {
        if (p.degrees[j] < 1) throw ParameterError("params: degrees must be positive");
        if (j + 1 < p.m && p.degrees[j] <= p.degrees[j + 1])
            throw ParameterError("params: degrees must be strictly decreasing");
    }
    if (p.gammas.size() != p.m) throw ParameterError("params: expected m generators");
    std::set<u64> seen;
    for (u64 g : p.gammas) {
        if (g == 0 || g >= mod) throw ParameterError("params: generators must lie in [1, p)");
        if (!seen.insert(g).second) throw ParameterError("params: generators must be distinct");
    }
    if (p.pivot_set.size() != p.k) throw ParameterError("params: expected k pivot positions");
    if (p.inv_exponents.size() != p.k) throw ParameterError("params: expected k inverse exponents");
    for (std::size_t i = 0; i < p.k; ++i) {
        const std::size_t j = p.pivot_set[i];
        if (j >= p.m) throw ParameterError("params: pivot position out of range");
        if (i + 1 < p.k && j >= p.pivot_set[i + 1])
            throw ParameterError("params: pivot positions must be strictly increasing");
        const u64 d = p.degrees[j];
        if (std::gcd(mod - 1, d) != 1)
            throw ParameterError("params: pivot degree " + std::to_string(d) +
                                 " is not co-prime to p-1");
        if (p.inv_exponents[i] != mod_inverse(d, mod - 1))
            throw ParameterError("params: inverse exponent mismatch at pivot " + std::to_string(j));
    }
}

/// Builds a full instance: prime and special degrees from gen_field_plan,
/// remaining degrees filled with the smallest unused integers above 1,
/// generators gamma_j = j.
inline EvasiveParams gen_params(std::size_t k, std::size_t m, std::size_t n) {
    if (k < 1) throw ParameterError("gen_params: k must be at least 1");
    if (m < k) throw ParameterError("gen_params: m must be at least k");
    if (n == 0 || n % m != 0)
        throw ParameterError("gen_params: m = " + std::to_string(m) + " must divide n = " +
                             std::to_string(n));
    const FieldPlan plan = gen_field_plan(k, std::max<u64>(n, m + 1));

    std::set<u64> specials(plan.special_degrees.begin(), plan.special_degrees.end());
    std::vector<u64> degrees = plan.special_degrees;
    for (u64 c = 2; degrees.size() < m; ++c)
        if (!specials.count(c)) degrees.push_back(c);
    std::sort(degrees.rbegin(), degrees.rend());

    std::vector<std::size_t> pivots;
    std::vector<u64> inv_exps;
    for (std::size_t j = 0; j < m; ++j) {
        if (specials.count(degrees[j])) {
            pivots.push_back(j);
            inv_exps.push_back(mod_inverse(degrees[j], plan.p - 1));
        }
    }

    std::vector<u64> gammas(m);
    std::iota(gammas.begin(), gammas.end(), 1);

    EvasiveParams params{FieldCtx(plan.p), k,      m,
                         n,                degrees, gammas,
                         pivots,           inv_exps};
    validate_params(params);
    return params;
}

} // namespace evasive
