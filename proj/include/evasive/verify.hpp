#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "evasive/errors.hpp"
#include "evasive/evasive_set.hpp"
#include "evasive/intersect.hpp"
#include "evasive/params.hpp"
#include "evasive/rng.hpp"
#include "evasive/variety.hpp"

namespace evasive {

/// Brute-force oracle: walks all p^dim parameter values of H directly off
/// its offset/basis presentation and filters by membership. Deliberately
/// avoids the normalization and recursion used by intersect_set.
inline std::vector<Point> subspace_members_bruteforce(const EvasiveSet& s, const AffineSubspace& h,
                                                      u64 guard = 10'000'000) {
    if (h.ambient_dim() != s.point_len())
        throw UsageError("subspace_members_bruteforce: ambient mismatch");
    const u64 p = s.ctx().modulus();
    if (detail::checked_pow(p, h.dim(), guard) > guard)
        throw GuardExceededError("subspace_members_bruteforce: p^dim exceeds guard");
    std::vector<Point> out;
    std::vector<u64> tuple(h.dim(), 0);
    const FieldCtx ctx = s.ctx();
    do {
        Point t;
        t.reserve(h.dim());
        for (u64 v : tuple) t.push_back(ctx.element(v));
        Point x = h.point_at(t);
        if (s.member(x)) out.push_back(std::move(x));
    } while (detail::next_tuple(tuple, p));
    std::sort(out.begin(), out.end());
    return out;
}

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerifyOptions {
    std::size_t trials = 200;
    u64 seed = 0;
    u64 enumeration_guard = 10'000'000;
};

/// The oracle suite behind the `verify` command. Output depends only on the
/// instance, the trial count and the seed.
inline std::vector<CheckResult> run_verification(const EvasiveParams& params,
                                                 const VerifyOptions& opt = {}) {
    std::vector<CheckResult> results;
    const EvasiveSet s(params);
    const BlockVariety& block = s.block();
    const FieldCtx ctx = params.ctx;
    const u64 p = ctx.modulus();

    {
        bool pass = false;
        std::string detail;
        try {
            pass = is_strongly_regular(params.matrix());
            detail = pass ? "all minors regular" : "found a singular minor";
        } catch (const GuardExceededError&) {
            pass = true;
            detail = "skipped: minor count above guard";
        }
        results.push_back({"strong-regularity", pass, detail});
    }

    const std::size_t free_len = params.m - params.k;
    u64 expected_size = 1;
    for (std::size_t i = 0; i < free_len; ++i) expected_size *= p;
    {
        bool pass = false;
        std::string detail;
        try {
            const auto points = block.enumerate(opt.enumeration_guard);
            pass = points.size() == expected_size;
            detail = "|V| = " + std::to_string(points.size()) + ", expected p^(m-k) = " +
                     std::to_string(expected_size);
        } catch (const GuardExceededError&) {
            pass = true;
            detail = "skipped: p^m above guard";
        }
        results.push_back({"block-size", pass, detail});
    }

    {
        // Round-trip both ways; exhaustive when the message space is small.
        bool pass = true;
        std::size_t checked = 0;
        if (expected_size <= opt.enumeration_guard &&
            detail::checked_pow(p, params.m, opt.enumeration_guard) <= opt.enumeration_guard) {
            std::vector<u64> tuple(free_len, 0);
            do {
                Point z;
                z.reserve(free_len);
                for (u64 v : tuple) z.push_back(ctx.element(v));
                const Point x = block.encode(z);
                if (!block.member(x) || block.decode(x) != z) {
                    pass = false;
                    break;
                }
                ++checked;
            } while (detail::next_tuple(tuple, p));
        } else {
            Rng rng(opt.seed);
            for (std::size_t t = 0; t < opt.trials; ++t) {
                const Point z = uniform_point(rng, ctx, free_len);
                const Point x = block.encode(z);
                if (!block.member(x) || block.decode(x) != z) {
                    pass = false;
                    break;
                }
                ++checked;
            }
        }
        results.push_back({"block-bijection", pass,
                           (pass ? "round-trip ok on " : "round-trip failed after ") +
                               std::to_string(checked) + " messages"});
    }

    {
        bool pass = true;
        std::size_t worst = 0;
        Rng rng(opt.seed + 1);
        for (std::size_t t = 0; t < opt.trials && pass; ++t) {
            const std::size_t r = 1 + t % params.k;
            const AffineSubspace h = random_affine_subspace(rng, ctx, params.n, r);
            u64 bound = 1;
            for (std::size_t i = 0; i < r; ++i) bound *= block.max_degree();
            const auto members = subspace_members_bruteforce(s, h, opt.enumeration_guard);
            worst = std::max(worst, members.size());
            if (members.size() > bound) pass = false;
        }
        results.push_back({"evasiveness-sampled", pass,
                           std::to_string(opt.trials) + " subspaces, largest intersection " +
                               std::to_string(worst)});
    }

    {
        bool pass = true;
        Rng rng(opt.seed + 2);
        std::size_t agreed = 0;
        for (std::size_t t = 0; t < opt.trials && pass; ++t) {
            const std::size_t r = 1 + t % params.k;
            const AffineSubspace h = random_affine_subspace(rng, ctx, params.n, r);
            const auto expect = subspace_members_bruteforce(s, h, opt.enumeration_guard);
            const auto got = intersect_set(s, h, SolverKind::exhaustive, opt.enumeration_guard);
            if (expect != got)
                pass = false;
            else
                ++agreed;
        }
        results.push_back({"intersect-vs-enumeration", pass,
                           std::to_string(agreed) + " of " + std::to_string(opt.trials) +
                               " subspaces agree"});
    }

    return results;
}

inline std::string format_report(const std::vector<CheckResult>& results) {
    std::string out;
    bool all = true;
    for (const auto& r : results) {
        out += (r.pass ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
        all = all && r.pass;
    }
    out += all ? "verdict: all checks passed\n" : "verdict: some checks FAILED\n";
    return out;
}

} // namespace evasive
