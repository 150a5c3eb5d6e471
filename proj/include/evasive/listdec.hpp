#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "evasive/errors.hpp"
#include "evasive/evasive_set.hpp"
#include "evasive/intersect.hpp"
#include "evasive/params.hpp"
#include "evasive/rational.hpp"
#include "evasive/rng.hpp"

namespace evasive {

/// Rate of the composed code: restricting messages to the evasive set scales
/// the base rate by (1 - eps), which stays within eps of it.
inline Rational composed_rate(const Rational& rate, const Rational& eps) {
    if (!(Rational::zero() < rate) || !(rate < Rational::one()))
        throw ParameterError("composed_rate: rate must lie in (0, 1)");
    if (!(Rational::zero() < eps) || !(eps < Rational::one()))
        throw ParameterError("composed_rate: eps must lie in (0, 1)");
    const Rational out = (Rational::one() - eps) * rate;
    if (out < rate - eps) throw InternalError("composed_rate: rate identity violated");
    return out;
}

struct SimConfig {
    EvasiveParams params;
    std::size_t trials;
    u64 seed;
    Rational base_rate;
};

struct TrialResult {
    Message planted_message;
    std::vector<Message> list;
    std::size_t list_size;
    bool contained;
};

/// Stand-in for the outer list decoder: a pseudo-random affine subspace of
/// dimension exactly k that contains x. Deterministic for a fixed seed.
inline AffineSubspace oracle_subspace(const EvasiveSet& s, const Point& x, u64 seed) {
    if (!s.member(x)) throw NotAMemberError("oracle_subspace: point is not in the set");
    const FieldCtx ctx = s.ctx();
    const std::size_t k = s.block().equations();
    Rng rng(seed);
    for (;;) {
        MatrixFp basis(ctx, k, s.point_len());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < s.point_len(); ++j)
                basis.at(i, j) = uniform_element(rng, ctx);
        if (rank(basis) != k) continue;
        return AffineSubspace(x, std::move(basis));
    }
}

/// One decode trial: encode the message, obtain the oracle subspace around
/// the codeword point, filter it through the set, and decode the survivors.
/// The planted message must appear and the list must respect d_1^k.
inline TrialResult run_trial(const EvasiveSet& s, const Message& msg, u64 seed) {
    const Point x = s.encode(msg);
    const AffineSubspace h = oracle_subspace(s, x, seed);
    const std::vector<Point> points = intersect_set(s, h);
    std::vector<Message> list;
    list.reserve(points.size());
    for (const Point& pt : points) list.push_back(s.decode(pt));
    const bool contained = std::find(list.begin(), list.end(), msg) != list.end();
    if (!contained) throw InternalError("run_trial: planted message missing from the list");
    u64 bound = 1;
    for (std::size_t i = 0; i < s.block().equations(); ++i) bound *= s.max_degree();
    if (list.size() > bound) throw InternalError("run_trial: list size exceeds d_1^k");
    return TrialResult{msg, std::move(list), points.size(), contained};
}

struct TrialLog {
    u64 seed;
    std::size_t list_size;
    bool contained;
};

struct SimSummary {
    std::size_t trials;
    std::size_t max_list;
    bool all_contained;
    std::vector<TrialLog> log;
};

/// Runs cfg.trials independent trials on uniformly drawn messages. The
/// master engine is seeded with cfg.seed and hands each trial two draws: a
/// message seed and an oracle seed.
inline SimSummary run_simulation(const SimConfig& cfg) {
    if (cfg.trials < 1) throw ParameterError("run_simulation: trials must be at least 1");
    const EvasiveSet s(cfg.params);
    Rng master(cfg.seed);
    SimSummary summary{cfg.trials, 0, true, {}};
    summary.log.reserve(cfg.trials);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const u64 msg_seed = master();
        const u64 oracle_seed = master();
        Rng msg_rng(msg_seed);
        const Message msg = uniform_point(msg_rng, s.ctx(), s.message_len());
        const TrialResult result = run_trial(s, msg, oracle_seed);
        summary.max_list = std::max(summary.max_list, result.list_size);
        summary.all_contained = summary.all_contained && result.contained;
        summary.log.push_back(TrialLog{oracle_seed, result.list_size, result.contained});
    }
    return summary;
}

} // namespace evasive
