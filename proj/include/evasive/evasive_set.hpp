#pragma once

#include <string>
#include <vector>

#include "evasive/errors.hpp"
#include "evasive/field.hpp"
#include "evasive/params.hpp"
#include "evasive/variety.hpp"

namespace evasive {

/// Pre-image of a set point under the blockwise bijection: (m-k) * (n/m)
/// field elements, grouped per block.
using Message = Point;

/// The product set S = V x ... x V in F^n, where V is one block variety and
/// consecutive length-m coordinate ranges hold independent copies.
class EvasiveSet {
public:
    EvasiveSet(BlockVariety block, std::size_t n) : block_(std::move(block)), n_(n) {
        if (n_ == 0 || n_ % block_.block_len() != 0)
            throw ParameterError("EvasiveSet: block length must divide n");
    }

    explicit EvasiveSet(const EvasiveParams& params) : EvasiveSet(BlockVariety(params), params.n) {}

    const BlockVariety& block() const noexcept { return block_; }
    std::size_t blocks() const noexcept { return n_ / block_.block_len(); }
    std::size_t point_len() const noexcept { return n_; }
    std::size_t message_len() const noexcept {
        return (block_.block_len() - block_.equations()) * blocks();
    }
    FieldCtx ctx() const noexcept { return block_.ctx(); }
    u64 max_degree() const noexcept { return block_.max_degree(); }

    bool member(const Point& x) const {
        check_arity(x, n_, "member");
        const std::size_t m = block_.block_len();
        for (std::size_t b = 0; b < blocks(); ++b) {
            Point chunk(x.begin() + static_cast<std::ptrdiff_t>(b * m),
                        x.begin() + static_cast<std::ptrdiff_t>((b + 1) * m));
            if (!block_.member(chunk)) return false;
        }
        return true;
    }

    Point encode(const Message& msg) const {
        check_arity(msg, message_len(), "encode");
        const std::size_t w = block_.block_len() - block_.equations();
        Point x;
        x.reserve(n_);
        for (std::size_t b = 0; b < blocks(); ++b) {
            Point z(msg.begin() + static_cast<std::ptrdiff_t>(b * w),
                    msg.begin() + static_cast<std::ptrdiff_t>((b + 1) * w));
            for (const auto& c : block_.encode(z)) x.push_back(c);
        }
        return x;
    }

    Message decode(const Point& x) const {
        check_arity(x, n_, "decode");
        const std::size_t m = block_.block_len();
        Message msg;
        msg.reserve(message_len());
        for (std::size_t b = 0; b < blocks(); ++b) {
            Point chunk(x.begin() + static_cast<std::ptrdiff_t>(b * m),
                        x.begin() + static_cast<std::ptrdiff_t>((b + 1) * m));
            for (const auto& c : block_.decode(chunk)) msg.push_back(c);
        }
        return msg;
    }

private:
    static void check_arity(const Point& x, std::size_t want, const char* who) {
        if (x.size() != want)
            throw UsageError(std::string(who) + ": expected " + std::to_string(want) +
                             " coordinates, got " + std::to_string(x.size()));
    }

    BlockVariety block_;
    std::size_t n_;
};

} // namespace evasive
