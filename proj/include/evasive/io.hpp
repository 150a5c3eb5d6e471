#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "evasive/errors.hpp"
#include "evasive/field.hpp"
#include "evasive/linalg.hpp"
#include "evasive/params.hpp"

namespace evasive {

inline constexpr int kParamsFileVersion = 1;

/// Pivot positions are serialized 1-based to match the usual index
/// convention for coordinates; everything internal stays 0-based.
inline nlohmann::json params_to_json(const EvasiveParams& p) {
    nlohmann::json j;
    j["version"] = kParamsFileVersion;
    j["p"] = p.ctx.modulus();
    j["k"] = p.k;
    j["m"] = p.m;
    j["n"] = p.n;
    j["degrees"] = p.degrees;
    j["gammas"] = p.gammas;
    std::vector<std::size_t> pivots;
    pivots.reserve(p.pivot_set.size());
    for (std::size_t idx : p.pivot_set) pivots.push_back(idx + 1);
    j["pivot_set"] = pivots;
    j["inv_exponents"] = p.inv_exponents;
    return j;
}

inline EvasiveParams params_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParameterError("params file: expected a JSON object");
    if (j.value("version", 0) != kParamsFileVersion)
        throw ParameterError("params file: unsupported version");
    for (const char* key : {"p", "k", "m", "n", "degrees", "gammas", "pivot_set", "inv_exponents"})
        if (!j.contains(key)) throw ParameterError(std::string("params file: missing field ") + key);
    std::vector<std::size_t> pivots;
    for (std::size_t idx : j.at("pivot_set").get<std::vector<std::size_t>>()) {
        if (idx < 1) throw ParameterError("params file: pivot positions are 1-based");
        pivots.push_back(idx - 1);
    }
    EvasiveParams p{FieldCtx(j.at("p").get<u64>()),
                    j.at("k").get<std::size_t>(),
                    j.at("m").get<std::size_t>(),
                    j.at("n").get<std::size_t>(),
                    j.at("degrees").get<std::vector<u64>>(),
                    j.at("gammas").get<std::vector<u64>>(),
                    std::move(pivots),
                    j.at("inv_exponents").get<std::vector<u64>>()};
    validate_params(p);
    return p;
}

inline nlohmann::json subspace_to_json(const AffineSubspace& h) {
    nlohmann::json j;
    j["p"] = h.ctx().modulus();
    j["ambient_dim"] = h.ambient_dim();
    j["dim"] = h.dim();
    std::vector<u64> offset;
    offset.reserve(h.ambient_dim());
    for (const auto& c : h.offset()) offset.push_back(c.value());
    j["offset"] = offset;
    std::vector<std::vector<u64>> basis(h.dim(), std::vector<u64>(h.ambient_dim()));
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t jj = 0; jj < h.ambient_dim(); ++jj) basis[i][jj] = h.basis().at(i, jj).value();
    j["basis"] = basis;
    return j;
}

inline AffineSubspace subspace_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParameterError("subspace file: expected a JSON object");
    for (const char* key : {"p", "ambient_dim", "dim", "offset", "basis"})
        if (!j.contains(key)) throw ParameterError(std::string("subspace file: missing field ") + key);
    const FieldCtx ctx(j.at("p").get<u64>());
    const auto n = j.at("ambient_dim").get<std::size_t>();
    const auto r = j.at("dim").get<std::size_t>();
    const auto offset_vals = j.at("offset").get<std::vector<u64>>();
    const auto basis_vals = j.at("basis").get<std::vector<std::vector<u64>>>();
    if (offset_vals.size() != n) throw ParameterError("subspace file: offset arity mismatch");
    if (basis_vals.size() != r) throw ParameterError("subspace file: expected dim basis rows");
    Point offset;
    offset.reserve(n);
    for (u64 v : offset_vals) {
        if (v >= ctx.modulus()) throw ParameterError("subspace file: coordinate out of range");
        offset.push_back(ctx.element(v));
    }
    MatrixFp basis(ctx, r, n);
    for (std::size_t i = 0; i < r; ++i) {
        if (basis_vals[i].size() != n) throw ParameterError("subspace file: ragged basis row");
        for (std::size_t jj = 0; jj < n; ++jj) {
            if (basis_vals[i][jj] >= ctx.modulus())
                throw ParameterError("subspace file: coordinate out of range");
            basis.at(i, jj) = ctx.element(basis_vals[i][jj]);
        }
    }
    return AffineSubspace(std::move(offset), std::move(basis));
}

/// "6,1,0,0" -> point; coordinates must be canonical residues below p.
inline Point parse_point(const FieldCtx& ctx, const std::string& csv, std::size_t expect_arity) {
    Point out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        u64 v = 0;
        try {
            v = std::stoull(item, &pos);
        } catch (const std::exception&) {
            throw ParameterError("point: '" + item + "' is not a coordinate");
        }
        if (pos != item.size()) throw ParameterError("point: '" + item + "' is not a coordinate");
        if (v >= ctx.modulus())
            throw ParameterError("point: coordinate " + item + " is not below p = " +
                                 std::to_string(ctx.modulus()));
        out.push_back(ctx.element(v));
    }
    if (out.size() != expect_arity)
        throw ParameterError("point: expected " + std::to_string(expect_arity) +
                             " coordinates, got " + std::to_string(out.size()));
    return out;
}

inline std::string format_point(const Point& x) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(x[i].value());
    }
    return out;
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot open file for writing: " + path);
    out << text;
}

} // namespace evasive
