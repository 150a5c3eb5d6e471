// Command-line surface for the subspace-evasive set toolkit: instance
// generation, encoding/decoding, membership, subspace intersection, the
// verification suite, and the list-decode simulation.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "evasive/evasive.hpp"

namespace {

// Exit codes: 0 success, 1 domain errors raised while computing,
// 2 usage errors (flags, unreadable or malformed inputs).
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

evasive::EvasiveParams load_params(const std::string& path) {
    try {
        return evasive::params_from_json(evasive::read_json_file(path));
    } catch (const evasive::Error& e) {
        throw InputError(e.what());
    }
}

evasive::AffineSubspace load_subspace(const std::string& path, const evasive::EvasiveParams& params) {
    try {
        evasive::AffineSubspace h = evasive::subspace_from_json(evasive::read_json_file(path));
        if (h.ctx().modulus() != params.ctx.modulus())
            throw InputError("subspace modulus does not match params");
        if (h.ambient_dim() != params.n) throw InputError("subspace ambient dimension does not match n");
        return h;
    } catch (const evasive::Error& e) {
        throw InputError(e.what());
    }
}

evasive::Point load_point(const std::string& csv, const evasive::FieldCtx& ctx, std::size_t arity) {
    try {
        return evasive::parse_point(ctx, csv, arity);
    } catch (const evasive::Error& e) {
        throw InputError(e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"subspace-evasive sets over prime fields"};
    app.require_subcommand(1);

    std::string params_path;
    std::string subspace_path;
    std::string point_csv;
    std::string message_csv;
    std::size_t opt_k = 0, opt_m = 0, opt_n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;

    auto* gen = app.add_subcommand("gen-params", "generate a construction instance");
    gen->add_option("--k", opt_k, "subspace-dimension budget")->required();
    gen->add_option("--m", opt_m, "block length")->required();
    gen->add_option("--n", opt_n, "ambient dimension (multiple of m)")->required();
    gen->add_option("--params", params_path, "output file (stdout when omitted)");

    auto* enc = app.add_subcommand("encode", "map a message to its set point");
    enc->add_option("--params", params_path, "params file")->required();
    enc->add_option("--message", message_csv, "message coordinates, comma-separated")->required();

    auto* dec = app.add_subcommand("decode", "map a set point back to its message");
    dec->add_option("--params", params_path, "params file")->required();
    dec->add_option("--point", point_csv, "point coordinates, comma-separated")->required();

    auto* mem = app.add_subcommand("member", "test whether a point lies in the set");
    mem->add_option("--params", params_path, "params file")->required();
    mem->add_option("--point", point_csv, "point coordinates, comma-separated")->required();

    auto* its = app.add_subcommand("intersect", "compute the set intersection with a subspace");
    its->add_option("--params", params_path, "params file")->required();
    its->add_option("--subspace", subspace_path, "subspace file")->required();

    auto* ver = app.add_subcommand("verify", "run the oracle suite and print a pass/fail table");
    ver->add_option("--params", params_path, "params file");
    ver->add_option("--k", opt_k, "generate an instance instead: k");
    ver->add_option("--m", opt_m, "generate an instance instead: m");
    ver->add_option("--n", opt_n, "generate an instance instead: n");
    ver->add_option("--trials", trials, "sampled checks per property")->default_val(200);
    ver->add_option("--seed", seed, "sampling seed")->default_val(0);

    auto* sim = app.add_subcommand("simulate", "run list-decode filter trials");
    sim->add_option("--params", params_path, "params file")->required();
    sim->add_option("--trials", trials, "number of trials")->default_val(100);
    sim->add_option("--seed", seed, "trial seed")->default_val(0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsageError;
    }

    try {
        if (gen->parsed()) {
            const auto params = evasive::gen_params(opt_k, opt_m, opt_n);
            const std::string text = evasive::params_to_json(params).dump(2) + "\n";
            if (params_path.empty())
                std::cout << text;
            else
                evasive::write_text_file(params_path, text);
            return 0;
        }

        if (enc->parsed()) {
            const auto params = load_params(params_path);
            const evasive::EvasiveSet s(params);
            const auto msg = load_point(message_csv, params.ctx, s.message_len());
            std::cout << evasive::format_point(s.encode(msg)) << "\n";
            return 0;
        }

        if (dec->parsed()) {
            const auto params = load_params(params_path);
            const evasive::EvasiveSet s(params);
            const auto x = load_point(point_csv, params.ctx, s.point_len());
            std::cout << evasive::format_point(s.decode(x)) << "\n";
            return 0;
        }

        if (mem->parsed()) {
            const auto params = load_params(params_path);
            const evasive::EvasiveSet s(params);
            const auto x = load_point(point_csv, params.ctx, s.point_len());
            std::cout << (s.member(x) ? "true" : "false") << "\n";
            return 0;
        }

        if (its->parsed()) {
            const auto params = load_params(params_path);
            const evasive::EvasiveSet s(params);
            const auto h = load_subspace(subspace_path, params);
            for (const auto& pt : evasive::intersect_set(s, h))
                std::cout << evasive::format_point(pt) << "\n";
            return 0;
        }

        if (ver->parsed()) {
            std::optional<evasive::EvasiveParams> params;
            if (!params_path.empty())
                params = load_params(params_path);
            else if (opt_k && opt_m && opt_n)
                params = evasive::gen_params(opt_k, opt_m, opt_n);
            else
                throw InputError("verify needs --params or all of --k/--m/--n");
            evasive::VerifyOptions opt;
            opt.trials = trials;
            opt.seed = seed;
            const auto results = evasive::run_verification(*params, opt);
            std::cout << evasive::format_report(results);
            for (const auto& r : results)
                if (!r.pass) return kExitDomainError;
            return 0;
        }

        if (sim->parsed()) {
            const auto params = load_params(params_path);
            const evasive::SimConfig cfg{params, trials, seed, evasive::Rational(1, 2)};
            const auto summary = evasive::run_simulation(cfg);
            for (std::size_t t = 0; t < summary.log.size(); ++t) {
                const auto& line = summary.log[t];
                std::cout << "trial=" << (t + 1) << " seed=" << line.seed
                          << " list_size=" << line.list_size
                          << " contained=" << (line.contained ? "true" : "false") << "\n";
            }
            std::cout << "trials=" << summary.trials << " max_list=" << summary.max_list
                      << " all_contained=" << (summary.all_contained ? "true" : "false") << "\n";
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const evasive::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    }
    return 0;
}
