// Command-line front end: evaluates single witness points and writes
// parameter sweeps with Monte Carlo error bars as CSV or JSON.

#include "qee/errors.hpp"
#include "qee/photonics.hpp"
#include "qee/states.hpp"
#include "qee/sweep.hpp"
#include "qee/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadArguments = 2;
constexpr int kExitInvariantViolation = 3;

struct EnvArg {
    bool pure;
    double value;
};

EnvArg parse_env_arg(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("--env expects pure:<theta> or mixed:<c0>");
    }
    const std::string family = text.substr(0, colon);
    double value = 0.0;
    try {
        std::size_t consumed = 0;
        value = std::stod(text.substr(colon + 1), &consumed);
        if (colon + 1 + consumed != text.size()) {
            throw std::invalid_argument("trailing characters");
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("--env: could not parse the numeric value in '" + text + "'");
    }
    if (family == "pure") {
        return {true, value};
    }
    if (family == "mixed") {
        return {false, value};
    }
    throw std::invalid_argument("--env family must be 'pure' or 'mixed'");
}

struct SweepOptions {
    std::string family;
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    double t_h = 1.0;
    double t_v = 1.0;
    double vis = 1.0;
    double vis_ideal = 1.0;
    double shots = 0.0;
    int mc_samples = 200;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "csv";
};

void add_sweep_options(CLI::App& cmd, SweepOptions& opt) {
    cmd.add_option("--family", opt.family, "Parameter family to sweep")
        ->required()
        ->check(CLI::IsMember({"pure", "mixed"}));
    cmd.add_option("--from", opt.from, "First grid value")->required();
    cmd.add_option("--to", opt.to, "Last grid value")->required();
    cmd.add_option("--steps", opt.steps, "Number of grid points")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd.add_option("--th", opt.t_h, "PPBS transmittivity for horizontal polarization");
    cmd.add_option("--tv", opt.t_v, "PPBS transmittivity for vertical polarization");
    cmd.add_option("--vis", opt.vis, "Observed HOM visibility");
    cmd.add_option("--vid", opt.vis_ideal, "Ideal HOM visibility");
    cmd.add_option("--shots", opt.shots, "Expected coincidence count per grid point and branch")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd.add_option("--mc-samples", opt.mc_samples, "Poisson resamples per grid point")
        ->capture_default_str();
    cmd.add_option("--seed", opt.seed, "RNG seed")->required();
    cmd.add_option("--out", opt.out_path, "Output file path")->required();
    cmd.add_option("--format", opt.format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
}

int run_witness(const std::string& env_text, const std::string& step2_text, bool feed_forward) {
    const EnvArg env_arg = parse_env_arg(env_text);
    const qee::EnvState env =
        env_arg.pure ? qee::env_from_theta(env_arg.value) : qee::env_mixed(env_arg.value);
    const qee::SecondStep step2 =
        step2_text == "cz" ? qee::SecondStep::cz : qee::SecondStep::cy;

    qee::WitnessResult result{};
    if (feed_forward) {
        result.sx0 = step2 == qee::SecondStep::cz ? qee::feed_forward_cz(0, env)
                                                  : qee::feed_forward_cy(0, env);
        result.sx1 = step2 == qee::SecondStep::cz ? qee::feed_forward_cz(1, env)
                                                  : qee::feed_forward_cy(1, env);
        result.w = 0.5 * (result.sx0 + result.sx1);
    } else {
        result = qee::witness(env, step2);
    }
    nlohmann::ordered_json out{{"sx0", result.sx0}, {"sx1", result.sx1}, {"w", result.w}};
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int run_sweep_command(const SweepOptions& opt) {
    qee::SweepConfig cfg;
    cfg.family = opt.family == "pure" ? qee::EnvPreparation::Family::pure_theta
                                      : qee::EnvPreparation::Family::mixed_c0;
    cfg.grid.reserve(static_cast<std::size_t>(opt.steps));
    if (opt.steps == 1) {
        cfg.grid.push_back(opt.from);
    } else {
        const double step = (opt.to - opt.from) / static_cast<double>(opt.steps - 1);
        for (int i = 0; i < opt.steps; ++i) {
            cfg.grid.push_back(opt.from + step * static_cast<double>(i));
        }
    }
    cfg.params = qee::ImperfectionParams(opt.t_h, opt.t_v, opt.vis, opt.vis_ideal);
    cfg.shots = opt.shots;
    cfg.mc_samples = opt.mc_samples;
    cfg.seed = opt.seed;

    const std::vector<qee::SweepRecord> records = qee::run_sweep(cfg);

    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot open output file: " + opt.out_path);
    }
    if (opt.format == "json") {
        qee::write_json(out, records);
    } else {
        qee::write_csv(out, records);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator of a qubit-environment entanglement witness for "
                 "pure-dephasing interactions"};
    app.require_subcommand(1);

    std::string env_text;
    std::string step2_text = "cz";
    bool feed_forward = false;
    CLI::App* witness_cmd =
        app.add_subcommand("witness", "Evaluate the witness for one environment state");
    witness_cmd->add_option("--env", env_text, "Environment state, pure:<theta> or mixed:<c0>")
        ->required();
    witness_cmd->add_option("--step2", step2_text, "Final controlled gate")
        ->capture_default_str()
        ->check(CLI::IsMember({"cz", "cy"}));
    witness_cmd->add_flag("--feed-forward", feed_forward,
                          "Replace the final gate by measurement plus a conditioned correction");

    SweepOptions sweep_opt;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Sweep the witness over a parameter grid");
    add_sweep_options(*sweep_cmd, sweep_opt);

    SweepOptions noise_opt;
    noise_opt.t_h = 0.983;
    noise_opt.t_v = 0.324;
    noise_opt.vis = 0.75;
    noise_opt.vis_ideal = 0.8;
    CLI::App* noise_cmd = app.add_subcommand(
        "noise-curve", "Sweep with the measured gate parameters as defaults");
    add_sweep_options(*noise_cmd, noise_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadArguments;
    }

    try {
        if (witness_cmd->parsed()) {
            return run_witness(env_text, step2_text, feed_forward);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep_command(sweep_opt);
        }
        return run_sweep_command(noise_opt);
    } catch (const qee::invariant_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvariantViolation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArguments;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
