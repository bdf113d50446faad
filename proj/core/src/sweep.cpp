#include "qee/sweep.hpp"

#include "qee/errors.hpp"
#include "qee/witness.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

namespace qee {

namespace {

// splitmix64; used to derive independent, order-insensitive RNG streams
// for every (grid point, Monte Carlo sample) pair.
std::uint64_t mix(std::uint64_t state, std::uint64_t salt) {
    std::uint64_t z = state + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double poisson_draw(std::mt19937_64& rng, double mean) {
    if (mean <= 0.0) {
        return 0.0;
    }
    std::poisson_distribution<long long> dist(mean);
    return static_cast<double>(dist(rng));
}

} // namespace

std::vector<double> simulate_counts(std::span<const double> probabilities, double shots) {
    if (shots <= 0.0) {
        throw std::invalid_argument("simulate_counts: shots must be positive");
    }
    std::vector<double> counts;
    counts.reserve(probabilities.size());
    for (double p : probabilities) {
        if (p < 0.0) {
            throw std::invalid_argument("simulate_counts: negative probability");
        }
        counts.push_back(p * shots);
    }
    return counts;
}

std::vector<double> mix_counts(std::span<const double> counts_env0,
                               std::span<const double> counts_env1, double c0) {
    if (counts_env0.size() != counts_env1.size()) {
        throw std::invalid_argument("mix_counts: length mismatch");
    }
    if (!(c0 >= 0.0 && c0 <= 1.0)) {
        throw std::invalid_argument("mix_counts: c0 must lie in [0, 1]");
    }
    std::vector<double> mixed(counts_env0.size());
    for (std::size_t i = 0; i < mixed.size(); ++i) {
        mixed[i] = c0 * counts_env0[i] + (1.0 - c0) * counts_env1[i];
    }
    return mixed;
}

std::pair<double, double> poisson_mc_std(
    std::span<const double> expected_counts, int mc_samples, std::uint64_t seed,
    const std::function<double(std::span<const double>)>& estimator) {
    if (expected_counts.empty()) {
        throw std::invalid_argument("poisson_mc_std: empty counts");
    }
    if (mc_samples < 2) {
        throw std::invalid_argument("poisson_mc_std: need at least two samples");
    }
    for (double c : expected_counts) {
        if (c < 0.0) {
            throw std::invalid_argument("poisson_mc_std: negative expected count");
        }
    }
    std::vector<double> resampled(expected_counts.size());
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int k = 0; k < mc_samples; ++k) {
        std::mt19937_64 rng(mix(seed, static_cast<std::uint64_t>(k)));
        for (std::size_t i = 0; i < resampled.size(); ++i) {
            resampled[i] = poisson_draw(rng, expected_counts[i]);
        }
        const double value = estimator(resampled);
        sum += value;
        sum_sq += value * value;
    }
    const double n = static_cast<double>(mc_samples);
    const double mean = sum / n;
    const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
    return {mean, std::sqrt(var)};
}

double witness_from_counts(std::span<const double> counts) {
    if (counts.size() != 8) {
        throw std::invalid_argument("witness_from_counts: expected eight counts");
    }
    const double sx0 = branch_sigma_x(counts.subspan(0, 4));
    const double sx1 = branch_sigma_x(counts.subspan(4, 4));
    return 0.5 * (sx0 + sx1);
}

namespace {

// Expected counts for one grid point: both branches concatenated, each
// branch normalized so its four analyzer settings total `shots`.
std::vector<double> expected_counts_for(const std::array<BranchRates, 2>& rates, double shots) {
    std::vector<double> counts;
    counts.reserve(8);
    for (const BranchRates& branch : rates) {
        const double total = branch.total();
        if (total <= 0.0) {
            throw invariant_error("run_sweep: a protocol branch produced no coincidences");
        }
        for (double p : branch.p) {
            counts.push_back(p / total * shots);
        }
    }
    return counts;
}

} // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
    if (cfg.grid.empty()) {
        throw std::invalid_argument("run_sweep: empty grid");
    }
    if (cfg.shots <= 0.0) {
        throw std::invalid_argument("run_sweep: shots must be positive");
    }
    const bool mixed = cfg.family == EnvPreparation::Family::mixed_c0;
    const double pi = 4.0 * std::atan(1.0);

    // For the mixed family the experiment records counts for the two pure
    // preparations once and mixes them per grid point.
    std::vector<double> counts_env0;
    std::vector<double> counts_env1;
    if (mixed) {
        counts_env0 =
            expected_counts_for(protocol_rates(EnvPreparation::pure(0.0), cfg.params), cfg.shots);
        counts_env1 =
            expected_counts_for(protocol_rates(EnvPreparation::pure(pi), cfg.params), cfg.shots);
    }

    std::vector<SweepRecord> records;
    records.reserve(cfg.grid.size());
    for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
        const double x = cfg.grid[i];
        SweepRecord rec{};
        rec.param = x;
        std::vector<double> counts;
        if (mixed) {
            rec.w_ideal = witness_mixed_c0(x);
            rec.w_model = noisy_witness(EnvPreparation::mixed(x), cfg.params).w;
            counts = mix_counts(counts_env0, counts_env1, x);
        } else {
            rec.w_ideal = witness_pure_theta(x);
            rec.w_model = noisy_witness(EnvPreparation::pure(x), cfg.params).w;
            counts = expected_counts_for(protocol_rates(EnvPreparation::pure(x), cfg.params),
                                         cfg.shots);
        }
        const auto [mean, std_dev] =
            poisson_mc_std(counts, cfg.mc_samples, mix(cfg.seed, i), witness_from_counts);
        rec.w_mc_mean = mean;
        rec.w_mc_std = std_dev;
        records.push_back(rec);
    }
    return records;
}

namespace {

std::string fmt12(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

} // namespace

void write_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
    os << "param,w_ideal,w_model,w_mc_mean,w_mc_std\n";
    for (const SweepRecord& r : records) {
        os << fmt12(r.param) << ',' << fmt12(r.w_ideal) << ',' << fmt12(r.w_model) << ','
           << fmt12(r.w_mc_mean) << ',' << fmt12(r.w_mc_std) << '\n';
    }
}

void write_json(std::ostream& os, const std::vector<SweepRecord>& records) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const SweepRecord& r : records) {
        rows.push_back({{"param", r.param},
                        {"w_ideal", r.w_ideal},
                        {"w_model", r.w_model},
                        {"w_mc_mean", r.w_mc_mean},
                        {"w_mc_std", r.w_mc_std}});
    }
    os << rows.dump(2) << '\n';
}

} // namespace qee
