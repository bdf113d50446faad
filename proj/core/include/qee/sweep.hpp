#pragma once

#include "qee/photonics.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace qee {

/// One witness sweep: a parameter family, the grid to evaluate, the gate
/// parameters, and the counting statistics of the simulated experiment.
/// `shots` is the expected total coincidence count collected per grid point
/// and branch.
struct SweepConfig {
    EnvPreparation::Family family = EnvPreparation::Family::pure_theta;
    std::vector<double> grid;
    ImperfectionParams params = ImperfectionParams::ideal();
    double shots = 1e4;
    int mc_samples = 200;
    std::uint64_t seed = 0;
};

/// One grid point of a sweep: ideal witness, gate-model witness, and
/// Monte Carlo statistics of the count-based estimate.
struct SweepRecord {
    double param;
    double w_ideal;
    double w_model;
    double w_mc_mean;
    double w_mc_std;
};

/// Expected counts = probability * shots. Counts stay real-valued;
/// rounding is left to the Poisson resampler.
std::vector<double> simulate_counts(std::span<const double> probabilities, double shots);

/// Elementwise c0*counts_env0 + (1-c0)*counts_env1: accumulating the counts
/// of the two pure environment preparations with integration intervals
/// weighted by c0.
std::vector<double> mix_counts(std::span<const double> counts_env0,
                               std::span<const double> counts_env1, double c0);

/// Draws mc_samples count vectors, each entry Poisson-distributed around
/// its expected count, applies the estimator and returns the sample mean
/// and standard deviation. Every sample index derives its own RNG stream
/// from the seed, so results do not depend on evaluation order.
std::pair<double, double> poisson_mc_std(std::span<const double> expected_counts, int mc_samples,
                                         std::uint64_t seed,
                                         const std::function<double(std::span<const double>)>& estimator);

/// Witness estimate from eight coincidence counts: branch 0 then branch 1,
/// each in analyzer order (+,0),(+,1),(-,0),(-,1).
double witness_from_counts(std::span<const double> counts);

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

/// Header row `param,w_ideal,w_model,w_mc_mean,w_mc_std`, 12 significant
/// digits, every line terminated by a single newline.
void write_csv(std::ostream& os, const std::vector<SweepRecord>& records);

void write_json(std::ostream& os, const std::vector<SweepRecord>& records);

} // namespace qee
