#include "qee/photonics.hpp"

#include "qee/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace qee {

ImperfectionParams::ImperfectionParams(double t_h, double t_v, double visibility,
                                       double visibility_ideal)
    : t_h_(t_h), t_v_(t_v), v_(visibility), v_id_(visibility_ideal) {
    if (!(t_h >= 0.0 && t_h <= 1.0) || !(t_v >= 0.0 && t_v <= 1.0)) {
        throw std::invalid_argument("ImperfectionParams: transmittivities must lie in [0, 1]");
    }
    if (!(visibility_ideal > 0.0 && visibility_ideal <= 1.0)) {
        throw std::invalid_argument("ImperfectionParams: ideal visibility must lie in (0, 1]");
    }
    if (!(visibility >= 0.0 && visibility <= visibility_ideal)) {
        throw std::invalid_argument(
            "ImperfectionParams: visibility must lie in [0, ideal visibility]");
    }
}

double ImperfectionParams::epsilon() const {
    return std::sqrt(std::max(0.0, 1.0 - v_ / v_id_));
}

namespace {

struct Destination {
    Arm arm;
    double amp;
};

// Transmission keeps a photon in its arm. Horizontal light has no usable
// crossed component; vertical light crosses with sqrt(1-t_v). The reflected
// part of horizontal light is loss.
std::array<Destination, 2> destinations(Pol pol, Arm home, const ImperfectionParams& p) {
    const Arm other = home == Arm::qubit ? Arm::env : Arm::qubit;
    if (pol == Pol::h) {
        return {Destination{home, std::sqrt(p.t_h())}, Destination{other, 0.0}};
    }
    return {Destination{home, std::sqrt(p.t_v())}, Destination{other, std::sqrt(1.0 - p.t_v())}};
}

constexpr std::array<Pol, 2> kPols{Pol::h, Pol::v};

} // namespace

TwoPhotonAmplitudes ppbs_transform(const PhotonPairState& input, const ImperfectionParams& p) {
    const double eps = p.epsilon();
    const double interfering_weight = std::sqrt(std::max(0.0, 1.0 - eps * eps));
    TwoPhotonAmplitudes out;
    for (std::size_t qi = 0; qi < 2; ++qi) {
        const Pol q_pol = kPols[qi];
        for (std::size_t ei = 0; ei < 2; ++ei) {
            const Pol e_pol = kPols[ei];
            const cplx in = input.amp[2 * qi + ei];
            if (in == cplx{0.0, 0.0}) {
                continue;
            }
            for (const Destination& qd : destinations(q_pol, Arm::qubit, p)) {
                if (qd.amp == 0.0) {
                    continue;
                }
                for (const Destination& ed : destinations(e_pol, Arm::env, p)) {
                    if (ed.amp == 0.0) {
                        continue;
                    }
                    const cplx joint = in * qd.amp * ed.amp;
                    out.at(qd.arm, q_pol, ed.arm, e_pol, Sector::interfering) +=
                        joint * interfering_weight;
                    out.at(qd.arm, q_pol, ed.arm, e_pol, Sector::primed) += joint * eps;
                }
            }
        }
    }
    return out;
}

SectorProbabilities coincidence_probability_sectors(const TwoPhotonAmplitudes& a,
                                                    const PolProjector& qubit_arm,
                                                    const PolProjector& env_arm) {
    const auto project = [](const PolProjector& proj, Pol pol) {
        return std::conj(pol == Pol::h ? proj.h : proj.v);
    };
    cplx interfering{0.0, 0.0};
    cplx primed_direct{0.0, 0.0};  // distinguishable photon in the env arm
    cplx primed_swapped{0.0, 0.0}; // distinguishable photon in the qubit arm
    for (Pol q_pol : kPols) {
        for (Pol e_pol : kPols) {
            // Direct assignment: qubit photon in the qubit arm.
            const cplx direct_proj = project(qubit_arm, q_pol) * project(env_arm, e_pol);
            interfering += direct_proj * a.at(Arm::qubit, q_pol, Arm::env, e_pol, Sector::interfering);
            primed_direct += direct_proj * a.at(Arm::qubit, q_pol, Arm::env, e_pol, Sector::primed);
            // Exchanged assignment: the photons swapped arms. For
            // indistinguishable photons this is the same detection event
            // and adds coherently above.
            const cplx swapped_proj = project(qubit_arm, e_pol) * project(env_arm, q_pol);
            interfering += swapped_proj * a.at(Arm::env, q_pol, Arm::qubit, e_pol, Sector::interfering);
            primed_swapped += swapped_proj * a.at(Arm::env, q_pol, Arm::qubit, e_pol, Sector::primed);
        }
    }
    return {std::norm(interfering), std::norm(primed_direct) + std::norm(primed_swapped)};
}

double coincidence_probability(const TwoPhotonAmplitudes& a, const PolProjector& qubit_arm,
                               const PolProjector& env_arm) {
    const SectorProbabilities s = coincidence_probability_sectors(a, qubit_arm, env_arm);
    return s.interfering + s.primed;
}

EnvPreparation EnvPreparation::pure(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("EnvPreparation: theta must be finite");
    }
    return {Family::pure_theta, theta};
}

EnvPreparation EnvPreparation::mixed(double c0) {
    if (!(c0 >= 0.0 && c0 <= 1.0)) {
        throw std::invalid_argument("EnvPreparation: c0 must lie in [0, 1]");
    }
    return {Family::mixed_c0, c0};
}

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Branch input: qubit photon in pointer state i, environment photon in
// cos(theta/2)|0>_E + sin(theta/2)|1>_E, with the gate's intended
// controlled action already expressed in the physical basis (a sign on the
// joint vv component; the transmission and distinguishability rules model
// everything else the gate does).
PhotonPairState branch_input(int branch, double theta) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const double e_h = (c + s) * kInvSqrt2;
    const double e_v = (c - s) * kInvSqrt2;
    PhotonPairState state;
    if (branch == 0) {
        state.amp[0] = e_h; // hh
        state.amp[1] = e_v; // hv
    } else {
        state.amp[2] = e_h;  // vh
        state.amp[3] = -e_v; // vv, sign from the controlled gate
    }
    return state;
}

BranchRates branch_rates_pure(int branch, double theta, const ImperfectionParams& p) {
    const TwoPhotonAmplitudes amps = ppbs_transform(branch_input(branch, theta), p);
    // The ideal rotation ahead of the qubit analyzer maps h/v onto the
    // sigma_x eigenstates, so the qubit projector stays h/v; the
    // environment analyzer projects onto the logical computational states
    // (diagonal/antidiagonal).
    const PolProjector q_plus{1.0, 0.0};
    const PolProjector q_minus{0.0, 1.0};
    const PolProjector e_zero{kInvSqrt2, kInvSqrt2};
    const PolProjector e_one{kInvSqrt2, -kInvSqrt2};
    BranchRates rates;
    rates.p[0] = coincidence_probability(amps, q_plus, e_zero);
    rates.p[1] = coincidence_probability(amps, q_plus, e_one);
    rates.p[2] = coincidence_probability(amps, q_minus, e_zero);
    rates.p[3] = coincidence_probability(amps, q_minus, e_one);
    return rates;
}

} // namespace

std::array<BranchRates, 2> protocol_rates(const EnvPreparation& prep,
                                          const ImperfectionParams& p) {
    std::array<BranchRates, 2> rates;
    if (prep.family == EnvPreparation::Family::pure_theta) {
        for (int branch = 0; branch < 2; ++branch) {
            rates[branch] = branch_rates_pure(branch, prep.value, p);
        }
        return rates;
    }
    // Mixed preparations are classical mixtures of the two pointer
    // preparations of the environment, weighted by c0.
    const double c0 = prep.value;
    const double pi = 4.0 * std::atan(1.0);
    for (int branch = 0; branch < 2; ++branch) {
        const BranchRates zero = branch_rates_pure(branch, 0.0, p);
        const BranchRates one = branch_rates_pure(branch, pi, p);
        for (std::size_t k = 0; k < 4; ++k) {
            rates[branch].p[k] = c0 * zero.p[k] + (1.0 - c0) * one.p[k];
        }
    }
    return rates;
}

double branch_sigma_x(std::span<const double> rates) {
    if (rates.size() != 4) {
        throw std::invalid_argument("branch_sigma_x: expected four rates");
    }
    const double total = rates[0] + rates[1] + rates[2] + rates[3];
    if (total <= 0.0) {
        return 0.0;
    }
    return (rates[0] - rates[1] - rates[2] + rates[3]) / total;
}

WitnessResult noisy_witness(const EnvPreparation& prep, const ImperfectionParams& p) {
    const std::array<BranchRates, 2> rates = protocol_rates(prep, p);
    WitnessResult r{};
    r.sx0 = branch_sigma_x(rates[0].p);
    r.sx1 = branch_sigma_x(rates[1].p);
    r.w = 0.5 * (r.sx0 + r.sx1);
    return r;
}

double waveplate_bias(double theta) {
    const double pi = 4.0 * std::atan(1.0);
    if (!(theta > -pi && theta < pi)) {
        throw std::invalid_argument("waveplate_bias: theta must lie in (-pi, pi)");
    }
    return 0.5 * std::atan(std::sqrt(3.0) * std::tan(0.5 * theta));
}

} // namespace qee
