#pragma once

#include "qee/cmatrix.hpp"
#include "qee/witness.hpp"

#include <array>
#include <span>

namespace qee {

/// Parameters of the physical two-photon gate: polarization-dependent
/// transmittivities of the partially polarizing beam splitter and the
/// observed/ideal Hong-Ou-Mandel visibilities. epsilon() = sqrt(1 - v/v_id)
/// is the amplitude fraction of the environment photon that does not
/// interfere with the qubit photon.
class ImperfectionParams {
  public:
    ImperfectionParams(double t_h, double t_v, double visibility, double visibility_ideal);

    /// Lossless, fully indistinguishable gate.
    static ImperfectionParams ideal() { return {1.0, 1.0, 1.0, 1.0}; }

    /// Transmittivities and HOM visibility measured on the modeled setup.
    static ImperfectionParams measured() { return {0.983, 0.324, 0.75, 0.8}; }

    double t_h() const { return t_h_; }
    double t_v() const { return t_v_; }
    double visibility() const { return v_; }
    double visibility_ideal() const { return v_id_; }
    double epsilon() const;

  private:
    double t_h_, t_v_, v_, v_id_;
};

/// Output arm of the gate (each arm ends in its own analyzer + detector).
enum class Arm { qubit, env };

/// Physical polarization at the gate. The qubit photon carries |0>/|1> as
/// h/v; the environment photon carries |0>/|1> along the diagonal and
/// antidiagonal axes, so its h and v components are the logical
/// (|0>+|1>)/sqrt2 and (|0>-|1>)/sqrt2.
enum class Pol { h, v };

/// Whether the environment photon's component interferes with the qubit
/// photon or is distinguishable from it.
enum class Sector { interfering, primed };

/// Two-photon polarization state in the physical h/v product basis, qubit
/// photon slow: amplitudes for (hh, hv, vh, vv).
struct PhotonPairState {
    std::array<cplx, 4> amp{};
};

/// Joint amplitudes over output configurations of the photon pair: which
/// arm and polarization each photon occupies, and the distinguishability
/// tag of the environment photon. Amplitudes are not normalized; light
/// routed outside these configurations is loss.
class TwoPhotonAmplitudes {
  public:
    cplx& at(Arm q_arm, Pol q_pol, Arm e_arm, Pol e_pol, Sector s) {
        return amp_[index(q_arm, q_pol, e_arm, e_pol, s)];
    }
    const cplx& at(Arm q_arm, Pol q_pol, Arm e_arm, Pol e_pol, Sector s) const {
        return amp_[index(q_arm, q_pol, e_arm, e_pol, s)];
    }

  private:
    static std::size_t index(Arm qa, Pol qp, Arm ea, Pol ep, Sector s) {
        return (((static_cast<std::size_t>(qa) * 2 + static_cast<std::size_t>(qp)) * 2 +
                 static_cast<std::size_t>(ea)) *
                    2 +
                static_cast<std::size_t>(ep)) *
                   2 +
               static_cast<std::size_t>(s);
    }
    std::array<cplx, 32> amp_{};
};

/// Applies the per-photon beam-splitter rules to a two-photon input and
/// multiplies them out into joint configurations. Horizontal light is
/// transmitted with amplitude sqrt(t_h) and stays in its arm; vertical
/// light stays with sqrt(t_v) and crosses into the other arm with
/// sqrt(1-t_v). The environment photon is additionally split into an
/// interfering component (weight sqrt(1-eps^2)) and a distinguishable one
/// (weight eps).
TwoPhotonAmplitudes ppbs_transform(const PhotonPairState& input, const ImperfectionParams& p);

/// Analyzer setting for one arm: the single-photon polarization state to
/// project onto, in the physical h/v basis.
struct PolProjector {
    cplx h;
    cplx v;
};

struct SectorProbabilities {
    double interfering;
    double primed;
};

/// Probability of a coincidence (exactly one photon per arm) passing both
/// analyzers, split by sector. Within the interfering sector every
/// amplitude, including photon exchange between the arms, adds coherently;
/// in the primed sector the two possible locations of the distinguishable
/// photon contribute classically.
SectorProbabilities coincidence_probability_sectors(const TwoPhotonAmplitudes& a,
                                                    const PolProjector& qubit_arm,
                                                    const PolProjector& env_arm);

double coincidence_probability(const TwoPhotonAmplitudes& a, const PolProjector& qubit_arm,
                               const PolProjector& env_arm);

/// Environment preparation of one sweep family.
struct EnvPreparation {
    enum class Family { pure_theta, mixed_c0 };
    Family family;
    double value;

    static EnvPreparation pure(double theta);
    static EnvPreparation mixed(double c0);
};

/// Coincidence rates of one protocol branch in analyzer order
/// (+,0), (+,1), (-,0), (-,1): qubit sigma_x outcome crossed with the
/// environment computational outcome.
struct BranchRates {
    std::array<double, 4> p{};
    double total() const { return p[0] + p[1] + p[2] + p[3]; }
};

/// Runs both protocol branches through the physical gate model and returns
/// the analyzer coincidence rates. The rotation ahead of the qubit analyzer
/// and both analyzers are ideal; only the gate carries imperfections.
std::array<BranchRates, 2> protocol_rates(const EnvPreparation& prep,
                                          const ImperfectionParams& p);

/// sigma_x estimate from four coincidence rates (or counts) in the order
/// above: the qubit sign is flipped on environment outcome 1 — the
/// measurement-stage equivalent of the final controlled-phase — and the
/// result is normalized by the total. Returns 0 for an all-zero input.
double branch_sigma_x(std::span<const double> rates);

/// The witness with the physical gate model in place of the ideal gate.
/// Reduces to the ideal witness for ideal parameters.
WitnessResult noisy_witness(const EnvPreparation& prep, const ImperfectionParams& p);

/// Waveplate angle alpha that prepares the target pure-state angle theta
/// through the polarization-dependent loss of the setup:
/// alpha = atan(sqrt(3) tan(theta/2)) / 2. theta must lie in (-pi, pi).
double waveplate_bias(double theta);

} // namespace qee
