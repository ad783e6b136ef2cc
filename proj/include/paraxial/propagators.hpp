#pragma once

#include <span>
#include <vector>

#include "paraxial/field.hpp"
#include "paraxial/modes.hpp"
#include "paraxial/params.hpp"

namespace paraxial {

/// Pair (v-hat, d/dz v-hat) carried by the second-order z-evolution.
struct HelmholtzState {
  SpectralField v;
  SpectralField dv;
  double z = 0.0;
};

enum class BranchPolicy { kHyperbolicOnly, kAllowElliptic };

/// Elliptic amplitudes beyond this cap abort with a diagnostic.
inline constexpr double kEllipticAmplitudeCap = 1e12;

/// Below this |omega_hat^2| the mode advance switches to the series form
/// to avoid the sin(mu z)/mu indeterminacy at the light cone.
inline constexpr double kDegenerateModeThreshold = 1e-12;

/// Closed-form advance of one mode of v'' = -omega_hat_sq v by dz.
void advance_mode(double omega_hat_sq, Complex v0, Complex v1, double dz,
                  Complex& v_out, Complex& dv_out);

/// Exact mode-wise solution operator for the Helmholtz z-evolution,
/// advancing the state by dz (group property holds to rounding).
///
/// Under kHyperbolicOnly any nonzero amplitude outside the cutoff is an
/// error naming the offending |k|; that refusal is the well-posedness
/// boundary of the z-evolution. Under kAllowElliptic growing modes are
/// evolved with the cosh/sinh branch and capped at kEllipticAmplitudeCap.
HelmholtzState helmholtz_evolve(const HelmholtzState& state,
                                const ModeData& modes, double dz,
                                BranchPolicy policy);

/// Nodewise |dv|^2 + omega_hat^2 |v|^2 (hyperbolic support assumed).
RealField helmholtz_energy_per_mode(const HelmholtzState& state,
                                    const ModeData& modes);

/// Phase rate of the envelope propagator: d(phase)/dZ = -|K|^2 / (2 k_z).
/// Shared by schrodinger_evolve and the ansatz z-derivative so that the
/// two stay consistent by construction.
inline double schrodinger_phase_rate(double k_sq, double k_z) {
  return -k_sq / (2.0 * k_z);
}

/// Envelope propagator: nodewise multiplication by
/// exp(-i |K|^2 Z / (2 k_z)). Preserves every L^2_s norm.
SpectralField schrodinger_evolve(const SpectralField& w_hat0,
                                 const Params& params, double Z);

/// Classical RK4 integration of the per-mode system (v, dv)' = (dv,
/// -omega_hat^2 v). Independent numerical oracle for helmholtz_evolve;
/// converges at 4th order in dz/steps.
HelmholtzState rk4_oracle_evolve(const HelmholtzState& state,
                                 const ModeData& modes, double dz, int steps);

struct IllposedSample {
  double z = 0.0;
  double amplitude = 0.0;
  double predicted = 0.0;
};

/// Evolves unit characteristic data (v0 = 1, v1 = nu) on a single elliptic
/// mode and tabulates the amplitude against the predicted e^{nu z}. Errors
/// if k lies in the hyperbolic region |k| <= omega.
std::vector<IllposedSample> illposed_growth_demo(const Params& params,
                                                 double kx, double ky,
                                                 std::span<const double> z_samples);

}  // namespace paraxial
