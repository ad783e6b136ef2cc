#pragma once

#include "paraxial/field.hpp"
#include "paraxial/params.hpp"

namespace paraxial {

/// Parametric initial-data families for the envelope equation.
///
/// gaussian:  w(X) = amplitude exp(-|X|^2 / (2 sigma^2))
///            w-hat(K) = amplitude (sigma^2 / 2pi) exp(-sigma^2 |K|^2 / 2)
/// algebraic: w-hat(K) = amplitude (1 + |K|^2)^(-p/2)
///
/// The algebraic decay must satisfy p > sA + 1 so the data lies in L^2_{sA}.
struct InitialData {
  enum class Kind { kGaussian, kAlgebraic };
  Kind kind = Kind::kGaussian;
  double sigma = 1.0;      // gaussian width, > 0
  double p = 6.0;          // algebraic decay exponent
  double amplitude = 1.0;
};

InitialData gaussian_data(double sigma, double amplitude = 1.0);
InitialData algebraic_data(double p, double amplitude = 1.0);

void validate(const InitialData& data, const Params& params);

/// Closed-form radial spectrum modulus |w-hat0|(K) of the family.
double spectrum_radial(const InitialData& data, double k_abs);

/// Samples the family's spectrum on a slow-K grid. Errors when the grid
/// does not resolve the spectrum, suggesting an adequate spacing.
SpectralField initial_spectrum(const InitialData& data, const KGrid& slow_grid);

/// psi-hat_app(k, z) = eps^{-2} w-hat(k/eps, .) e^{i k_z z} on the physical
/// grid eps x (slow grid). Expects w_hat already propagated to Z = eps^2 z;
/// the frame change is an exact relabeling, no interpolation.
SpectralField ansatz_spectrum(const SpectralField& w_hat, const Params& params,
                              double z);

/// d/dz of the ansatz: i k_z psi-hat + e^{i k_z z} (dZ w-hat)(k/eps), with
/// dZ w-hat = i schrodinger_phase_rate(|K|^2, k_z) w-hat.
SpectralField ansatz_z_derivative(const SpectralField& w_hat,
                                  const Params& params, double z);

/// What the Helmholtz operator leaves on the ansatz:
/// eps^4 e^{i k_z z} eps^{-2} (-|K|^4 / (4 k_z^2)) w-hat(k/eps).
SpectralField residual_spectrum(const SpectralField& w_hat,
                                const Params& params, double z);

/// Verifies (d^2_z + Laplacian + w^2) psi-hat_app == residual nodewise.
///
/// The left side is assembled in the multiple-scaling grouping
///   (w^2 - k_z^2) w-hat + (2 i k_z dZ-mult + |K|^2) eps^2 w-hat
///     + eps^4 (dZ-mult)^2 w-hat,
/// where the first group vanishes because k_z == omega holds exactly and
/// the second because the envelope multiplier cancels the transverse
/// symbol; assembling finished double-precision fields instead would lose
/// the cancellations to rounding. Returns the maximum nodewise relative
/// deviation from residual_spectrum's value.
double residual_identity_max_rel(const SpectralField& w_hat,
                                 const Params& params, double z);

}  // namespace paraxial
