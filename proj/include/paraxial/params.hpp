#pragma once

namespace paraxial {

/// Physical and approximation parameters of one experiment.
///
/// The longitudinal wavenumber is tied to the frequency, k_z = omega,
/// which is what makes the envelope equation come out dispersion-free at
/// the carrier. make_params enforces that together with the remaining
/// invariants (0 < epsilon < 1, Z0 > 0, sA >= max(4, s)).
struct Params {
  double omega = 1.0;    // angular frequency, > 0
  double k_z = 1.0;      // longitudinal wavenumber, always == omega
  double epsilon = 0.1;  // perturbation parameter, in (0,1)
  double Z0 = 1.0;       // slow-scale horizon; physical range is [0, Z0/eps^2]
  int s = 0;             // measurement Sobolev index, >= 0
  int sA = 4;            // approximation regularity index, >= max(4, s)
};

/// Validates and assembles a Params value; throws ConfigError on violation.
Params make_params(double omega, double epsilon, double Z0, int s, int sA);

/// Re-checks the Params invariants (used on externally assembled values).
void validate(const Params& params);

}  // namespace paraxial
