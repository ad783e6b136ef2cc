#pragma once

#include <span>
#include <string>
#include <vector>

#include "paraxial/approximation.hpp"
#include "paraxial/field.hpp"
#include "paraxial/grid.hpp"
#include "paraxial/modes.hpp"
#include "paraxial/params.hpp"

namespace paraxial {

/// Energy of the error field R over z, with the ingredients of the
/// differential inequality dE/dz <= eps^2 E + eps^4 C_meas.
struct EnergyTrace {
  std::vector<double> z_samples;
  std::vector<double> E;
  std::vector<double> dE_fd;      // nonuniform centered differences; NaN at ends
  std::vector<double> bound_rhs;  // eps^2 E + eps^4 C_meas per sample
  double C_meas = 0.0;            // sup_Z ||chi d2Z w-hat||^2_{L2(dK)}
  double epsilon = 0.0;
  double Z0 = 0.0;
};

/// Headline numbers of one comparison run.
struct ErrorReport {
  double epsilon = 0.0;
  double sup_error_hs = 0.0;   // sup_z ||v - psi_app||_{H^s} over sampled z
  double z_at_sup = 0.0;
  double sup_error_inf = 0.0;  // sup over the x-lattice and sampled z
  double tail_norm = 0.0;      // ||(1-chi) psi-hat_app||_{L2_s}
  double energy_bound_ratio = 0.0;  // sup_z E(z) / eps^2
};

/// Worst-case margins of the exact-constant inequalities over sampled z.
struct InequalityStats {
  double c3_max_ratio = 0.0;    // ||R||_{L2} / ((sqrt2/w) sqrt E)
  double newl_max_ratio = 0.0;  // ||R||_{H^s} / ((1+w^2/2)^{s/2} ||R||_{L2})
  double triangle_max_rel = 0.0;  // (err - ||R||_{H^s} - tail_grid) / err
};

struct RunResult {
  ErrorReport report;
  EnergyTrace trace;
  InequalityStats ineq;
  double w0_norm_s = 0.0;  // ||w-hat0||_{L2_s}, scale for degeneracy floors
};

struct GronwallVerdict {
  bool holds = false;
  bool e0_exact = false;        // E(0) == 0 exactly
  bool differential_ok = false; // dE_fd <= bound_rhs + tol_fd at interior samples
  bool integrated_ok = false;   // sup E <= 1.05 e^{Z0} Z0 C_meas eps^2
  double max_excess = 0.0;      // max (dE_fd - bound_rhs - tol_fd), <= 0 when ok
  double sup_E_over_eps2 = 0.0;
  double integrated_bound = 0.0;  // e^{Z0} Z0 C_meas eps^2
};

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;  // max |log err - fit| in log units
  bool degenerate = false;    // errors at rounding level; no meaningful rate
};

struct SweepResult {
  std::vector<double> epsilons;
  std::vector<ErrorReport> reports;
  std::vector<GronwallVerdict> gronwall;
  std::vector<InequalityStats> ineq;
  SlopeFit fit_hs;
  SlopeFit fit_inf;
  SlopeFit fit_tail;
  SlopeFit fit_energy_ratio;
  double err_over_eps_max_min = 0.0;  // max/min of sup_error_hs / eps
  bool aborted = false;
  std::string abort_reason;
};

/// z sample layout: uniform cover of [0, z_end] with dyadic refinement
/// toward 0 where the energy ramps up. count >= 16; includes 0 and z_end.
std::vector<double> make_z_samples(int count, double z_end);

/// Quadrature of |dR|^2 + omega_hat^2 |R|^2 (hyperbolic support assumed).
double energy(const SpectralField& R_hat, const SpectralField& dR_hat,
              const ModeData& modes);

/// Full comparison over z in [0, Z0/eps^2]: exact Helmholtz evolution of
/// the projected ansatz data against the propagated ansatz itself.
RunResult run_comparison(const Params& params, const InitialData& data,
                         int z_sample_count, const GridPolicy& policy = {});

/// Checks the differential inequality (with an explicit finite-difference
/// tolerance model) and the integrated conclusion on a trace.
GronwallVerdict gronwall_check(const EnergyTrace& trace, const Params& params);

/// ||(1-chi) psi-hat_app||_{L2_s}. Grid quadrature inside |k| <= k_max plus
/// a radial quadrature of the closed-form spectrum over the outer annulus
/// (the propagator is unimodular, so the value does not depend on z).
double tail_norm(const SpectralField& w_hat0, const InitialData& data,
                 const Params& params, double z);

/// Runs run_comparison per epsilon and fits log-log slopes.
SweepResult sweep(const Params& base, const InitialData& data,
                  std::span<const double> epsilons, int z_sample_count,
                  const GridPolicy& policy = {});

/// Least-squares fit of log(y) against log(x); degenerate when any y falls
/// below its floor. floors may be empty (all-zero floors).
SlopeFit fit_loglog(std::span<const double> x, std::span<const double> y,
                    std::span<const double> floors);

}  // namespace paraxial
