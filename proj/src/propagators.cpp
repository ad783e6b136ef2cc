#include "paraxial/propagators.hpp"

#include <cmath>
#include <sstream>

#include "paraxial/errors.hpp"
#include "paraxial/kernels.hpp"

namespace paraxial {

void advance_mode(double omega_hat_sq, Complex v0, Complex v1, double dz,
                  Complex& v_out, Complex& dv_out) {
  if (std::abs(omega_hat_sq) < kDegenerateModeThreshold) {
    // light-cone series, first order in omega_hat_sq
    const double z2 = dz * dz;
    v_out = v0 * (1.0 - omega_hat_sq * z2 / 2.0) +
            v1 * (dz - omega_hat_sq * z2 * dz / 6.0);
    dv_out = v0 * (-omega_hat_sq * dz) + v1 * (1.0 - omega_hat_sq * z2 / 2.0);
  } else if (omega_hat_sq > 0.0) {
    const double mu = std::sqrt(omega_hat_sq);
    const double c = std::cos(mu * dz);
    const double s = std::sin(mu * dz);
    v_out = c * v0 + (s / mu) * v1;
    dv_out = -mu * s * v0 + c * v1;
  } else {
    const double nu = std::sqrt(-omega_hat_sq);
    const double ch = std::cosh(nu * dz);
    const double sh = std::sinh(nu * dz);
    v_out = ch * v0 + (sh / nu) * v1;
    dv_out = nu * sh * v0 + ch * v1;
  }
}

namespace {

void check_state(const HelmholtzState& state, const ModeData& modes,
                 const char* op) {
  if (state.v.frame != Frame::kPhysicalK || state.dv.frame != Frame::kPhysicalK)
    throw FrameError(std::string(op) + ": state must be in the physical-k frame");
  if (!same_grid(state.v.grid, state.dv.grid) ||
      !same_grid(state.v.grid, modes.grid))
    throw GridError(std::string(op) + ": state and mode data grids differ");
}

[[noreturn]] void throw_support_violation(const KGrid& grid, int jx, int jy) {
  const double kx = grid.coord(jx);
  const double ky = grid.coord(jy);
  std::ostringstream msg;
  msg << "helmholtz_evolve: nonzero amplitude outside the hyperbolic cutoff at "
         "|k| = "
      << std::sqrt(kx * kx + ky * ky)
      << " (k = (" << kx << ", " << ky << ")); evolving it would excite the "
         "ill-posed elliptic branch";
  throw SupportError(msg.str());
}

[[noreturn]] void throw_amplitude_cap(const KGrid& grid, int jx, int jy,
                                      double amplitude, double z) {
  const double kx = grid.coord(jx);
  const double ky = grid.coord(jy);
  std::ostringstream msg;
  msg << "helmholtz_evolve: elliptic amplitude " << amplitude << " at |k| = "
      << std::sqrt(kx * kx + ky * ky) << ", z = " << z
      << " exceeds the cap " << kEllipticAmplitudeCap;
  throw SupportError(msg.str());
}

}  // namespace

HelmholtzState helmholtz_evolve(const HelmholtzState& state,
                                const ModeData& modes, double dz,
                                BranchPolicy policy) {
  check_state(state, modes, "helmholtz_evolve");
  const int n = state.v.grid.n;

  if (policy == BranchPolicy::kHyperbolicOnly) {
    for (int jy = 0; jy < n; ++jy)
      for (int jx = 0; jx < n; ++jx) {
        const std::size_t i = state.v.idx(jx, jy);
        if (modes.chi[i] == 0 &&
            (state.v.values[i] != Complex{} || state.dv.values[i] != Complex{}))
          throw_support_violation(state.v.grid, jx, jy);
      }
  }

  HelmholtzState out;
  out.v = make_field(state.v.grid, Frame::kPhysicalK);
  out.dv = make_field(state.v.grid, Frame::kPhysicalK);
  out.z = state.z + dz;
  kernels::grid_map(n, n, [&](int jy, int jx) {
    const std::size_t i = out.v.idx(jx, jy);
    advance_mode(modes.omega_hat_sq[i], state.v.values[i], state.dv.values[i],
                 dz, out.v.values[i], out.dv.values[i]);
  });

  if (policy == BranchPolicy::kAllowElliptic) {
    for (int jy = 0; jy < n; ++jy)
      for (int jx = 0; jx < n; ++jx) {
        const std::size_t i = out.v.idx(jx, jy);
        if (modes.omega_hat_sq[i] >= 0.0) continue;
        const double amp = std::abs(out.v.values[i]);
        if (!(amp <= kEllipticAmplitudeCap))
          throw_amplitude_cap(out.v.grid, jx, jy, amp, out.z);
      }
  }
  return out;
}

RealField helmholtz_energy_per_mode(const HelmholtzState& state,
                                    const ModeData& modes) {
  check_state(state, modes, "helmholtz_energy_per_mode");
  RealField out;
  out.grid = state.v.grid;
  out.values.resize(static_cast<std::size_t>(out.grid.node_count()));
  const int n = out.grid.n;
  kernels::grid_map(n, n, [&](int jy, int jx) {
    const std::size_t i = state.v.idx(jx, jy);
    out.values[i] = std::norm(state.dv.values[i]) +
                    modes.omega_hat_sq[i] * std::norm(state.v.values[i]);
  });
  return out;
}

SpectralField schrodinger_evolve(const SpectralField& w_hat0,
                                 const Params& params, double Z) {
  if (w_hat0.frame != Frame::kSlowK)
    throw FrameError("schrodinger_evolve: field must be in the slow-K frame");
  SpectralField out = make_field(w_hat0.grid, Frame::kSlowK);
  const int n = w_hat0.grid.n;
  kernels::grid_map(n, n, [&](int jy, int jx) {
    const double Kx = w_hat0.grid.coord(jx);
    const double Ky = w_hat0.grid.coord(jy);
    const double theta =
        schrodinger_phase_rate(Kx * Kx + Ky * Ky, params.k_z) * Z;
    out.at(jx, jy) = w_hat0.at(jx, jy) * std::polar(1.0, theta);
  });
  return out;
}

HelmholtzState rk4_oracle_evolve(const HelmholtzState& state,
                                 const ModeData& modes, double dz, int steps) {
  check_state(state, modes, "rk4_oracle_evolve");
  if (steps < 1) throw ConfigError("rk4_oracle_evolve: steps must be >= 1");

  HelmholtzState out;
  out.v = make_field(state.v.grid, Frame::kPhysicalK);
  out.dv = make_field(state.v.grid, Frame::kPhysicalK);
  out.z = state.z + dz;
  const int n = state.v.grid.n;
  const double h = dz / steps;
  kernels::grid_map(n, n, [&](int jy, int jx) {
    const std::size_t i = state.v.idx(jx, jy);
    const double w2 = modes.omega_hat_sq[i];
    Complex v = state.v.values[i];
    Complex dv = state.dv.values[i];
    for (int step = 0; step < steps; ++step) {
      const Complex k1v = dv;
      const Complex k1d = -w2 * v;
      const Complex k2v = dv + 0.5 * h * k1d;
      const Complex k2d = -w2 * (v + 0.5 * h * k1v);
      const Complex k3v = dv + 0.5 * h * k2d;
      const Complex k3d = -w2 * (v + 0.5 * h * k2v);
      const Complex k4v = dv + h * k3d;
      const Complex k4d = -w2 * (v + h * k3v);
      v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
      dv += (h / 6.0) * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    }
    out.v.values[i] = v;
    out.dv.values[i] = dv;
  });
  return out;
}

std::vector<IllposedSample> illposed_growth_demo(
    const Params& params, double kx, double ky,
    std::span<const double> z_samples) {
  const double k_sq = kx * kx + ky * ky;
  const double lambda_sq = k_sq - params.omega * params.omega;
  if (!(lambda_sq > 0.0))
    throw ConfigError(
        "illposed_growth_demo: |k| must exceed omega (elliptic region), got "
        "|k|^2 = " +
        std::to_string(k_sq));
  const double nu = std::sqrt(lambda_sq);

  std::vector<IllposedSample> table;
  table.reserve(z_samples.size());
  for (const double z : z_samples) {
    const double predicted = std::exp(nu * z);
    if (!(predicted <= kEllipticAmplitudeCap)) {
      std::ostringstream msg;
      msg << "illposed_growth_demo: predicted amplitude e^(" << nu << " * " << z
          << ") exceeds the cap " << kEllipticAmplitudeCap;
      throw SupportError(msg.str());
    }
    Complex v, dv;
    advance_mode(params.omega * params.omega - k_sq, Complex{1.0, 0.0},
                 Complex{nu, 0.0}, z, v, dv);
    table.push_back({z, std::abs(v), predicted});
  }
  return table;
}

}  // namespace paraxial
