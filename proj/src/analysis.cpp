#include "paraxial/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "paraxial/errors.hpp"
#include "paraxial/kernels.hpp"
#include "paraxial/propagators.hpp"
#include "paraxial/spectral_ops.hpp"

namespace paraxial {

namespace {

constexpr double kFdSafety = 1.0;        // multiplies the h^2 E''' term
constexpr double kFdAbsFloor = 1e-9;     // times max E
constexpr double kIntegratedSlack = 1.05;
constexpr int kLatticePointsPerAxis = 65;
constexpr int kAnnulusQuadraturePoints = 4096;
constexpr double kDegenerateFitFloor = 1e-12;  // times the run's error scale

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  return out;
}

}  // namespace

std::vector<double> make_z_samples(int count, double z_end) {
  if (count < 16) throw ConfigError("z_sample_count must be >= 16");
  if (!(z_end > 0.0)) throw ConfigError("z range must be positive");
  const int geometric = count / 4;
  const int uniform = count - geometric;
  std::vector<double> zs;
  zs.reserve(static_cast<std::size_t>(count));
  const double step = z_end / (uniform - 1);
  // dyadic refinement below the first uniform step, where E ramps up from 0
  for (int j = geometric; j >= 1; --j)
    zs.push_back(step * std::ldexp(1.0, -j));
  for (int i = 0; i < uniform; ++i)
    zs.push_back(i == uniform - 1 ? z_end : step * i);
  std::sort(zs.begin(), zs.end());
  return zs;
}

double energy(const SpectralField& R_hat, const SpectralField& dR_hat,
              const ModeData& modes) {
  if (!same_grid(R_hat.grid, dR_hat.grid) || !same_grid(R_hat.grid, modes.grid))
    throw GridError("energy: grids differ");
  const int n = R_hat.grid.n;
  const double sum = kernels::grid_sum(n, n, [&](int jy, int jx) {
    const std::size_t i = R_hat.idx(jx, jy);
    return std::norm(dR_hat.values[i]) +
           modes.omega_hat_sq[i] * std::norm(R_hat.values[i]);
  });
  return sum * R_hat.grid.cell_area();
}

double tail_norm(const SpectralField& w_hat0, const InitialData& data,
                 const Params& params, double z) {
  (void)z;  // the envelope propagator is unimodular; the tail has no z dependence
  if (w_hat0.frame != Frame::kSlowK)
    throw FrameError("tail_norm: envelope field must be in the slow-K frame");
  const double eps = params.epsilon;
  const KGrid grid_phys = scaled(w_hat0.grid, eps);
  const ModeData modes = mode_data(grid_phys, params);
  const double inv_eps_sq = 1.0 / (eps * eps);
  const double k_max_sq = grid_phys.k_max * grid_phys.k_max;
  const int n = grid_phys.n;
  const int s = params.s;

  // grid part over the disc |k| <= k_max; corners are left to the annulus
  const double grid_sum = kernels::grid_sum(n, n, [&](int jy, int jx) {
    const std::size_t i = w_hat0.idx(jx, jy);
    if (modes.chi[i] != 0) return 0.0;
    const double kx = grid_phys.coord(jx);
    const double ky = grid_phys.coord(jy);
    const double k_sq = kx * kx + ky * ky;
    if (k_sq > k_max_sq) return 0.0;
    double weight = 1.0;
    for (int m = 0; m < s; ++m) weight *= 1.0 + k_sq;
    return std::norm(inv_eps_sq * w_hat0.values[i]) * weight;
  });
  double total = grid_sum * grid_phys.cell_area();

  // outer annulus from the closed-form radial spectrum, mapped to (0,1]
  const double cutoff = params.omega / std::sqrt(2.0);
  const double a = std::max(grid_phys.k_max, cutoff);
  const int nq = kAnnulusQuadraturePoints;
  total += kernels::pairwise_sum(0, nq, [&](std::int64_t m) {
    const double t = (static_cast<double>(m) + 0.5) / nq;
    const double kappa = a / t;
    const double f = inv_eps_sq * spectrum_radial(data, kappa / eps);
    const double weight = std::pow(1.0 + kappa * kappa, s);
    const double jacobian = a / (t * t);
    return f * f * weight * 2.0 * M_PI * kappa * jacobian / nq;
  });
  return std::sqrt(total);
}

namespace {

std::vector<double> centered_differences(const std::vector<double>& z,
                                         const std::vector<double>& f) {
  const std::size_t m = z.size();
  std::vector<double> df(m, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double hm = z[i] - z[i - 1];
    const double hp = z[i + 1] - z[i];
    df[i] = -hp / (hm * (hm + hp)) * f[i - 1] +
            (hp - hm) / (hm * hp) * f[i] +
            hm / (hp * (hm + hp)) * f[i + 1];
  }
  return df;
}

// scale of E''' estimated from third divided differences of the trace
double third_derivative_scale(const std::vector<double>& z,
                              const std::vector<double>& f) {
  const std::size_t m = z.size();
  if (m < 4) return 0.0;
  std::vector<double> d1(m - 1), d2(m - 2), d3(m - 3);
  for (std::size_t i = 0; i + 1 < m; ++i)
    d1[i] = (f[i + 1] - f[i]) / (z[i + 1] - z[i]);
  for (std::size_t i = 0; i + 2 < m; ++i)
    d2[i] = (d1[i + 1] - d1[i]) / (z[i + 2] - z[i]);
  for (std::size_t i = 0; i + 3 < m; ++i)
    d3[i] = (d2[i + 1] - d2[i]) / (z[i + 3] - z[i]);
  double scale = 0.0;
  for (const double d : d3) scale = std::max(scale, 6.0 * std::abs(d));
  return scale;
}

}  // namespace

GronwallVerdict gronwall_check(const EnergyTrace& trace, const Params& params) {
  const std::size_t m = trace.z_samples.size();
  if (m < 4 || trace.E.size() != m || trace.dE_fd.size() != m ||
      trace.bound_rhs.size() != m)
    throw ConfigError("gronwall_check: trace too short (need >= 4 samples)");

  GronwallVerdict verdict;
  verdict.e0_exact = trace.E.front() == 0.0;

  const double max_E = *std::max_element(trace.E.begin(), trace.E.end());
  const double m3 = third_derivative_scale(trace.z_samples, trace.E);

  verdict.differential_ok = true;
  verdict.max_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double hm = trace.z_samples[i] - trace.z_samples[i - 1];
    const double hp = trace.z_samples[i + 1] - trace.z_samples[i];
    const double tol = kFdSafety * hm * hp * m3 + kFdAbsFloor * max_E;
    const double excess = trace.dE_fd[i] - trace.bound_rhs[i] - tol;
    verdict.max_excess = std::max(verdict.max_excess, excess);
    if (excess > 0.0) verdict.differential_ok = false;
  }

  const double eps_sq = params.epsilon * params.epsilon;
  verdict.integrated_bound =
      std::exp(params.Z0) * params.Z0 * trace.C_meas * eps_sq;
  verdict.sup_E_over_eps2 = max_E / eps_sq;
  verdict.integrated_ok = max_E <= kIntegratedSlack * verdict.integrated_bound;

  verdict.holds =
      verdict.e0_exact && verdict.differential_ok && verdict.integrated_ok;
  return verdict;
}

RunResult run_comparison(const Params& params, const InitialData& data,
                         int z_sample_count, const GridPolicy& policy) {
  validate(params);
  validate(data, params);
  const double eps = params.epsilon;
  const KGrid grid_phys = make_grid(params, policy);
  const KGrid grid_slow = scaled(grid_phys, 1.0 / eps);
  const ModeData modes = mode_data(grid_phys, params);
  const ModeData modes_slow = mode_data(grid_slow, params);
  const int n = grid_phys.n;
  const int s = params.s;

  const SpectralField w0 = initial_spectrum(data, grid_slow);

  RunResult result;
  result.w0_norm_s = l2s_norm(w0, s, modes_slow);
  result.report.epsilon = eps;

  HelmholtzState state;
  {
    const SpectralField psi0 = ansatz_spectrum(w0, params, 0.0);
    const SpectralField dpsi0 = ansatz_z_derivative(w0, params, 0.0);
    state.v = project_hyp(psi0, modes);
    state.dv = project_hyp(dpsi0, modes);
    state.z = 0.0;
  }

  const double z_end = params.Z0 / (eps * eps);
  const std::vector<double> zs = make_z_samples(z_sample_count, z_end);
  const std::size_t m = zs.size();

  const LatticeEvaluator lattice(
      grid_phys, linspace(-5.0 / eps, 5.0 / eps, kLatticePointsPerAxis));

  EnergyTrace& trace = result.trace;
  trace.z_samples = zs;
  trace.E.resize(m);
  trace.epsilon = eps;
  trace.Z0 = params.Z0;

  const double gain = std::pow(1.0 + 0.5 * params.omega * params.omega,
                               0.5 * static_cast<double>(s));
  const double c3 = std::sqrt(2.0) / params.omega;
  const double slow_area = grid_slow.cell_area();

  double C_meas = 0.0;
  InequalityStats& ineq = result.ineq;
  ErrorReport& report = result.report;

  for (std::size_t i = 0; i < m; ++i) {
    if (i > 0)
      state = helmholtz_evolve(state, modes, zs[i] - zs[i - 1],
                               BranchPolicy::kHyperbolicOnly);
    const double Z = eps * eps * zs[i];
    const SpectralField wZ = schrodinger_evolve(w0, params, Z);
    const SpectralField psi = ansatz_spectrum(wZ, params, zs[i]);
    const SpectralField dpsi = ansatz_z_derivative(wZ, params, zs[i]);
    const SpectralField diff = subtract(state.v, psi);
    const SpectralField ddiff = subtract(state.dv, dpsi);
    const SpectralField R = project_hyp(diff, modes);
    const SpectralField dR = project_hyp(ddiff, modes);

    const double err_hs = l2s_norm(diff, s, modes);
    const double E = energy(R, dR, modes);
    trace.E[i] = E;
    const double R_l2 = l2s_norm(R, 0, modes);
    const double R_hs = s == 0 ? R_l2 : l2s_norm(R, s, modes);

    const double tail_grid = std::sqrt(
        kernels::grid_sum(n, n,
                          [&](int jy, int jx) {
                            const std::size_t idx = psi.idx(jx, jy);
                            if (modes.chi[idx] != 0) return 0.0;
                            double weight = 1.0;
                            const double r2 =
                                modes.rho[idx] * modes.rho[idx];
                            for (int q = 0; q < s; ++q) weight *= r2;
                            return std::norm(psi.values[idx]) * weight;
                          }) *
        grid_phys.cell_area());

    // forcing size sup_Z ||chi d2Z w-hat||^2; chi shares node indices with
    // the slow grid because the physical grid is its exact eps-scaling
    const double C_part =
        kernels::grid_sum(n, n,
                          [&](int jy, int jx) {
                            const std::size_t idx = wZ.idx(jx, jy);
                            if (modes.chi[idx] == 0) return 0.0;
                            const double Kx = grid_slow.coord(jx);
                            const double Ky = grid_slow.coord(jy);
                            const double rate = schrodinger_phase_rate(
                                Kx * Kx + Ky * Ky, params.k_z);
                            const double d2 = rate * rate;
                            return d2 * d2 * std::norm(wZ.values[idx]);
                          }) *
        slow_area;
    C_meas = std::max(C_meas, C_part);

    const double err_inf = lattice.max_abs(diff);

    if (err_hs > report.sup_error_hs) {
      report.sup_error_hs = err_hs;
      report.z_at_sup = zs[i];
    }
    report.sup_error_inf = std::max(report.sup_error_inf, err_inf);

    if (E > 0.0)
      ineq.c3_max_ratio =
          std::max(ineq.c3_max_ratio, R_l2 / (c3 * std::sqrt(E)));
    if (R_l2 > 0.0)
      ineq.newl_max_ratio = std::max(ineq.newl_max_ratio, R_hs / (gain * R_l2));
    if (err_hs > 0.0)
      ineq.triangle_max_rel = std::max(
          ineq.triangle_max_rel, (err_hs - (R_hs + tail_grid)) / err_hs);
  }

  trace.C_meas = C_meas;
  trace.dE_fd = centered_differences(zs, trace.E);
  trace.bound_rhs.resize(m);
  const double eps_sq = eps * eps;
  for (std::size_t i = 0; i < m; ++i)
    trace.bound_rhs[i] = eps_sq * trace.E[i] + eps_sq * eps_sq * C_meas;

  report.tail_norm = tail_norm(w0, data, params, 0.0);
  report.energy_bound_ratio =
      *std::max_element(trace.E.begin(), trace.E.end()) / eps_sq;
  return result;
}

SlopeFit fit_loglog(std::span<const double> x, std::span<const double> y,
                    std::span<const double> floors) {
  if (x.size() != y.size() || x.size() < 3)
    throw ConfigError("fit_loglog: need >= 3 points");
  SlopeFit fit;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double floor = floors.empty() ? 0.0 : floors[i];
    if (!(y[i] > floor) || !std::isfinite(y[i])) {
      fit.degenerate = true;
      return fit;
    }
  }
  const std::size_t m = x.size();
  std::vector<double> lx(m), ly(m);
  for (std::size_t i = 0; i < m; ++i) {
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  const double mean_x = std::accumulate(lx.begin(), lx.end(), 0.0) / m;
  const double mean_y = std::accumulate(ly.begin(), ly.end(), 0.0) / m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (lx[i] - mean_x) * (lx[i] - mean_x);
    sxy += (lx[i] - mean_x) * (ly[i] - mean_y);
  }
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  for (std::size_t i = 0; i < m; ++i)
    fit.max_residual = std::max(
        fit.max_residual, std::abs(ly[i] - (fit.intercept + fit.slope * lx[i])));
  return fit;
}

SweepResult sweep(const Params& base, const InitialData& data,
                  std::span<const double> epsilons, int z_sample_count,
                  const GridPolicy& policy) {
  if (epsilons.size() < 3)
    throw ConfigError("sweep: need >= 3 epsilons");
  const double ratio = epsilons[1] / epsilons[0];
  for (std::size_t i = 0; i + 1 < epsilons.size(); ++i) {
    const double r = epsilons[i + 1] / epsilons[i];
    if (std::abs(std::log(r / ratio)) > 1e-9)
      throw ConfigError("sweep: epsilons must be geometrically spaced");
  }

  SweepResult result;
  result.epsilons.assign(epsilons.begin(), epsilons.end());
  std::vector<double> err_floors, inf_floors, tail_floors;
  for (const double eps : epsilons) {
    Params params = base;
    params.epsilon = eps;
    params.k_z = params.omega;
    try {
      RunResult run = run_comparison(params, data, z_sample_count, policy);
      result.gronwall.push_back(gronwall_check(run.trace, params));
      result.ineq.push_back(run.ineq);
      // rounding-level floor below which a rate is meaningless: the
      // comparison fields scale like ||w0|| / eps
      const double scale = run.w0_norm_s / eps;
      err_floors.push_back(kDegenerateFitFloor * scale);
      inf_floors.push_back(kDegenerateFitFloor * std::abs(data.amplitude));
      tail_floors.push_back(kDegenerateFitFloor * scale);
      result.reports.push_back(run.report);
    } catch (const Error& e) {
      result.aborted = true;
      result.abort_reason = e.what();
      break;
    }
  }

  const std::size_t done = result.reports.size();
  if (done >= 3) {
    std::vector<double> xs(result.epsilons.begin(),
                           result.epsilons.begin() + done);
    std::vector<double> err(done), inf(done), tail(done), eratio(done);
    for (std::size_t i = 0; i < done; ++i) {
      err[i] = result.reports[i].sup_error_hs;
      inf[i] = result.reports[i].sup_error_inf;
      tail[i] = result.reports[i].tail_norm;
      eratio[i] = result.reports[i].energy_bound_ratio;
    }
    result.fit_hs = fit_loglog(xs, err, err_floors);
    result.fit_inf = fit_loglog(xs, inf, inf_floors);
    result.fit_tail = fit_loglog(xs, tail, tail_floors);
    result.fit_energy_ratio = fit_loglog(xs, eratio, {});
    if (!result.fit_hs.degenerate) {
      double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
      for (std::size_t i = 0; i < done; ++i) {
        const double r = err[i] / xs[i];
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      result.err_over_eps_max_min = hi / lo;
    }
  } else {
    result.fit_hs.degenerate = true;
    result.fit_inf.degenerate = true;
    result.fit_tail.degenerate = true;
    result.fit_energy_ratio.degenerate = true;
  }
  return result;
}

}  // namespace paraxial
