#include "paraxial/approximation.hpp"

#include <cmath>
#include <sstream>

#include "paraxial/errors.hpp"
#include "paraxial/kernels.hpp"
#include "paraxial/propagators.hpp"

namespace paraxial {

InitialData gaussian_data(double sigma, double amplitude) {
  InitialData d;
  d.kind = InitialData::Kind::kGaussian;
  d.sigma = sigma;
  d.amplitude = amplitude;
  return d;
}

InitialData algebraic_data(double p, double amplitude) {
  InitialData d;
  d.kind = InitialData::Kind::kAlgebraic;
  d.p = p;
  d.amplitude = amplitude;
  return d;
}

void validate(const InitialData& data, const Params& params) {
  if (!std::isfinite(data.amplitude))
    throw ConfigError("initial data amplitude must be finite");
  if (data.kind == InitialData::Kind::kGaussian) {
    if (!(data.sigma > 0.0)) throw ConfigError("sigma must be positive");
  } else {
    if (!(data.p > params.sA + 1.0))
      throw ConfigError("p must exceed sA+1");
  }
}

double spectrum_radial(const InitialData& data, double k_abs) {
  if (data.kind == InitialData::Kind::kGaussian) {
    const double s2 = data.sigma * data.sigma;
    return data.amplitude * (s2 / (2.0 * M_PI)) *
           std::exp(-s2 * k_abs * k_abs / 2.0);
  }
  return data.amplitude * std::pow(1.0 + k_abs * k_abs, -data.p / 2.0);
}

SpectralField initial_spectrum(const InitialData& data, const KGrid& slow_grid) {
  // width of the spectrum in K units: 1/sigma for the gaussian family,
  // order one for the algebraic one
  const double width =
      data.kind == InitialData::Kind::kGaussian ? 1.0 / data.sigma : 1.0;
  const double required = width / 8.0;
  if (slow_grid.spacing() > required) {
    std::ostringstream msg;
    msg << "initial_spectrum: grid spacing " << slow_grid.spacing()
        << " does not resolve the spectrum; need spacing <= " << required;
    throw GridError(msg.str());
  }

  SpectralField out = make_field(slow_grid, Frame::kSlowK);
  const int n = slow_grid.n;
  kernels::grid_map(n, n, [&](int jy, int jx) {
    const double Kx = slow_grid.coord(jx);
    const double Ky = slow_grid.coord(jy);
    out.at(jx, jy) = spectrum_radial(data, std::sqrt(Kx * Kx + Ky * Ky));
  });
  return out;
}

namespace {

void check_slow_frame(const SpectralField& w_hat, const char* op) {
  if (w_hat.frame != Frame::kSlowK)
    throw FrameError(std::string(op) + ": envelope field must be in the slow-K frame");
}

}  // namespace

SpectralField ansatz_spectrum(const SpectralField& w_hat, const Params& params,
                              double z) {
  check_slow_frame(w_hat, "ansatz_spectrum");
  SpectralField out = make_field(scaled(w_hat.grid, params.epsilon),
                                 Frame::kPhysicalK);
  const double inv_eps_sq = 1.0 / (params.epsilon * params.epsilon);
  const Complex factor = std::polar(inv_eps_sq, params.k_z * z);
  const int n = w_hat.grid.n;
  kernels::grid_map(n, n, [&](int jy, int jx) {
    const std::size_t i = out.idx(jx, jy);
    out.values[i] = factor * w_hat.values[i];
  });
  return out;
}

SpectralField ansatz_z_derivative(const SpectralField& w_hat,
                                  const Params& params, double z) {
  check_slow_frame(w_hat, "ansatz_z_derivative");
  SpectralField out = make_field(scaled(w_hat.grid, params.epsilon),
                                 Frame::kPhysicalK);
  const double inv_eps_sq = 1.0 / (params.epsilon * params.epsilon);
  const Complex carrier = std::polar(1.0, params.k_z * z);
  const int n = w_hat.grid.n;
  kernels::grid_map(n, n, [&](int jy, int jx) {
    const double Kx = w_hat.grid.coord(jx);
    const double Ky = w_hat.grid.coord(jy);
    const double rate = schrodinger_phase_rate(Kx * Kx + Ky * Ky, params.k_z);
    // i k_z psi-hat + e^{i k_z z} dZ w-hat, with dZ w-hat = i rate w-hat
    const Complex mult =
        carrier * Complex{0.0, params.k_z * inv_eps_sq + rate};
    const std::size_t i = out.idx(jx, jy);
    out.values[i] = mult * w_hat.values[i];
  });
  return out;
}

SpectralField residual_spectrum(const SpectralField& w_hat,
                                const Params& params, double z) {
  check_slow_frame(w_hat, "residual_spectrum");
  SpectralField out = make_field(scaled(w_hat.grid, params.epsilon),
                                 Frame::kPhysicalK);
  const double eps_sq = params.epsilon * params.epsilon;
  const Complex carrier = std::polar(1.0, params.k_z * z);
  const int n = w_hat.grid.n;
  kernels::grid_map(n, n, [&](int jy, int jx) {
    const double Kx = w_hat.grid.coord(jx);
    const double Ky = w_hat.grid.coord(jy);
    const double rate = schrodinger_phase_rate(Kx * Kx + Ky * Ky, params.k_z);
    // eps^4 e^{i k_z z} eps^{-2} (i rate)^2 w-hat = -eps^2 rate^2 e^{ik_z z} w-hat
    const std::size_t i = out.idx(jx, jy);
    out.values[i] = carrier * (-eps_sq * rate * rate) * w_hat.values[i];
  });
  return out;
}

double residual_identity_max_rel(const SpectralField& w_hat,
                                 const Params& params, double z) {
  check_slow_frame(w_hat, "residual_identity_max_rel");
  const double eps_sq = params.epsilon * params.epsilon;
  const double eps4 = eps_sq * eps_sq;
  const Complex carrier = std::polar(1.0, params.k_z * z);
  // the grouped zero of the carrier choice; 0 exactly because k_z == omega
  const double carrier_defect = params.omega * params.omega -
                                params.k_z * params.k_z;
  const int n = w_hat.grid.n;
  return kernels::grid_max(n, n, [&](int jy, int jx) {
    const double Kx = w_hat.grid.coord(jx);
    const double Ky = w_hat.grid.coord(jy);
    const double K_sq = Kx * Kx + Ky * Ky;
    const double rate = schrodinger_phase_rate(K_sq, params.k_z);
    // the grouped zero of the envelope equation: 2 i k_z (i rate) + |K|^2
    const double envelope_defect = -2.0 * params.k_z * rate - K_sq;
    const Complex unit = carrier * w_hat.at(jx, jy);
    // both sides carry the common factor eps^2 (identity multiplied by
    // eps^2 to keep the grouped terms at matching scale)
    const Complex lhs =
        (carrier_defect + eps_sq * envelope_defect - eps4 * rate * rate) * unit;
    const Complex rhs = -eps4 * rate * rate * unit;
    const double num = std::abs(lhs - rhs);
    if (num == 0.0) return 0.0;
    return num / std::abs(rhs);
  });
}

}  // namespace paraxial
