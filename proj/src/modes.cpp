#include "paraxial/modes.hpp"

#include <cmath>

#include "paraxial/kernels.hpp"

namespace paraxial {

ModeData mode_data(const KGrid& grid, const Params& params) {
  ModeData m;
  m.grid = grid;
  const auto count = static_cast<std::size_t>(grid.node_count());
  m.omega_hat_sq.resize(count);
  m.lambda_sq.resize(count);
  m.rho.resize(count);
  m.chi.resize(count);

  const int n = grid.n;
  const double omega_sq = params.omega * params.omega;
  const double cutoff = omega_sq / 2.0;
  kernels::grid_map(n, n, [&](int jy, int jx) {
    const double kx = grid.coord(jx);
    const double ky = grid.coord(jy);
    const double k_sq = kx * kx + ky * ky;
    const std::size_t i =
        static_cast<std::size_t>(jy) * static_cast<std::size_t>(n) +
        static_cast<std::size_t>(jx);
    const double ohat2 = omega_sq - k_sq;
    m.omega_hat_sq[i] = ohat2;
    m.lambda_sq[i] = -ohat2;
    m.rho[i] = std::sqrt(1.0 + k_sq);
    m.chi[i] = k_sq <= cutoff ? 1 : 0;
  });
  return m;
}

}  // namespace paraxial
