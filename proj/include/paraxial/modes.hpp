#pragma once

#include <cstdint>
#include <vector>

#include "paraxial/grid.hpp"
#include "paraxial/params.hpp"

namespace paraxial {

/// Per-node dispersion data on a grid:
///   omega_hat_sq = w^2 - |k|^2        (z-oscillator frequency squared)
///   lambda_sq    = -omega_hat_sq      (growth-rate squared, elliptic side)
///   chi          = 1 iff |k|^2 <= w^2/2   (hyperbolic cutoff)
///   rho          = (1 + |k|^2)^(1/2)  (Sobolev weight)
struct ModeData {
  KGrid grid;
  std::vector<double> omega_hat_sq;
  std::vector<double> lambda_sq;
  std::vector<double> rho;
  std::vector<std::uint8_t> chi;
};

ModeData mode_data(const KGrid& grid, const Params& params);

}  // namespace paraxial
