#pragma once

#include <span>
#include <vector>

#include "paraxial/field.hpp"
#include "paraxial/modes.hpp"

namespace paraxial {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Sharp Fourier projection onto the hyperbolic cutoff |k|^2 <= w^2/2
/// (nodewise multiplication by chi). Idempotent.
SpectralField project_hyp(const SpectralField& field, const ModeData& modes);

/// Complement projection, nodewise multiplication by (1 - chi); satisfies
/// project_hyp(u) + project_ell(u) = u exactly.
SpectralField project_ell(const SpectralField& field, const ModeData& modes);

/// Weighted quadrature norm (sum |v|^2 rho^{2s} dk^2)^(1/2). This is the
/// toolkit's H^s norm; it is computed exclusively in Fourier space.
double l2s_norm(const SpectralField& field, int s, const ModeData& modes);

/// Direct quadrature of the inverse transform, u(x) = sum v e^{i k.x} dk^2,
/// at arbitrary points. Points are taken in the coordinates dual to the
/// field's frame (x for physical-k samples, X for slow-K samples).
std::vector<Complex> evaluate_physical(const SpectralField& field,
                                       std::span<const Point2> points);

/// Tensorized inverse-transform evaluation on a square point lattice.
/// Phase tables are precomputed once per (grid, lattice) pair; results are
/// identical to evaluate_physical up to summation order.
class LatticeEvaluator {
 public:
  LatticeEvaluator(const KGrid& grid, std::vector<double> points);

  const std::vector<double>& points() const { return points_; }

  /// Samples u on the lattice; result is row-major with y outer.
  std::vector<Complex> evaluate(const SpectralField& field) const;

  /// max |u| over the lattice.
  double max_abs(const SpectralField& field) const;

 private:
  KGrid grid_;
  std::vector<double> points_;
  std::vector<Complex> table_;  // table_[j * P + a] = exp(i k_j x_a)
};

}  // namespace paraxial
