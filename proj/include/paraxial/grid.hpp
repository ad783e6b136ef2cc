#pragma once

#include <cstdint>

#include "paraxial/params.hpp"

namespace paraxial {

/// Uniform quadrature grid on [-k_max, k_max]^2 in wave-vector space.
///
/// With the half-cell offset set (the default), nodes sit at
/// k_j = -k_max + (j + 1/2) * spacing(), so the node set is symmetric under
/// k -> -k and no node can land exactly on the cutoff circle |k|^2 = w^2/2.
/// Without the offset, k_j = -k_max + j * spacing(); such grids contain the
/// origin for even n and exist for tests that need an exact zero mode.
struct KGrid {
  double k_max = 0.0;
  int n = 0;
  bool offset = true;

  double spacing() const { return 2.0 * k_max / n; }
  double cell_area() const { return spacing() * spacing(); }
  double coord(int j) const {
    return -k_max + (j + (offset ? 0.5 : 0.0)) * spacing();
  }
  std::int64_t node_count() const {
    return static_cast<std::int64_t>(n) * n;
  }
};

/// True when both grids describe the same node set (k_max compared to
/// 1e-12 relative; scaled grid pairs differ in the last ulp).
bool same_grid(const KGrid& a, const KGrid& b);

/// Relabels the axes by a positive factor; node count and offset unchanged.
KGrid scaled(const KGrid& grid, double factor);

/// Resolution policy for make_grid.
struct GridPolicy {
  double cells_per_epsilon = 10.0;  // spacing <= epsilon / cells_per_epsilon
  double k_max_factor = 2.0;        // k_max >= k_max_factor * omega
  std::int64_t max_nodes = 40'000'000;
};

/// Builds the physical-frame grid for the given parameters. Throws
/// ResourceError when the implied node count exceeds policy.max_nodes.
KGrid make_grid(const Params& params, const GridPolicy& policy = {});

}  // namespace paraxial
