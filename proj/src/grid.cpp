#include "paraxial/grid.hpp"

#include <cmath>
#include <string>

#include "paraxial/errors.hpp"

namespace paraxial {

bool same_grid(const KGrid& a, const KGrid& b) {
  if (a.n != b.n || a.offset != b.offset) return false;
  const double scale = std::max(std::abs(a.k_max), std::abs(b.k_max));
  return std::abs(a.k_max - b.k_max) <= 1e-12 * scale;
}

KGrid scaled(const KGrid& grid, double factor) {
  if (!(factor > 0.0)) throw GridError("grid scale factor must be positive");
  return KGrid{grid.k_max * factor, grid.n, grid.offset};
}

KGrid make_grid(const Params& params, const GridPolicy& policy) {
  if (!(policy.cells_per_epsilon >= 4.0))
    throw ConfigError("cells_per_epsilon must be >= 4");
  if (!(policy.k_max_factor > 0.0))
    throw ConfigError("k_max_factor must be positive");

  const double spacing = params.epsilon / policy.cells_per_epsilon;
  const double k_max_target = policy.k_max_factor * params.omega;
  const auto half = static_cast<std::int64_t>(std::ceil(k_max_target / spacing));
  const std::int64_t n = 2 * half;
  if (n * n > policy.max_nodes) {
    throw ResourceError("grid refused: requires " + std::to_string(n * n) +
                        " nodes (" + std::to_string(n) +
                        " per axis), budget allows " +
                        std::to_string(policy.max_nodes));
  }
  KGrid grid;
  grid.n = static_cast<int>(n);
  grid.k_max = static_cast<double>(half) * spacing;
  grid.offset = true;
  return grid;
}

}  // namespace paraxial
