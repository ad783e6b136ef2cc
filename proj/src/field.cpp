#include "paraxial/field.hpp"

#include <cmath>

#include "paraxial/errors.hpp"
#include "paraxial/kernels.hpp"

namespace paraxial {

SpectralField make_field(const KGrid& grid, Frame frame) {
  SpectralField f;
  f.grid = grid;
  f.frame = frame;
  f.values.assign(static_cast<std::size_t>(grid.node_count()), Complex{});
  return f;
}

SpectralField subtract(const SpectralField& a, const SpectralField& b) {
  if (a.frame != b.frame) throw FrameError("subtract: frame mismatch");
  if (!same_grid(a.grid, b.grid)) throw GridError("subtract: grid mismatch");
  SpectralField out = make_field(a.grid, a.frame);
  const int n = a.grid.n;
  kernels::grid_map(n, n, [&](int r, int c) {
    const std::size_t i = out.idx(c, r);
    out.values[i] = a.values[i] - b.values[i];
  });
  return out;
}

bool all_finite(const SpectralField& field) {
  for (const Complex& v : field.values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

}  // namespace paraxial
