#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "paraxial/grid.hpp"

namespace paraxial {

using Complex = std::complex<double>;

/// Which continuous transform the samples represent: u-hat(k) on the
/// physical wave-vector grid, or w-hat(K) on the slow grid K = k / epsilon.
enum class Frame { kPhysicalK, kSlowK };

/// Complex samples of a continuous Fourier transform on a KGrid.
/// Storage is row-major with the y index outer: values[jy * n + jx].
struct SpectralField {
  KGrid grid;
  Frame frame = Frame::kPhysicalK;
  std::vector<Complex> values;

  std::size_t idx(int jx, int jy) const {
    return static_cast<std::size_t>(jy) * static_cast<std::size_t>(grid.n) +
           static_cast<std::size_t>(jx);
  }
  Complex& at(int jx, int jy) { return values[idx(jx, jy)]; }
  const Complex& at(int jx, int jy) const { return values[idx(jx, jy)]; }
};

/// Real-valued samples on a KGrid (per-mode energies and similar).
struct RealField {
  KGrid grid;
  std::vector<double> values;
};

SpectralField make_field(const KGrid& grid, Frame frame);

/// Nodewise a - b; grids and frames must match.
SpectralField subtract(const SpectralField& a, const SpectralField& b);

/// True when every sample is a finite complex number.
bool all_finite(const SpectralField& field);

}  // namespace paraxial
