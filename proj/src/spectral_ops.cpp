#include "paraxial/spectral_ops.hpp"

#include <cmath>
#include <complex>

#include "paraxial/errors.hpp"
#include "paraxial/kernels.hpp"

namespace paraxial {

namespace {

double ipow(double base, int exponent) {
  double out = 1.0;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

void check_physical_frame(const SpectralField& field, const char* op) {
  if (field.frame != Frame::kPhysicalK)
    throw FrameError(std::string(op) + ": field must be in the physical-k frame");
}

void check_grids(const SpectralField& field, const ModeData& modes,
                 const char* op) {
  if (!same_grid(field.grid, modes.grid))
    throw GridError(std::string(op) + ": field and mode data grids differ");
}

SpectralField apply_mask(const SpectralField& field, const ModeData& modes,
                         bool keep_hyperbolic) {
  SpectralField out = make_field(field.grid, field.frame);
  const int n = field.grid.n;
  kernels::grid_map(n, n, [&](int jy, int jx) {
    const std::size_t i = out.idx(jx, jy);
    const bool keep = (modes.chi[i] != 0) == keep_hyperbolic;
    out.values[i] = keep ? field.values[i] : Complex{};
  });
  return out;
}

}  // namespace

SpectralField project_hyp(const SpectralField& field, const ModeData& modes) {
  check_physical_frame(field, "project_hyp");
  check_grids(field, modes, "project_hyp");
  return apply_mask(field, modes, true);
}

SpectralField project_ell(const SpectralField& field, const ModeData& modes) {
  check_physical_frame(field, "project_ell");
  check_grids(field, modes, "project_ell");
  return apply_mask(field, modes, false);
}

double l2s_norm(const SpectralField& field, int s, const ModeData& modes) {
  if (s < 0) throw ConfigError("l2s_norm: s must be >= 0");
  check_grids(field, modes, "l2s_norm");
  const int n = field.grid.n;
  const double sum = kernels::grid_sum(n, n, [&](int jy, int jx) {
    const std::size_t i = field.idx(jx, jy);
    const double w = ipow(modes.rho[i] * modes.rho[i], s);
    return std::norm(field.values[i]) * w;
  });
  return std::sqrt(sum * field.grid.cell_area());
}

std::vector<Complex> evaluate_physical(const SpectralField& field,
                                       std::span<const Point2> points) {
  const int n = field.grid.n;
  const double area = field.grid.cell_area();
  std::vector<Complex> out(points.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t p = 0; p < static_cast<std::int64_t>(points.size()); ++p) {
    const double x = points[static_cast<std::size_t>(p)].x;
    const double y = points[static_cast<std::size_t>(p)].y;
    Complex acc{};
    for (int jy = 0; jy < n; ++jy) {
      const Complex phase_y = std::polar(1.0, field.grid.coord(jy) * y);
      for (int jx = 0; jx < n; ++jx) {
        const Complex phase_x = std::polar(1.0, field.grid.coord(jx) * x);
        acc += field.at(jx, jy) * phase_x * phase_y;
      }
    }
    out[static_cast<std::size_t>(p)] = acc * area;
  }
  return out;
}

LatticeEvaluator::LatticeEvaluator(const KGrid& grid, std::vector<double> points)
    : grid_(grid), points_(std::move(points)) {
  const int n = grid_.n;
  const auto count = points_.size();
  table_.resize(static_cast<std::size_t>(n) * count);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    const double k = grid_.coord(j);
    for (std::size_t a = 0; a < count; ++a)
      table_[static_cast<std::size_t>(j) * count + a] =
          std::polar(1.0, k * points_[a]);
  }
}

std::vector<Complex> LatticeEvaluator::evaluate(const SpectralField& field) const {
  if (!same_grid(field.grid, grid_))
    throw GridError("LatticeEvaluator: field grid differs from table grid");
  const int n = grid_.n;
  const std::size_t count = points_.size();
  const double area = grid_.cell_area();

  // stage 1: contract over k_x for every (row, point) pair
  std::vector<Complex> partial(static_cast<std::size_t>(n) * count);
#pragma omp parallel for schedule(static)
  for (int jy = 0; jy < n; ++jy) {
    const Complex* row = field.values.data() + field.idx(0, jy);
    Complex* dst = partial.data() + static_cast<std::size_t>(jy) * count;
    for (std::size_t a = 0; a < count; ++a) {
      Complex acc{};
      for (int jx = 0; jx < n; ++jx)
        acc += row[jx] * table_[static_cast<std::size_t>(jx) * count + a];
      dst[a] = acc;
    }
  }

  // stage 2: contract over k_y
  std::vector<Complex> out(count * count);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(count); ++b) {
    for (std::size_t a = 0; a < count; ++a) {
      Complex acc{};
      for (int jy = 0; jy < n; ++jy)
        acc += partial[static_cast<std::size_t>(jy) * count + a] *
               table_[static_cast<std::size_t>(jy) * count +
                      static_cast<std::size_t>(b)];
      out[static_cast<std::size_t>(b) * count + a] = acc * area;
    }
  }
  return out;
}

double LatticeEvaluator::max_abs(const SpectralField& field) const {
  const std::vector<Complex> u = evaluate(field);
  double m = 0.0;
  for (const Complex& v : u) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace paraxial
