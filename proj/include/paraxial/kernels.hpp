#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace paraxial::kernels {

/// Pairwise (tree) summation of term(i) over [lo, hi) in a fixed order.
template <class Term>
double pairwise_sum(std::int64_t lo, std::int64_t hi, Term&& term) {
  const std::int64_t count = hi - lo;
  if (count <= 32) {
    double acc = 0.0;
    for (std::int64_t i = lo; i < hi; ++i) acc += term(i);
    return acc;
  }
  const std::int64_t mid = lo + count / 2;
  return pairwise_sum(lo, mid, term) + pairwise_sum(mid, hi, term);
}

/// Reduction over an n_rows x n_cols index space. Rows are summed pairwise
/// in index order and the row partials combine pairwise, so the result is
/// identical for any thread count.
template <class Term>
double grid_sum(int n_rows, int n_cols, Term&& term) {
  std::vector<double> row(static_cast<std::size_t>(n_rows));
#pragma omp parallel for schedule(static)
  for (int r = 0; r < n_rows; ++r) {
    row[static_cast<std::size_t>(r)] = pairwise_sum(
        0, n_cols, [&](std::int64_t c) { return term(r, static_cast<int>(c)); });
  }
  return pairwise_sum(0, n_rows,
                      [&](std::int64_t r) { return row[static_cast<std::size_t>(r)]; });
}

/// Nodewise map over an n_rows x n_cols index space.
template <class Fn>
void grid_map(int n_rows, int n_cols, Fn&& fn) {
#pragma omp parallel for schedule(static)
  for (int r = 0; r < n_rows; ++r)
    for (int c = 0; c < n_cols; ++c) fn(r, c);
}

/// Maximum of term(r, c) over the index space (order-independent).
template <class Term>
double grid_max(int n_rows, int n_cols, Term&& term) {
  std::vector<double> row(static_cast<std::size_t>(n_rows), 0.0);
#pragma omp parallel for schedule(static)
  for (int r = 0; r < n_rows; ++r) {
    double m = 0.0;
    for (int c = 0; c < n_cols; ++c) m = std::max(m, term(r, c));
    row[static_cast<std::size_t>(r)] = m;
  }
  double m = 0.0;
  for (int r = 0; r < n_rows; ++r) m = std::max(m, row[static_cast<std::size_t>(r)]);
  return m;
}

/// Serial reference implementations kept for testing the parallel kernels.
/// Sums accumulate left to right in extended precision; no tree structure,
/// no threading.
namespace ref {

template <class Term>
double grid_sum(int n_rows, int n_cols, Term&& term) {
  long double acc = 0.0L;
  for (int r = 0; r < n_rows; ++r)
    for (int c = 0; c < n_cols; ++c) acc += static_cast<long double>(term(r, c));
  return static_cast<double>(acc);
}

template <class Fn>
void grid_map(int n_rows, int n_cols, Fn&& fn) {
  for (int r = 0; r < n_rows; ++r)
    for (int c = 0; c < n_cols; ++c) fn(r, c);
}

template <class Term>
double grid_max(int n_rows, int n_cols, Term&& term) {
  double m = 0.0;
  for (int r = 0; r < n_rows; ++r)
    for (int c = 0; c < n_cols; ++c) m = std::max(m, term(r, c));
  return m;
}

}  // namespace ref

}  // namespace paraxial::kernels
