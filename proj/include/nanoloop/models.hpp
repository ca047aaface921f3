// Copyright 2026 the nanoloop developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "nanoloop/errors.hpp"

namespace nanoloop {

/// 4x4 boundary-condition matrix. Rows, in order: value continuity at x = 0,
/// derivative continuity at x = 0, value continuity at the ring closure,
/// derivative continuity at the ring closure. Columns multiply (A, B, C, D).
struct BoundaryMatrix {
  std::array<std::array<double, 4>, 4> m{};

  double operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

  /// Residual of row i against a coefficient vector.
  double row_residual(std::size_t i, const std::array<double, 4>& v) const {
    return m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] + m[i][3] * v[3];
  }
};

/// Wavefunction amplitudes. `normalized` means A was pinned to exactly 1.
struct WaveCoefficients {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  bool normalized = true;

  std::array<double, 4> vec() const { return {a, b, c, d}; }
};

/// One sample of psi and psi' at a position x (nm).
struct WavefunctionSample {
  double x = 0.0;
  double psi = 0.0;
  double psi_prime = 0.0;
};

enum class Region { I, II };

namespace detail {

// Solve rows {r0,r1,r2} of M v = 0 for (B, C, D) with A = 1, i.e. the 3x3
// system M[r][1..3] (B,C,D)^T = -M[r][0]. Gaussian elimination with partial
// pivoting; returns false when the subsystem is numerically singular.
inline bool solve_rows_for_bcd(const BoundaryMatrix& bm, int r0, int r1, int r2,
                               double out[3]) {
  double a[3][4];
  const int rows[3] = {r0, r1, r2};
  for (int i = 0; i < 3; ++i) {
    double scale = 0.0;
    for (int j = 0; j < 3; ++j) {
      a[i][j] = bm.m[rows[i]][j + 1];
      scale = std::max(scale, std::abs(a[i][j]));
    }
    a[i][3] = -bm.m[rows[i]][0];
    if (scale == 0.0) return false;
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int i = col + 1; i < 3; ++i) {
      if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
    }
    if (std::abs(a[piv][col]) < 1e-13) return false;
    if (piv != col) {
      for (int j = 0; j < 4; ++j) std::swap(a[piv][j], a[col][j]);
    }
    for (int i = col + 1; i < 3; ++i) {
      const double f = a[i][col] / a[col][col];
      for (int j = col; j < 4; ++j) a[i][j] -= f * a[col][j];
    }
  }
  for (int i = 2; i >= 0; --i) {
    double s = a[i][3];
    for (int j = i + 1; j < 3; ++j) s -= a[i][j] * out[j];
    out[i] = s / a[i][i];
  }
  return true;
}

struct NormalizedSolve {
  WaveCoefficients coeffs;
  int held_out_row = -1;
  double held_out_residual = 0.0;
  double max_row_residual = 0.0;
};

// Recover the A = 1 nullspace vector of a (near-)singular boundary matrix by
// solving three of the four rows and checking the held-out one. Row triples
// are tried in a fixed order so results are deterministic; the triple with
// the smallest held-out residual wins.
inline NormalizedSolve solve_normalized(const BoundaryMatrix& bm) {
  static constexpr int kTriples[4][4] = {
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 3, 1}, {1, 2, 3, 0}};
  bool any = false;
  NormalizedSolve best;
  double best_res = std::numeric_limits<double>::infinity();
  for (const auto& t : kTriples) {
    double bcd[3];
    if (!solve_rows_for_bcd(bm, t[0], t[1], t[2], bcd)) continue;
    any = true;
    WaveCoefficients wc;
    wc.a = 1.0;
    wc.b = bcd[0];
    wc.c = bcd[1];
    wc.d = bcd[2];
    wc.normalized = true;
    const double res = std::abs(bm.row_residual(t[3], wc.vec()));
    if (res < best_res) {
      best_res = res;
      best.coeffs = wc;
      best.held_out_row = t[3];
      best.held_out_residual = res;
    }
  }
  if (!any) {
    throw DegenerateSystemError(
        "coefficient recovery: every 3x3 row subsystem is singular");
  }
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(bm.row_residual(i, best.coeffs.vec())));
  }
  best.max_row_residual = worst;
  return best;
}

}  // namespace detail
}  // namespace nanoloop
