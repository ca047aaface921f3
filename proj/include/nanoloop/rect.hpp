// Copyright 2026 the nanoloop developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "nanoloop/models.hpp"
#include "nanoloop/physics.hpp"

namespace nanoloop {

namespace detail {

inline void check_rect_geometry(double a, double b, const char* who) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError(std::string(who) + ": non-finite geometry");
  }
  if (a > 0.0) throw DomainError(std::string(who) + ": a must be <= 0");
  if (b < 0.0) throw DomainError(std::string(who) + ": b must be >= 0");
}

}  // namespace detail

/// Boundary matrix of the shunted rectangular barrier.
///
/// Rows: psi continuity at 0, psi' continuity at 0, then value and derivative
/// continuity between x = a in region I and x = b in region II (the ring
/// closure). Degenerate geometries (a = 0 or b = 0) are accepted; they arise
/// as sweep limits.
inline BoundaryMatrix rect_matrix(const DerivedParameters& d, double a,
                                  double b) {
  detail::check_rect_geometry(a, b, "rect_matrix");
  const double k = d.k, beta = d.beta;
  const double ka = k * a;
  const double ebb = std::exp(beta * b);
  const double embb = std::exp(-beta * b);
  BoundaryMatrix bm;
  bm.m[0] = {1.0, 0.0, -1.0, -1.0};
  bm.m[1] = {0.0, k, -beta, beta};
  bm.m[2] = {std::cos(ka), std::sin(ka), -ebb, -embb};
  bm.m[3] = {k * std::sin(ka), -k * std::cos(ka), beta * ebb, -beta * embb};
  return bm;
}

/// Closed-form determinant of rect_matrix:
///   2 (beta^2 - k^2) sinh(beta b) sin(k a) + 4 k beta [1 - cosh(beta b) cos(k a)]
inline double rect_determinant(const DerivedParameters& d, double a, double b) {
  detail::check_rect_geometry(a, b, "rect_determinant");
  const double k = d.k, beta = d.beta;
  const double ka = k * a;
  const double bb = beta * b;
  return 2.0 * (beta * beta - k * k) * std::sinh(bb) * std::sin(ka) +
         4.0 * k * beta * (1.0 - std::cosh(bb) * std::cos(ka));
}

/// Shorted rectangular barrier (a = 0): the determinant collapses to
/// 2 k beta [1 - cosh(beta b)], strictly negative for b > 0 in the tunneling
/// regime, so the shorted rectangle admits only trivial solutions.
inline double shorted_rect_check(const DerivedParameters& d, double b) {
  if (b < 0.0) throw DomainError("shorted_rect_check: b must be >= 0");
  return 2.0 * d.k * d.beta * (1.0 - std::cosh(d.beta * b));
}

/// Result of coefficient recovery, with the residual bookkeeping the solvers
/// report alongside every solution.
struct CoefficientSolve {
  WaveCoefficients coeffs;
  double determinant = 0.0;
  int held_out_row = -1;
  double held_out_residual = 0.0;
  double max_row_residual = 0.0;
};

/// Recover (A=1, B, C, D) at a rectangular solution point by solving three
/// rows of the boundary system and validating against the held-out row.
///
/// The determinant at (d, a, b) must already be below `tolerance`
/// (NotASolutionError otherwise). Degenerate geometries are rejected: with
/// b = 0 the barrier vanishes and the system is trivial.
inline CoefficientSolve rect_coefficients(const DerivedParameters& d, double a,
                                          double b, double tolerance = 1e-9) {
  detail::check_rect_geometry(a, b, "rect_coefficients");
  if (b == 0.0 || a == 0.0) {
    throw DomainError("rect_coefficients: a = 0 or b = 0 is a trivial point");
  }
  const double det = rect_determinant(d, a, b);
  if (std::abs(det) > tolerance) {
    throw NotASolutionError("rect_coefficients: |Det| = " +
                            std::to_string(std::abs(det)) +
                            " exceeds tolerance");
  }
  const BoundaryMatrix bm = rect_matrix(d, a, b);
  const detail::NormalizedSolve ns = detail::solve_normalized(bm);
  return {ns.coeffs, det, ns.held_out_row, ns.held_out_residual,
          ns.max_row_residual};
}

/// The B coefficient printed in the source derivation (its Eq. 25 form).
/// Kept as a documented cross-check only: the printed expression, like the
/// companion closed forms C = (1 + k/beta)/2 and D = (1 - k/beta)/2, holds
/// only when B = 1 and fails the boundary residual test at general solution
/// points. rect_coefficients() is the trusted path.
inline double rect_printed_b(const DerivedParameters& d, double a, double b) {
  const double k = d.k, beta = d.beta;
  const double ka = k * a;
  if (std::abs(std::cos(ka)) < 1e-14) {
    throw SingularityError("rect_printed_b: cos(ka) = 0 makes the printed "
                           "form indeterminate");
  }
  const double pre = beta / (2.0 * k * std::cos(ka));
  return pre * (1.0 + k / beta) * std::exp(beta * b) -
         pre * (1.0 - k / beta) * std::exp(-beta * b) + std::tan(ka);
}

/// Printed closed forms for C and D (valid only in the B = 1 special case).
inline WaveCoefficients rect_printed_coefficients(const DerivedParameters& d,
                                                  double a, double b) {
  WaveCoefficients wc;
  wc.a = 1.0;
  wc.c = 0.5 * (1.0 + d.k / d.beta);
  wc.d = 0.5 * (1.0 - d.k / d.beta);
  const double ka = d.k * a;
  if (std::abs(std::cos(ka)) < 1e-14) {
    // Eq. 21 recovery when the tangent form blows up.
    wc.b = (wc.c * std::exp(d.beta * b) + wc.d * std::exp(-d.beta * b) -
            std::cos(ka)) /
           std::sin(ka);
  } else {
    wc.b = rect_printed_b(d, a, b);
  }
  return wc;
}

/// psi and psi' in one region of the rectangular model.
///   region I  (a <= x <= 0): psi = A cos(kx) + B sin(kx)
///   region II (0 <= x <= b): psi = C e^{beta x} + D e^{-beta x}
inline WavefunctionSample rect_wavefunction(const WaveCoefficients& wc,
                                            const DerivedParameters& d,
                                            double a, double b, double x,
                                            Region region) {
  WavefunctionSample s;
  s.x = x;
  if (region == Region::I) {
    if (x < a || x > 0.0) {
      throw DomainError("rect_wavefunction: x outside [a, 0] in region I");
    }
    const double kx = d.k * x;
    s.psi = wc.a * std::cos(kx) + wc.b * std::sin(kx);
    s.psi_prime = -d.k * wc.a * std::sin(kx) + d.k * wc.b * std::cos(kx);
  } else {
    if (x < 0.0 || x > b) {
      throw DomainError("rect_wavefunction: x outside [0, b] in region II");
    }
    const double ep = std::exp(d.beta * x);
    const double em = std::exp(-d.beta * x);
    s.psi = wc.c * ep + wc.d * em;
    s.psi_prime = d.beta * wc.c * ep - d.beta * wc.d * em;
  }
  return s;
}

}  // namespace nanoloop
