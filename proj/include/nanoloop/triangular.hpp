// Copyright 2026 the nanoloop developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "nanoloop/airy.hpp"
#include "nanoloop/models.hpp"
#include "nanoloop/physics.hpp"

namespace nanoloop {

/// Boundary matrix of the shunted triangular barrier, in the reduced
/// variables R = gamma/k, K (lower Airy argument), X = K + gamma c and
/// Theta = k a:
///
///   [ 1        0         -Ai(K)      -Bi(K)     ]
///   [ 0        1         -R Ai'(K)   -R Bi'(K)  ]
///   [ cos(Th)  sin(Th)   -Ai(X)      -Bi(X)     ]
///   [ sin(Th) -cos(Th)   +R Ai'(X)   +R Bi'(X)  ]
inline BoundaryMatrix tri_matrix(double r, double big_k, double big_x,
                                 double theta) {
  const AiryQuad qk = airy_eval(big_k);
  const AiryQuad qx = airy_eval(big_x);
  BoundaryMatrix bm;
  bm.m[0] = {1.0, 0.0, -qk.ai, -qk.bi};
  bm.m[1] = {0.0, 1.0, -r * qk.ai_prime, -r * qk.bi_prime};
  bm.m[2] = {std::cos(theta), std::sin(theta), -qx.ai, -qx.bi};
  bm.m[3] = {std::sin(theta), -std::cos(theta), r * qx.ai_prime,
             r * qx.bi_prime};
  return bm;
}

inline BoundaryMatrix tri_matrix(const DerivedParameters& d) {
  return tri_matrix(d.r, d.big_k, d.big_x, d.theta);
}

/// Factored six-bracket determinant of tri_matrix. Identical zero set and,
/// up to rounding, identical values to the 4x4 expansion.
inline double tri_determinant(double r, double big_k, double big_x,
                              double theta) {
  const AiryQuad k = airy_eval(big_k);
  const AiryQuad x = airy_eval(big_x);
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  return r * r * (k.ai_prime * x.bi_prime - x.ai_prime * k.bi_prime) * st +
         r * (x.ai_prime * x.bi - x.ai * x.bi_prime) +
         r * (k.ai_prime * k.bi - k.ai * k.bi_prime) +
         r * (x.ai * k.bi_prime - x.ai_prime * k.bi) * ct +
         r * (k.ai * x.bi_prime - k.ai_prime * x.bi) * ct +
         (k.ai * x.bi - x.ai * k.bi) * st;
}

inline double tri_determinant(const DerivedParameters& d) {
  return tri_determinant(d.r, d.big_k, d.big_x, d.theta);
}

/// Shorted triangular barrier: Theta = 0 collapses the determinant to an
/// eight-term bracket times R. The two same-argument brackets are Wronskians,
/// so the whole expression vanishes identically at X = K.
inline double shorted_tri_determinant(double r, double big_k, double big_x) {
  const AiryQuad k = airy_eval(big_k);
  const AiryQuad x = airy_eval(big_x);
  return r * (x.ai_prime * x.bi - x.ai * x.bi_prime +
              k.ai_prime * k.bi - k.ai * k.bi_prime +
              x.ai * k.bi_prime - x.ai_prime * k.bi +
              k.ai * x.bi_prime - k.ai_prime * x.bi);
}

/// Recover (A=1, B, C, D) at a triangular solution point. Three rows of the
/// boundary system are solved directly (the printed normalized equations use
/// inconsistent Airy arguments, so the matrix itself is authoritative) and
/// the held-out row closes the check.
inline CoefficientSolve tri_coefficients(const DerivedParameters& d,
                                         double tolerance = 1e-9) {
  const double det = tri_determinant(d);
  if (std::abs(det) > tolerance) {
    throw NotASolutionError("tri_coefficients: |Det| = " +
                            std::to_string(std::abs(det)) +
                            " exceeds tolerance");
  }
  const BoundaryMatrix bm = tri_matrix(d);
  const detail::NormalizedSolve ns = detail::solve_normalized(bm);
  return {ns.coeffs, det, ns.held_out_row, ns.held_out_residual,
          ns.max_row_residual};
}

/// psi and psi' in one region of the triangular model.
///   region I  (a <= x <= 0): psi = A cos(kx) + B sin(kx)
///   region II (0 <= x <= c): psi = C Ai(K + gamma x) + D Bi(K + gamma x),
///                            psi' carries the chain-rule factor gamma.
inline WavefunctionSample tri_wavefunction(const WaveCoefficients& wc,
                                           const DerivedParameters& d,
                                           double c, double x, Region region) {
  WavefunctionSample s;
  s.x = x;
  if (region == Region::I) {
    const double a = d.theta / d.k;
    if (x < a || x > 0.0) {
      throw DomainError("tri_wavefunction: x outside [a, 0] in region I");
    }
    const double kx = d.k * x;
    s.psi = wc.a * std::cos(kx) + wc.b * std::sin(kx);
    s.psi_prime = -d.k * wc.a * std::sin(kx) + d.k * wc.b * std::cos(kx);
  } else {
    if (x < 0.0 || x > c) {
      throw DomainError("tri_wavefunction: x outside [0, c] in region II");
    }
    const double xi = d.big_k + d.gamma * x;
    const AiryQuad q = airy_eval(xi);
    s.psi = wc.c * q.ai + wc.d * q.bi;
    s.psi_prime = d.gamma * (wc.c * q.ai_prime + wc.d * q.bi_prime);
  }
  return s;
}

}  // namespace nanoloop
