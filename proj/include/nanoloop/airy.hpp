// Copyright 2026 the nanoloop developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <string>

#include "nanoloop/errors.hpp"

namespace nanoloop {

/// Ai, Bi and their first derivatives at one real argument.
struct AiryQuad {
  double ai = 0.0;
  double bi = 0.0;
  double ai_prime = 0.0;
  double bi_prime = 0.0;
};

namespace detail {

// Compensated double-double arithmetic. The Maclaurin branch needs ~32
// significant digits: combining Ai = Ai(0) f + Ai'(0) g on the positive axis
// cancels like exp(-4/3 x^{3/2}), and plain double runs out near x = 4.
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD dd_sub(DD a, DD b) { return dd_add(a, DD{-b.hi, -b.lo}); }

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div(DD a, double b) {
  const double q1 = a.hi / b;
  const DD p = two_prod(q1, b);
  const DD s = two_sum(a.hi, -p.hi);
  const double q2 = (s.hi + (s.lo - p.lo + a.lo)) / b;
  return quick_two_sum(q1, q2);
}

inline double dd_value(DD a) { return a.hi + a.lo; }

// sqrt(x) refined to double-double by one Newton step.
inline DD dd_sqrt(double x) {
  const double s = std::sqrt(x);
  const double r = std::fma(-s, s, x) / (2.0 * s);
  return quick_two_sum(s, r);
}

// Origin values of the Airy pair, split to double-double.
// Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3).
inline constexpr DD kAi0{3.55028053887817219e-01, 2.05233632436211994e-17};
inline constexpr DD kAip0{-2.58819403792806824e-01, 2.52224311161083207e-17};
inline constexpr DD kSqrt3{1.73205080756887719e+00, 1.00350842218069028e-16};
inline constexpr DD kTwoPi{6.28318530717958623e+00, 2.44929359829470641e-16};
inline constexpr DD kPiQuarter{7.85398163397448279e-01, 3.06161699786838294e-17};
inline constexpr double kInvSqrtPi = 5.6418958354775628695e-01;

// Branch layout. The series handles [-10.5, 8.5]; beyond that the asymptotic
// expansions are below 1e-14 relative at optimal truncation. Above 8.5 the
// series must not be used for Ai (cancellation), below -10.5 it merely gets
// slow. kMaxArg keeps exp(zeta) for Bi clear of double overflow.
inline constexpr double kSeriesNegLimit = -10.5;
inline constexpr double kSeriesPosLimit = 8.5;
inline constexpr double kMaxArg = 103.5;
inline constexpr double kMinArg = -5000.0;

// Maclaurin series of the standard pair f, g (DLMF 9.4) and their
// derivatives, each reduced to a hypergeometric-style term recurrence:
//   f   = sum t_k,            t_k = t_{k-1} x^3 / (3k (3k-1))
//   g   = x   * sum t_k,      t_k = t_{k-1} x^3 / (3k (3k+1))
//   f'  = x^2/2 * sum t_k,    t_k = t_{k-1} x^3 / (3k (3k+2))
//   g'  = sum t_k,            t_k = t_{k-1} x^3 / (3k (3k-2))
inline AiryQuad airy_series(double x) {
  const DD x2 = two_prod(x, x);
  const DD x3 = dd_mul(x2, x);
  DD tf{1.0, 0.0}, tg{1.0, 0.0}, tfp{1.0, 0.0}, tgp{1.0, 0.0};
  DD f = tf, g = tg, fp = tfp, gp = tgp;
  for (int k = 1; k < 300; ++k) {
    const double k3 = 3.0 * k;
    tf = dd_div(dd_mul(tf, x3), k3 * (k3 - 1.0));
    tg = dd_div(dd_mul(tg, x3), k3 * (k3 + 1.0));
    tfp = dd_div(dd_mul(tfp, x3), k3 * (k3 + 2.0));
    tgp = dd_div(dd_mul(tgp, x3), k3 * (k3 - 2.0));
    f = dd_add(f, tf);
    g = dd_add(g, tg);
    fp = dd_add(fp, tfp);
    gp = dd_add(gp, tgp);
    const double worst =
        std::max(std::max(std::abs(tf.hi), std::abs(tg.hi)),
                 std::max(std::abs(tfp.hi), std::abs(tgp.hi)));
    if (worst < 1e-38) break;
  }
  const DD gfull = dd_mul(g, x);
  const DD fpfull = dd_mul(fp, dd_mul(x2, 0.5));
  const DD ai = dd_add(dd_mul(kAi0, f), dd_mul(kAip0, gfull));
  const DD aip = dd_add(dd_mul(kAi0, fpfull), dd_mul(kAip0, gp));
  const DD bi = dd_mul(kSqrt3, dd_sub(dd_mul(kAi0, f), dd_mul(kAip0, gfull)));
  const DD bip =
      dd_mul(kSqrt3, dd_sub(dd_mul(kAi0, fpfull), dd_mul(kAip0, gp)));
  return {dd_value(ai), dd_value(bi), dd_value(aip), dd_value(bip)};
}

// Poincare coefficients u_k, v_k of the large-argument expansions (DLMF 9.7).
inline void uv_next(int k, double& u, double& v) {
  u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
       (216.0 * k * (2.0 * k - 1.0));
  v = u * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
}

inline AiryQuad airy_asymptotic_pos(double x) {
  const double sx = std::sqrt(x);
  const double zeta = (2.0 / 3.0) * x * sx;
  const double x4 = std::sqrt(sx);
  double sa = 1.0, sb = 1.0, sap = 1.0, sbp = 1.0;
  double u = 1.0, v = 1.0, sgn = 1.0, prev = 1.0, zk = 1.0;
  for (int k = 1; k < 70; ++k) {
    uv_next(k, u, v);
    zk *= zeta;
    const double tu = u / zk;
    if (tu > prev) break;  // smallest term reached, divergent tail follows
    prev = tu;
    sgn = -sgn;
    sa += sgn * tu;
    sb += tu;
    sap += sgn * v / zk;
    sbp += v / zk;
    if (tu < 1e-18) break;
  }
  const double em = std::exp(-zeta);
  const double ep = std::exp(zeta);
  return {0.5 * kInvSqrtPi * em / x4 * sa, kInvSqrtPi * ep / x4 * sb,
          -0.5 * kInvSqrtPi * em * x4 * sap, kInvSqrtPi * ep * x4 * sbp};
}

inline AiryQuad airy_asymptotic_neg(double x) {
  const double z = -x;
  // zeta and the trig phase are carried in double-double: near the Airy
  // zeros the value comes from a cancellation proportional to the phase
  // error, and plain-double zeta is not accurate enough there.
  const DD zeta_dd = dd_div(dd_mul(dd_mul(dd_sqrt(z), z), 2.0), 3.0);
  const double zeta = dd_value(zeta_dd);
  DD phase = dd_sub(zeta_dd, kPiQuarter);
  const double n = std::nearbyint(dd_value(phase) / (2.0 * M_PI));
  phase = dd_sub(phase, dd_mul(kTwoPi, n));
  const double sphi =
      std::sin(phase.hi) + phase.lo * std::cos(phase.hi);
  const double cphi =
      std::cos(phase.hi) - phase.lo * std::sin(phase.hi);
  const double z4 = std::sqrt(std::sqrt(z));

  double u = 1.0, v = 1.0;
  uv_next(1, u, v);
  double sc = 1.0, sp = 1.0;              // even-index sums
  double ss = u / zeta, sps = v / zeta;   // odd-index sums
  double ue = u, ve = v, prev = 1.0, sgn = 1.0;
  double zk = zeta;
  for (int k = 1; k < 35; ++k) {
    uv_next(2 * k, ue, ve);
    zk *= zeta;
    const double te = ue / zk;
    if (te > prev) break;
    prev = te;
    sgn = -sgn;
    sc += sgn * te;
    sp += sgn * ve / zk;
    uv_next(2 * k + 1, ue, ve);
    zk *= zeta;
    ss += sgn * ue / zk;
    sps += sgn * ve / zk;
    if (te < 1e-18) break;
  }
  return {kInvSqrtPi / z4 * (cphi * sc + sphi * ss),
          kInvSqrtPi / z4 * (-sphi * sc + cphi * ss),
          kInvSqrtPi * z4 * (sphi * sp - cphi * sps),
          kInvSqrtPi * z4 * (cphi * sp + sphi * sps)};
}

}  // namespace detail

/// Evaluate Ai, Bi, Ai', Bi' at a real argument.
///
/// Relative accuracy is a few 1e-15 across [-10, 10] and stays below 1e-13
/// over the whole supported range [-5000, 103.5]. Beyond +103.5 Bi overflows
/// a double, which is reported instead of saturated.
inline AiryQuad airy_eval(double x) {
  if (!std::isfinite(x)) {
    throw NaNError("airy_eval: non-finite argument");
  }
  if (x > detail::kMaxArg || x < detail::kMinArg) {
    throw RangeError("airy_eval: argument " + std::to_string(x) +
                     " outside supported range [" +
                     std::to_string(detail::kMinArg) + ", " +
                     std::to_string(detail::kMaxArg) + "]");
  }
  if (x >= detail::kSeriesNegLimit && x <= detail::kSeriesPosLimit) {
    return detail::airy_series(x);
  }
  return x > 0 ? detail::airy_asymptotic_pos(x) : detail::airy_asymptotic_neg(x);
}

/// Wronskian defect Ai(x)Bi'(x) - Ai'(x)Bi(x) - 1/pi, handy as a self check.
inline double airy_wronskian_defect(const AiryQuad& q) {
  return q.ai * q.bi_prime - q.ai_prime * q.bi - M_1_PI;
}

}  // namespace nanoloop
