// Copyright 2026 the nanoloop developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "nanoloop/constants.hpp"
#include "nanoloop/errors.hpp"

namespace nanoloop {

/// Rectangular-barrier inputs: pre-barrier edge a < 0 (nm), barrier length
/// b >= 0 (nm), particle energy E (eV) and barrier height V0 (V).
struct RectParams {
  double a = 0.0;
  double b = 0.0;
  double energy_ev = 0.0;
  double potential_v = 0.0;
};

/// Triangular-barrier inputs: pre-barrier edge a < 0 (nm), barrier base
/// length c > 0 (nm), particle energy E (eV) and peak potential V0 (V).
struct TriParams {
  double a = 0.0;
  double c = 0.0;
  double energy_ev = 0.0;
  double potential_v = 0.0;
};

/// Wavenumbers and Airy arguments shared by the models. Fields that a model
/// does not define stay NaN (beta is rectangular-only; gamma, K, X, R are
/// triangular-only).
struct DerivedParameters {
  double k = std::numeric_limits<double>::quiet_NaN();      // nm^-1
  double beta = std::numeric_limits<double>::quiet_NaN();   // nm^-1
  double gamma = std::numeric_limits<double>::quiet_NaN();  // nm^-1
  double big_k = std::numeric_limits<double>::quiet_NaN();  // lower Airy arg
  double big_x = std::numeric_limits<double>::quiet_NaN();  // upper Airy arg
  double r = std::numeric_limits<double>::quiet_NaN();      // gamma / k
  double theta = std::numeric_limits<double>::quiet_NaN();  // k * a, radians
};

namespace detail {

inline void require_tunneling(double e, double v0, const char* who) {
  if (!(e > 0.0)) throw DomainError(std::string(who) + ": E must be positive");
  if (!(v0 > 0.0)) throw DomainError(std::string(who) + ": V0 must be positive");
  if (!(e < v0)) {
    throw DomainError(std::string(who) +
                      ": E >= V0 is outside the tunneling regime");
  }
}

}  // namespace detail

/// k = sqrt(kf E), beta = sqrt(kf (V0 - E)), Theta = k a.  (kf = 2 m e/hbar^2)
inline DerivedParameters derive_rect(const RectParams& p,
                                     const PhysicalConstants& c = codata2018()) {
  detail::require_tunneling(p.energy_ev, p.potential_v, "derive_rect");
  if (p.a > 0.0) throw DomainError("derive_rect: a must be <= 0");
  const double kf = c.kinetic_factor_nm2_ev;
  DerivedParameters d;
  d.k = std::sqrt(kf * p.energy_ev);
  d.beta = std::sqrt(kf * (p.potential_v - p.energy_ev));
  d.theta = d.k * p.a;
  return d;
}

/// gamma = (kf V0 / c)^{1/3}, K = -(1 - E/V0) gamma c, X = gamma c E/V0,
/// R = gamma/k, Theta = k a.  X - K = gamma c holds by construction.
inline DerivedParameters derive_tri(const TriParams& p,
                                    const PhysicalConstants& c = codata2018()) {
  detail::require_tunneling(p.energy_ev, p.potential_v, "derive_tri");
  if (!(p.c > 0.0)) throw DomainError("derive_tri: c must be positive");
  if (p.a > 0.0) throw DomainError("derive_tri: a must be <= 0");
  const double kf = c.kinetic_factor_nm2_ev;
  DerivedParameters d;
  d.k = std::sqrt(kf * p.energy_ev);
  d.gamma = std::cbrt(kf * p.potential_v / p.c);
  const double gc = d.gamma * p.c;
  const double ratio = p.energy_ev / p.potential_v;
  d.big_k = -(1.0 - ratio) * gc;
  d.big_x = gc * ratio;
  d.r = d.gamma / d.k;
  d.theta = d.k * p.a;
  return d;
}

/// Tunneling length within the triangular barrier: b = (1 - E/V0) c.
inline double tunneling_length(double energy_ev, double potential_v, double c) {
  if (!(c > 0.0)) throw DomainError("tunneling_length: c must be positive");
  if (!(potential_v > 0.0)) {
    throw DomainError("tunneling_length: V0 must be positive");
  }
  if (energy_ev < 0.0 || energy_ev > potential_v) {
    throw DomainError("tunneling_length: E must satisfy 0 <= E <= V0");
  }
  return (1.0 - energy_ev / potential_v) * c;
}

/// Invert the gamma definition for the potential: V0 = gamma^3 c / kf.
inline double potential_from_gamma(double gamma, double c,
                                   const PhysicalConstants& cs = codata2018()) {
  if (!(gamma > 0.0) || !(c > 0.0)) {
    throw DomainError("potential_from_gamma: gamma and c must be positive");
  }
  return gamma * gamma * gamma * c / cs.kinetic_factor_nm2_ev;
}

}  // namespace nanoloop
