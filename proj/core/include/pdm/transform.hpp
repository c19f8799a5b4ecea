#pragma once

#include "pdm/mass_profile.hpp"
#include "pdm/types.hpp"

namespace pdm {

/// The thirteen coordinate maps g(mu) behind the solvable families.
enum class GMapKind {
  J1_ISINH,     // i sinh(a mu)
  J1_COSH,      // cosh(a mu)
  J1_COS,       // cos(a mu)
  J1_SIN,       // sin(a mu)
  J2_TANH,      // tanh(a mu)
  J2_COTH,      // coth(a mu)
  J2_ICOT,      // -i cot(a mu)
  J2_ITAN,      // -i tan(a mu)
  H_LINEAR,     // sqrt(omega) mu
  H_SQRT,       // sqrt(4 omega / (2n+1)) mu^(1/2)
  L_QUADRATIC,  // omega mu^2
  L_EXP,        // exp(-a mu)
  L_LINEAR,     // 2 omega_n mu, omega_n = charge/(n+l+1)
};

struct GDerivs {
  ComplexValue g;
  ComplexValue d1;  // dg/dmu
  ComplexValue d2;
  ComplexValue d3;
};

/// Open interval of mu on which the map stays finite and single-branched.
struct MuDomain {
  enum class Kind { FullLine, HalfLine, Interval } kind;
  double lo;  // finite for Interval; 0 for HalfLine
  double hi;
};

struct GMap {
  GMapKind kind;
  double a = 0.0;      // inverse length (Jacobi cases, L_EXP)
  double omega = 0.0;  // H_LINEAR, H_SQRT, L_QUADRATIC, and charge for L_LINEAR
  double l = 0.0;      // L_LINEAR level shift

  /// Case constant of the defining equation (level-dependent for H_SQRT, L_LINEAR).
  double constant(int n) const;
  /// g and its first three mu-derivatives.
  GDerivs derivs(double mu, int n) const;
  MuDomain mu_domain() const;
};

/// G(z) = z''/z - (3/2)(z'/z)^2 with (z0, z1, z2) = (z, z', z'').
double big_g(double z0, double z1, double z2);
ComplexValue big_g(ComplexValue z0, ComplexValue z1, ComplexValue z2);

/// Transformation function f(x) = sqrt(m/g') exp(1/2 int Q dg), with the
/// Q-integral carried out analytically per family and constant phases dropped.
ComplexValue f_transform(FamilyId family, const FamilyParams& params,
                         const MassProfile& profile, int n, double x);

/// Right-hand side of the energy-potential split, evaluated directly from the
/// map derivatives, the Q/R data, and the mass derivatives. Equals
/// energy(family, n) - potential(family, x) for consistent families.
double rhs_eq12(FamilyId family, const FamilyParams& params,
                const MassProfile& profile, int n, double x);

}  // namespace pdm
