#pragma once

// Internal per-family tables: coordinate map, polynomial data, transformation
// factor, and closed-form energy/potential pieces. Shared by transform.cpp and
// families.cpp; not installed.

#include "pdm/errors.hpp"
#include "pdm/mass_profile.hpp"
#include "pdm/transform.hpp"
#include "pdm/types.hpp"

namespace pdm::detail {

struct PolySpec {
  enum class Basis { Jacobi, Hermite, Laguerre } basis;
  ComplexValue alpha{0.0, 0.0};
  ComplexValue beta{0.0, 0.0};
  double lag_alpha = 0.0;
};

GMap family_gmap(FamilyId id, const FamilyParams& p);

PolySpec family_poly(FamilyId id, const FamilyParams& p, int n);

/// Number of quarter turns k in the canonical phase i^{-k n} that makes the
/// polynomial part real for the imaginary-argument maps.
int canonical_quarter_turns(FamilyId id);

/// Real transformation factor f(x), constant phases stripped.
double f_factor(FamilyId id, const FamilyParams& p, const MassProfile& profile,
                int n, double x);

/// Closed-form potential evaluated at mu (without V_m).
double potential_mu(FamilyId id, const FamilyParams& p, double mu);

double energy_closed(FamilyId id, const FamilyParams& p, int n);

MuDomain family_mu_domain(FamilyId id, const FamilyParams& p);

/// Throws InvalidParameterError when parameters violate hard constraints.
void check_params(FamilyId id, const FamilyParams& p);

}  // namespace pdm::detail
