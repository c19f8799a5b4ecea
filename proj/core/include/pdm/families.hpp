#pragma once

#include <memory>
#include <optional>
#include <utility>

#include "pdm/mass_profile.hpp"
#include "pdm/transform.hpp"
#include "pdm/types.hpp"

namespace pdm {

/// Largest usable level index. unbounded families are capped at the
/// polynomial degree bound; value = -1 means no realizable level.
struct MaxLevel {
  bool unbounded = false;
  int value = -1;
};

/// Level range from the decay/integrability conditions alone.
MaxLevel validate_params(FamilyId family, const FamilyParams& params);
/// Same, additionally requiring the profile's mu-image to cover the family
/// mu-domain; reports no realizable levels when coverage fails.
MaxLevel validate_params(FamilyId family, const FamilyParams& params,
                         const MassProfile& profile);

/// Level energy by the printed closed form (profile independent).
double energy(FamilyId family, const FamilyParams& params, int n);

/// V(x): closed form in mu(x) plus the mass term V_m(x).
double potential_eval(FamilyId family, const FamilyParams& params,
                      const MassProfile& profile, double x);

/// x-interval on which the family potential is defined for this profile.
struct XDomain {
  double lo, hi;
  bool lo_singular, hi_singular;  // finite singular endpoint vs. open infinity
};
XDomain family_x_domain(FamilyId family, const FamilyParams& params,
                        const MassProfile& profile);

/// One solved bound level: energy plus a normalized real eigenfunction.
class SpectralSolution {
 public:
  SpectralSolution(FamilyId family, const FamilyParams& params,
                   const MassProfile& profile, int n);

  FamilyId family() const { return family_; }
  const FamilyParams& params() const { return params_; }
  const MassProfile& profile() const { return profile_; }
  int level() const { return n_; }
  double energy() const { return energy_; }
  /// Quadrature norm of the raw eigenfunction (before normalization).
  double norm() const { return norm_; }
  /// Decay-truncated interval used for normalization and verification grids.
  std::pair<double, double> numeric_domain() const { return domain_; }
  /// max |Im psi_raw| / max |psi_raw| over the sampling grid.
  double imag_ratio() const { return imag_ratio_; }

  /// Normalized, phase-fixed, real eigenfunction value.
  double psi(double x) const;
  /// Unnormalized complex value f(x) F(g(x)) times the canonical phase.
  ComplexValue psi_raw(double x) const;

 private:
  FamilyId family_;
  FamilyParams params_;
  MassProfile profile_;
  int n_;
  double energy_ = 0.0;
  double norm_ = 1.0;
  double sign_ = 1.0;
  double scale_ = 1.0;  // sampling max, used to keep quadrature well-scaled
  double imag_ratio_ = 0.0;
  std::pair<double, double> domain_{0.0, 0.0};
};

/// Convenience wrapper around SpectralSolution for single evaluations.
double eigenfunction_eval(FamilyId family, const FamilyParams& params,
                          const MassProfile& profile, int n, double x);

}  // namespace pdm
