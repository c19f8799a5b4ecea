#pragma once

#include <complex>
#include <string>

namespace pdm {

using ComplexValue = std::complex<double>;

/// The thirteen exactly solvable families.
enum class FamilyId {
  J1_SCARF2,       // g = i sinh(a mu)
  J1_GPT,          // g = cosh(a mu)
  J1_TRIG_CSC,     // g = cos(a mu)
  J1_TRIG_SEC,     // g = sin(a mu)
  J2_ROSEN_MORSE,  // g = tanh(a mu)
  J2_ECKART,       // g = coth(a mu)
  J2_COT,          // g = -i cot(a mu)
  J2_TAN,          // g = -i tan(a mu)
  H_OSC,           // g = sqrt(omega) mu
  H_SQRT,          // g = sqrt(4 omega/(2n+1)) sqrt(mu)
  L_RADIAL_OSC,    // g = omega mu^2
  L_MORSE,         // g = exp(-a mu)
  L_COULOMB,       // g = 2 omega mu, omega = charge/(n+l+1)
};

inline constexpr FamilyId kAllFamilies[] = {
    FamilyId::J1_SCARF2,      FamilyId::J1_GPT,    FamilyId::J1_TRIG_CSC,
    FamilyId::J1_TRIG_SEC,    FamilyId::J2_ROSEN_MORSE, FamilyId::J2_ECKART,
    FamilyId::J2_COT,         FamilyId::J2_TAN,    FamilyId::H_OSC,
    FamilyId::H_SQRT,         FamilyId::L_RADIAL_OSC,   FamilyId::L_MORSE,
    FamilyId::L_COULOMB,
};

std::string to_string(FamilyId id);
FamilyId family_from_string(const std::string& name);

/// Shared parameter record; each family reads only the fields it uses.
struct FamilyParams {
  double s = 0.0;
  double lambda = 0.0;
  double a = 0.0;       // inverse length of the hyperbolic/trig maps, Morse scale
  double omega = 0.0;   // oscillator frequency
  double l = 0.0;       // angular-momentum-like parameter of the Laguerre cases
  double charge = 0.0;  // Coulomb strength
};

}  // namespace pdm
