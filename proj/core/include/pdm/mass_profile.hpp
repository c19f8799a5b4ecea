#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace pdm {

enum class MassKind {
  Constant,
  RationalSquare,    // m = ((b + x^2)/(1 + x^2))^2
  ExpAbs,            // m = exp(-b|x|)
  InverseQuadratic,  // m = 1/(b + x^2)
  TanhShift,         // m = 1 + tanh(b x)
  CustomTable,
};

std::string to_string(MassKind kind);
MassKind mass_kind_from_string(const std::string& name);

/// Which integration constant the auxiliary function mu = int sqrt(m) carries.
/// Paper reproduces the printed closed forms; ContinuousZeroAtOrigin shifts
/// (and for ExpAbs re-branches) them so that mu is continuous with mu(0) = 0.
enum class MuConvention { Paper, ContinuousZeroAtOrigin };

struct MassDerivs {
  double m;
  double dm;
  double d2m;
};

class MassProfile {
 public:
  static MassProfile constant();
  static MassProfile rational_square(double b);
  static MassProfile exp_abs(double b);
  static MassProfile inverse_quadratic(double b);
  static MassProfile tanh_shift(double b);
  static MassProfile custom_table(std::vector<double> xs, std::vector<double> ms);
  /// Two-column text file with header line "x,m".
  static MassProfile from_table_file(const std::string& path);
  static MassProfile make(MassKind kind, double b);

  MassProfile with_convention(MuConvention conv) const;

  MassKind kind() const { return kind_; }
  double shape() const { return b_; }
  MuConvention convention() const { return conv_; }

  /// Open interval on which the profile is defined and positive.
  std::pair<double, double> x_domain() const;
  /// Image of x_domain under mu (continuous convention).
  std::pair<double, double> mu_image() const;

  /// m(x) and its first two derivatives.
  MassDerivs eval(double x) const;
  /// Auxiliary function mu(x) = int_0^x sqrt(m) under the active convention.
  double mu(double x) const;
  /// Inverse of mu by bisection; requires the continuous convention.
  double mu_inverse(double u) const;
  /// Mass-induced potential from the derivative formula.
  double vm(double x) const;
  /// Printed closed form of the mass-induced potential (four paper kinds).
  double vm_closed(double x) const;

 private:
  MassProfile(MassKind kind, double b);

  void check_domain(double x) const;

  MassKind kind_;
  double b_ = 0.0;
  MuConvention conv_ = MuConvention::ContinuousZeroAtOrigin;
  // Custom-table state (shared so profiles stay cheap to copy).
  struct Table;
  std::shared_ptr<const Table> table_;
};

/// Stationary points of V_m for the rational-square profile, ascending.
/// Three points for 0 < b < 1 or 1 < b < 4, five for b > 4.
std::vector<double> vm_stationary_points(double b);

}  // namespace pdm
