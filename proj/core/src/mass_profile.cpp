#include "pdm/mass_profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "pdm/errors.hpp"
#include "pdm/quadrature.hpp"

namespace pdm {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double softplus(double z) {
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

/// artanh(sqrt(q)) with q = sigmoid(2bx), written to stay finite for large x:
/// artanh(sqrt(q)) = log1p(sqrt(q)) + softplus(2bx)/2 - log... (see mu below)
double tanh_shift_mu_raw(double b, double x) {
  const double z = 2.0 * b * x;
  const double q = 1.0 / (1.0 + std::exp(-z));
  return (std::sqrt(2.0) / (2.0 * b)) * (2.0 * std::log1p(std::sqrt(q)) + softplus(z));
}
}  // namespace

std::string to_string(MassKind kind) {
  switch (kind) {
    case MassKind::Constant: return "constant";
    case MassKind::RationalSquare: return "rational_square";
    case MassKind::ExpAbs: return "exp_abs";
    case MassKind::InverseQuadratic: return "inverse_quadratic";
    case MassKind::TanhShift: return "tanh_shift";
    case MassKind::CustomTable: return "custom_table";
  }
  return "?";
}

MassKind mass_kind_from_string(const std::string& name) {
  if (name == "constant") return MassKind::Constant;
  if (name == "rational_square") return MassKind::RationalSquare;
  if (name == "exp_abs") return MassKind::ExpAbs;
  if (name == "inverse_quadratic") return MassKind::InverseQuadratic;
  if (name == "tanh_shift") return MassKind::TanhShift;
  if (name == "custom_table") return MassKind::CustomTable;
  throw InvalidParameterError("unknown mass kind: " + name);
}

// ---------------------------------------------------------------------------
// Custom tables: natural cubic spline through (x_i, m_i).

struct MassProfile::Table {
  std::vector<double> x, y;       // knots
  std::vector<double> y2;         // second derivatives at knots

  double interp(double t) const {
    auto it = std::upper_bound(x.begin(), x.end(), t);
    size_t hi = std::clamp<size_t>(it - x.begin(), 1, x.size() - 1);
    size_t lo = hi - 1;
    const double h = x[hi] - x[lo];
    const double A = (x[hi] - t) / h;
    const double B = (t - x[lo]) / h;
    return A * y[lo] + B * y[hi] +
           ((A * A * A - A) * y2[lo] + (B * B * B - B) * y2[hi]) * h * h / 6.0;
  }
};

MassProfile MassProfile::custom_table(std::vector<double> xs, std::vector<double> ms) {
  if (xs.size() != ms.size() || xs.size() < 4) {
    throw InvalidProfileError("custom mass table needs >= 4 rows of (x, m)");
  }
  for (size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw InvalidProfileError("table x must be strictly increasing");
  }
  for (double m : ms) {
    if (!(m > 0.0) || !std::isfinite(m)) throw InvalidProfileError("table mass must be positive");
  }
  if (xs.front() > 0.0 || xs.back() < 0.0) {
    throw InvalidProfileError("table must span x = 0 (mu is anchored there)");
  }
  auto tab = std::make_shared<Table>();
  tab->x = std::move(xs);
  tab->y = std::move(ms);
  // Natural cubic spline second derivatives (tridiagonal sweep).
  const size_t n = tab->x.size();
  tab->y2.assign(n, 0.0);
  std::vector<double> u(n, 0.0);
  for (size_t i = 1; i + 1 < n; ++i) {
    const double sig = (tab->x[i] - tab->x[i - 1]) / (tab->x[i + 1] - tab->x[i - 1]);
    const double p = sig * tab->y2[i - 1] + 2.0;
    tab->y2[i] = (sig - 1.0) / p;
    const double d = (tab->y[i + 1] - tab->y[i]) / (tab->x[i + 1] - tab->x[i]) -
                     (tab->y[i] - tab->y[i - 1]) / (tab->x[i] - tab->x[i - 1]);
    u[i] = (6.0 * d / (tab->x[i + 1] - tab->x[i - 1]) - sig * u[i - 1]) / p;
  }
  for (size_t k = n - 1; k-- > 0;) tab->y2[k] = tab->y2[k] * tab->y2[k + 1] + u[k];

  MassProfile p(MassKind::CustomTable, 0.0);
  p.table_ = std::move(tab);
  return p;
}

MassProfile MassProfile::from_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidProfileError("cannot open mass table: " + path);
  std::string line;
  if (!std::getline(in, line)) throw InvalidProfileError("empty mass table: " + path);
  auto strip = [](std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }), s.end());
    return s;
  };
  if (strip(line) != "x,m") throw InvalidProfileError("mass table must start with header 'x,m'");
  std::vector<double> xs, ms;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double x, m;
    if (!(row >> x >> m)) throw InvalidProfileError("bad mass table row: " + line);
    xs.push_back(x);
    ms.push_back(m);
  }
  return custom_table(std::move(xs), std::move(ms));
}

// ---------------------------------------------------------------------------

MassProfile::MassProfile(MassKind kind, double b) : kind_(kind), b_(b) {
  switch (kind_) {
    case MassKind::RationalSquare:
      if (!(b > 0.0)) throw InvalidParameterError("rational_square requires b > 0");
      break;
    case MassKind::ExpAbs:
      if (!(b >= 0.0)) throw InvalidParameterError("exp_abs requires b >= 0");
      break;
    case MassKind::InverseQuadratic:
      if (!(b > 0.0)) throw InvalidParameterError("inverse_quadratic requires b > 0");
      break;
    default:
      break;
  }
}

MassProfile MassProfile::constant() { return MassProfile(MassKind::Constant, 0.0); }
MassProfile MassProfile::rational_square(double b) { return MassProfile(MassKind::RationalSquare, b); }
MassProfile MassProfile::exp_abs(double b) { return MassProfile(MassKind::ExpAbs, b); }
MassProfile MassProfile::inverse_quadratic(double b) { return MassProfile(MassKind::InverseQuadratic, b); }
MassProfile MassProfile::tanh_shift(double b) { return MassProfile(MassKind::TanhShift, b); }

MassProfile MassProfile::make(MassKind kind, double b) {
  switch (kind) {
    case MassKind::Constant: return constant();
    case MassKind::RationalSquare: return rational_square(b);
    case MassKind::ExpAbs: return exp_abs(b);
    case MassKind::InverseQuadratic: return inverse_quadratic(b);
    case MassKind::TanhShift: return tanh_shift(b);
    case MassKind::CustomTable:
      throw InvalidParameterError("custom_table profiles are built from a table, not a shape parameter");
  }
  throw InvalidParameterError("unknown mass kind");
}

MassProfile MassProfile::with_convention(MuConvention conv) const {
  MassProfile p = *this;
  p.conv_ = conv;
  return p;
}

std::pair<double, double> MassProfile::x_domain() const {
  if (kind_ == MassKind::CustomTable) return {table_->x.front(), table_->x.back()};
  return {-kInf, kInf};
}

void MassProfile::check_domain(double x) const {
  if (!std::isfinite(x)) throw DomainError("x is not finite");
  const auto [lo, hi] = x_domain();
  if (x < lo || x > hi) throw DomainError("x outside profile domain");
}

MassDerivs MassProfile::eval(double x) const {
  check_domain(x);
  switch (kind_) {
    case MassKind::Constant:
      return {1.0, 0.0, 0.0};
    case MassKind::RationalSquare: {
      const double x2 = x * x;
      const double R = (b_ + x2) / (1.0 + x2);
      const double Rp = 2.0 * x * (1.0 - b_) / ((1.0 + x2) * (1.0 + x2));
      const double Rpp = (1.0 - b_) * (2.0 - 6.0 * x2) / std::pow(1.0 + x2, 3);
      return {R * R, 2.0 * R * Rp, 2.0 * Rp * Rp + 2.0 * R * Rpp};
    }
    case MassKind::ExpAbs: {
      const double m = std::exp(-b_ * std::abs(x));
      // m'(0) := 0 by the symmetric convention; m'' keeps the two-sided value.
      const double sgn = (x > 0) - (x < 0);
      return {m, -b_ * sgn * m, b_ * b_ * m};
    }
    case MassKind::InverseQuadratic: {
      const double d = b_ + x * x;
      return {1.0 / d, -2.0 * x / (d * d), (6.0 * x * x - 2.0 * b_) / (d * d * d)};
    }
    case MassKind::TanhShift: {
      const double t = std::tanh(b_ * x);
      const double sech2 = 1.0 - t * t;
      return {1.0 + t, b_ * sech2, -2.0 * b_ * b_ * t * sech2};
    }
    case MassKind::CustomTable: {
      const double h = std::max(1e-5, 1e-5 * std::abs(x));
      const auto [lo, hi] = x_domain();
      if (x - 2 * h < lo || x + 2 * h > hi) {
        throw DomainError("x too close to the table edge for the derivative stencil");
      }
      auto f = [&](double t) { return table_->interp(t); };
      const double m = f(x);
      if (!(m > 0.0)) throw InvalidProfileError("interpolated mass is nonpositive");
      const double dm = (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
      const double d2m =
          (-f(x + 2 * h) + 16 * f(x + h) - 30 * m + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
      return {m, dm, d2m};
    }
  }
  throw Error("unreachable");
}

double MassProfile::mu(double x) const {
  check_domain(x);
  const bool cont = conv_ == MuConvention::ContinuousZeroAtOrigin;
  switch (kind_) {
    case MassKind::Constant:
      return x;
    case MassKind::RationalSquare:
      return x + (b_ - 1.0) * std::atan(x);  // already zero at the origin
    case MassKind::ExpAbs: {
      if (b_ == 0.0) return x;
      if (cont) {
        const double sgn = (x > 0) - (x < 0);
        return sgn * (2.0 / b_) * (-std::expm1(-b_ * std::abs(x) / 2.0));
      }
      if (x > 0.0) return -(2.0 / b_) * std::exp(-b_ * x / 2.0);
      if (x < 0.0) return (2.0 / b_) * std::exp(b_ * x / 2.0);
      return 0.0;  // the printed piecewise form has no value at x = 0
    }
    case MassKind::InverseQuadratic: {
      const double paper = std::log(x + std::sqrt(b_ + x * x));
      return cont ? std::asinh(x / std::sqrt(b_)) : paper;
    }
    case MassKind::TanhShift: {
      if (b_ == 0.0) return x;
      const double raw = tanh_shift_mu_raw(b_, x);
      return cont ? raw - tanh_shift_mu_raw(b_, 0.0) : raw;
    }
    case MassKind::CustomTable: {
      auto f = [&](double t) { return std::sqrt(eval(t).m); };
      // derivative stencil inset: keep quadrature strictly inside the table
      return integrate(f, 0.0, x, 1e-10);
    }
  }
  throw Error("unreachable");
}

std::pair<double, double> MassProfile::mu_image() const {
  switch (kind_) {
    case MassKind::Constant:
    case MassKind::RationalSquare:
      return {-kInf, kInf};
    case MassKind::ExpAbs:
      if (b_ == 0.0) return {-kInf, kInf};
      return {-2.0 / b_, 2.0 / b_};
    case MassKind::InverseQuadratic:
      return {-kInf, kInf};
    case MassKind::TanhShift: {
      if (b_ == 0.0) return {-kInf, kInf};
      const double mu0 = tanh_shift_mu_raw(b_, 0.0);
      if (b_ > 0.0) return {-mu0, kInf};
      return {-kInf, mu0};
    }
    case MassKind::CustomTable: {
      const double h = std::max(1e-5, 1e-5 * std::max(std::abs(table_->x.front()), std::abs(table_->x.back())));
      return {mu(table_->x.front() + 2.5 * h), mu(table_->x.back() - 2.5 * h)};
    }
  }
  throw Error("unreachable");
}

double MassProfile::mu_inverse(double u) const {
  if (conv_ != MuConvention::ContinuousZeroAtOrigin) {
    throw InvalidParameterError("mu_inverse requires the continuous-zero convention");
  }
  const auto [ulo, uhi] = mu_image();
  if (!(u > ulo && u < uhi)) throw RangeError("u outside the image of mu");
  double lo = 0.0, hi = 0.0;
  if (u >= 0.0) {
    hi = 1.0;
    const double xmax = x_domain().second;
    while (mu(hi) < u) {
      hi = std::min(hi * 2.0, xmax - (xmax - hi) * 0.5);
      if (!std::isfinite(hi)) throw RangeError("u outside the image of mu");
    }
    lo = 0.0;
  } else {
    lo = -1.0;
    const double xmin = x_domain().first;
    while (mu(lo) > u) {
      lo = std::max(lo * 2.0, xmin - (xmin - lo) * 0.5);
      if (!std::isfinite(lo)) throw RangeError("u outside the image of mu");
    }
    hi = 0.0;
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mu(mid) < u) lo = mid; else hi = mid;
    if (hi - lo <= 1e-13 * (1.0 + std::abs(mid))) break;
  }
  const double x = 0.5 * (lo + hi);
  if (std::abs(mu(x) - u) > 1e-12 * (1.0 + std::abs(u)) + 1e-12) {
    throw NumericError("mu_inverse bisection did not reach tolerance");
  }
  return x;
}

double MassProfile::vm(double x) const {
  if (kind_ == MassKind::ExpAbs && x == 0.0) {
    return -3.0 * b_ * b_ / 32.0;  // continuity value across the |x| kink
  }
  const auto [m, dm, d2m] = eval(x);
  const double r = dm / m;
  return (1.0 / (8.0 * m)) * (d2m / m - 1.75 * r * r);
}

double MassProfile::vm_closed(double x) const {
  check_domain(x);
  switch (kind_) {
    case MassKind::RationalSquare: {
      const double x2 = x * x;
      return (b_ - 1.0) * (3.0 * x2 * x2 + 2.0 * (2.0 - b_) * x2 - b_) /
             (2.0 * std::pow(b_ + x2, 4));
    }
    case MassKind::ExpAbs:
      return -(3.0 / 32.0) * b_ * b_ * std::exp(b_ * std::abs(x));
    case MassKind::InverseQuadratic:
      return -(2.0 * b_ + x * x) / (8.0 * (b_ + x * x));
    case MassKind::TanhShift:
      // sech(bx)[7 cosh(bx) + sinh(bx)] = 7 + tanh(bx);
      // cosh(2bx) - sinh(2bx) = exp(-2bx)
      return -(b_ * b_ / 32.0) * (7.0 + std::tanh(b_ * x)) * std::exp(-2.0 * b_ * x);
    default:
      throw NotApplicableError("no printed closed form of V_m for " + to_string(kind_));
  }
}

std::vector<double> vm_stationary_points(double b) {
  if (!(b > 0.0)) throw InvalidParameterError("rational_square requires b > 0");
  if (b == 1.0) throw DegenerateParameterError("V_m vanishes identically at b = 1");
  const double S = std::sqrt((2.0 * b * b - 2.0 * b + 3.0) / 3.0);
  const double outer = std::sqrt(b - 1.0 + S);
  std::vector<double> pts;
  if (b > 4.0) {
    const double inner = std::sqrt(b - 1.0 - S);
    pts = {-outer, -inner, 0.0, inner, outer};
  } else {
    pts = {-outer, 0.0, outer};
  }
  return pts;
}

}  // namespace pdm
