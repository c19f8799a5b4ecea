#include "pdm/transform.hpp"

#include <cmath>

#include "family_traits.hpp"
#include "pdm/errors.hpp"

namespace pdm {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr ComplexValue kI{0.0, 1.0};
}  // namespace

double GMap::constant(int n) const {
  switch (kind) {
    case GMapKind::J1_ISINH:
    case GMapKind::J1_COSH:
      return -a * a;
    case GMapKind::J1_COS:
    case GMapKind::J1_SIN:
      return a * a;
    case GMapKind::J2_TANH:
    case GMapKind::J2_COTH:
      return a * a;
    case GMapKind::J2_ICOT:
    case GMapKind::J2_ITAN:
      return -a * a;
    case GMapKind::H_LINEAR:
      return omega;
    case GMapKind::H_SQRT: {
      const double w = 2.0 * omega / (2.0 * n + 1.0);
      return 4.0 * w * w;  // (g')^2 g^2 / m
    }
    case GMapKind::L_QUADRATIC:
      return 4.0 * omega;
    case GMapKind::L_EXP:
      return a * a;
    case GMapKind::L_LINEAR: {
      const double w = omega / (n + l + 1.0);
      return 4.0 * w * w;
    }
  }
  throw Error("unreachable");
}

MuDomain GMap::mu_domain() const {
  using K = MuDomain::Kind;
  switch (kind) {
    case GMapKind::J1_ISINH:
    case GMapKind::J2_TANH:
    case GMapKind::H_LINEAR:
    case GMapKind::L_EXP:
      return {K::FullLine, -kInf, kInf};
    case GMapKind::J1_COSH:
    case GMapKind::J2_COTH:
    case GMapKind::H_SQRT:
    case GMapKind::L_QUADRATIC:
    case GMapKind::L_LINEAR:
      return {K::HalfLine, 0.0, kInf};
    case GMapKind::J1_COS:
    case GMapKind::J2_ICOT:
      return {K::Interval, 0.0, M_PI / a};
    case GMapKind::J1_SIN:
    case GMapKind::J2_ITAN:
      return {K::Interval, -0.5 * M_PI / a, 0.5 * M_PI / a};
  }
  throw Error("unreachable");
}

GDerivs GMap::derivs(double mu, int n) const {
  const auto dom = mu_domain();
  if (!(mu > dom.lo && mu < dom.hi)) {
    throw DomainError("mu outside the map domain");
  }
  switch (kind) {
    case GMapKind::J1_ISINH: {
      const double sh = std::sinh(a * mu), ch = std::cosh(a * mu);
      return {kI * sh, kI * a * ch, kI * a * a * sh, kI * a * a * a * ch};
    }
    case GMapKind::J1_COSH: {
      const double sh = std::sinh(a * mu), ch = std::cosh(a * mu);
      return {ch, a * sh, a * a * ch, a * a * a * sh};
    }
    case GMapKind::J1_COS: {
      const double sn = std::sin(a * mu), cs = std::cos(a * mu);
      return {cs, -a * sn, -a * a * cs, a * a * a * sn};
    }
    case GMapKind::J1_SIN: {
      const double sn = std::sin(a * mu), cs = std::cos(a * mu);
      return {sn, a * cs, -a * a * sn, -a * a * a * cs};
    }
    case GMapKind::J2_TANH: {
      const double t = std::tanh(a * mu), u = 1.0 - t * t;
      return {t, a * u, -2.0 * a * a * t * u, -2.0 * a * a * a * u * (1.0 - 3.0 * t * t)};
    }
    case GMapKind::J2_COTH: {
      const double c = 1.0 / std::tanh(a * mu), u = c * c - 1.0;
      return {c, -a * u, 2.0 * a * a * c * u, -2.0 * a * a * a * u * (3.0 * c * c - 1.0)};
    }
    case GMapKind::J2_ICOT: {
      const double ct = std::cos(a * mu) / std::sin(a * mu), u = 1.0 + ct * ct;
      return {-kI * ct, kI * a * u, -2.0 * kI * a * a * u * ct,
              2.0 * kI * a * a * a * u * (3.0 * ct * ct + 1.0)};
    }
    case GMapKind::J2_ITAN: {
      const double t = std::tan(a * mu), u = 1.0 + t * t;
      return {-kI * t, -kI * a * u, -2.0 * kI * a * a * u * t,
              -2.0 * kI * a * a * a * u * (3.0 * t * t + 1.0)};
    }
    case GMapKind::H_LINEAR: {
      const double r = std::sqrt(omega);
      return {r * mu, r, 0.0, 0.0};
    }
    case GMapKind::H_SQRT: {
      const double k = std::sqrt(4.0 * omega / (2.0 * n + 1.0));
      const double r = std::sqrt(mu);
      return {k * r, 0.5 * k / r, -0.25 * k / (mu * r), 0.375 * k / (mu * mu * r)};
    }
    case GMapKind::L_QUADRATIC:
      return {omega * mu * mu, 2.0 * omega * mu, 2.0 * omega, 0.0};
    case GMapKind::L_EXP: {
      const double g = std::exp(-a * mu);
      return {g, -a * g, a * a * g, -a * a * a * g};
    }
    case GMapKind::L_LINEAR: {
      const double w = omega / (n + l + 1.0);
      return {2.0 * w * mu, 2.0 * w, 0.0, 0.0};
    }
  }
  throw Error("unreachable");
}

double big_g(double z0, double z1, double z2) {
  if (z0 == 0.0) throw SingularityError("big_g: z vanishes");
  const double r = z1 / z0;
  return z2 / z0 - 1.5 * r * r;
}

ComplexValue big_g(ComplexValue z0, ComplexValue z1, ComplexValue z2) {
  if (std::abs(z0) == 0.0) throw SingularityError("big_g: z vanishes");
  const ComplexValue r = z1 / z0;
  return z2 / z0 - 1.5 * r * r;
}

ComplexValue f_transform(FamilyId family, const FamilyParams& params,
                         const MassProfile& profile, int n, double x) {
  return {detail::f_factor(family, params, profile, n, x), 0.0};
}

double rhs_eq12(FamilyId family, const FamilyParams& params,
                const MassProfile& profile, int n, double x) {
  const double mu = profile.mu(x);
  const GMap map = detail::family_gmap(family, params);
  const auto dom = map.mu_domain();
  const double guard = 1e-6;
  if ((std::isfinite(dom.lo) && mu - dom.lo < guard) ||
      (std::isfinite(dom.hi) && dom.hi - mu < guard)) {
    throw SingularityError("rhs_eq12: mu within the grid guard of a singular endpoint");
  }
  const GDerivs gd = map.derivs(mu, n);
  const auto spec = detail::family_poly(family, params, n);

  ComplexValue Q, Qp, R;
  switch (spec.basis) {
    case detail::PolySpec::Basis::Jacobi: {
      const ComplexValue S = spec.alpha + spec.beta;
      const ComplexValue D = spec.beta - spec.alpha;
      const ComplexValue one = 1.0 - gd.g * gd.g;
      Q = (D - (2.0 + S) * gd.g) / one;
      Qp = (2.0 * D * gd.g - (2.0 + S) * (1.0 + gd.g * gd.g)) / (one * one);
      R = static_cast<double>(n) * (1.0 + S + static_cast<double>(n)) / one;
      break;
    }
    case detail::PolySpec::Basis::Hermite:
      Q = -2.0 * gd.g;
      Qp = -2.0;
      R = 2.0 * n;
      break;
    case detail::PolySpec::Basis::Laguerre:
      Q = (spec.lag_alpha + 1.0) / gd.g - 1.0;
      Qp = -(spec.lag_alpha + 1.0) / (gd.g * gd.g);
      R = static_cast<double>(n) / gd.g;
      break;
  }

  const ComplexValue bracket = R - 0.5 * Qp - 0.25 * Q * Q;
  const ComplexValue g_mu = big_g(gd.d1, gd.d2, gd.d3);
  const ComplexValue value = 0.5 * gd.d1 * gd.d1 * bracket + 0.25 * g_mu;
  const double vm = profile.vm(x);
  const double scale = std::max(1.0, std::abs(value));
  if (std::abs(value.imag()) > 1e-9 * scale) {
    throw InternalConsistencyError("rhs_eq12: nonvanishing imaginary part");
  }
  return value.real() - vm;
}

}  // namespace pdm
