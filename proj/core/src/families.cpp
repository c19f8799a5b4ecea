#include "pdm/families.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "family_traits.hpp"
#include "pdm/errors.hpp"
#include "pdm/quadrature.hpp"
#include "pdm/special_polynomials.hpp"

namespace pdm {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDecayThreshold = 1e-10;  // |psi| cutoff for domain truncation
constexpr double kDomainExtension = 1.10;  // stretch past the cutoff point
constexpr double kPotentialWall = 1e5;     // treat V above this as a hard wall

int finite_cap(double s) {
  // largest integer n with n < s
  const int cap = static_cast<int>(std::ceil(s)) - 1;
  return std::min(cap, kMaxPolyDegree);
}
}  // namespace

std::string to_string(FamilyId id) {
  switch (id) {
    case FamilyId::J1_SCARF2: return "J1_SCARF2";
    case FamilyId::J1_GPT: return "J1_GPT";
    case FamilyId::J1_TRIG_CSC: return "J1_TRIG_CSC";
    case FamilyId::J1_TRIG_SEC: return "J1_TRIG_SEC";
    case FamilyId::J2_ROSEN_MORSE: return "J2_ROSEN_MORSE";
    case FamilyId::J2_ECKART: return "J2_ECKART";
    case FamilyId::J2_COT: return "J2_COT";
    case FamilyId::J2_TAN: return "J2_TAN";
    case FamilyId::H_OSC: return "H_OSC";
    case FamilyId::H_SQRT: return "H_SQRT";
    case FamilyId::L_RADIAL_OSC: return "L_RADIAL_OSC";
    case FamilyId::L_MORSE: return "L_MORSE";
    case FamilyId::L_COULOMB: return "L_COULOMB";
  }
  return "?";
}

FamilyId family_from_string(const std::string& name) {
  for (FamilyId id : kAllFamilies) {
    if (to_string(id) == name) return id;
  }
  throw InvalidParameterError("unknown family: " + name);
}

MaxLevel validate_params(FamilyId family, const FamilyParams& p) {
  detail::check_params(family, p);
  const double s = p.s, lam = p.lambda;
  switch (family) {
    case FamilyId::J1_SCARF2:
    case FamilyId::J1_GPT:
      return {false, finite_cap(s)};
    case FamilyId::J1_TRIG_CSC:
    case FamilyId::J1_TRIG_SEC:
    case FamilyId::J2_COT:
    case FamilyId::J2_TAN:
      return {true, kMaxPolyDegree};
    case FamilyId::J2_ROSEN_MORSE: {
      // n < s with the decay condition |lambda|/(s-n) < s-n
      int cap = -1;
      for (int n = 0; n <= kMaxPolyDegree; ++n) {
        const double sig = s - n;
        if (!(sig > 0.0) || !((sig * sig) > std::abs(lam))) break;
        cap = n;
      }
      return {false, cap};
    }
    case FamilyId::J2_ECKART: {
      // exp(-ab a mu) must beat sinh^{s+n}: lambda > (s+n)^2
      int cap = -1;
      for (int n = 0; n <= kMaxPolyDegree; ++n) {
        const double tau = s + n;
        if (!(tau * tau < lam)) break;
        cap = n;
      }
      return {false, cap};
    }
    case FamilyId::H_OSC:
    case FamilyId::H_SQRT:
    case FamilyId::L_RADIAL_OSC:
    case FamilyId::L_COULOMB:
      return {true, kMaxPolyDegree};
    case FamilyId::L_MORSE:
      return {false, finite_cap(s)};
  }
  throw Error("unreachable");
}

MaxLevel validate_params(FamilyId family, const FamilyParams& p,
                         const MassProfile& profile) {
  const MaxLevel base = validate_params(family, p);
  const MuDomain dom = detail::family_mu_domain(family, p);
  const auto [ilo, ihi] = profile.mu_image();
  const bool covered = ilo <= dom.lo && ihi >= dom.hi;
  if (!covered) {
    // The transformation needs the whole mu-domain; a profile whose mu-image
    // stops short realizes none of the printed levels on its x-domain.
    return {false, -1};
  }
  return base;
}

double energy(FamilyId family, const FamilyParams& p, int n) {
  detail::check_params(family, p);
  const MaxLevel lv = validate_params(family, p);
  if (n < 0 || n > lv.value) throw LevelError("level out of bound-state range");
  return detail::energy_closed(family, p, n);
}

XDomain family_x_domain(FamilyId family, const FamilyParams& p,
                        const MassProfile& profile) {
  const MuDomain dom = detail::family_mu_domain(family, p);
  const auto [ilo, ihi] = profile.mu_image();
  const auto [xlo, xhi] = profile.x_domain();
  XDomain out{xlo, xhi, false, false};
  if (std::isfinite(dom.lo) && dom.lo > ilo) {
    out.lo = profile.mu_inverse(dom.lo);
    out.lo_singular = true;
  }
  if (std::isfinite(dom.hi) && dom.hi < ihi) {
    out.hi = profile.mu_inverse(dom.hi);
    out.hi_singular = true;
  }
  return out;
}

double potential_eval(FamilyId family, const FamilyParams& p,
                      const MassProfile& profile, double x) {
  detail::check_params(family, p);
  const double mu = profile.mu(x);
  const MuDomain dom = detail::family_mu_domain(family, p);
  const double span = std::isfinite(dom.hi - dom.lo) ? dom.hi - dom.lo : 1.0;
  const double eps = 1e-12 * span;
  if (std::isfinite(dom.lo)) {
    if (std::abs(mu - dom.lo) <= eps) throw SingularityError("potential singular at this point");
    if (mu < dom.lo) throw DomainError("x outside the family domain");
  }
  if (std::isfinite(dom.hi)) {
    if (std::abs(mu - dom.hi) <= eps) throw SingularityError("potential singular at this point");
    if (mu > dom.hi) throw DomainError("x outside the family domain");
  }
  return detail::potential_mu(family, p, mu) + profile.vm(x);
}

namespace {

ComplexValue eval_poly(const detail::PolySpec& spec, int n, ComplexValue g) {
  switch (spec.basis) {
    case detail::PolySpec::Basis::Jacobi:
      return jacobi_eval(n, spec.alpha, spec.beta, g);
    case detail::PolySpec::Basis::Hermite:
      return hermite_eval(n, g.real());
    case detail::PolySpec::Basis::Laguerre:
      return laguerre_eval(n, spec.lag_alpha, g.real());
  }
  throw Error("unreachable");
}

ComplexValue raw_value(FamilyId family, const FamilyParams& p,
                       const MassProfile& profile, int n, double x) {
  const double f = detail::f_factor(family, p, profile, n, x);
  const GMap map = detail::family_gmap(family, p);
  const ComplexValue g = map.derivs(profile.mu(x), n).g;
  const auto spec = detail::family_poly(family, p, n);
  ComplexValue F = eval_poly(spec, n, g);
  // canonical phase i^{-kn}
  const int k = detail::canonical_quarter_turns(family);
  if (k != 0) {
    static const ComplexValue quarter[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    F *= quarter[(k * n) % 4];
  }
  return f * F;
}

}  // namespace

SpectralSolution::SpectralSolution(FamilyId family, const FamilyParams& params,
                                   const MassProfile& profile, int n)
    : family_(family), params_(params), profile_(profile), n_(n) {
  const MaxLevel lv = validate_params(family, params, profile);
  if (n < 0 || n > lv.value) {
    throw LevelError("level " + std::to_string(n) + " is not a realizable bound state");
  }
  energy_ = detail::energy_closed(family, params, n);

  // Decay-truncated domain.
  const XDomain xd = family_x_domain(family, params, profile);
  auto amp = [&](double x) { return std::abs(raw_value(family_, params_, profile_, n_, x)); };
  auto tail_below = [&](double lo, double hi, bool left_tail) {
    const int pts = 1601;
    const int w = pts / 50;
    double mx = 0.0;
    std::vector<double> v(pts);
    for (int i = 0; i < pts; ++i) {
      const double x = lo + (hi - lo) * i / (pts - 1.0);
      v[i] = amp(x);
      mx = std::max(mx, v[i]);
    }
    double tail = 0.0;
    for (int i = 0; i < w; ++i) tail = std::max(tail, left_tail ? v[i] : v[pts - 1 - i]);
    return tail < kDecayThreshold * mx;
  };

  double lo, hi;
  if (std::isfinite(xd.lo) && std::isfinite(xd.hi)) {
    lo = xd.lo;
    hi = xd.hi;
  } else if (std::isfinite(xd.lo)) {
    const double x0 = xd.lo;
    double reach = 2.0;
    auto inset = [&](double r) { return x0 + r * 1e-5; };
    while (!tail_below(inset(reach), x0 + reach, false)) {
      reach *= 1.25;
      if (reach > 1e6) throw NumericError("eigenfunction does not decay (domain scan)");
    }
    double a_ = reach / 1.25, b_ = reach;
    for (int it = 0; it < 40; ++it) {
      const double mid = 0.5 * (a_ + b_);
      if (tail_below(inset(mid), x0 + mid, false)) b_ = mid; else a_ = mid;
    }
    lo = x0;
    hi = x0 + b_ * kDomainExtension;
  } else {
    double left = -2.0, right = 2.0;
    auto wall = [&](double x) {
      const double v = detail::potential_mu(family_, params_, profile_.mu(x)) + profile_.vm(x);
      return v > kPotentialWall;
    };
    bool okl = false, okr = false;
    while (!(okl && okr)) {
      okl = tail_below(left, right, true) || wall(left);
      okr = tail_below(left, right, false) || wall(right);
      if (!okl) left *= 1.25;
      if (!okr) right *= 1.25;
      if (right > 1e6 || left < -1e6) throw NumericError("eigenfunction does not decay (domain scan)");
    }
    // tighten each side over the last coarse step
    double a_ = left / 1.25, b_ = left;
    if (!wall(left)) {
      for (int it = 0; it < 40; ++it) {
        const double mid = 0.5 * (a_ + b_);
        if (tail_below(mid, right, true)) b_ = mid; else a_ = mid;
      }
      left = b_;
    }
    a_ = right / 1.25, b_ = right;
    if (!wall(right)) {
      for (int it = 0; it < 40; ++it) {
        const double mid = 0.5 * (a_ + b_);
        if (tail_below(left, mid, false)) b_ = mid; else a_ = mid;
      }
      right = b_;
    }
    const double L = right - left;
    lo = left - 0.5 * (kDomainExtension - 1.0) * L;
    hi = right + 0.5 * (kDomainExtension - 1.0) * L;
  }
  domain_ = {lo, hi};

  // Sampling pass: scale, imaginary-part check, sign convention.
  const int pts = 4001;
  const double inset = (hi - lo) * 1e-9;
  std::vector<double> re(pts);
  double max_abs = 0.0, max_im = 0.0;
  for (int i = 0; i < pts; ++i) {
    const double x = (lo + inset) + (hi - lo - 2 * inset) * i / (pts - 1.0);
    const ComplexValue w = raw_value(family_, params_, profile_, n_, x);
    re[i] = w.real();
    max_abs = std::max(max_abs, std::abs(w));
    max_im = std::max(max_im, std::abs(w.imag()));
  }
  if (max_abs == 0.0 || !std::isfinite(max_abs)) {
    throw NumericError("eigenfunction sampling produced no finite amplitude");
  }
  imag_ratio_ = max_im / max_abs;
  if (imag_ratio_ > 1e-8) {
    throw InternalConsistencyError("eigenfunction has a nonvanishing imaginary part");
  }
  scale_ = max_abs;

  // Sign: make the first local extremum from the left edge positive.
  sign_ = 1.0;
  for (int i = 1; i + 1 < pts; ++i) {
    const double v = std::abs(re[i]);
    if (v >= std::abs(re[i - 1]) && v >= std::abs(re[i + 1]) && v > 1e-6 * max_abs) {
      sign_ = re[i] >= 0.0 ? 1.0 : -1.0;
      break;
    }
  }

  // Normalization on the scaled amplitude.
  auto f2 = [&](double x) {
    const double v = raw_value(family_, params_, profile_, n_, x).real() / scale_;
    return v * v;
  };
  const double integral = integrate(f2, lo + inset, hi - inset, 1e-10);
  if (!(integral > 0.0)) throw NumericError("normalization integral vanished");
  norm_ = scale_ * std::sqrt(integral);
}

ComplexValue SpectralSolution::psi_raw(double x) const {
  return raw_value(family_, params_, profile_, n_, x);
}

double SpectralSolution::psi(double x) const {
  return sign_ * psi_raw(x).real() / norm_;
}

double eigenfunction_eval(FamilyId family, const FamilyParams& params,
                          const MassProfile& profile, int n, double x) {
  return SpectralSolution(family, params, profile, n).psi(x);
}

}  // namespace pdm
