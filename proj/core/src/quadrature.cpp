#include "pdm/quadrature.hpp"

#include <cmath>

#include "pdm/errors.hpp"

namespace pdm {
namespace {

struct Simpson {
  const std::function<double(double)>& f;
  int max_depth;

  double recurse(double a, double b, double fa, double fm, double fb,
                 double whole, double tol, int depth) const {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth >= max_depth) {
      if (depth >= max_depth && std::abs(delta) > 15.0 * tol) {
        throw NumericError("adaptive quadrature failed to converge");
      }
      return left + right + delta / 15.0;
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  if (a == b) return 0.0;
  Simpson s{f, 48};
  // Split into a few panels first so narrow features are not missed.
  const int panels = 8;
  double total = 0.0;
  const double w = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double pa = a + p * w;
    const double pb = pa + w;
    const double fa = f(pa), fb = f(pb), fm = f(0.5 * (pa + pb));
    const double whole = (pb - pa) / 6.0 * (fa + 4.0 * fm + fb);
    total += s.recurse(pa, pb, fa, fm, fb, whole, abs_tol / panels, 0);
  }
  return total;
}

}  // namespace pdm
