#include "pdm/special_polynomials.hpp"

#include <cmath>

#include "pdm/errors.hpp"

namespace pdm {
namespace {

bool pochhammer_vanishes(ComplexValue base, int count) {
  // Does (base)_k = base (base+1) ... hit zero for some k in [1, count]?
  for (int j = 0; j < count; ++j) {
    if (std::abs(base + ComplexValue(j, 0)) < 1e-14) return true;
  }
  return false;
}

ComplexValue jacobi_series(int n, ComplexValue alpha, ComplexValue beta, ComplexValue w) {
  // ((alpha+1)_n / n!) * sum_k [(-n)_k (n+alpha+beta+1)_k / ((alpha+1)_k k!)] w^k
  ComplexValue pre = 1.0;
  for (int j = 0; j < n; ++j) pre *= (alpha + 1.0 + static_cast<double>(j)) / (j + 1.0);
  ComplexValue sum = 0.0;
  ComplexValue term = 1.0;
  for (int k = 0; k <= n; ++k) {
    sum += term;
    if (k < n) {
      term *= (static_cast<double>(-n + k)) * (alpha + beta + static_cast<double>(n + 1 + k)) /
              ((alpha + 1.0 + static_cast<double>(k)) * (k + 1.0)) * w;
    }
  }
  return pre * sum;
}

}  // namespace

ComplexValue jacobi_eval(int n, ComplexValue alpha, ComplexValue beta, ComplexValue z) {
  if (n < 0) throw InvalidParameterError("jacobi_eval: n must be nonnegative");
  if (n > kMaxPolyDegree) throw PrecisionError("jacobi_eval: degree above precision bound");
  if (n == 0) return 1.0;
  const bool alpha_bad = pochhammer_vanishes(alpha + 1.0, n - 1);
  if (!alpha_bad) {
    return jacobi_series(n, alpha, beta, (1.0 - z) / 2.0);
  }
  const bool beta_bad = pochhammer_vanishes(beta + 1.0, n - 1);
  if (beta_bad) {
    throw DegenerateParameterError("jacobi_eval: both series expansions degenerate");
  }
  // Reflection P_n^{(a,b)}(z) = (-1)^n P_n^{(b,a)}(-z).
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * jacobi_series(n, beta, alpha, (1.0 + z) / 2.0);
}

double hermite_eval(int n, double x) {
  if (n < 0) throw InvalidParameterError("hermite_eval: n must be nonnegative");
  if (n > kMaxPolyDegree) throw PrecisionError("hermite_eval: degree above precision bound");
  double hm = 1.0;
  if (n == 0) return hm;
  double h = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = next;
  }
  return h;
}

double laguerre_eval(int n, double alpha, double x) {
  if (n < 0) throw InvalidParameterError("laguerre_eval: n must be nonnegative");
  if (n > kMaxPolyDegree) throw PrecisionError("laguerre_eval: degree above precision bound");
  const double rounded = std::round(alpha);
  if (rounded <= -1.0 && std::abs(alpha - rounded) < 1e-12) {
    throw InvalidParameterError("laguerre_eval: alpha in {-1, -2, ...} is excluded");
  }
  // term_0 = C(n+alpha, n); term_{k+1}/term_k = -(n-k) x / ((k+1)(alpha+k+1))
  double term = 1.0;
  for (int j = 1; j <= n; ++j) term *= (alpha + j) / j;
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    sum += term;
    if (k < n) term *= -(static_cast<double>(n - k)) * x / ((k + 1.0) * (alpha + k + 1.0));
  }
  return sum;
}

}  // namespace pdm
