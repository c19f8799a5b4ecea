#pragma once

#include "pdm/types.hpp"

namespace pdm {

/// Degree cap keeping double-precision relative error under ~1e-8 for |z| <= 10.
inline constexpr int kMaxPolyDegree = 60;

/// Jacobi polynomial P_n^{(alpha,beta)}(z) by the terminating hypergeometric
/// sum in (1-z)/2; switches to the mirrored sum in (1+z)/2 when the Pochhammer
/// factor (alpha+1)_k vanishes mid-series.
ComplexValue jacobi_eval(int n, ComplexValue alpha, ComplexValue beta, ComplexValue z);

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
double hermite_eval(int n, double x);

/// Generalized Laguerre polynomial L_n^{(alpha)}(x) by the terminating sum;
/// alpha must avoid the excluded values -1, -2, -3, ...
double laguerre_eval(int n, double alpha, double x);

}  // namespace pdm
