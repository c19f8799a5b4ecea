#pragma once

#include <functional>

namespace pdm {

/// Adaptive Simpson integration of f over [a, b] to the given absolute
/// tolerance. Throws NumericError if the recursion limit is exceeded.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

}  // namespace pdm
