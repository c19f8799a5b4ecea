#pragma once

#include <functional>
#include <vector>

#include "pdm/mass_profile.hpp"

namespace pdm {

/// Uniform grid of N interior points; Dirichlet values sit at x_lo and x_hi.
struct GridSpec {
  double x_lo;
  double x_hi;
  int n_interior;

  double h() const { return (x_hi - x_lo) / (n_interior + 1); }
  double x(int i) const { return x_lo + (i + 1) * h(); }  // i in [0, N)
};

/// Symmetric tridiagonal operator from the flux-form discretization of
/// H = -1/2 d/dx (1/m) d/dx + V.
struct TridiagonalOperator {
  std::vector<double> diag;     // N entries
  std::vector<double> offdiag;  // N-1 entries
  double h = 0.0;

  int size() const { return static_cast<int>(diag.size()); }
  /// y = H x
  void apply(const std::vector<double>& x, std::vector<double>& y) const;
};

TridiagonalOperator discretize(const MassProfile& profile,
                               const std::function<double(double)>& potential,
                               const GridSpec& grid);

struct EigenPair {
  double value;
  std::vector<double> vector;  // normalized with weight h
};

/// k smallest eigenpairs by Sturm-sequence bisection plus inverse iteration.
std::vector<EigenPair> eigen_lowest(const TridiagonalOperator& op, int k);

/// Number of eigenvalues strictly below x (Sturm count).
int sturm_count(const TridiagonalOperator& op, double x);

/// ||H psi - E psi||_2 / ||psi||_2 on the operator grid.
double residual_norm(const TridiagonalOperator& op,
                     const std::vector<double>& psi_samples, double E);

/// Interior sign changes, ignoring samples below 1e-12 of the peak.
int node_count(const std::vector<double>& psi_samples);

/// Gram matrix with weight h.
std::vector<std::vector<double>> orthogonality_matrix(
    const std::vector<std::vector<double>>& psis, double h);

/// log2(r_h / r_{h/2})
double convergence_order(double r_h, double r_half);

}  // namespace pdm
