#include "pdm/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdm/errors.hpp"

namespace pdm {

void TridiagonalOperator::apply(const std::vector<double>& x,
                                std::vector<double>& y) const {
  const int n = size();
  y.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double v = diag[i] * x[i];
    if (i > 0) v += offdiag[i - 1] * x[i - 1];
    if (i + 1 < n) v += offdiag[i] * x[i + 1];
    y[i] = v;
  }
}

TridiagonalOperator discretize(const MassProfile& profile,
                               const std::function<double(double)>& potential,
                               const GridSpec& grid) {
  if (grid.n_interior < 16) throw InvalidParameterError("grid needs at least 16 interior points");
  if (!(grid.x_hi > grid.x_lo)) throw InvalidParameterError("grid interval is empty");
  const int n = grid.n_interior;
  const double h = grid.h();
  TridiagonalOperator op;
  op.h = h;
  op.diag.resize(n);
  op.offdiag.resize(n - 1);
  // inverse mass at half-grid points, w[i] = 1/m(x_lo + (i+1/2) h), i in [0, n]
  std::vector<double> w(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double xm = grid.x_lo + (i + 0.5) * h;
    const double m = profile.eval(xm).m;
    if (!(m > 0.0) || !std::isfinite(m)) {
      throw InvalidProfileError("mass must be positive and finite at half-grid points");
    }
    w[i] = 1.0 / m;
  }
  const double inv_h2 = 1.0 / (h * h);
  for (int i = 0; i < n; ++i) {
    const double v = potential(grid.x(i));
    if (!std::isfinite(v)) {
      throw SingularityError("potential singular at a grid point; shift the grid by h/2");
    }
    op.diag[i] = 0.5 * (w[i] + w[i + 1]) * inv_h2 + v;
    if (i + 1 < n) op.offdiag[i] = -0.5 * w[i + 1] * inv_h2;
  }
  return op;
}

int sturm_count(const TridiagonalOperator& op, double x) {
  // Count of pivots < 0 in the LDL^T factorization of (A - x I).
  const int n = op.size();
  int count = 0;
  double d = op.diag[0] - x;
  if (d < 0) ++count;
  const double tiny = 1e-300;
  for (int i = 1; i < n; ++i) {
    if (std::abs(d) < tiny) d = (d < 0 ? -tiny : tiny);
    d = (op.diag[i] - x) - op.offdiag[i - 1] * op.offdiag[i - 1] / d;
    if (d < 0) ++count;
  }
  return count;
}

namespace {

double bisect_eigenvalue(const TridiagonalOperator& op, int index, double lo, double hi) {
  // smallest x with sturm_count(x) >= index+1
  for (int it = 0; it < 120; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (sturm_count(op, mid) >= index + 1) hi = mid; else lo = mid;
    if (hi - lo <= 1e-12 * (1.0 + std::abs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

/// Solve (A - sigma I) x = b in place by the Thomas algorithm with partial
/// stabilization through tiny-pivot clamping.
void shifted_solve(const TridiagonalOperator& op, double sigma, std::vector<double>& x) {
  const int n = op.size();
  std::vector<double> c(n), d(n);
  double piv = op.diag[0] - sigma;
  if (std::abs(piv) < 1e-12) piv = piv < 0 ? -1e-12 : 1e-12;
  c[0] = (n > 1) ? op.offdiag[0] / piv : 0.0;
  d[0] = x[0] / piv;
  for (int i = 1; i < n; ++i) {
    piv = (op.diag[i] - sigma) - op.offdiag[i - 1] * c[i - 1];
    if (std::abs(piv) < 1e-12) piv = piv < 0 ? -1e-12 : 1e-12;
    if (i + 1 < n) c[i] = op.offdiag[i] / piv;
    d[i] = (x[i] - op.offdiag[i - 1] * d[i - 1]) / piv;
  }
  x[n - 1] = d[n - 1];
  for (int i = n - 2; i >= 0; --i) x[i] = d[i] - c[i] * x[i + 1];
}

}  // namespace

std::vector<EigenPair> eigen_lowest(const TridiagonalOperator& op, int k) {
  const int n = op.size();
  if (k < 1 || k > n) throw InvalidParameterError("eigen_lowest: k out of range");
  // Gershgorin bounds.
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(op.offdiag[i - 1]);
    if (i + 1 < n) r += std::abs(op.offdiag[i]);
    lo = std::min(lo, op.diag[i] - r);
    hi = std::max(hi, op.diag[i] + r);
  }
  std::vector<EigenPair> out;
  out.reserve(k);
  for (int idx = 0; idx < k; ++idx) {
    const double ev = bisect_eigenvalue(op, idx, lo, hi);
    // Inverse iteration from a deterministic seed.
    std::vector<double> v(n);
    unsigned state = 0x9e3779b9u + 97u * idx;
    for (int i = 0; i < n; ++i) {
      state = state * 1664525u + 1013904223u;
      v[i] = (state >> 8) / double(1u << 24) - 0.5;
    }
    const double shift = ev + 1e-11 * (1.0 + std::abs(ev));
    bool converged = false;
    std::vector<double> prev;
    for (int step = 0; step < 50; ++step) {
      shifted_solve(op, shift, v);
      // Re-orthogonalize against previously found vectors (guards clusters).
      for (const auto& p : out) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += v[i] * p.vector[i];
        dot *= op.h;
        for (int i = 0; i < n; ++i) v[i] -= dot * p.vector[i];
      }
      double nrm = 0.0;
      for (double t : v) nrm += t * t;
      nrm = std::sqrt(nrm * op.h);
      if (!(nrm > 0.0) || !std::isfinite(nrm)) break;
      for (double& t : v) t /= nrm;
      if (!prev.empty()) {
        double diff = 0.0, diff2 = 0.0;
        for (int i = 0; i < n; ++i) {
          diff = std::max(diff, std::abs(v[i] - prev[i]));
          diff2 = std::max(diff2, std::abs(v[i] + prev[i]));
        }
        if (std::min(diff, diff2) < 1e-10) {
          converged = true;
          break;
        }
      }
      prev = v;
    }
    if (!converged) {
      throw NumericError("inverse iteration did not converge for eigenvalue index " +
                         std::to_string(idx) + " near " + std::to_string(ev));
    }
    out.push_back({ev, std::move(v)});
  }
  return out;
}

double residual_norm(const TridiagonalOperator& op,
                     const std::vector<double>& psi_samples, double E) {
  if (static_cast<int>(psi_samples.size()) != op.size()) {
    throw InvalidParameterError("residual_norm: sample count does not match the grid");
  }
  double norm = 0.0;
  for (double v : psi_samples) norm += v * v;
  if (!(norm > 0.0)) throw InvalidParameterError("residual_norm: zero vector");
  std::vector<double> hy;
  op.apply(psi_samples, hy);
  double res = 0.0;
  for (int i = 0; i < op.size(); ++i) {
    const double r = hy[i] - E * psi_samples[i];
    res += r * r;
  }
  return std::sqrt(res / norm);
}

int node_count(const std::vector<double>& psi_samples) {
  if (psi_samples.size() < 2) throw InvalidParameterError("node_count needs >= 2 samples");
  double mx = 0.0;
  for (double v : psi_samples) mx = std::max(mx, std::abs(v));
  const double floor_ = 1e-12 * mx;
  int nodes = 0;
  int last = 0;
  for (double v : psi_samples) {
    if (std::abs(v) <= floor_) continue;
    const int s = v > 0 ? 1 : -1;
    if (last != 0 && s != last) ++nodes;
    last = s;
  }
  return nodes;
}

std::vector<std::vector<double>> orthogonality_matrix(
    const std::vector<std::vector<double>>& psis, double h) {
  const size_t k = psis.size();
  std::vector<std::vector<double>> gram(k, std::vector<double>(k, 0.0));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i; j < k; ++j) {
      double dot = 0.0;
      for (size_t t = 0; t < psis[i].size(); ++t) dot += psis[i][t] * psis[j][t];
      gram[i][j] = gram[j][i] = dot * h;
    }
  }
  return gram;
}

double convergence_order(double r_h, double r_half) {
  if (!(r_h > 0.0) || !(r_half > 0.0)) throw InvalidParameterError("residuals must be positive");
  return std::log2(r_h / r_half);
}

}  // namespace pdm
