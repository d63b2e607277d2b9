#include "thetaq/numeric.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/QR>

namespace thetaq {

MatrixXc numerical_jacobian(const ResidualFn& f, const VectorXc& z, double h) {
  VectorXc f0 = f(z);
  MatrixXc j(f0.size(), z.size());
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    double hk = h * std::max(1.0, std::abs(z(k)));
    VectorXc zp = z, zm = z;
    zp(k) += hk;
    zm(k) -= hk;
    j.col(k) = (f(zp) - f(zm)) / (2.0 * hk);
  }
  return j;
}

NewtonResult gauss_newton(const ResidualFn& f, VectorXc z, const NewtonOptions& opt) {
  NewtonResult out;
  VectorXc r = f(z);
  double rn = r.norm();
  for (int it = 0; it < opt.max_iterations; ++it) {
    out.iterations = it + 1;
    if (!std::isfinite(rn)) break;
    if (rn <= opt.residual_tolerance) {
      out.converged = true;
      break;
    }
    MatrixXc j = numerical_jacobian(f, z, opt.fd_step);
    VectorXc dz = j.completeOrthogonalDecomposition().solve(-r);
    if (!dz.allFinite()) break;
    double scale = 1.0;
    bool accepted = false;
    VectorXc zn, rnew;
    double rnn = 0.0;
    for (int b = 0; b <= opt.max_backtracks; ++b) {
      zn = z + scale * dz;
      rnew = f(zn);
      rnn = rnew.norm();
      if (std::isfinite(rnn) && rnn <= rn) {
        accepted = true;
        break;
      }
      scale *= 0.5;
    }
    if (!accepted) {
      // no descent possible: we are at the noise floor
      out.converged = rn <= std::max(opt.residual_tolerance, 1e-10);
      break;
    }
    double step = scale * dz.norm();
    z = zn;
    r = rnew;
    rn = rnn;
    if (step <= opt.step_tolerance * (1.0 + z.norm())) {
      out.converged = true;
      break;
    }
  }
  out.z = z;
  out.residual = rn;
  if (rn <= opt.residual_tolerance) out.converged = true;
  return out;
}

std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost) {
  const int n = static_cast<int>(cost.rows());
  if (n == 0) return {};
  const double inf = std::numeric_limits<double>::infinity();
  // replace forbidden entries by a large finite value, then reject at the end
  double big = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::isfinite(cost(i, j))) big = std::max(big, std::abs(cost(i, j)));
  big = big * (n + 1) * 10.0;
  auto c = [&](int i, int j) { return std::isfinite(cost(i, j)) ? cost(i, j) : big; };

  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = c(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> assign(n, -1);
  for (int j = 1; j <= n; ++j) assign[p[j] - 1] = j - 1;
  for (int i = 0; i < n; ++i)
    if (!std::isfinite(cost(i, assign[i]))) return {};
  return assign;
}

std::complex<double> root_of_unity(int j, int n) {
  double a = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
  return {std::cos(a), std::sin(a)};
}

std::vector<std::complex<double>> interpolate_unit_circle(
    const std::vector<std::complex<double>>& values) {
  const int n = static_cast<int>(values.size());
  std::vector<std::complex<double>> c(n);
  for (int k = 0; k < n; ++k) {
    std::complex<double> s = 0.0;
    for (int j = 0; j < n; ++j) s += values[j] * std::conj(root_of_unity((j * k) % n, n));
    c[k] = s / static_cast<double>(n);
  }
  return c;
}

}  // namespace thetaq
