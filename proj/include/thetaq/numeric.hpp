#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

#include <Eigen/Core>

namespace thetaq {

using VectorXc = Eigen::VectorXcd;
using MatrixXc = Eigen::MatrixXcd;
using ResidualFn = std::function<VectorXc(const VectorXc&)>;

struct NewtonOptions {
  int max_iterations = 40;
  double step_tolerance = 1e-15;
  double residual_tolerance = 0.0;
  double fd_step = 1e-7;
  int max_backtracks = 10;
};

struct NewtonResult {
  VectorXc z;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Central-difference Jacobian of a holomorphic residual.
MatrixXc numerical_jacobian(const ResidualFn& f, const VectorXc& z, double h);

/// Damped Gauss-Newton with finite-difference Jacobian; a step is accepted
/// only if it does not increase the residual norm.
NewtonResult gauss_newton(const ResidualFn& f, VectorXc z0, const NewtonOptions& opt = {});

/// Minimum-cost perfect matching of a square cost matrix (Hungarian method).
/// Entries may be +inf for forbidden pairs. Returns the column of each row,
/// or an empty vector if no finite assignment exists.
std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost);

/// Coefficients c_k with sum_k c_k w^(jk) = values[j], w = exp(2 pi i / N).
std::vector<std::complex<double>> interpolate_unit_circle(
    const std::vector<std::complex<double>>& values);
std::complex<double> root_of_unity(int j, int n);

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results must go to
/// per-index slots; the first exception by index is rethrown.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace thetaq
