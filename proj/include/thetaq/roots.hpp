#pragma once

#include <span>
#include <vector>

#include "thetaq/projective.hpp"

namespace thetaq {

struct RootCluster {
  Complex value;
  int multiplicity = 1;
};

/// Roots of sum c_k t^k via companion eigenvalues, Newton polish and
/// single-linkage clustering at radius tol * max(1, |r|). Leading
/// coefficients below 1e-14 |c| are dropped. Sorted by (re, im).
std::vector<RootCluster> univariate_roots(std::span<const Complex> coeffs, double tol = 1e-6);

Complex eval_poly(std::span<const Complex> coeffs, Complex t);

}  // namespace thetaq
