#include "thetaq/roots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace thetaq {

Complex eval_poly(std::span<const Complex> c, Complex t) {
  Complex s = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) s = s * t + c[k];
  return s;
}

namespace {

Complex eval_derivative(std::span<const Complex> c, Complex t) {
  Complex s = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) s = s * t + c[k] * static_cast<double>(k);
  return s;
}

}  // namespace

std::vector<RootCluster> univariate_roots(std::span<const Complex> coeffs, double tol) {
  double scale = 0.0;
  for (auto& c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return {};
  std::size_t n = coeffs.size();
  while (n > 0 && std::abs(coeffs[n - 1]) <= 1e-14 * scale) --n;
  if (n <= 1) return {};
  std::span<const Complex> c = coeffs.first(n);
  const int d = static_cast<int>(n) - 1;

  std::vector<Complex> raw;
  if (d == 1) {
    raw.push_back(-c[0] / c[1]);
  } else {
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[i] / c[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    for (int i = 0; i < d; ++i) raw.push_back(es.eigenvalues()(i));
  }
  for (auto& r : raw) {
    for (int it = 0; it < 4; ++it) {
      Complex p = eval_poly(c, r), dp = eval_derivative(c, r);
      if (dp == Complex(0.0)) break;
      Complex rn = r - p / dp;
      if (!(std::abs(eval_poly(c, rn)) < std::abs(p))) break;
      r = rn;
    }
  }

  // single-linkage clustering
  const std::size_t m = raw.size();
  std::vector<int> label(m, -1);
  int nl = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (label[i] >= 0) continue;
    label[i] = nl;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < m; ++b) {
        if (label[b] >= 0) continue;
        double rad = tol * std::max({1.0, std::abs(raw[a]), std::abs(raw[b])});
        if (std::abs(raw[a] - raw[b]) <= rad) {
          label[b] = nl;
          stack.push_back(b);
        }
      }
    }
    ++nl;
  }
  std::vector<RootCluster> out(nl, RootCluster{0.0, 0});
  for (std::size_t i = 0; i < m; ++i) {
    out[label[i]].value += raw[i];
    out[label[i]].multiplicity += 1;
  }
  for (auto& rc : out) rc.value /= static_cast<double>(rc.multiplicity);
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace thetaq
