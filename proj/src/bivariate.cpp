#include "thetaq/bivariate.hpp"

#include <algorithm>
#include <cmath>

#include "thetaq/binary_form.hpp"
#include "thetaq/error.hpp"
#include "thetaq/numeric.hpp"
#include "thetaq/random.hpp"
#include "thetaq/roots.hpp"
#include "thetaq/ternary_form.hpp"

namespace thetaq {

Bivariate::Bivariate(Eigen::MatrixXcd c) : c_(std::move(c)) {
  if (c_.size() == 0) c_ = Eigen::MatrixXcd::Zero(1, 1);
}

Bivariate Bivariate::from_form(const TernaryForm& f) {
  const int d = f.degree();
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d + 1, d + 1);
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) c(a, b) = f.coefficient(a, b);
  return Bivariate(c);
}

int Bivariate::degree_x() const {
  for (int i = static_cast<int>(c_.rows()) - 1; i > 0; --i)
    if (c_.row(i).cwiseAbs().maxCoeff() > 0.0) return i;
  return 0;
}

int Bivariate::degree_y() const {
  for (int j = static_cast<int>(c_.cols()) - 1; j > 0; --j)
    if (c_.col(j).cwiseAbs().maxCoeff() > 0.0) return j;
  return 0;
}

Complex Bivariate::operator()(Complex x, Complex y) const {
  return eval_poly(in_x(y), x);
}

std::vector<Complex> Bivariate::in_x(Complex y) const {
  const int dx = degree_x();
  std::vector<Complex> out(dx + 1);
  for (int i = 0; i <= dx; ++i) {
    Complex s = 0.0;
    for (Eigen::Index j = c_.cols(); j-- > 0;) s = s * y + c_(i, j);
    out[i] = s;
  }
  return out;
}

std::vector<Complex> Bivariate::in_y(Complex x) const {
  const int dy = degree_y();
  std::vector<Complex> out(dy + 1);
  for (int j = 0; j <= dy; ++j) {
    Complex s = 0.0;
    for (Eigen::Index i = c_.rows(); i-- > 0;) s = s * x + c_(i, j);
    out[j] = s;
  }
  return out;
}

Bivariate Bivariate::operator+(const Bivariate& o) const {
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(std::max(c_.rows(), o.c_.rows()), std::max(c_.cols(), o.c_.cols()));
  r.topLeftCorner(c_.rows(), c_.cols()) += c_;
  r.topLeftCorner(o.c_.rows(), o.c_.cols()) += o.c_;
  return Bivariate(r);
}

Bivariate Bivariate::operator-(const Bivariate& o) const { return *this + o * Complex(-1.0); }

Bivariate Bivariate::operator*(const Bivariate& o) const {
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(c_.rows() + o.c_.rows() - 1, c_.cols() + o.c_.cols() - 1);
  for (Eigen::Index i = 0; i < c_.rows(); ++i)
    for (Eigen::Index j = 0; j < c_.cols(); ++j) {
      if (c_(i, j) == Complex(0.0)) continue;
      r.block(i, j, o.c_.rows(), o.c_.cols()) += c_(i, j) * o.c_;
    }
  return Bivariate(r);
}

Bivariate Bivariate::operator*(Complex s) const { return Bivariate(c_ * s); }

Complex sylvester_resultant(std::span<const Complex> f, std::span<const Complex> g) {
  const int m = static_cast<int>(f.size()) - 1;
  const int n = static_cast<int>(g.size()) - 1;
  if (m == 0) return std::pow(f[0], n);
  if (n == 0) return std::pow(g[0], m);
  return principal_subresultants(f, g)[0];
}

std::vector<Complex> resultant_eliminate(const Bivariate& e1_in, const Bivariate& e2_in, Variable eliminated) {
  Bivariate e1 = eliminated == Variable::x ? e1_in : Bivariate(e1_in.coefficients().transpose());
  Bivariate e2 = eliminated == Variable::x ? e2_in : Bivariate(e2_in.coefficients().transpose());
  const int m = e1.degree_x(), n = e2.degree_x();
  if (m == 0 || n == 0)
    throw Error(ErrorCode::InvalidInput, "both polynomials need positive degree in the eliminated variable");
  auto lead_small = [](const Bivariate& e, int deg) {
    const auto& c = e.coefficients();
    return c.row(deg).norm() <= 1e-14 * c.norm();
  };
  if (lead_small(e1, m) && lead_small(e2, n))
    throw Error(ErrorCode::LeadingCoefficientCollapse, "both leading coefficients vanish; change chart");
  const int bound = m * e2.degree_y() + n * e1.degree_y();
  const int npts = bound + 1;
  std::vector<Complex> vals(npts);
  for (int j = 0; j < npts; ++j) {
    Complex y = root_of_unity(j, npts);
    auto f = e1.in_x(y);
    auto g = e2.in_x(y);
    vals[j] = sylvester_resultant(f, g);
  }
  return interpolate_unit_circle(vals);
}

std::vector<ProjPoint> intersect_curves(const TernaryForm& a, const TernaryForm& b, std::uint64_t seed,
                                        double residual_tol) {
  Rng rng(seed);
  Mat3 u = random_unitary(rng);
  TernaryForm fa = a.compose(u).normalized();
  TernaryForm fb = b.compose(u).normalized();
  Bivariate ba = Bivariate::from_form(fa), bb = Bivariate::from_form(fb);
  auto res = resultant_eliminate(ba, bb, Variable::x);

  auto resid = [&](const VectorXc& z) {
    VectorXc r(2);
    r(0) = ba(z(0), z(1));
    r(1) = bb(z(0), z(1));
    return r;
  };
  struct Cand {
    Vec3 p;
    double r;
  };
  std::vector<Cand> cands;
  for (auto& yr : univariate_roots(res, 1e-12)) {
    for (auto& xr : univariate_roots(ba.in_x(yr.value), 1e-12)) {
      VectorXc z(2);
      z << xr.value, yr.value;
      NewtonOptions opt;
      opt.max_iterations = 60;
      auto sol = gauss_newton(resid, z, opt);
      Vec3 p(sol.z(0), sol.z(1), 1.0);
      double scale = std::pow(p.norm(), std::max(fa.degree(), fb.degree()));
      double r = sol.residual / scale;
      if (r <= residual_tol) cands.push_back({u * p, r});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.r < y.r; });
  std::vector<ProjPoint> out;
  for (auto& c : cands) {
    bool dup = false;
    for (auto& o : out)
      if (projective_distance(o.coords(), c.p) < 1e-7) dup = true;
    if (!dup) out.emplace_back(c.p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace thetaq
