#include "metric.hpp"

#include <cmath>

#include "numdiff.hpp"

namespace kepot {

double HermitianForm::hermitian_defect() const {
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

HermitianForm metric_siegel(const CPoint& p) {
  require_inside(p);
  const CVector& w = p.coords;
  const int n = p.dim();
  const double r = rho0(w);
  CVector drho(n);  // holomorphic partials of rho0
  for (int k = 0; k < n - 1; ++k) drho(k) = -std::conj(w(k));
  drho(n - 1) = 0.5;
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex v = drho(i) * std::conj(drho(j)) / (r * r);
      if (i == j && i < n - 1) v += 1.0 / r;
      g(i, j) = double(n + 1) * v;
    }
  return {g, p, FormKind::Metric};
}

HermitianForm inverse_metric_siegel(const CPoint& p) {
  require_inside(p);
  const CVector& w = p.coords;
  const int n = p.dim();
  const double r = rho0(w);
  CMatrix k = CMatrix::Zero(n, n);
  for (int i = 0; i < n - 1; ++i) {
    k(i, i) = 1.0;
    k(i, n - 1) = 2.0 * w(i);
    k(n - 1, i) = 2.0 * std::conj(w(i));
  }
  k(n - 1, n - 1) = 4.0 * w(n - 1).real();
  k *= r / double(n + 1);
  return {k, p, FormKind::InverseMetric};
}

HermitianForm metric_ball(const CPoint& p) {
  require_inside(p);
  const CVector& z = p.coords;
  const int n = p.dim();
  const double a = 1.0 - z.squaredNorm();
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex v = std::conj(z(i)) * z(j) / (a * a);
      if (i == j) v += 1.0 / a;
      g(i, j) = double(n + 1) * v;
    }
  return {g, p, FormKind::Metric};
}

HermitianForm inverse_metric_ball(const CPoint& p) {
  require_inside(p);
  const CVector& z = p.coords;
  const int n = p.dim();
  const double a = 1.0 - z.squaredNorm();
  CMatrix k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex v = -z(i) * std::conj(z(j));
      if (i == j) v += 1.0;
      k(i, j) = a / double(n + 1) * v;
    }
  return {k, p, FormKind::InverseMetric};
}

HermitianForm metric_at(const CPoint& p) {
  return p.model == Model::Siegel ? metric_siegel(p) : metric_ball(p);
}

HermitianForm inverse_metric_at(const CPoint& p) {
  return p.model == Model::Siegel ? inverse_metric_siegel(p)
                                  : inverse_metric_ball(p);
}

double norm_sq_form(const CVector& a, const CPoint& p) {
  const HermitianForm k = inverse_metric_at(p);
  const Complex s = (a.transpose() * k.entries * a.conjugate()).value();
  return s.real();
}

CMatrix pullback_form(const CMatrix& g_at_image, const CMatrix& jacobian) {
  return jacobian.transpose() * g_at_image * jacobian.conjugate();
}

double einstein_residual(const CPoint& p) {
  require_inside(p);
  const Model model = p.model;
  auto logdet = [model](const CVector& u) {
    const HermitianForm g = metric_at({u, model});
    return std::log(g.entries.determinant().real());
  };
  const CMatrix hess = fd_hessian_mixed(logdet, p.coords);
  const CMatrix g = metric_at(p).entries;
  return (hess - g).cwiseAbs().maxCoeff();
}

double isometry_det_identity(const HoloMap& g, const CPoint& z) {
  require_inside(z);
  const CVector image = g.apply(z.coords);
  const CMatrix jac = g.jacobian(z.coords);
  const double det_target =
      metric_at({image, g.target}).entries.determinant().real();
  const double jac_factor = std::norm(jac.determinant());
  const double lhs = det_target * jac_factor;
  const double rhs = metric_ball({z.coords, Model::Ball})
                         .entries.determinant()
                         .real();
  return std::abs(lhs - rhs) / std::abs(rhs);
}

}  // namespace kepot
