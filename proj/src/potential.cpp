#include "potential.hpp"

#include <cmath>
#include <sstream>

#include "metric.hpp"
#include "numdiff.hpp"
#include "sampling.hpp"

namespace kepot {

namespace {

void check_config(const Potential& p) {
  if (p.n < 1) {
    throw Error(Err::InvalidConfig, "potential dimension must be at least 1");
  }
  if (!(p.kappa > 0.0)) {
    throw Error(Err::InvalidConfig, "kappa must be positive");
  }
  if (p.pre.dim() != p.n) {
    throw Error(Err::InvalidConfig,
                "precomposed automorphism dimension does not match potential");
  }
  if (!p.f.empty() && p.f.nvars != p.n) {
    throw Error(Err::InvalidConfig,
                "correction polynomial has the wrong number of variables");
  }
}

void check_point(const Potential& p, const CPoint& w) {
  if (w.model != p.base || w.dim() != p.n) {
    throw Error(Err::InvalidConfig,
                "point model or dimension does not match the potential");
  }
  require_inside(w);
}

// Image of a point under the inner map (Cayley for ball bases, then the
// precomposed automorphism), without the Jacobian.
CVector inside_point(const Potential& p, const CVector& w) {
  if (p.base == Model::Ball) {
    return p.pre.apply(cayley(w));
  }
  return p.pre.apply(w);
}

struct Chain {
  CVector u;
  CMatrix j;
};

Chain inside_chain(const Potential& p, const CVector& w) {
  if (p.base == Model::Ball) {
    CVector u0 = cayley(w);
    return {p.pre.apply(u0), p.pre.jacobian(u0) * cayley_jacobian(w)};
  }
  return {p.pre.apply(w), p.pre.jacobian(w)};
}

double rho_inside(const CVector& u) {
  double r = rho0(u);
  if (!(r > 0.0)) {
    throw Error(Err::OutsideDomain,
                "image point left the Siegel domain inside a potential");
  }
  return r;
}

// Holomorphic partials of log psi0 at a Siegel point with rho0 = r.
CVector grad_log_psi0(const CVector& u, double r) {
  const int n = static_cast<int>(u.size());
  CVector g(n);
  for (int k = 0; k + 1 < n; ++k) {
    g(k) = static_cast<double>(n + 1) * std::conj(u(k)) / r;
  }
  g(n - 1) = -static_cast<double>(n + 1) / (2.0 * r);
  return g;
}

}  // namespace

Potential Potential::psi0(int n) {
  Potential p;
  p.base = Model::Siegel;
  p.n = n;
  p.pre = Automorphism::identity(n);
  p.f = HoloPoly::zero(n);
  check_config(p);
  return p;
}

Potential Potential::phi0(int n) {
  Potential p = psi0(n);
  p.base = Model::Ball;
  return p;
}

Potential Potential::with_pre(const Automorphism& a) const {
  Potential p = *this;
  p.pre = a;
  check_config(p);
  return p;
}

Potential Potential::with_correction(const HoloPoly& poly) const {
  Potential p = *this;
  p.f = poly;
  check_config(p);
  return p;
}

Potential Potential::with_scale(double r) const {
  if (!(r > 0.0)) {
    throw Error(Err::InvalidConfig, "scale factor must be positive");
  }
  Potential p = *this;
  p.log_scale = std::log(r);
  return p;
}

Potential Potential::with_kappa(double kappa) const {
  Potential p = *this;
  p.kappa = kappa;
  check_config(p);
  return p;
}

double eval_log(const Potential& p, const CPoint& w) {
  check_config(p);
  check_point(p, w);
  CVector u = inside_point(p, w.coords);
  double r = rho_inside(u);
  double val = -static_cast<double>(p.n + 1) * std::log(r) +
               2.0 * p.f.eval(w.coords).real() + p.log_scale;
  return val / p.kappa;
}

CVector grad_holo(const Potential& p, const CPoint& w) {
  check_config(p);
  check_point(p, w);
  Chain c = inside_chain(p, w.coords);
  double r = rho_inside(c.u);
  CVector g = c.j.transpose() * grad_log_psi0(c.u, r);
  if (!p.f.empty()) {
    g += p.f.grad(w.coords);
  }
  return g / p.kappa;
}

double diff_norm_sq(const Potential& p, const CPoint& w) {
  return p.kappa * norm_sq_form(grad_holo(p, w), w);
}

double constant_norm_residual(const HoloPoly& f, const CPoint& w) {
  if (w.model != Model::Siegel) {
    throw Error(Err::InvalidConfig,
                "the constant-norm residual is defined on the Siegel domain");
  }
  if (f.nvars != w.dim()) {
    throw Error(Err::InvalidConfig,
                "correction polynomial has the wrong number of variables");
  }
  require_inside(w);
  const int n = w.dim();
  CVector df = f.grad(w.coords);
  return -4.0 * rho0(w.coords) * df(n - 1).real() + norm_sq_form(df, w);
}

CVector gradient_field(const Potential& p, const CPoint& w) {
  CVector a = grad_holo(p, w);
  return inverse_metric_at(w).entries * a.conjugate();
}

PolyVF w_field(const Potential& p, double norm_tol, double fit_tol,
               double* held_out_residual) {
  check_config(p);
  if (p.kappa != 1.0) {
    throw Error(Err::InvalidConfig, "w_field requires kappa = 1");
  }
  const int n = p.n;
  const int nbasis = n * n + 2 * n;
  const int norm_count = 64;
  const int fit_count = 3 * nbasis;
  const int held_count = nbasis;
  std::vector<CVector> grid = fit_grid(n, norm_count + fit_count + held_count);
  if (p.base == Model::Ball) {
    for (CVector& w : grid) w = cayley_inv(w);
  }
  auto at = [&](const CVector& w) { return CPoint{w, p.base}; };

  double lo = 0.0, hi = 0.0, sum = 0.0;
  for (int i = 0; i < norm_count; ++i) {
    double v = diff_norm_sq(p, at(grid[i]));
    lo = (i == 0) ? v : std::min(lo, v);
    hi = (i == 0) ? v : std::max(hi, v);
    sum += v;
  }
  if (hi - lo > norm_tol) {
    std::ostringstream msg;
    msg << "differential norm is not constant (mean " << sum / norm_count
        << ", spread " << hi - lo << ")";
    throw Error(Err::NotConstantNorm, msg.str());
  }

  auto w_at = [&](const CVector& w) -> CVector {
    double scale = std::exp(eval_log(p, at(w)) / (n + 1));
    return Complex(0.0, 1.0) * scale * gradient_field(p, at(w));
  };

  std::vector<CVector> pts(grid.begin() + norm_count,
                           grid.begin() + norm_count + fit_count);
  std::vector<CVector> vals;
  vals.reserve(fit_count);
  for (const CVector& w : pts) vals.push_back(w_at(w));
  PolyVF fit = fit_polyvf(n, pts, vals);

  double worst = 0.0;
  for (int i = norm_count + fit_count; i < norm_count + fit_count + held_count;
       ++i) {
    CVector diff = fit.eval(grid[i]) - w_at(grid[i]);
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  }
  if (held_out_residual != nullptr) *held_out_residual = worst;
  if (worst > fit_tol) {
    std::ostringstream msg;
    msg << "rescaled gradient field is not polynomial of degree <= 2 "
           "(held-out residual "
        << worst << ")";
    throw Error(Err::NotPolynomial, msg.str());
  }
  return fit;
}

double gradient_bracket_check(const Potential& p, const CPoint& w) {
  check_config(p);
  check_point(p, w);
  ComplexFieldFn field = [&](const CVector& x) {
    return gradient_field(p, CPoint{x, p.base});
  };
  CVector v0 = field(w.coords);
  CMatrix db = fd_dbar_field(field, w.coords);
  CVector s = db * v0.conjugate() + v0;
  return s.cwiseAbs().maxCoeff();
}

}  // namespace kepot
