#pragma once

// Log-potentials of the invariant Kaehler-Einstein metrics.  A Potential is
//
//   eval_log(w) = (1/kappa) * [ log psi0(Phi(u)) + 2 Re f(w) + log_scale ]
//
// where psi0(u) = rho0(u)^{-(n+1)} is the canonical potential of the Siegel
// domain, u = w for a Siegel-model base and u = cayley(w) for a ball-model
// base (so the plain ball base is phi0 = psi0 o cayley), Phi is an optional
// automorphism acting on Siegel coordinates, and f is a holomorphic
// polynomial correction evaluated in the potential's native coordinates.
// log_scale = ln r adds a positive constant factor r; kappa > 0 rescales the
// metric to omega/kappa (Ricci curvature -kappa).

#include "automorphism.hpp"
#include "geometry.hpp"
#include "holopoly.hpp"
#include "polyvf.hpp"

namespace kepot {

struct Potential {
  Model base = Model::Siegel;
  int n = 0;
  Automorphism pre{0};  // acts on Siegel coordinates
  HoloPoly f;           // native coordinates
  double log_scale = 0.0;
  double kappa = 1.0;

  // Canonical potentials: log psi0 on the Siegel domain, log phi0 on the
  // ball.
  static Potential psi0(int n);
  static Potential phi0(int n);

  Potential with_pre(const Automorphism& a) const;
  Potential with_correction(const HoloPoly& poly) const;
  Potential with_scale(double r) const;     // r > 0
  Potential with_kappa(double kappa) const; // kappa > 0

  int dim() const { return n; }
};

// Value of the log-potential at a point of the potential's model.
double eval_log(const Potential& p, const CPoint& w);

// Exact holomorphic partials of eval_log (chain rule through Cayley and the
// precomposed automorphism; the correction contributes its own gradient).
CVector grad_holo(const Potential& p, const CPoint& w);

// Squared norm of the differential of eval_log measured in the scaled metric
// omega/kappa.  Equals n+1 for the canonical potentials at kappa = 1.
double diff_norm_sq(const Potential& p, const CPoint& w);

// Residual of the constant-norm condition for a corrected Siegel potential
// log psi0 + f + fbar:
//
//   R(f, w) = -4 rho0(w) Re f_n(w) + ||df||^2_omega ,
//
// which equals diff_norm_sq(psi0 e^{f+fbar}) - (n+1).
double constant_norm_residual(const HoloPoly& f, const CPoint& w);

// Gradient vector field of eval_log: the conjugate-index contraction of the
// holomorphic partials with the inverse metric (kappa = 1 metric).
CVector gradient_field(const Potential& p, const CPoint& w);

// The rescaled gradient field i psi^{1/(n+1)} grad log psi, sampled on a
// deterministic grid and fitted as a polynomial field of degree <= 2.
// Requires kappa = 1 and a constant differential norm (sampled).  Throws
// NotConstantNorm if the sampled norms spread beyond norm_tol, NotPolynomial
// if held-out fit residuals exceed fit_tol.  When held_out_residual is
// non-null it receives the worst held-out error.
PolyVF w_field(const Potential& p, double norm_tol = 1e-8,
               double fit_tol = 1e-8, double* held_out_residual = nullptr);

// Residual of the bracket identity [V, Vbar] = V - Vbar for the gradient
// field V, with the anti-holomorphic derivatives of V taken by central
// finite differences.
double gradient_bracket_check(const Potential& p, const CPoint& w);

}  // namespace kepot
