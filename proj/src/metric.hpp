#pragma once

#include <functional>

#include "geometry.hpp"

namespace kepot {

// Matrix layout convention.  Both forms are stored with the *first* index as
// the row:
//   Metric        : entries(i,j) = g_{i jbar}
//   InverseMetric : entries(k,j) = g^{k jbar}
// The two contract over the barred index, so the defining identity is
//   sum_j entries_M(i,j) * entries_K(k,j) = delta_{ik},
// i.e. M * K^T = I as a matrix product (K is Hermitian, so K^T = conj(K)).
enum class FormKind { Metric, InverseMetric };

struct HermitianForm {
  CMatrix entries;
  CPoint base;
  FormKind kind = FormKind::Metric;
  double hermitian_defect() const;  // max |entries - entries^H|
};

// Kaehler-Einstein metric (Ricci -1) of the Siegel domain, the complex
// Hessian of -(n+1) log rho0:
//   g_{i jbar} = (n+1) [ delta_{ij} 1_{i,j<n} / rho0
//                        + (d_i rho0)(dbar_j rho0) / rho0^2 ]
// with d_i rho0 = -conj(w_i) for i < n and d_n rho0 = 1/2.
HermitianForm metric_siegel(const CPoint& w);

// Closed-form inverse, the block matrix
//   g^{k jbar} = rho0/(n+1) * [ I      2 w' ]
//                             [ 2 w'^* 4 Re w_n ]
HermitianForm inverse_metric_siegel(const CPoint& w);

// Ball model: complex Hessian of -(n+1) log(1 - |z|^2).
HermitianForm metric_ball(const CPoint& z);
// Closed-form inverse: (1-|z|^2)/(n+1) * (delta_{kj} - z_k conj(z_j)).
HermitianForm inverse_metric_ball(const CPoint& z);

// Model-dispatching accessors.
HermitianForm metric_at(const CPoint& p);
HermitianForm inverse_metric_at(const CPoint& p);

// Squared norm of a (1,0)-form with coefficient vector a:
//   |a|^2 = sum_{k,j} a_k conj(a_j) g^{k jbar}.
double norm_sq_form(const CVector& a, const CPoint& p);

// Pullback of a Hermitian form by a holomorphic map with Jacobian J at the
// source point: (F^*g)(i,j) = sum_{a,b} J(a,i) g(a,b) conj(J(b,j)).
CMatrix pullback_form(const CMatrix& g_at_image, const CMatrix& jacobian);

// Finite-difference Einstein check: for a Ricci -1 Kaehler-Einstein metric,
// log det g is itself a potential, so dd-bar log det g - g = 0.  Returns the
// max-norm of that residual computed with central differences.
double einstein_residual(const CPoint& p);

// A holomorphic map into one of the two models, with exact Jacobian.
struct HoloMap {
  std::function<CVector(const CVector&)> apply;
  std::function<CMatrix(const CVector&)> jacobian;
  Model target = Model::Siegel;
};

// Isometry determinant identity: for a biholomorphism G from the ball model
// into `target`, det g_target(G(z)) * |det dG(z)|^2 - det g_ball(z).
// Returns the relative residual at z.
double isometry_det_identity(const HoloMap& g, const CPoint& z);

}  // namespace kepot
