#pragma once

#include <Eigen/Dense>
#include <complex>

#include "errors.hpp"

namespace kepot {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

// Two biholomorphic models of complex hyperbolic space:
//   Ball   : B^n = { z : |z| < 1 }
//   Siegel : H^n = { w : Re w_n > |w'|^2 },  w' = (w_1, ..., w_{n-1})
enum class Model { Ball, Siegel };

struct CPoint {
  CVector coords;
  Model model = Model::Siegel;
  int dim() const { return static_cast<int>(coords.size()); }
};

// Defining function of the Siegel domain: rho0(w) = Re w_n - |w'|^2.
double rho0(const CVector& w);

bool in_siegel(const CVector& w);
bool in_ball(const CVector& z);

// Membership check that throws OutsideDomain with a short description.
void require_inside(const CPoint& p);

// Ball -> Siegel: C(z) = (z'/(1-z_n), (1+z_n)/(1-z_n)).  Pole at z_n = 1.
CVector cayley(const CVector& z);
// Siegel -> Ball: F(w) = (2w'/(w_n+1), (w_n-1)/(w_n+1)).  Pole at w_n = -1.
CVector cayley_inv(const CVector& w);
// Holomorphic Jacobian of C at z (n x n).
CMatrix cayley_jacobian(const CVector& z);

// Involution of the Siegel domain: sigma(w) = (-w'/w_n, 1/w_n).  Pole at w_n = 0.
CVector sigma_map(const CVector& w);
CMatrix sigma_jacobian(const CVector& w);

}  // namespace kepot
