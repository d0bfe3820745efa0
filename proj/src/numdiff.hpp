#pragma once

#include <functional>

#include "geometry.hpp"

namespace kepot {

using RealFn = std::function<double(const CVector&)>;
using ComplexFieldFn = std::function<CVector(const CVector&)>;

// Fourth-order central difference along one real coordinate direction.
// dir selects the coordinate: (index, 0) = real part, (index, 1) = imag part.
double fd_partial(const RealFn& f, const CVector& w, int index, int part,
                  double h = 1e-4);

// Holomorphic gradient of a real scalar: d/dw_k = (d/dx_k - i d/dy_k)/2.
CVector fd_grad_holo(const RealFn& f, const CVector& w, double h = 1e-4);

// Mixed complex Hessian H(i,j) = d^2 f / (dw_i dwbar_j), computed by
// composing fourth-order first-difference operators.
CMatrix fd_hessian_mixed(const RealFn& f, const CVector& w, double h = 1e-4);

// Columnwise anti-holomorphic derivative of a vector field:
// out(j,k) = d v_j / d wbar_k = (d/dx_k + i d/dy_k)/2 applied to v_j.
CMatrix fd_dbar_field(const ComplexFieldFn& v, const CVector& w,
                      double h = 1e-4);

}  // namespace kepot
