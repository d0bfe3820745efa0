#pragma once

// Fractional-linear (Moebius) maps of C^n in homogeneous coordinates, and
// the constraint chain that pins down the Cayley transform among
// biholomorphisms of the ball onto the Siegel domain.

#include <string>
#include <vector>

#include "geometry.hpp"
#include "metric.hpp"

namespace kepot {

// G_i(z) = (sum_j A(i,j) z_j + A(i,n)) / (sum_j A(n,j) z_j + A(n,n)),
// 0-based rows/columns 0..n of the homogeneous matrix A, i < n.  The
// constant column A(.,n) is part of the data.  Scaling A by a nonzero
// constant does not change the map.
struct MobiusMap {
  CMatrix a;  // (n+1) x (n+1)
  int n = 0;

  // Validates shape and invertibility (Degenerate otherwise).
  static MobiusMap from_matrix(const CMatrix& a);
  static MobiusMap identity(int n);
  // Homogeneous matrix of the Cayley transform: block I, row (0..,1,1),
  // row (0..,-1,1).
  static MobiusMap cayley(int n);

  CVector apply(const CVector& z) const;   // PoleAtBoundary near the pole
  CMatrix jacobian(const CVector& z) const;

  // P^{-1} A P for an invertible homogeneous matrix P.
  MobiusMap conjugated(const CMatrix& p) const;
};

CMatrix cayley_matrix(int n);

// Wrap as a generic holomorphic map with exact Jacobian.
HoloMap as_holo_map(const MobiusMap& m, Model target);

// One stage of the constraint chain.
struct ConstraintStep {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::string detail;
};

struct CayleyReport {
  bool is_cayley_up_to_rotation = false;
  Complex rotation = 1.0;  // lambda: G = P_lambda o Cayley o P_lambda^{-1}
  std::vector<ConstraintStep> steps;
  std::string first_failure;  // empty when the chain passes
};

// Runs the chain on a holomorphic map G of the ball:
//   1. base-point      : G(0) = (0,...,0,lambda) with |lambda| = 1; if
//                        lambda != 1, the remaining steps run on the
//                        conjugated map P_lambda^{-1} o G o P_lambda with
//                        P_lambda = diag(1,...,1,lambda).
//   2. derivative      : dG(0) = diag(1,...,1,2).
//   3. determinant     : det dG(z) (1 - z_n)^{n+1} = 2 on a deterministic
//                        interior grid.
//   4. linearity       : G is fractional-linear, detected by the smallest
//                        relative singular value of the homogeneous
//                        interpolation system.
//   5. coefficients    : the recovered homogeneous matrix, scaled so the
//                        corner entry is 1, matches the Cayley matrix
//                        entry by entry.
CayleyReport cayley_constraint_report(const HoloMap& g, int n,
                                      int det_samples = 50,
                                      double tol_point = 1e-10,
                                      double tol_det = 1e-10,
                                      double tol_linear = 1e-6,
                                      double tol_coeff = 1e-8);

CayleyReport cayley_constraint_report(const MobiusMap& m);

}  // namespace kepot
