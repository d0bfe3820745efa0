#pragma once

// The symmetry algebra of the Siegel domain as concrete polynomial vector
// fields: construction of the graded basis, decomposition of arbitrary
// fields over it, pushforward along automorphisms, and the action of real
// parts of fields on log-potentials.

#include <utility>
#include <vector>

#include "automorphism.hpp"
#include "basistag.hpp"
#include "polyvf.hpp"
#include "potential.hpp"

namespace kepot {

struct BasisField {
  BasisTag tag;
  PolyVF field;
};

// The full ordered basis in dimension n (size n^2 + 2n):
//   T; T2(1..n-1); T3(1..n-1); D; U(i,j) i<j; V(i,j) i<j; Wk(1..n-1);
//   Tt; Tt2(1..n-1); Tt3(1..n-1).
const std::vector<BasisField>& basis(int n);

// The field for a single tag.
PolyVF basis_field(const BasisTag& tag, int n);

// Grading by the adjoint action of D: returns a with [D, V] = 2a V, where
// a must land in {-1, -1/2, 0, 1/2, 1} within tol.  Throws NotGraded when V
// is not an eigenvector (e.g. a mixed-grade combination).
double grade(const PolyVF& v, double tol = 1e-12);

// Real coefficients of a field over the basis, by least squares on the
// coefficient vectors.  `residual` is the largest coefficient of the
// unexplained part.  When strict is true, throws NotInAlgebra if the
// residual exceeds `tol`.
struct Decomposition {
  std::vector<std::pair<BasisTag, double>> coeffs;  // basis order
  double residual = 0.0;

  double coeff(const BasisTag& tag) const;
  // Largest absolute coefficient over the sigma-pushforward (tilde) tags.
  double tilde_mass() const;
  // Reassemble sum coeff * basis field.
  PolyVF assemble(int n) const;
};
Decomposition decompose(const PolyVF& v, bool strict = true,
                        double tol = 1e-8);

// Pushforward of a polynomial field along an automorphism:
//   (Phi_* V)(w) = dPhi(Phi^{-1} w) V(Phi^{-1} w),
// evaluated on a deterministic grid and refitted as a degree <= 2 field.
// Held-out samples must reproduce within fit_tol (NotPolynomial otherwise).
PolyVF pushforward(const Automorphism& phi, const PolyVF& v,
                   double fit_tol = 1e-10);

// Action of the real part of a field on a log-potential:
//   (Re V) eval_log at w = Re( sum_k v^k(w) d_k eval_log(w) ).
double re_apply(const PolyVF& v, const Potential& p, const CPoint& w);

}  // namespace kepot
