#pragma once

// Normalization of symmetry fields and classification of constant-norm
// potentials.  The pipeline mirrors the uniqueness argument for potentials
// with constant differential norm: compute the rescaled gradient field,
// expand it over the symmetry algebra, reduce the index-k components onto
// index 1 by coordinate swaps, kill the reducible components with parabolic
// shift flows, and compare what remains against the canonical potential.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "automorphism.hpp"
#include "potential.hpp"
#include "vectorfield.hpp"

namespace kepot {

// Real coefficients of a field over the non-tilde part of the basis,
// arranged by family.  Indices are 1-based as in the basis tags; e and f are
// upper-triangular (i < j).
struct FieldCoeffs {
  int n = 0;
  double a = 0.0;  // D
  double b = 0.0;  // T
  RVector c, d;    // T2(k), T3(k): size n-1, k at [k-1]
  RMatrix e, f;    // U(i,j), V(i,j): (n-1)x(n-1), entry (i-1, j-1), i < j
  RVector g;       // Wk(k)

  static FieldCoeffs zero(int n);
  // Reads the non-tilde coefficients; tilde components must be handled by
  // the caller beforehand.
  static FieldCoeffs from_decomposition(const Decomposition& dec, int n);
  PolyVF assemble() const;
};

// Coefficients after the swap reduction: only the slots
// D, T, T2(1), T3(1), U(1,j), V(1,j), Wk(1) are meaningful.
// reduction_residual is the largest coefficient left in any other slot by
// the genuine pushforward (zero for fields arising from potentials).
struct CollapsedCoeffs {
  int n = 0;
  double a = 0.0, b = 0.0;
  double c = 0.0, d = 0.0;  // T2(1), T3(1)
  RVector e, f;             // U(1,j), V(1,j): j = 2..n-1 stored at [j-2]
  double g = 0.0;           // Wk(1)
  double reduction_residual = 0.0;

  static CollapsedCoeffs zero(int n);
  PolyVF assemble_reduced() const;
};

// The swap composition S(1,2), ..., S(1,n-1) applied in that order, as a
// genuine pushforward (verified by fit on the actual field), and the
// coefficients read off the reduced slots.
std::pair<Automorphism, CollapsedCoeffs> collapse_permutations(
    const FieldCoeffs& coeffs);

// Linear system for the shift parameters (s_{2,1}, s_{3,1}, ..., s_{2,n-1},
// s_{3,n-1}) that kill the T2/T3 components when a != 0; size 2(n-1).
struct ShiftSystem {
  RMatrix m;
  RVector rhs;
};
ShiftSystem build_shift_system(const CollapsedCoeffs& c);

struct Shifts {
  RVector s2, s3;  // size n-1, k stored at [k-1]
  static Shifts zero(int n);
};

// Solves the shift system; throws SingularSystem when a = 0.
Shifts solve_shifts(const CollapsedCoeffs& c);

// Shift parameters for the a = 0 branches, with the slots they remove.
// Branch selection by the magnitudes of the reduced coefficients:
//   c = d = 0            -> nothing to kill;
//   only g survives      -> invert the W slot, killing T2(1) and T3(1);
//   only (c, d) survive  -> minimal-norm root killing T;
//   some (e, f) survives -> invert the first significant rotation slot,
//                           killing every T2(k) and T3(k).
std::pair<Shifts, std::vector<BasisTag>> step2_shifts(const CollapsedCoeffs& c,
                                                      double tol = 1e-9);

// Parameter of the leading 2i d/dw_n flow that kills the remaining T
// component: the T coefficient after the shift flows depends on s1 as
// tau0 - 2 a s1, so s1 = tau0 / (2a) with tau0 computed by pushforward of
// the reduced field through the shift flows alone.
double choose_s1(const CollapsedCoeffs& c, const Shifts& s);

// Flow composition [Ts(s1); T2(k, s2(k)); T3(k, s3(k))] in apply order,
// omitting exact-zero parameters.
Automorphism shift_flows(int n, double s1, const Shifts& s);

enum class VerdictKind {
  Canonical,        // P = r * psi0 o phi
  NotConstantNorm,  // sampled differential norm is not constant
  NotPolynomial,    // rescaled gradient field is not polynomial
  NotInAlgebra,     // field is polynomial but outside the symmetry algebra
  NeedsIsotropy,    // field has sigma-pushforward components
  Inconsistent      // normalization contradicts the classification lemmas
};

const char* verdict_name(VerdictKind k);

struct ClassifyResult {
  VerdictKind kind = VerdictKind::Inconsistent;
  int n = 0;
  double norm_mean = 0.0;
  double norm_spread = 0.0;
  // Canonical data: P = r * psi0 o phi.
  double r = 0.0;
  std::optional<Automorphism> phi;
  // Intermediate residuals (meaningful for the stages that ran).
  double fit_residual = 0.0;        // w-field held-out residual
  double decompose_residual = 0.0;  // basis expansion residual
  double tilde_mass = 0.0;
  std::vector<std::pair<std::string, double>> tilde_components;
  double reduction_residual = 0.0;
  double kill_residual = 0.0;    // components the shift flows must kill
  double pullback_spread = 0.0;  // final constancy spread
  std::string detail;
};

// Full pipeline.  Requires kappa = 1 and a Siegel-model base.
ClassifyResult classify_potential(const Potential& p);

}  // namespace kepot
