#pragma once

#include <compare>
#include <string>

namespace kepot {

// Labels for the generators of the symmetry algebra of the Siegel domain
// (dimension n^2 + 2n).  Index ranges, all 1-based:
//   T                      : 2i d/dw_n
//   T2(k), T3(k), k < n    : 2 w_k d/dw_n + d/dw_k ;  -2i w_k d/dw_n + i d/dw_k
//   D                      : 2 w_n d/dw_n + sum_{k<n} w_k d/dw_k
//   U(i,j), V(i,j), i<j<n  : w_j d/dw_i - w_i d/dw_j ;  i(w_j d/dw_i + w_i d/dw_j)
//   Wk(k), k < n           : i w_k d/dw_k
//   Tt, Tt2(k), Tt3(k)     : pushforwards of T, T2(k), T3(k) by the
//                            involution sigma (quadratic coefficients)
struct BasisTag {
  enum class Family { T, T2, T3, D, U, V, Wk, Tt, Tt2, Tt3 };
  Family family = Family::T;
  int i = 0;  // first index (k for single-index families)
  int j = 0;  // second index for U/V

  auto operator<=>(const BasisTag&) const = default;

  static BasisTag T() { return {Family::T, 0, 0}; }
  static BasisTag T2(int k) { return {Family::T2, k, 0}; }
  static BasisTag T3(int k) { return {Family::T3, k, 0}; }
  static BasisTag D() { return {Family::D, 0, 0}; }
  static BasisTag U(int i, int j) { return {Family::U, i, j}; }
  static BasisTag V(int i, int j) { return {Family::V, i, j}; }
  static BasisTag Wk(int k) { return {Family::Wk, k, 0}; }
  static BasisTag Tt() { return {Family::Tt, 0, 0}; }
  static BasisTag Tt2(int k) { return {Family::Tt2, k, 0}; }
  static BasisTag Tt3(int k) { return {Family::Tt3, k, 0}; }

  bool tilde() const {
    return family == Family::Tt || family == Family::Tt2 ||
           family == Family::Tt3;
  }
  std::string name() const;
};

}  // namespace kepot
