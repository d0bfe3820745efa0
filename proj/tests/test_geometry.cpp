#include <catch2/catch_amalgamated.hpp>

#include "errors.hpp"
#include "geometry.hpp"
#include "sampling.hpp"

using namespace kepot;

namespace {
CVector vec2(Complex a, Complex b) {
  CVector v(2);
  v << a, b;
  return v;
}
}  // namespace

TEST_CASE("defining function of the half-space model") {
  CVector w = vec2(Complex(0.5, 0.0), Complex(1.0, 2.0));
  CHECK(rho0(w) == Catch::Approx(0.75).margin(1e-15));
  CHECK(in_siegel(w));
  CHECK_FALSE(in_siegel(vec2(Complex(2.0, 0.0), Complex(1.0, 0.0))));

  CVector w1(1);
  w1 << Complex(0.25, -3.0);
  CHECK(rho0(w1) == Catch::Approx(0.25).margin(1e-15));
}

TEST_CASE("cayley maps the origin to the base point and is a bijection") {
  for (int n : {1, 2, 3, 5}) {
    CVector z0 = CVector::Zero(n);
    CVector w = cayley(z0);
    for (int i = 0; i + 1 < n; ++i) CHECK(std::abs(w(i)) < 1e-15);
    CHECK(std::abs(w(n - 1) - Complex(1.0, 0.0)) < 1e-15);

    Rng rng(11 + n);
    for (int rep = 0; rep < 25; ++rep) {
      CVector z = sample_ball(rng, n);
      CVector back = cayley_inv(cayley(z));
      CHECK((back - z).cwiseAbs().maxCoeff() < 1e-13);
      CHECK(in_siegel(cayley(z)));

      CVector ws = sample_siegel(rng, n);
      CHECK(in_ball(cayley_inv(ws)));
      CHECK((cayley(cayley_inv(ws)) - ws).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("cayley transforms the defining functions as displayed") {
  for (int n : {1, 2, 4}) {
    Rng rng(101 + n);
    for (int rep = 0; rep < 40; ++rep) {
      CVector z = sample_ball(rng, n);
      double lhs = rho0(cayley(z));
      double rhs = (1.0 - z.squaredNorm()) / std::norm(1.0 - z(n - 1));
      CHECK(std::abs(lhs - rhs) < 1e-13);
    }
  }
}

TEST_CASE("sigma is an involution scaling the defining function") {
  for (int n : {1, 2, 3}) {
    Rng rng(7 + n);
    for (int rep = 0; rep < 40; ++rep) {
      CVector w = sample_siegel(rng, n);
      CVector s = sigma_map(w);
      CHECK(in_siegel(s));
      CHECK(std::abs(rho0(s) - rho0(w) / std::norm(w(n - 1))) < 1e-13);
      CHECK((sigma_map(s) - w).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("jacobians at the origin") {
  int n = 3;
  CMatrix j = cayley_jacobian(CVector::Zero(n));
  CMatrix expected = CMatrix::Identity(n, n);
  expected(n - 1, n - 1) = 2.0;
  CHECK((j - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("pole and domain guards") {
  CVector z = vec2(Complex(0.0, 0.0), Complex(1.0, 0.0));
  CHECK_THROWS_AS(cayley(z), Error);
  try {
    cayley(z);
  } catch (const Error& e) {
    CHECK(e.code == Err::PoleAtBoundary);
  }

  CVector w0 = vec2(Complex(0.0, 0.0), Complex(0.0, 0.0));
  CHECK_THROWS_AS(sigma_map(w0), Error);

  CPoint outside{vec2(Complex(3.0, 0.0), Complex(0.1, 0.0)), Model::Siegel};
  try {
    require_inside(outside);
    FAIL("expected OutsideDomain");
  } catch (const Error& e) {
    CHECK(e.code == Err::OutsideDomain);
  }
}

TEST_CASE("deterministic samplers stay inside and replay by seed") {
  for (int n : {1, 3}) {
    Rng a(42), b(42);
    for (int i = 0; i < 50; ++i) {
      CVector w = sample_siegel(a, n);
      CHECK(rho0(w) >= 0.0999999);
      CHECK((w - sample_siegel(b, n)).cwiseAbs().maxCoeff() == 0.0);
    }
    Rng c(43);
    for (int i = 0; i < 50; ++i) CHECK(sample_ball(c, n).norm() <= 0.950001);
  }
}

TEST_CASE("fit grid points are interior and pairwise distinct") {
  auto pts = fit_grid(2, 30);
  REQUIRE(pts.size() == 30);
  for (const auto& p : pts) CHECK(in_siegel(p));
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      CHECK((pts[i] - pts[j]).norm() > 1e-8);
}
