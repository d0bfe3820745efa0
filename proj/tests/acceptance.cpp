// End-to-end acceptance checks.  Each numbered criterion prints exactly one
// PASS/FAIL line; the process exit code is the number of failures.  WARN
// lines record statements whose documented constant is contradicted by the
// numerical oracle while the confirmed constant passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "metric.hpp"
#include "mobius.hpp"
#include "normalize.hpp"
#include "potential.hpp"
#include "sampling.hpp"
#include "support/oracles.hpp"
#include "vectorfield.hpp"

using namespace kepot;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct Outcome {
  bool pass = false;
  double residual = 0.0;
  double tol = 0.0;
  std::string info;
  std::vector<std::string> warnings;
};

using CoeffMap = std::map<BasisTag, double>;

// Largest deviation between a decomposition and an expected coefficient map
// over the whole basis.
double coeff_distance(const Decomposition& dec, const CoeffMap& expected) {
  double worst = dec.residual;
  for (const auto& [tag, c] : dec.coeffs) {
    auto it = expected.find(tag);
    const double want = (it == expected.end()) ? 0.0 : it->second;
    worst = std::max(worst, std::abs(c - want));
  }
  return worst;
}

// ---------------------------------------------------------------- criteria

Outcome canonical_potential_norm() {
  Outcome out;
  out.tol = 1e-9;
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 5; ++n) {
    Potential psi = Potential::psi0(n);
    Rng rng = suite_rng(1, "acceptance-norm", n);
    for (int i = 0; i < 100; ++i) {
      CPoint w{sample_siegel(rng, n), Model::Siegel};
      out.residual =
          std::max(out.residual, std::abs(diff_norm_sq(psi, w) - (n + 1.0)));
    }
  }
  const double secs = seconds_since(t0);
  out.pass = out.residual <= out.tol && secs < 1.0;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "n=1..5, 100 pts each, %.2fs (limit 1s)",
                secs);
  out.info = buf;
  return out;
}

Outcome rescaled_metric_norm() {
  Outcome out;
  out.tol = 1e-9;
  const int n = 1;
  Rng rng = suite_rng(1, "acceptance-kappa", n);
  for (double kappa : {0.5, 1.0, 2.0}) {
    Potential p = Potential::psi0(n).with_kappa(kappa);
    for (int i = 0; i < 100; ++i) {
      CPoint w{sample_siegel(rng, n), Model::Siegel};
      out.residual =
          std::max(out.residual, std::abs(diff_norm_sq(p, w) - 2.0 / kappa));
    }
  }
  out.pass = out.residual <= out.tol;
  out.info = "n=1, kappa in {1/2, 1, 2}, target 2/kappa";
  return out;
}

Outcome metric_inverse() {
  Outcome out;
  out.tol = 1e-10;
  for (int n = 1; n <= 5; ++n) {
    Rng rng = suite_rng(1, "acceptance-inverse", n);
    for (int i = 0; i < 100; ++i) {
      CPoint w{sample_siegel(rng, n), Model::Siegel};
      const CMatrix g = metric_siegel(w).entries;
      const CMatrix k = inverse_metric_siegel(w).entries;
      const double contraction =
          (g * k.transpose() - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
      const CMatrix numeric = g.inverse().transpose();
      const double entries = (k - numeric).cwiseAbs().maxCoeff() /
                             numeric.cwiseAbs().maxCoeff();
      out.residual = std::max({out.residual, contraction, entries});
    }
  }
  out.pass = out.residual <= out.tol;
  out.info = "n=1..5, 100 pts: contraction to identity and block entries";
  return out;
}

Outcome einstein_residuals() {
  Outcome out;
  out.tol = 1e-4;
  for (int n = 1; n <= 3; ++n) {
    Rng rng = suite_rng(1, "acceptance-einstein", n);
    for (int i = 0; i < 20; ++i) {
      CPoint w{sample_siegel(rng, n), Model::Siegel};
      out.residual = std::max(out.residual, einstein_residual(w));
      CPoint z{sample_ball(rng, n), Model::Ball};
      out.residual = std::max(out.residual, einstein_residual(z));
    }
  }
  out.pass = out.residual <= out.tol;
  out.info = "n=1..3, 20 pts per model, finite-difference Ricci defect";
  return out;
}

// One row of a pushforward table: the flowed automorphism, the argument
// field, the documented image as a function of the parameter, and (when the
// oracle contradicts the documented row) the confirmed image.
struct TableRow {
  std::string label;
  BasisTag arg;
  std::function<CoeffMap(double)> documented;
  std::function<CoeffMap(double)> confirmed;  // null when as documented
};

CoeffMap fixed_map(const BasisTag& t) { return CoeffMap{{t, 1.0}}; }

Outcome pushforward_tables() {
  Outcome out;
  out.tol = 1e-10;
  const int n = 3;
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng = suite_rng(1, "acceptance-tables", n);

  std::vector<BasisTag> args = {BasisTag::T(),    BasisTag::T2(1),
                                BasisTag::T2(2),  BasisTag::T3(1),
                                BasisTag::T3(2),  BasisTag::D(),
                                BasisTag::U(1, 2), BasisTag::V(1, 2),
                                BasisTag::Wk(1),  BasisTag::Wk(2)};

  int checked = 0;
  auto run_rows = [&](const std::string& table,
                      const std::function<Automorphism(double)>& flow_at,
                      const std::vector<TableRow>& rows, bool param) {
    for (const TableRow& row : rows) {
      const PolyVF field = basis_field(row.arg, n);
      for (int rep = 0; rep < 10; ++rep) {
        double s = rng.uniform(0.2, 1.5) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
        if (!param) s = 0.0;
        const Automorphism phi = flow_at(s);
        const Decomposition dec =
            decompose(pushforward(phi, field), /*strict=*/false);
        const double doc_res = coeff_distance(dec, row.documented(s));
        double use = doc_res;
        if (row.confirmed) {
          const double conf_res = coeff_distance(dec, row.confirmed(s));
          if (rep == 0) {
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "%s %s: documented row fails (residual %.2e), "
                          "confirmed row passes (residual %.2e)",
                          table.c_str(), row.label.c_str(), doc_res, conf_res);
            out.warnings.push_back(buf);
          }
          use = conf_res;
        }
        out.residual = std::max(out.residual, use);
        ++checked;
      }
    }
  };

  // Table of the leading shift flow: only D moves.
  {
    std::vector<TableRow> rows;
    for (const BasisTag& a : args) {
      if (a == BasisTag::D())
        rows.push_back({"D", a,
                        [](double s) {
                          return CoeffMap{{BasisTag::D(), 1.0},
                                          {BasisTag::T(), -2.0 * s}};
                        },
                        nullptr});
      else
        rows.push_back({a.name(), a,
                        [a](double) { return fixed_map(a); }, nullptr});
    }
    run_rows("leading-shift", [&](double s) { return flow(BasisTag::T(), s, n); },
             rows, true);
  }

  // Tables of the transverse shift flows.
  for (int variant = 2; variant <= 3; ++variant) {
    for (int k = 1; k < n; ++k) {
      const BasisTag ftag =
          (variant == 2) ? BasisTag::T2(k) : BasisTag::T3(k);
      std::vector<TableRow> rows;
      for (const BasisTag& a : args) {
        std::function<CoeffMap(double)> doc = [a](double) {
          return fixed_map(a);
        };
        if (a == BasisTag::D()) {
          doc = [ftag](double s) {
            return CoeffMap{{BasisTag::D(), 1.0}, {ftag, -s}};
          };
        } else if (variant == 2 && a == BasisTag::T3(k)) {
          doc = [a](double s) {
            return CoeffMap{{a, 1.0}, {BasisTag::T(), 2.0 * s}};
          };
        } else if (variant == 3 && a == BasisTag::T2(k)) {
          doc = [a](double s) {
            return CoeffMap{{a, 1.0}, {BasisTag::T(), -2.0 * s}};
          };
        } else if (a.family == BasisTag::Family::U &&
                   (k == a.i || k == a.j)) {
          const int other = (k == a.i) ? a.j : a.i;
          const double sign = (k == a.i) ? 1.0 : -1.0;
          doc = [a, other, sign, variant](double s) {
            const BasisTag gen = (variant == 2) ? BasisTag::T2(other)
                                                : BasisTag::T3(other);
            return CoeffMap{{a, 1.0}, {gen, sign * s}};
          };
        } else if (a.family == BasisTag::Family::V &&
                   (k == a.i || k == a.j)) {
          const int other = (k == a.i) ? a.j : a.i;
          const double sign = (variant == 2) ? -1.0 : 1.0;
          doc = [a, other, sign, variant](double s) {
            const BasisTag gen = (variant == 2) ? BasisTag::T3(other)
                                                : BasisTag::T2(other);
            return CoeffMap{{a, 1.0}, {gen, sign * s}};
          };
        } else if (a == BasisTag::Wk(k)) {
          doc = [a, k, variant](double s) {
            const double lin = (variant == 2) ? -s : s;
            const BasisTag gen =
                (variant == 2) ? BasisTag::T3(k) : BasisTag::T2(k);
            return CoeffMap{{a, 1.0}, {gen, lin}, {BasisTag::T(), -s * s}};
          };
        }
        rows.push_back({a.name(), a, doc, nullptr});
      }
      const std::string label =
          (variant == 2 ? "transverse-shift-2(" : "transverse-shift-3(") +
          std::to_string(k) + ")";
      run_rows(label, [&](double s) { return flow(ftag, s, n); }, rows, true);
    }
  }

  // Table of the coordinate swaps (parameterless).  The catch-all rows for
  // the untouched indices literally include index 1, where the oracle shows
  // the slot moves to index k instead; those are the recorded deviations.
  for (int k = 2; k < n; ++k) {
    std::vector<TableRow> rows;
    for (const BasisTag& a : args) {
      std::function<CoeffMap(double)> doc = [a](double) { return fixed_map(a); };
      std::function<CoeffMap(double)> conf = nullptr;
      if (a == BasisTag::T2(k)) {
        doc = [](double) { return fixed_map(BasisTag::T2(1)); };
      } else if (a == BasisTag::T3(k)) {
        doc = [](double) { return fixed_map(BasisTag::T3(1)); };
      } else if (a == BasisTag::T2(1)) {
        conf = [k](double) { return fixed_map(BasisTag::T2(k)); };
      } else if (a == BasisTag::T3(1)) {
        conf = [k](double) { return fixed_map(BasisTag::T3(k)); };
      } else if (a == BasisTag::Wk(k)) {
        doc = [](double) { return fixed_map(BasisTag::Wk(1)); };
      } else if (a == BasisTag::Wk(1)) {
        conf = [k](double) { return fixed_map(BasisTag::Wk(k)); };
      } else if (a.family == BasisTag::Family::U && a.j == k) {
        doc = [a](double) { return CoeffMap{{a, -1.0}}; };
      }
      // V(i,j) with j = k stays fixed; U/V rows with swap index outside
      // {i,j} are not enumerated by the displayed table.
      rows.push_back({a.name(), a, doc, conf});
    }
    Automorphism perm = Automorphism::identity(n);
    perm.then(GenPerm1k{k});
    run_rows("swap(1," + std::to_string(k) + ")",
             [&](double) { return perm; }, rows, false);
  }

  const double secs = seconds_since(t0);
  out.pass = out.residual <= out.tol && secs < 10.0 &&
             out.warnings.size() == 3;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "n=3, %d pushforwards, %zu documented deviations (expected "
                "3), %.2fs (limit 10s)",
                checked, out.warnings.size(), secs);
  out.info = buf;
  return out;
}

Outcome grading_multiplicities() {
  Outcome out;
  out.tol = 0.0;
  bool ok = true;
  for (int n : {2, 3, 4}) {
    const auto& b = basis(n);
    ok = ok && static_cast<int>(b.size()) == n * n + 2 * n;
    std::map<int, int> mult;  // eigenvalue of ad_D = 2 * grade
    for (const auto& bf : b)
      mult[static_cast<int>(std::lround(2.0 * grade(bf.field)))]++;
    ok = ok && mult[-2] == 1 && mult[2] == 1;
    ok = ok && mult[-1] == 2 * (n - 1) && mult[1] == 2 * (n - 1);
    ok = ok && mult[0] == (n - 1) * (n - 1) + 1;
  }
  out.pass = ok;
  out.info = "n=2,3,4: eigenvalues {-2,-1,0,1,2} with multiplicities "
             "{1, 2(n-1), (n-1)^2+1, 2(n-1), 1}";
  return out;
}

Outcome potential_derivations() {
  Outcome out;
  out.tol = 1e-10;
  bool tilde_doc_ok = true;
  double tilde_doc_worst = 0.0;
  for (int n : {1, 2, 3}) {
    Potential psi = Potential::psi0(n);
    Rng rng = suite_rng(1, "acceptance-actions", n);
    for (int i = 0; i < 100; ++i) {
      CPoint w{sample_siegel(rng, n), Model::Siegel};
      const CVector& wc = w.coords;
      auto act = [&](const BasisTag& t) {
        return re_apply(basis_field(t, n), psi, w);
      };
      out.residual = std::max(out.residual,
                              std::abs(act(BasisTag::D()) + (n + 1.0)));
      out.residual = std::max(out.residual, std::abs(act(BasisTag::T())));
      for (int k = 1; k < n; ++k) {
        out.residual = std::max(out.residual, std::abs(act(BasisTag::T2(k))));
        out.residual = std::max(out.residual, std::abs(act(BasisTag::T3(k))));
      }
      if (n >= 3) {
        out.residual = std::max(out.residual, std::abs(act(BasisTag::U(1, 2))));
        out.residual = std::max(out.residual, std::abs(act(BasisTag::V(1, 2))));
      }

      // Documented constants for the involution-pushed fields...
      const double tt = act(BasisTag::Tt());
      tilde_doc_worst = std::max(
          tilde_doc_worst,
          std::abs(tt - (-4.0 * (n + 1.0) * wc(n - 1).imag())));
      tilde_doc_ok = tilde_doc_ok &&
                     std::abs(tt - (-4.0 * (n + 1.0) * wc(n - 1).imag())) <=
                         out.tol;
      // ...and the confirmed ones, carried by the same oracle.
      out.residual = std::max(
          out.residual, std::abs(tt - (-2.0 * (n + 1.0) * wc(n - 1).imag())));
      for (int k = 1; k < n; ++k) {
        const double t2 = act(BasisTag::Tt2(k));
        const double t3 = act(BasisTag::Tt3(k));
        tilde_doc_ok = tilde_doc_ok &&
                       std::abs(t2 - (-4.0 * (n + 1.0) * wc(k - 1).real())) <=
                           out.tol;
        out.residual = std::max(
            out.residual,
            std::abs(t2 - (-2.0 * (n + 1.0) * wc(k - 1).real())));
        out.residual = std::max(
            out.residual,
            std::abs(t3 - (-2.0 * (n + 1.0) * wc(k - 1).imag())));
      }
    }
  }
  if (!tilde_doc_ok) {
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "documented tilde constants -4(n+1) Im w_n / -4(n+1) Re w_k "
                  "fail (worst %.2e); confirmed constants -2(n+1) Im w_n / "
                  "-2(n+1) Re w_k / -2(n+1) Im w_k pass",
                  tilde_doc_worst);
    out.warnings.push_back(buf);
  }
  out.pass = out.residual <= out.tol;
  out.info = "n=1..3, 100 pts: actions of the symmetry fields on the "
             "canonical log-potential";
  return out;
}

Outcome rescaled_gradient_field() {
  Outcome out;
  out.tol = 1e-9;
  for (int n : {1, 2, 3}) {
    Decomposition dec = decompose(w_field(Potential::psi0(n)));
    for (const auto& [tag, c] : dec.coeffs) {
      const double want = (tag == BasisTag::T()) ? -1.0 : 0.0;
      out.residual = std::max(out.residual, std::abs(c - want));
    }
    for (double r : {0.5, 2.0, 7.0}) {
      Decomposition decr =
          decompose(w_field(Potential::psi0(n).with_scale(r)));
      const double want = -std::pow(r, 1.0 / (n + 1.0));
      out.residual =
          std::max(out.residual, std::abs(decr.coeff(BasisTag::T()) - want));
    }
  }
  out.pass = out.residual <= out.tol;
  out.info = "n=1..3: field of the canonical potential is -T; scaling by r "
             "multiplies it by r^{1/(n+1)}";
  return out;
}

Outcome classification_roundtrip() {
  Outcome out;
  out.tol = 1e-6;
  const auto t0 = std::chrono::steady_clock::now();
  int verdicts = 0;
  for (int n : {1, 2, 3}) {
    Rng rng = suite_rng(1, "acceptance-classify", n);
    for (int rep = 0; rep < 20; ++rep) {
      Automorphism phi = Automorphism::identity(n);
      const int count = 2 + static_cast<int>(rng.next_u64() % 3);
      for (int gi = 0; gi < count; ++gi) {
        const int kind = static_cast<int>(rng.next_u64() % (n >= 2 ? 4 : 2));
        switch (kind) {
          case 0:
            phi.then(GenTs{rng.uniform(-1.0, 1.0)});
            break;
          case 1:
            phi.then(GenDil{rng.uniform(-0.5, 0.5)});
            break;
          case 2:
            phi.then(GenT2k{1 + static_cast<int>(rng.next_u64() % (n - 1)),
                            rng.uniform(-0.8, 0.8)});
            break;
          default:
            phi.then(GenT3k{1 + static_cast<int>(rng.next_u64() % (n - 1)),
                            rng.uniform(-0.8, 0.8)});
            break;
        }
      }
      const double r = std::exp(rng.uniform(-1.5, 1.5));
      ClassifyResult res =
          classify_potential(Potential::psi0(n).with_pre(phi).with_scale(r));
      if (res.kind != VerdictKind::Canonical) {
        out.info = std::string("unexpected verdict ") + verdict_name(res.kind);
        out.residual = 1.0;
        out.pass = false;
        return out;
      }
      ++verdicts;
      const double r_eff = r * canonical_scale(phi);
      out.residual =
          std::max(out.residual, std::abs(res.r - r_eff) / r_eff);
      // The pullback spread carries a tighter bound (1e-7); scale it so the
      // shared tolerance of 1e-6 enforces it.
      out.residual = std::max(out.residual, 10.0 * res.pullback_spread);
    }
  }
  const double secs = seconds_since(t0);
  out.pass = out.residual <= out.tol && secs < 30.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "n=1..3, 20 scaled compositions each (%d verdicts), "
                "%.2fs (limit 30s)",
                verdicts, secs);
  out.info = buf;
  return out;
}

Outcome shift_normalization() {
  Outcome out;
  out.tol = 1e-9;
  Rng rng(424242);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 3);
    CollapsedCoeffs cc = CollapsedCoeffs::zero(n);
    cc.a = rng.uniform(0.3, 2.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
    cc.b = rng.uniform(-2.0, 2.0);
    cc.c = rng.uniform(-2.0, 2.0);
    cc.d = rng.uniform(-2.0, 2.0);
    cc.g = rng.uniform(-2.0, 2.0);
    for (int j = 0; j < n - 2; ++j) {
      cc.e(j) = rng.uniform(-2.0, 2.0);
      cc.f(j) = rng.uniform(-2.0, 2.0);
    }
    const Shifts sh = solve_shifts(cc);
    const double s1 = choose_s1(cc, sh);
    const Automorphism flows = shift_flows(n, s1, sh);
    const Decomposition dec =
        decompose(pushforward(flows, cc.assemble_reduced()), false);
    out.residual = std::max(out.residual, std::abs(dec.coeff(BasisTag::T())));
    for (int k = 1; k < n; ++k) {
      out.residual =
          std::max(out.residual, std::abs(dec.coeff(BasisTag::T2(k))));
      out.residual =
          std::max(out.residual, std::abs(dec.coeff(BasisTag::T3(k))));
    }
    out.residual = std::max(out.residual, dec.residual);
  }
  out.pass = out.residual <= out.tol;
  out.info = "100 random reduced coefficient sets (n=2..4) with a leading "
             "component: the solved shifts remove T and every T2/T3";
  return out;
}

Outcome involution() {
  Outcome out;
  out.tol = 1e-9;
  double invol_res = 0.0;
  for (int n : {1, 2, 3}) {
    Rng rng = suite_rng(1, "acceptance-involution", n);
    Automorphism sig = Automorphism::identity(n);
    sig.then(GenSigma{});
    Potential flipped = Potential::psi0(n).with_pre(sig);
    for (int i = 0; i < 50; ++i) {
      CPoint w{sample_siegel(rng, n), Model::Siegel};
      invol_res = std::max(
          invol_res,
          (sigma_map(sigma_map(w.coords)) - w.coords).cwiseAbs().maxCoeff());
      out.residual = std::max(out.residual,
                              std::abs(diff_norm_sq(flipped, w) - (n + 1.0)));
      out.residual = std::max(
          out.residual,
          std::abs(re_apply(basis_field(BasisTag::D(), n), flipped, w) -
                   (n + 1.0)));
    }
  }
  out.pass = out.residual <= out.tol && invol_res <= 1e-12;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "n=1..3, 50 pts: involution squares to identity (%.1e), "
                "composed potential keeps the norm and flips the radial "
                "action to +(n+1)",
                invol_res);
  out.info = buf;
  return out;
}

Outcome constraint_chain() {
  Outcome out;
  out.tol = 1e-10;
  bool ok = true;
  std::string detail;
  for (int n : {1, 2, 3}) {
    // The canonical map passes.
    CayleyReport rep = cayley_constraint_report(MobiusMap::cayley(n));
    ok = ok && rep.is_cayley_up_to_rotation;

    // A last-coordinate rotation conjugate passes with the right rotation.
    const Complex lambda = std::polar(1.0, 0.8 + 0.3 * n);
    CMatrix p = CMatrix::Identity(n + 1, n + 1);
    p(n - 1, n - 1) = lambda;
    CayleyReport rrot = cayley_constraint_report(
        MobiusMap::cayley(n).conjugated(CMatrix(p.inverse())));
    ok = ok && rrot.is_cayley_up_to_rotation &&
         std::abs(rrot.rotation - lambda) < 1e-8;

    // Derivative determinant identity on 50 interior points.
    Rng rng = suite_rng(1, "acceptance-chain", n);
    MobiusMap c = MobiusMap::cayley(n);
    for (int i = 0; i < 50; ++i) {
      CVector z = sample_ball(rng, n);
      const Complex lhs =
          c.jacobian(z).determinant() *
          std::pow(Complex(1.0, 0.0) - z(n - 1), Complex(n + 1.0, 0.0));
      out.residual = std::max(out.residual, std::abs(lhs - 2.0));
    }

    // The identity map fails at the first stage.
    CayleyReport rid = cayley_constraint_report(MobiusMap::identity(n));
    ok = ok && !rid.is_cayley_up_to_rotation &&
         rid.first_failure == "base-point";
    if (rid.first_failure != "base-point")
      detail = " identity failed at '" + rid.first_failure + "'";

    // A sheared variant matches everything up to the linearity stage.
    if (n >= 2) {
      HoloMap sheared;
      sheared.target = Model::Siegel;
      sheared.apply = [n](const CVector& z) {
        CVector w = cayley(z);
        const Complex q = z(n - 1) * z(n - 1);
        for (int j = 0; j + 1 < n; ++j) w(j) += q;
        return w;
      };
      sheared.jacobian = [n](const CVector& z) {
        CMatrix j = cayley_jacobian(z);
        for (int r = 0; r + 1 < n; ++r) j(r, n - 1) += 2.0 * z(n - 1);
        return j;
      };
      CayleyReport rsh = cayley_constraint_report(sheared, n);
      ok = ok && !rsh.is_cayley_up_to_rotation &&
           rsh.first_failure == "linearity";
      if (rsh.first_failure != "linearity")
        detail += " shear failed at '" + rsh.first_failure + "'";
    }
  }
  out.pass = ok && out.residual <= out.tol;
  out.info = "n=1..3: chain verdicts and the derivative determinant "
             "identity at 50 pts" + detail;
  return out;
}

Outcome correction_residual() {
  Outcome out;
  out.tol = 1e-10;
  const int n = 2;
  Rng rng = suite_rng(1, "acceptance-correction", n);
  for (int rep = 0; rep < 50; ++rep) {
    HoloPoly f = HoloPoly::zero(n);
    for (int e1 = 0; e1 <= 2; ++e1)
      for (int e2 = 0; e1 + e2 <= 2; ++e2)
        f.add_term({e1, e2}, rng.disc(0.35));
    Potential p = Potential::psi0(n).with_correction(f);
    CPoint w{sample_siegel(rng, n), Model::Siegel};
    const double defect = diff_norm_sq(p, w) - (n + 1.0);
    out.residual = std::max(
        out.residual, std::abs(constant_norm_residual(f, w) - defect));
  }
  out.pass = out.residual <= out.tol;
  out.info = "n=2, 50 random degree-2 corrections at one point each: "
             "closed-form residual equals the sampled norm defect";
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    std::function<Outcome()> fn;
  };
  const std::vector<Entry> entries = {
      {"canonical-potential-norm", canonical_potential_norm},
      {"rescaled-metric-norm", rescaled_metric_norm},
      {"metric-inverse", metric_inverse},
      {"einstein-residual", einstein_residuals},
      {"pushforward-tables", pushforward_tables},
      {"grading-multiplicities", grading_multiplicities},
      {"log-potential-actions", potential_derivations},
      {"rescaled-gradient-field", rescaled_gradient_field},
      {"classification-roundtrip", classification_roundtrip},
      {"shift-normalization", shift_normalization},
      {"involution", involution},
      {"constraint-chain", constraint_chain},
      {"correction-residual", correction_residual},
  };

  int failures = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    Outcome out;
    try {
      out = entries[i].fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.info = std::string("exception: ") + e.what();
    }
    for (const std::string& warn : out.warnings)
      std::printf("WARN  %02zu %-26s %s\n", i + 1, entries[i].label,
                  warn.c_str());
    std::printf("%s  %02zu %-26s max residual %.3e (tol %.1e) | %s\n",
                out.pass ? "PASS" : "FAIL", i + 1, entries[i].label,
                out.residual, out.tol, out.info.c_str());
    if (!out.pass) ++failures;
  }
  std::printf("acceptance: %zu/%zu criteria passed\n",
              entries.size() - failures, entries.size());
  return failures;
}
