#include "report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace kepot {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out;
}

std::string join(const std::vector<int>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out;
}

std::string num(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

ordered_json residuals_json(const ClassifyResult& c) {
  ordered_json r;
  r["norm_mean"] = c.norm_mean;
  r["norm_spread"] = c.norm_spread;
  r["w_fit"] = c.fit_residual;
  r["algebra"] = c.decompose_residual;
  r["tilde_mass"] = c.tilde_mass;
  r["reduction"] = c.reduction_residual;
  r["kill"] = c.kill_residual;
  r["final_spread"] = c.pullback_spread;
  return r;
}

}  // namespace

double tolerance_for(const RunConfig& cfg, const std::string& suite,
                     const std::string& check, double fallback) {
  auto it = cfg.tol_overrides.find(suite + "/" + check);
  if (it != cfg.tol_overrides.end()) return it->second;
  it = cfg.tol_overrides.find(check);
  if (it != cfg.tol_overrides.end()) return it->second;
  return fallback;
}

bool Report::passed() const {
  if (kind == Kind::Run) {
    for (const CheckResult& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
  return true;  // a produced verdict is a successful run
}

std::string Report::render_text() const {
  std::ostringstream out;
  out << "kepot " << version;
  if (kind == Kind::Run) {
    out << " - identity suites\n";
    out << "config: seed=" << config.seed << " samples=" << config.samples
        << " dims=[" << join(config.dims) << "] suites=[" << join(config.suites)
        << "]\n";
    std::string current;
    int passed_count = 0;
    for (const CheckResult& c : checks) {
      std::string header = c.suite + " (n=" + std::to_string(c.n) + ")";
      if (header != current) {
        out << "\n" << header << "\n";
        current = header;
      }
      out << "  " << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(30)
          << c.name << " residual " << std::setw(12) << num(c.max_residual)
          << " tol " << std::setw(10) << num(c.tolerance) << " samples "
          << std::setw(6) << c.samples << " | " << c.anchor;
      if (!c.note.empty()) out << "  [" << c.note << "]";
      out << "\n";
      if (c.pass) ++passed_count;
    }
    if (!deviations.empty()) {
      out << "\ndeviations (documented statements arbitrated by the "
             "oracle):\n";
      for (const Deviation& d : deviations) {
        out << "  WARN " << d.suite << "/" << d.check << " (n=" << d.n
            << "): documented \"" << d.documented << "\" residual "
            << num(d.documented_residual) << "; confirmed \"" << d.confirmed
            << "\" residual " << num(d.confirmed_residual) << "\n";
      }
    }
    out << "\nsummary: " << passed_count << "/" << checks.size()
        << " checks passed; " << deviations.size()
        << " deviations documented\n";
    return out.str();
  }
  if (kind == Kind::Classify && classify.has_value()) {
    const ClassifyResult& c = *classify;
    out << " - classification (n=" << c.n << ")\n";
    out << "verdict: " << verdict_name(c.kind) << "\n";
    if (c.kind == VerdictKind::Canonical) {
      out << "r: " << num(c.r) << "\n";
      out << "phi: " << classify_phi.value_or("identity") << "\n";
    }
    out << "norm: mean " << num(c.norm_mean) << " spread "
        << num(c.norm_spread) << "\n";
    out << "residuals: w-fit " << num(c.fit_residual) << " | algebra "
        << num(c.decompose_residual) << " | tilde " << num(c.tilde_mass)
        << " | reduction " << num(c.reduction_residual) << " | kill "
        << num(c.kill_residual) << " | final-spread "
        << num(c.pullback_spread) << "\n";
    if (!c.tilde_components.empty()) {
      out << "involution components:";
      for (const auto& [name, v] : c.tilde_components) {
        out << " " << name << "=" << num(v);
      }
      out << "\n";
    }
    out << "detail: " << c.detail << "\n";
    return out.str();
  }
  if (kind == Kind::Cayley && cayley.has_value()) {
    const CayleyReport& c = *cayley;
    out << " - constraint chain (n=" << cayley_n << ")\n";
    for (const ConstraintStep& s : c.steps) {
      out << "  " << (s.pass ? "PASS " : "FAIL ") << std::left << std::setw(14)
          << s.name << " residual " << std::setw(12) << num(s.residual)
          << " | " << s.detail << "\n";
    }
    if (c.is_cayley_up_to_rotation) {
      out << "verdict: CayleyUpToRotation (rotation " << num(c.rotation.real())
          << " + " << num(c.rotation.imag()) << "i)\n";
    } else {
      out << "verdict: failed at " << c.first_failure << "\n";
    }
    return out.str();
  }
  out << " - empty report\n";
  return out.str();
}

std::string Report::render_structured() const {
  ordered_json j;
  j["tool"] = "kepot";
  j["version"] = version;
  if (kind == Kind::Run) {
    j["kind"] = "run";
    ordered_json cfg;
    cfg["seed"] = config.seed;
    cfg["samples"] = config.samples;
    cfg["dims"] = config.dims;
    cfg["suites"] = config.suites;
    ordered_json tols = ordered_json::object();
    for (const auto& [k, v] : config.tol_overrides) tols[k] = v;
    cfg["tol_overrides"] = tols;
    cfg["has_input"] = config.input_json.has_value();
    j["config"] = cfg;

    ordered_json arr = ordered_json::array();
    int passed_count = 0;
    for (const CheckResult& c : checks) {
      ordered_json e;
      e["suite"] = c.suite;
      e["name"] = c.name;
      e["anchor"] = c.anchor;
      e["n"] = c.n;
      e["samples"] = c.samples;
      e["max_residual"] = c.max_residual;
      e["tolerance"] = c.tolerance;
      e["pass"] = c.pass;
      if (!c.note.empty()) e["note"] = c.note;
      arr.push_back(e);
      if (c.pass) ++passed_count;
    }
    j["checks"] = arr;

    ordered_json devs = ordered_json::array();
    for (const Deviation& d : deviations) {
      ordered_json e;
      e["suite"] = d.suite;
      e["check"] = d.check;
      e["n"] = d.n;
      e["documented"] = d.documented;
      e["confirmed"] = d.confirmed;
      e["documented_residual"] = d.documented_residual;
      e["confirmed_residual"] = d.confirmed_residual;
      devs.push_back(e);
    }
    j["deviations"] = devs;

    ordered_json sum;
    sum["checks"] = checks.size();
    sum["passed"] = passed_count;
    sum["failed"] = static_cast<int>(checks.size()) - passed_count;
    sum["deviations"] = deviations.size();
    sum["all_pass"] = passed();
    j["summary"] = sum;
  } else if (kind == Kind::Classify && classify.has_value()) {
    const ClassifyResult& c = *classify;
    j["kind"] = "classify";
    j["n"] = c.n;
    j["verdict"] = verdict_name(c.kind);
    j["residuals"] = residuals_json(c);
    if (c.kind == VerdictKind::Canonical) {
      j["r"] = c.r;
      j["phi"] = classify_phi.value_or("identity");
    }
    if (!c.tilde_components.empty()) {
      ordered_json tc = ordered_json::object();
      for (const auto& [name, v] : c.tilde_components) tc[name] = v;
      j["involution_components"] = tc;
    }
    j["detail"] = c.detail;
  } else if (kind == Kind::Cayley && cayley.has_value()) {
    const CayleyReport& c = *cayley;
    j["kind"] = "constraint-chain";
    j["n"] = cayley_n;
    ordered_json steps = ordered_json::array();
    for (const ConstraintStep& s : c.steps) {
      ordered_json e;
      e["name"] = s.name;
      e["pass"] = s.pass;
      e["residual"] = s.residual;
      e["detail"] = s.detail;
      steps.push_back(e);
    }
    j["steps"] = steps;
    j["cayley_up_to_rotation"] = c.is_cayley_up_to_rotation;
    ordered_json rot;
    rot["re"] = c.rotation.real();
    rot["im"] = c.rotation.imag();
    j["rotation"] = rot;
    j["first_failure"] = c.first_failure;
  }
  return j.dump(2) + "\n";
}

}  // namespace kepot
