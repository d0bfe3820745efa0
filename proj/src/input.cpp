#include "input.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace kepot {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(Err::InvalidConfig, "at " + where + ": " + what);
}

double require_number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

int require_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

Complex read_complex(const json& j, const std::string& where) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_object()) {
    double re = 0.0, im = 0.0;
    for (const auto& [key, val] : j.items()) {
      if (key == "re")
        re = require_number(val, where + ".re");
      else if (key == "im")
        im = require_number(val, where + ".im");
      else
        fail(where, "unknown key \"" + key + "\" in complex entry");
    }
    return Complex(re, im);
  }
  fail(where, "expected a number or {\"re\":..,\"im\":..}");
}

CMatrix read_matrix(const json& j, int rows, int cols,
                    const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of complex entries");
  if (static_cast<int>(j.size()) != rows * cols)
    fail(where, "expected " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(j.size()));
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k)
      m(i, k) = read_complex(j[i * cols + k],
                             where + "[" + std::to_string(i * cols + k) + "]");
  return m;
}

CVector read_vector(const json& j, int len, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of complex entries");
  if (static_cast<int>(j.size()) != len)
    fail(where, "expected " + std::to_string(len) + " entries, got " +
                    std::to_string(j.size()));
  CVector v(len);
  for (int i = 0; i < len; ++i)
    v(i) = read_complex(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Generator read_generator(const json& j, int n, const std::string& where) {
  if (!j.is_object()) fail(where, "expected a generator object");
  if (!j.contains("type")) fail(where, "missing \"type\"");
  if (!j["type"].is_string()) fail(where + ".type", "expected a string");
  const std::string type = j["type"].get<std::string>();

  auto get_s = [&]() -> double {
    if (!j.contains("s")) fail(where, "\"" + type + "\" requires \"s\"");
    return require_number(j["s"], where + ".s");
  };
  auto get_k = [&]() -> int {
    if (!j.contains("k")) fail(where, "\"" + type + "\" requires \"k\"");
    int k = require_int(j["k"], where + ".k");
    if (k < 1 || k > std::max(n - 1, 1))
      fail(where + ".k", "index out of range for dimension " +
                             std::to_string(n));
    return k;
  };

  if (type == "Ts") return GenTs{get_s()};
  if (type == "T2") {
    int k = get_k();
    return GenT2k{k, get_s()};
  }
  if (type == "T3") {
    int k = get_k();
    return GenT3k{k, get_s()};
  }
  if (type == "dilation") return GenDil{get_s()};
  if (type == "swap") return GenPerm1k{get_k()};
  if (type == "sigma") return GenSigma{};
  if (type == "unitary") {
    if (n < 2) fail(where, "\"unitary\" requires dimension n >= 2");
    if (!j.contains("entries")) fail(where, "\"unitary\" requires \"entries\"");
    // The block acts on the transverse coordinates w_1..w_{n-1}.
    return GenUnitary{read_matrix(j["entries"], n - 1, n - 1, where + ".entries")};
  }
  if (type == "affine") {
    if (!j.contains("matrix")) fail(where, "\"affine\" requires \"matrix\"");
    CMatrix a = read_matrix(j["matrix"], n, n, where + ".matrix");
    CVector b = CVector::Zero(n);
    if (j.contains("offset")) b = read_vector(j["offset"], n, where + ".offset");
    return GenAffine{a, b};
  }
  fail(where + ".type", "unknown generator type \"" + type + "\"");
}

HoloPoly read_poly(const json& j, int n, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of term records");
  HoloPoly p = HoloPoly::zero(n);
  for (size_t t = 0; t < j.size(); ++t) {
    const std::string at = where + "[" + std::to_string(t) + "]";
    const json& term = j[t];
    if (!term.is_object()) fail(at, "expected {\"exponents\":..,\"re\":..}");
    if (!term.contains("exponents")) fail(at, "missing \"exponents\"");
    const json& ex = term["exponents"];
    if (!ex.is_array() || static_cast<int>(ex.size()) != n)
      fail(at + ".exponents", "expected " + std::to_string(n) + " exponents");
    std::vector<int> exps(n);
    for (int i = 0; i < n; ++i) {
      exps[i] = require_int(ex[i], at + ".exponents[" + std::to_string(i) + "]");
      if (exps[i] < 0) fail(at + ".exponents", "negative exponent");
    }
    double re = 0.0, im = 0.0;
    if (term.contains("re")) re = require_number(term["re"], at + ".re");
    if (term.contains("im")) im = require_number(term["im"], at + ".im");
    p.add_term(exps, Complex(re, im));
  }
  return p;
}

ParsedInput parse_mobius(const json& doc) {
  if (!doc.contains("n")) fail("document", "missing \"n\"");
  int n = require_int(doc["n"], "n");
  if (n < 1 || n > 16) fail("n", "dimension must be between 1 and 16");
  CMatrix a = read_matrix(doc["mobius"], n + 1, n + 1, "mobius");
  ParsedInput out;
  out.kind = ParsedInput::Kind::Mobius;
  out.mobius = MobiusMap::from_matrix(a);
  return out;
}

ParsedInput parse_potential(const json& doc) {
  if (!doc.contains("n")) fail("document", "missing \"n\"");
  int n = require_int(doc["n"], "n");
  if (n < 1 || n > 16) fail("n", "dimension must be between 1 and 16");

  std::string base = "psi0";
  if (doc.contains("base")) {
    if (!doc["base"].is_string()) fail("base", "expected \"psi0\" or \"phi0\"");
    base = doc["base"].get<std::string>();
    if (base != "psi0" && base != "phi0")
      fail("base", "expected \"psi0\" or \"phi0\", got \"" + base + "\"");
  }

  Potential p = (base == "psi0") ? Potential::psi0(n) : Potential::phi0(n);

  if (doc.contains("generators")) {
    const json& gens = doc["generators"];
    if (!gens.is_array()) fail("generators", "expected an array");
    Automorphism pre = Automorphism::identity(n);
    for (size_t i = 0; i < gens.size(); ++i)
      pre = pre.then(read_generator(gens[i], n,
                                    "generators[" + std::to_string(i) + "]"));
    p = p.with_pre(pre);
  }

  if (doc.contains("f")) p = p.with_correction(read_poly(doc["f"], n, "f"));

  if (doc.contains("r")) {
    double r = require_number(doc["r"], "r");
    if (!(r > 0.0)) fail("r", "scale must be positive");
    p = p.with_scale(r);
  }

  if (doc.contains("kappa")) {
    double kappa = require_number(doc["kappa"], "kappa");
    if (!(kappa > 0.0)) fail("kappa", "kappa must be positive");
    p = p.with_kappa(kappa);
  }

  const char* known[] = {"n", "base", "generators", "f", "r", "kappa"};
  for (const auto& [key, val] : doc.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) fail("document", "unknown key \"" + key + "\"");
  }

  ParsedInput out;
  out.kind = ParsedInput::Kind::Potential;
  out.potential = p;
  return out;
}

}  // namespace

ParsedInput parse_input(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    // e.what() carries the byte offset of the syntax error.
    throw Error(Err::InvalidConfig, e.what());
  }
  if (!doc.is_object()) fail("document", "expected a top-level object");
  if (doc.contains("mobius")) return parse_mobius(doc);
  return parse_potential(doc);
}

}  // namespace kepot
