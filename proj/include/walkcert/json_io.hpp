#pragma once

// JSON documents for polynomials, walk inequalities, certificates,
// obstructions, search reports and spectral reports. Every number that must
// stay exact is written as a decimal-string rational.

#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "walkcert/certificates.hpp"
#include "walkcert/search.hpp"
#include "walkcert/spectral.hpp"

namespace walkcert {

using json = nlohmann::json;

namespace detail {

inline const json& require(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw input_error(std::string(what) + " JSON is missing \"" + key + "\"");
  return j.at(key);
}

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
  throw input_error("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

inline unsigned index_from_json(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw input_error("expected a nonnegative integer, got " + j.dump());
  return static_cast<unsigned>(j.get<long long>());
}

inline std::vector<unsigned> indices_from_json(const json& j) {
  if (!j.is_array()) throw input_error("expected an integer array, got " + j.dump());
  std::vector<unsigned> out;
  for (const auto& x : j) out.push_back(index_from_json(x));
  return out;
}

/// 1-based one-line notation in JSON, 0-based in memory.
inline std::vector<std::size_t> permutation_from_json(const json& j) {
  std::vector<std::size_t> out;
  for (unsigned x : indices_from_json(j)) {
    if (x == 0) throw input_error("permutations are 1-based");
    out.push_back(x - 1);
  }
  check_permutation(out);
  return out;
}

inline json permutation_to_json(const std::vector<std::size_t>& sigma) {
  json out = json::array();
  for (auto s : sigma) out.push_back(s + 1);
  return out;
}

}  // namespace detail

// --- Polynomial -------------------------------------------------------------

inline json to_json(const Polynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e.values()}, {"coef", c.get_str()}});
  return {{"k", f.num_vars()}, {"terms", terms}};
}

inline Polynomial polynomial_from_json(const json& j) {
  const json& kj = detail::require(j, "k", "polynomial");
  const unsigned k = detail::index_from_json(kj);
  if (k == 0) throw input_error("polynomial needs k >= 1");
  Polynomial f(k);
  const json& terms = detail::require(j, "terms", "polynomial");
  if (!terms.is_array()) throw input_error("polynomial \"terms\" must be an array");
  for (const auto& t : terms) {
    f.add_term(ExponentVector(detail::indices_from_json(detail::require(t, "exp", "term"))),
               detail::rational_from_json(detail::require(t, "coef", "term")));
  }
  return f;
}

// --- WalkInequality ---------------------------------------------------------

inline json to_json(const WalkInequality& w) {
  json terms = json::array();
  for (const auto& [idx, c] : w.terms()) terms.push_back({{"coef", c.get_str()}, {"indices", idx}});
  return {{"terms", terms}, {"text", w.str()}};
}

inline WalkInequality inequality_from_json(const json& j) {
  const json& terms = detail::require(j, "terms", "inequality");
  if (!terms.is_array() || terms.empty()) throw input_error("inequality \"terms\" must be a nonempty array");
  WalkInequality w;
  for (const auto& t : terms) {
    w.add_term(detail::indices_from_json(detail::require(t, "indices", "term")),
               detail::rational_from_json(detail::require(t, "coef", "term")));
  }
  return w;
}

// --- Obstruction ------------------------------------------------------------

inline json to_json(const Obstruction& o) {
  json j = {{"kind", kind_name(o.kind)}, {"detail", o.detail}};
  switch (o.kind) {
    case ObstructionKind::OddVertex:
    case ObstructionKind::NegativeVertexCoefficient:
      if (o.vertex) j["vertex"] = o.vertex->values();
      j["coefficient"] = o.coefficient.get_str();
      break;
    case ObstructionKind::OddDegree:
      j["degree"] = o.degree;
      break;
    case ObstructionKind::NegativeWitness: {
      json p = json::array();
      for (const auto& x : o.point) p.push_back(x.get_str());
      j["point"] = p;
      j["value"] = o.value.get_str();
      break;
    }
  }
  return j;
}

// --- Certificate ------------------------------------------------------------

inline json params_to_json(const CertificateParams& params) {
  return std::visit(
      [](const auto& p) -> json {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, SquareParams>) {
          return {{"alpha", p.alpha}, {"sigma", detail::permutation_to_json(p.sigma)}};
        } else if constexpr (std::is_same_v<P, SandwichParams>) {
          return {{"a", p.a}, {"b", p.b}, {"c", p.c}};
        } else if constexpr (std::is_same_v<P, AgmParams>) {
          return {{"alpha", p.alpha}};
        } else if constexpr (std::is_same_v<P, UnivariateParams>) {
          json a = json::array();
          for (const auto& x : p.a) a.push_back(x.get_str());
          return {{"k", p.k}, {"a", a}, {"tol", p.tol.get_str()}, {"bound", p.bound.get_str()},
                  {"root_bracket", p.root_bracket.get_str()}};
        } else {
          return {{"form", to_json(p.form)}};
        }
      },
      params);
}

/// "verified" is recomputed here, never copied from input.
inline json to_json(const Certificate& cert) {
  json sos = json::array();
  for (const auto& t : cert.sos) sos.push_back({{"coef", t.coef.get_str()}, {"poly", to_json(t.poly)}});
  const Verification v = verify(cert);
  return {{"kind", kind_name(cert.kind())},
          {"params", params_to_json(cert.params)},
          {"shift", cert.shift},
          {"base_poly", to_json(cert.base)},
          {"sos", sos},
          {"argument", cert.argument},
          {"inequality", to_json(cert.inequality())},
          {"verified", v.ok}};
}

inline Certificate certificate_from_json(const json& j) {
  const std::string kind = detail::require(j, "kind", "certificate").get<std::string>();
  const json& p = detail::require(j, "params", "certificate");
  Certificate cert;
  if (kind == "Square") {
    cert.params = SquareParams{detail::indices_from_json(detail::require(p, "alpha", "params")),
                               detail::permutation_from_json(detail::require(p, "sigma", "params"))};
  } else if (kind == "Sandwich") {
    cert.params = SandwichParams{detail::index_from_json(detail::require(p, "a", "params")),
                                 detail::index_from_json(detail::require(p, "b", "params")),
                                 detail::index_from_json(detail::require(p, "c", "params"))};
  } else if (kind == "AgmSos") {
    cert.params = AgmParams{detail::indices_from_json(detail::require(p, "alpha", "params"))};
  } else if (kind == "UnivariateMin") {
    UnivariateParams u;
    u.k = detail::index_from_json(detail::require(p, "k", "params"));
    for (const auto& x : detail::require(p, "a", "params")) u.a.push_back(detail::rational_from_json(x));
    u.tol = detail::rational_from_json(detail::require(p, "tol", "params"));
    u.bound = detail::rational_from_json(detail::require(p, "bound", "params"));
    u.root_bracket = detail::rational_from_json(detail::require(p, "root_bracket", "params"));
    cert.params = std::move(u);
  } else if (kind == "BinaryPsd") {
    cert.params = BinaryParams{polynomial_from_json(detail::require(p, "form", "params"))};
  } else {
    throw input_error("unknown certificate kind '" + kind + "'");
  }
  cert.base = polynomial_from_json(detail::require(j, "base_poly", "certificate"));
  if (j.contains("shift")) cert.shift = detail::index_from_json(j.at("shift"));
  if (j.contains("sos")) {
    for (const auto& t : j.at("sos")) {
      cert.sos.push_back({detail::rational_from_json(detail::require(t, "coef", "sos term")),
                          polynomial_from_json(detail::require(t, "poly", "sos term"))});
    }
  }
  if (j.contains("argument") && j.at("argument").is_string()) cert.argument = j.at("argument").get<std::string>();
  return cert;
}

// --- Search report ----------------------------------------------------------

inline json to_json(const SearchReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    json walks = json::array();
    for (const auto& w : v.walks) walks.push_back(w.get_str());
    violations.push_back({{"graph6", emit_graph6(v.graph)}, {"label", v.label}, {"value", v.value.get_str()},
                          {"walks", walks}});
  }
  json j = {{"inequality", to_json(r.inequality)},
            {"corpus", r.corpus},
            {"graphs_tested", r.graphs_tested},
            {"graphs_skipped", r.graphs_skipped},
            {"violations", violations},
            {"elapsed_seconds", r.elapsed_seconds}};
  j["min_value"] = r.min_value ? json(r.min_value->get_str()) : json(nullptr);
  j["max_value"] = r.max_value ? json(r.max_value->get_str()) : json(nullptr);
  return j;
}

// --- Spectral ---------------------------------------------------------------

inline std::string real_string(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline json spectral_report(const SpectralData& s, const Graph& g) {
  json eig = json::array(), weights = json::array();
  for (double x : s.eigenvalues) eig.push_back(real_string(x));
  for (double x : s.weights) weights.push_back(real_string(x));
  const auto res = spectral_residuals(s, g);
  return {{"eigenvalues", eig},
          {"weights", weights},
          {"residuals", {{"sum_mu2", real_string(res.sum_weights)}, {"w1", real_string(res.first_moment)}}}};
}

}  // namespace walkcert
