#pragma once

// Command-line front end. run() parses argv, executes one subcommand and
// returns the JSON payload with the exit code:
//   0  success / inequality holds
//   1  a violation, refutation or obstruction was found
//   2  usage or input error

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "walkcert/json_io.hpp"

namespace walkcert::cli {

struct CommandResult {
  int exit_code = 0;
  json payload;
  std::string text;                      // help output, printed instead of JSON
  std::vector<std::string> diagnostics;  // stderr lines
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw input_error("malformed JSON in '" + path + "': " + e.what());
  }
}

/// A graph6 string, a path to a graph6 or edge-list file, or a
/// fixed-size family expression such as "path:3" or "union(complete:3,star:5)".
inline Graph resolve_graph(const std::string& positional, const std::string& family,
                           std::vector<std::string>& diagnostics) {
  if (!family.empty()) {
    if (!positional.empty()) throw input_error("give either a graph argument or --family, not both");
    return FamilySpec::parse(family).build();
  }
  if (positional.empty()) throw input_error("a graph argument or --family is required");
  std::error_code ec;
  if (std::filesystem::is_regular_file(positional, ec)) {
    const std::string text = read_file(positional);
    std::istringstream in(text);
    std::string first;
    in >> first;
    if (first == "n") return parse_edge_list(text, &diagnostics);
    return parse_graph6(first);
  }
  return parse_graph6(positional);
}

inline std::vector<unsigned> parse_index_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Rational q = parse_rational(item);
    if (q < 0 || q.get_den() != 1 || q > 1000000) throw input_error("expected a nonnegative integer, got '" + item + "'");
    out.push_back(static_cast<unsigned>(q.get_num().get_ui()));
  }
  if (out.empty()) throw input_error("empty integer list");
  return out;
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw input_error("empty rational list");
  return out;
}

/// "5" or "2..6"
inline std::pair<std::size_t, std::size_t> parse_size_range(const std::string& text) {
  if (auto dots = text.find(".."); dots != std::string::npos) {
    auto lo = parse_index_list(text.substr(0, dots));
    auto hi = parse_index_list(text.substr(dots + 2));
    if (lo.size() != 1 || hi.size() != 1) throw input_error("malformed range '" + text + "'");
    return {lo[0], hi[0]};
  }
  auto v = parse_index_list(text);
  if (v.size() != 1) throw input_error("malformed size '" + text + "'");
  return {v[0], v[0]};
}

inline std::size_t exhaustive_cap(bool allow_eight) {
  std::size_t cap = default_max_order;
  if (const char* env = std::getenv("WALKCERT_MAX_N"); env && *env) {
    auto v = parse_index_list(env);
    if (v.size() != 1) throw input_error("WALKCERT_MAX_N must be a single integer");
    cap = v[0];
  }
  if (allow_eight) cap = std::max<std::size_t>(cap, 8);
  return cap;
}

/// Polynomial JSON ({"k", "terms": [{"exp"...}]}) or inequality JSON
/// ({"terms": [{"indices"...}]}).
inline Polynomial polynomial_from_any(const json& j) {
  if (j.contains("k")) return polynomial_from_json(j);
  return as_polynomial(inequality_from_json(j));
}

inline CommandResult error_result(const std::string& message) {
  return {2, json{{"error", message}}, {}, {message}};
}

inline CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Certify and refute inequalities between walk counts of graphs", "walkcert"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  CommandResult result;
  std::function<void()> action;

  // walks
  std::string graph_arg, family_arg;
  std::size_t max_length = 10;
  auto* walks = app.add_subcommand("walks", "Exact walk counts w_0..w_K");
  walks->add_option("graph", graph_arg, "graph6 string or graph file");
  walks->add_option("--family", family_arg, "named graph, e.g. path:3");
  walks->add_option("--max", max_length, "largest walk length K");
  walks->callback([&] {
    action = [&] {
      const Graph g = resolve_graph(graph_arg, family_arg, result.diagnostics);
      json w = json::array();
      for (const auto& x : walk_counts(g, max_length).counts) w.push_back(x.get_str());
      result.payload = {{"graph6", emit_graph6(g)}, {"w", w}};
    };
  });

  // check
  std::string ineq_path;
  auto* check = app.add_subcommand("check", "Evaluate an inequality on one graph");
  check->add_option("inequality", ineq_path, "inequality JSON file")->required();
  check->add_option("graph", graph_arg, "graph6 string or graph file");
  check->add_option("--family", family_arg, "named graph, e.g. path:3");
  check->callback([&] {
    action = [&] {
      const WalkInequality ineq = inequality_from_json(read_json_file(ineq_path));
      const Graph g = resolve_graph(graph_arg, family_arg, result.diagnostics);
      const WalkTable table = walk_counts(g, ineq.max_index());
      const Rational value = evaluate_inequality(ineq, table);
      json violations = json::array();
      if (value < 0) violations.push_back({{"graph6", emit_graph6(g)}, {"value", value.get_str()}});
      result.payload = {{"inequality", to_json(ineq)},
                        {"graph6", emit_graph6(g)},
                        {"value", value.get_str()},
                        {"holds", value >= 0},
                        {"violations", violations}};
      result.exit_code = value < 0 ? 1 : 0;
    };
  });

  // search
  std::string exhaustive_arg, search_family, range_arg, graphs_file;
  bool regular_only = false, stop_at_first = false, allow_eight = false;
  std::size_t jobs = 1;
  auto* search = app.add_subcommand("search", "Search a corpus for violations");
  search->add_option("inequality", ineq_path, "inequality JSON file")->required();
  search->add_option("--exhaustive", exhaustive_arg, "all labeled graphs on n nodes (n or lo..hi)");
  search->add_option("--family", search_family, "family expression, e.g. union(complete:3,star:m)");
  search->add_option("--range", range_arg, "variable range for --family, e.g. m=1..10");
  search->add_option("--graphs", graphs_file, "file with one graph6 string per line");
  search->add_flag("--regular-only", regular_only, "only test regular graphs");
  search->add_flag("--stop-at-first", stop_at_first, "stop at the first violation");
  search->add_flag("--allow-n8", allow_eight, "permit exhaustive search with n = 8");
  search->add_option("--jobs", jobs, "worker threads for exhaustive search");
  search->callback([&] {
    action = [&] {
      const WalkInequality ineq = inequality_from_json(read_json_file(ineq_path));
      const int chosen = !exhaustive_arg.empty() + !search_family.empty() + !graphs_file.empty();
      if (chosen != 1) throw input_error("choose exactly one corpus: --exhaustive, --family or --graphs");
      Corpus corpus;
      if (!exhaustive_arg.empty()) {
        auto [lo, hi] = parse_size_range(exhaustive_arg);
        corpus = ExhaustiveCorpus{lo, hi, exhaustive_cap(allow_eight)};
      } else if (!search_family.empty()) {
        FamilySpec spec = FamilySpec::parse(search_family);
        FamilyScanCorpus scan{spec, "", 0, 0};
        if (range_arg.empty()) {
          if (!spec.variables().empty()) throw input_error("--family with a variable needs --range var=lo..hi");
          scan.variable = "_";
        } else {
          auto eq = range_arg.find('=');
          if (eq == std::string::npos) throw input_error("--range must look like var=lo..hi");
          scan.variable = range_arg.substr(0, eq);
          std::tie(scan.lo, scan.hi) = parse_size_range(range_arg.substr(eq + 1));
        }
        corpus = std::move(scan);
      } else {
        GraphListCorpus list;
        list.description = "graph list " + graphs_file;
        std::istringstream in(read_file(graphs_file));
        std::string line;
        while (std::getline(in, line)) {
          if (line.empty() || line[0] == '#') continue;
          list.graphs.push_back(parse_graph6(line));
          list.labels.push_back(line);
        }
        corpus = std::move(list);
      }
      SearchOptions options{stop_at_first, regular_only, std::max<std::size_t>(1, jobs)};
      const SearchReport report = search_counterexamples(ineq, corpus, options);
      result.payload = to_json(report);
      result.exit_code = report.violations.empty() ? 0 : 1;
    };
  });

  // certify
  auto* certify = app.add_subcommand("certify", "Build an exactly verified certificate");
  certify->require_subcommand(1);
  std::string alpha_arg, sigma_arg, beta_arg, coeff_arg, tol_arg = "1/1000000", poly_path;
  unsigned pa = 0, pb = 0, pc = 0, shift = 0, uk = 1;

  auto emit_certificate = [&](const Certificate& cert) {
    result.payload = {{"certificate", to_json(cert)}, {"inequality", to_json(cert.inequality())}};
  };

  auto* sq = certify->add_subcommand("square", "square certificate for the symmetric family");
  sq->add_option("--alpha", alpha_arg, "exponents, e.g. 0,1,2")->required();
  sq->add_option("--sigma", sigma_arg, "1-based permutation, e.g. 2,3,1")->required();
  sq->add_option("--shift", shift, "raise every walk index by 2*shift");
  sq->callback([&] {
    action = [&] {
      std::vector<std::size_t> sigma;
      for (unsigned s : parse_index_list(sigma_arg)) {
        if (s == 0) throw input_error("--sigma is 1-based");
        sigma.push_back(s - 1);
      }
      emit_certificate(shift_certificate(square_certificate(parse_index_list(alpha_arg), sigma), shift));
    };
  });

  auto* sw = certify->add_subcommand("sandwich", "factorization certificate for w_{2a+c} w_{2(a+b)+c} <= w_{2a} w_{2(a+b+c)}");
  sw->add_option("--a", pa)->required();
  sw->add_option("--b", pb)->required();
  sw->add_option("--c", pc)->required();
  sw->add_option("--shift", shift, "raise every walk index by 2*shift");
  sw->callback([&] { action = [&] { emit_certificate(shift_certificate(sandwich_certificate(pa, pb, pc), shift)); }; });

  auto* agm = certify->add_subcommand("agm", "sum-of-squares certificate for prod w_{alpha_i} <= w_0^{k-1} w_{|alpha|}");
  agm->add_option("--alpha", alpha_arg, "exponents with even sum")->required();
  agm->add_option("--shift", shift, "raise every walk index by 2*shift");
  agm->callback([&] { action = [&] { emit_certificate(shift_certificate(agm_sos(parse_index_list(alpha_arg)), shift)); }; });

  auto* two = certify->add_subcommand("two-factor", "decide w_{a1} w_{a2} <= w_{b1} w_{b2} via binary psd forms");
  two->add_option("--alpha", alpha_arg, "two indices, e.g. 3,5")->required();
  two->add_option("--beta", beta_arg, "two indices, e.g. 2,6")->required();
  two->callback([&] {
    action = [&] {
      auto alpha = parse_index_list(alpha_arg);
      auto beta = parse_index_list(beta_arg);
      if (alpha.size() != 2 || beta.size() != 2) throw input_error("--alpha and --beta take exactly two indices");
      auto r = two_factor_characterize({alpha[0], alpha[1]}, {beta[0], beta[1]});
      if (auto* ok = std::get_if<TwoFactorParams>(&r)) {
        result.payload = {{"params", {{"a", ok->a}, {"b", ok->b}, {"c", ok->c}}},
                          {"certificate", to_json(ok->certificate)},
                          {"inequality", to_json(ok->certificate.inequality())}};
      } else {
        result.payload = {{"refutation", to_json(std::get<Obstruction>(r))}};
        result.exit_code = 1;
      }
    };
  });

  auto* uni = certify->add_subcommand("univariate", "w_{2k} - L w_0 >= sum_j a_j w_{2k-j} from a certified minimum");
  uni->add_option("--k", uk)->required();
  uni->add_option("--a", coeff_arg, "a_1..a_{2k-1}, comma separated")->required();
  uni->add_option("--tol", tol_arg, "tolerance for the lower bound (rational or decimal)");
  uni->callback([&] {
    action = [&] { emit_certificate(univariate_certificate(uk, parse_rational_list(coeff_arg), parse_rational(tol_arg))); };
  });

  auto* bin = certify->add_subcommand("binary", "exact psd decision for a binary form");
  bin->add_option("polynomial", poly_path, "polynomial JSON file")->required();
  bin->callback([&] {
    action = [&] {
      auto decision = binary_psd_decide(polynomial_from_json(read_json_file(poly_path)));
      if (auto* cert = std::get_if<Certificate>(&decision)) {
        emit_certificate(*cert);
      } else {
        result.payload = {{"refutation", to_json(std::get<Obstruction>(decision))}};
        result.exit_code = 1;
      }
    };
  });

  // verify
  std::string cert_path;
  auto* ver = app.add_subcommand("verify", "Re-verify a certificate JSON document");
  ver->add_option("certificate", cert_path)->required();
  ver->callback([&] {
    action = [&] {
      const Certificate cert = certificate_from_json(read_json_file(cert_path));
      const Verification v = verify(cert);
      result.payload = {{"verified", v.ok}, {"inequality", to_json(cert.inequality())}};
      if (!v.ok) {
        result.payload["refutation"] = v.detail;
        result.exit_code = 1;
      }
    };
  });

  // obstruct
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  auto* obs = app.add_subcommand("obstruct", "Reasons no psd symmetrization can certify the candidate");
  obs->add_option("candidate", poly_path, "inequality or polynomial JSON file")->required();
  obs->add_option("--sample", samples, "also search this many random rational points for a negative value");
  obs->add_option("--seed", seed, "seed for --sample");
  obs->callback([&] {
    action = [&] {
      const Polynomial f = polynomial_from_any(read_json_file(poly_path));
      auto found = psd_obstructions(f);
      if (samples > 0) {
        if (auto w = sample_negative_witness(f, samples, seed)) found.push_back(*w);
      }
      json list = json::array();
      for (const auto& o : found) list.push_back(to_json(o));
      result.payload = {{"polynomial", to_json(f)}, {"symmetrized", to_json(symmetrize(f))}, {"obstructions", list}};
      if (!found.empty()) result.payload["refutation"] = list.front();
      result.exit_code = found.empty() ? 0 : 1;
    };
  });

  // spectral
  std::string prop_path;
  auto* spec = app.add_subcommand("spectral", "Eigenvalues and all-ones weights of the adjacency matrix");
  spec->add_option("graph", graph_arg, "graph6 string or graph file");
  spec->add_option("--family", family_arg, "named graph, e.g. path:3");
  spec->add_option("--verify-prop31", prop_path, "polynomial JSON: check the symmetrization identity");
  spec->callback([&] {
    action = [&] {
      const Graph g = resolve_graph(graph_arg, family_arg, result.diagnostics);
      const SpectralData s = spectral_decompose(g);
      result.payload = spectral_report(s, g);
      if (!prop_path.empty()) {
        const Polynomial f = polynomial_from_json(read_json_file(prop_path));
        result.payload["prop31_residual"] = real_string(symmetrization_identity_residual(f, g, s));
      }
    };
  });

  // symmetrize
  auto* sym = app.add_subcommand("symmetrize", "Sum of a polynomial over all variable permutations");
  sym->add_option("polynomial", poly_path)->required();
  sym->callback([&] {
    action = [&] {
      const Polynomial f = polynomial_from_json(read_json_file(poly_path));
      result.payload = {{"symmetrized", to_json(symmetrize(f))}};
    };
  });

  // newton
  auto* newton = app.add_subcommand("newton", "Newton polytope vertex test");
  newton->add_option("polynomial", poly_path)->required();
  newton->callback([&] {
    action = [&] {
      const Polynomial f = polynomial_from_json(read_json_file(poly_path));
      const NewtonCheck check = newton_vertex_check(f);
      json vertices = json::array();
      for (const auto& v : check.vertices) vertices.push_back(v.values());
      result.payload = {{"vertices", vertices}, {"result", check.passed() ? "pass" : "refuted"}};
      if (!check.passed()) {
        const auto& r = check.refutations.front();
        result.payload["refutation"] = {
            {"vertex", r.vertex.values()},
            {"coefficient", r.coefficient.get_str()},
            {"reason", r.defect == VertexDefect::odd_coordinate ? "odd coordinate" : "negative coefficient"}};
        result.exit_code = 1;
      }
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!action) return error_result("no subcommand selected");
    action();
    return result;
  } catch (const CLI::CallForHelp&) {
    return {0, json(), app.help(), {}};
  } catch (const CLI::CallForAllHelp&) {
    return {0, json(), app.help("", CLI::AppFormatMode::All), {}};
  } catch (const CLI::ParseError& e) {
    return error_result(e.what());
  } catch (const input_error& e) {
    return error_result(e.what());
  } catch (const json::exception& e) {
    return error_result(std::string("JSON error: ") + e.what());
  } catch (const internal_error& e) {
    return error_result(std::string("internal error: ") + e.what());
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
}

}  // namespace walkcert::cli
