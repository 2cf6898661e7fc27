// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "walkcert/walkcert.hpp"

using namespace walkcert;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void run_criterion(int id, const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, detail] = body();
    report(id, name, ok, detail);
  } catch (const std::exception& e) {
    report(id, name, false, std::string("exception: ") + e.what());
  }
}

/// Calls fn(graph, walk table up to K) for every labeled graph with n in [1, max_n].
template <class Fn>
void for_all_graphs(std::size_t max_n, std::size_t max_k, Fn&& fn) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    LabeledGraphs(n).for_each([&](std::uint64_t, const Graph& g) { fn(g, walk_counts(g, max_k)); });
  }
}

std::size_t jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int main() {
  // 1 ---------------------------------------------------------------------
  run_criterion(1, "walk counts match brute-force node sequences, n <= 5, K <= 5", [] {
    const auto t0 = Clock::now();
    std::size_t graphs = 0, mismatches = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
      LabeledGraphs(n).for_each([&](std::uint64_t, const Graph& g) {
        ++graphs;
        const auto brute = oracle::brute_force_walks(oracle::adjacency(g), 5);
        const auto ours = walk_counts(g, 5);
        for (std::size_t k = 0; k <= 5; ++k)
          if (ours[k] != Integer(std::to_string(brute[k]))) ++mismatches;
      });
    }
    const double secs = seconds_since(t0);
    return std::pair{mismatches == 0 && secs < 60.0, std::to_string(graphs) + " graphs, " + std::to_string(mismatches) +
                                                         " mismatches, " + std::to_string(secs) + " s"};
  });

  // 2 ---------------------------------------------------------------------
  run_criterion(2, "spectral walk counts agree with exact counts, n <= 6, k <= 12", [] {
    double worst = 0.0;
    std::size_t graphs = 0;
    for_all_graphs(6, 12, [&](const Graph& g, const WalkTable& t) {
      ++graphs;
      const auto s = spectral_decompose(g);
      const auto approx = walk_counts_spectral(s, 12);
      for (std::size_t k = 0; k <= 12; ++k) {
        const double exact = t[k].get_d();
        worst = std::max(worst, std::abs(approx[k] - exact) / std::max(1.0, exact));
      }
    });
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu graphs, max relative error %.3g", graphs, worst);
    return std::pair{worst <= 1e-8, std::string(buf)};
  });

  // 3 ---------------------------------------------------------------------
  run_criterion(3, "symmetrization identity residual <= 1e-7, 100 random polynomials, n <= 5", [] {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::vector<Polynomial> polys;
    while (polys.size() < 100) {
      const std::size_t k = 1 + polys.size() % 3;
      const unsigned deg = 1 + static_cast<unsigned>(rng() % 6);
      Polynomial f(k);
      for (int t = 0; t < 5; ++t) {
        // random exponent vector with total degree <= deg
        ExponentVector e(k);
        unsigned left = static_cast<unsigned>(rng() % (deg + 1));
        for (std::size_t i = 0; i + 1 < k; ++i) {
          e[i] = static_cast<unsigned>(rng() % (left + 1));
          left -= e[i];
        }
        e[k - 1] = left;
        f.add_term(e, coef(rng));
      }
      if (!f.is_zero()) polys.push_back(std::move(f));
    }
    double worst = 0.0;
    std::size_t graphs = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
      LabeledGraphs(n).for_each([&](std::uint64_t, const Graph& g) {
        ++graphs;
        const auto s = spectral_decompose(g);
        for (const auto& f : polys) worst = std::max(worst, symmetrization_identity_residual(f, g, s));
      });
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "100 polynomials x %zu graphs, max residual %.3g", graphs, worst);
    return std::pair{worst <= 1e-7, std::string(buf)};
  });

  // 4 ---------------------------------------------------------------------
  run_criterion(4, "sandwich inequalities a,b,c <= 2 on all 32768 labeled 6-node graphs", [] {
    const auto t0 = Clock::now();
    std::size_t violations = 0, certified = 0;
    std::uint64_t tested = 0;
    for (unsigned a = 0; a <= 2; ++a)
      for (unsigned b = 0; b <= 2; ++b)
        for (unsigned c = 0; c <= 2; ++c) {
          const Certificate cert = sandwich_certificate(a, b, c);
          if (verify(cert).ok) ++certified;
          const auto r = search_counterexamples(cert.inequality(), ExhaustiveCorpus{6, 6}, {false, false, jobs()});
          violations += r.violations.size();
          tested += r.graphs_tested;
        }
    const double secs = seconds_since(t0);
    return std::pair{violations == 0 && certified == 27 && tested == 27u * 32768u && secs < 300.0,
                     std::to_string(tested) + " evaluations, " + std::to_string(violations) + " violations, " +
                         std::to_string(certified) + "/27 certificates verified, " + std::to_string(secs) + " s"};
  });

  // 5 ---------------------------------------------------------------------
  run_criterion(5, "symmetric family for alpha in {0..3}^3, sigma in S3, n <= 5", [] {
    std::vector<WalkInequality> family;
    std::size_t identity_failures = 0;
    for (unsigned x = 0; x < 64; ++x) {
      const std::vector<unsigned> alpha{x % 4, (x / 4) % 4, x / 16};
      for (const auto& sigma : oracle::permutations(3)) {
        const auto ineq = builtin_symmetric_family(alpha, sigma);
        const Certificate cert = square_certificate(alpha, sigma);
        // expanding the square gives 2 * (rhs - lhs) after compiling
        if (cert.inequality() != ineq.scaled(2) || !verify(cert).ok) ++identity_failures;
        family.push_back(ineq);
      }
    }
    std::size_t violations = 0;
    for_all_graphs(5, 6, [&](const Graph&, const WalkTable& t) {
      for (const auto& w : family)
        if (evaluate_inequality(w, t) < 0) ++violations;
    });
    return std::pair{violations == 0 && identity_failures == 0,
                     std::to_string(family.size()) + " inequalities, " + std::to_string(violations) + " violations, " +
                         std::to_string(identity_failures) + " compile-identity failures"};
  });

  // 6 ---------------------------------------------------------------------
  run_criterion(6, "agm sos for all alpha with k <= 4, |alpha| even <= 8, n <= 5", [] {
    std::vector<WalkInequality> compiled;
    std::size_t built = 0, unverified = 0;
    bool hurwitz = false;
    for (std::size_t k = 1; k <= 4; ++k) {
      std::vector<unsigned> alpha(k, 0);
      std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
        if (pos == k) {
          const unsigned m = 8 - left;
          if (m < 2 || m % 2 != 0) return;
          const Certificate cert = agm_sos(alpha);
          ++built;
          if (!verify(cert).ok || detail::expand_sos(cert.sos, k) != cert.base) ++unverified;
          if (alpha == std::vector<unsigned>{1, 1, 1, 1}) hurwitz = !cert.sos.empty() && verify(cert).ok;
          compiled.push_back(cert.inequality());
          return;
        }
        for (unsigned v = 0; v <= left; ++v) {
          alpha[pos] = v;
          rec(pos + 1, left - v);
        }
        alpha[pos] = 0;
      };
      rec(0, 8);
    }
    std::size_t violations = 0;
    for_all_graphs(5, 8, [&](const Graph&, const WalkTable& t) {
      for (const auto& w : compiled)
        if (evaluate_inequality(w, t) < 0) ++violations;
    });
    return std::pair{unverified == 0 && hurwitz && violations == 0,
                     std::to_string(built) + " decompositions, " + std::to_string(unverified) + " unverified, Hurwitz case " +
                         (hurwitz ? "verified" : "missing") + ", " + std::to_string(violations) + " violations"};
  });

  // 7 ---------------------------------------------------------------------
  run_criterion(7, "counterexample K3 + K1,m at m = 5; equality on regular graphs n <= 6", [] {
    const auto ineq = WalkInequality::pure_binomial({1, 2}, {0, 3});
    FamilyScanCorpus scan{FamilySpec::parse("union(complete:3,star:m)"), "m", 1, 10};
    const auto r = search_counterexamples(ineq, scan);
    bool first_ok = false;
    if (!r.violations.empty()) {
      const auto& v = r.violations.front();
      const auto brute = oracle::brute_force_walks(oracle::adjacency(v.graph), 3);
      const std::vector<Integer> expect{9, 16, 42, 74};
      first_ok = v.label == "m=5" && v.value == -6 && v.walks == expect;
      for (std::size_t k = 0; k <= 3; ++k) first_ok = first_ok && Integer(std::to_string(brute[k])) == expect[k];
    }
    const auto reg = search_counterexamples(ineq, ExhaustiveCorpus{1, 6}, {false, true, jobs()});
    const bool reg_ok = reg.violations.empty() && reg.min_value && *reg.min_value == 0 && *reg.max_value == 0;
    return std::pair{first_ok && reg_ok,
                     std::string("first violation ") + (r.violations.empty() ? "none" : r.violations.front().label) +
                         " value " + (r.violations.empty() ? "-" : r.violations.front().value.get_str()) + "; " +
                         std::to_string(reg.graphs_tested) + " regular graphs all exactly 0"};
  });

  // 8 ---------------------------------------------------------------------
  run_criterion(8, "Newton and degree obstructions versus validity of the erdos family", [] {
    const auto cand = psd_obstructions(as_polynomial(WalkInequality::pure_binomial({1, 2}, {0, 3})));
    bool odd_vertex = false;
    for (const auto& o : cand) odd_vertex = odd_vertex || o.kind == ObstructionKind::OddVertex;
    const auto erdos = psd_obstructions(as_polynomial(builtin_erdos(0, 1, 3)));
    bool odd_degree = false;
    for (const auto& o : erdos) odd_degree = odd_degree || (o.kind == ObstructionKind::OddDegree && o.degree == 3);

    std::vector<WalkInequality> family;
    for (unsigned l = 0; l <= 3; ++l)
      for (unsigned p = 0; p <= 3; ++p)
        for (unsigned k = 1; k <= 3; ++k) family.push_back(builtin_erdos(l, p, k));
    std::size_t violations = 0;
    for_all_graphs(5, 15, [&](const Graph&, const WalkTable& t) {
      for (const auto& w : family)
        if (evaluate_inequality(w, t) < 0) ++violations;
    });
    return std::pair{odd_vertex && odd_degree && violations == 0,
                     std::string("odd vertex ") + (odd_vertex ? "found" : "missing") + ", odd degree 3 " +
                         (odd_degree ? "found" : "missing") + ", " + std::to_string(family.size()) +
                         " erdos inequalities with " + std::to_string(violations) + " violations"};
  });

  // 9 ---------------------------------------------------------------------
  run_criterion(9, "two-factor characterization agrees with binary psd decision, |alpha| <= 12", [] {
    std::size_t pairs = 0, skipped = 0, disagreements = 0;
    for (unsigned s = 0; s <= 12; ++s)
      for (unsigned a1 = 0; 2 * a1 <= s; ++a1)
        for (unsigned b1 = 0; 2 * b1 <= s; ++b1) {
          const unsigned a2 = s - a1, b2 = s - b1;
          const Polynomial f = Polynomial::monomial({b1, b2}) - Polynomial::monomial({a1, a2});
          const Polynomial fsym = symmetrize(f);
          if (fsym.is_zero()) {
            ++skipped;
            continue;
          }
          ++pairs;
          const bool characterized = std::holds_alternative<TwoFactorParams>(two_factor_characterize({a1, a2}, {b1, b2}));
          const bool psd = std::holds_alternative<Certificate>(binary_psd_decide(fsym));
          if (characterized != psd) ++disagreements;
        }
    return std::pair{disagreements == 0 && pairs > 0,
                     std::to_string(pairs) + " pairs, " + std::to_string(disagreements) + " disagreements, " +
                         std::to_string(skipped) + " identical pairs skipped"};
  });

  // 10 --------------------------------------------------------------------
  run_criterion(10, "univariate certificates: quadratic example and certified quartic bound", [] {
    const Certificate quad = univariate_certificate(1, {Rational(2)}, Rational(1, 1000000));
    WalkInequality expect;
    expect.add_term({2}, 1);
    expect.add_term({0}, 1);
    expect.add_term({1}, -2);
    bool quad_ok = std::get<UnivariateParams>(quad.params).bound == -1 && quad.inequality() == expect && verify(quad).ok;
    std::size_t mismatch = 0;
    for_all_graphs(6, 2, [&](const Graph& g, const WalkTable& t) {
      if (evaluate_inequality(expect, t) != oracle::degree_defect(g)) ++mismatch;
    });
    quad_ok = quad_ok && mismatch == 0;

    const Certificate quart = univariate_certificate(2, {Rational(2), Rational(0), Rational(1)}, parse_rational("1e-4"));
    const auto& p = std::get<UnivariateParams>(quart.params);
    const auto target = univariate_target(2, p.a);
    const bool sturm_ok = verify(quart).ok && is_globally_nonnegative(target - UnivariatePolynomial::constant(p.bound));
    std::size_t violations = 0;
    for_all_graphs(5, 4, [&](const Graph&, const WalkTable& t) {
      if (evaluate_inequality(quart.inequality(), t) < 0) ++violations;
    });
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.8f", p.bound.get_d());
    return std::pair{quad_ok && sturm_ok && violations == 0,
                     "L = " + std::get<UnivariateParams>(quad.params).bound.get_str() + ", " + std::to_string(mismatch) +
                         " degree-defect mismatches; quartic L ~ " + buf + ", " + std::to_string(violations) +
                         " violations"};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
