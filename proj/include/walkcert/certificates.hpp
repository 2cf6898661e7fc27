#pragma once

// Nonnegativity certificates for symmetrized polynomials, their exact
// re-verification, and obstructions showing that no psd symmetrization
// can exist.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "walkcert/inequality.hpp"
#include "walkcert/newton.hpp"
#include "walkcert/polynomial.hpp"
#include "walkcert/univariate.hpp"

namespace walkcert {

enum class CertificateKind { Square, Sandwich, AgmSos, UnivariateMin, BinaryPsd };

inline std::string_view kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::Square: return "Square";
    case CertificateKind::Sandwich: return "Sandwich";
    case CertificateKind::AgmSos: return "AgmSos";
    case CertificateKind::UnivariateMin: return "UnivariateMin";
    case CertificateKind::BinaryPsd: return "BinaryPsd";
  }
  return "?";
}

struct SquareParams {
  std::vector<unsigned> alpha;
  std::vector<std::size_t> sigma;  // 0-based one-line notation
};

struct SandwichParams {
  unsigned a = 0, b = 0, c = 0;
};

struct AgmParams {
  std::vector<unsigned> alpha;
};

struct UnivariateParams {
  unsigned k = 1;
  std::vector<Rational> a;  // a_1 .. a_{2k-1}
  Rational tol;
  Rational bound;           // certified L <= min f
  Rational root_bracket;    // 1 + max a_j
};

struct BinaryParams {
  Polynomial form{2};
};

using CertificateParams = std::variant<SquareParams, SandwichParams, AgmParams, UnivariateParams, BinaryParams>;

struct SosTerm {
  Rational coef;
  Polynomial poly;
};

using SosDecomposition = std::vector<SosTerm>;

/// One certified construction. `base` is the polynomial f whose
/// symmetrization is nonnegative; compile(base) is the walk inequality.
struct Certificate {
  CertificateParams params;
  Polynomial base{1};
  SosDecomposition sos;
  unsigned shift = 0;
  std::string argument;

  CertificateKind kind() const { return static_cast<CertificateKind>(params.index()); }
  WalkInequality inequality() const { return compile(base); }
};

enum class ObstructionKind { OddVertex, NegativeVertexCoefficient, OddDegree, NegativeWitness };

inline std::string_view kind_name(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::OddVertex: return "OddVertex";
    case ObstructionKind::NegativeVertexCoefficient: return "NegativeVertexCoefficient";
    case ObstructionKind::OddDegree: return "OddDegree";
    case ObstructionKind::NegativeWitness: return "NegativeWitness";
  }
  return "?";
}

struct Obstruction {
  ObstructionKind kind;
  std::optional<ExponentVector> vertex;
  Rational coefficient;
  unsigned degree = 0;
  std::vector<Rational> point;
  Rational value;
  std::string detail;
};

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

namespace detail {

inline Polynomial monomial_of(std::vector<unsigned> e, const Rational& c = 1) {
  return Polynomial::monomial(ExponentVector(std::move(e)), c);
}

inline Polynomial expand_sos(const SosDecomposition& sos, std::size_t k) {
  Polynomial total(k);
  for (const auto& t : sos) total += t.coef * (t.poly * t.poly);
  return total;
}

/// (x_1 ... x_k)^(2a)
inline Polynomial shift_monomial(std::size_t k, unsigned a) {
  return monomial_of(std::vector<unsigned>(k, 2 * a));
}

/// Dense exact solve of M X = B (M square, nonsingular).
inline std::vector<std::vector<Rational>> solve(std::vector<std::vector<Rational>> m,
                                                std::vector<std::vector<Rational>> b) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw internal_error("singular system in sos construction");
    std::swap(m[pivot], m[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (auto& x : b[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = col; j < n; ++j)
        if (m[col][j] != 0) m[r][j] -= f * m[col][j];
      for (std::size_t j = 0; j < b[r].size(); ++j)
        if (b[col][j] != 0) b[r][j] -= f * b[col][j];
    }
  }
  return b;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Square certificate
// ---------------------------------------------------------------------------

/// f = (x^alpha - x_{sigma(1)}^{alpha_1} ... x_{sigma(k)}^{alpha_k})^2.
inline Certificate square_certificate(const std::vector<unsigned>& alpha, const std::vector<std::size_t>& sigma) {
  const std::size_t k = alpha.size();
  if (k == 0) throw input_error("square certificate needs k >= 1");
  if (k > max_symmetrize_vars) throw input_error("square certificate refused for k > 8");
  if (sigma.size() != k) throw input_error("sigma must have the same length as alpha");
  check_permutation(sigma);

  std::vector<unsigned> image(k, 0);
  for (std::size_t i = 0; i < k; ++i) image[sigma[i]] = alpha[i];
  const Polynomial diff = detail::monomial_of(alpha) - detail::monomial_of(image);

  Certificate cert{SquareParams{alpha, sigma}, diff * diff, {}, 0, "base polynomial is a perfect square"};
  if (!diff.is_zero()) cert.sos.push_back({Rational(1), diff});
  return cert;
}

// ---------------------------------------------------------------------------
// Sandwich certificate
// ---------------------------------------------------------------------------

inline Polynomial sandwich_base(unsigned a, unsigned b, unsigned c) {
  return detail::monomial_of({2 * a, 2 * (a + b + c)}) - detail::monomial_of({2 * a + c, 2 * (a + b) + c});
}

/// x1^{2a} x2^{2a} (x1^{2b+c} - x2^{2b+c}) (x1^c - x2^c)
inline Polynomial sandwich_factored_symmetrization(unsigned a, unsigned b, unsigned c) {
  const std::array<Polynomial, 3> factors{
      detail::monomial_of({2 * a, 2 * a}),
      detail::monomial_of({2 * b + c, 0}) - detail::monomial_of({0, 2 * b + c}),
      detail::monomial_of({c, 0}) - detail::monomial_of({0, c}),
  };
  return expand_product(factors, 2);
}

inline Certificate sandwich_certificate(unsigned a, unsigned b, unsigned c) {
  Polynomial base = sandwich_base(a, b, c);
  if (symmetrize(base) != sandwich_factored_symmetrization(a, b, c)) {
    throw internal_error("sandwich factorization identity failed for (" + std::to_string(a) + "," + std::to_string(b) +
                         "," + std::to_string(c) + ")");
  }
  return Certificate{SandwichParams{a, b, c}, std::move(base), {}, 0,
                     "f_sym = (x1 x2)^(2a) (x1^(2b+c) - x2^(2b+c)) (x1^c - x2^c); the two binomial factors have "
                     "exponents of equal parity, so they share a sign at every real point"};
}

// ---------------------------------------------------------------------------
// AM-GM sum of squares
// ---------------------------------------------------------------------------

/// sum_i alpha_i x_i^m - m x^alpha with m = |alpha|.
inline Polynomial agm_form(const std::vector<unsigned>& alpha) {
  const std::size_t k = alpha.size();
  const unsigned m = std::accumulate(alpha.begin(), alpha.end(), 0u);
  Polynomial f(k);
  for (std::size_t i = 0; i < k; ++i) {
    ExponentVector e(k);
    e[i] = m;
    f.add_term(e, alpha[i]);
  }
  f.add_term(ExponentVector(alpha), -Rational(m));
  return f;
}

/// Rational sos decomposition of agm_form(alpha).
///
/// Every non-vertex lattice point u of the simplex conv{m e_i : alpha_i > 0}
/// is the midpoint of two distinct even lattice points s, t of the simplex, so
///   x^u = (x^s + x^t)/2 - (x^{s/2} - x^{t/2})^2 / 2.
/// Following these relations from alpha until every path ends at a vertex is
/// an absorbing chain (the expected squared norm strictly grows per step), and
/// one exact linear solve collects the weight of each square. The vertex
/// weights come out as alpha_i / m, giving f = m * sum(weight * square).
inline SosDecomposition hurwitz_reznick_sos(const std::vector<unsigned>& alpha) {
  const std::size_t k = alpha.size();
  const unsigned m = std::accumulate(alpha.begin(), alpha.end(), 0u);
  std::vector<std::size_t> face;
  for (std::size_t i = 0; i < k; ++i)
    if (alpha[i] > 0) face.push_back(i);
  if (face.size() <= 1) return {};

  // Even lattice points of the face: 2 * (compositions of m/2 over the face).
  std::vector<ExponentVector> even_points;
  {
    std::vector<unsigned> part(face.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
      if (pos + 1 == face.size()) {
        part[pos] = left;
        ExponentVector e(k);
        for (std::size_t j = 0; j < face.size(); ++j) e[face[j]] = 2 * part[j];
        even_points.push_back(std::move(e));
        return;
      }
      for (unsigned v = 0; v <= left; ++v) {
        part[pos] = v;
        self(self, pos + 1, left - v);
      }
    };
    rec(rec, 0, m / 2);
  }
  const std::set<ExponentVector> even_set(even_points.begin(), even_points.end());

  auto is_vertex = [&](const ExponentVector& u) {
    return std::count_if(u.begin(), u.end(), [](unsigned x) { return x != 0; }) == 1;
  };
  auto norm2 = [](const ExponentVector& v) {
    unsigned long long s = 0;
    for (unsigned x : v) s += static_cast<unsigned long long>(x) * x;
    return s;
  };

  struct Step {
    ExponentVector s, t;
  };
  std::map<ExponentVector, std::size_t> state_index;
  std::vector<ExponentVector> states;
  std::vector<Step> steps;
  std::vector<ExponentVector> stack{ExponentVector(alpha)};
  state_index[stack.back()] = 0;
  states.push_back(stack.back());
  while (!stack.empty()) {
    ExponentVector u = stack.back();
    stack.pop_back();
    std::optional<Step> best;
    unsigned long long best_score = 0;
    for (const auto& s : even_points) {
      bool ok = true;
      ExponentVector t(k);
      for (std::size_t i = 0; i < k && ok; ++i) {
        if (s[i] > 2 * u[i]) ok = false;
        else t[i] = 2 * u[i] - s[i];
      }
      if (!ok || s == t || !even_set.contains(t) || !(s < t)) continue;
      const unsigned long long score = norm2(s) + norm2(t);
      if (!best || score > best_score) {
        best = Step{s, t};
        best_score = score;
      }
    }
    if (!best) throw internal_error("no midpoint pair for lattice point " + u.str());
    steps.resize(states.size());
    steps[state_index.at(u)] = *best;
    for (const auto* next : {&best->s, &best->t}) {
      if (is_vertex(*next) || state_index.contains(*next)) continue;
      state_index[*next] = states.size();
      states.push_back(*next);
      stack.push_back(*next);
    }
  }
  steps.resize(states.size());

  // One column per distinct square (s, t).
  std::map<std::pair<ExponentVector, ExponentVector>, std::size_t> square_index;
  for (const auto& st : steps) square_index.try_emplace({st.s, st.t}, square_index.size());

  const std::size_t n = states.size();
  std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n));
  std::vector<std::vector<Rational>> rhs(n, std::vector<Rational>(square_index.size()));
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    mat[i][i] += 1;
    for (const auto* next : {&steps[i].s, &steps[i].t}) {
      if (auto it = state_index.find(*next); it != state_index.end()) mat[i][it->second] -= half;
    }
    rhs[i][square_index.at({steps[i].s, steps[i].t})] += half;
  }
  const auto weights = detail::solve(std::move(mat), std::move(rhs));

  SosDecomposition sos;
  for (const auto& [st, col] : square_index) {
    const Rational& w = weights[0][col];
    if (w == 0) continue;
    std::vector<unsigned> hs(k), ht(k);
    for (std::size_t i = 0; i < k; ++i) {
      hs[i] = st.first[i] / 2;
      ht[i] = st.second[i] / 2;
    }
    sos.push_back({w * m, detail::monomial_of(hs) - detail::monomial_of(ht)});
  }
  return sos;
}

inline Certificate agm_sos(const std::vector<unsigned>& alpha) {
  const std::size_t k = alpha.size();
  if (k == 0) throw input_error("agm certificate needs k >= 1");
  if (k > max_symmetrize_vars) throw input_error("agm certificate refused for k > 8");
  const unsigned m = std::accumulate(alpha.begin(), alpha.end(), 0u);
  if (m % 2 != 0) throw input_error("agm certificate needs |alpha| even, got " + std::to_string(m));
  if (m < 2) throw input_error("agm certificate needs |alpha| >= 2");

  Polynomial base = agm_form(alpha);
  SosDecomposition sos = hurwitz_reznick_sos(alpha);
  if (detail::expand_sos(sos, k) != base) throw internal_error("agm sos decomposition failed exact expansion");
  return Certificate{AgmParams{alpha}, std::move(base), std::move(sos), 0,
                     "base polynomial equals the listed sum of squares"};
}

// ---------------------------------------------------------------------------
// Binary forms
// ---------------------------------------------------------------------------

inline UnivariatePolynomial dehomogenize_first(const Polynomial& f) {
  std::vector<Rational> c(f.total_degree() + 1);
  for (const auto& [e, coef] : f.terms()) c[e[0]] += coef;
  return UnivariatePolynomial(std::move(c));
}

using BinaryDecision = std::variant<Certificate, Obstruction>;

inline Obstruction negative_witness(const Polynomial& f, std::vector<Rational> point, std::string detail) {
  Rational value = evaluate(f, point);
  if (value >= 0) throw internal_error("witness does not evaluate negative");
  return Obstruction{ObstructionKind::NegativeWitness, std::nullopt, 0, 0, std::move(point), value, std::move(detail)};
}

/// Exact psd decision for a nonzero binary form.
inline BinaryDecision binary_psd_decide(const Polynomial& f) {
  if (f.num_vars() != 2) throw input_error("binary psd decision needs exactly 2 variables");
  if (f.is_zero()) throw input_error("binary psd decision needs a nonzero form");
  if (!f.is_homogeneous()) throw input_error("binary psd decision needs a homogeneous form");
  const unsigned degree = f.total_degree();

  if (degree % 2 != 0) {
    for (long t = 0;; ++t) {
      std::vector<Rational> p{Rational(t), Rational(1)};
      if (t == 0) p = {Rational(1), Rational(0)};
      const Rational v = evaluate(f, p);
      if (v == 0) continue;
      if (v > 0)
        for (auto& x : p) x = -x;
      return negative_witness(f, std::move(p), "odd degree " + std::to_string(degree) + ": f(-x) = -f(x)");
    }
  }

  const Rational at_x_axis = evaluate(f, std::vector<Rational>{Rational(1), Rational(0)});
  if (at_x_axis < 0) return negative_witness(f, {Rational(1), Rational(0)}, "negative at (1,0)");
  const Rational at_y_axis = evaluate(f, std::vector<Rational>{Rational(0), Rational(1)});
  if (at_y_axis < 0) return negative_witness(f, {Rational(0), Rational(1)}, "negative at (0,1)");

  const UnivariatePolynomial u = dehomogenize_first(f);
  if (is_globally_nonnegative(u)) {
    return Certificate{BinaryParams{f}, f, {}, 0,
                       "degree " + std::to_string(degree) + " even; f(1,0) = " + at_x_axis.get_str() +
                           " >= 0; f(t,1) has positive leading coefficient and no real root of odd multiplicity"};
  }
  auto t = find_negative_point(u);
  if (!t) throw internal_error("sign change detected but no negative sample found");
  return negative_witness(f, {*t, Rational(1)}, "f(t,1) changes sign across a root of odd multiplicity");
}

// ---------------------------------------------------------------------------
// Two-factor characterization
// ---------------------------------------------------------------------------

struct TwoFactorParams {
  unsigned a = 0, b = 0, c = 0;
  Certificate certificate;
};

using TwoFactorResult = std::variant<TwoFactorParams, Obstruction>;

/// w_{alpha_1} w_{alpha_2} <= w_{beta_1} w_{beta_2} with |alpha| = |beta| has a
/// psd symmetrized certificate iff, after sorting, beta is even,
/// beta_1 <= alpha_1 <= alpha_2 <= beta_2 and alpha_1 = alpha_2 (mod 2).
inline TwoFactorResult two_factor_characterize(std::array<unsigned, 2> alpha, std::array<unsigned, 2> beta) {
  if (alpha[0] + alpha[1] != beta[0] + beta[1]) {
    throw input_error("two-factor characterization needs |alpha| = |beta|");
  }
  std::sort(alpha.begin(), alpha.end());
  std::sort(beta.begin(), beta.end());
  const ExponentVector beta_vertex{beta[0], beta[1]};

  for (std::size_t i = 0; i < 2; ++i) {
    if (beta[i] % 2 != 0) {
      return Obstruction{ObstructionKind::OddVertex, beta_vertex, 1, 0, {}, 0,
                         "beta_" + std::to_string(i + 1) + " = " + std::to_string(beta[i]) + " is odd"};
    }
  }
  if (!(beta[0] <= alpha[0] && alpha[1] <= beta[1])) {
    return Obstruction{ObstructionKind::NegativeVertexCoefficient, ExponentVector{alpha[0], alpha[1]}, -1, 0, {}, 0,
                       "ordering beta_1 <= alpha_1 <= alpha_2 <= beta_2 violated"};
  }
  if ((alpha[1] - alpha[0]) % 2 != 0) {
    return Obstruction{ObstructionKind::OddVertex, ExponentVector{alpha[0], alpha[1]}, -1, 0, {}, 0,
                       "alpha_1 and alpha_2 differ in parity"};
  }
  const unsigned a = beta[0] / 2;
  const unsigned c = alpha[0] - beta[0];
  const unsigned b = (alpha[1] - alpha[0]) / 2;
  if (beta[1] != 2 * (a + b + c)) throw internal_error("two-factor parameterization inconsistent");
  return TwoFactorParams{a, b, c, sandwich_certificate(a, b, c)};
}

// ---------------------------------------------------------------------------
// Univariate non-binomial inequalities
// ---------------------------------------------------------------------------

/// x^{2k} - a_1 x^{2k-1} - ... - a_{2k-1} x
inline UnivariatePolynomial univariate_target(unsigned k, const std::vector<Rational>& a) {
  std::vector<Rational> c(2 * k + 1);
  c[2 * k] = 1;
  for (std::size_t j = 1; j <= a.size(); ++j) c[2 * k - j] = -a[j - 1];
  return UnivariatePolynomial(std::move(c));
}

inline Polynomial univariate_base(const UnivariatePolynomial& target, const Rational& bound) {
  Polynomial base(1);
  for (std::size_t i = 0; i < target.coefficients().size(); ++i) base.add_term(ExponentVector{static_cast<unsigned>(i)}, target.coefficients()[i]);
  base.add_term(ExponentVector{0u}, -bound);
  return base;
}

/// Compiles to w_{2k} - L w_0 - sum_j a_j w_{2k-j} >= 0 with L <= min f.
inline Certificate univariate_certificate(unsigned k, const std::vector<Rational>& a, const Rational& tol) {
  if (k < 1) throw input_error("univariate certificate needs k >= 1");
  if (a.size() != 2 * k - 1) {
    throw input_error("univariate certificate needs " + std::to_string(2 * k - 1) + " coefficients a_1..a_{2k-1}");
  }
  if (std::any_of(a.begin(), a.end(), [](const Rational& x) { return x < 0; })) {
    throw input_error("univariate certificate needs all a_j >= 0");
  }
  if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; })) {
    throw input_error("univariate certificate needs at least one a_j > 0");
  }
  const UnivariatePolynomial f = univariate_target(k, a);
  const Rational bound = certified_global_min_bound(f, tol);
  const Rational bracket = 1 + *std::max_element(a.begin(), a.end());
  if (sturm_count_roots(f, Rational(0), bracket) != 1) {
    throw internal_error("expected exactly one positive root in (0, 1 + max a_j]");
  }
  return Certificate{UnivariateParams{k, a, tol, bound, bracket}, univariate_base(f, bound), {}, 0,
                     "f - L has positive leading coefficient and no real root of odd multiplicity"};
}

// ---------------------------------------------------------------------------
// Index shift
// ---------------------------------------------------------------------------

/// Multiplies the base by the symmetric square (x_1 ... x_k)^{2a}; the
/// symmetrization scales by the same factor, and every walk index rises by 2a.
inline Certificate shift_certificate(Certificate cert, unsigned a) {
  if (a == 0) return cert;
  cert.base = cert.base * detail::shift_monomial(cert.base.num_vars(), a);
  cert.shift += a;
  return cert;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct Verification {
  bool ok = false;
  std::string detail;
};

/// Rebuilds the unshifted base from the parameters and re-checks the
/// kind-specific nonnegativity argument exactly. Never trusts stored flags.
inline Verification verify(const Certificate& cert) {
  try {
    Polynomial unshifted{1};
    Verification v{true, ""};
    std::visit(
        [&](const auto& p) {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, SquareParams>) {
            Certificate fresh = square_certificate(p.alpha, p.sigma);
            unshifted = fresh.base;
            if (detail::expand_sos(fresh.sos, unshifted.num_vars()) != unshifted && !fresh.sos.empty()) {
              v = {false, "square expansion mismatch"};
            }
          } else if constexpr (std::is_same_v<P, SandwichParams>) {
            unshifted = sandwich_base(p.a, p.b, p.c);
            if (symmetrize(unshifted) != sandwich_factored_symmetrization(p.a, p.b, p.c)) {
              v = {false, "sandwich factorization identity fails"};
            }
          } else if constexpr (std::is_same_v<P, AgmParams>) {
            unshifted = agm_form(p.alpha);
            if (detail::expand_sos(cert.sos, unshifted.num_vars()) != unshifted) {
              v = {false, "sum of squares does not expand to the base polynomial"};
            }
            for (const auto& t : cert.sos) {
              if (t.coef <= 0) v = {false, "sum of squares has a non-positive coefficient"};
            }
          } else if constexpr (std::is_same_v<P, UnivariateParams>) {
            unshifted = univariate_base(univariate_target(p.k, p.a), p.bound);
            if (!is_globally_nonnegative(dehomogenize_first(unshifted))) {
              v = {false, "f - L takes negative values"};
            }
          } else {
            unshifted = p.form;
            auto decision = binary_psd_decide(p.form);
            if (!std::holds_alternative<Certificate>(decision)) v = {false, "form is not psd"};
          }
        },
        cert.params);
    if (!v.ok) return v;
    const Polynomial expected =
        cert.shift == 0 ? unshifted : unshifted * detail::shift_monomial(unshifted.num_vars(), cert.shift);
    if (expected != cert.base) return {false, "base polynomial does not match the certificate parameters"};
    return {true, cert.argument};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

// ---------------------------------------------------------------------------
// Obstructions
// ---------------------------------------------------------------------------

/// Reasons why symmetrize(f) cannot be nonnegative. Empty means none was
/// found, which certifies nothing.
inline std::vector<Obstruction> psd_obstructions(const Polynomial& f) {
  std::vector<Obstruction> out;
  const Polynomial fsym = symmetrize(f);
  if (fsym.is_zero()) return out;
  const unsigned degree = fsym.total_degree();
  if (degree % 2 != 0) {
    out.push_back({ObstructionKind::OddDegree, std::nullopt, 0, degree, {}, 0,
                   "f_sym has odd degree " + std::to_string(degree)});
  }
  for (const auto& r : newton_vertex_check(fsym).refutations) {
    if (r.defect == VertexDefect::odd_coordinate) {
      out.push_back({ObstructionKind::OddVertex, r.vertex, r.coefficient, 0, {}, 0,
                     "Newton vertex " + r.vertex.str() + " has an odd coordinate"});
    } else {
      out.push_back({ObstructionKind::NegativeVertexCoefficient, r.vertex, r.coefficient, 0, {}, 0,
                     "Newton vertex " + r.vertex.str() + " has coefficient " + r.coefficient.get_str()});
    }
  }
  return out;
}

/// Diagnostic: random rational points where symmetrize(f) is negative.
/// Coordinates are p/q with |p| <= 12 and 1 <= q <= 6.
inline std::optional<Obstruction> sample_negative_witness(const Polynomial& f, std::size_t samples,
                                                          std::uint64_t seed) {
  const Polynomial fsym = symmetrize(f);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  std::vector<Rational> point(f.num_vars());
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& x : point) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
    Rational v = evaluate(fsym, point);
    if (v < 0) {
      return Obstruction{ObstructionKind::NegativeWitness, std::nullopt, 0, 0, point, v,
                         "f_sym negative at a sampled point"};
    }
  }
  return std::nullopt;
}

}  // namespace walkcert
