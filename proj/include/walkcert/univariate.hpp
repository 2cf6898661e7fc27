#pragma once

// Univariate rational polynomials: Sturm sequences, real-root isolation,
// exact global-nonnegativity decisions and certified lower bounds on the
// global minimum.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walkcert/rational.hpp"

namespace walkcert {

class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  /// Coefficients lowest degree first.
  explicit UnivariatePolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

  static UnivariatePolynomial constant(const Rational& c) { return UnivariatePolynomial({c}); }
  static UnivariatePolynomial x() { return UnivariatePolynomial({Rational(0), Rational(1)}); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  double evaluate_real(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
  }

  UnivariatePolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return UnivariatePolynomial(std::move(d));
  }

  UnivariatePolynomial monic() const {
    if (c_.empty()) return {};
    UnivariatePolynomial r = *this;
    const Rational lc = leading();
    for (auto& x : r.c_) x /= lc;
    return r;
  }

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) + b.coefficient(i);
    return UnivariatePolynomial(std::move(r));
  }

  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) - b.coefficient(i);
    return UnivariatePolynomial(std::move(r));
  }

  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UnivariatePolynomial(std::move(r));
  }

  friend UnivariatePolynomial operator*(const Rational& s, const UnivariatePolynomial& a) {
    std::vector<Rational> r = a.c_;
    for (auto& x : r) x *= s;
    return UnivariatePolynomial(std::move(r));
  }

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = c_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      Rational mag = abs(c);
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      if (i == 0 || mag != 1) out += mag.get_str() + (i > 0 ? "*" : "");
      if (i > 0) out += "x" + (i > 1 ? "^" + std::to_string(i) : std::string());
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

struct DivMod {
  UnivariatePolynomial quotient;
  UnivariatePolynomial remainder;
};

inline DivMod divmod(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (b.is_zero()) throw input_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UnivariatePolynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] / lb;
    quot[static_cast<std::size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coefficient(static_cast<std::size_t>(j));
  }
  return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

/// Monic gcd (zero if both inputs are zero).
inline UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// u / gcd(u, u'): same distinct roots, all simple.
inline UnivariatePolynomial squarefree_part(const UnivariatePolynomial& u) {
  if (u.degree() <= 0) return u;
  return divmod(u, gcd(u, u.derivative())).quotient;
}

/// Yun's algorithm: returns s_1, s_2, ... with u = lc(u) * prod s_i^i, each
/// s_i monic, square-free and pairwise coprime.
inline std::vector<UnivariatePolynomial> squarefree_factorization(const UnivariatePolynomial& u) {
  if (u.degree() <= 0) return {};
  std::vector<UnivariatePolynomial> factors;
  const UnivariatePolynomial m = u.monic();
  const UnivariatePolynomial d = m.derivative();
  UnivariatePolynomial a = gcd(m, d);
  UnivariatePolynomial b = divmod(m, a).quotient;
  UnivariatePolynomial c = divmod(d, a).quotient;
  UnivariatePolynomial e = c - b.derivative();
  while (b.degree() > 0) {
    UnivariatePolynomial g = gcd(b, e);
    factors.push_back(g);
    b = divmod(b, g).quotient;
    c = divmod(e, g).quotient;
    e = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

/// Product of the square-free factors with odd multiplicity: exactly the
/// real points where u changes sign are its real roots.
inline UnivariatePolynomial odd_multiplicity_part(const UnivariatePolynomial& u) {
  UnivariatePolynomial out = UnivariatePolynomial::constant(1);
  auto factors = squarefree_factorization(u);
  for (std::size_t i = 0; i < factors.size(); i += 2) out = out * factors[i];
  return out;
}

/// Strict bound: every real root has |x| < cauchy_bound(u). Rounded up to
/// a power of two so bisection midpoints stay dyadic.
inline Rational cauchy_bound(const UnivariatePolynomial& u) {
  Rational worst = 0;
  const Rational lc = abs(u.leading());
  for (int i = 0; i < u.degree(); ++i) {
    Rational r = abs(u.coefficient(static_cast<std::size_t>(i))) / lc;
    if (r > worst) worst = r;
  }
  Rational bound = 1;
  while (bound <= worst + 1) bound *= 2;
  return bound;
}

inline int sign(const Rational& q) { return sgn(q); }

/// Sturm sequence of the square-free part of a nonzero polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const UnivariatePolynomial& u) {
    if (u.is_zero()) throw input_error("Sturm sequence of the zero polynomial");
    UnivariatePolynomial p = squarefree_part(u);
    seq_.push_back(p);
    UnivariatePolynomial q = p.derivative();
    while (!q.is_zero()) {
      seq_.push_back(q);
      UnivariatePolynomial r = divmod(seq_[seq_.size() - 2], q).remainder;
      q = Rational(-1) * r;
    }
  }

  const UnivariatePolynomial& base() const { return seq_.front(); }

  int variations(const Rational& x) const {
    std::vector<int> signs;
    for (const auto& p : seq_) signs.push_back(sign(p(x)));
    return count_variations(signs);
  }

  int variations_at_positive_infinity() const {
    std::vector<int> signs;
    for (const auto& p : seq_) signs.push_back(sign(p.leading()));
    return count_variations(signs);
  }

  int variations_at_negative_infinity() const {
    std::vector<int> signs;
    for (const auto& p : seq_) signs.push_back(sign(p.leading()) * (p.degree() % 2 == 0 ? 1 : -1));
    return count_variations(signs);
  }

  /// Distinct real roots in (lo, hi].
  std::size_t count(const Rational& lo, const Rational& hi) const {
    return static_cast<std::size_t>(variations(lo) - variations(hi));
  }

  /// Distinct real roots in the open interval (lo, hi).
  std::size_t count_open(const Rational& lo, const Rational& hi) const {
    return count(lo, hi) - (base()(hi) == 0 ? 1 : 0);
  }

  std::size_t count_all() const {
    return static_cast<std::size_t>(variations_at_negative_infinity() - variations_at_positive_infinity());
  }

 private:
  static int count_variations(const std::vector<int>& signs) {
    int last = 0;
    int n = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (last != 0 && s != last) ++n;
      last = s;
    }
    return n;
  }

  std::vector<UnivariatePolynomial> seq_;
};

/// Distinct real roots of u in (lo, hi].
inline std::size_t sturm_count_roots(const UnivariatePolynomial& u, const Rational& lo, const Rational& hi) {
  if (u.is_zero()) throw input_error("root count of the zero polynomial");
  if (!(lo < hi)) throw input_error("root count interval needs lo < hi");
  return SturmSequence(u).count(lo, hi);
}

inline std::size_t count_real_roots(const UnivariatePolynomial& u) {
  if (u.is_zero()) throw input_error("root count of the zero polynomial");
  return SturmSequence(u).count_all();
}

/// Either an exact rational root (lo == hi) or an open interval (lo, hi)
/// with non-root endpoints holding exactly one simple root.
struct RootEnclosure {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// Isolates every distinct real root of u, in increasing order, with
/// interval widths at most `max_width`.
inline std::vector<RootEnclosure> isolate_real_roots(const UnivariatePolynomial& u, const Rational& max_width) {
  if (u.is_zero()) throw input_error("root isolation of the zero polynomial");
  std::vector<RootEnclosure> out;
  if (u.degree() == 0) return out;
  const SturmSequence sturm(u);
  const UnivariatePolynomial& p = sturm.base();
  const Rational bound = cauchy_bound(p);

  struct Pending {
    Rational lo, hi;
    std::size_t roots;
  };
  std::vector<Pending> stack{{-bound, bound, sturm.count_open(-bound, bound)}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.roots == 0) continue;
    if (cur.roots == 1 && cur.hi - cur.lo <= max_width && p(cur.lo) != 0 && p(cur.hi) != 0) {
      out.push_back({cur.lo, cur.hi});
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    const std::size_t left = sturm.count_open(cur.lo, mid);
    const bool mid_root = p(mid) == 0;
    if (mid_root) out.push_back({mid, mid});
    const std::size_t right = cur.roots - left - (mid_root ? 1 : 0);
    stack.push_back({mid, cur.hi, right});
    stack.push_back({cur.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const RootEnclosure& a, const RootEnclosure& b) { return a.lo < b.lo; });
  return out;
}

/// True iff u(x) >= 0 for every real x. Exact: u is nonnegative iff its
/// odd-multiplicity part has no real root and the sign far right is positive.
inline bool is_globally_nonnegative(const UnivariatePolynomial& u) {
  if (u.is_zero()) return true;
  if (u.degree() == 0) return u.leading() > 0;
  const UnivariatePolynomial odd = odd_multiplicity_part(u);
  if (odd.degree() > 0 && count_real_roots(odd) > 0) return false;
  return u.leading() > 0;
}

/// A rational point where u is strictly negative, if one exists.
inline std::optional<Rational> find_negative_point(const UnivariatePolynomial& u) {
  if (u.is_zero()) return std::nullopt;
  if (u.degree() == 0) return u.leading() < 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
  const Rational bound = cauchy_bound(u);
  std::vector<Rational> samples{-bound};
  const auto roots = isolate_real_roots(u, Rational(1));
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    const Rational& a = roots[i].hi;
    const Rational& b = roots[i + 1].lo;
    samples.push_back(a < b ? Rational((a + b) / 2) : a);
  }
  samples.push_back(bound);
  for (const auto& x : samples) {
    if (u(x) < 0) return x;
  }
  return std::nullopt;
}

/// Bisects a non-exact enclosure of a simple root of square-free p until its
/// width is at most `width`; stops early if a midpoint is the root itself.
inline RootEnclosure refine_root(const UnivariatePolynomial& p, RootEnclosure r, const Rational& width) {
  while (!r.exact() && r.width() > width) {
    const Rational mid = r.midpoint();
    const int sm = sign(p(mid));
    if (sm == 0) return {mid, mid};
    if (sm == sign(p(r.lo)))
      r.lo = mid;
    else
      r.hi = mid;
  }
  return r;
}

/// Upper bound on |u'(x)| for x in [lo, hi].
inline Rational derivative_bound(const UnivariatePolynomial& u, const Rational& lo, const Rational& hi) {
  const Rational radius = std::max(Rational(abs(lo)), Rational(abs(hi)));
  Rational total = 0;
  for (int i = 1; i <= u.degree(); ++i) {
    total += abs(u.coefficient(static_cast<std::size_t>(i))) * i * pow(radius, static_cast<unsigned>(i - 1));
  }
  return total;
}

/// Exact rational L with u(x) - L >= 0 on all of R (verified exactly) and
/// L >= min u - tol. Requires even degree and a positive leading coefficient.
inline Rational certified_global_min_bound(const UnivariatePolynomial& u, const Rational& tol) {
  if (u.is_zero()) throw input_error("global minimum of the zero polynomial");
  if (u.degree() % 2 != 0) throw input_error("global minimum requires even degree, got " + std::to_string(u.degree()));
  if (u.leading() < 0) throw input_error("global minimum requires a positive leading coefficient");
  if (tol <= 0) throw input_error("tolerance must be positive");
  if (u.degree() == 0) return u.leading();

  const UnivariatePolynomial critical = squarefree_part(u.derivative());
  std::optional<Rational> best;
  for (RootEnclosure r : isolate_real_roots(critical, Rational(1))) {
    Rational lower;
    for (;;) {
      if (r.exact()) {
        lower = u(r.lo);
        break;
      }
      const Rational slope = derivative_bound(u, r.lo, r.hi);
      if (slope * r.width() <= tol / 2) {
        lower = u(r.midpoint()) - slope * r.width() / 2;
        break;
      }
      r = refine_root(critical, r, r.width() / 2);
    }
    if (!best || lower < *best) best = lower;
  }

  Rational bound = best.value_or(u(Rational(0)));
  while (!is_globally_nonnegative(u - UnivariatePolynomial::constant(bound))) bound -= tol;
  return bound;
}

}  // namespace walkcert
