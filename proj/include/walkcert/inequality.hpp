#pragma once

// Walk inequalities "sum_t c_t * prod_{i in t} w_i >= 0", compilation from
// polynomials and the built-in families from the literature.

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "walkcert/graph.hpp"
#include "walkcert/polynomial.hpp"

namespace walkcert {

/// Walk-index multiset of one product term, kept sorted.
using IndexMultiset = std::vector<unsigned>;

/// Formal linear combination of walk-count products, claimed >= 0 on every
/// graph. Canonical: each multiset sorted, duplicate multisets merged, zero
/// coefficients dropped. An empty term list is the trivial claim 0 >= 0.
class WalkInequality {
 public:
  using TermMap = std::map<IndexMultiset, Rational>;

  WalkInequality() = default;

  /// rhs - lhs >= 0, i.e. prod w_lhs <= prod w_rhs.
  static WalkInequality pure_binomial(IndexMultiset lhs, IndexMultiset rhs) {
    WalkInequality w;
    w.add_term(std::move(rhs), 1);
    w.add_term(std::move(lhs), -1);
    return w;
  }

  void add_term(IndexMultiset indices, const Rational& c) {
    if (c == 0) return;
    std::sort(indices.begin(), indices.end());
    auto [it, inserted] = terms_.try_emplace(std::move(indices), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_trivial() const noexcept { return terms_.empty(); }

  unsigned max_index() const {
    unsigned m = 0;
    for (const auto& [idx, c] : terms_)
      for (unsigned i : idx) m = std::max(m, i);
    return m;
  }

  WalkInequality scaled(const Rational& s) const {
    WalkInequality w;
    for (const auto& [idx, c] : terms_) w.add_term(idx, c * s);
    return w;
  }

  /// Every walk index raised by `delta`.
  WalkInequality shifted(unsigned delta) const {
    WalkInequality w;
    for (const auto& [key, c] : terms_) {
      IndexMultiset idx = key;
      for (auto& i : idx) i += delta;
      w.add_term(std::move(idx), c);
    }
    return w;
  }

  friend WalkInequality operator+(const WalkInequality& a, const WalkInequality& b) {
    WalkInequality w = a;
    for (const auto& [idx, c] : b.terms_) w.add_term(idx, c);
    return w;
  }

  friend bool operator==(const WalkInequality&, const WalkInequality&) = default;

  /// e.g. "2*w0*w2 - 2*w1^2 >= 0"
  std::string str() const {
    if (terms_.empty()) return "0 >= 0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
      Rational mag = abs(c);
      out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      first = false;
      std::string prod;
      for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j < idx.size() && idx[j] == idx[i]) ++j;
        if (!prod.empty()) prod += "*";
        prod += "w" + std::to_string(idx[i]);
        if (j - i > 1) prod += "^" + std::to_string(j - i);
        i = j;
      }
      if (prod.empty()) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += prod;
      }
    }
    return out + " >= 0";
  }

 private:
  TermMap terms_;
};

/// Maps c * x^alpha to c * w_{alpha_1} ... w_{alpha_k}. Zero exponents become
/// w_0 factors, so every term keeps k factors.
inline WalkInequality compile(const Polynomial& f) {
  WalkInequality w;
  for (const auto& [e, c] : f.terms()) w.add_term(e.values(), c);
  return w;
}

/// Inverse of compile for inequalities whose terms all have k factors:
/// each multiset becomes the exponent vector in its stored (sorted) order.
inline Polynomial as_polynomial(const WalkInequality& w) {
  if (w.is_trivial()) return Polynomial(1);
  const std::size_t k = w.terms().begin()->first.size();
  if (k == 0) throw input_error("inequality terms need at least one walk factor");
  Polynomial f(k);
  for (const auto& [idx, c] : w.terms()) {
    if (idx.size() != k) {
      throw input_error("inequality mixes products of " + std::to_string(k) + " and " + std::to_string(idx.size()) +
                        " walk factors; no single polynomial represents it");
    }
    f.add_term(ExponentVector(idx), c);
  }
  return f;
}

/// Exact value of the left-hand side on one graph.
inline Rational evaluate_inequality(const WalkInequality& w, const WalkTable& table) {
  if (!w.is_trivial() && w.max_index() > table.max_length()) {
    throw input_error("walk table too short: inequality needs K >= " + std::to_string(w.max_index()) + ", table has K = " +
                      std::to_string(table.max_length()));
  }
  Rational total = 0;
  for (const auto& [idx, c] : w.terms()) {
    Integer prod = 1;
    for (unsigned i : idx) prod *= table[i];
    total += c * prod;
  }
  return total;
}

inline Rational evaluate_inequality(const WalkInequality& w, const Graph& g) {
  return evaluate_inequality(w, walk_counts(g, w.max_index()));
}

// ---------------------------------------------------------------------------
// Permutations (0-based one-line notation)
// ---------------------------------------------------------------------------

inline void check_permutation(std::span<const std::size_t> sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t s : sigma) {
    if (s >= sigma.size() || seen[s]) throw input_error("sigma is not a permutation");
    seen[s] = true;
  }
}

/// Disjoint cycles of sigma, each listed from its smallest element.
inline std::vector<std::vector<std::size_t>> cycle_decomposition(std::span<const std::size_t> sigma) {
  check_permutation(sigma);
  std::vector<bool> done(sigma.size(), false);
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (done[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t i = start; !done[i]; i = sigma[i]) {
      done[i] = true;
      cycle.push_back(i);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

// ---------------------------------------------------------------------------
// Built-in families, constructed directly from their index formulas
// ---------------------------------------------------------------------------

struct BinomialSides {
  IndexMultiset lhs;
  IndexMultiset rhs;
};

/// w_{2a+c} w_{2(a+b)+c} <= w_{2a} w_{2(a+b+c)}
inline WalkInequality builtin_sandwich(unsigned a, unsigned b, unsigned c) {
  return WalkInequality::pure_binomial({2 * a + c, 2 * (a + b) + c}, {2 * a, 2 * (a + b + c)});
}

/// w_{2l+p}^k <= w_{2l+pk} w_{2l}^{k-1}
inline WalkInequality builtin_erdos(unsigned l, unsigned p, unsigned k) {
  if (k < 1) throw input_error("erdos family needs k >= 1");
  IndexMultiset lhs(k, 2 * l + p);
  IndexMultiset rhs(k - 1, 2 * l);
  rhs.push_back(2 * l + p * k);
  return WalkInequality::pure_binomial(std::move(lhs), std::move(rhs));
}

/// Sides of w_{alpha_1+alpha_sigma(1)} ... <= w_{2 alpha_1} ... (sigma 0-based).
inline BinomialSides symmetric_family_sides(std::span<const unsigned> alpha, std::span<const std::size_t> sigma) {
  if (alpha.size() != sigma.size()) throw input_error("alpha and sigma lengths differ");
  check_permutation(sigma);
  BinomialSides s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    s.lhs.push_back(alpha[i] + alpha[sigma[i]]);
    s.rhs.push_back(2 * alpha[i]);
  }
  std::sort(s.lhs.begin(), s.lhs.end());
  std::sort(s.rhs.begin(), s.rhs.end());
  return s;
}

inline WalkInequality builtin_symmetric_family(std::span<const unsigned> alpha, std::span<const std::size_t> sigma) {
  auto s = symmetric_family_sides(alpha, sigma);
  return WalkInequality::pure_binomial(std::move(s.lhs), std::move(s.rhs));
}

/// w_{alpha_1} ... w_{alpha_k} <= w_0^{k-1} w_{|alpha|}, |alpha| even.
inline WalkInequality builtin_agm(std::span<const unsigned> alpha) {
  if (alpha.empty()) throw input_error("agm family needs k >= 1");
  const unsigned total = std::accumulate(alpha.begin(), alpha.end(), 0u);
  if (total % 2 != 0) throw input_error("agm family needs |alpha| even");
  IndexMultiset rhs(alpha.size() - 1, 0);
  rhs.push_back(total);
  return WalkInequality::pure_binomial(IndexMultiset(alpha.begin(), alpha.end()), std::move(rhs));
}

/// w_{a+b}^2 <= w_{2a} w_{2b}
inline WalkInequality builtin_dress_gutman(unsigned a, unsigned b) {
  return WalkInequality::pure_binomial({a + b, a + b}, {2 * a, 2 * b});
}

}  // namespace walkcert
