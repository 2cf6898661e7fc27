#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "walkcert/rational.hpp"

namespace walkcert {

inline constexpr std::size_t max_symmetrize_vars = 8;

/// Exponent vector (alpha_1, ..., alpha_k) of a monomial.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t k) : e_(k, 0) {}
  explicit ExponentVector(std::vector<unsigned> e) : e_(std::move(e)) {}
  ExponentVector(std::initializer_list<unsigned> e) : e_(e) {}

  std::size_t size() const noexcept { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }
  const std::vector<unsigned>& values() const noexcept { return e_; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  unsigned degree() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

  bool is_even() const {
    return std::all_of(e_.begin(), e_.end(), [](unsigned x) { return x % 2 == 0; });
  }

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) s += (i ? "," : "") + std::to_string(e_[i]);
    return s + ")";
  }

 private:
  std::vector<unsigned> e_;
};

/// Sum of c_alpha x^alpha over a finite support in k variables. Zero
/// coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  explicit Polynomial(std::size_t k = 1) : k_(k) {}

  static Polynomial constant(std::size_t k, const Rational& c) {
    Polynomial p(k);
    p.add_term(ExponentVector(k), c);
    return p;
  }

  static Polynomial monomial(const ExponentVector& e, const Rational& c = 1) {
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
  }

  /// x_i (0-based)
  static Polynomial variable(std::size_t k, std::size_t i) {
    ExponentVector e(k);
    e[i] = 1;
    return monomial(e);
  }

  std::size_t num_vars() const noexcept { return k_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Rational coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const ExponentVector& e, const Rational& c) {
    if (e.size() != k_) {
      throw input_error("exponent vector " + e.str() + " has length " + std::to_string(e.size()) + ", expected " +
                        std::to_string(k_));
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Highest total degree; 0 for the zero polynomial.
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
  }

  std::vector<ExponentVector> support() const {
    std::vector<ExponentVector> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
  }

  /// f(x_{sigma(1)}, ..., x_{sigma(k)}) for a 0-based permutation sigma.
  Polynomial permuted(std::span<const std::size_t> sigma) const {
    Polynomial r(k_);
    for (const auto& [e, c] : terms_) {
      ExponentVector image(k_);
      for (std::size_t i = 0; i < k_; ++i) image[sigma[i]] = e[i];
      r.terms_.emplace(std::move(image), c);
    }
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.k_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.k_ == b.k_ && a.terms_ == b.terms_; }

  /// Human-readable form, e.g. "x1^2 - 2*x1*x2 + x2^2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = abs(c);
      out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < k_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += mono;
      }
    }
    return out;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (o.k_ != k_) {
      throw input_error("variable count mismatch: " + std::to_string(k_) + " vs " + std::to_string(o.k_));
    }
  }

  std::size_t k_;
  TermMap terms_;
};

/// Sum of f over all k! variable permutations. Refuses k > 8.
inline Polynomial symmetrize(const Polynomial& f) {
  const std::size_t k = f.num_vars();
  if (k > max_symmetrize_vars) {
    throw input_error("symmetrization refused for k = " + std::to_string(k) + " variables (limit 8)");
  }
  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  Polynomial out(k);
  do {
    out += f.permuted(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

/// Product of the factors; the empty product is the constant 1 in `k` variables.
inline Polynomial expand_product(std::span<const Polynomial> factors, std::size_t k) {
  Polynomial acc = Polynomial::constant(k, 1);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

inline Polynomial expand_product(std::span<const Polynomial> factors) {
  if (factors.empty()) return Polynomial::constant(1, 1);
  return expand_product(factors, factors.front().num_vars());
}

inline Polynomial power(const Polynomial& f, unsigned e) {
  Polynomial acc = Polynomial::constant(f.num_vars(), 1);
  for (unsigned i = 0; i < e; ++i) acc = acc * f;
  return acc;
}

inline Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
  if (point.size() != f.num_vars()) {
    throw input_error("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                      std::to_string(f.num_vars()));
  }
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= pow(point[i], e[i]);
    }
    total += term;
  }
  return total;
}

inline double evaluate_real(const Polynomial& f, std::span<const double> point) {
  if (point.size() != f.num_vars()) {
    throw input_error("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                      std::to_string(f.num_vars()));
  }
  double total = 0.0;
  for (const auto& [e, c] : f.terms()) {
    double term = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned p = 0; p < e[i]; ++p) term *= point[i];
    total += term;
  }
  return total;
}

}  // namespace walkcert
