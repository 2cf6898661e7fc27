#pragma once

// Newton polytope vertices via exact rational linear programming, and the
// vertex-coefficient test for nonnegative polynomials.

#include <optional>
#include <string>
#include <vector>

#include "walkcert/polynomial.hpp"

namespace walkcert {

namespace detail {

/// Phase-one simplex with Bland's rule over exact rationals. Decides whether
/// A x = b, x >= 0 is feasible, where b >= 0 entrywise.
inline bool feasible_nonnegative(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  const std::size_t total = cols + rows;  // structural + artificial
  for (std::size_t r = 0; r < rows; ++r) {
    a[r].resize(total);
    a[r][cols + r] = 1;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = cols + r;

  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> reduced(total);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < cols; ++j) reduced[j] -= a[r][j];

  for (;;) {
    std::size_t entering = total;
    for (std::size_t j = 0; j < total; ++j) {
      if (reduced[j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == total) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (a[r][entering] <= 0) continue;
      Rational ratio = b[r] / a[r][entering];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot occur for phase one

    const Rational pivot = a[leave][entering];
    for (auto& x : a[leave]) x /= pivot;
    b[leave] /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || a[r][entering] == 0) continue;
      const Rational factor = a[r][entering];
      for (std::size_t j = 0; j < total; ++j) {
        if (a[leave][j] != 0) a[r][j] -= factor * a[leave][j];
      }
      b[r] -= factor * b[leave];
    }
    const Rational factor = reduced[entering];
    for (std::size_t j = 0; j < total; ++j) {
      if (a[leave][j] != 0) reduced[j] -= factor * a[leave][j];
    }
    basis[leave] = entering;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] >= cols && b[r] != 0) return false;
  }
  return true;
}

}  // namespace detail

/// True iff target lies in conv(points), decided exactly.
inline bool in_convex_hull(const std::vector<ExponentVector>& points, const ExponentVector& target) {
  if (points.empty()) return false;
  const std::size_t dim = target.size();
  std::vector<std::vector<Rational>> a(dim + 1, std::vector<Rational>(points.size()));
  std::vector<Rational> b(dim + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t r = 0; r < dim; ++r) a[r][j] = points[j][r];
    a[dim][j] = 1;
  }
  for (std::size_t r = 0; r < dim; ++r) b[r] = target[r];
  b[dim] = 1;
  return detail::feasible_nonnegative(std::move(a), std::move(b));
}

/// Vertices of N(f) = conv(supp f). A support point is a vertex iff it is
/// not a convex combination of the remaining support points, equivalently
/// iff some linear functional separates it strictly from them.
inline std::vector<ExponentVector> newton_vertices(const Polynomial& f) {
  const auto support = f.support();
  std::vector<ExponentVector> vertices;
  for (std::size_t i = 0; i < support.size(); ++i) {
    std::vector<ExponentVector> others;
    others.reserve(support.size() - 1);
    for (std::size_t j = 0; j < support.size(); ++j) {
      if (j != i) others.push_back(support[j]);
    }
    if (!in_convex_hull(others, support[i])) vertices.push_back(support[i]);
  }
  return vertices;
}

enum class VertexDefect { odd_coordinate, negative_coefficient };

struct VertexRefutation {
  ExponentVector vertex;
  Rational coefficient;
  VertexDefect defect;
};

struct NewtonCheck {
  std::vector<ExponentVector> vertices;
  /// Every offending vertex, in support order; the first is the headline.
  std::vector<VertexRefutation> refutations;

  bool passed() const noexcept { return refutations.empty(); }
};

/// Necessary condition for f >= 0: every vertex of N(f) has even coordinates
/// and a positive coefficient. Passing does not certify nonnegativity.
inline NewtonCheck newton_vertex_check(const Polynomial& f) {
  if (f.is_zero()) throw input_error("Newton polytope of the zero polynomial");
  NewtonCheck check{newton_vertices(f), {}};
  for (const auto& v : check.vertices) {
    const Rational c = f.coefficient(v);
    if (c < 0) check.refutations.push_back({v, c, VertexDefect::negative_coefficient});
    if (!v.is_even()) check.refutations.push_back({v, c, VertexDefect::odd_coordinate});
  }
  return check;
}

}  // namespace walkcert
