#pragma once

// Floating-point spectral diagnostics. Nothing here feeds a certificate.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "walkcert/graph.hpp"
#include "walkcert/polynomial.hpp"

namespace walkcert {

inline constexpr double eigenvalue_group_tolerance = 1e-9;

/// Eigenvalues in descending order and the matching squared coordinates of
/// the all-ones vector in an orthonormal eigenbasis.
struct SpectralData {
  std::vector<double> eigenvalues;
  std::vector<double> weights;
};

struct EigenvalueGroup {
  double eigenvalue = 0.0;
  double weight = 0.0;
  std::size_t multiplicity = 0;
};

class spectral_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline SpectralData spectral_decompose(const Graph& g, double weight_tolerance = 1e-12) {
  const auto n = static_cast<Eigen::Index>(g.order());
  if (n < 1) throw input_error("spectral decomposition needs n >= 1");
  Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    adjacency(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = 1.0;
    adjacency(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency);
  if (solver.info() != Eigen::Success) throw spectral_error("symmetric eigensolver did not converge");

  // Eigen returns ascending eigenvalues.
  const Eigen::VectorXd projections = solver.eigenvectors().transpose() * Eigen::VectorXd::Ones(n);
  SpectralData out;
  for (Eigen::Index j = n - 1; j >= 0; --j) {
    out.eigenvalues.push_back(solver.eigenvalues()(j));
    double w = projections(j) * projections(j);
    if (w < 0.0 && w > -weight_tolerance) w = 0.0;
    out.weights.push_back(w);
  }
  return out;
}

/// Per-eigenvalue weight totals; only these are basis independent.
inline std::vector<EigenvalueGroup> aggregate_weights(const SpectralData& s,
                                                      double tolerance = eigenvalue_group_tolerance) {
  std::vector<EigenvalueGroup> groups;
  for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
    if (!groups.empty() && std::abs(groups.back().eigenvalue - s.eigenvalues[j]) <= tolerance) {
      groups.back().weight += s.weights[j];
      ++groups.back().multiplicity;
    } else {
      groups.push_back({s.eigenvalues[j], s.weights[j], 1});
    }
  }
  return groups;
}

/// sum_j lambda_j^k mu_j^2 for k = 0..K.
inline std::vector<double> walk_counts_spectral(const SpectralData& s, std::size_t max_length) {
  std::vector<double> out(max_length + 1, 0.0);
  for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
    double term = s.weights[j];
    for (std::size_t k = 0; k <= max_length; ++k) {
      out[k] += term;
      term *= s.eigenvalues[j];
    }
  }
  return out;
}

struct SpectralResiduals {
  double sum_weights = 0.0;  // |sum mu^2 - n|
  double first_moment = 0.0;  // |sum lambda mu^2 - 2m|
};

inline SpectralResiduals spectral_residuals(const SpectralData& s, const Graph& g) {
  double sum = 0.0, moment = 0.0;
  for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
    sum += s.weights[j];
    moment += s.eigenvalues[j] * s.weights[j];
  }
  return {std::abs(sum - static_cast<double>(g.order())), std::abs(moment - 2.0 * static_cast<double>(g.size()))};
}

/// gamma for a sorted index tuple: 1 / (product of factorials of the
/// multiplicities), i.e. the reciprocal size of its stabilizer in S_k.
inline double stabilizer_weight(std::span<const std::size_t> sorted_indices) {
  double stabilizer = 1.0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < sorted_indices.size(); ++i) {
    run = (i > 0 && sorted_indices[i] == sorted_indices[i - 1]) ? run + 1 : 1;
    stabilizer *= static_cast<double>(run);
  }
  return 1.0 / stabilizer;
}

/// |LHS - RHS| / max(1, |LHS|) for the symmetrization identity
///   sum_alpha c_alpha w_{alpha_1}...w_{alpha_k}
///     = sum_{i_1 <= ... <= i_k} gamma * f_sym(lambda_{i_1}, ...) * mu_{i_1}^2 ... mu_{i_k}^2.
/// The left side uses exact walk counts.
inline double symmetrization_identity_residual(const Polynomial& f, const Graph& g, const SpectralData& s) {
  const std::size_t k = f.num_vars();
  const WalkTable table = walk_counts(g, f.total_degree());

  Rational lhs_exact = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (unsigned idx : e) term *= table[idx];
    lhs_exact += term;
  }
  const double lhs = lhs_exact.get_d();

  const Polynomial fsym = symmetrize(f);
  const std::size_t n = s.eigenvalues.size();
  double rhs = 0.0;
  std::vector<std::size_t> idx(k, 0);
  std::vector<double> point(k);
  for (;;) {
    double mu = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
      point[i] = s.eigenvalues[idx[i]];
      mu *= s.weights[idx[i]];
    }
    rhs += stabilizer_weight(idx) * evaluate_real(fsym, point) * mu;

    // next non-decreasing tuple
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - 1) --pos;
    if (pos == 0) break;
    const std::size_t v = idx[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < k; ++i) idx[i] = v;
  }
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

inline double symmetrization_identity_residual(const Polynomial& f, const Graph& g) {
  return symmetrization_identity_residual(f, g, spectral_decompose(g));
}

}  // namespace walkcert
