#ifndef BPME_ENVIRONMENT_HPP
#define BPME_ENVIRONMENT_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bpme/errors.hpp"

namespace bpme {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Row-stochastic transition matrix over an ordered finite state set.
// Construct through validate_kernel; rows are exactly renormalized there.
struct MarkovKernel {
  std::vector<std::string> states;  // size d, label per row
  Matrix rows;                      // d x d, rows sum to 1

  Index size() const { return rows.rows(); }
};

// Probability vector over the kernel's states.
struct Distribution {
  Vector weights;

  Index size() const { return weights.size(); }
  double operator()(Index i) const { return weights(i); }
};

inline std::vector<std::string> default_state_labels(Index d) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) labels.push_back("s" + std::to_string(i));
  return labels;
}

// Accepts a nonnegative square matrix whose row sums are within 1e-9 of 1
// and renormalizes each row exactly; larger residuals are rejected.
inline MarkovKernel validate_kernel(const Matrix& rows,
                                    std::vector<std::string> states = {}) {
  if (rows.rows() < 1 || rows.rows() != rows.cols())
    throw NonStochastic("kernel must be a square matrix with d >= 1");
  const Index d = rows.rows();
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      if (!(rows(i, j) >= 0.0))
        throw NegativeEntry("kernel entry (" + std::to_string(i) + "," +
                            std::to_string(j) + ") is negative or NaN");
  Matrix normalized = rows;
  for (Index i = 0; i < d; ++i) {
    const double sum = rows.row(i).sum();
    if (std::abs(sum - 1.0) > 1e-9)
      throw NonStochastic("row " + std::to_string(i) + " sums to " +
                          std::to_string(sum));
    normalized.row(i) /= sum;
  }
  if (states.empty()) states = default_state_labels(d);
  if (static_cast<Index>(states.size()) != d)
    throw ValidationError("state label count does not match kernel size");
  return MarkovKernel{std::move(states), std::move(normalized)};
}

// Smallest k0 with P^k0 entrywise positive, searched up to the Wielandt
// bound (d-1)^2 + 1. Works on the boolean support pattern, so it is exact.
inline int primitivity_index(const MarkovKernel& k) {
  const Index d = k.size();
  using BoolMat = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;
  BoolMat support = (k.rows.array() > 0.0);
  BoolMat power = support;
  const int bound = static_cast<int>((d - 1) * (d - 1) + 1);
  for (int n = 1; n <= bound; ++n) {
    if (power.all()) return n;
    BoolMat next = BoolMat::Constant(d, d, false);
    for (Index i = 0; i < d; ++i)
      for (Index l = 0; l < d; ++l)
        if (power(i, l))
          for (Index j = 0; j < d; ++j)
            if (support(l, j)) next(i, j) = true;
    power = next;
  }
  throw NotPrimitive("no positive power up to the Wielandt bound " +
                     std::to_string(bound));
}

// Unique invariant probability of a primitive kernel, by power iteration
// on the left action nu <- nu P until the L1 residual drops below 1e-13.
inline Distribution stationary_distribution(const MarkovKernel& k) {
  primitivity_index(k);  // throws NotPrimitive when Condition 1 fails
  const Index d = k.size();
  Vector nu = Vector::Constant(d, 1.0 / static_cast<double>(d));
  constexpr double tol = 1e-13;
  constexpr std::uint64_t max_iter = 1000000;
  for (std::uint64_t it = 0; it < max_iter; ++it) {
    Vector next = k.rows.transpose() * nu;
    next /= next.sum();
    const double residual = (k.rows.transpose() * next - next).lpNorm<1>();
    nu = next;
    if (residual <= tol) break;
  }
  return Distribution{nu};
}

// Sup-norm deviations max_{i,j} |P^n(i,j) - nu(j)| for n = 1..n_max.
inline std::vector<double> mixing_decay(const MarkovKernel& k,
                                        const Distribution& nu, int n_max) {
  std::vector<double> deltas;
  deltas.reserve(static_cast<std::size_t>(n_max));
  Matrix power = k.rows;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) power = power * k.rows;
    double delta = 0.0;
    for (Index i = 0; i < k.size(); ++i)
      for (Index j = 0; j < k.size(); ++j)
        delta = std::max(delta, std::abs(power(i, j) - nu(j)));
    deltas.push_back(delta);
  }
  return deltas;
}

// Fits delta_n <= C r^n to the tail of a mixing_decay sequence. Returns
// {C, r}; r = 0 when the sequence hits exactly 0 (finite-step mixing).
inline std::pair<double, double> fit_geometric_envelope(
    const std::vector<double>& deltas) {
  double r = 0.0;
  for (std::size_t n = 1; n < deltas.size(); ++n) {
    if (deltas[n - 1] <= 0.0) return {deltas.empty() ? 0.0 : deltas[0], 0.0};
    r = std::max(r, deltas[n] / deltas[n - 1]);
  }
  if (r >= 1.0) r = 1.0 - 1e-12;
  double c = 0.0;
  for (std::size_t n = 0; n < deltas.size(); ++n)
    c = std::max(c, deltas[n] / std::pow(r, static_cast<double>(n + 1)));
  return {c, r};
}

// Time reversal P*(i,j) = nu(j) P(j,i) / nu(i); nu stays invariant for it.
inline MarkovKernel dual_kernel(const MarkovKernel& k, const Distribution& nu) {
  const Index d = k.size();
  if (nu.size() != d) throw ValidationError("distribution size mismatch");
  for (Index i = 0; i < d; ++i)
    if (!(nu(i) > 0.0))
      throw ZeroMass("nu(" + std::to_string(i) + ") is not strictly positive");
  Matrix dual(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) dual(i, j) = nu(j) / nu(i) * k.rows(j, i);
  return validate_kernel(dual, k.states);
}

}  // namespace bpme

#endif  // BPME_ENVIRONMENT_HPP
