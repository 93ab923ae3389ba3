#pragma once

// Reference computations used only by the tests. None of these call the
// library code paths they are compared against.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace eamsim::oracle {

using cplx = std::complex<double>;

/// M / N^{3/2} * sum_{j=1..N} exp(i 2 pi (j-1)(q1+q2)/N), summed term by term.
inline cplx cyclic_sum_element(int q1, int q2, cplx m, int n) {
  cplx sum = 0.0;
  for (int j = 1; j <= n; ++j) {
    sum += std::exp(cplx(0.0, 2.0 * std::numbers::pi * (j - 1) * (q1 + q2) / n));
  }
  return m / std::pow(static_cast<double>(n), 1.5) * sum;
}

/// Initial state: zero-EAM donor, acceptors in the ground state, written in
/// the arm-sector ordering (donor arms first, then (s, t) pairs).
inline Eigen::VectorXcd initial_arm_state(int n) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n + n * n);
  for (int r = 0; r < n; ++r) v(r) = 1.0 / std::sqrt(static_cast<double>(n));
  return v;
}

/// Final state with acceptor EAM q1, q2:
/// sum_{s,t} (1/N) eps^{(s-1) q1} eps^{(t-1) q2} |s, t>.
inline Eigen::VectorXcd final_arm_state(int q1, int q2, int n) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n + n * n);
  for (int s = 1; s <= n; ++s) {
    for (int t = 1; t <= n; ++t) {
      const double phase = 2.0 * std::numbers::pi * ((s - 1) * q1 + (t - 1) * q2) / n;
      v(n + (s - 1) * n + (t - 1)) = std::exp(cplx(0.0, phase)) / static_cast<double>(n);
    }
  }
  return v;
}

/// exp(-i H t) by scaling and squaring of a truncated Taylor series.
inline Eigen::MatrixXcd taylor_propagator(const Eigen::MatrixXcd& h, double t) {
  const double norm = h.cwiseAbs().rowwise().sum().maxCoeff() * std::abs(t);
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  const Eigen::MatrixXcd a = h * cplx(0.0, -t / std::pow(2.0, squarings));
  const auto dim = h.rows();
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(dim, dim);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
  for (int k = 1; k <= 30; ++k) {
    term = term * a / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

/// -x log2 x - (1-x) log2 (1-x).
inline double binary_entropy(double x) {
  auto term = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
  return term(x) + term(1.0 - x);
}

/// Seeded generator for property tests.
class Sampler {
 public:
  explicit Sampler(unsigned seed) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  cplx phase_complex(double lo, double hi) {
    return std::polar(uniform(lo, hi), uniform(0.0, 2.0 * std::numbers::pi));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace eamsim::oracle
