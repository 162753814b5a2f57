#include "gsp/decode.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace gsp {

StandardDecodeResult standard_decode(const SpectralBasis& basis,
                                     const SampleSet& omega,
                                     const Measurement& y) {
  const int m = omega.m();
  const int k = basis.k;
  if (y.values.size() != m)
    throw std::invalid_argument("standard_decode: measurement length mismatch");

  Eigen::MatrixXd weighted(m, k);
  Eigen::VectorXd target(m);
  for (int j = 0; j < m; ++j) {
    double w = 1.0 / std::sqrt(omega.probs[j]);
    weighted.row(j) = basis.vectors.row(omega.indices[j]) * w;
    target(j) = y.values(j) * w;
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(weighted,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
  StandardDecodeResult res;
  res.degenerate = svd.rank() < k;
  res.x = basis.vectors * svd.solve(target);
  return res;
}

EfficientDecodeResult efficient_decode(const Laplacian& L,
                                       const SampleSet& omega,
                                       const Measurement& y,
                                       const RegularizerSpec& reg,
                                       double solver_tol, int max_iters) {
  if (reg.gamma <= 0.0)
    throw std::invalid_argument("efficient_decode: gamma must be positive");
  if (reg.power < 1)
    throw std::invalid_argument("efficient_decode: power must be >= 1");
  const int n = L.n;
  const int m = omega.m();
  if (y.values.size() != m)
    throw std::invalid_argument("efficient_decode: measurement length mismatch");

  // M' P_Omega^{-1} M is diagonal; duplicates accumulate.
  Eigen::VectorXd fidelity = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < m; ++j) {
    int node = omega.indices[j];
    fidelity(node) += 1.0 / omega.probs[j];
    b(node) += y.values(j) / omega.probs[j];
  }

  auto apply_system = [&](const Eigen::VectorXd& z) -> Eigen::VectorXd {
    Eigen::VectorXd reg_term = z;
    for (int p = 0; p < reg.power; ++p) reg_term = L.matrix * reg_term;
    return fidelity.cwiseProduct(z) + reg.gamma * reg_term;
  };

  EfficientDecodeResult res;
  Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd r = b;
  Eigen::VectorXd p = r;
  double bnorm = b.norm();
  if (bnorm == 0.0) {
    res.x = z;
    res.converged = true;
    return res;
  }
  double rs = r.squaredNorm();
  res.objective_history.push_back(0.0);  // f(0) = 0
  for (int it = 0; it < max_iters; ++it) {
    Eigen::VectorXd Ap = apply_system(p);
    double alpha = rs / p.dot(Ap);
    z += alpha * p;
    r -= alpha * Ap;
    // f(z) = -(z'b + z'r)/2, no extra matvec needed
    res.objective_history.push_back(-0.5 * (z.dot(b) + z.dot(r)));
    double rs_new = r.squaredNorm();
    res.iterations = it + 1;
    if (std::sqrt(rs_new) <= solver_tol * bnorm) {
      res.converged = true;
      rs = rs_new;
      break;
    }
    p = r + (rs_new / rs) * p;
    rs = rs_new;
  }
  res.relative_residual = std::sqrt(rs) / bnorm;
  if (res.relative_residual <= solver_tol) res.converged = true;
  res.x = z;
  return res;
}

ErrorDecomposition decompose_error(const SpectralBasis& basis,
                                   const Eigen::VectorXd& x_star,
                                   const Eigen::VectorXd& x_true) {
  if (x_star.size() != basis.n() || x_true.size() != basis.n())
    throw std::invalid_argument("decompose_error: dimension mismatch");
  Eigen::VectorXd alpha =
      basis.vectors * (basis.vectors.transpose() * x_star);
  ErrorDecomposition d;
  d.total = (x_star - x_true).norm();
  d.inband = (alpha - x_true).norm();
  d.outband = (x_star - alpha).norm();
  return d;
}

double bound_standard(double delta, int m, double weighted_noise_norm) {
  if (!(delta >= 0.0 && delta < 1.0) || m < 1)
    throw std::invalid_argument("bound_standard: bad arguments");
  return 2.0 / std::sqrt(m * (1.0 - delta)) * weighted_noise_norm;
}

namespace {

double g_pow(double lambda, int power) {
  return std::pow(lambda, power);
}

}  // namespace

double bound_efficient_inband(double delta, int m, double gamma, double lk,
                              double lk1, int power, double m_max,
                              double weighted_noise_norm, double x_norm) {
  if (g_pow(lk1, power) <= 0.0)
    throw std::invalid_argument("bound_efficient_inband: g(lambda_{k+1}) must be positive");
  if (!(delta >= 0.0 && delta < 1.0) || m < 1 || gamma <= 0.0)
    throw std::invalid_argument("bound_efficient_inband: bad arguments");
  double glk = g_pow(lk, power);
  double glk1 = g_pow(lk1, power);
  double noise_part =
      (2.0 + m_max / std::sqrt(gamma * glk1)) * weighted_noise_norm;
  double model_part =
      (m_max * std::sqrt(glk / glk1) + std::sqrt(gamma * glk)) * x_norm;
  return (noise_part + model_part) / std::sqrt(m * (1.0 - delta));
}

double bound_efficient_outband(double gamma, double lk, double lk1, int power,
                               double weighted_noise_norm, double x_norm) {
  double glk1 = g_pow(lk1, power);
  if (glk1 <= 0.0)
    throw std::invalid_argument("bound_efficient_outband: g(lambda_{k+1}) must be positive");
  return weighted_noise_norm / std::sqrt(gamma * glk1) +
         std::sqrt(g_pow(lk, power) / glk1) * x_norm;
}

double realized_m_max(const SampleSet& omega) {
  double mmax = 0.0;
  for (double p : omega.probs) mmax = std::max(mmax, 1.0 / std::sqrt(p));
  return mmax;
}

}  // namespace gsp
