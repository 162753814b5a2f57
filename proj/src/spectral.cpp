#include "gsp/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "gsp/sample.hpp"

namespace gsp {

SamplingDistribution SamplingDistribution::uniform(int n) {
  if (n <= 0) throw std::invalid_argument("uniform distribution: n must be positive");
  SamplingDistribution d;
  d.p = Eigen::VectorXd::Constant(n, 1.0 / n);
  return d;
}

SamplingDistribution SamplingDistribution::from_vector(const Eigen::VectorXd& p) {
  if (p.size() == 0) throw std::invalid_argument("distribution: empty vector");
  if ((p.array() <= 0.0).any())
    throw std::invalid_argument("distribution: entries must be strictly positive");
  if (std::abs(p.sum() - 1.0) > 1e-12)
    throw std::invalid_argument("distribution: entries must sum to 1");
  return SamplingDistribution{p};
}

namespace {

SpectralBasis truncate(const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& es,
                       int k, int n) {
  SpectralBasis basis;
  basis.k = k;
  basis.eigenvalues = es.eigenvalues().head(k);
  basis.vectors = es.eigenvectors().leftCols(k);
  if (k < n) {
    basis.lambda_next = es.eigenvalues()(k);
    basis.has_next = true;
  } else {
    basis.lambda_next = es.eigenvalues()(k - 1);
    basis.has_next = false;
  }
  return basis;
}

}  // namespace

SpectralBasis partial_eigendecomposition(const Laplacian& L, int k) {
  const int n = L.n;
  if (k < 1 || k >= n)
    throw std::invalid_argument("partial_eigendecomposition: need 1 <= k < n");
  Eigen::MatrixXd dense(L.matrix);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("partial_eigendecomposition: solver failed");
  double lk = es.eigenvalues()(k - 1);
  double lk1 = es.eigenvalues()(k);
  if (lk1 - lk <= 1e-9 * std::max(lk1, 1.0))
    throw std::invalid_argument(
        "partial_eigendecomposition: lambda_k == lambda_{k+1}, bandlimit "
        "ambiguous");
  return truncate(es, k, n);
}

SpectralBasis full_eigendecomposition(const Laplacian& L) {
  Eigen::MatrixXd dense(L.matrix);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("full_eigendecomposition: solver failed");
  return truncate(es, L.n, L.n);
}

Eigen::VectorXd local_coherence(const SpectralBasis& basis) {
  return basis.vectors.rowwise().norm();
}

double weighted_coherence(const SpectralBasis& basis,
                          const SamplingDistribution& p) {
  if (p.p.size() != basis.n())
    throw std::invalid_argument("weighted_coherence: dimension mismatch");
  Eigen::VectorXd coh = local_coherence(basis);
  return (coh.array() / p.p.array().sqrt()).maxCoeff();
}

SamplingDistribution optimal_distribution(const SpectralBasis& basis,
                                          bool* floored) {
  Eigen::VectorXd sq = basis.vectors.rowwise().squaredNorm();
  Eigen::VectorXd p = sq / static_cast<double>(basis.k);
  bool hit_floor = false;
  for (int i = 0; i < p.size(); ++i) {
    if (p(i) < 1e-15) {
      p(i) = 1e-15;
      hit_floor = true;
    }
  }
  if (hit_floor) p /= p.sum();
  if (floored) *floored = hit_floor;
  SamplingDistribution d;
  d.p = p;
  return d;
}

RipConstants rip_constants(const SpectralBasis& basis, const SampleSet& omega) {
  const int k = basis.k;
  const int m = omega.m();
  if (m == 0) return {1.0, -1.0 + 0.0};  // empty Gram matrix: A = 0
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(k, k);
  for (int j = 0; j < m; ++j) {
    int node = omega.indices[j];
    if (node < 0 || node >= basis.n())
      throw std::invalid_argument("rip_constants: sample index out of range");
    Eigen::VectorXd row = basis.vectors.row(node).transpose();
    gram.selfadjointView<Eigen::Lower>().rankUpdate(row, 1.0 / omega.probs[j]);
  }
  gram /= static_cast<double>(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      gram.selfadjointView<Eigen::Lower>());
  // rank(A) <= m < k forces a zero eigenvalue; report the rank
  // deficiency exactly rather than up to eigensolver roundoff
  double lower = m < k ? 1.0 : 1.0 - es.eigenvalues().minCoeff();
  return {lower, es.eigenvalues().maxCoeff() - 1.0};
}

long sample_count_bound(double nu_squared, int k, double delta, double eps) {
  if (!(delta > 0.0 && delta < 1.0 && eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("sample_count_bound: delta, eps must be in (0,1)");
  if (k < 1) throw std::invalid_argument("sample_count_bound: k must be positive");
  double bound = 3.0 / (delta * delta) * nu_squared * std::log(2.0 * k / eps);
  return static_cast<long>(std::ceil(bound));
}

}  // namespace gsp
