#pragma once

#include <Eigen/Core>

#include "gsp/graph.hpp"

namespace gsp {

/// First k eigenpairs of a Laplacian, ascending, plus lambda_{k+1}
/// when k < n.
struct SpectralBasis {
  int k = 0;
  Eigen::VectorXd eigenvalues;  // k entries, ascending
  double lambda_next = 0.0;     // lambda_{k+1}; equals eigenvalues(k-1) if k==n
  bool has_next = false;
  Eigen::MatrixXd vectors;  // n x k, orthonormal columns

  int n() const { return static_cast<int>(vectors.rows()); }
};

struct SamplingDistribution {
  Eigen::VectorXd p;  // strictly positive, sums to 1

  static SamplingDistribution uniform(int n);
  // Validates positivity and normalization.
  static SamplingDistribution from_vector(const Eigen::VectorXd& p);
};

struct SampleSet;  // sample.hpp

// Dense symmetric eigendecomposition, truncated to the first k pairs.
// Throws if lambda_k and lambda_{k+1} coincide (relative tol 1e-9): the
// bandlimit is ambiguous in that case.
SpectralBasis partial_eigendecomposition(const Laplacian& L, int k);

// Full decomposition (k = n), no degeneracy check; test/oracle use.
SpectralBasis full_eigendecomposition(const Laplacian& L);

// Row norms of U_k: entry i is the energy the first k Fourier modes
// place on node i.
Eigen::VectorXd local_coherence(const SpectralBasis& basis);

// nu = max_i p_i^{-1/2} * ||U_k' delta_i||; always >= sqrt(k).
double weighted_coherence(const SpectralBasis& basis,
                          const SamplingDistribution& p);

// p*_i = ||U_k' delta_i||^2 / k. Zero-coherence nodes are floored at
// 1e-15 and the vector renormalized (positivity is part of the type).
SamplingDistribution optimal_distribution(const SpectralBasis& basis,
                                          bool* floored = nullptr);

struct RipConstants {
  double lower = 0.0;  // 1 - lambda_min(A)
  double upper = 0.0;  // lambda_max(A) - 1
};

// A = (1/m) U_k' P^{-1/2} M' M P^{-1/2} U_k via the k x k Gram matrix of
// the re-weighted sampled rows of U_k.
RipConstants rip_constants(const SpectralBasis& basis, const SampleSet& omega);

// ceil((3/delta^2) * nu^2 * log(2k/eps)) of the sampling condition.
long sample_count_bound(double nu_squared, int k, double delta, double eps);

}  // namespace gsp
