#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "gsp/spectral.hpp"

namespace gsp {

/// Ordered multiset of sampled node indices with their sampling
/// probabilities. Duplicates allowed only for with-replacement draws.
struct SampleSet {
  std::vector<int> indices;       // omega_1 ... omega_m
  std::vector<double> probs;      // p at each sampled node
  bool with_replacement = true;

  int m() const { return static_cast<int>(indices.size()); }
};

struct Measurement {
  Eigen::VectorXd values;  // length m
  double noise_sigma = 0.0;
};

// i.i.d. draws with P(omega_j = i) = p_i; inverse-CDF over cumulative
// sums, deterministic per seed.
SampleSet draw_with_replacement(const SamplingDistribution& p, int m,
                                std::uint64_t seed);

// Uniform m-subset of {0,...,n-1}; probs are all 1/n. The (n/m) RIP
// rescaling of the without-replacement theorem is the caller's business.
SampleSet draw_without_replacement_uniform(int n, int m, std::uint64_t seed);

// y_j = x_{omega_j} + eta_j, eta_j i.i.d. N(0, sigma^2); independent
// noise per sample even when a node repeats.
Measurement measure(const Eigen::VectorXd& x, const SampleSet& omega,
                    double sigma, std::uint64_t seed);

// Deterministic overload with an explicit per-sample noise vector.
Measurement measure(const Eigen::VectorXd& x, const SampleSet& omega,
                    const Eigen::VectorXd& noise);

// v -> P_Omega^{-1/2} v on length-m vectors.
Eigen::VectorXd reweight(const SampleSet& omega, const Eigen::VectorXd& v);

// Adjoint embedding M' P_Omega^{-1/2} v back to length n; duplicate
// samples accumulate.
Eigen::VectorXd reweight_adjoint(const SampleSet& omega,
                                 const Eigen::VectorXd& v, int n);

}  // namespace gsp
