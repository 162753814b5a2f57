#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "gsp/filter.hpp"
#include "gsp/graph.hpp"
#include "gsp/spectral.hpp"

namespace gsp {

struct EstimationConfig {
  int num_signals = 0;      // 0 means default ceil(2 ln n)
  double precision = 0.01;  // dichotomy stop: |lo - hi| <= precision * hi
  int cheb_degree = 100;
  Damping damping = Damping::jackson;
  std::uint64_t seed = 0;
  int max_bisections = 60;

  int resolved_num_signals(int n) const;
};

struct EstimationDiagnostics {
  double lambda_hat = 0.0;
  double lambda_max = 0.0;
  int iterations = 0;
  bool converged = false;
  double final_count = 0.0;  // energy-sum eigenvalue count at lambda_hat
};

// Probe signals r^1..r^L with covariance (1/L) I; drawn once and reused
// across all bisection steps of a run.
Eigen::MatrixXd draw_probe_signals(int n, int num_signals, std::uint64_t seed);

// Total filtered energy sum_i sum_l (r^l_{c_lambda})_i^2, an estimate of
// #{lambda_j <= lambda}.
double count_eigs_below(const Laplacian& L, double lambda, double lambda_max,
                        const EstimationConfig& cfg,
                        const Eigen::MatrixXd& probes);

// Dichotomy on the cutoff driven by the rounded eigenvalue count.
EstimationDiagnostics estimate_lambda_k(const Laplacian& L, int k,
                                        const EstimationConfig& cfg);

// Algorithm output: node energies of the final dichotomy filter,
// normalized into a strictly positive distribution.
SamplingDistribution estimate_optimal_distribution(
    const Laplacian& L, int k, const EstimationConfig& cfg,
    EstimationDiagnostics* diag = nullptr);

}  // namespace gsp
