#pragma once

#include <vector>

#include <Eigen/Core>

#include "gsp/graph.hpp"
#include "gsp/sample.hpp"
#include "gsp/spectral.hpp"

namespace gsp {

/// Regularizer g(L) = L^power scaled by gamma.
struct RegularizerSpec {
  int power = 1;
  double gamma = 1e-3;
};

struct ErrorDecomposition {
  double total = 0.0;    // ||x* - x||
  double inband = 0.0;   // ||U_k U_k' x* - x||
  double outband = 0.0;  // ||(I - U_k U_k') x*||
};

struct StandardDecodeResult {
  Eigen::VectorXd x;
  bool degenerate = false;  // sampled basis rank-deficient; minimum-norm fit
};

struct EfficientDecodeResult {
  Eigen::VectorXd x;
  bool converged = false;
  int iterations = 0;
  double relative_residual = 0.0;
  std::vector<double> objective_history;  // CG quadratic objective per iteration
};

// Weighted least squares in span(U_k): U_k argmin ||P^{-1/2}(M U_k a - y)||.
StandardDecodeResult standard_decode(const SpectralBasis& basis,
                                     const SampleSet& omega,
                                     const Measurement& y);

// Conjugate gradient on (M' P_Omega^{-1} M + gamma L^power) z = M' P_Omega^{-1} y,
// touching L only through matvecs.
EfficientDecodeResult efficient_decode(const Laplacian& L,
                                       const SampleSet& omega,
                                       const Measurement& y,
                                       const RegularizerSpec& reg,
                                       double solver_tol = 1e-10,
                                       int max_iters = 5000);

ErrorDecomposition decompose_error(const SpectralBasis& basis,
                                   const Eigen::VectorXd& x_star,
                                   const Eigen::VectorXd& x_true);

// Right-hand side of the standard-decoder error bound.
double bound_standard(double delta, int m, double weighted_noise_norm);

// Right-hand sides of the efficient-decoder bounds, with g = t^power.
double bound_efficient_inband(double delta, int m, double gamma, double lk,
                              double lk1, int power, double m_max,
                              double weighted_noise_norm, double x_norm);
double bound_efficient_outband(double gamma, double lk, double lk1, int power,
                               double weighted_noise_norm, double x_norm);

// max over realized samples of p^{-1/2}: operator-norm bound for the
// rows of M P^{-1/2} that actually occur.
double realized_m_max(const SampleSet& omega);

}  // namespace gsp
