#pragma once

#include <cstdint>
#include <functional>

#include <Eigen/Core>

#include "gsp/graph.hpp"
#include "gsp/spectral.hpp"

namespace gsp {

enum class Damping { none, jackson };

/// Polynomial spectral filter in the Chebyshev basis on [0, lambda_max].
struct PolynomialFilter {
  int degree = 0;
  Eigen::VectorXd cheb_coeffs;  // degree + 1 coefficients
  double lambda_max = 0.0;
  double cutoff = 0.0;  // informational, for fitted low-pass filters

  // Scalar response kappa(t) via Clenshaw recurrence.
  double response(double t) const;
  Eigen::VectorXd response(const Eigen::VectorXd& t) const;

  // kappa(t) = 1 on [0, lambda_max].
  static PolynomialFilter identity(double lambda_max);
};

// Power-method estimate of lambda_n times a 1.01 safety factor;
// deterministic given seed. Non-convergence returns the current
// estimate times 1.05 instead of failing.
double estimate_lambda_max(const Laplacian& L, double tol = 1e-4,
                           int max_iters = 200, std::uint64_t seed = 0);

// Chebyshev approximation of the ideal low-pass step at `cutoff`;
// coefficients are the analytic Chebyshev series of the step function,
// optionally Jackson-damped to suppress Gibbs ripples.
PolynomialFilter fit_lowpass(double cutoff, double lambda_max, int degree,
                             Damping damping = Damping::jackson);

// kappa(L) * signals via the three-term Chebyshev recurrence: exactly
// `degree` Laplacian matvec batches.
Eigen::MatrixXd apply_filter(const Laplacian& L, const PolynomialFilter& f,
                             const Eigen::MatrixXd& signals);

// Same recurrence over a caller-supplied matvec; lets tests instrument
// the operator.
Eigen::MatrixXd apply_filter(
    const std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)>& matvec,
    const PolynomialFilter& f, const Eigen::MatrixXd& signals);

// Exact spectral filtering U diag(response) U' x from a full
// eigendecomposition; ground-truth oracle for tests.
Eigen::MatrixXd apply_exact_filter(const SpectralBasis& basis_full,
                                   const Eigen::VectorXd& response,
                                   const Eigen::MatrixXd& signals);

}  // namespace gsp
