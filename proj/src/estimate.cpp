#include "gsp/estimate.hpp"

#include <cmath>
#include <stdexcept>

#include "gsp/rng.hpp"

namespace gsp {

int EstimationConfig::resolved_num_signals(int n) const {
  if (num_signals > 0) return num_signals;
  return static_cast<int>(std::ceil(2.0 * std::log(static_cast<double>(n))));
}

Eigen::MatrixXd draw_probe_signals(int n, int num_signals, std::uint64_t seed) {
  if (num_signals < 1)
    throw std::invalid_argument("draw_probe_signals: num_signals must be >= 1");
  auto rng = make_rng(mix_seed(seed, 0x70726f62));
  return gaussian_matrix(n, num_signals, rng,
                         1.0 / std::sqrt(static_cast<double>(num_signals)));
}

double count_eigs_below(const Laplacian& L, double lambda, double lambda_max,
                        const EstimationConfig& cfg,
                        const Eigen::MatrixXd& probes) {
  if (!(lambda > 0.0)) return 0.0;
  double cutoff = std::min(lambda, lambda_max * (1.0 - 1e-12));
  PolynomialFilter f =
      fit_lowpass(cutoff, lambda_max, cfg.cheb_degree, cfg.damping);
  return apply_filter(L, f, probes).squaredNorm();
}

namespace {

long long round_half_away(double v) {
  return std::llround(v);
}

struct DichotomyRun {
  EstimationDiagnostics diag;
  Eigen::VectorXd node_energy;  // at the final filter
};

DichotomyRun run_dichotomy(const Laplacian& L, int k,
                           const EstimationConfig& cfg) {
  const int n = L.n;
  if (k < 1 || k >= n)
    throw std::invalid_argument("estimate_lambda_k: need 1 <= k < n");
  if (!(cfg.precision > 0.0 && cfg.precision < 1.0))
    throw std::invalid_argument("estimate_lambda_k: precision must be in (0,1)");

  const int num_signals = cfg.resolved_num_signals(n);
  Eigen::MatrixXd probes = draw_probe_signals(n, num_signals, cfg.seed);

  DichotomyRun run;
  run.diag.lambda_max =
      estimate_lambda_max(L, 1e-4, 200, mix_seed(cfg.seed, 0x6c6d6178));
  double lo = 0.0;
  double hi = run.diag.lambda_max;
  double lambda = hi / 2.0;

  for (int it = 0; it < cfg.max_bisections; ++it) {
    double cutoff = std::min(lambda, run.diag.lambda_max * (1.0 - 1e-12));
    PolynomialFilter f = fit_lowpass(cutoff, run.diag.lambda_max,
                                     cfg.cheb_degree, cfg.damping);
    Eigen::MatrixXd filtered = apply_filter(L, f, probes);
    run.node_energy = filtered.array().square().rowwise().sum();
    double total = run.node_energy.sum();
    run.diag.lambda_hat = lambda;
    run.diag.final_count = total;
    run.diag.iterations = it + 1;

    long long count = round_half_away(total);
    if (count == k && std::abs(lo - hi) <= cfg.precision * hi) {
      run.diag.converged = true;
      return run;
    }
    if (count >= k)
      hi = lambda;
    else
      lo = lambda;
    lambda = 0.5 * (lo + hi);
  }
  run.diag.converged = false;
  return run;
}

}  // namespace

EstimationDiagnostics estimate_lambda_k(const Laplacian& L, int k,
                                        const EstimationConfig& cfg) {
  return run_dichotomy(L, k, cfg).diag;
}

SamplingDistribution estimate_optimal_distribution(const Laplacian& L, int k,
                                                   const EstimationConfig& cfg,
                                                   EstimationDiagnostics* diag) {
  DichotomyRun run = run_dichotomy(L, k, cfg);
  if (diag) *diag = run.diag;
  Eigen::VectorXd p = run.node_energy;
  double total = p.sum();
  if (total <= 0.0)
    throw std::runtime_error("estimate_optimal_distribution: zero total energy");
  p /= total;
  bool hit_floor = false;
  for (int i = 0; i < p.size(); ++i) {
    if (p(i) < 1e-15) {
      p(i) = 1e-15;
      hit_floor = true;
    }
  }
  if (hit_floor) p /= p.sum();
  SamplingDistribution d;
  d.p = p;
  return d;
}

}  // namespace gsp
