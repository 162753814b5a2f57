#include "gsp/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gsp/rng.hpp"

namespace gsp {

SampleSet draw_with_replacement(const SamplingDistribution& p, int m,
                                std::uint64_t seed) {
  if (m < 0) throw std::invalid_argument("draw_with_replacement: m must be >= 0");
  const int n = static_cast<int>(p.p.size());
  Eigen::VectorXd cdf(n);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    acc += p.p(i);
    cdf(i) = acc;
  }
  cdf(n - 1) = 1.0;  // guard against rounding in the tail

  auto rng = make_rng(mix_seed(seed, 0x64726177));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  SampleSet s;
  s.with_replacement = true;
  s.indices.reserve(m);
  s.probs.reserve(m);
  for (int j = 0; j < m; ++j) {
    double u = unif(rng);
    int idx = static_cast<int>(
        std::lower_bound(cdf.data(), cdf.data() + n, u) - cdf.data());
    s.indices.push_back(idx);
    s.probs.push_back(p.p(idx));
  }
  return s;
}

SampleSet draw_without_replacement_uniform(int n, int m, std::uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("draw_without_replacement: n must be positive");
  if (m < 0 || m > n)
    throw std::invalid_argument("draw_without_replacement: need 0 <= m <= n");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  auto rng = make_rng(mix_seed(seed, 0x756e6966));
  // partial Fisher-Yates
  for (int j = 0; j < m; ++j) {
    std::uniform_int_distribution<int> pick(j, n - 1);
    std::swap(pool[j], pool[pick(rng)]);
  }
  SampleSet s;
  s.with_replacement = false;
  s.indices.assign(pool.begin(), pool.begin() + m);
  s.probs.assign(m, 1.0 / n);
  return s;
}

Measurement measure(const Eigen::VectorXd& x, const SampleSet& omega,
                    double sigma, std::uint64_t seed) {
  if (sigma < 0.0) throw std::invalid_argument("measure: sigma must be >= 0");
  const int m = omega.m();
  Eigen::VectorXd noise = Eigen::VectorXd::Zero(m);
  if (sigma > 0.0) {
    auto rng = make_rng(mix_seed(seed, 0x6e6f6973));
    noise = gaussian_vector(m, rng, sigma);
  }
  Measurement y = measure(x, omega, noise);
  y.noise_sigma = sigma;
  return y;
}

Measurement measure(const Eigen::VectorXd& x, const SampleSet& omega,
                    const Eigen::VectorXd& noise) {
  const int m = omega.m();
  if (noise.size() != m)
    throw std::invalid_argument("measure: noise length mismatch");
  Measurement y;
  y.values.resize(m);
  for (int j = 0; j < m; ++j) {
    int node = omega.indices[j];
    if (node < 0 || node >= x.size())
      throw std::invalid_argument("measure: sample index out of range");
    y.values(j) = x(node) + noise(j);
  }
  return y;
}

Eigen::VectorXd reweight(const SampleSet& omega, const Eigen::VectorXd& v) {
  if (v.size() != omega.m())
    throw std::invalid_argument("reweight: length mismatch");
  Eigen::VectorXd out(v.size());
  for (int j = 0; j < v.size(); ++j)
    out(j) = v(j) / std::sqrt(omega.probs[j]);
  return out;
}

Eigen::VectorXd reweight_adjoint(const SampleSet& omega,
                                 const Eigen::VectorXd& v, int n) {
  if (v.size() != omega.m())
    throw std::invalid_argument("reweight_adjoint: length mismatch");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < v.size(); ++j)
    out(omega.indices[j]) += v(j) / std::sqrt(omega.probs[j]);
  return out;
}

}  // namespace gsp
