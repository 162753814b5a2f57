#include "gsp/signal.hpp"

#include <stdexcept>

#include "gsp/rng.hpp"

namespace gsp {

Eigen::VectorXd random_bandlimited(const SpectralBasis& basis,
                                   std::uint64_t seed) {
  auto rng = make_rng(mix_seed(seed, 0x7369676e));
  Eigen::VectorXd coeffs = gaussian_vector(basis.k, rng);
  Eigen::VectorXd x = basis.vectors * coeffs;
  double nrm = x.norm();
  if (nrm == 0.0)
    throw std::runtime_error("random_bandlimited: degenerate draw");
  return x / nrm;
}

Eigen::VectorXd project_bandlimited(const SpectralBasis& basis,
                                    const Eigen::VectorXd& x) {
  if (x.size() != basis.n())
    throw std::invalid_argument("project_bandlimited: dimension mismatch");
  return basis.vectors * (basis.vectors.transpose() * x);
}

}  // namespace gsp
