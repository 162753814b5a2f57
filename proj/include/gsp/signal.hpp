#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "gsp/spectral.hpp"

namespace gsp {

// Random unit-norm signal in span(U_k): x = U_k g / ||U_k g||,
// g standard Gaussian.
Eigen::VectorXd random_bandlimited(const SpectralBasis& basis,
                                   std::uint64_t seed);

// Orthogonal projection U_k U_k' x.
Eigen::VectorXd project_bandlimited(const SpectralBasis& basis,
                                    const Eigen::VectorXd& x);

}  // namespace gsp
