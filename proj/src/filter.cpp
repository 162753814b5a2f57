#include "gsp/filter.hpp"

#include <cmath>
#include <stdexcept>

#include "gsp/rng.hpp"

namespace gsp {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

double PolynomialFilter::response(double t) const {
  // Clenshaw on x = 2t/lambda_max - 1
  double x = 2.0 * t / lambda_max - 1.0;
  double b1 = 0.0, b2 = 0.0;
  for (int j = degree; j >= 1; --j) {
    double b0 = cheb_coeffs(j) + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return cheb_coeffs(0) + x * b1 - b2;
}

Eigen::VectorXd PolynomialFilter::response(const Eigen::VectorXd& t) const {
  Eigen::VectorXd out(t.size());
  for (int i = 0; i < t.size(); ++i) out(i) = response(t(i));
  return out;
}

PolynomialFilter PolynomialFilter::identity(double lambda_max) {
  if (lambda_max <= 0.0)
    throw std::invalid_argument("identity filter: lambda_max must be positive");
  PolynomialFilter f;
  f.degree = 0;
  f.cheb_coeffs = Eigen::VectorXd::Ones(1);
  f.lambda_max = lambda_max;
  f.cutoff = lambda_max;
  return f;
}

double estimate_lambda_max(const Laplacian& L, double tol, int max_iters,
                           std::uint64_t seed) {
  auto rng = make_rng(mix_seed(seed, 0x9d2c5680));
  Eigen::VectorXd v = gaussian_vector(L.n, rng);
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    Eigen::VectorXd w = L.matrix * v;
    double next = v.dot(w);
    double nrm = w.norm();
    if (nrm == 0.0) return 0.0;  // edgeless graph
    w /= nrm;
    if (it > 0 && std::abs(next - lambda) <= tol * std::max(next, 1.0)) {
      return next * 1.01;
    }
    lambda = next;
    v = w;
  }
  // non-converged: pad harder so the Chebyshev interval still covers
  // the spectrum
  return lambda * 1.05;
}

PolynomialFilter fit_lowpass(double cutoff, double lambda_max, int degree,
                             Damping damping) {
  if (!(cutoff > 0.0 && cutoff < lambda_max))
    throw std::invalid_argument("fit_lowpass: need 0 < cutoff < lambda_max");
  if (degree < 1) throw std::invalid_argument("fit_lowpass: degree must be >= 1");

  // Step function b(t) = 1 for t <= cutoff maps to x <= xc on [-1, 1];
  // its Chebyshev series has closed-form coefficients.
  double xc = 2.0 * cutoff / lambda_max - 1.0;
  double theta_c = std::acos(std::clamp(xc, -1.0, 1.0));

  PolynomialFilter f;
  f.degree = degree;
  f.lambda_max = lambda_max;
  f.cutoff = cutoff;
  f.cheb_coeffs.resize(degree + 1);
  f.cheb_coeffs(0) = 1.0 - theta_c / kPi;
  for (int j = 1; j <= degree; ++j)
    f.cheb_coeffs(j) = -2.0 * std::sin(j * theta_c) / (j * kPi);

  if (damping == Damping::jackson) {
    // Jackson factors g_j for order d
    const int d = degree;
    double denom = d + 2.0;
    for (int j = 1; j <= degree; ++j) {
      double g = ((d + 2.0 - j) * std::cos(j * kPi / denom) +
                  std::sin(j * kPi / denom) / std::tan(kPi / denom)) /
                 (d + 2.0);
      f.cheb_coeffs(j) *= g;
    }
  }
  return f;
}

Eigen::MatrixXd apply_filter(
    const std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)>& matvec,
    const PolynomialFilter& f, const Eigen::MatrixXd& signals) {
  // X = (2/lambda_max) L - I; T_0 = S, T_{j+1} = 2 X T_j - T_{j-1}
  const double a = 2.0 / f.lambda_max;
  auto op = [&](const Eigen::MatrixXd& s) -> Eigen::MatrixXd {
    return a * matvec(s) - s;
  };
  Eigen::MatrixXd tprev = signals;
  Eigen::MatrixXd acc = f.cheb_coeffs(0) * tprev;
  if (f.degree == 0) return acc;
  Eigen::MatrixXd tcur = op(signals);
  acc += f.cheb_coeffs(1) * tcur;
  for (int j = 2; j <= f.degree; ++j) {
    Eigen::MatrixXd tnext = 2.0 * op(tcur) - tprev;
    acc += f.cheb_coeffs(j) * tnext;
    tprev = std::move(tcur);
    tcur = std::move(tnext);
  }
  return acc;
}

Eigen::MatrixXd apply_filter(const Laplacian& L, const PolynomialFilter& f,
                             const Eigen::MatrixXd& signals) {
  if (signals.rows() != L.n)
    throw std::invalid_argument("apply_filter: dimension mismatch");
  return apply_filter(
      [&L](const Eigen::MatrixXd& s) -> Eigen::MatrixXd { return L.matrix * s; },
      f, signals);
}

Eigen::MatrixXd apply_exact_filter(const SpectralBasis& basis_full,
                                   const Eigen::VectorXd& response,
                                   const Eigen::MatrixXd& signals) {
  if (basis_full.k != basis_full.n())
    throw std::invalid_argument("apply_exact_filter: full basis required");
  if (response.size() != basis_full.k)
    throw std::invalid_argument("apply_exact_filter: response length mismatch");
  return basis_full.vectors *
         (response.asDiagonal() * (basis_full.vectors.transpose() * signals));
}

}  // namespace gsp
