#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>

#include "gsp/graph.hpp"
#include "gsp/rng.hpp"
#include "gsp/signal.hpp"
#include "gsp/spectral.hpp"

TEST_SUITE("signal") {

TEST_CASE("random bandlimited: unit norm, in-span, deterministic") {
  gsp::Graph g = gsp::gen_community({15, 15}, 0.7, 0.05, 12);
  gsp::Laplacian L = gsp::build_laplacian(g, gsp::LaplacianKind::combinatorial);
  auto basis = gsp::partial_eigendecomposition(L, 5);

  Eigen::VectorXd x = gsp::random_bandlimited(basis, 99);
  CHECK(x.norm() == doctest::Approx(1.0).epsilon(1e-12));
  Eigen::VectorXd resid = x - gsp::project_bandlimited(basis, x);
  CHECK(resid.norm() < 1e-10);

  CHECK((x - gsp::random_bandlimited(basis, 99)).norm() == 0.0);
  CHECK((x - gsp::random_bandlimited(basis, 100)).norm() > 0.0);
}

TEST_CASE("k=1 bandlimited signal is the constant vector") {
  gsp::Laplacian L = gsp::build_laplacian(gsp::gen_path(16),
                                          gsp::LaplacianKind::combinatorial);
  auto basis = gsp::partial_eigendecomposition(L, 1);
  Eigen::VectorXd x = gsp::random_bandlimited(basis, 3);
  CHECK((x.array().abs() - 0.25).abs().maxCoeff() < 1e-10);  // +-1/sqrt(16)
}

TEST_CASE("projection: idempotent and matches the dense oracle") {
  gsp::Graph g = gsp::gen_community({20, 20, 10}, 0.6, 0.05, 8);
  gsp::Laplacian L = gsp::build_laplacian(g, gsp::LaplacianKind::combinatorial);
  auto basis = gsp::partial_eigendecomposition(L, 8);
  auto rng = gsp::make_rng(7);
  Eigen::VectorXd x = gsp::gaussian_vector(g.n, rng);

  Eigen::VectorXd p1 = gsp::project_bandlimited(basis, x);
  Eigen::VectorXd p2 = gsp::project_bandlimited(basis, p1);
  CHECK((p1 - p2).norm() < 1e-12);

  Eigen::MatrixXd proj = basis.vectors * basis.vectors.transpose();
  CHECK((p1 - proj * x).norm() < 1e-10);
}

TEST_CASE("projection depends only on the span") {
  gsp::Graph g = gsp::gen_community({12, 14}, 0.7, 0.1, 2);
  gsp::Laplacian L = gsp::build_laplacian(g, gsp::LaplacianKind::combinatorial);
  auto basis = gsp::partial_eigendecomposition(L, 4);
  auto rng = gsp::make_rng(55);
  Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(
                          gsp::gaussian_matrix(4, 4, rng))
                          .householderQ();
  gsp::SpectralBasis mixed = basis;
  mixed.vectors = basis.vectors * q;

  Eigen::VectorXd x = gsp::gaussian_vector(g.n, rng);
  Eigen::VectorXd a = gsp::project_bandlimited(basis, x);
  Eigen::VectorXd b = gsp::project_bandlimited(mixed, x);
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-9);
}

}  // TEST_SUITE
