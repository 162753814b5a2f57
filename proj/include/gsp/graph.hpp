#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace gsp {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Undirected weighted graph: node count plus a sparse symmetric
/// adjacency with nonnegative weights and zero diagonal.
struct Graph {
  int n = 0;
  SparseMatrix weights;  // n x n, symmetric, zero diagonal

  Eigen::VectorXd degrees() const;
  std::int64_t edge_count() const;  // undirected edges (i < j)
};

enum class LaplacianKind { combinatorial, normalized };

struct Laplacian {
  LaplacianKind kind = LaplacianKind::combinatorial;
  int n = 0;
  SparseMatrix matrix;  // symmetric PSD

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const { return matrix * x; }
};

Laplacian build_laplacian(const Graph& g, LaplacianKind kind);

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_binary_tree(int depth);

// Stochastic block model: unit-weight edges drawn independently,
// within-community with probability p_in, across with p_out.
Graph gen_community(const std::vector<int>& sizes, double p_in, double p_out,
                    std::uint64_t seed);

// Gaussian-kernel k-NN similarity graph over feature rows. sigma is the
// standard deviation of the directed-pair distances, computed before
// symmetrization; symmetrization is elementwise max.
Graph knn_graph(const Eigen::MatrixXd& features, int k_nn);

// Builds a graph from explicit (i, j, w) triplets, symmetrizing and
// dropping the diagonal. Validates nonnegativity.
Graph graph_from_triplets(int n,
                          const std::vector<Eigen::Triplet<double>>& triplets);

// Connected components of the graph; returns component index per node.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);

}  // namespace gsp
