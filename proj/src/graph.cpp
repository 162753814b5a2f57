#include "gsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <stdexcept>

#include "gsp/rng.hpp"

namespace gsp {

Eigen::VectorXd Graph::degrees() const {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
  for (int col = 0; col < weights.outerSize(); ++col)
    for (SparseMatrix::InnerIterator it(weights, col); it; ++it)
      d(it.row()) += it.value();
  return d;
}

std::int64_t Graph::edge_count() const {
  std::int64_t cnt = 0;
  for (int col = 0; col < weights.outerSize(); ++col)
    for (SparseMatrix::InnerIterator it(weights, col); it; ++it)
      if (it.row() < it.col()) ++cnt;
  return cnt;
}

Graph graph_from_triplets(int n,
                          const std::vector<Eigen::Triplet<double>>& triplets) {
  if (n <= 0) throw std::invalid_argument("graph: node count must be positive");
  std::vector<Eigen::Triplet<double>> sym;
  sym.reserve(triplets.size() * 2);
  for (const auto& t : triplets) {
    if (t.row() < 0 || t.row() >= n || t.col() < 0 || t.col() >= n)
      throw std::invalid_argument("graph: triplet index out of range");
    if (t.value() < 0.0)
      throw std::invalid_argument("graph: negative edge weight");
    if (t.row() == t.col() || t.value() == 0.0) continue;
    sym.emplace_back(t.row(), t.col(), t.value());
    sym.emplace_back(t.col(), t.row(), t.value());
  }
  Graph g;
  g.n = n;
  g.weights.resize(n, n);
  // duplicate (i,j) entries collapse to the max weight
  g.weights.setFromTriplets(sym.begin(), sym.end(),
                            [](double a, double b) { return std::max(a, b); });
  g.weights.makeCompressed();
  return g;
}

Laplacian build_laplacian(const Graph& g, LaplacianKind kind) {
  Eigen::VectorXd d = g.degrees();
  Laplacian lap;
  lap.kind = kind;
  lap.n = g.n;

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(g.weights.nonZeros() + g.n);
  if (kind == LaplacianKind::combinatorial) {
    for (int col = 0; col < g.weights.outerSize(); ++col)
      for (SparseMatrix::InnerIterator it(g.weights, col); it; ++it)
        trip.emplace_back(it.row(), it.col(), -it.value());
    for (int i = 0; i < g.n; ++i) trip.emplace_back(i, i, d(i));
  } else {
    for (int i = 0; i < g.n; ++i)
      if (d(i) <= 0.0)
        throw std::invalid_argument(
            "normalized laplacian: node " + std::to_string(i) +
            " has zero degree");
    for (int col = 0; col < g.weights.outerSize(); ++col)
      for (SparseMatrix::InnerIterator it(g.weights, col); it; ++it)
        trip.emplace_back(it.row(), it.col(),
                          -it.value() / std::sqrt(d(it.row()) * d(it.col())));
    for (int i = 0; i < g.n; ++i) trip.emplace_back(i, i, 1.0);
  }
  lap.matrix.resize(g.n, g.n);
  lap.matrix.setFromTriplets(trip.begin(), trip.end());
  lap.matrix.makeCompressed();
  return lap;
}

Graph gen_path(int n) {
  if (n < 2) throw std::invalid_argument("gen_path: n must be >= 2");
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(n - 1);
  for (int i = 0; i + 1 < n; ++i) trip.emplace_back(i, i + 1, 1.0);
  return graph_from_triplets(n, trip);
}

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("gen_cycle: n must be >= 3");
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(n);
  for (int i = 0; i + 1 < n; ++i) trip.emplace_back(i, i + 1, 1.0);
  trip.emplace_back(n - 1, 0, 1.0);
  return graph_from_triplets(n, trip);
}

Graph gen_binary_tree(int depth) {
  if (depth < 0) throw std::invalid_argument("gen_binary_tree: depth must be >= 0");
  if (depth > 30) throw std::invalid_argument("gen_binary_tree: depth too large");
  int n = (1 << (depth + 1)) - 1;
  if (n == 1) {
    Graph g;
    g.n = 1;
    g.weights.resize(1, 1);
    return g;
  }
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(n - 1);
  for (int child = 1; child < n; ++child)
    trip.emplace_back((child - 1) / 2, child, 1.0);
  return graph_from_triplets(n, trip);
}

Graph gen_community(const std::vector<int>& sizes, double p_in, double p_out,
                    std::uint64_t seed) {
  if (sizes.empty()) throw std::invalid_argument("gen_community: empty sizes");
  for (int s : sizes)
    if (s <= 0) throw std::invalid_argument("gen_community: sizes must be positive");
  if (!(p_out >= 0.0 && p_out < p_in && p_in <= 1.0))
    throw std::invalid_argument("gen_community: need 0 <= p_out < p_in <= 1");

  int n = 0;
  std::vector<int> community;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    n += sizes[c];
    community.insert(community.end(), sizes[c], static_cast<int>(c));
  }

  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Eigen::Triplet<double>> trip;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double p = (community[i] == community[j]) ? p_in : p_out;
      if (p > 0.0 && unif(rng) < p) trip.emplace_back(i, j, 1.0);
    }
  }
  return graph_from_triplets(n, trip);
}

Graph knn_graph(const Eigen::MatrixXd& features, int k_nn) {
  const int n = static_cast<int>(features.rows());
  if (k_nn < 1) throw std::invalid_argument("knn_graph: k_nn must be >= 1");
  if (n <= k_nn) throw std::invalid_argument("knn_graph: need n > k_nn");
  if (!features.allFinite())
    throw std::invalid_argument("knn_graph: non-finite feature entries");

  // brute force; fine at desk scale
  std::vector<std::vector<std::pair<int, double>>> nbrs(n);
  std::vector<double> dist(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> idx;
    idx.reserve(n - 1);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      dist[j] = (features.row(i) - features.row(j)).norm();
      idx.push_back(j);
    }
    std::nth_element(idx.begin(), idx.begin() + (k_nn - 1), idx.end(),
                     [&](int a, int b) { return dist[a] < dist[b]; });
    idx.resize(k_nn);
    for (int j : idx) nbrs[i].emplace_back(j, dist[j]);
  }

  // sigma over the directed k-NN pair distances, before symmetrization
  double sum = 0.0, sumsq = 0.0;
  std::int64_t cnt = 0;
  for (const auto& list : nbrs)
    for (const auto& [j, d] : list) {
      sum += d;
      sumsq += d * d;
      ++cnt;
    }
  double mean = sum / static_cast<double>(cnt);
  double var = sumsq / static_cast<double>(cnt) - mean * mean;
  double sigma = std::sqrt(std::max(var, 0.0));
  if (sigma <= 0.0) sigma = 1.0;  // all distances equal; any scale works

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(n) * k_nn);
  for (int i = 0; i < n; ++i)
    for (const auto& [j, d] : nbrs[i])
      trip.emplace_back(i, j, std::exp(-d * d / (2.0 * sigma * sigma)));
  // graph_from_triplets keeps the max of (i,j) and (j,i)
  return graph_from_triplets(n, trip);
}

std::vector<int> connected_components(const Graph& g, int* count) {
  std::vector<int> comp(g.n, -1);
  int c = 0;
  for (int start = 0; start < g.n; ++start) {
    if (comp[start] >= 0) continue;
    std::queue<int> q;
    q.push(start);
    comp[start] = c;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (SparseMatrix::InnerIterator it(g.weights, u); it; ++it) {
        int v = static_cast<int>(it.row());
        if (comp[v] < 0) {
          comp[v] = c;
          q.push(v);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

}  // namespace gsp
