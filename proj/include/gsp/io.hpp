#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "gsp/graph.hpp"

namespace gsp {

// Matrix Market coordinate format, 1-indexed on disk.
// Accepts "real" or "pattern" fields with "symmetric" or "general"
// symmetry. General files must carry consistent (i,j)/(j,i) weights.
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

// Dense feature matrix, one CSV row per node.
Eigen::MatrixXd load_features_csv(const std::string& path);

// node_index,probability
void save_distribution_csv(const Eigen::VectorXd& p, const std::string& path);
Eigen::VectorXd load_distribution_csv(const std::string& path);

// node_index,value
void save_signal_csv(const Eigen::VectorXd& x, const std::string& path);
Eigen::VectorXd load_signal_csv(const std::string& path);

struct SampleSet;
struct Measurement;

// position,node_index,probability
void save_sample_set_csv(const SampleSet& omega, const std::string& path);
SampleSet load_sample_set_csv(const std::string& path);

// position,value
void save_measurement_csv(const Measurement& y, const std::string& path);
Measurement load_measurement_csv(const std::string& path);

// Sparse symmetric matrix (e.g. a Laplacian) in Matrix Market
// coordinate format, diagonal included.
void save_symmetric_matrix(const SparseMatrix& m, const std::string& path);

// Tidy experiment table: a "# config <hash>" provenance line, a header
// row, then data rows. Values are printed with max round-trip precision.
struct CsvTable {
  std::string config_hash;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  void write(const std::string& path) const;
  std::string to_string() const;
};

std::string format_double(double v);

// FNV-1a over a canonical key=value dump; used for CSV provenance lines.
std::string config_hash_hex(const std::string& canonical_config);

}  // namespace gsp
