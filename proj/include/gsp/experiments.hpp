#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsp/decode.hpp"
#include "gsp/estimate.hpp"
#include "gsp/graph.hpp"
#include "gsp/io.hpp"
#include "gsp/spectral.hpp"

namespace gsp {

/// Configuration for the Monte-Carlo experiment drivers. Values load
/// from a key=value file and may be overridden by CLI flags.
struct ExperimentConfig {
  // graph selection
  std::string graph = "community";  // path | cycle | tree | community | file
  int n = 1000;
  int depth = 9;
  std::vector<int> comm_sizes;  // empty: resolved from comm_type
  std::string comm_type = "C1";
  double p_in = 0.7;
  double p_out = 0.01;
  std::string graph_file;
  std::string laplacian = "combinatorial";

  int k = 10;
  std::vector<std::string> dist_modes = {"uniform", "optimal", "estimated"};
  std::vector<int> m_sweep;
  int m_recon = 200;
  int trials = 100;
  double rip_threshold = 0.995;
  std::vector<double> sigmas = {0.0,    1.5e-3, 3.7e-3,
                                8.8e-3, 2.1e-2, 5.0e-2};
  std::vector<double> gamma_grid;
  std::vector<int> powers = {1, 2, 4};
  int signals_per_point = 10;
  std::uint64_t seed = 0;
  std::string out_dir = ".";

  int cheb_degree = 100;
  int num_signals = 0;       // Algorithm-1 probe count; 0 = 2 ln n
  double est_precision = 0.01;

  static ExperimentConfig from_file(const std::string& path);
  void set_kv(const std::string& key, const std::string& value);
  std::string canonical() const;  // sorted key=value dump for hashing
  EstimationConfig estimation(std::uint64_t run_seed) const;
};

// Community size presets C1..C5 used throughout the experiments.
std::vector<int> community_sizes(const std::string& type);

Graph build_graph(const ExperimentConfig& cfg);
Laplacian build_laplacian(const ExperimentConfig& cfg, const Graph& g);

// Fraction of trials with lower RIP constant below the threshold, per
// (m, distribution mode). Columns: m,distribution,empirical_probability,
// nonconverged.
CsvTable rip_probability_experiment(const ExperimentConfig& cfg);

// Mean reconstruction errors of the efficient decoder over random
// bandlimited signals. Columns: gamma,power,sigma,mean_total,
// mean_inband,mean_outband,failures.
CsvTable reconstruction_sweep(const ExperimentConfig& cfg);

// Exact and estimated optimal sampling distributions side by side.
// Columns: node,p_exact,p_estimated.
CsvTable distribution_table(const ExperimentConfig& cfg);

struct PipelineResult {
  int n = 0;
  int m = 0;
  int distinct_samples = 0;
  double effective_rate = 0.0;
  double snr_estimated_db = 0.0;
  double snr_uniform_db = 0.0;
  Eigen::MatrixXd reconstruction;  // under the estimated distribution
  SampleSet samples;
};

// End-to-end workflow on a feature matrix: k-NN graph, Algorithm-1
// distribution, sampling, per-dimension efficient decoding, SNR report
// against uniform sampling at equal m.
PipelineResult pipeline_run(const Eigen::MatrixXd& features, int k_nn, int k,
                            double sampling_fraction, double gamma, int power,
                            double sigma, std::uint64_t seed,
                            int cheb_degree = 100);

}  // namespace gsp
