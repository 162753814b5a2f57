#include "gsp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gsp/rng.hpp"
#include "gsp/signal.hpp"

namespace gsp {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (const auto& t : split(s, ',')) out.push_back(std::stoi(t));
  return out;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  for (const auto& t : split(s, ',')) out.push_back(std::stod(t));
  return out;
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    if constexpr (std::is_same_v<T, double>)
      out << format_double(v[i]);
    else
      out << v[i];
  }
  return out.str();
}

}  // namespace

std::vector<int> community_sizes(const std::string& type) {
  if (type == "C1") return std::vector<int>(10, 100);
  if (type == "C2") {
    std::vector<int> s{50};
    s.insert(s.end(), 8, 105);
    s.push_back(110);
    return s;
  }
  if (type == "C3") {
    std::vector<int> s{25};
    s.insert(s.end(), 8, 108);
    s.push_back(111);
    return s;
  }
  if (type == "C4") {
    std::vector<int> s{17};
    s.insert(s.end(), 8, 109);
    s.push_back(111);
    return s;
  }
  if (type == "C5") {
    std::vector<int> s{13};
    s.insert(s.end(), 8, 109);
    s.push_back(115);
    return s;
  }
  throw std::invalid_argument("community_sizes: unknown type " + type);
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  ExperimentConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto strip = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      auto last = s.find_last_not_of(" \t");
      s.erase(last == std::string::npos ? 0 : last + 1);
      return s;
    };
    cfg.set_kv(strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
  }
  return cfg;
}

void ExperimentConfig::set_kv(const std::string& key, const std::string& value) {
  if (key == "graph") graph = value;
  else if (key == "n") n = std::stoi(value);
  else if (key == "depth") depth = std::stoi(value);
  else if (key == "comm_sizes") comm_sizes = parse_ints(value);
  else if (key == "comm_type") comm_type = value;
  else if (key == "p_in") p_in = std::stod(value);
  else if (key == "p_out") p_out = std::stod(value);
  else if (key == "graph_file") graph_file = value;
  else if (key == "laplacian") laplacian = value;
  else if (key == "k") k = std::stoi(value);
  else if (key == "dist_modes") dist_modes = split(value, ',');
  else if (key == "m_sweep") m_sweep = parse_ints(value);
  else if (key == "m_recon") m_recon = std::stoi(value);
  else if (key == "trials") trials = std::stoi(value);
  else if (key == "rip_threshold") rip_threshold = std::stod(value);
  else if (key == "sigmas") sigmas = parse_doubles(value);
  else if (key == "gamma_grid") gamma_grid = parse_doubles(value);
  else if (key == "powers") powers = parse_ints(value);
  else if (key == "signals_per_point") signals_per_point = std::stoi(value);
  else if (key == "seed") seed = std::stoull(value);
  else if (key == "out_dir") out_dir = value;
  else if (key == "cheb_degree") cheb_degree = std::stoi(value);
  else if (key == "num_signals") num_signals = std::stoi(value);
  else if (key == "est_precision") est_precision = std::stod(value);
  else throw std::invalid_argument("config: unknown key '" + key + "'");
}

std::string ExperimentConfig::canonical() const {
  std::ostringstream out;
  out << "cheb_degree=" << cheb_degree << '\n'
      << "comm_sizes=" << join(comm_sizes) << '\n'
      << "comm_type=" << comm_type << '\n'
      << "depth=" << depth << '\n'
      << "dist_modes=" << join(dist_modes) << '\n'
      << "est_precision=" << format_double(est_precision) << '\n'
      << "gamma_grid=" << join(gamma_grid) << '\n'
      << "graph=" << graph << '\n'
      << "graph_file=" << graph_file << '\n'
      << "k=" << k << '\n'
      << "laplacian=" << laplacian << '\n'
      << "m_recon=" << m_recon << '\n'
      << "m_sweep=" << join(m_sweep) << '\n'
      << "n=" << n << '\n'
      << "num_signals=" << num_signals << '\n'
      << "p_in=" << format_double(p_in) << '\n'
      << "p_out=" << format_double(p_out) << '\n'
      << "powers=" << join(powers) << '\n'
      << "rip_threshold=" << format_double(rip_threshold) << '\n'
      << "seed=" << seed << '\n'
      << "sigmas=" << join(sigmas) << '\n'
      << "signals_per_point=" << signals_per_point << '\n'
      << "trials=" << trials << '\n';
  return out.str();
}

EstimationConfig ExperimentConfig::estimation(std::uint64_t run_seed) const {
  EstimationConfig est;
  est.cheb_degree = cheb_degree;
  est.num_signals = num_signals;
  est.precision = est_precision;
  est.seed = run_seed;
  return est;
}

Graph build_graph(const ExperimentConfig& cfg) {
  if (cfg.graph == "path") return gen_path(cfg.n);
  if (cfg.graph == "cycle") return gen_cycle(cfg.n);
  if (cfg.graph == "tree") return gen_binary_tree(cfg.depth);
  if (cfg.graph == "community") {
    auto sizes = cfg.comm_sizes.empty() ? community_sizes(cfg.comm_type)
                                        : cfg.comm_sizes;
    return gen_community(sizes, cfg.p_in, cfg.p_out, mix_seed(cfg.seed, 0x67));
  }
  if (cfg.graph == "file") return load_graph(cfg.graph_file);
  throw std::invalid_argument("build_graph: unknown graph '" + cfg.graph + "'");
}

Laplacian build_laplacian(const ExperimentConfig& cfg, const Graph& g) {
  if (cfg.laplacian == "combinatorial")
    return build_laplacian(g, LaplacianKind::combinatorial);
  if (cfg.laplacian == "normalized")
    return build_laplacian(g, LaplacianKind::normalized);
  throw std::invalid_argument("build_laplacian: unknown kind '" +
                              cfg.laplacian + "'");
}

namespace {

std::vector<double> default_gamma_grid() {
  std::vector<double> g;
  for (int e = -4; e <= 2; ++e) {
    g.push_back(std::pow(10.0, e));
    if (e < 2) g.push_back(3.0 * std::pow(10.0, e));
  }
  return g;
}

int mode_id(const std::string& mode) {
  if (mode == "uniform") return 1;
  if (mode == "optimal") return 2;
  if (mode == "estimated") return 3;
  throw std::invalid_argument("unknown distribution mode '" + mode + "'");
}

}  // namespace

CsvTable rip_probability_experiment(const ExperimentConfig& cfg) {
  Graph g = build_graph(cfg);
  Laplacian L = build_laplacian(cfg, g);
  SpectralBasis basis = partial_eigendecomposition(L, cfg.k);

  SamplingDistribution uniform = SamplingDistribution::uniform(g.n);
  SamplingDistribution optimal = optimal_distribution(basis);

  std::vector<int> ms = cfg.m_sweep;
  if (ms.empty())
    for (int m = 100; m <= 700; m += 100) ms.push_back(m);

  CsvTable table;
  table.config_hash = config_hash_hex(cfg.canonical());
  table.columns = {"m", "distribution", "empirical_probability", "nonconverged"};

  for (int m : ms) {
    for (const auto& mode : cfg.dist_modes) {
      const int id = mode_id(mode);
      int success = 0;
      int nonconverged = 0;
      for (int t = 0; t < cfg.trials; ++t) {
        std::uint64_t trial_seed = mix_seed(
            cfg.seed, static_cast<std::uint64_t>(id) * 1000003ULL * (m + 1) + t);
        const SamplingDistribution* p = nullptr;
        SamplingDistribution estimated;
        if (id == 1) {
          p = &uniform;
        } else if (id == 2) {
          p = &optimal;
        } else {
          EstimationDiagnostics diag;
          estimated = estimate_optimal_distribution(
              L, cfg.k, cfg.estimation(mix_seed(trial_seed, 0xe5)), &diag);
          if (!diag.converged) ++nonconverged;
          p = &estimated;
        }
        SampleSet omega = draw_with_replacement(*p, m, trial_seed);
        if (rip_constants(basis, omega).lower <= cfg.rip_threshold) ++success;
      }
      table.add_row({std::to_string(m), mode,
                     format_double(static_cast<double>(success) / cfg.trials),
                     std::to_string(nonconverged)});
    }
  }
  return table;
}

CsvTable reconstruction_sweep(const ExperimentConfig& cfg) {
  Graph g = build_graph(cfg);
  Laplacian L = build_laplacian(cfg, g);
  SpectralBasis basis = partial_eigendecomposition(L, cfg.k);

  std::vector<double> gammas =
      cfg.gamma_grid.empty() ? default_gamma_grid() : cfg.gamma_grid;

  CsvTable table;
  table.config_hash = config_hash_hex(cfg.canonical());
  table.columns = {"gamma",      "power",       "sigma",   "mean_total",
                   "mean_inband", "mean_outband", "failures"};

  struct Acc {
    double total = 0.0, inband = 0.0, outband = 0.0;
    int failures = 0;
  };

  for (std::size_t s_idx = 0; s_idx < cfg.sigmas.size(); ++s_idx) {
    double sigma = cfg.sigmas[s_idx];
    std::vector<Acc> acc(gammas.size() * cfg.powers.size());
    for (int t = 0; t < cfg.signals_per_point; ++t) {
      std::uint64_t run_seed = mix_seed(cfg.seed, s_idx * 10007 + t);
      Eigen::VectorXd x = random_bandlimited(basis, mix_seed(run_seed, 1));
      SamplingDistribution p = estimate_optimal_distribution(
          L, cfg.k, cfg.estimation(mix_seed(run_seed, 2)));
      SampleSet omega =
          draw_with_replacement(p, cfg.m_recon, mix_seed(run_seed, 3));
      Measurement y = measure(x, omega, sigma, mix_seed(run_seed, 4));
      for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
        for (std::size_t pi = 0; pi < cfg.powers.size(); ++pi) {
          RegularizerSpec reg{cfg.powers[pi], gammas[gi]};
          EfficientDecodeResult res = efficient_decode(L, omega, y, reg);
          ErrorDecomposition d = decompose_error(basis, res.x, x);
          Acc& a = acc[gi * cfg.powers.size() + pi];
          a.total += d.total;
          a.inband += d.inband;
          a.outband += d.outband;
          if (!res.converged) ++a.failures;
        }
      }
    }
    for (std::size_t gi = 0; gi < gammas.size(); ++gi)
      for (std::size_t pi = 0; pi < cfg.powers.size(); ++pi) {
        const Acc& a = acc[gi * cfg.powers.size() + pi];
        double inv = 1.0 / cfg.signals_per_point;
        table.add_row({format_double(gammas[gi]),
                       std::to_string(cfg.powers[pi]), format_double(sigma),
                       format_double(a.total * inv),
                       format_double(a.inband * inv),
                       format_double(a.outband * inv),
                       std::to_string(a.failures)});
      }
  }
  return table;
}

CsvTable distribution_table(const ExperimentConfig& cfg) {
  Graph g = build_graph(cfg);
  Laplacian L = build_laplacian(cfg, g);

  SamplingDistribution estimated = estimate_optimal_distribution(
      L, cfg.k, cfg.estimation(mix_seed(cfg.seed, 0xd1)));

  bool exact_ok = g.n <= 2000;
  Eigen::VectorXd exact = Eigen::VectorXd::Constant(g.n, -1.0);
  if (exact_ok) {
    SpectralBasis basis = partial_eigendecomposition(L, cfg.k);
    exact = optimal_distribution(basis).p;
  }

  CsvTable table;
  table.config_hash = config_hash_hex(cfg.canonical());
  table.columns = {"node", "p_exact", "p_estimated"};
  for (int i = 0; i < g.n; ++i)
    table.add_row({std::to_string(i),
                   exact_ok ? format_double(exact(i)) : std::string("nan"),
                   format_double(estimated.p(i))});
  return table;
}

namespace {

double snr_db(const Eigen::MatrixXd& ref, const Eigen::MatrixXd& rec) {
  double err = (ref - rec).squaredNorm();
  if (err == 0.0) return 300.0;  // clamp for exact reconstructions
  return 10.0 * std::log10(ref.squaredNorm() / err);
}

Eigen::MatrixXd decode_all_columns(const Laplacian& L, const SampleSet& omega,
                                   const Eigen::MatrixXd& features,
                                   const RegularizerSpec& reg, double sigma,
                                   std::uint64_t seed) {
  Eigen::MatrixXd rec(features.rows(), features.cols());
  for (int j = 0; j < features.cols(); ++j) {
    Measurement y =
        measure(features.col(j), omega, sigma, mix_seed(seed, 100 + j));
    EfficientDecodeResult res = efficient_decode(L, omega, y, reg);
    rec.col(j) = res.x;
  }
  return rec;
}

}  // namespace

PipelineResult pipeline_run(const Eigen::MatrixXd& features, int k_nn, int k,
                            double sampling_fraction, double gamma, int power,
                            double sigma, std::uint64_t seed, int cheb_degree) {
  const int n = static_cast<int>(features.rows());
  if (!(sampling_fraction > 0.0 && sampling_fraction <= 1.0))
    throw std::invalid_argument("pipeline: sampling_fraction must be in (0,1]");

  Graph g = knn_graph(features, k_nn);
  Laplacian L = build_laplacian(g, LaplacianKind::combinatorial);

  PipelineResult out;
  out.n = n;
  out.m = std::max(1, static_cast<int>(std::lround(sampling_fraction * n)));
  if (k <= 0) k = std::max(1, out.m / 3);

  EstimationConfig est;
  est.cheb_degree = cheb_degree;
  est.seed = mix_seed(seed, 0xa1);
  SamplingDistribution p_est = estimate_optimal_distribution(L, k, est);

  out.samples = draw_with_replacement(p_est, out.m, mix_seed(seed, 0xa2));
  RegularizerSpec reg{power, gamma};
  out.reconstruction = decode_all_columns(L, out.samples, features, reg, sigma,
                                          mix_seed(seed, 0xa3));
  out.snr_estimated_db = snr_db(features, out.reconstruction);

  // uniform baseline at equal m; without replacement so fraction = 1
  // degenerates to a census
  SampleSet omega_u =
      draw_without_replacement_uniform(n, out.m, mix_seed(seed, 0xa4));
  Eigen::MatrixXd rec_u = decode_all_columns(L, omega_u, features, reg, sigma,
                                             mix_seed(seed, 0xa5));
  out.snr_uniform_db = snr_db(features, rec_u);

  std::set<int> distinct(out.samples.indices.begin(),
                         out.samples.indices.end());
  out.distinct_samples = static_cast<int>(distinct.size());
  out.effective_rate = static_cast<double>(out.distinct_samples) / n;
  return out;
}

}  // namespace gsp
