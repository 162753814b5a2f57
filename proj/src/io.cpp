#include "gsp/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gsp/sample.hpp"

namespace gsp {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_graph: cannot open " + path);

  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("load_graph: empty file " + path);

  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || lower(object) != "matrix" ||
      lower(format) != "coordinate")
    throw std::runtime_error("load_graph: malformed Matrix Market header");
  field = lower(field);
  symmetry = lower(symmetry);
  if (field != "real" && field != "pattern")
    throw std::runtime_error("load_graph: unsupported field '" + field + "'");
  if (symmetry != "symmetric" && symmetry != "general")
    throw std::runtime_error("load_graph: unsupported symmetry '" + symmetry + "'");

  // skip comments
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '%') break;
  }
  std::istringstream sizes(line);
  long rows = 0, cols = 0, nnz = 0;
  if (!(sizes >> rows >> cols >> nnz) || rows <= 0 || cols != rows)
    throw std::runtime_error("load_graph: bad size line");

  const int n = static_cast<int>(rows);
  std::map<std::pair<int, int>, double> entries;
  for (long e = 0; e < nnz; ++e) {
    long i = 0, j = 0;
    double w = 1.0;
    if (!(in >> i >> j)) throw std::runtime_error("load_graph: truncated entries");
    if (field == "real" && !(in >> w))
      throw std::runtime_error("load_graph: truncated entries");
    if (i < 1 || i > n || j < 1 || j > n)
      throw std::runtime_error("load_graph: entry index out of range");
    if (w < 0.0) throw std::runtime_error("load_graph: negative weight");
    if (i == j) continue;
    int a = static_cast<int>(i) - 1, b = static_cast<int>(j) - 1;
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto [it, inserted] = entries.emplace(key, w);
    if (!inserted) {
      if (symmetry == "general") {
        if (std::abs(it->second - w) > 1e-12)
          throw std::runtime_error(
              "load_graph: asymmetric weights at (" + std::to_string(i) + "," +
              std::to_string(j) + ")");
      } else {
        it->second = std::max(it->second, w);
      }
    }
  }

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(entries.size());
  for (const auto& [key, w] : entries)
    trip.emplace_back(key.first, key.second, w);
  return graph_from_triplets(n, trip);
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_graph: cannot open " + path);
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  std::vector<Eigen::Triplet<double>> lowerTri;
  for (int col = 0; col < g.weights.outerSize(); ++col)
    for (SparseMatrix::InnerIterator it(g.weights, col); it; ++it)
      if (it.row() > it.col())
        lowerTri.emplace_back(static_cast<int>(it.row()),
                              static_cast<int>(it.col()), it.value());
  std::sort(lowerTri.begin(), lowerTri.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.col(), a.row()) < std::make_pair(b.col(), b.row());
  });
  out << g.n << ' ' << g.n << ' ' << lowerTri.size() << '\n';
  for (const auto& t : lowerTri)
    out << (t.row() + 1) << ' ' << (t.col() + 1) << ' '
        << format_double(t.value()) << '\n';
  if (!out) throw std::runtime_error("save_graph: write failed for " + path);
}

Eigen::MatrixXd load_features_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_features_csv: cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        numeric = false;
        break;
      }
    }
    if (!numeric && rows.empty()) continue;  // header row
    if (!numeric)
      throw std::runtime_error("load_features_csv: non-numeric cell in " + path);
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::runtime_error("load_features_csv: ragged rows in " + path);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("load_features_csv: no data rows");
  Eigen::MatrixXd m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.front().size(); ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

namespace {

void save_indexed_csv(const Eigen::VectorXd& v, const std::string& path,
                      const char* header) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << header << '\n';
  for (int i = 0; i < v.size(); ++i)
    out << i << ',' << format_double(v(i)) << '\n';
}

Eigen::VectorXd load_indexed_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<double> vals;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) continue;
    char* end = nullptr;
    long idx = std::strtol(line.c_str(), &end, 10);
    if (end == line.c_str()) continue;  // header
    double v = std::stod(line.substr(comma + 1));
    if (idx != static_cast<long>(vals.size()))
      throw std::runtime_error("csv: node indices not contiguous in " + path);
    vals.push_back(v);
  }
  return Eigen::Map<Eigen::VectorXd>(vals.data(),
                                     static_cast<int>(vals.size()));
}

}  // namespace

void save_distribution_csv(const Eigen::VectorXd& p, const std::string& path) {
  save_indexed_csv(p, path, "node_index,probability");
}

Eigen::VectorXd load_distribution_csv(const std::string& path) {
  return load_indexed_csv(path);
}

void save_signal_csv(const Eigen::VectorXd& x, const std::string& path) {
  save_indexed_csv(x, path, "node_index,value");
}

Eigen::VectorXd load_signal_csv(const std::string& path) {
  return load_indexed_csv(path);
}

void save_sample_set_csv(const SampleSet& omega, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_sample_set_csv: cannot open " + path);
  out << "position,node_index,probability\n";
  for (int j = 0; j < omega.m(); ++j)
    out << j << ',' << omega.indices[j] << ','
        << format_double(omega.probs[j]) << '\n';
}

SampleSet load_sample_set_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_sample_set_csv: cannot open " + path);
  SampleSet s;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || !std::isdigit(line[0])) continue;
    int pos, node;
    double prob;
    if (std::sscanf(line.c_str(), "%d,%d,%lf", &pos, &node, &prob) != 3)
      throw std::runtime_error("load_sample_set_csv: bad row in " + path);
    s.indices.push_back(node);
    s.probs.push_back(prob);
  }
  return s;
}

void save_measurement_csv(const Measurement& y, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_measurement_csv: cannot open " + path);
  out << "position,value\n";
  for (int j = 0; j < y.values.size(); ++j)
    out << j << ',' << format_double(y.values(j)) << '\n';
}

Measurement load_measurement_csv(const std::string& path) {
  Measurement y;
  y.values = load_indexed_csv(path);
  return y;
}

void save_symmetric_matrix(const SparseMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_symmetric_matrix: cannot open " + path);
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  std::vector<Eigen::Triplet<double>> entries;
  for (int col = 0; col < m.outerSize(); ++col)
    for (SparseMatrix::InnerIterator it(m, col); it; ++it)
      if (it.row() >= it.col())
        entries.emplace_back(static_cast<int>(it.row()),
                             static_cast<int>(it.col()), it.value());
  out << m.rows() << ' ' << m.cols() << ' ' << entries.size() << '\n';
  for (const auto& t : entries)
    out << (t.row() + 1) << ' ' << (t.col() + 1) << ' '
        << format_double(t.value()) << '\n';
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("CsvTable: row width mismatch");
  rows.push_back(std::move(row));
}

std::string CsvTable::to_string() const {
  std::ostringstream out;
  out << "# config " << config_hash << '\n';
  for (std::size_t c = 0; c < columns.size(); ++c)
    out << columns[c] << (c + 1 < columns.size() ? ',' : '\n');
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      out << row[c] << (c + 1 < row.size() ? ',' : '\n');
  return out.str();
}

void CsvTable::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("CsvTable: cannot open " + path);
  out << to_string();
  if (!out) throw std::runtime_error("CsvTable: write failed for " + path);
}

std::string config_hash_hex(const std::string& canonical_config) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canonical_config) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace gsp
