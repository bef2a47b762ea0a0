// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paretosub/objectives.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "paretosub/rng.hpp"

namespace paretosub {
namespace {

double standard_normal(RngStream& rng) {
  // Box-Muller, cosine branch only; two uniforms per draw keeps the stream
  // layout independent of call parity.
  const double u1 = 1.0 - rng.next_double();  // (0, 1]
  const double u2 = rng.next_double();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::MatrixXd rbf_matrix(const Eigen::MatrixXd& vectors, double sigma) {
  if (!(sigma > 0.0)) throw ConfigError("rbf similarity: sigma must be > 0");
  const Eigen::Index n = vectors.rows();
  Eigen::MatrixXd out(n, n);
  const double inv = 1.0 / (2.0 * sigma * sigma);
  for (Eigen::Index i = 0; i < n; ++i) {
    out(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d2 = (vectors.row(i) - vectors.row(j)).squaredNorm();
      const double s = std::exp(-d2 * inv);
      out(i, j) = s;
      out(j, i) = s;
    }
  }
  return out;
}

}  // namespace

// --------------------------------------------------------------------------
// Coverage

CoverageInstance::CoverageInstance(int num_items_in,
                                   std::vector<std::vector<int>> sets_in,
                                   std::vector<double> weights_in)
    : num_items(num_items_in),
      sets(std::move(sets_in)),
      weights(std::move(weights_in)) {
  if (num_items < 0) throw ConfigError("coverage: negative item count");
  for (const auto& s : sets) {
    for (int item : s) {
      if (item < 0 || item >= num_items)
        throw ConfigError("coverage: item index " + std::to_string(item) +
                          " outside universe of size " +
                          std::to_string(num_items));
    }
  }
  if (!weights.empty()) {
    if (static_cast<int>(weights.size()) != num_items)
      throw ConfigError("coverage: weight count != item count");
    for (double w : weights)
      if (!(w >= 0.0)) throw ConfigError("coverage: negative item weight");
  }
}

CoverageOracle::CoverageOracle(
    std::shared_ptr<const CoverageInstance> instance)
    : ObjectiveOracle(instance ? instance->n() : 0),
      instance_(std::move(instance)) {
  if (!instance_) throw ConfigError("coverage: null instance");
}

double CoverageOracle::evaluate(const SubsetMask& x) const {
  const CoverageInstance& inst = *instance_;
  std::vector<bool> covered(static_cast<std::size_t>(inst.num_items), false);
  for (int i = 0; i < x.n(); ++i) {
    if (!x.test(i)) continue;
    for (int item : inst.sets[static_cast<std::size_t>(i)])
      covered[static_cast<std::size_t>(item)] = true;
  }
  double total = 0.0;
  for (int item = 0; item < inst.num_items; ++item) {
    if (covered[static_cast<std::size_t>(item)])
      total += inst.weights.empty() ? 1.0
                                    : inst.weights[static_cast<std::size_t>(item)];
  }
  return total;
}

// --------------------------------------------------------------------------
// Facility location

FacilityLocationInstance::FacilityLocationInstance(Eigen::MatrixXd w)
    : similarity(std::move(w)) {
  if ((similarity.array() < 0.0).any())
    throw ConfigError("facility location: similarities must be >= 0");
}

FacilityLocationOracle::FacilityLocationOracle(
    std::shared_ptr<const FacilityLocationInstance> instance)
    : ObjectiveOracle(instance ? instance->n() : 0),
      instance_(std::move(instance)) {
  if (!instance_) throw ConfigError("facility location: null instance");
}

double FacilityLocationOracle::evaluate(const SubsetMask& x) const {
  const Eigen::MatrixXd& w = instance_->similarity;
  if (x.cardinality() == 0) return 0.0;
  const std::vector<int> members = x.elements();
  const Eigen::Index m = w.cols();
  double total = 0.0;
  for (Eigen::Index j = 0; j < m; ++j) {
    double best = 0.0;
    for (int i : members) best = std::max(best, w(i, j));
    total += best;
  }
  return total;
}

// --------------------------------------------------------------------------
// Log-determinant diversity

DppInstance::DppInstance(Eigen::MatrixXd l) : kernel(std::move(l)) {
  if (kernel.rows() != kernel.cols())
    throw ConfigError("dpp: kernel must be square");
  const double asym = (kernel - kernel.transpose()).cwiseAbs().maxCoeff();
  if (kernel.rows() > 0 && asym > 1e-9)
    throw ConfigError("dpp: kernel asymmetric beyond 1e-9");
}

DppOracle::DppOracle(std::shared_ptr<const DppInstance> instance)
    : ObjectiveOracle(instance ? instance->n() : 0),
      instance_(std::move(instance)) {
  if (!instance_) throw ConfigError("dpp: null instance");
}

double DppOracle::evaluate(const SubsetMask& x) const {
  const std::vector<int> idx = x.elements();
  if (idx.empty()) return 0.0;
  const Eigen::Index k = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd a(k, k);
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index c = 0; c < k; ++c)
      a(r, c) = instance_->kernel(idx[static_cast<std::size_t>(r)],
                                  idx[static_cast<std::size_t>(c)]);
  a.diagonal().array() += 1.0;  // I + L_X
  Eigen::LDLT<Eigen::MatrixXd> ldlt(a);
  if (ldlt.info() != Eigen::Success)
    throw NumericError("dpp: factorization of I + L_X failed");
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    const double pivot = ldlt.vectorD()(i);
    if (pivot < -1e-9)
      throw NumericError("dpp: kernel not positive semidefinite (pivot " +
                         std::to_string(pivot) + ")");
    logdet += std::log(std::max(pivot, 1e-12));
  }
  return std::max(logdet, 0.0);
}

// --------------------------------------------------------------------------
// Modular

ModularOracle::ModularOracle(std::vector<double> weights)
    : ModularOracle(
          std::make_shared<const std::vector<double>>(std::move(weights))) {}

ModularOracle::ModularOracle(std::shared_ptr<const std::vector<double>> w)
    : ObjectiveOracle(static_cast<int>(w->size())), weights_(std::move(w)) {
  for (double v : *weights_)
    if (!(v >= 0.0)) throw ConfigError("modular: weights must be >= 0");
}

std::unique_ptr<ObjectiveOracle> ModularOracle::clone() const {
  return std::unique_ptr<ObjectiveOracle>(new ModularOracle(weights_));
}

double ModularOracle::evaluate(const SubsetMask& x) const {
  double total = 0.0;
  for (int i = 0; i < x.n(); ++i)
    if (x.test(i)) total += (*weights_)[static_cast<std::size_t>(i)];
  return total;
}

// --------------------------------------------------------------------------
// Tabular

TabularOracle::TabularOracle(int n, std::vector<double> values)
    : TabularOracle(n, std::make_shared<const std::vector<double>>(
                            std::move(values))) {}

TabularOracle::TabularOracle(int n,
                             std::shared_ptr<const std::vector<double>> values)
    : ObjectiveOracle(n), values_(std::move(values)) {
  if (n > 20) throw CapacityError("tabular: n > 20");
  if (values_->size() != (std::size_t{1} << n))
    throw ConfigError("tabular: need exactly 2^n values");
}

std::unique_ptr<ObjectiveOracle> TabularOracle::clone() const {
  return std::unique_ptr<ObjectiveOracle>(new TabularOracle(n(), values_));
}

double TabularOracle::evaluate(const SubsetMask& x) const {
  return (*values_)[static_cast<std::size_t>(x.bits64())];
}

// --------------------------------------------------------------------------
// Dataset generation

Eigen::MatrixXd gen_gaussian_points(int clusters, int points, int dim,
                                    std::uint64_t seed) {
  if (points <= 0) throw ConfigError("gen-gaussian: points must be > 0");
  if (dim <= 0) throw ConfigError("gen-gaussian: dim must be > 0");
  if (clusters <= 0) throw ConfigError("gen-gaussian: clusters must be > 0");
  if (clusters > points)
    throw ConfigError("gen-gaussian: clusters must be <= points");

  RngStream rng(splitmix64(seed));
  constexpr double kCenterSpread = 5.0;
  Eigen::MatrixXd centers(clusters, dim);
  for (int c = 0; c < clusters; ++c)
    for (int d = 0; d < dim; ++d)
      centers(c, d) = kCenterSpread * standard_normal(rng);

  Eigen::MatrixXd out(points, dim);
  for (int i = 0; i < points; ++i) {
    const int c = i % clusters;
    for (int d = 0; d < dim; ++d)
      out(i, d) = centers(c, d) + standard_normal(rng);
  }
  return out;
}

FacilityLocationInstance gen_gaussian_dataset(int clusters, int points,
                                              int dim, std::uint64_t seed) {
  const Eigen::MatrixXd x = gen_gaussian_points(clusters, points, dim, seed);

  // Median-distance bandwidth from a fixed 1000-pair sample, drawn from the
  // same seeded stream right after the points.
  RngStream rng(splitmix64(splitmix64(seed) + 7));
  double sigma = 1.0;
  if (points >= 2) {
    constexpr int kPairs = 1000;
    std::vector<double> dists;
    dists.reserve(kPairs);
    for (int k = 0; k < kPairs; ++k) {
      const auto i = static_cast<Eigen::Index>(
          rng.uniform_int(static_cast<std::uint64_t>(points)));
      auto j = static_cast<Eigen::Index>(
          rng.uniform_int(static_cast<std::uint64_t>(points - 1)));
      if (j >= i) ++j;
      dists.push_back((x.row(i) - x.row(j)).norm());
    }
    std::sort(dists.begin(), dists.end());
    const std::size_t mid = dists.size() / 2;
    const double median = dists.size() % 2 == 1
                              ? dists[mid]
                              : 0.5 * (dists[mid - 1] + dists[mid]);
    if (median > 0.0) sigma = median;
  }
  return FacilityLocationInstance(rbf_matrix(x, sigma));
}

// --------------------------------------------------------------------------
// CSV ingestion

Eigen::MatrixXd load_vectors_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      // A blank line is tolerated only as the trailing newline.
      if (in.peek() == std::char_traits<char>::eof()) break;
      throw ParseError("empty row", line_no);
    }
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      std::string field = line.substr(
          start, comma == std::string::npos ? std::string::npos
                                            : comma - start);
      const std::size_t first = field.find_first_not_of(" \t");
      const std::size_t last = field.find_last_not_of(" \t");
      if (first == std::string::npos)
        throw ParseError("empty field", line_no);
      field = field.substr(first, last - first + 1);
      double v = 0.0;
      const char* begin = field.data();
      const char* end = begin + field.size();
      const auto [ptr, ec] = std::from_chars(begin, end, v);
      if (ec != std::errc() || ptr != end)
        throw ParseError("non-numeric field '" + field + "'", line_no);
      row.push_back(v);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("expected " + std::to_string(rows.front().size()) +
                           " fields, got " + std::to_string(row.size()),
                       line_no);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no data rows", line_no == 0 ? 1 : line_no);

  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.front().size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
  return out;
}

void write_vectors_csv(const Eigen::MatrixXd& vectors,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  std::ostringstream line;
  line.precision(17);
  for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
    line.str("");
    for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
      if (j) line << ',';
      line << vectors(i, j);
    }
    out << line.str() << '\n';
  }
  if (!out) throw IoError("write failed for " + path);
}

FacilityLocationInstance make_fl_from_vectors(const Eigen::MatrixXd& vectors,
                                              const SimilaritySpec& sim) {
  if (sim.kind == SimilaritySpec::Kind::kRbf)
    return FacilityLocationInstance(rbf_matrix(vectors, sim.sigma));
  Eigen::MatrixXd gram = vectors * vectors.transpose();
  // The instance constructor rejects negative similarities.
  return FacilityLocationInstance(std::move(gram));
}

DppInstance make_dpp_from_vectors(const Eigen::MatrixXd& vectors,
                                  const SimilaritySpec& sim) {
  if (sim.kind == SimilaritySpec::Kind::kRbf)
    return DppInstance(rbf_matrix(vectors, sim.sigma));
  Eigen::MatrixXd gram = vectors * vectors.transpose();
  gram = 0.5 * (gram + gram.transpose().eval());  // exact symmetry
  return DppInstance(std::move(gram));
}

// --------------------------------------------------------------------------
// Submodularity-ratio estimate

double estimate_gamma(const ObjectiveOracle& oracle) {
  const int n = oracle.n();
  if (n > 15)
    throw CapacityError("estimate_gamma: n=" + std::to_string(n) +
                        " exceeds exhaustive limit 15");
  if (n == 0) return 1.0;

  const std::uint32_t full = 1u << n;
  std::vector<double> f(full);
  for (std::uint32_t s = 0; s < full; ++s)
    f[s] = oracle.peek(SubsetMask::from_bits(n, s));

  constexpr double kDenomTol = 1e-12;
  double gamma = 1.0;
  bool any = false;
  for (std::uint32_t y = 1; y < full; ++y) {
    std::uint32_t x = (y - 1) & y;
    while (true) {
      const double denom = f[y] - f[x];
      if (denom > kDenomTol) {
        double singles = 0.0;
        std::uint32_t rest = y & ~x;
        while (rest) {
          const std::uint32_t bit = rest & (0u - rest);
          singles += f[x | bit] - f[x];
          rest &= rest - 1;
        }
        const double ratio = singles / denom;
        gamma = any ? std::min(gamma, ratio) : ratio;
        any = true;
      }
      if (x == 0) break;
      x = (x - 1) & y;
    }
  }
  if (!any) return 1.0;
  return std::clamp(gamma, 0.0, 1.0);
}

}  // namespace paretosub
