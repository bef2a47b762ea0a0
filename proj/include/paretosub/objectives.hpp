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

//
// Value-oracle objectives.
//
// An ObjectiveOracle evaluates a non-negative set function on SubsetMasks and
// counts evaluations; algorithm query complexity is measured in these counts.
// Instance data is immutable after construction and may be shared between
// oracle handles; the query counter is per handle, so concurrent runs each
// clone their own handle.

#ifndef PARETOSUB_OBJECTIVES_HPP_
#define PARETOSUB_OBJECTIVES_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "paretosub/errors.hpp"
#include "paretosub/subset_mask.hpp"

namespace paretosub {

class ObjectiveOracle {
 public:
  virtual ~ObjectiveOracle() = default;

  int n() const { return n_; }

  // Evaluates f(x) and counts one query.
  double value(const SubsetMask& x) const {
    check_dims(x);
    ++queries_;
    return evaluate(x);
  }

  // Evaluates f(x) without touching the query counter. Reserved for
  // brute-force verification; benchmark code must use value().
  double peek(const SubsetMask& x) const {
    check_dims(x);
    return evaluate(x);
  }

  std::uint64_t query_count() const { return queries_; }

  // Fresh handle over the same immutable instance data, counter at zero.
  virtual std::unique_ptr<ObjectiveOracle> clone() const = 0;

  virtual std::string kind() const = 0;

 protected:
  explicit ObjectiveOracle(int n) : n_(n) {
    if (n < 0) throw ConfigError("oracle: negative ground-set size");
  }
  virtual double evaluate(const SubsetMask& x) const = 0;

 private:
  void check_dims(const SubsetMask& x) const {
    if (x.n() != n_)
      throw ConfigError("oracle: mask over " + std::to_string(x.n()) +
                        " elements, instance has n=" + std::to_string(n_));
  }

  int n_;
  mutable std::uint64_t queries_ = 0;
};

// ---------------------------------------------------------------------------
// Weighted coverage: element i covers a fixed item set; f(X) is the total
// weight of the items covered by the union.

struct CoverageInstance {
  int num_items = 0;
  std::vector<std::vector<int>> sets;
  std::vector<double> weights;  // empty means unit weights

  CoverageInstance() = default;
  CoverageInstance(int num_items, std::vector<std::vector<int>> sets,
                   std::vector<double> weights = {});

  int n() const { return static_cast<int>(sets.size()); }
};

class CoverageOracle final : public ObjectiveOracle {
 public:
  explicit CoverageOracle(std::shared_ptr<const CoverageInstance> instance);

  const CoverageInstance& instance() const { return *instance_; }
  std::unique_ptr<ObjectiveOracle> clone() const override {
    return std::make_unique<CoverageOracle>(instance_);
  }
  std::string kind() const override { return "coverage"; }

 protected:
  double evaluate(const SubsetMask& x) const override;

 private:
  std::shared_ptr<const CoverageInstance> instance_;
};

// ---------------------------------------------------------------------------
// Facility location: f(X) = sum_j max_{i in X} W(i, j), empty max = 0.
// W is n x m non-negative, entry (i, j) the similarity of candidate i to
// data point j.

struct FacilityLocationInstance {
  Eigen::MatrixXd similarity;

  FacilityLocationInstance() = default;
  explicit FacilityLocationInstance(Eigen::MatrixXd w);

  int n() const { return static_cast<int>(similarity.rows()); }
};

class FacilityLocationOracle final : public ObjectiveOracle {
 public:
  explicit FacilityLocationOracle(
      std::shared_ptr<const FacilityLocationInstance> instance);

  const FacilityLocationInstance& instance() const { return *instance_; }
  std::unique_ptr<ObjectiveOracle> clone() const override {
    return std::make_unique<FacilityLocationOracle>(instance_);
  }
  std::string kind() const override { return "facility_location"; }

 protected:
  double evaluate(const SubsetMask& x) const override;

 private:
  std::shared_ptr<const FacilityLocationInstance> instance_;
};

// ---------------------------------------------------------------------------
// Log-determinant diversity: f(X) = log det(I + L_X) for a PSD kernel L.
// Monotone and non-negative; f(empty) = 0 exactly.

struct DppInstance {
  Eigen::MatrixXd kernel;

  DppInstance() = default;
  // Requires symmetry within 1e-9; positive semidefiniteness is detected
  // during factorization (pivot < -1e-9 raises NumericError).
  explicit DppInstance(Eigen::MatrixXd l);

  int n() const { return static_cast<int>(kernel.rows()); }
};

class DppOracle final : public ObjectiveOracle {
 public:
  explicit DppOracle(std::shared_ptr<const DppInstance> instance);

  const DppInstance& instance() const { return *instance_; }
  std::unique_ptr<ObjectiveOracle> clone() const override {
    return std::make_unique<DppOracle>(instance_);
  }
  std::string kind() const override { return "dpp"; }

 protected:
  double evaluate(const SubsetMask& x) const override;

 private:
  std::shared_ptr<const DppInstance> instance_;
};

// ---------------------------------------------------------------------------
// Modular objective: f(X) = sum of per-element weights. The simplest monotone
// submodular function; used heavily as a test instance.

class ModularOracle final : public ObjectiveOracle {
 public:
  explicit ModularOracle(std::vector<double> weights);

  const std::vector<double>& weights() const { return *weights_; }
  std::unique_ptr<ObjectiveOracle> clone() const override;
  std::string kind() const override { return "modular"; }

 protected:
  double evaluate(const SubsetMask& x) const override;

 private:
  explicit ModularOracle(std::shared_ptr<const std::vector<double>> w);
  std::shared_ptr<const std::vector<double>> weights_;
};

// Explicit value table over all 2^n subsets (n <= 20). Intended for
// verification instances: the table is taken as-is, including functions that
// are not monotone or submodular.
class TabularOracle final : public ObjectiveOracle {
 public:
  TabularOracle(int n, std::vector<double> values);

  std::unique_ptr<ObjectiveOracle> clone() const override;
  std::string kind() const override { return "tabular"; }

 protected:
  double evaluate(const SubsetMask& x) const override;

 private:
  TabularOracle(int n, std::shared_ptr<const std::vector<double>> values);
  std::shared_ptr<const std::vector<double>> values_;
};

// ---------------------------------------------------------------------------
// Dataset generation and ingestion.

struct SimilaritySpec {
  enum class Kind { kRbf, kInnerProduct };
  Kind kind = Kind::kRbf;
  double sigma = 1.0;  // rbf bandwidth

  static SimilaritySpec rbf(double sigma) {
    return SimilaritySpec{Kind::kRbf, sigma};
  }
  static SimilaritySpec inner_product() {
    return SimilaritySpec{Kind::kInnerProduct, 0.0};
  }
};

// Points drawn from `clusters` isotropic Gaussians in `dim` dimensions,
// assigned round-robin. Deterministic in `seed`.
Eigen::MatrixXd gen_gaussian_points(int clusters, int points, int dim,
                                    std::uint64_t seed);

// Facility-location instance over gen_gaussian_points: RBF similarities with
// bandwidth set to the median distance of a 1000-pair sample (same seed).
FacilityLocationInstance gen_gaussian_dataset(int clusters, int points,
                                              int dim, std::uint64_t seed);

// Comma-separated numeric rows, no header. Raises ParseError with the
// offending 1-based line number on ragged or non-numeric input.
Eigen::MatrixXd load_vectors_csv(const std::string& path);
void write_vectors_csv(const Eigen::MatrixXd& vectors,
                       const std::string& path);

FacilityLocationInstance make_fl_from_vectors(const Eigen::MatrixXd& vectors,
                                              const SimilaritySpec& sim);
DppInstance make_dpp_from_vectors(const Eigen::MatrixXd& vectors,
                                  const SimilaritySpec& sim);

// Exhaustive submodularity-ratio estimate over all nested pairs X subset of
// Y: min of sum_{u in Y\X} df(X,u) over f(Y) - f(X), clamped to [0, 1].
// Returns 1 when no pair has a positive denominator. Requires n <= 15; does
// not count queries (verification machinery).
double estimate_gamma(const ObjectiveOracle& oracle);

}  // namespace paretosub

#endif  // PARETOSUB_OBJECTIVES_HPP_
