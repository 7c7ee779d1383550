// Copyright 2026 The Chief Authors
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

#ifndef CHIEF_SPECTRAL_HPP_
#define CHIEF_SPECTRAL_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "chief/graph.hpp"
#include "chief/motif.hpp"

namespace chief {

// Normalized motif Laplacian L = I - D^{-1/2} W D^{-1/2}, restricted to the
// vertices with positive motif degree ("active" vertices). Local index i
// refers to active[i].
class MotifLaplacian {
 public:
  VertexId size() const { return static_cast<VertexId>(active_.size()); }
  const std::vector<VertexId>& active() const { return active_; }
  const std::vector<VertexId>& zero_degree() const { return zero_degree_; }
  // Motif degree D[i][i] of local vertex i.
  double degree(VertexId i) const { return degree_[i]; }
  const std::vector<double>& sqrt_degree() const { return sqrt_degree_; }

  // Sparsity pattern and values of D^{-1/2} W D^{-1/2} in local indices.
  std::span<const VertexId> row_columns(VertexId i) const {
    return {columns_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::span<const double> row_values(VertexId i) const {
    return {values_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  // y = L x, rows distributed across threads.
  void Apply(std::span<const double> x, std::span<double> y) const;
  // Single-threaded reference for Apply.
  void ApplySerial(std::span<const double> x, std::span<double> y) const;

  Eigen::MatrixXd Dense() const;

  // Connected components of the motif graph, in local indices, each sorted
  // and ordered by smallest member.
  std::vector<std::vector<VertexId>> Components() const;

 private:
  friend MotifLaplacian BuildLaplacian(const MotifAdjacency& w);

  std::vector<VertexId> active_;
  std::vector<VertexId> zero_degree_;
  std::vector<double> degree_;
  std::vector<double> sqrt_degree_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> columns_;
  std::vector<double> values_;
};

// Throws AlgorithmError("no motif structure") when every vertex has motif
// degree zero.
MotifLaplacian BuildLaplacian(const MotifAdjacency& w);

enum class EigenMethod {
  kAuto,     // dense up to dense_limit vertices, Lanczos above
  kDense,
  kLanczos,
};

struct FiedlerOptions {
  double tol = 1e-8;
  EigenMethod method = EigenMethod::kAuto;
  VertexId dense_limit = 64;
  // Lanczos matrix-vector product cap; 0 means 10 * n.
  std::int64_t max_iterations = 0;
  // Krylov basis size before a thick restart.
  int basis_size = 48;
  std::uint64_t seed = 0x5eed;
};

struct FiedlerResult {
  double lambda2 = 0.0;
  std::vector<double> vector;  // unit norm, local indices
  double residual = 0.0;       // ||L z - lambda2 z||
  std::int64_t iterations = 0;
  bool dense = false;
};

// Second-smallest eigenpair of L. The sign is fixed so that the first
// coordinate with magnitude above 1e-12 is positive. The Lanczos path works
// in the complement of the known null vector D^{1/2} 1 and keeps a fully
// reorthogonalized basis with thick restarts. Throws AlgorithmError with the
// reached residual when the iteration cap is hit first.
FiedlerResult FiedlerVector(const MotifLaplacian& laplacian,
                            const FiedlerOptions& options = {});

struct SweepResult {
  std::vector<VertexId> ordering;  // local indices, ascending D^{-1/2} z
  std::size_t best_prefix = 0;     // prefix length of the best cut
  double best_conductance = 0.0;
  std::vector<VertexId> cluster;     // smaller side, local indices, sorted
  std::vector<VertexId> complement;  // sorted
};

// Orders the active vertices by D^{-1/2} z (ties to the lower index) and
// scans every proper prefix, keeping cut and volumes up to date as each
// vertex crosses over. `instances` uses the same vertex labels as the
// adjacency the Laplacian was built from; instances touching inactive
// vertices cannot exist. Requires at least two active vertices.
SweepResult SweepCut(const MotifInstances& instances,
                     const MotifLaplacian& laplacian,
                     std::span<const double> z);

}  // namespace chief

#endif  // CHIEF_SPECTRAL_HPP_
