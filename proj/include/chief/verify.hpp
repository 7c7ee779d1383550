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

#ifndef CHIEF_VERIFY_HPP_
#define CHIEF_VERIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "chief/graph.hpp"
#include "chief/spectral.hpp"

namespace chief {

struct PerturbationReport {
  int k = 0;
  std::size_t removed_edges = 0;

  // Adjacency spectra; A_k keeps the edges inside the maximal k-edge-connected
  // subgraphs and A~ = A_G - A_k holds the removed edges.
  double lambda_min_A_G = 0.0;
  double lambda_min_A_k = 0.0;
  double delta = 0.0;  // sqrt(lambda_max(A~^T A~))
  bool holds = false;  // |lambda_min(A_k) - lambda_min(A_G)| <= delta

  // Normalized Laplacians. L_G is taken over the non-isolated vertices of G,
  // L_k and every D_k-scaled matrix over the vertices of positive degree in
  // G_k. Unset when G_k has no edge.
  bool laplacian_evaluated = false;
  double lambda_min_L_G = 0.0;
  double lambda_min_L_k = 0.0;
  double laplacian_difference = 0.0;  // lambda_min(L_k) - lambda_min(L_G)
  // lambda_max(D_G^-1 A_G) - lambda_max(D_k^-1 A_G) + lambda_max(D_k^-1 A~)
  double laplacian_lower = 0.0;
  // lambda_max(A_G) / min_i D_G(i,i) - lambda_max(D_k^-1 A_k)
  double laplacian_upper = 0.0;
  bool laplacian_holds = false;
  // Lower bound with the Weyl step taken on lambda_min of the removed part:
  // lambda_max(D_G^-1 A_G) - lambda_max(D_k^-1 A_G) + lambda_min(D_k^-1 A~)
  double corrected_lower = 0.0;
  bool corrected_holds = false;
};

inline constexpr double kVerifyTolerance = 1e-8;

// Fills the adjacency fields of the report.
PerturbationReport CheckAdjacencyPerturbation(const Graph& g, int k);

// Fills every field of the report, including the adjacency part.
PerturbationReport CheckLaplacianPerturbation(const Graph& g, int k);

// True when the number of eigenvalues of L within 1e-8 of zero equals the
// number of motif-connected components.
bool CheckSpectralOrdering(const MotifLaplacian& laplacian);

// Zero-eigenvalue multiplicity of L (dense solve).
int ZeroMultiplicity(const MotifLaplacian& laplacian);

// Eigen helpers on dense symmetric matrices.
Eigen::VectorXd SymmetricEigenvalues(const Eigen::MatrixXd& m);
Eigen::MatrixXd DenseAdjacency(const Graph& g);

struct AuditInstance {
  std::string id;
  Graph graph;
};

struct AuditRow {
  std::string id;
  PerturbationReport report;
  // Every motif whose minimum degree is at least k survives the
  // decomposition intact (unset when no catalog motif qualifies).
  std::optional<bool> motifs_preserved;
  std::string error;  // non-empty when a check threw

  bool pass() const;
};

// Runs every check for every (instance, k); instances are processed
// concurrently. Rows are ordered by instance, then k.
std::vector<AuditRow> Audit(const std::vector<AuditInstance>& corpus,
                            const std::vector<int>& ks);

// Tab-separated header and row for the audit report.
std::string AuditHeader();
std::string FormatAuditRow(const AuditRow& row);

}  // namespace chief

#endif  // CHIEF_VERIFY_HPP_
