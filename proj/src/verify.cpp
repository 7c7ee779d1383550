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

#include "chief/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chief/error.hpp"
#include "chief/kcc.hpp"
#include "chief/motif.hpp"
#include "chief/pipeline.hpp"

namespace chief {
namespace {

struct SplitAdjacency {
  Eigen::MatrixXd a_g;
  Eigen::MatrixXd a_k;
  Eigen::MatrixXd removed;
  std::size_t removed_edges = 0;
};

SplitAdjacency Split(const Graph& g, int k) {
  if (g.num_vertices() == 0) throw InvalidArgument("graph is empty");
  Decomposition d = Decompose(g, k);
  SplitAdjacency s;
  s.a_g = DenseAdjacency(g);
  s.removed = Eigen::MatrixXd::Zero(g.num_vertices(), g.num_vertices());
  for (const auto& [u, v] : d.removed_edges) {
    s.removed(u, v) = 1.0;
    s.removed(v, u) = 1.0;
  }
  s.a_k = s.a_g - s.removed;
  s.removed_edges = d.removed_edges.size();
  return s;
}

double MinEigen(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 0.0;
  return SymmetricEigenvalues(m).minCoeff();
}

double MaxEigen(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 0.0;
  return SymmetricEigenvalues(m).maxCoeff();
}

// Rows and columns `keep` of m.
Eigen::MatrixXd Restrict(const Eigen::MatrixXd& m,
                         const std::vector<int>& keep) {
  const auto n = static_cast<Eigen::Index>(keep.size());
  Eigen::MatrixXd r(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) r(i, j) = m(keep[i], keep[j]);
  }
  return r;
}

// D^{-1/2} M D^{-1/2} for the given diagonal.
Eigen::MatrixXd Scale(const Eigen::MatrixXd& m, const Eigen::VectorXd& d) {
  Eigen::VectorXd s = d.array().rsqrt().matrix();
  return s.asDiagonal() * m * s.asDiagonal();
}

std::vector<int> PositiveRows(const Eigen::MatrixXd& m) {
  std::vector<int> rows;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (m.row(i).sum() > 0.0) rows.push_back(static_cast<int>(i));
  }
  return rows;
}

void FillAdjacency(const SplitAdjacency& s, PerturbationReport& r) {
  r.removed_edges = s.removed_edges;
  r.lambda_min_A_G = MinEigen(s.a_g);
  r.lambda_min_A_k = MinEigen(s.a_k);
  // A~ is symmetric, so A~^T A~ = A~^2.
  r.delta = std::sqrt(std::max(0.0, MaxEigen(s.removed * s.removed)));
  r.holds = std::abs(r.lambda_min_A_k - r.lambda_min_A_G) <=
            r.delta + kVerifyTolerance;
}

}  // namespace

Eigen::VectorXd SymmetricEigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw AlgorithmError("symmetric eigensolver did not converge");
  }
  return solver.eigenvalues();
}

Eigen::MatrixXd DenseAdjacency(const Graph& g) {
  const VertexId n = g.num_vertices();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  return a;
}

PerturbationReport CheckAdjacencyPerturbation(const Graph& g, int k) {
  PerturbationReport r;
  r.k = k;
  FillAdjacency(Split(g, k), r);
  return r;
}

PerturbationReport CheckLaplacianPerturbation(const Graph& g, int k) {
  PerturbationReport r;
  r.k = k;
  SplitAdjacency s = Split(g, k);
  FillAdjacency(s, r);

  std::vector<int> graph_rows = PositiveRows(s.a_g);
  std::vector<int> kept_rows = PositiveRows(s.a_k);
  if (graph_rows.empty()) throw InvalidArgument("graph has no edges");
  if (kept_rows.empty()) return r;  // nothing survives at this k

  Eigen::MatrixXd a_g = Restrict(s.a_g, graph_rows);
  Eigen::VectorXd d_g = a_g.rowwise().sum();
  Eigen::MatrixXd n_g = Scale(a_g, d_g);
  const double max_n_g = MaxEigen(n_g);
  r.lambda_min_L_G = 1.0 - max_n_g;

  Eigen::MatrixXd a_k = Restrict(s.a_k, kept_rows);
  Eigen::MatrixXd a_g_on_k = Restrict(s.a_g, kept_rows);
  Eigen::MatrixXd removed_on_k = Restrict(s.removed, kept_rows);
  Eigen::VectorXd d_k = a_k.rowwise().sum();
  const double max_n_k = MaxEigen(Scale(a_k, d_k));
  r.lambda_min_L_k = 1.0 - max_n_k;
  r.laplacian_difference = r.lambda_min_L_k - r.lambda_min_L_G;

  const double max_g_scaled_k = MaxEigen(Scale(a_g_on_k, d_k));
  Eigen::VectorXd removed_spectrum =
      SymmetricEigenvalues(Scale(removed_on_k, d_k));
  r.laplacian_lower =
      max_n_g - max_g_scaled_k + removed_spectrum.maxCoeff();
  r.corrected_lower =
      max_n_g - max_g_scaled_k + removed_spectrum.minCoeff();
  r.laplacian_upper = MaxEigen(s.a_g) / d_g.minCoeff() - max_n_k;

  r.laplacian_evaluated = true;
  r.laplacian_holds =
      r.laplacian_lower <= r.laplacian_difference + kVerifyTolerance &&
      r.laplacian_difference <= r.laplacian_upper + kVerifyTolerance;
  r.corrected_holds =
      r.corrected_lower <= r.laplacian_difference + kVerifyTolerance &&
      r.laplacian_difference <= r.laplacian_upper + kVerifyTolerance;
  return r;
}

int ZeroMultiplicity(const MotifLaplacian& laplacian) {
  if (laplacian.size() == 0) return 0;
  Eigen::VectorXd ev = SymmetricEigenvalues(laplacian.Dense());
  int zeros = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i]) <= kVerifyTolerance) ++zeros;
  }
  return zeros;
}

bool CheckSpectralOrdering(const MotifLaplacian& laplacian) {
  return ZeroMultiplicity(laplacian) ==
         static_cast<int>(laplacian.Components().size());
}

bool AuditRow::pass() const {
  if (!error.empty()) return false;
  if (!report.holds) return false;
  if (report.laplacian_evaluated && !report.laplacian_holds) return false;
  return motifs_preserved.value_or(true);
}

std::vector<AuditRow> Audit(const std::vector<AuditInstance>& corpus,
                            const std::vector<int>& ks) {
  std::vector<AuditRow> rows(corpus.size() * ks.size());
  const auto count = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& instance = corpus[i / ks.size()];
    const int k = ks[i % ks.size()];
    AuditRow& row = rows[i];
    row.id = instance.id;
    row.report.k = k;
    try {
      row.report = CheckLaplacianPerturbation(instance.graph, k);
      bool any = false;
      bool preserved = true;
      for (MotifId id : AllMotifs()) {
        const MotifSpec& spec = GetMotif(id);
        if (spec.min_degree < k) continue;
        any = true;
        preserved =
            preserved && StPreservationCheck(instance.graph, spec.id, k);
      }
      if (any) row.motifs_preserved = preserved;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }
  return rows;
}

std::string AuditHeader() {
  return "id\tk\tremoved_edges\tlambda_min_A_G\tlambda_min_A_k\tdelta\t"
         "holds\tlambda_min_L_G\tlambda_min_L_k\tlaplacian_lower\t"
         "laplacian_upper\tlaplacian_holds\tcorrected_lower\t"
         "corrected_holds\tmotifs_preserved\tpass\terror";
}

std::string FormatAuditRow(const AuditRow& row) {
  const PerturbationReport& r = row.report;
  std::ostringstream out;
  out.precision(10);
  auto flag = [](bool b) { return b ? "true" : "false"; };
  out << row.id << '\t' << r.k << '\t' << r.removed_edges << '\t'
      << r.lambda_min_A_G << '\t' << r.lambda_min_A_k << '\t' << r.delta
      << '\t' << flag(r.holds) << '\t';
  if (r.laplacian_evaluated) {
    out << r.lambda_min_L_G << '\t' << r.lambda_min_L_k << '\t'
        << r.laplacian_lower << '\t' << r.laplacian_upper << '\t'
        << flag(r.laplacian_holds) << '\t' << r.corrected_lower << '\t'
        << flag(r.corrected_holds) << '\t';
  } else {
    out << "NA\tNA\tNA\tNA\tNA\tNA\tNA\t";
  }
  out << (row.motifs_preserved ? flag(*row.motifs_preserved) : "NA") << '\t'
      << flag(row.pass()) << '\t' << (row.error.empty() ? "-" : row.error);
  return out.str();
}

}  // namespace chief
