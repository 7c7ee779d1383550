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

#include "chief/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "chief/error.hpp"

namespace chief {

MotifLaplacian BuildLaplacian(const MotifAdjacency& w) {
  MotifLaplacian lap;
  std::vector<VertexId> local(static_cast<std::size_t>(w.n), -1);
  for (VertexId i = 0; i < w.n; ++i) {
    if (w.degree[i] > 0.0) {
      local[i] = static_cast<VertexId>(lap.active_.size());
      lap.active_.push_back(i);
    } else {
      lap.zero_degree_.push_back(i);
    }
  }
  if (lap.active_.empty()) {
    throw AlgorithmError("no motif structure: every vertex has motif degree 0");
  }
  for (VertexId i : lap.active_) {
    lap.degree_.push_back(w.degree[i]);
    lap.sqrt_degree_.push_back(std::sqrt(w.degree[i]));
  }
  for (VertexId i : lap.active_) {
    auto cols = w.row_columns(i);
    auto vals = w.row_values(i);
    const double si = std::sqrt(w.degree[i]);
    for (std::size_t p = 0; p < cols.size(); ++p) {
      lap.columns_.push_back(local[cols[p]]);
      lap.values_.push_back(vals[p] / (si * std::sqrt(w.degree[cols[p]])));
    }
    lap.offsets_.push_back(lap.columns_.size());
  }
  return lap;
}

void MotifLaplacian::Apply(std::span<const double> x,
                           std::span<double> y) const {
  const VertexId n = size();
#pragma omp parallel for schedule(static)
  for (VertexId i = 0; i < n; ++i) {
    double acc = x[i];
    for (std::size_t p = offsets_[i]; p < offsets_[i + 1]; ++p) {
      acc -= values_[p] * x[columns_[p]];
    }
    y[i] = acc;
  }
}

void MotifLaplacian::ApplySerial(std::span<const double> x,
                                 std::span<double> y) const {
  for (VertexId i = 0; i < size(); ++i) {
    double acc = x[i];
    for (std::size_t p = offsets_[i]; p < offsets_[i + 1]; ++p) {
      acc -= values_[p] * x[columns_[p]];
    }
    y[i] = acc;
  }
}

Eigen::MatrixXd MotifLaplacian::Dense() const {
  const VertexId n = size();
  Eigen::MatrixXd l = Eigen::MatrixXd::Identity(n, n);
  for (VertexId i = 0; i < n; ++i) {
    for (std::size_t p = offsets_[i]; p < offsets_[i + 1]; ++p) {
      l(i, columns_[p]) -= values_[p];
    }
  }
  return l;
}

std::vector<std::vector<VertexId>> MotifLaplacian::Components() const {
  const VertexId n = size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId u : row_columns(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

void FixSign(Eigen::VectorXd& z) {
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (std::abs(z[i]) > 1e-12) {
      if (z[i] < 0) z = -z;
      return;
    }
  }
}

double Residual(const MotifLaplacian& lap, const Eigen::VectorXd& z,
                double lambda) {
  Eigen::VectorXd lz(z.size());
  lap.Apply({z.data(), static_cast<std::size_t>(z.size())},
            {lz.data(), static_cast<std::size_t>(lz.size())});
  return (lz - lambda * z).norm();
}

FiedlerResult DenseFiedler(const MotifLaplacian& lap) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap.Dense());
  if (solver.info() != Eigen::Success) {
    throw AlgorithmError("dense symmetric eigensolver failed");
  }
  Eigen::VectorXd z = solver.eigenvectors().col(1);
  z.normalize();
  FixSign(z);
  FiedlerResult r;
  r.lambda2 = solver.eigenvalues()(1);
  r.vector.assign(z.data(), z.data() + z.size());
  r.residual = Residual(lap, z, r.lambda2);
  r.dense = true;
  return r;
}

// Removes the components along `null` and the basis columns, twice.
void Orthogonalize(Eigen::VectorXd& q, const Eigen::VectorXd& null,
                   const Eigen::MatrixXd& basis, Eigen::Index cols) {
  for (int pass = 0; pass < 2; ++pass) {
    q -= null.dot(q) * null;
    if (cols > 0) {
      Eigen::VectorXd coeff = basis.leftCols(cols).transpose() * q;
      q -= basis.leftCols(cols) * coeff;
    }
  }
}

FiedlerResult LanczosFiedler(const MotifLaplacian& lap,
                             const FiedlerOptions& options) {
  const Eigen::Index n = lap.size();
  const std::int64_t cap =
      options.max_iterations > 0 ? options.max_iterations : 10 * n;
  const Eigen::Index dim = std::min<Eigen::Index>(
      std::max(options.basis_size, 4), n - 1);
  const Eigen::Index keep = std::max<Eigen::Index>(1, dim / 2);

  Eigen::VectorXd null(n);
  for (Eigen::Index i = 0; i < n; ++i) null[i] = lap.sqrt_degree()[i];
  null.normalize();

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  auto random_direction = [&](const Eigen::MatrixXd& basis,
                              Eigen::Index cols) {
    Eigen::VectorXd q(n);
    for (Eigen::Index i = 0; i < n; ++i) q[i] = uniform(rng);
    Orthogonalize(q, null, basis, cols);
    return Eigen::VectorXd(q / q.norm());
  };

  Eigen::MatrixXd v(n, dim);
  Eigen::MatrixXd av(n, dim);
  Eigen::Index cols = 0;
  Eigen::VectorXd q = random_direction(v, 0);
  std::int64_t iterations = 0;
  Eigen::VectorXd x;
  double theta = 0.0;
  double residual = std::numeric_limits<double>::infinity();

  while (true) {
    bool exhausted = false;
    while (cols < dim) {
      v.col(cols) = q;
      Eigen::VectorXd aq(n);
      lap.Apply({q.data(), static_cast<std::size_t>(n)},
                {aq.data(), static_cast<std::size_t>(n)});
      av.col(cols) = aq;
      ++cols;
      ++iterations;
      if (cols == dim) break;
      Eigen::VectorXd next = aq;
      Orthogonalize(next, null, v, cols);
      const double norm = next.norm();
      if (norm <= 1e-10 * std::max(1.0, aq.norm())) {
        // Invariant subspace reached; continue with a fresh direction.
        if (cols + 1 >= n) {
          exhausted = true;
          break;
        }
        q = random_direction(v, cols);
      } else {
        q = next / norm;
      }
    }

    Eigen::MatrixXd h = v.leftCols(cols).transpose() * av.leftCols(cols);
    h = 0.5 * (h + h.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz(h);
    if (ritz.info() != Eigen::Success) {
      throw AlgorithmError("Ritz eigenproblem failed");
    }
    Eigen::VectorXd y = ritz.eigenvectors().col(0);
    theta = ritz.eigenvalues()(0);
    x = v.leftCols(cols) * y;
    Eigen::VectorXd r = av.leftCols(cols) * y - theta * x;
    residual = r.norm() / x.norm();
    if (residual <= options.tol || exhausted || cols >= n - 1) break;
    if (iterations >= cap) {
      throw AlgorithmError(
          "Lanczos did not converge within " + std::to_string(cap) +
          " matrix-vector products (residual " + std::to_string(residual) +
          ")");
    }

    // Thick restart on the `keep` smallest Ritz vectors.
    const Eigen::Index k = std::min(keep, cols - 1);
    Eigen::MatrixXd yk = ritz.eigenvectors().leftCols(k);
    Eigen::MatrixXd nv = v.leftCols(cols) * yk;
    Eigen::MatrixXd nav = av.leftCols(cols) * yk;
    v.leftCols(k) = nv;
    av.leftCols(k) = nav;
    cols = k;
    Orthogonalize(r, null, v, cols);
    const double rn = r.norm();
    q = rn > 1e-14 ? Eigen::VectorXd(r / rn) : random_direction(v, cols);
  }

  x.normalize();
  FixSign(x);
  FiedlerResult result;
  // Rayleigh quotient of the normalized Ritz vector.
  Eigen::VectorXd lx(n);
  lap.Apply({x.data(), static_cast<std::size_t>(n)},
            {lx.data(), static_cast<std::size_t>(n)});
  result.lambda2 = x.dot(lx);
  result.vector.assign(x.data(), x.data() + n);
  result.residual = (lx - result.lambda2 * x).norm();
  result.iterations = iterations;
  if (result.residual > options.tol) {
    throw AlgorithmError("Lanczos stopped with residual " +
                         std::to_string(result.residual) + " above tolerance");
  }
  return result;
}

}  // namespace

FiedlerResult FiedlerVector(const MotifLaplacian& laplacian,
                            const FiedlerOptions& options) {
  if (laplacian.size() < 2) {
    throw InvalidArgument("Fiedler vector needs at least two active vertices");
  }
  if (!(options.tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  bool dense = options.method == EigenMethod::kDense ||
               (options.method == EigenMethod::kAuto &&
                laplacian.size() <= options.dense_limit);
  // The complement of the null vector is one-dimensional.
  if (laplacian.size() == 2) dense = true;
  return dense ? DenseFiedler(laplacian) : LanczosFiedler(laplacian, options);
}

SweepResult SweepCut(const MotifInstances& instances,
                     const MotifLaplacian& laplacian,
                     std::span<const double> z) {
  const VertexId n = laplacian.size();
  if (n < 2) throw InvalidArgument("sweep cut needs two active vertices");
  if (z.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("eigenvector length does not match the Laplacian");
  }
  const auto& active = laplacian.active();
  VertexId max_label = active.back();
  for (VertexId v : instances.vertices) max_label = std::max(max_label, v);
  std::vector<VertexId> local(static_cast<std::size_t>(max_label) + 1, -1);
  for (VertexId i = 0; i < n; ++i) local[active[i]] = i;

  // Local vertex -> incident instances.
  std::vector<std::size_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v : instances.vertices) {
    if (local[v] < 0) {
      throw InvalidArgument("instance touches a vertex with motif degree 0");
    }
    ++offsets[local[v] + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<std::size_t> incident(instances.vertices.size());
  {
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < instances.count(); ++i) {
      for (VertexId v : instances[i]) incident[cursor[local[v]]++] = i;
    }
  }

  SweepResult result;
  std::vector<double> key(static_cast<std::size_t>(n));
  for (VertexId i = 0; i < n; ++i) key[i] = z[i] / laplacian.sqrt_degree()[i];
  result.ordering.resize(static_cast<std::size_t>(n));
  std::iota(result.ordering.begin(), result.ordering.end(), 0);
  std::stable_sort(result.ordering.begin(), result.ordering.end(),
                   [&](VertexId a, VertexId b) { return key[a] < key[b]; });

  const auto size = static_cast<std::size_t>(instances.size);
  const std::size_t total = size * instances.count();
  std::vector<std::size_t> inside(instances.count(), 0);
  std::size_t cut = 0;
  std::size_t vol = 0;
  double best = std::numeric_limits<double>::infinity();
  for (VertexId step = 0; step + 1 < n; ++step) {
    VertexId v = result.ordering[step];
    for (std::size_t p = offsets[v]; p < offsets[v + 1]; ++p) {
      std::size_t& c = inside[incident[p]];
      if (c == 0) ++cut;
      ++c;
      if (c == size) --cut;
      ++vol;
    }
    const std::size_t denom = std::min(vol, total - vol);
    if (denom == 0) continue;
    const double phi = static_cast<double>(cut) / static_cast<double>(denom);
    if (phi < best) {
      best = phi;
      result.best_prefix = static_cast<std::size_t>(step) + 1;
    }
  }
  if (result.best_prefix == 0) {
    throw AlgorithmError("sweep found no prefix with defined conductance");
  }
  result.best_conductance = best;
  std::vector<VertexId> prefix(result.ordering.begin(),
                               result.ordering.begin() + result.best_prefix);
  std::vector<VertexId> suffix(result.ordering.begin() + result.best_prefix,
                               result.ordering.end());
  std::sort(prefix.begin(), prefix.end());
  std::sort(suffix.begin(), suffix.end());
  if (prefix.size() <= suffix.size()) {
    result.cluster = std::move(prefix);
    result.complement = std::move(suffix);
  } else {
    result.cluster = std::move(suffix);
    result.complement = std::move(prefix);
  }
  return result;
}

}  // namespace chief
