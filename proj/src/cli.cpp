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

#include "chief/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "chief/error.hpp"
#include "chief/graph.hpp"
#include "chief/kcc.hpp"
#include "chief/metrics.hpp"
#include "chief/motif.hpp"
#include "chief/parallel.hpp"
#include "chief/pipeline.hpp"
#include "chief/synth.hpp"
#include "chief/verify.hpp"

namespace chief {
namespace {

namespace fs = std::filesystem;

enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

class Logger {
 public:
  explicit Logger(std::ostream& err) : err_(err) {
    const char* env = std::getenv("CHIEF_LOG");
    std::string v = env ? env : "error";
    if (v == "info") {
      level_ = LogLevel::kInfo;
    } else if (v == "debug") {
      level_ = LogLevel::kDebug;
    }
  }

  void Info(const std::string& msg) const { Log(LogLevel::kInfo, msg); }
  void Debug(const std::string& msg) const { Log(LogLevel::kDebug, msg); }
  void Error(const std::string& msg) const {
    err_ << "chief: error: " << msg << '\n';
  }

 private:
  void Log(LogLevel level, const std::string& msg) const {
    if (level > level_) return;
    err_ << "chief: " << (level == LogLevel::kInfo ? "info" : "debug")
         << ": " << msg << '\n';
  }

  std::ostream& err_;
  LogLevel level_ = LogLevel::kError;
};

// Error raised while a given module was running, for the exit message.
class ModuleError : public chief::Error {
 public:
  ModuleError(const chief::Error& e, const std::string& module)
      : chief::Error(e.kind(), module + ": " + e.what()) {}
};

template <typename F>
auto InModule(const std::string& module, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ModuleError&) {
    throw;
  } catch (const chief::Error& e) {
    throw ModuleError(e, module);
  }
}

double MsSince(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t)
      .count();
}

// Writes to `path`, or to `fallback` when path is empty.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : path_(path) {
    if (path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw IoError("cannot open " + path + " for writing");
    stream_ = &file_;
  }

  std::ostream& stream() { return *stream_; }

  void Close() {
    stream_->flush();
    if (!*stream_) throw IoError("write failed: " + path_);
    if (file_.is_open()) file_.close();
  }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

std::string FormatDouble(double x) {
  std::ostringstream out;
  out << std::setprecision(10) << x;
  return out.str();
}

std::string FormatOptional(const std::optional<double>& x) {
  return x ? FormatDouble(*x) : "NA";
}

LoadedGraph Load(const std::string& path, bool weighted, const Logger& log) {
  auto t = std::chrono::steady_clock::now();
  LoadedGraph loaded = InModule("graph", [&] {
    return LoadEdgeList(path, weighted);
  });
  log.Info("loaded " + path + ": " +
           std::to_string(loaded.graph.num_vertices()) + " vertices, " +
           std::to_string(loaded.graph.num_edges()) + " edges in " +
           FormatDouble(MsSince(t)) + " ms");
  if (loaded.self_loops_dropped > 0) {
    log.Info("dropped " + std::to_string(loaded.self_loops_dropped) +
             " self-loops");
  }
  if (loaded.duplicate_lines > 0) {
    log.Info("merged " + std::to_string(loaded.duplicate_lines) +
             " duplicate edge lines");
  }
  return loaded;
}

struct MotifOption {
  std::string name = "M32";
};

void AddMotifOption(CLI::App* cmd, MotifOption& motif) {
  cmd->add_option("--motif", motif.name, "M32, M42, M43, M44, M45 or M46")
      ->check([](const std::string& s) -> std::string {
        return ParseMotif(s) ? "" : "unknown motif '" + s + "'";
      });
}

// ---- cluster ----------------------------------------------------------

struct ClusterArgs {
  std::string input;
  bool weighted = false;
  MotifOption motif;
  int k = 3;
  std::string mode = "auto";
  int min_cluster = 0;
  double max_conductance = 0.5;
  double weight_threshold = 0.0;
  std::string out;
  std::string unclustered;
  std::string stats;
  std::string metrics;
  std::uint64_t seed = 0x5eed;
  std::int64_t eigen_iterations = 0;
  int threads = 0;
};

ChiefConfig MakeConfig(const ClusterArgs& a) {
  ChiefConfig c;
  c.motif = *ParseMotif(a.motif.name);
  c.k = a.k;
  c.mode = *ParseMode(a.mode);
  c.min_cluster_size = a.min_cluster;
  c.max_conductance = a.max_conductance;
  c.weight_threshold = a.weight_threshold;
  c.weighted_cut = a.weighted;
  c.eigen.seed = a.seed;
  c.eigen.max_iterations = a.eigen_iterations;
  c.parallel = a.threads != 1;
  return c;
}

void WriteClusters(std::ostream& out, const ClusterSet& set,
                   const VertexMap& names) {
  out << "vertex\tcluster\tconductance\n";
  for (std::size_t c = 0; c < set.clusters.size(); ++c) {
    const Cluster& cluster = set.clusters[c];
    const std::string phi = FormatDouble(cluster.conductance);
    for (VertexId v : cluster.members) {
      out << names.name(v) << '\t' << c << '\t' << phi << '\n';
    }
  }
}

int CmdCluster(const ClusterArgs& a, std::ostream& out, const Logger& log) {
  SetNumThreads(a.threads);
  auto t = std::chrono::steady_clock::now();
  LoadedGraph loaded = Load(a.input, a.weighted, log);
  const double load_ms = MsSince(t);
  ChiefConfig config = MakeConfig(a);
  ChiefResult result =
      InModule("pipeline", [&] { return RunChief(loaded.graph, config); });
  result.stats.phase_ms["load"] = load_ms;
  log.Info(std::to_string(result.stats.clusters) + " clusters, mode " +
           result.stats.mode);
  log.Debug(result.stats.ToKeyValue());

  Output assignments(a.out, out);
  WriteClusters(assignments.stream(), result.clusters, loaded.vertices);
  assignments.Close();

  std::string unclustered_path = a.unclustered;
  if (unclustered_path.empty() && !a.out.empty()) {
    unclustered_path = a.out + ".unclustered";
  }
  if (!unclustered_path.empty()) {
    Output u(unclustered_path, out);
    for (VertexId v : result.clusters.unclustered) {
      u.stream() << loaded.vertices.name(v) << '\n';
    }
    u.Close();
  }
  if (!a.metrics.empty()) {
    VertexSets sets;
    for (const Cluster& cl : result.clusters.clusters) {
      sets.push_back(cl.members);
    }
    ClusterMetrics m =
        InModule("metrics", [&] { return Evaluate(loaded.graph, sets); });
    Output mo(a.metrics, out);
    mo.stream() << "# modularity=" << FormatOptional(m.modularity)
                << " avg_ccp=" << FormatOptional(m.avg_ccp)
                << " csp=" << FormatOptional(m.csp.value)
                << " csp_disconnected_pairs=" << m.csp.disconnected_pairs
                << '\n'
                << "cluster\tsize\tccp\tconductance\n";
    for (std::size_t i = 0; i < sets.size(); ++i) {
      mo.stream() << i << '\t' << sets[i].size() << '\t'
                  << FormatOptional(m.per_cluster_ccp[i]) << '\t'
                  << FormatDouble(result.clusters.clusters[i].conductance)
                  << '\n';
    }
    mo.Close();
  }
  if (!a.stats.empty()) {
    Output s(a.stats, out);
    s.stream() << result.stats.ToJson() << '\n';
    s.Close();
  }
  return kExitOk;
}

// ---- kscan ------------------------------------------------------------

struct KscanArgs {
  std::string input;
  int k_min = 2;
  int k_max = 8;
  MotifOption motif;
  std::string out;
  int threads = 0;
};

// True when every piece of `finer` lies inside one piece of `coarser`.
bool Refines(const Decomposition& finer, const Decomposition& coarser,
             VertexId n) {
  auto index = PieceIndex(coarser, n);
  for (const auto& piece : finer.subgraphs) {
    const int p = index[piece.front()];
    if (p < 0) return false;
    for (VertexId v : piece) {
      if (index[v] != p) return false;
    }
  }
  return true;
}

int CmdKscan(const KscanArgs& a, std::ostream& out, const Logger& log) {
  if (a.k_min < 1 || a.k_min > a.k_max) {
    throw InvalidArgument("need 1 <= k-min <= k-max");
  }
  SetNumThreads(a.threads);
  LoadedGraph loaded = Load(a.input, false, log);
  const Graph& g = loaded.graph;
  const MotifId motif = *ParseMotif(a.motif.name);
  const MotifInstances all =
      InModule("motif", [&] { return EnumerateMotifs(g, motif); });

  struct Row {
    int k;
    Decomposition d;
    ClusterMetrics metrics;
    std::size_t kept_instances;
  };
  std::vector<Row> rows;
  std::optional<Decomposition> previous;
  for (int k = a.k_min; k <= a.k_max; ++k) {
    Decomposition d = InModule("kcc", [&] {
      return previous ? DecomposeFromBase(*previous, g, k)
                      : Decompose(g, k);
    });
    if (previous && !Refines(d, *previous, g.num_vertices())) {
      throw AlgorithmError("kcc: pieces at k=" + std::to_string(k) +
                           " do not refine those at k=" +
                           std::to_string(k - 1));
    }
    ClusterMetrics m =
        InModule("metrics", [&] { return Evaluate(g, d.subgraphs); });
    const std::size_t kept = InstancesWithinPieces(g, d, motif).count();
    log.Info("k=" + std::to_string(k) + ": " +
             std::to_string(d.subgraphs.size()) + " pieces");
    rows.push_back({k, d, std::move(m), kept});
    previous = std::move(d);
  }

  int best = -1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& q = rows[i].metrics.modularity;
    if (q && (best < 0 || *q > *rows[best].metrics.modularity)) {
      best = static_cast<int>(i);
    }
  }

  Output o(a.out, out);
  o.stream() << "k\tpieces\tsingletons\tremoved_edges\tmodularity\tavg_ccp\t"
                "csp\tinstances\tinstances_kept\tbest\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    o.stream() << r.k << '\t' << r.d.subgraphs.size() << '\t'
               << r.d.singletons.size() << '\t' << r.d.removed_edges.size()
               << '\t' << FormatOptional(r.metrics.modularity) << '\t'
               << FormatOptional(r.metrics.avg_ccp) << '\t'
               << FormatOptional(r.metrics.csp.value) << '\t' << all.count()
               << '\t' << r.kept_instances << '\t'
               << (static_cast<int>(i) == best ? 1 : 0) << '\n';
  }
  o.Close();
  return kExitOk;
}

// ---- bench ------------------------------------------------------------

struct BenchArgs {
  std::string input;
  int nv = 0;
  double rrp = 0.4;
  std::uint64_t seed = 1;
  MotifOption motif;
  int k = 3;
  int repeat = 5;
  std::string mode = "auto";
  int threads = 0;
  std::string out;
};

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double ConductanceSum(const ClusterSet& s) {
  double sum = 0.0;
  for (const Cluster& c : s.clusters) sum += c.conductance;
  return sum;
}

int CmdBench(const BenchArgs& a, std::ostream& out, const Logger& log) {
  if (a.repeat < 1) throw InvalidArgument("--repeat must be at least 1");
  if (a.input.empty() == (a.nv == 0)) {
    throw InvalidArgument("give exactly one of --input and --nv");
  }
  SetNumThreads(a.threads);
  Graph g;
  if (!a.input.empty()) {
    g = Load(a.input, false, log).graph;
  } else {
    SynthSpec spec{a.nv, a.rrp, a.seed};
    g = InModule("synth", [&] { return GenerateSmallWorld(spec); });
  }

  ChiefConfig chief;
  chief.motif = *ParseMotif(a.motif.name);
  chief.k = a.k;
  chief.mode = *ParseMode(a.mode);
  chief.parallel = a.threads != 1;
  if (chief.mode == Mode::kBaseline) {
    throw InvalidArgument("--mode selects the chief side; use auto, st or ap");
  }
  ChiefConfig baseline = chief;
  baseline.mode = Mode::kBaseline;

  std::vector<double> chief_ms;
  std::vector<double> baseline_ms;
  ChiefResult chief_result;
  ChiefResult baseline_result;
  for (int r = 0; r < a.repeat; ++r) {
    auto t = std::chrono::steady_clock::now();
    chief_result = InModule("pipeline", [&] { return RunChief(g, chief); });
    chief_ms.push_back(MsSince(t));
    t = std::chrono::steady_clock::now();
    baseline_result =
        InModule("pipeline", [&] { return RunChief(g, baseline); });
    baseline_ms.push_back(MsSince(t));
    log.Info("repeat " + std::to_string(r) + ": chief " +
             FormatDouble(chief_ms.back()) + " ms, baseline " +
             FormatDouble(baseline_ms.back()) + " ms");
  }
  const double chief_median = Median(chief_ms);
  const double baseline_median = Median(baseline_ms);

  std::optional<bool> parity;
  if (chief_result.stats.mode == "st") {
    const double x = ConductanceSum(chief_result.clusters);
    const double y = ConductanceSum(baseline_result.clusters);
    parity = std::abs(x - y) <= 0.05 * std::max(x, y);
  }
  if (chief_result.stats.instances > baseline_result.stats.instances) {
    throw AlgorithmError(
        "pipeline: chief mode enumerated more instances than baseline");
  }

  Output o(a.out, out);
  o.stream() << "vertices\t" << g.num_vertices() << '\n'
             << "edges\t" << g.num_edges() << '\n'
             << "motif\t" << GetMotif(chief.motif).name << '\n'
             << "k\t" << a.k << '\n'
             << "mode\t" << chief_result.stats.mode << '\n'
             << "repeat\t" << a.repeat << '\n'
             << "chief_median_ms\t" << FormatDouble(chief_median) << '\n'
             << "baseline_median_ms\t" << FormatDouble(baseline_median)
             << '\n'
             << "speedup\t"
             << FormatDouble(chief_median > 0 ? baseline_median / chief_median
                                              : 0.0)
             << '\n'
             << "chief_instances\t" << chief_result.stats.instances << '\n'
             << "baseline_instances\t" << baseline_result.stats.instances
             << '\n'
             << "quality_parity\t"
             << (parity ? (*parity ? "true" : "false") : "NA") << '\n';
  o.Close();
  if (parity && !*parity) {
    throw AlgorithmError(
        "pipeline: chief and baseline conductance sums differ by more than 5%");
  }
  return kExitOk;
}

// ---- synth ------------------------------------------------------------

struct SynthArgs {
  std::string preset;
  int nv = 0;
  double rrp = -1.0;
  std::uint64_t seed = 1;
  bool large = false;
  std::string out;
};

struct Preset {
  const char* label;
  int nv;
  double rrp;
  bool large;
};

constexpr Preset kPresets[] = {
    {"N1", 100, 0.2, false},     {"N2", 1000, 0.3, false},
    {"N3", 10000, 0.4, false},   {"N4", 100000, 0.5, true},
    {"N5", 1000000, 0.6, true},
};

int CmdSynth(const SynthArgs& a, std::ostream& out, const Logger& log) {
  SynthSpec spec;
  spec.seed = a.seed;
  if (!a.preset.empty()) {
    const Preset* found = nullptr;
    for (const Preset& p : kPresets) {
      if (a.preset == p.label) found = &p;
    }
    if (!found) throw InvalidArgument("unknown preset " + a.preset);
    if (found->large && !a.large) {
      throw InvalidArgument(a.preset + " needs --large");
    }
    spec.nv = found->nv;
    spec.rrp = found->rrp;
  }
  if (a.nv > 0) spec.nv = a.nv;
  if (a.rrp >= 0.0) spec.rrp = a.rrp;
  if (a.preset.empty() && (a.nv == 0 || a.rrp < 0.0)) {
    throw InvalidArgument("give --preset or both --nv and --rrp");
  }
  Graph g = InModule("synth", [&] { return GenerateSmallWorld(spec); });
  log.Info("generated " + spec.Describe());
  std::vector<std::string> header{"small-world " + spec.Describe()};
  Output o(a.out, out);
  WriteEdgeList(o.stream(), g, VertexMap::Identity(g.num_vertices()),
                header);
  o.Close();
  return kExitOk;
}

// ---- decompose --------------------------------------------------------

struct DecomposeArgs {
  std::string input;
  int k = 3;
  bool weighted = false;
  std::string out;
  int threads = 0;
};

int CmdDecompose(const DecomposeArgs& a, std::ostream& out,
                 const Logger& log) {
  SetNumThreads(a.threads);
  LoadedGraph loaded = Load(a.input, a.weighted, log);
  DecomposeOptions options;
  options.weighted = a.weighted;
  options.parallel = a.threads != 1;
  Decomposition d = InModule(
      "kcc", [&] { return Decompose(loaded.graph, a.k, options); });
  Output o(a.out, out);
  o.stream() << "# k=" << a.k << " pieces=" << d.subgraphs.size()
             << " singletons=" << d.singletons.size()
             << " removed_edges=" << d.removed_edges.size() << '\n'
             << "vertex\tpiece\tkind\n";
  for (std::size_t p = 0; p < d.subgraphs.size(); ++p) {
    for (VertexId v : d.subgraphs[p]) {
      o.stream() << loaded.vertices.name(v) << '\t' << p << "\tsubgraph\n";
    }
  }
  for (VertexId v : d.singletons) {
    o.stream() << loaded.vertices.name(v) << "\t-\tsingleton\n";
  }
  o.Close();
  return kExitOk;
}

// ---- audit ------------------------------------------------------------

struct AuditArgs {
  std::string corpus;
  std::vector<std::string> inputs;
  std::vector<int> ks{2, 3, 4};
  std::string out;
  int threads = 0;
};

int CmdAudit(const AuditArgs& a, std::ostream& out, const Logger& log) {
  SetNumThreads(a.threads);
  std::vector<std::string> paths = a.inputs;
  if (!a.corpus.empty()) {
    std::error_code ec;
    fs::directory_iterator it(a.corpus, ec);
    if (ec) throw IoError("cannot read corpus directory " + a.corpus);
    std::vector<std::string> found;
    for (const auto& entry : it) {
      if (entry.is_regular_file()) found.push_back(entry.path().string());
    }
    std::sort(found.begin(), found.end());
    paths.insert(paths.end(), found.begin(), found.end());
  }
  if (paths.empty()) throw InvalidArgument("audit needs --corpus or --input");
  for (int k : a.ks) {
    if (k < 1) throw InvalidArgument("k must be positive");
  }
  std::vector<AuditInstance> corpus;
  for (const auto& p : paths) {
    corpus.push_back({fs::path(p).filename().string(),
                      Load(p, false, log).graph});
  }
  std::vector<AuditRow> rows =
      InModule("verify", [&] { return Audit(corpus, a.ks); });
  std::size_t failing = 0;
  Output o(a.out, out);
  o.stream() << AuditHeader() << '\n';
  for (const AuditRow& row : rows) {
    o.stream() << FormatAuditRow(row) << '\n';
    failing += row.pass() ? 0 : 1;
  }
  o.stream() << "# rows=" << rows.size() << " failing=" << failing << '\n';
  o.Close();
  log.Info("audit: " + std::to_string(rows.size()) + " rows, " +
           std::to_string(failing) + " failing");
  return kExitOk;
}

// ---- cii --------------------------------------------------------------

struct CiiArgs {
  std::int64_t papers_i = -1;
  std::int64_t papers_j = -1;
  std::int64_t co = -1;
  std::string papers;
  std::string co_papers;
  std::string out;
};

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

// Reads "id count" lines ('#' comments allowed).
void ReadPaperCounts(const std::string& path, VertexMap& names,
                     std::vector<std::int64_t>& counts) {
  std::ifstream in = OpenInput(path);
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string id;
    std::int64_t count;
    if (!(fields >> id >> count)) {
      throw IoError(path + ":" + std::to_string(number) +
                    ": expected 'id count'");
    }
    const VertexId v = names.Intern(id);
    counts.resize(static_cast<std::size_t>(names.size()), 0);
    counts[v] = count;
  }
}

// Writes "a b cii" for every co-authoring pair of the co-paper file.
int CiiEdgeList(const CiiArgs& a, std::ostream& out) {
  VertexMap names;
  std::vector<std::int64_t> counts;
  ReadPaperCounts(a.papers, names, counts);
  std::vector<CoPaperCount> pairs;
  std::ifstream in = OpenInput(a.co_papers);
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string u;
    std::string v;
    std::int64_t count;
    if (!(fields >> u >> v >> count)) {
      throw IoError(a.co_papers + ":" + std::to_string(number) +
                    ": expected 'id id count'");
    }
    const VertexId x = names.Find(u);
    const VertexId y = names.Find(v);
    if (x < 0 || y < 0) {
      throw InvalidArgument(a.co_papers + ":" + std::to_string(number) +
                            ": author without a paper count");
    }
    pairs.push_back({x, y, count});
  }
  auto table = InModule("metrics", [&] { return CiiTable(counts, pairs); });
  Output o(a.out, out);
  o.stream() << "# collaboration intensity weights\n";
  for (const auto& [pair, value] : table) {
    o.stream() << names.name(pair.first) << ' ' << names.name(pair.second)
               << ' ' << FormatDouble(value) << '\n';
  }
  o.Close();
  return kExitOk;
}

int CmdCii(const CiiArgs& a, std::ostream& out) {
  const bool single = a.papers_i >= 0 || a.papers_j >= 0 || a.co >= 0;
  const bool files = !a.papers.empty() || !a.co_papers.empty();
  if (single == files) {
    throw InvalidArgument(
        "give either --papers-i/--papers-j/--co or --papers/--co-papers");
  }
  if (files) {
    if (a.papers.empty() || a.co_papers.empty()) {
      throw InvalidArgument("--papers and --co-papers go together");
    }
    return CiiEdgeList(a, out);
  }
  out << FormatDouble(InModule("metrics", [&] {
    return Cii(a.papers_i, a.papers_j, a.co);
  })) << '\n';
  return kExitOk;
}

int ExitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return kExitUsage;
    case ErrorKind::kIo:
      return kExitIo;
    case ErrorKind::kAlgorithm:
      return kExitAlgorithm;
  }
  return kExitAlgorithm;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Logger log(err);
  CLI::App app{"Motif clustering on maximal k-edge-connected subgraphs",
               "chief"};
  app.require_subcommand(1);

  const std::vector<std::string> modes{"auto", "st", "ap", "baseline"};

  ClusterArgs cluster;
  auto* c = app.add_subcommand("cluster", "Cluster a graph");
  c->add_option("--input", cluster.input, "Edge list")->required();
  c->add_flag("--weighted", cluster.weighted, "Read and cut on edge weights");
  AddMotifOption(c, cluster.motif);
  c->add_option("--k", cluster.k, "Edge connectivity")
      ->check(CLI::PositiveNumber);
  c->add_option("--mode", cluster.mode)->check(CLI::IsMember(modes));
  c->add_option("--min-cluster", cluster.min_cluster,
                "Smallest region to split further (0: 2 * motif size)")
      ->check(CLI::NonNegativeNumber);
  c->add_option("--max-conductance", cluster.max_conductance)
      ->check(CLI::Range(0.0, 1.0));
  c->add_option("--weight-threshold", cluster.weight_threshold)
      ->check(CLI::NonNegativeNumber);
  c->add_option("--out", cluster.out, "Cluster TSV (default stdout)");
  c->add_option("--unclustered", cluster.unclustered,
                "Unclustered vertex list (default <out>.unclustered)");
  c->add_option("--stats", cluster.stats, "RunStats JSON");
  c->add_option("--metrics", cluster.metrics, "Per-cluster metrics TSV");
  c->add_option("--seed", cluster.seed);
  c->add_option("--eigen-iterations", cluster.eigen_iterations,
                "Lanczos matrix-vector cap (0: 10 * n)")
      ->check(CLI::NonNegativeNumber);
  c->add_option("--threads", cluster.threads)->check(CLI::NonNegativeNumber);

  KscanArgs kscan;
  auto* ks = app.add_subcommand("kscan", "Decompose over a range of k");
  ks->add_option("--input", kscan.input)->required();
  ks->add_option("--k-min", kscan.k_min);
  ks->add_option("--k-max", kscan.k_max);
  AddMotifOption(ks, kscan.motif);
  ks->add_option("--out", kscan.out);
  ks->add_option("--threads", kscan.threads)->check(CLI::NonNegativeNumber);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time chief against the baseline");
  b->add_option("--input", bench.input);
  b->add_option("--nv", bench.nv, "Generate a small-world graph instead")
      ->check(CLI::NonNegativeNumber);
  b->add_option("--rrp", bench.rrp)->check(CLI::Range(0.0, 1.0));
  b->add_option("--seed", bench.seed);
  AddMotifOption(b, bench.motif);
  b->add_option("--k", bench.k)->check(CLI::PositiveNumber);
  b->add_option("--repeat", bench.repeat);
  b->add_option("--mode", bench.mode)->check(CLI::IsMember(modes));
  b->add_option("--threads", bench.threads)->check(CLI::NonNegativeNumber);
  b->add_option("--out", bench.out);

  SynthArgs synth;
  auto* s = app.add_subcommand("synth", "Generate a small-world graph");
  s->add_option("--preset", synth.preset, "N1..N5");
  s->add_option("--nv", synth.nv)->check(CLI::NonNegativeNumber);
  s->add_option("--rrp", synth.rrp)->check(CLI::Range(0.0, 1.0));
  s->add_option("--seed", synth.seed);
  s->add_flag("--large", synth.large, "Allow the N4 and N5 presets");
  s->add_option("--out", synth.out);

  DecomposeArgs decompose;
  auto* d = app.add_subcommand("decompose",
                               "Maximal k-edge-connected subgraphs");
  d->add_option("--input", decompose.input)->required();
  d->add_option("--k", decompose.k)->check(CLI::PositiveNumber);
  d->add_flag("--weighted", decompose.weighted);
  d->add_option("--out", decompose.out);
  d->add_option("--threads", decompose.threads)
      ->check(CLI::NonNegativeNumber);

  AuditArgs audit;
  auto* au = app.add_subcommand("audit", "Check the perturbation bounds");
  au->add_option("--corpus", audit.corpus, "Directory of edge lists");
  au->add_option("--input", audit.inputs, "Edge list (repeatable)");
  au->add_option("--k", audit.ks, "Connectivity levels")->delimiter(',');
  au->add_option("--out", audit.out);
  au->add_option("--threads", audit.threads)->check(CLI::NonNegativeNumber);

  CiiArgs cii;
  auto* ci = app.add_subcommand("cii", "Collaboration intensity index");
  ci->add_option("--papers-i", cii.papers_i);
  ci->add_option("--papers-j", cii.papers_j);
  ci->add_option("--co", cii.co);
  ci->add_option("--papers", cii.papers, "Lines 'id papers'");
  ci->add_option("--co-papers", cii.co_papers, "Lines 'id id co-papers'");
  ci->add_option("--out", cii.out, "Weighted edge list (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (app.got_subcommand(c)) return CmdCluster(cluster, out, log);
    if (app.got_subcommand(ks)) return CmdKscan(kscan, out, log);
    if (app.got_subcommand(b)) return CmdBench(bench, out, log);
    if (app.got_subcommand(s)) return CmdSynth(synth, out, log);
    if (app.got_subcommand(d)) return CmdDecompose(decompose, out, log);
    if (app.got_subcommand(au)) return CmdAudit(audit, out, log);
    if (app.got_subcommand(ci)) return CmdCii(cii, out);
  } catch (const chief::Error& e) {
    log.Error(e.what());
    return ExitCode(e.kind());
  } catch (const std::exception& e) {
    log.Error(e.what());
    return kExitAlgorithm;
  }
  return kExitUsage;
}

}  // namespace chief
