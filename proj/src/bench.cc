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

#include "ksub/bench.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "ksub/costs.h"
#include "ksub/coverage_bonus.h"
#include "ksub/data_io.h"
#include "ksub/lt_influence.h"
#include "ksub/random.h"
#include "ksub/sensor_entropy.h"
#include "ksub/text.h"

namespace ksub {
namespace {

[[noreturn]] void BadValue(std::string_view key, std::string_view value) {
  throw Error(ErrorCode::kInvalidConfig, "bad value '" + std::string(value) +
                                             "' for " + std::string(key));
}

template <typename T>
T Unsigned(std::string_view key, std::string_view value) {
  auto v = ParseInt(value);
  if (!v || *v < 0) BadValue(key, value);
  return static_cast<T>(*v);
}

double Real(std::string_view key, std::string_view value) {
  auto v = ParseDouble(value);
  if (!v || !std::isfinite(*v)) BadValue(key, value);
  return *v;
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return in;
}

KnapsackInstance Shuffled(const KnapsackInstance& inst, std::uint64_t seed) {
  std::vector<std::size_t> order(inst.n());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::mt19937_64 rng(seed);
  for (std::size_t j = order.size(); j > 1; --j) {
    std::swap(order[j - 1], order[UniformIndex(rng, j)]);
  }
  return inst.Reordered(order);
}

std::vector<ElementId> Iota(std::size_t n) {
  std::vector<ElementId> ids(n);
  for (std::size_t j = 0; j < n; ++j) ids[j] = static_cast<ElementId>(j);
  return ids;
}

double Sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

void ApplyConfigValue(ExperimentConfig& cfg, std::string_view key,
                      std::string_view value) {
  if (key == "app") {
    cfg.app = value;
  } else if (key == "instance") {
    cfg.instance = value;
  } else if (key == "graph") {
    cfg.graph = value;
  } else if (key == "sensors") {
    cfg.sensors = value;
  } else if (key == "n") {
    cfg.n = Unsigned<std::size_t>(key, value);
  } else if (key == "nodes") {
    cfg.nodes = Unsigned<std::size_t>(key, value);
  } else if (key == "links") {
    cfg.links = Unsigned<std::size_t>(key, value);
  } else if (key == "locations") {
    cfg.locations = Unsigned<std::size_t>(key, value);
  } else if (key == "samples") {
    cfg.samples = Unsigned<std::size_t>(key, value);
  } else if (key == "k") {
    cfg.k = Unsigned<int>(key, value);
  } else if (key == "epsilon") {
    cfg.epsilon = Real(key, value);
  } else if (key == "budget") {
    for (auto field : SplitFields(value)) cfg.budgets.push_back(Real(key, field));
  } else if (key == "algo") {
    for (auto field : SplitFields(value)) cfg.algorithms.emplace_back(field);
  } else if (key == "seed") {
    cfg.seed = Unsigned<std::uint64_t>(key, value);
  } else if (key == "reps") {
    auto v = ParseInt(value);
    if (!v) BadValue(key, value);
    cfg.reps = static_cast<int>(*v);
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "mc-samples") {
    cfg.mc_samples = Unsigned<std::size_t>(key, value);
  } else if (key == "shuffle-seed") {
    cfg.shuffle_seed = Unsigned<std::uint64_t>(key, value);
  } else if (key == "max-enum") {
    cfg.max_enum = Unsigned<std::uint64_t>(key, value);
  } else if (key == "cost-lo") {
    cfg.cost_lo = Real(key, value);
  } else if (key == "cost-hi") {
    cfg.cost_hi = Real(key, value);
  } else {
    throw Error(ErrorCode::kInvalidConfig,
                "unknown config key '" + std::string(key) + "'");
  }
}

ExperimentConfig ParseConfig(std::istream& in) {
  ExperimentConfig cfg;
  bool algos_given = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = StripComment(line);
    if (body.empty()) continue;
    std::string_view key, value;
    if (auto eq = body.find('='); eq != std::string_view::npos) {
      key = StripComment(body.substr(0, eq));
      value = StripComment(body.substr(eq + 1));
    } else {
      auto space = body.find_first_of(" \t");
      if (space == std::string_view::npos) {
        throw Error(ErrorCode::kInvalidConfig,
                    "config line " + std::to_string(line_no) + " has no value");
      }
      key = body.substr(0, space);
      value = StripComment(body.substr(space));
    }
    if (key == "algo" && !algos_given) {
      cfg.algorithms.clear();
      algos_given = true;
    }
    ApplyConfigValue(cfg, key, value);
  }
  return cfg;
}

void ValidateConfig(const ExperimentConfig& cfg) {
  auto invalid = [](const std::string& why) {
    throw Error(ErrorCode::kInvalidConfig, why);
  };
  if (cfg.app != "synthetic" && cfg.app != "kimk" && cfg.app != "kspk") {
    invalid("app must be synthetic, kimk or kspk");
  }
  if (cfg.budgets.empty()) invalid("budget list is empty");
  for (std::size_t j = 0; j < cfg.budgets.size(); ++j) {
    if (!(cfg.budgets[j] > 0)) invalid("budgets must be positive");
    if (j > 0 && !(cfg.budgets[j] > cfg.budgets[j - 1])) {
      invalid("budgets must be strictly ascending");
    }
  }
  if (cfg.reps < 1) invalid("reps must be >= 1");
  if (cfg.k < 2) invalid("k must be >= 2");
  if (cfg.mc_samples < 1) invalid("mc-samples must be >= 1");
  if (cfg.algorithms.empty()) invalid("no algorithm selected");
  for (const auto& a : cfg.algorithms) {
    if (!SolverRegistry::Global().Has(a)) invalid("unknown algorithm '" + a + "'");
  }
  if (std::find(cfg.algorithms.begin(), cfg.algorithms.end(), "rla") !=
          cfg.algorithms.end() &&
      !(cfg.epsilon > 0 && cfg.epsilon < 0.2)) {
    throw Error(ErrorCode::kEpsilonOutOfRange,
                "epsilon must lie in (0, 1/5) for rla");
  }
  if (!(cfg.cost_hi > cfg.cost_lo && cfg.cost_lo > 0)) {
    invalid("cost range needs cost-hi > cost-lo > 0");
  }
}

Workload BuildWorkload(const ExperimentConfig& cfg, int rep) {
  const std::uint64_t rep_seed = cfg.seed + static_cast<std::uint64_t>(rep);
  std::optional<Workload> w;
  if (cfg.app == "synthetic") {
    InstanceBundle bundle = [&] {
      if (!cfg.instance.empty()) {
        std::ifstream in = OpenInput(cfg.instance);
        return ReadInstance(in);
      }
      return GenRandomInstance(cfg.n, cfg.k, cfg.seed);
    }();
    w.emplace(bundle.instance);
    w->objective = MakeCoverageBonus(std::move(bundle.spec));
    w->description = bundle.provenance;
  } else if (cfg.app == "kimk") {
    std::shared_ptr<const TopicGraph> graph;
    std::string what;
    if (!cfg.graph.empty()) {
      std::ifstream in = OpenInput(cfg.graph);
      EdgeListOptions options;
      options.strict = false;
      auto parsed = ParseEdgeList(in, cfg.k, WeightMode::kDerived, options);
      graph = parsed.graph;
      if (cfg.nodes > 0 && cfg.nodes < graph->node_count()) {
        Subgraph sub = InducedBfsSubgraph(graph->node_count(), graph->edges(),
                                          0, cfg.nodes);
        auto weights = DeriveTopicWeights(sub.node_count, sub.edges, cfg.k,
                                          cfg.seed);
        graph = std::make_shared<const TopicGraph>(
            sub.node_count, cfg.k, std::move(sub.edges), std::move(weights));
      }
      what = cfg.graph;
    } else {
      graph = GenSocialGraph(cfg.nodes, cfg.links, cfg.k, cfg.seed);
      what = "social graph seed=" + std::to_string(cfg.seed);
    }
    std::vector<double> costs =
        NormalizedLinearCosts(OutDegreeScores(*graph), cfg.cost_lo, cfg.cost_hi);
    const double total = Sum(costs);
    w.emplace(KnapsackInstance(Iota(graph->node_count()), cfg.k,
                               std::move(costs), total));
    w->objective = std::make_shared<LtInfluenceObjective>(graph, cfg.mc_samples,
                                                          rep_seed);
    w->description = what + " nodes=" + std::to_string(graph->node_count()) +
                     " edges=" + std::to_string(graph->edge_count()) +
                     " R=" + std::to_string(cfg.mc_samples);
  } else {
    SensorTable table;
    std::string what;
    if (!cfg.sensors.empty()) {
      std::ifstream in = OpenInput(cfg.sensors);
      table = SelectTypes(ParseSensorReadings(in).table,
                          static_cast<std::size_t>(cfg.k));
      what = cfg.sensors;
    } else {
      table = GenSensorTable(cfg.locations, static_cast<std::size_t>(cfg.k),
                             cfg.samples, cfg.seed);
      what = "sensor field seed=" + std::to_string(cfg.seed);
    }
    std::vector<double> costs = NormalizedLinearCosts(
        ReadingVarianceScores(table), cfg.cost_lo, cfg.cost_hi);
    const double total = Sum(costs);
    w.emplace(KnapsackInstance(table.locations, cfg.k, std::move(costs), total));
    w->objective = GaussianEntropyObjective::FromTable(table);
    w->description = what + " locations=" + std::to_string(table.locations.size()) +
                     " samples=" + std::to_string(table.samples);
  }
  if (w->instance.k() != cfg.k) {
    throw Error(ErrorCode::kInvalidConfig,
                "instance has k=" + std::to_string(w->instance.k()) +
                    " but the config asks for k=" + std::to_string(cfg.k));
  }
  if (cfg.shuffle_seed) {
    w->instance = Shuffled(w->instance, MixSeed(*cfg.shuffle_seed, rep));
  }
  return std::move(*w);
}

bool SameRow(const ResultRow& a, const ResultRow& b) {
  auto same = [](double x, double y) {
    return x == y || (std::isnan(x) && std::isnan(y));
  };
  return a.algorithm == b.algorithm && same(a.budget, b.budget) &&
         a.rep == b.rep && same(a.value, b.value) && a.queries == b.queries &&
         same(a.millis, b.millis) && a.seed == b.seed;
}

ExperimentResult RunExperiment(const ExperimentConfig& cfg) {
  ValidateConfig(cfg);
  SolverParams params;
  params.epsilon = cfg.epsilon;
  params.max_enum = cfg.max_enum;

  // cells[budget][algorithm] holds the rows of every rep.
  std::vector<std::vector<std::vector<ResultRow>>> cells(
      cfg.budgets.size(),
      std::vector<std::vector<ResultRow>>(cfg.algorithms.size()));
  std::vector<std::vector<std::vector<std::optional<Error>>>> errors(
      cfg.budgets.size(),
      std::vector<std::vector<std::optional<Error>>>(cfg.algorithms.size()));
  for (int rep = 0; rep < cfg.reps; ++rep) {
    const Workload w = BuildWorkload(cfg, rep);
    for (std::size_t b = 0; b < cfg.budgets.size(); ++b) {
      const KnapsackInstance inst = w.instance.WithBudget(cfg.budgets[b]);
      for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
        ResultRow row;
        row.algorithm = cfg.algorithms[a];
        row.budget = cfg.budgets[b];
        row.rep = rep;
        row.seed = cfg.seed + static_cast<std::uint64_t>(rep);
        std::optional<Error> error;
        try {
          CountingOracle oracle(*w.objective);
          RunResult r = SolverRegistry::Global().Run(cfg.algorithms[a], inst,
                                                     oracle, params);
          row.value = r.value;
          row.queries = static_cast<std::int64_t>(r.queries);
          row.millis = static_cast<double>(r.wall_time.count()) / 1e6;
        } catch (const Error& e) {
          row.value = std::nan("");
          row.queries = -1;
          row.millis = 0.0;
          error = e;
        }
        cells[b][a].push_back(row);
        errors[b][a].push_back(error);
      }
    }
  }

  ExperimentResult result;
  for (std::size_t b = 0; b < cells.size(); ++b) {
    for (std::size_t a = 0; a < cells[b].size(); ++a) {
      for (std::size_t r = 0; r < cells[b][a].size(); ++r) {
        result.rows.push_back(cells[b][a][r]);
        if (errors[b][a][r]) result.failures.push_back(*errors[b][a][r]);
      }
    }
  }
  return result;
}

void WriteResultsCsv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << "algorithm,B,rep,value,queries,millis,seed\n";
  for (const ResultRow& r : rows) {
    out << r.algorithm << ',' << FormatDouble(r.budget) << ',' << r.rep << ','
        << FormatDouble(r.value) << ',' << r.queries << ','
        << FormatDouble(r.millis) << ',' << r.seed << '\n';
  }
}

std::vector<ResultRow> ReadResultsCsv(std::istream& in) {
  std::vector<ResultRow> rows;
  std::string line;
  std::size_t line_no = 0;
  auto malformed = [&](const std::string& why) {
    throw Error(ErrorCode::kMalformedLine,
                "results line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != "algorithm,B,rep,value,queries,millis,seed") {
        malformed("unexpected header");
      }
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 7) malformed("expected 7 columns");
    ResultRow r;
    r.algorithm = f[0];
    auto budget = ParseDouble(f[1]);
    auto rep = ParseInt(f[2]);
    auto value = ParseDouble(f[3]);
    auto queries = ParseInt(f[4]);
    auto millis = ParseDouble(f[5]);
    auto seed = ParseInt(f[6]);
    if (!budget || !rep || !value || !queries || !millis || !seed) {
      malformed("unparsable field");
    }
    r.budget = *budget;
    r.rep = static_cast<int>(*rep);
    r.value = *value;
    r.queries = *queries;
    r.millis = *millis;
    r.seed = static_cast<std::uint64_t>(*seed);
    rows.push_back(std::move(r));
  }
  return rows;
}

void EmitOutputs(const std::vector<ResultRow>& rows,
                 const std::filesystem::path& dir, std::string_view header) {
  if (rows.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "no result rows to emit");
  }
  // Series in first-appearance order, points ascending in B.
  std::vector<std::string> algos;
  struct Acc {
    double value = 0, queries = 0, millis = 0;
    int ok = 0, failed = 0;
  };
  std::map<std::pair<std::string, double>, Acc> acc;
  for (const ResultRow& r : rows) {
    if (std::find(algos.begin(), algos.end(), r.algorithm) == algos.end()) {
      algos.push_back(r.algorithm);
    }
    Acc& a = acc[{r.algorithm, r.budget}];
    if (r.failed()) {
      ++a.failed;
      continue;
    }
    a.value += r.value;
    a.queries += static_cast<double>(r.queries);
    a.millis += r.millis;
    ++a.ok;
  }
  auto mean = [](double total, int count) {
    return count ? total / count : std::nan("");
  };

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string());
  auto open = [&](const char* name) {
    std::ofstream out(dir / name);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + (dir / name).string());
    return out;
  };
  auto close = [&](std::ofstream& out, const char* name) {
    out.close();
    if (!out) throw Error(ErrorCode::kIo, "failed writing " + (dir / name).string());
  };

  {
    std::ofstream out = open("results.csv");
    WriteResultsCsv(out, rows);
    close(out, "results.csv");
  }
  const std::pair<const char*, double Acc::*> metrics[] = {
      {"value", &Acc::value}, {"queries", &Acc::queries}, {"millis", &Acc::millis}};
  for (const auto& [metric, field] : metrics) {
    const std::string name = std::string("plot_") + metric + ".dat";
    std::ofstream out = open(name.c_str());
    out << "# algorithm B mean_" << metric << "\n";
    for (const std::string& algo : algos) {
      for (const auto& [key, a] : acc) {
        if (key.first != algo) continue;
        out << algo << ' ' << FormatDouble(key.second) << ' '
            << FormatDouble(mean(a.*field, a.ok)) << '\n';
      }
    }
    close(out, name.c_str());
  }
  {
    std::ofstream out = open("summary.txt");
    if (!header.empty()) out << header << "\n\n";
    out << rows.size() << " runs\n\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-10s %12s %16s %12s %10s %6s\n",
                  "algorithm", "B", "mean value", "mean queries", "mean ms",
                  "failed");
    out << buf;
    for (const std::string& algo : algos) {
      for (const auto& [key, a] : acc) {
        if (key.first != algo) continue;
        std::snprintf(buf, sizeof(buf), "%-10s %12.6g %16.8g %12.1f %10.3f %6d\n",
                      algo.c_str(), key.second, mean(a.value, a.ok),
                      mean(a.queries, a.ok), mean(a.millis, a.ok), a.failed);
        out << buf;
      }
    }
    close(out, "summary.txt");
  }
}

}  // namespace ksub
