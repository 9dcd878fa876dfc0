// Copyright 2026 The pscolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pscolor: generate graphs, run the coloring pipelines and simulators over
// seed sweeps, and emit JSON-lines reports or CSV scaling tables.
//
// Exit codes: 0 every run verified, 1 some run aborted or failed to verify,
// 2 usage or I/O error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pscolor/conflict.h"
#include "pscolor/decomposition.h"
#include "pscolor/edge_list_io.h"
#include "pscolor/errors.h"
#include "pscolor/generators.h"
#include "pscolor/nibble.h"
#include "pscolor/oracles.h"
#include "pscolor/partition.h"
#include "pscolor/pipelines.h"
#include "pscolor/sublinear.h"
#include "report.h"

namespace pscolor::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitRunFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string kind;
  Vertex n = 100;
  std::string p = "0.1";
  Vertex ell = 3;
  Vertex k = 4;
  Vertex a = 10;
  Vertex b = 10;
  Vertex r = 4;
  std::uint64_t seed = 0;
  std::string out = "-";
};

Graph generate_graph(const GenerateArgs& g) {
  auto prob = [&] {
    if (g.p == "auto") return std::pow(static_cast<double>(g.n), -2.0 / 3.0) / 3.0;
    std::size_t used = 0;
    double p = 0;
    try {
      p = std::stod(g.p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != g.p.size() || !(p >= 0.0 && p <= 1.0)) {
      throw UsageError("--p must be a probability or \"auto\", got " + g.p);
    }
    return p;
  };
  if (g.kind == "gnp") return gnp(g.n, prob(), g.seed);
  if (g.kind == "gnp-trifree") return gnp_triangle_free(g.n, prob(), g.seed);
  if (g.kind == "clique-collection") return clique_collection(g.ell, g.k);
  if (g.kind == "complete") return complete_graph(g.n);
  if (g.kind == "complete-bipartite") return complete_bipartite(g.a, g.b);
  if (g.kind == "bipartite-circulant") return bipartite_circulant(g.n, g.r);
  if (g.kind == "random-tree") return random_tree(g.n, g.seed);
  if (g.kind == "star") return star_graph(g.n);
  if (g.kind == "cycle") return cycle_graph(g.n);
  if (g.kind == "path") return path_graph(g.n);
  if (g.kind == "empty") return empty_graph(g.n);
  throw UsageError("unknown generator " + g.kind);
}

int cmd_generate(const GenerateArgs& args) {
  const Graph g = generate_graph(args);
  if (args.out == "-") {
    write_edge_list(std::cout, g);
  } else {
    write_edge_list_file(args.out, g);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// color

struct ColorArgs {
  std::string file;
  std::string mode;
  std::string seeds = "0";
  std::optional<double> eps;
  double gamma = 0.5;
  double b = 1.0;
  std::optional<double> list_constant;
  Vertex k = 2;
  std::string colorer = "greedy";
  std::int64_t max_resamples = -1;
  Color palette_override = 0;
  bool force_nibble = false;
  bool sqrt_log = false;
  Vertex min_degree_floor = 1;
  double alpha = 1.0;
  double psi_scale = 1.0;
};

struct GraphInput {
  Graph graph;
  Json descriptor;
};

GraphInput load_graph(const std::string& path) {
  GraphInput in{read_edge_list_file(path), {}};
  in.descriptor = Json{{"file", path},
                       {"digest", file_digest(path)},
                       {"n", in.graph.num_vertices()},
                       {"m", in.graph.num_edges()}};
  return in;
}

// Runs one seed of `mode` and fills the report fields that depend on it.
void color_once(const Graph& g, const ColorArgs& a, std::uint64_t seed, Json& rep) {
  Json params, diag;
  const ListAssignment* lists = nullptr;
  SolveOutcome outcome;
  // Each branch keeps its result alive until verification below.
  std::optional<OneEpsDeltaResult> od;
  std::optional<TriangleFreeResult> tf;
  std::optional<DegPlusOneResult> dp;
  std::optional<GreedyPipelineResult> gr;
  std::optional<PartitionResult> pr;

  if (a.mode == "od") {
    OneEpsDeltaOptions o;
    o.list_constant = a.list_constant.value_or(o.list_constant);
    o.max_resamples = a.max_resamples;
    const double eps = a.eps.value_or(0.3);
    params = {{"eps", eps}, {"list_constant", o.list_constant},
              {"max_resamples", o.max_resamples}};
    od = color_one_eps_delta(g, eps, seed, o);
    lists = &od->lists;
    outcome = od->outcome;
    diag = {{"palette", od->palette},           {"ell", od->ell},
            {"trim_threshold", od->trim_threshold}, {"trimmed_total", od->trimmed_total},
            {"trimmed_max", od->trimmed_max},   {"heavy_trim_vertices", od->heavy_trim_vertices},
            {"conflict_edges", od->conflict_edges}, {"solver", od->solver}};
  } else if (a.mode == "trifree") {
    TriangleFreeOptions o;
    o.b = a.b;
    o.sqrt_log = a.sqrt_log;
    o.force_nibble = a.force_nibble;
    o.palette_override = a.palette_override;
    o.max_resamples = a.max_resamples;
    params = {{"gamma", a.gamma},         {"b", o.b},
              {"sqrt_log", o.sqrt_log},   {"d0", o.d0},
              {"force_nibble", o.force_nibble}, {"palette_override", o.palette_override},
              {"max_resamples", o.max_resamples}};
    tf = color_triangle_free(g, a.gamma, seed, o);
    lists = &tf->lists;
    outcome = tf->outcome;
    diag = {{"palette", tf->palette},       {"ell", tf->ell},
            {"nibble_ran", tf->nibble_ran}, {"nibble_rounds", tf->rounds},
            {"i_star", tf->i_star},         {"residual_vertices", tf->residual_vertices},
            {"solver", tf->solver},         {"phase", tf->phase}};
  } else if (a.mode == "degp1") {
    DegPlusOneOptions o;
    o.eps = a.eps.value_or(o.eps);
    o.alpha = a.alpha;
    o.min_degree_floor = a.min_degree_floor;
    o.list_constant = a.list_constant.value_or(o.list_constant);
    o.psi_scale = a.psi_scale;
    params = {{"eps", o.eps},
              {"alpha", o.alpha},
              {"min_degree_floor", o.min_degree_floor},
              {"list_constant", o.list_constant},
              {"psi_scale", o.psi_scale}};
    dp = color_deg_plus_one(g, seed, o);
    lists = &dp->lists;
    outcome = dp->outcome;
    diag = {{"ell", dp->ell},
            {"p_active", dp->p_active},
            {"d_min", dp->d_min},
            {"blocks", {{"sparse", dp->num_sparse},
                        {"uneven", dp->num_uneven},
                        {"low", dp->num_low},
                        {"cliques", dp->num_cliques},
                        {"clique_vertices", dp->clique_vertices}}},
            {"small", dp->num_small},
            {"large", dp->num_large},
            {"first_step_activated", dp->first_step_activated},
            {"first_step_colored", dp->first_step_colored},
            {"available_mismatches", dp->available_mismatches},
            {"clique_solvers", dp->clique_solvers},
            {"phase", dp->phase}};
  } else if (a.mode == "onedeg" || a.mode == "degeneracy") {
    const double eps = a.eps.value_or(0.5);
    params = {{"eps", eps}};
    gr = a.mode == "onedeg" ? color_one_eps_deg(g, eps, seed) : color_degeneracy(g, eps, seed);
    lists = &gr->lists;
    outcome = gr->outcome;
    diag = {{"ell", gr->ell}};
  } else if (a.mode == "partition") {
    const double eps = a.eps.value_or(0.5);
    BaseColorer colorer;
    if (a.colorer == "greedy") {
      colorer = BaseColorer::kGreedy;
    } else if (a.colorer == "trifree") {
      colorer = BaseColorer::kTriangleFree;
    } else {
      throw UsageError("--colorer must be greedy or trifree");
    }
    PartitionOptions o;
    o.gamma = a.gamma;
    params = {{"eps", eps}, {"k", a.k}, {"colorer", a.colorer}, {"gamma", o.gamma},
              {"max_widenings", o.max_widenings}};
    pr = partition_color(g, a.k, eps, colorer, seed, o);
    lists = &pr->lists;
    outcome = pr->outcome;
    Json parts = Json::array();
    for (const auto& p : pr->parts) {
      parts.push_back({{"size", p.size},
                       {"max_degree", p.max_degree},
                       {"block_size", p.block_size},
                       {"widenings", p.widenings},
                       {"solver", p.solver}});
    }
    diag = {{"target_degree", pr->target_degree}, {"bound_colors", pr->bound_colors},
            {"total_colors", pr->total_colors},   {"widenings", pr->widenings},
            {"k_in_range", pr->k_in_range},       {"k_max", pr->k_max},
            {"parts", parts},                     {"log", pr->log}};
  } else {
    throw UsageError("unknown --mode " + a.mode +
                     " (od, trifree, degp1, onedeg, degeneracy, partition)");
  }
  const Verification v = verify_outcome(g, lists, outcome);
  rep["outcome"] = v.outcome;
  rep["colors_used"] = v.colors_used;
  rep["verify_passed"] = v.verify_passed;
  if (!v.detail.empty()) diag["detail"] = v.detail;
  rep["params"] = std::move(params);
  rep["diagnostics"] = std::move(diag);
}

Json base_report(const std::string& command, const std::string& mode, const Json& graph,
                 std::uint64_t seed) {
  return Json{{"schema", kSchemaVersion}, {"command", command}, {"mode", mode},
              {"graph", graph},           {"seed", seed}};
}

int sweep(const std::vector<std::uint64_t>& seeds,
          const std::function<Json(std::uint64_t)>& one) {
  bool all_ok = true;
  std::mutex mu;
  run_ordered(
      seeds.size(),
      [&](std::size_t i) {
        const auto t0 = std::chrono::steady_clock::now();
        Json rep = one(seeds[i]);
        rep["elapsed_ms"] = elapsed_ms(t0);
        if (!rep.value("verify_passed", false)) {
          std::lock_guard lock(mu);
          all_ok = false;
        }
        return rep.dump();
      },
      [](const std::string& line) {
        std::cout << line << '\n';
        std::cout.flush();
      });
  return all_ok ? kExitOk : kExitRunFailed;
}

int cmd_color(const ColorArgs& a) {
  const std::vector<std::uint64_t> seeds = parse_seeds(a.seeds);
  const GraphInput in = load_graph(a.file);
  if (a.mode == "trifree" && count_triangles(in.graph) > 0) {
    throw PreconditionError("trifree mode needs a triangle-free graph");
  }
  // Reject an unknown mode before any output.
  {
    static const std::vector<std::string> modes{"od",     "trifree",    "degp1",
                                                 "onedeg", "degeneracy", "partition"};
    if (std::find(modes.begin(), modes.end(), a.mode) == modes.end()) {
      throw UsageError("unknown --mode " + a.mode +
                       " (od, trifree, degp1, onedeg, degeneracy, partition)");
    }
  }
  return sweep(seeds, [&](std::uint64_t seed) {
    Json rep = base_report("color", a.mode, in.descriptor, seed);
    color_once(in.graph, a, seed, rep);
    return rep;
  });
}

// ---------------------------------------------------------------------------
// stream / query

struct SimArgs {
  std::string file;
  std::string mode;
  std::string seeds = "0";
  std::string order = "natural";
  SimOptions options;
};

Json sim_params(const SimOptions& o) {
  return Json{{"eps_delta", o.eps_delta},
              {"od_list_constant", o.od_list_constant},
              {"gamma", o.gamma},
              {"tf_b", o.tf_b},
              {"eps_deg", o.eps_deg},
              {"degp1_list_constant", o.degp1_list_constant},
              {"neighbor_factor", o.neighbor_factor},
              {"max_retries", o.max_retries},
              {"max_resamples", o.max_resamples}};
}

void fill_sim_report(const Graph& g, const SimResult& r, Json& rep) {
  const Verification v = verify_outcome(g, &r.lists, r.outcome);
  rep["outcome"] = v.outcome;
  rep["colors_used"] = v.colors_used;
  rep["verify_passed"] = v.verify_passed;
  rep["ledger"] = ledger_json(r.ledger);
  Json diag{{"palette", r.palette},       {"ell", r.ell},
            {"max_degree", r.max_degree}, {"short_lists", r.short_lists},
            {"retries", r.retries},       {"solver", r.solver},
            {"conflict_edges", r.conflict.size()}};
  if (r.plan_size > 0) {
    char hash[17];
    std::snprintf(hash, sizeof(hash), "%016llx", static_cast<unsigned long long>(r.plan_hash));
    diag["plan_hash"] = hash;
    diag["plan_size"] = r.plan_size;
  }
  if (!v.detail.empty()) diag["detail"] = v.detail;
  rep["diagnostics"] = std::move(diag);
}

SimMode sim_mode(const std::string& name) {
  const auto m = parse_sim_mode(name);
  if (!m) throw UsageError("unknown --mode " + name + " (od, trifree, onedeg, degp1)");
  return *m;
}

int cmd_stream(const SimArgs& a) {
  const SimMode mode = sim_mode(a.mode);
  const std::vector<std::uint64_t> seeds = parse_seeds(a.seeds);
  StreamOrder order;
  if (a.order == "natural") {
    order = StreamOrder::kNatural;
  } else if (a.order == "reversed") {
    order = StreamOrder::kReversed;
  } else if (a.order == "shuffled") {
    order = StreamOrder::kShuffled;
  } else {
    throw UsageError("--order must be natural, reversed or shuffled");
  }
  // The graph is loaded for verification only; the simulator itself reads
  // the file strictly forward when the order is natural.
  const GraphInput in = load_graph(a.file);
  return sweep(seeds, [&](std::uint64_t seed) {
    Json rep = base_report("stream", sim_mode_name(mode), in.descriptor, seed);
    rep["params"] = sim_params(a.options);
    rep["params"]["order"] = a.order;
    const SimResult r =
        order == StreamOrder::kNatural
            ? stream_color_file(a.file, mode, seed, a.options)
            : stream_color(make_edge_stream(in.graph, order, seed), mode, seed, a.options);
    fill_sim_report(in.graph, r, rep);
    return rep;
  });
}

int cmd_query(const SimArgs& a) {
  const SimMode mode = sim_mode(a.mode);
  const std::vector<std::uint64_t> seeds = parse_seeds(a.seeds);
  const GraphInput in = load_graph(a.file);
  return sweep(seeds, [&](std::uint64_t seed) {
    Json rep = base_report("query", sim_mode_name(mode), in.descriptor, seed);
    rep["params"] = sim_params(a.options);
    CountingOracle oracle(in.graph);
    const SimResult r = query_color(oracle, mode, seed, a.options);
    fill_sim_report(in.graph, r, rep);
    rep["oracle_recount"] = {{"degree", oracle.degree_calls},
                             {"neighbor", oracle.neighbor_calls},
                             {"pair", oracle.pair_calls}};
    return rep;
  });
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string suite;
  int seeds = 0;  // 0 picks the suite default
  std::vector<int> sizes;
};

struct Stat {
  double sum = 0, max = 0;
  int count = 0;
  void add(double x) {
    sum += x;
    max = count == 0 ? x : std::max(max, x);
    ++count;
  }
  double mean() const { return count ? sum / count : 0.0; }
};

std::vector<int> sizes_or(const BenchArgs& a, std::vector<int> fallback) {
  return a.sizes.empty() ? fallback : a.sizes;
}

int cmd_bench(const BenchArgs& a) {
  std::ostream& out = std::cout;
  out.precision(6);
  if (a.suite == "conflict-size") {
    const int seeds = a.seeds ? a.seeds : 20;
    out << "n,conflict_mean,conflict_max,n_ln2n,ratio_mean,ratio_max\n";
    for (int n : sizes_or(a, {500, 1000, 2000, 4000})) {
      const auto ell = static_cast<std::int64_t>(std::ceil(2 * std::log(n)));
      Stat st;
      for (int s = 0; s < seeds; ++s) {
        const Graph g = gnp(n, 40.0 / n, s);
        const auto c = build_conflict_graph(g, sample_lists(g, DegPlusOnePalette{}, ell, s));
        st.add(static_cast<double>(c.graph.num_edges()));
      }
      const double bound = n * std::pow(std::log(n), 2);
      out << n << ',' << st.mean() << ',' << st.max << ',' << bound << ','
          << st.mean() / bound << ',' << st.max / bound << '\n';
    }
  } else if (a.suite == "query-scaling") {
    const int seeds = a.seeds ? a.seeds : 10;
    out << "n,queries_mean,queries_max,n15_ln3n,ratio_mean,ratio_max\n";
    for (int n : sizes_or(a, {256, 512, 1024, 2048, 4096})) {
      Stat st;
      for (int s = 0; s < seeds; ++s) {
        st.add(static_cast<double>(build_query_plan(n, SimMode::kDegPlusOne, s).size()));
      }
      const double bound = std::pow(n, 1.5) * std::pow(std::log(n), 3);
      out << n << ',' << st.mean() << ',' << st.max << ',' << bound << ','
          << st.mean() / bound << ',' << st.max / bound << '\n';
    }
  } else if (a.suite == "nibble-schedule") {
    out << "d,i_star,ln2d,ratio,min_keep,final_alpha\n";
    std::vector<int> ds = a.sizes;
    if (ds.empty()) {
      for (int d = 50; d <= 5000; d += 50) ds.push_back(d);
    }
    for (int d : ds) {
      const NibbleSchedule s = nibble_schedule(d);
      double min_keep = 1.0;
      for (int i = 1; i < s.i_star; ++i) min_keep = std::min(min_keep, s.at(i).keep);
      const double ln2 = std::pow(std::log(d), 2);
      out << d << ',' << s.i_star << ',' << ln2 << ',' << s.i_star / ln2 << ',' << min_keep
          << ',' << s.at(s.i_star).alpha << '\n';
    }
  } else if (a.suite == "partition-degree") {
    const int seeds = a.seeds ? a.seeds : 20;
    const Vertex k = 8;
    const double eps = 0.5;
    out << "n,delta_mean,part_degree_mean,part_degree_max,target_mean,ratio_max,"
           "part_size_max,size_bound\n";
    for (int n : sizes_or(a, {1000, 2000, 3000, 6000})) {
      Stat delta, deg, target, ratio, size;
      for (int s = 0; s < seeds; ++s) {
        const Graph g = gnp(n, 85.5 / n, s);
        const PartitionResult r = partition_color(g, k, eps, BaseColorer::kGreedy, s);
        Vertex d = 0, m = 0;
        for (const auto& p : r.parts) {
          d = std::max(d, p.max_degree);
          m = std::max(m, p.size);
        }
        delta.add(g.max_degree());
        deg.add(d);
        target.add(r.target_degree);
        ratio.add(d / r.target_degree);
        size.add(m);
      }
      out << n << ',' << delta.mean() << ',' << deg.mean() << ',' << deg.max << ','
          << target.mean() << ',' << ratio.max << ',' << size.max << ',' << 4 * n / k << '\n';
    }
  } else {
    throw UsageError("unknown --suite " + a.suite +
                     " (conflict-size, query-scaling, nibble-schedule, partition-degree)");
  }
  return kExitOk;
}

}  // namespace
}  // namespace pscolor::cli

int main(int argc, char** argv) {
  using namespace pscolor::cli;
  CLI::App app{"pscolor: palette-sparsification coloring experiments"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a generated graph as an edge list");
  auto* kinds = g->add_option_group("generator", "exactly one generator");
  for (const char* kind :
       {"gnp", "gnp-trifree", "clique-collection", "complete", "complete-bipartite",
        "bipartite-circulant", "random-tree", "star", "cycle", "path", "empty"}) {
    kinds->add_flag_callback(std::string("--") + kind, [&gen, kind] { gen.kind = kind; });
  }
  kinds->require_option(1);
  g->add_option("--n", gen.n, "vertices (leaves for --star, half size for circulant)");
  g->add_option("--p", gen.p, "edge probability, or \"auto\" for n^(-2/3)/3");
  g->add_option("--ell", gen.ell, "clique collection: cliques are K_(ell+1)");
  g->add_option("--k", gen.k, "clique collection: number of cliques");
  g->add_option("--a", gen.a, "complete bipartite: left side");
  g->add_option("--b", gen.b, "complete bipartite: right side");
  g->add_option("--r", gen.r, "bipartite circulant: degree");
  g->add_option("--seed", gen.seed);
  g->add_option("--out", gen.out, "output file, - for stdout");

  ColorArgs col;
  auto* c = app.add_subcommand("color", "Run a coloring pipeline over seeds");
  c->add_option("graph", col.file, "edge-list file")->required();
  c->add_option("--mode", col.mode, "od, trifree, degp1, onedeg, degeneracy, partition")
      ->required();
  c->add_option("--seeds", col.seeds, "7, 0..9 or 1,4,9");
  c->add_option("--eps", col.eps);
  c->add_option("--gamma", col.gamma);
  c->add_option("--b", col.b, "triangle-free list size factor");
  c->add_option("--list-constant", col.list_constant);
  c->add_option("--k", col.k, "partition: number of parts");
  c->add_option("--colorer", col.colorer, "partition: greedy or trifree");
  c->add_option("--max-resamples", col.max_resamples, "-1 for the default budget");
  c->add_option("--palette-override", col.palette_override);
  c->add_flag("--force-nibble", col.force_nibble);
  c->add_flag("--sqrt-log", col.sqrt_log);
  c->add_option("--min-degree-floor", col.min_degree_floor);
  c->add_option("--alpha", col.alpha);
  c->add_option("--psi-scale", col.psi_scale);

  SimArgs st, qu;
  auto add_sim = [](CLI::App* sub, SimArgs& s) {
    sub->add_option("graph", s.file, "edge-list file")->required();
    sub->add_option("--mode", s.mode, "od, trifree, onedeg, degp1")->required();
    sub->add_option("--seeds", s.seeds, "7, 0..9 or 1,4,9");
    sub->add_option("--eps-delta", s.options.eps_delta);
    sub->add_option("--od-list-constant", s.options.od_list_constant);
    sub->add_option("--gamma", s.options.gamma);
    sub->add_option("--b", s.options.tf_b);
    sub->add_option("--eps-deg", s.options.eps_deg);
    sub->add_option("--degp1-list-constant", s.options.degp1_list_constant);
    sub->add_option("--neighbor-factor", s.options.neighbor_factor);
    sub->add_option("--max-retries", s.options.max_retries);
    sub->add_option("--max-resamples", s.options.max_resamples);
  };
  auto* s = app.add_subcommand("stream", "Single-pass streaming simulation");
  add_sim(s, st);
  s->add_option("--order", st.order, "natural, reversed or shuffled");
  auto* q = app.add_subcommand("query", "Non-adaptive query-model simulation");
  add_sim(q, qu);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Scaling table as CSV");
  b->add_option("--suite", bench.suite,
                "conflict-size, query-scaling, nibble-schedule, partition-degree")
      ->required();
  b->add_option("--seeds", bench.seeds, "seeds per size");
  b->add_option("--sizes", bench.sizes, "n (or d) values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*g) return cmd_generate(gen);
    if (*c) return cmd_color(col);
    if (*s) return cmd_stream(st);
    if (*q) return cmd_query(qu);
    if (*b) return cmd_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pscolor::MalformedInputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // Precondition failures and rejected parameters.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
