// Copyright 2026 The metric-forge Authors
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

#include "metric_forge/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <random>
#include <sstream>

#include "metric_forge/bandwidth.hpp"
#include "metric_forge/c2.hpp"
#include "metric_forge/error.hpp"
#include "metric_forge/flowcut.hpp"
#include "metric_forge/graph_families.hpp"
#include "metric_forge/io.hpp"
#include "metric_forge/l2_embed.hpp"
#include "metric_forge/metric.hpp"
#include "metric_forge/rng.hpp"
#include "metric_forge/tree_embed.hpp"

namespace mforge::cli {

using json = nlohmann::json;

namespace {

constexpr int kSchema = 1;

struct Flags {
  std::optional<std::uint64_t> seed;
  std::size_t trials = 1;
  std::optional<double> tol;
  std::string out;
  int jobs = 0;
};

struct Context {
  Flags flags;
  std::uint64_t seed = 0;
  std::vector<std::string> inputs;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("METRIC_FORGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidParameters, "METRIC_FORGE_SEED is not an unsigned integer");
    }
  }
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Emits an artifact to --out, or returns it for embedding in the record.
std::optional<std::string> emit(const Context& ctx, const std::string& text) {
  if (ctx.flags.out.empty()) return text;
  std::ofstream f(ctx.flags.out);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + ctx.flags.out + "'");
  f << text;
  return std::nullopt;
}

void attach(json& result, const Context& ctx, const std::string& text) {
  if (auto inline_text = emit(ctx, text))
    result["artifact"] = *inline_text;
  else
    result["artifact_path"] = ctx.flags.out;
}

std::string matrix_text(const Matrix& m) {
  std::ostringstream ss;
  io::write_matrix_csv(ss, m);
  return ss.str();
}

bool looks_like_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) break;
  if (line.find(',') != std::string::npos) return false;
  std::istringstream header(line);
  long long a = 0;
  long long b = 0;
  std::string rest;
  return static_cast<bool>(header >> a >> b) && !(header >> rest);
}

WeightedGraph load_graph(const std::string& path) { return io::read_graph_file(path); }

// A metric CSV, or a graph file reduced to its shortest-path metric.
MetricSpace load_metric(const std::string& path) {
  const std::string text = slurp(path);
  std::istringstream in(text);
  if (looks_like_graph(text)) return shortest_path_metric(io::read_graph(in));
  return validate_metric(io::read_matrix_csv(in));
}

json distortion_json(const DistortionReport& r) {
  return {{"expansion", r.expansion}, {"contraction", r.contraction}, {"distortion", r.distortion}};
}

json one_based(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (std::size_t x : v) a.push_back(x + 1);
  return a;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// ---------------------------------------------------------------------------
// Handlers

json cmd_gen(Context& ctx, const std::string& family, const std::vector<std::string>& params) {
  const auto spec = families::parse_family(family, params, ctx.seed);
  const WeightedGraph g = families::generate(spec);
  std::ostringstream ss;
  io::write_graph(ss, g);
  json r{{"family", families::describe(spec)}, {"n", g.order()}, {"m", g.size()}};
  attach(r, ctx, ss.str());
  return r;
}

json cmd_metric(Context& ctx) {
  const MetricSpace x = shortest_path_metric(load_graph(ctx.inputs.at(0)));
  json r{{"n", x.size()}, {"diameter", x.diameter()}};
  attach(r, ctx, matrix_text(x.matrix()));
  return r;
}

json cmd_embed(Context& ctx, const std::string& method, std::optional<std::size_t> sets_per_scale,
               const std::string& norm_name, double epsilon, std::optional<std::size_t> dim) {
  const std::size_t trials = std::max<std::size_t>(ctx.flags.trials, 1);
  json r{{"method", method}};
  if (method == "frechet") {
    const MetricSpace x = load_metric(ctx.inputs.at(0));
    const PointSet p = frechet_linf_embed(x);
    r["norm"] = "linf";
    r["dimension"] = p.dimension();
    r["report"] = distortion_json(distortion(x, p, Norm::Linf));
    attach(r, ctx, matrix_text(p.coords()));
    return r;
  }

  std::vector<DistortionReport> reports(trials);
  std::vector<std::string> errors(trials);
  std::vector<PointSet> first(1);
  std::size_t dimension = 0;
  if (method == "bourgain") {
    const MetricSpace x = load_metric(ctx.inputs.at(0));
    const Norm norm = parse_norm(norm_name);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
      BourgainParams bp;
      bp.sets_per_scale = sets_per_scale;
      bp.norm = norm;
      bp.seed = derive_seed(ctx.seed, "cli.embed.trial", static_cast<std::uint64_t>(t));
      try {
        const auto emb = bourgain_embed(x, bp);
        reports[static_cast<std::size_t>(t)] = distortion(x, emb.points, norm);
        if (t == 0) first[0] = emb.points;
      } catch (const Error& e) {
        errors[static_cast<std::size_t>(t)] = std::string(e.name());
      }
    }
    r["norm"] = to_string(norm);
  } else if (method == "jl") {
    const PointSet p(io::read_matrix_csv_file(ctx.inputs.at(0)));
    const Matrix src = p.distances(Norm::L2);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
      JlParams jp;
      jp.epsilon = epsilon;
      jp.target_dim_override = dim;
      jp.seed = derive_seed(ctx.seed, "cli.embed.trial", static_cast<std::uint64_t>(t));
      try {
        const PointSet q = jl_project(p, jp);
        reports[static_cast<std::size_t>(t)] = distortion(src, q.distances(Norm::L2));
        if (t == 0) first[0] = q;
      } catch (const Error& e) {
        errors[static_cast<std::size_t>(t)] = std::string(e.name());
      }
    }
    r["norm"] = "l2";
    r["epsilon"] = epsilon;
  } else {
    throw Error(ErrorCode::InvalidParameters, "unknown embedding '" + method + "'");
  }
  if (!errors[0].empty()) throw Error(ErrorCode::CoincidentImages, "trial 0 failed: " + errors[0]);
  dimension = first[0].dimension();
  json per_trial = json::array();
  std::vector<double> values;
  for (std::size_t t = 0; t < trials; ++t) {
    if (!errors[t].empty()) {
      per_trial.push_back({{"trial", t}, {"error", errors[t]}});
      continue;
    }
    per_trial.push_back({{"trial", t}, {"report", distortion_json(reports[t])}});
    values.push_back(reports[t].distortion);
  }
  r["dimension"] = dimension;
  r["report"] = distortion_json(reports[0]);
  if (trials > 1) {
    r["trials"] = per_trial;
    r["max_distortion"] = *std::max_element(values.begin(), values.end());
    r["median_distortion"] = median(values);
  }
  attach(r, ctx, matrix_text(first[0].coords()));
  return r;
}

json cmd_c2_solve(Context& ctx) {
  const MetricSpace x = load_metric(ctx.inputs.at(0));
  C2Options opt;
  opt.rel_tol = ctx.flags.tol.value_or(1e-3);
  opt.seed = ctx.seed;
  const C2Result res = c2_sdp(x, opt);
  json r{{"value", res.value},           {"lower", res.lower},
         {"upper", res.upper},           {"tolerance", res.tolerance},
         {"feasibility_tests", res.feasibility_tests}, {"iterations", res.iterations}};
  if (res.certificate) r["certificate_value"] = certificate_value(*res.certificate, x).value;
  attach(r, ctx, matrix_text(res.embedding.coords()));
  return r;
}

json cmd_c2_certify(Context& ctx, const std::string& cert_path, const std::string& construct) {
  const MetricSpace x = load_metric(ctx.inputs.at(0));
  json r;
  std::optional<DualCertificate> cert;
  if (!cert_path.empty()) {
    cert = DualCertificate(io::read_matrix_csv_file(cert_path));
    r["source"] = cert_path;
  } else if (construct == "hypercube") {
    std::size_t r_dim = 0;
    while ((std::size_t{1} << r_dim) < x.size()) ++r_dim;
    if ((std::size_t{1} << r_dim) != x.size())
      throw Error(ErrorCode::DimensionMismatch, "hypercube certificate needs 2^r points");
    cert = q_hypercube(r_dim);
    r["source"] = "hypercube";
    r["r"] = r_dim;
  } else if (construct == "expander") {
    const auto ec = q_expander(load_graph(ctx.inputs.at(0)));
    cert = ec.certificate;
    r["source"] = "expander";
    r["lambda2"] = ec.lambda2;
    r["gap"] = ec.gap;
    r["min_pair_distance"] = ec.min_pair_distance;
  } else {
    throw Error(ErrorCode::InvalidParameters, "give --cert FILE or --construct hypercube|expander");
  }
  const auto v = certificate_value(*cert, x);
  r["value"] = v.value;
  r["degenerate"] = v.degenerate;
  r["numerator"] = v.numerator;
  r["denominator"] = v.denominator;
  r["min_eigenvalue"] = cert->min_eigenvalue();
  if (!ctx.flags.out.empty()) attach(r, ctx, matrix_text(cert->matrix()));
  return r;
}

json cmd_c2_ramsey(Context& ctx, double t) {
  const MetricSpace x = load_metric(ctx.inputs.at(0));
  const auto res = ramsey_subset(x, t, ctx.flags.tol.value_or(1e-3));
  return {{"t", t}, {"size", res.size}, {"subset", one_based(res.subset)}, {"c2", res.c2}};
}

json cmd_hst_sample(Context& ctx) {
  const MetricSpace x = load_metric(ctx.inputs.at(0));
  const HstTree tree = sample_hst(x, derive_seed(ctx.seed, "cli.hst.sample"));
  double worst = 0.0;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b) worst = std::max(worst, x(a, b) / tree.distance(a, b));
  json r{{"nodes", tree.nodes().size()}, {"levels", tree.depth()},
         {"dominating", worst <= 1.0}, {"max_source_over_tree", worst}};
  attach(r, ctx, serialize_hst(tree));
  return r;
}

json cmd_hst_stretch(Context& ctx) {
  const MetricSpace x = load_metric(ctx.inputs.at(0));
  const auto est = estimate_stretch(x, std::max<std::size_t>(ctx.flags.trials, 1), ctx.seed);
  json r{{"trials", ctx.flags.trials}, {"max_pair_expected_stretch", est.max_pair_expected_stretch}};
  if (!ctx.flags.out.empty()) attach(r, ctx, matrix_text(est.per_pair));
  return r;
}

json flow_json(const std::optional<double>& phi, const CutReport* cut,
               const std::optional<double>& gap) {
  json r{{"phi", phi ? json(*phi) : json(nullptr)},
         {"cut_subset", cut ? one_based(cut->subset) : json(nullptr)},
         {"gamma", cut ? json(cut->gamma) : json(nullptr)},
         {"duality_gap", gap ? json(*gap) : json(nullptr)}};
  if (cut) {
    r["cut_capacity"] = cut->capacity;
    r["cut_demand"] = cut->demand_cut;
  }
  return r;
}

json cmd_flowcut(Context& ctx, const std::string& mode) {
  const FlowInstance inst = read_instance_file(ctx.inputs.at(0));
  BourgainParams bp;
  bp.seed = derive_seed(ctx.seed, "cli.flowcut.round");
  if (mode == "exact") {
    const CutReport cut = sparsest_cut_bruteforce(inst);
    return flow_json(std::nullopt, &cut, std::nullopt);
  }
  const DualMetricResult dm = dual_metric(inst);
  const CutReport cut = round_to_cut(inst, dm.metric, bp);
  if (mode == "round") {
    json r = flow_json(dm.objective, &cut, std::nullopt);
    r["dual_objective"] = dm.objective;
    return r;
  }
  const FlowResult fr = max_concurrent_flow(inst);
  const double gap = std::abs(fr.phi - dm.objective) / std::max(1.0, std::abs(fr.phi));
  json r = flow_json(fr.phi, &cut, gap);
  r["dual_objective"] = dm.objective;
  return r;
}

json cmd_bandwidth(Context& ctx, const std::string& mode, bool oracle) {
  const WeightedGraph g = load_graph(ctx.inputs.at(0));
  json r{{"beta", beta_lower_bound(g)}};
  if (mode == "beta") return r;
  if (mode == "exact") {
    const auto opt = bandwidth_bruteforce(g);
    r["oracle_bw"] = opt.bw;
    r["labeling"] = one_based(opt.labeling.order());
    return r;
  }
  const std::size_t trials = std::max<std::size_t>(ctx.flags.trials, 1);
  std::vector<FeigeResult> results;
  results.reserve(trials);
  std::vector<std::optional<FeigeResult>> slots(trials);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
    BourgainParams bp;
    bp.seed = derive_seed(ctx.seed, "cli.bandwidth.trial", static_cast<std::uint64_t>(t));
    slots[static_cast<std::size_t>(t)] = feige_label(g, bp);
  }
  std::size_t best = 0;
  json per_trial = json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    per_trial.push_back(slots[t]->achieved_bw);
    if (slots[t]->achieved_bw < slots[best]->achieved_bw) best = t;
  }
  r["achieved_bw"] = slots[best]->achieved_bw;
  r["labeling"] = one_based(slots[best]->labeling.order());
  if (trials > 1) r["per_trial_bw"] = per_trial;
  if (oracle) r["oracle_bw"] = bandwidth_bruteforce(g).bw;
  return r;
}

// Scalar fields worth tabulating, in priority order.
const std::vector<std::string> kReportFields = {
    "value", "distortion", "max_distortion", "max_pair_expected_stretch", "phi", "gamma",
    "achieved_bw", "oracle_bw", "beta", "size", "diameter"};

std::string cell(const json& v) {
  if (v.is_number_float()) return io::format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

int cmd_report(const std::vector<std::string>& files, std::ostream& out, const std::string& dest) {
  std::ostringstream table;
  table << "file,subcommand,seed,input_digest,wall_time_s,status";
  for (const auto& f : kReportFields) table << ',' << f;
  table << '\n';
  for (const auto& path : files) {
    const json rec = json::parse(slurp(path));
    const json& res = rec.contains("result") ? rec["result"] : json::object();
    table << path << ',' << cell(rec.value("subcommand", json(""))) << ','
          << cell(rec.value("seed", json(nullptr))) << ',' << cell(rec.value("input_digest", json("")))
          << ',' << cell(rec.value("wall_time_s", json(nullptr))) << ','
          << (rec.contains("error") ? cell(rec["error"]) : std::string("ok"));
    for (const auto& f : kReportFields) {
      table << ',';
      if (res.contains(f)) {
        table << cell(res[f]);
      } else if (res.contains("report") && res["report"].contains(f)) {
        table << cell(res["report"][f]);
      }
    }
    table << '\n';
  }
  if (dest.empty()) {
    out << table.str();
  } else {
    std::ofstream f(dest);
    f << table.str();
  }
  return kOk;
}

void add_common(CLI::App* app, Flags& flags, std::vector<std::string>& inputs, bool input = true) {
  app->add_option("--seed", flags.seed, "64-bit seed (default: $METRIC_FORGE_SEED or random)");
  app->add_option("--trials", flags.trials, "independent trials")->check(CLI::PositiveNumber);
  app->add_option("--tol", flags.tol, "relative tolerance override");
  app->add_option("--out", flags.out, "artifact output path");
  app->add_option("--jobs", flags.jobs, "threads for independent trials")->check(CLI::NonNegativeNumber);
  if (input) app->add_option("input", inputs, "input file")->required()->expected(1);
}

}  // namespace

std::string input_digest(const std::vector<std::string>& paths) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& p : paths) {
    for (unsigned char c : slurp(p)) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  }
  std::ostringstream ss;
  ss << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"metric-forge: embeddings, distortion and cut experiments on finite metrics"};
  app.require_subcommand(1);
  Flags flags;
  std::vector<std::string> inputs;
  std::string subcommand;
  std::function<json(Context&)> handler;

  // gen
  std::string family;
  std::vector<std::string> family_params;
  auto* gen = app.add_subcommand("gen", "generate a graph family member");
  add_common(gen, flags, inputs, false);
  gen->add_option("family", family, "hypercube|complete_binary_tree|path|cycle|star|complete|random_regular")
      ->required();
  gen->add_option("params", family_params, "family parameters");
  gen->callback([&] {
    subcommand = "gen";
    handler = [&](Context& c) { return cmd_gen(c, family, family_params); };
  });

  auto* metric = app.add_subcommand("metric", "shortest-path metric of a graph file");
  add_common(metric, flags, inputs);
  metric->callback([&] {
    subcommand = "metric";
    handler = cmd_metric;
  });

  // embed
  auto* embed = app.add_subcommand("embed", "embed a metric and report distortion");
  embed->require_subcommand(1);
  std::optional<std::size_t> sets_per_scale;
  std::string norm_name = "l2";
  double epsilon = 0.5;
  std::optional<std::size_t> dim;
  for (const std::string method : {"bourgain", "jl", "frechet"}) {
    auto* sub = embed->add_subcommand(method);
    add_common(sub, flags, inputs);
    if (method == "bourgain") {
      sub->add_option("--sets-per-scale", sets_per_scale)->check(CLI::PositiveNumber);
      sub->add_option("--norm", norm_name, "l1 or l2");
    }
    if (method == "jl") {
      sub->add_option("--epsilon", epsilon)->check(CLI::Range(0.0, 1.0));
      sub->add_option("--dim", dim)->check(CLI::PositiveNumber);
    }
    sub->callback([&, method] {
      subcommand = "embed " + method;
      handler = [&, method](Context& c) {
        return cmd_embed(c, method, sets_per_scale, norm_name, epsilon, dim);
      };
    });
  }

  // c2
  auto* c2 = app.add_subcommand("c2", "least Euclidean distortion");
  c2->require_subcommand(1);
  auto* solve = c2->add_subcommand("solve");
  add_common(solve, flags, inputs);
  solve->callback([&] {
    subcommand = "c2 solve";
    handler = cmd_c2_solve;
  });
  std::string cert_path;
  std::string construct;
  auto* certify = c2->add_subcommand("certify");
  add_common(certify, flags, inputs);
  certify->add_option("--cert", cert_path, "certificate CSV");
  certify->add_option("--construct", construct, "hypercube|expander");
  certify->callback([&] {
    subcommand = "c2 certify";
    handler = [&](Context& c) { return cmd_c2_certify(c, cert_path, construct); };
  });
  double t_bound = 1.0;
  auto* ramsey = c2->add_subcommand("ramsey");
  add_common(ramsey, flags, inputs);
  ramsey->add_option("--t", t_bound, "distortion bound")->check(CLI::Range(1.0, 1e300));
  ramsey->callback([&] {
    subcommand = "c2 ramsey";
    handler = [&](Context& c) { return cmd_c2_ramsey(c, t_bound); };
  });

  // hst
  auto* hst = app.add_subcommand("hst", "probabilistic tree embeddings");
  hst->require_subcommand(1);
  auto* sample = hst->add_subcommand("sample");
  add_common(sample, flags, inputs);
  sample->callback([&] {
    subcommand = "hst sample";
    handler = cmd_hst_sample;
  });
  auto* stretch = hst->add_subcommand("stretch");
  add_common(stretch, flags, inputs);
  stretch->callback([&] {
    subcommand = "hst stretch";
    handler = cmd_hst_stretch;
  });

  // flowcut
  auto* flowcut = app.add_subcommand("flowcut", "concurrent flow and sparsest cut");
  flowcut->require_subcommand(1);
  for (const std::string mode : {"solve", "round", "exact"}) {
    auto* sub = flowcut->add_subcommand(mode);
    add_common(sub, flags, inputs);
    sub->callback([&, mode] {
      subcommand = "flowcut " + mode;
      handler = [mode](Context& c) { return cmd_flowcut(c, mode); };
    });
  }

  // bandwidth
  auto* bw = app.add_subcommand("bandwidth", "graph bandwidth");
  bw->require_subcommand(1);
  bool oracle = false;
  for (const std::string mode : {"feige", "exact", "beta"}) {
    auto* sub = bw->add_subcommand(mode);
    add_common(sub, flags, inputs);
    if (mode == "feige") sub->add_flag("--oracle", oracle, "also run the exact oracle (n <= 10)");
    sub->callback([&, mode] {
      subcommand = "bandwidth " + mode;
      handler = [&, mode](Context& c) { return cmd_bandwidth(c, mode, oracle); };
    });
  }

  std::vector<std::string> report_files;
  std::string report_out;
  auto* report = app.add_subcommand("report", "aggregate JSON records into a CSV table");
  report->add_option("records", report_files, "record files")->required();
  report->add_option("--out", report_out, "table output path");
  report->callback([&] { subcommand = "report"; });

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  if (subcommand == "report") {
    try {
      return cmd_report(report_files, out, report_out);
    } catch (const std::exception& e) {
      err << "report failed: " << e.what() << '\n';
      return kComputationError;
    }
  }

  json record{{"schema", kSchema}, {"subcommand", subcommand}};
  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    Context ctx{flags, 0, inputs};
    ctx.seed = resolve_seed(flags.seed);
    record["seed"] = ctx.seed;
    record["input_digest"] = input_digest(inputs);
    if (flags.jobs > 0) omp_set_num_threads(flags.jobs);
    record["result"] = handler(ctx);
  } catch (const Error& e) {
    record["error"] = std::string(e.name());
    record["message"] = e.what();
    if (!e.values().empty()) record["error_values"] = e.values();
    code = kComputationError;
  } catch (const std::exception& e) {
    record["error"] = "InternalError";
    record["message"] = e.what();
    code = kComputationError;
  }
  record["wall_time_s"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << record.dump(2) << '\n';
  return code;
}

}  // namespace mforge::cli
