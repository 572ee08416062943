#include <cliquepf/cli.hpp>
#include <cliquepf/density.hpp>
#include <cliquepf/errors.hpp>
#include <cliquepf/graph_io.hpp>
#include <cliquepf/oracle.hpp>
#include <cliquepf/taylor.hpp>
#include <cliquepf/zerofree.hpp>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <cmath>
#include <iostream>
#include <optional>

namespace cliquepf::cli {
namespace {

using nlohmann::json;

json approx_json(const ApproxLog& a) {
  json j{{"value", a.value},
         {"additive_bound", a.additive_bound},
         {"lower", a.value - a.additive_bound},
         {"upper", a.value + a.additive_bound},
         {"relative_certificate", a.relative_certificate()}};
  if (a.exact_taylor_sum) j["taylor_sum_exact"] = *a.exact_taylor_sum;
  return j;
}

json rational_json(const Rational& q) { return json{{"exact", q.get_str()}, {"decimal", q.get_d()}}; }

struct Context {
  const RunConfig& cfg;
  std::ostream& err;
  std::optional<Graph> graph;
  GraphFormat format = GraphFormat::edge_list;
  json report;
};

void load_graph(Context& ctx) {
  if (ctx.cfg.input.empty()) throw ParameterError("an input graph file is required");
  ctx.graph = read_graph_file(ctx.cfg.input, &ctx.format);
  ctx.report["input"] = {{"path", ctx.cfg.input},
                         {"format", ctx.format == GraphFormat::dimacs ? "dimacs" : "edge-list"},
                         {"n", ctx.graph->vertex_count()},
                         {"edges", ctx.graph->edge_count()}};
}

AlgorithmParams make_params(const RunConfig& cfg, std::size_t n) {
  std::optional<Rational> gamma;
  if (cfg.gamma) gamma = parse_rational(*cfg.gamma);
  return AlgorithmParams(cfg.m, n, regime_from_string(cfg.regime), gamma);
}

TruncationPlan make_plan(const RunConfig& cfg, const AlgorithmParams& p) {
  const double beta = p.beta().get_d();
  if (cfg.order && cfg.target_eps) throw ParameterError("--order and --target-eps are mutually exclusive");
  if (cfg.order) return TruncationPlan::budgeted(p.m(), beta, *cfg.order);
  return TruncationPlan::rigorous(p.m(), beta, cfg.target_eps.value_or(std::log(1.1)));
}

AnchorSet make_anchor(const RunConfig& cfg, std::size_t n, std::size_t m) {
  std::vector<Vertex> v;
  for (std::size_t a : cfg.anchor) {
    if (a < 1 || a > n) throw ParameterError("anchor vertex " + std::to_string(a) + " outside [1," + std::to_string(n) + "]");
    v.push_back(static_cast<Vertex>(a - 1));
  }
  return AnchorSet(std::move(v), n, m);
}

json anchor_json(const AnchorSet& a) {
  json j = json::array();
  for (Vertex v : a.vertices()) j.push_back(v + 1);
  return j;
}

void record_params(Context& ctx, const AlgorithmParams& p, const TruncationPlan* plan) {
  const RunConfig& c = ctx.cfg;
  json j{{"m", p.m()},
         {"gamma", p.gamma().get_str()},
         {"gamma_decimal", p.gamma().get_d()},
         {"regime", std::string(to_string(p.regime()))},
         {"omega", p.omega().get_str()},
         {"beta", p.beta().get_str()},
         {"beta_decimal", p.beta().get_d()},
         {"mode", c.mode},
         {"workers", c.workers}};
  if (plan) {
    j["order"] = plan->order;
    j["order_selection"] = c.order ? "budgeted" : "rigorous";
    j["target_eps"] = c.order ? json(nullptr) : json(c.target_eps.value_or(std::log(1.1)));
  }
  if (!c.anchor.empty()) j["anchor"] = c.anchor;
  ctx.report["params"] = std::move(j);
}

void cmd_pf(Context& ctx) {
  load_graph(ctx);
  const AlgorithmParams p = make_params(ctx.cfg, ctx.graph->vertex_count());
  const TruncationPlan plan = make_plan(ctx.cfg, p);
  const AnchorSet anchor = make_anchor(ctx.cfg, p.n(), p.m());
  record_params(ctx, p, &plan);
  const WeightMatrix w = weights_from_graph(*ctx.graph, p);
  ctx.err << "pf: m=" << p.m() << " order=" << plan.order << " bound=" << plan.additive_bound << '\n';
  const ApproxLog est = estimate_log_restricted_pf(w, p.m(), plan, scalar_mode_from_string(ctx.cfg.mode), anchor,
                                                   ctx.cfg.workers);
  json r = approx_json(est);
  r["quantity"] = anchor.empty() ? "ln P_m(W)" : "ln P_anchor(W)";
  r["anchor"] = anchor_json(anchor);
  ctx.report["result"] = std::move(r);
}

void cmd_density(Context& ctx) {
  load_graph(ctx);
  const AlgorithmParams p = make_params(ctx.cfg, ctx.graph->vertex_count());
  const TruncationPlan plan = make_plan(ctx.cfg, p);
  record_params(ctx, p, &plan);
  const ApproxLog est = density_functional_estimate(
      *ctx.graph, p, plan, {scalar_mode_from_string(ctx.cfg.mode), ctx.cfg.workers});
  json r = approx_json(est);
  r["quantity"] = "ln Density_m(G)";
  ctx.report["result"] = std::move(r);
}

void cmd_decide(Context& ctx) {
  load_graph(ctx);
  if (!ctx.cfg.sigma || !ctx.cfg.eps) throw ParameterError("decide requires --sigma and --eps");
  const AlgorithmParams p = make_params(ctx.cfg, ctx.graph->vertex_count());
  const TruncationPlan plan = make_plan(ctx.cfg, p);
  record_params(ctx, p, &plan);
  ctx.report["params"]["sigma"] = *ctx.cfg.sigma;
  ctx.report["params"]["eps"] = *ctx.cfg.eps;
  const DensityVerdict v = decide_density(*ctx.graph, p, *ctx.cfg.sigma, *ctx.cfg.eps, plan,
                                          {scalar_mode_from_string(ctx.cfg.mode), ctx.cfg.workers});
  ctx.report["result"] = {{"verdict", std::string(to_string(v.verdict))},
                          {"sigma", v.sigma},
                          {"eps", v.eps},
                          {"log_t_no", v.log_t_no},
                          {"decision_factor", v.decision_factor},
                          {"log_threshold", v.log_t_no + std::log(v.decision_factor)},
                          {"estimate", approx_json(v.estimate)}};
}

void cmd_extract(Context& ctx) {
  load_graph(ctx);
  const AlgorithmParams p = make_params(ctx.cfg, ctx.graph->vertex_count());
  const TruncationPlan plan = make_plan(ctx.cfg, p);
  record_params(ctx, p, &plan);
  const ExtractionResult r =
      extract_dense_subset(*ctx.graph, p, plan, {scalar_mode_from_string(ctx.cfg.mode), ctx.cfg.workers});
  json subset = json::array();
  for (Vertex v : r.subset) subset.push_back(v + 1);
  const std::size_t inside = ctx.graph->edges_within(r.subset);
  Rational density(static_cast<long>(inside), static_cast<long>(p.pair_count()));
  density.canonicalize();
  ctx.report["result"] = {{"subset", subset},
                          {"edges_within", inside},
                          {"density", rational_json(density)},
                          {"certificate", approx_json(r.certificate)}};
}

void cmd_oracle(Context& ctx) {
  load_graph(ctx);
  check_oracle_cap(ctx.graph->vertex_count(), ctx.cfg.cap);
  const AlgorithmParams p = make_params(ctx.cfg, ctx.graph->vertex_count());
  const AnchorSet anchor = make_anchor(ctx.cfg, p.n(), p.m());
  record_params(ctx, p, nullptr);
  ctx.report["params"]["cap"] = ctx.cfg.cap;
  ctx.report["params"]["mode"] = "exact";
  const WeightMatrix w = weights_from_graph(*ctx.graph, p);
  const Rational pf = exact_partition_function(w, p.m(), ctx.cfg.cap);
  const DensityHistogram h = density_histogram(*ctx.graph, p.m(), ctx.cfg.cap);
  json r{{"partition_function", rational_json(pf)},
         {"log_partition_function", log_rational(pf)},
         {"log_density", exact_log_density(*ctx.graph, p, ctx.cfg.cap)},
         {"histogram", h.counts}};
  if (!anchor.empty()) {
    const Rational rpf = exact_restricted_pf(w, p.m(), anchor, ctx.cfg.cap);
    r["anchor"] = anchor_json(anchor);
    r["restricted_partition_function"] = rational_json(rpf);
    r["log_restricted_partition_function"] = log_rational(rpf);
  }
  ctx.report["result"] = std::move(r);
}

void cmd_audit(Context& ctx) {
  std::size_t n = 0;
  if (ctx.cfg.n) {
    n = *ctx.cfg.n;
  } else {
    load_graph(ctx);
    n = ctx.graph->vertex_count();
  }
  check_oracle_cap(n, ctx.cfg.cap);
  const AlgorithmParams p(ctx.cfg.m, n, regime_from_string(ctx.cfg.regime));
  const ZeroFreeConstants c = ZeroFreeConstants::for_regime(p.regime());
  const bool exploratory = ctx.cfg.radius.has_value();
  const double radius = exploratory ? *ctx.cfg.radius : c.radius(p.m());
  ctx.report["params"] = {{"n", n},       {"m", p.m()},         {"regime", std::string(to_string(p.regime()))},
                          {"seed", ctx.cfg.seed}, {"count", ctx.cfg.count}, {"radius", radius},
                          {"exploratory", exploratory}, {"cap", ctx.cfg.cap}, {"workers", ctx.cfg.workers}};
  const auto samples = sample_polydisc(n, radius, ctx.cfg.count, ctx.cfg.seed);
  const AuditResult a = audit_min_modulus(samples, p.m(), ctx.cfg.cap);
  const double scale = binomial(static_cast<long>(n), static_cast<long>(p.m())).get_d();
  json arg = json::array();
  const ComplexWeightMatrix& z = samples[a.argmin];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) arg.push_back({i + 1, j + 1, z(i, j).real(), z(i, j).imag()});
  ctx.report["result"] = {
      {"constants", {{"omega", c.omega}, {"theta", c.theta}, {"lambda", c.lambda}, {"tau", c.tau}}},
      {"min_modulus", a.min_modulus},
      {"binomial", scale},
      {"normalized_min_modulus", a.min_modulus / scale},
      {"argmin", a.argmin},
      {"argmin_sample", arg},
      {"pass", exploratory ? json(nullptr) : json(a.min_modulus > 1e-9 * scale)}};
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Context ctx{config, err, std::nullopt, GraphFormat::edge_list, json::object()};
  ctx.report["command"] = config.subcommand;
  try {
    if (config.format != "json" && config.format != "text") throw ParameterError("--format must be json or text");
    scalar_mode_from_string(config.mode);
    if (config.workers > 0) omp_set_num_threads(config.workers);
    if (config.subcommand == "pf") {
      cmd_pf(ctx);
    } else if (config.subcommand == "density") {
      cmd_density(ctx);
    } else if (config.subcommand == "decide") {
      cmd_decide(ctx);
    } else if (config.subcommand == "extract") {
      cmd_extract(ctx);
    } else if (config.subcommand == "oracle") {
      cmd_oracle(ctx);
    } else if (config.subcommand == "audit") {
      cmd_audit(ctx);
    } else {
      throw ParameterError("unknown subcommand '" + config.subcommand + "'");
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const DecideRefused& e) {
    err << "decide refused: " << e.what() << '\n';
    return kDecideRefused;
  } catch (const Error& e) {
    err << "parameter error: " << e.what() << '\n';
    return kParameterError;
  }
  if (config.format == "json") {
    out << ctx.report.dump(2) << '\n';
  } else {
    flatten(ctx.report, "", out);
  }
  return kOk;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clique partition functions and density detection by Taylor interpolation"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("input", cfg.input, "graph file (edge list or DIMACS)");
    if (needs_input) in->required();
    sub->add_option("--m", cfg.m, "subset size")->required();
    sub->add_option("--gamma", cfg.gamma, "weight scale, rational or decimal (default: regime maximum)");
    sub->add_option("--regime", cfg.regime, "standard | large-gap");
    sub->add_option("--workers", cfg.workers, "OpenMP worker count (0 = default)");
    sub->add_option("--format", cfg.format, "json | text");
  };
  auto taylor = [&](CLI::App* sub) {
    auto* o = sub->add_option("--order", cfg.order, "Taylor order (budgeted mode)");
    auto* t = sub->add_option("--target-eps", cfg.target_eps, "target additive error (rigorous mode, default ln 1.1)");
    o->excludes(t);
    sub->add_option("--mode", cfg.mode, "exact | float");
  };

  auto* pf = app.add_subcommand("pf", "estimate ln P_m(W) with its error certificate");
  common(pf, true);
  taylor(pf);
  pf->add_option("--anchor", cfg.anchor, "restrict to subsets containing these vertices")->delimiter(',');
  auto* density = app.add_subcommand("density", "estimate ln Density_m(G)");
  common(density, true);
  taylor(density);
  auto* decide = app.add_subcommand("decide", "sound dense / not-many-dense decision");
  common(decide, true);
  taylor(decide);
  decide->add_option("--sigma", cfg.sigma, "density threshold")->required();
  decide->add_option("--eps", cfg.eps, "density gap")->required();
  auto* extract = app.add_subcommand("extract", "greedy extraction of a dense m-subset");
  common(extract, true);
  taylor(extract);
  auto* oracle = app.add_subcommand("oracle", "exact values by exhaustive enumeration");
  common(oracle, true);
  oracle->add_option("--anchor", cfg.anchor, "also report P_anchor(W)")->delimiter(',');
  oracle->add_option("--cap", cfg.cap, "largest n accepted");
  auto* audit = app.add_subcommand("audit", "sample the polydisc and report min |P_m(Z)|");
  common(audit, false);
  audit->add_option("--n", cfg.n, "vertex count (instead of an input graph)");
  audit->add_option("--seed", cfg.seed, "sampler seed");
  audit->add_option("--count", cfg.count, "number of samples");
  audit->add_option("--radius", cfg.radius, "exploratory radius (no pass/fail)");
  audit->add_option("--cap", cfg.cap, "largest n accepted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::RequiredError& e) {
    if (argc < 2) {
      err << app.help();
      return kUsage;
    }
    err << "parameter error: " << e.what() << '\n';
    return kParameterError;
  } catch (const CLI::ParseError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kParameterError;
  }
  for (auto* sub : {pf, density, decide, extract, oracle, audit})
    if (sub->parsed()) cfg.subcommand = sub->get_name();
  return run(cfg, out, err);
}

}  // namespace cliquepf::cli
