#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "llt/bound_oracle.hpp"
#include "llt/errors.hpp"
#include "llt/llt_builder.hpp"
#include "llt/metric_space.hpp"
#include "llt/random_instances.hpp"
#include "llt/sllt_builder.hpp"
#include "llt/tree_metrics.hpp"
#include "llt/tree_normalize.hpp"

namespace llt::cli {

namespace {

using json = nlohmann::ordered_json;

// All reals in reports go through 12 significant digits so identical runs
// produce identical bytes.
double num12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

struct CheckList {
  json checks = json::array();
  bool all_hold = true;

  void add(const std::string& name, double lhs, double rhs, bool holds) {
    checks.push_back({{"name", name}, {"lhs", num12(lhs)}, {"rhs", num12(rhs)}, {"holds", holds}});
    all_hold = all_hold && holds;
  }
  void add_le(const std::string& name, double lhs, double rhs, double tol = 0.0) {
    add(name, lhs, rhs, lhs <= rhs + tol);
  }
};

json metrics_json(const TreeMetrics& m) {
  json j;
  j["depth"] = m.depth;
  j["hop_diameter"] = m.hop_diameter;
  j["weight"] = num12(m.weight);
  j["mst_weight"] = num12(m.mst_weight);
  j["lightness"] = num12(m.lightness);
  if (m.load)
    j["load"] = *m.load;
  else
    j["load"] = nullptr;
  if (m.max_covering)
    j["max_covering"] = *m.max_covering;
  else
    j["max_covering"] = nullptr;
  j["max_arity"] = m.max_arity;
  j["max_degree"] = m.max_degree;
  return j;
}

json plan_json(const ConstructionPlan& plan) {
  json j;
  j["regime"] = plan.regime_name();
  j["n"] = plan.n;
  j["h_budget"] = plan.h_budget;
  j["h_template"] = plan.h_template;
  j["xi"] = plan.xi;
  j["d"] = plan.d;
  j["template_size"] = plan.template_size;
  j["load_bound"] = plan.load_bound;
  j["clamped"] = plan.clamped;
  return j;
}

struct ReportSink {
  std::string command;
  json inputs;
  json body;
  CheckList checks;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  // Exit status plus the serialized report, to `path` if given else to out.
  int finish(const std::string& path, std::ostream& out) {
    json report;
    report["schema"] = 1;
    report["command"] = command;
    report["inputs"] = inputs;
    for (auto& [key, value] : body.items()) report[key] = value;
    report["bound_checks"] = checks.checks;
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    report["timing"] = num12(seconds);
    const std::string text = report.dump(2) + "\n";
    if (path.empty()) {
      out << text;
    } else {
      std::ofstream f(path);
      if (!f) throw validation_error("cannot write report file: " + path);
      f << text;
    }
    return checks.all_hold ? 0 : 1;
  }
};

void write_tree_file(const RootedTree& tree, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw validation_error("cannot write tree file: " + path);
  write_tree(f, tree);
}

int iceil_root(int n, int h) {
  // Least c with c^h >= n, exact in integers.
  if (h <= 0) return n;
  int c = 1;
  while (true) {
    std::uint64_t p = 1;
    bool big = false;
    for (int i = 0; i < h && !big; ++i) {
      p *= static_cast<std::uint64_t>(c);
      if (p >= static_cast<std::uint64_t>(n)) big = true;
    }
    if (big || p >= static_cast<std::uint64_t>(n)) return c;
    ++c;
  }
}

int oracle_cap(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("LLT_ORACLE_CAP")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_build(const std::string& input, int h, int root1, const std::string& out_path,
              const std::string& report_path, std::ostream& out, std::ostream& err) {
  const MetricSpace m = load_metric_file(input);
  ReportSink sink;
  sink.command = "build";
  sink.inputs = {{"input", input}, {"h", h}, {"root", root1}};

  LltResult result = build_llt(m, h, root1 - 1);
  if (result.plan.clamped)
    err << "llt: depth budget " << h << " exceeds any simple path; using the path (depth "
        << m.size() - 1 << ")\n";
  const TreeMetrics tm =
      measure(result.tree, m, MeasureOptions{.order = &result.order, .mst_weight = std::nullopt});

  sink.body["plan"] = plan_json(result.plan);
  sink.body["metrics"] = metrics_json(tm);

  auto& checks = sink.checks;
  checks.add("spanning", result.tree.size(), m.size(), result.tree.size() == m.size());
  checks.add_le("depth-within-budget", tm.depth, std::min(h, m.size() - 1));
  checks.add_le("load-within-plan", tm.load.value_or(0), result.plan.load_bound);
  checks.add_le("lightness-at-most-twice-load", tm.lightness, 2.0 * tm.load.value_or(0), 1e-9);
  checks.add_le("order-weight-at-most-twice-mst", result.order.total_weight(),
                2.0 * tm.mst_weight, 1e-9);
  switch (result.plan.regime) {
    case Regime::low:
      checks.add_le("arity-within-root-degree-cap", tm.max_arity,
                    iceil_root(m.size(), result.plan.h_budget));
      break;
    case Regime::mid:
      checks.add_le("balanced-depth-log", tm.depth, result.plan.load_bound);
      checks.add_le("balanced-load-log", tm.load.value_or(0), result.plan.load_bound);
      break;
    case Regime::high:
      checks.add_le("binary-output", tm.max_arity, 2);
      if (result.plan.xi >= 1)
        checks.add("template-size-at-least-choose",
                   static_cast<double>(result.plan.template_size),
                   static_cast<double>(binomial(result.plan.h_template, result.plan.xi)),
                   result.plan.template_size >= binomial(result.plan.h_template, result.plan.xi));
      break;
  }

  write_tree_file(result.tree, out_path);
  return sink.finish(report_path, out);
}

int cmd_sllt(const std::string& input, int h, double theta, int root1,
             const std::string& out_path, const std::string& report_path, std::ostream& out,
             std::ostream& err) {
  const MetricSpace m = load_metric_file(input);
  ReportSink sink;
  sink.command = "sllt";
  sink.inputs = {{"input", input}, {"h", h}, {"theta", num12(theta)}, {"root", root1}};

  LltResult base = build_llt(m, h, root1 - 1);
  if (base.plan.clamped)
    err << "llt: depth budget clamped to the path (depth " << m.size() - 1 << ")\n";
  const int base_depth = base.tree.depth();
  const double base_weight = measure(base.tree, m).weight;
  const int rt = base.tree.root;

  const BreakpointSet bp = breakpoints(base.tree, m, rt, theta);
  const RootedTree shallow = build_sllt(base.tree, m, rt, theta);
  const TreeMetrics tm = measure(shallow, m, MeasureOptions{.order = &base.order});

  sink.body["plan"] = plan_json(base.plan);
  json sj;
  sj["root"] = rt + 1;
  sj["theta"] = num12(theta);
  sj["breakpoints"] = bp.points.size();
  sj["base_depth"] = base_depth;
  sj["base_weight"] = num12(base_weight);
  sink.body["sllt"] = sj;
  sink.body["metrics"] = metrics_json(tm);

  const auto root_dist = shallow.root_distances();
  json ratios = json::array();
  double worst_ratio = 1.0;
  for (int v = 0; v < m.size(); ++v) {
    if (v == rt) continue;
    const double ratio = root_dist[v] / m.dist(rt, v);
    worst_ratio = std::max(worst_ratio, ratio);
    ratios.push_back({{"vertex", v + 1}, {"ratio", num12(ratio)}});
  }
  sink.body["root_distance_ratios"] = ratios;

  auto& checks = sink.checks;
  checks.add("spanning", shallow.size(), m.size(), shallow.size() == m.size());
  if (base_depth >= 1)
    checks.add_le("sllt-depth-at-most-2h-1", tm.depth, 2 * base_depth - 1);
  checks.add_le("sllt-weight-factor", tm.weight, (1.0 + 2.0 / theta) * base_weight, 1e-9);
  checks.add_le("sllt-root-distance-ratio", worst_ratio, 1.0 + 2.0 * theta, 1e-9);
  checks.add_le("breakpoint-chain-at-most-twice-weight", bp.chain_distance_sum,
                2.0 * base_weight, 1e-9);

  write_tree_file(shallow, out_path);
  return sink.finish(report_path, out);
}

int cmd_normalize(const std::string& input, const std::string& metric_path,
                  const std::string& mode, const std::string& out_path,
                  const std::string& report_path, std::ostream& out) {
  const MetricSpace m = load_metric_file(metric_path);
  const RootedTree tree = read_tree_file(input);
  if (tree.size() != m.size())
    throw validation_error("normalize: tree and metric sizes differ");

  ReportSink sink;
  sink.command = "normalize";
  sink.inputs = {{"input", input}, {"metric", metric_path}, {"mode", mode}};
  auto& checks = sink.checks;

  const int h0 = tree.depth();
  const double w0 = measure(tree, m).weight;
  const int n = tree.size();
  RootedTree result;

  if (mode == "4ary") {
    result = four_extension(tree, m);
    const TreeMetrics tm = measure(result, m);
    sink.body["metrics"] = metrics_json(tm);
    checks.add_le("four-ary-arity", tm.max_arity, 4);
    checks.add_le("root-arity", static_cast<int>(result.children[result.root].size()), 2);
    checks.add_le("depth-not-reduced", h0, tm.depth);
    checks.add_le("depth-increase-at-most-log", tm.depth, h0 + std::log2(std::max(2, n)), 1e-9);
    checks.add_le("weight-at-most-3x", tm.weight, 3.0 * w0, 1e-9);
  } else if (mode == "binary") {
    const RootedTree mid = four_extension(tree, m);
    const int h1 = mid.depth();
    const double w1 = measure(mid, m).weight;
    result = bin_extension(mid, m);
    const TreeMetrics tm = measure(result, m);
    sink.body["metrics"] = metrics_json(tm);
    checks.add_le("binary-arity", tm.max_arity, 2);
    checks.add_le("four-ary-depth-increase-at-most-log", h1, h0 + std::log2(std::max(2, n)),
                  1e-9);
    checks.add_le("four-ary-weight-at-most-3x", w1, 3.0 * w0, 1e-9);
    checks.add_le("binary-depth-at-most-4x", tm.depth, std::max(1, 4 * h1));
    checks.add_le("binary-weight-at-most-2x", tm.weight, 2.0 * w1, 1e-9);
    if (h0 >= std::log2(std::max(1, n))) {  // deep input: composite factors apply
      checks.add_le("composite-depth-at-most-8x", tm.depth, 8 * h0);
      checks.add_le("composite-weight-at-most-6x", tm.weight, 6.0 * w0, 1e-9);
    }
  } else if (mode == "deepen") {
    if (m.kind() != MetricKind::line)
      throw validation_error("normalize --mode deepen: only defined for line metrics");
    const int chi0 = covering(tree).max;
    result = deepen(tree);
    const TreeMetrics tm = measure(result, m);
    sink.body["metrics"] = metrics_json(tm);
    checks.add("depth-plus-one", tm.depth, h0 + 1, tm.depth == h0 + 1);
    checks.add_le("covering-not-increased", tm.max_covering.value_or(0), chi0);
  } else {
    throw validation_error("normalize: mode must be 4ary, binary or deepen");
  }

  write_tree_file(result, out_path);
  return sink.finish(report_path, out);
}

int cmd_metrics(const std::string& input, const std::string& metric_path,
                const std::string& report_path, std::ostream& out) {
  const MetricSpace m = load_metric_file(metric_path);
  const RootedTree tree = read_tree_file(input);
  const RootedTree mst = minimum_spanning_tree(m, tree.root);
  const LinearOrder order = hamiltonian_path(m, mst, tree.root);
  const TreeMetrics tm =
      measure(tree, m, MeasureOptions{.order = &order, .mst_weight = mst.weight()});

  ReportSink sink;
  sink.command = "metrics";
  sink.inputs = {{"input", input}, {"metric", metric_path}};
  sink.body["metrics"] = metrics_json(tm);

  auto& checks = sink.checks;
  checks.add_le("depth-le-hop-diameter", tm.depth, tm.hop_diameter);
  checks.add_le("hop-diameter-le-twice-depth", tm.hop_diameter, 2 * tm.depth);
  checks.add("lightness-at-least-one", tm.lightness, 1.0, tm.lightness >= 1.0 - 1e-9);
  if (m.kind() == MetricKind::line) {
    const CoveringProfile cp = covering(tree);
    checks.add("weight-identity-covering", tm.weight,
               static_cast<double>(cp.sum + m.size() - 1),
               tm.weight == static_cast<double>(cp.sum + m.size() - 1));
  }

  out << metrics_to_json(tm) << "\n";
  if (!report_path.empty()) return sink.finish(report_path, out);
  return sink.checks.all_hold ? 0 : 1;
}

int cmd_oracle(int n, int h, const std::string& stat, int cap_flag, std::ostream& out) {
  ReportSink sink;
  sink.command = "oracle";
  sink.inputs = {{"n", n}, {"h", h}, {"stat", stat}};
  auto& checks = sink.checks;
  json body;

  if (stat == "weight" || stat == "covering") {
    if (h < 0 || h >= n) throw validation_error("oracle: h must be in [0, n-1]");
    const int cap = std::max(oracle_cap(cap_flag), 8);
    const ThetaScan scan = scan_theta_trees(n, cap);
    const long long value = stat == "weight" ? scan.min_weight[h]
                                             : static_cast<long long>(scan.min_covering[h]);
    body["value"] = value;
    body["rooted_trees"] = scan.rooted_trees;
    json series = json::array();
    for (int d = 1; d < n; ++d)
      series.push_back(stat == "weight" ? scan.min_weight[d]
                                        : static_cast<long long>(scan.min_covering[d]));
    body["series_by_depth"] = series;
    bool monotone = true;
    for (int d = 2; d < n; ++d) {
      const long long a = stat == "weight" ? scan.min_weight[d - 1]
                                           : static_cast<long long>(scan.min_covering[d - 1]);
      const long long b = stat == "weight" ? scan.min_weight[d]
                                           : static_cast<long long>(scan.min_covering[d]);
      monotone = monotone && b <= a;
    }
    checks.add("series-non-increasing", monotone ? 1 : 0, 1, monotone);
    checks.add("degree-bound-on-all-trees", scan.degree_bound_holds ? 1 : 0, 1,
               scan.degree_bound_holds);
  } else if (stat == "cost") {
    const int cap = std::max(oracle_cap(cap_flag), 12);
    const long long r = exhaustive_min_cost(n, h, cap);
    body["value"] = r;
    const HammingCost hc = min_hamming_cost(n, h);
    body["hamming_lower"] = hc.value;
    checks.add_le("hamming-le-min-cost", static_cast<double>(hc.value), static_cast<double>(r));
  } else if (stat == "hamming") {
    const HammingCost hc = min_hamming_cost(n, h);
    body["value"] = hc.value;
    body["max_full_weight"] = hc.max_full_weight;
    body["extra_words"] = hc.extra_words;
    const long long greedy = greedy_hamming_cost(n, h);
    checks.add("closed-form-equals-greedy", static_cast<double>(hc.value),
               static_cast<double>(greedy), hc.value == greedy);
  } else {
    throw validation_error("oracle: stat must be weight, covering, cost or hamming");
  }

  for (const auto& report : analytic_bounds(n, h)) {
    json bj;
    bj["kind"] = report.kind;
    bj["analytic"] = num12(report.analytic);
    bj["vacuous"] = report.vacuous;
    if (report.exhaustive) bj["exhaustive"] = *report.exhaustive;
    if (report.holds) bj["holds"] = *report.holds;
    body["analytic_bounds"].push_back(bj);
    if (!report.vacuous && report.holds)
      checks.add("bound-" + report.kind, report.analytic,
                 static_cast<double>(*report.exhaustive), *report.holds);
  }

  sink.body["oracle"] = body;
  return sink.finish("", out);
}

int cmd_tradeoff(int n, const std::string& out_path, int cap_flag, std::ostream& out) {
  const MetricSpace m = line_metric(n);
  const int cap = std::max(oracle_cap(cap_flag), 8);
  std::optional<ThetaScan> scan;
  if (n <= cap) scan = scan_theta_trees(n, cap);

  std::ostringstream csv;
  csv << "h,regime,load_bound,load,lightness,depth,cost_lower_midrange,cost_lower_deep,"
         "covering_lower,exhaustive_min_weight\n";
  const double mst_weight = n - 1;
  for (int h = 1; h <= n - 1; ++h) {
    LltResult r = build_llt(m, h);
    const TreeMetrics tm =
        measure(r.tree, m, MeasureOptions{.order = &r.order, .mst_weight = mst_weight});
    csv << h << "," << r.plan.regime_name() << "," << r.plan.load_bound << ","
        << tm.load.value_or(0) << ",";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", num12(tm.lightness));
    csv << buf << "," << tm.depth << ",";
    std::string mid, deep, cov;
    for (const auto& report : analytic_bounds(n, h)) {
      std::snprintf(buf, sizeof buf, "%.12g", num12(report.analytic));
      if (report.kind == "cost-lower-midrange") mid = buf;
      if (report.kind == "cost-lower-deep") deep = buf;
      if (report.kind == "covering-lower") cov = buf;
    }
    csv << mid << "," << deep << "," << cov << ",";
    if (scan && scan->min_weight[h] >= 0) csv << scan->min_weight[h];
    csv << "\n";
  }

  if (out_path.empty() || out_path == "-") {
    out << csv.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw validation_error("cannot write csv file: " + out_path);
    f << csv.str();
  }
  return 0;
}

int cmd_hardgraph(int n, double w, std::ostream& out) {
  ReportSink sink;
  sink.command = "hardgraph";
  sink.inputs = {{"n", n}, {"W", num12(w)}};
  const HardGraphReport report = hard_graph(n, w);
  json body;
  body["mst_weight"] = num12(report.mst_weight);
  body["spanning_trees"] = report.spanning_trees;
  body["min_psi_lambda"] = num12(report.min_psi_lambda);
  body["min_hops_single_star"] = report.min_hops_single_star;
  sink.body["hardgraph"] = body;

  auto& checks = sink.checks;
  checks.add("mst-weight", report.mst_weight, (n - 2) + w, report.mst_weight == (n - 2) + w);
  checks.add("single-star-hops-at-least-n-minus-2", report.min_hops_single_star, n - 2,
             report.min_hops_single_star >= n - 2);
  return sink.finish("", out);
}

// Reduced-scale run of the full property suite; every family of invariants
// the library promises is exercised once.
int cmd_selftest(std::uint64_t seed, std::ostream& out, std::ostream& err) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    err << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };
  Rng rng(seed);

  {
    bool ok = true;
    for (int i = 0; i < 20 && ok; ++i) {
      std::uniform_int_distribution<int> side(4, 40);
      const int n = side(rng);
      const MetricSpace m = i % 2 ? random_matrix_metric(n, rng) : random_euclidean(n, 2, rng);
      const RootedTree mst = minimum_spanning_tree(m);
      const LinearOrder order = hamiltonian_path(m, mst, 0);
      ok = order.total_weight() <= 2 * mst.weight() + 1e-9;
    }
    check("hamiltonian-shortcut-two-mst", ok);
  }
  {
    bool ok = true;
    for (int xi = 1; xi <= 12 && ok; ++xi)
      for (int h = xi - 1; h <= 600 && ok; ++h) {
        if (size_high(xi, h) > 600) break;
        const RootedTree t = build_high_tree(xi, h);
        const MetricSpace m = line_metric(t.size());
        LinearOrder id;
        for (int v = 0; v < t.size(); ++v) id.order.push_back(v);
        const LoadProfile lp = load(t, id);
        ok = t.depth() == h && lp.max == (t.size() == 1 ? 0 : xi) && t.max_arity() <= 2 &&
             size_high(xi, h) >= binomial(h, xi);
      }
    check("high-template-exact-depth-load", ok);
  }
  {
    bool ok = true;
    for (int n = 1; n <= 256 && ok; ++n) {
      const RootedTree t = build_balanced(n);
      LinearOrder id;
      for (int v = 0; v < n; ++v) id.order.push_back(v);
      int lg = 0;
      while ((1 << (lg + 1)) <= n) ++lg;
      ok = t.depth() <= lg && load(t, id).max <= lg;
    }
    check("balanced-depth-load-log", ok);
  }
  {
    bool ok = true;
    for (int d = 2; d <= 5 && ok; ++d)
      for (int h = 0; h <= 5 && ok; ++h) {
        const RootedTree t = build_low_tree(d, h);
        LinearOrder id;
        for (int v = 0; v < t.size(); ++v) id.order.push_back(v);
        ok = static_cast<std::uint64_t>(t.size()) == size_low(d, h) && t.depth() == h &&
             load(t, id).max <= d * h;
      }
    check("low-template-size-depth-load", ok);
  }
  {
    bool ok = true;
    for (int n : {16, 64}) {
      const MetricSpace m = random_euclidean(n, 2, rng);
      const double mst_w = minimum_spanning_tree(m).weight();
      for (int h = 1; h <= n - 1 && ok; ++h) {
        LltResult r = build_llt(m, h);
        const TreeMetrics tm =
            measure(r.tree, m, MeasureOptions{.order = &r.order, .mst_weight = mst_w});
        ok = tm.depth <= h && tm.lightness <= 2.0 * tm.load.value_or(0) + 1e-9 &&
             tm.load.value_or(0) <= r.plan.load_bound;
        if (r.plan.regime == Regime::low)
          ok = ok && tm.max_arity <= iceil_root(n, h);
      }
    }
    check("build-llt-regimes", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
      std::uniform_int_distribution<int> size(2, 40);
      const RootedTree t = random_theta_tree(size(rng), rng);
      const CoveringProfile cp = covering(t);
      ok = t.weight() == static_cast<double>(cp.sum + t.size() - 1);
    }
    check("covering-weight-identity", ok);
  }
  {
    bool ok = true;
    for (double theta : {0.1, 0.5, 1.0}) {
      for (int i = 0; i < 4 && ok; ++i) {
        const int n = 50 + 30 * i;
        const MetricSpace m = random_euclidean(n, 2, rng);
        LltResult r = build_llt(m, std::max(1, n / 8));
        const int h = r.tree.depth();
        const double w = measure(r.tree, m).weight;
        const RootedTree s = build_sllt(r.tree, m, r.tree.root, theta);
        const auto dist = s.root_distances();
        ok = s.depth() <= std::max(1, 2 * h - 1) &&
             measure(s, m).weight <= (1 + 2 / theta) * w + 1e-9;
        for (int v = 0; v < n && ok; ++v)
          if (v != s.root) ok = dist[v] <= (1 + 2 * theta) * m.dist(s.root, v) + 1e-9;
      }
    }
    check("sllt-triple-bound", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 20 && ok; ++i) {
      std::uniform_int_distribution<int> size(2, 100);
      const int n = size(rng);
      const MetricSpace m = random_euclidean(n, 2, rng);
      const RootedTree t = random_spanning_tree(m, rng);
      const int h = t.depth();
      const double w = measure(t, m).weight;
      const RootedTree four = four_extension(t, m);
      const RootedTree two = bin_extension(four, m);
      ok = four.max_arity() <= 4 &&
           static_cast<int>(four.children[four.root].size()) <= 2 &&
           four.depth() <= h + std::log2(std::max(2, n)) + 1e-9 &&
           measure(four, m).weight <= 3 * w + 1e-9 && two.max_arity() <= 2 &&
           two.depth() <= std::max(1, 4 * four.depth()) &&
           measure(two, m).weight <= 2 * measure(four, m).weight + 1e-9;
    }
    check("normalization-bounds", ok);
  }
  {
    bool ok = true;
    for (int n = 3; n <= 6 && ok; ++n) {
      const ThetaScan scan = scan_theta_trees(n);
      for (int h = 2; h < n && ok; ++h)
        ok = scan.min_weight[h] <= scan.min_weight[h - 1] &&
             scan.min_covering[h] <= scan.min_covering[h - 1];
      ok = ok && scan.degree_bound_holds;
    }
    for_each_theta_tree(6, [&](const RootedTree& t) {
      if (!ok || t.depth() > t.size() - 2) return;
      const RootedTree deeper = deepen(t);
      ok = deeper.depth() == t.depth() + 1 && covering(deeper).max <= covering(t).max;
    });
    check("depth-monotonicity", ok);
  }
  {
    bool ok = true;
    for (int n = 1; n <= 9 && ok; ++n)
      enumerate_binary_shapes(n, [&](const BinaryShape& shape) {
        if (!ok) return;
        const BinaryShape adj = right_adjust(shape);
        ok = vocabulary(adj).hamming_cost() == tree_cost(shape).cost_prime;
      });
    for (int h = 0; h <= 6 && ok; ++h)
      for (int n = 1; n <= 20 && ok; ++n) {
        if (static_cast<std::uint64_t>(n) > (std::uint64_t(1) << (h + 1)) - 1) continue;
        ok = min_hamming_cost(n, h).value == greedy_hamming_cost(n, h);
        if (n <= 9 && h <= n - 1)
          ok = ok && min_hamming_cost(n, h).value <= exhaustive_min_cost(n, h);
      }
    check("vocabulary-cost-equivalences", ok);
  }
  {
    bool ok = min_star_covering(32) == 15;
    for (const auto& report : analytic_bounds(32, 1))
      if (!report.vacuous && report.holds) ok = ok && *report.holds;
    for (int n = 4; n <= 10; ++n)
      for (int h = 1; h < n; ++h)
        for (const auto& report : analytic_bounds(n, h))
          if (report.kind.rfind("cost-lower", 0) == 0) ok = ok && report.vacuous;
    check("analytic-bound-sanity", ok);
  }
  {
    double prev = 0;
    bool ok = true;
    for (int n = 4; n <= 7; ++n) {
      const HardGraphReport report = hard_graph(n, 100.0);
      ok = ok && report.min_psi_lambda > prev;
      prev = report.min_psi_lambda;
    }
    check("hard-graph-tradeoff-growth", ok);
  }
  {
    bool ok = true;
    for (int h = 0; h <= 40 && ok; ++h)
      for (int i = 0; i <= h && ok; ++i) ok = hockey_stick_identity(h, i).holds;
    for (int n = 1; n <= 40 && ok; ++n)
      for (int k = 0; k + 1 <= n && ok; ++k) ok = binomial_ratio_identity(n, k).holds;
    for (int n = 0; n <= 40 && ok; ++n)
      for (int k = 0; k <= n / 4 && ok; ++k) ok = binomial_prefix_bound(n, k).holds;
    check("binomial-facts", ok);
  }

  out << (failures == 0 ? "selftest: all checks passed\n"
                        : "selftest: " + std::to_string(failures) + " check(s) failed\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"spanning trees of finite metric spaces with bounded depth, lightness and degree"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // --h is taken by the depth budget
  auto sub = [&](const char* name, const char* desc) {
    auto* s = app.add_subcommand(name, desc);
    s->set_help_flag("--help", "print help");
    return s;
  };

  std::string input, metric_path, mode, out_path = "tree.txt", report_path, stat = "weight";
  std::string csv_path = "-";
  int h = 1, root1 = 1, n = 0, cap = 0;
  double theta = 0.5, big_w = 100.0;
  std::uint64_t seed = 1;

  auto* build = sub("build", "construct a depth-bounded light spanning tree");
  build->add_option("--input", input, "metric file (line/points/matrix)")->required();
  build->add_option("--h", h, "depth budget")->required();
  build->add_option("--root", root1, "start vertex, 1-based");
  build->add_option("--out", out_path, "tree output file");
  build->add_option("--report", report_path, "report file (default: stdout)");

  auto* sllt = sub("sllt", "build a tree that also preserves root distances");
  sllt->add_option("--input", input)->required();
  sllt->add_option("--h", h)->required();
  sllt->add_option("--theta", theta, "root-distance slack parameter (> 0)");
  sllt->add_option("--root", root1);
  sllt->add_option("--out", out_path);
  sllt->add_option("--report", report_path);

  auto* normalize = sub("normalize", "reduce arity or grow depth of a tree");
  normalize->add_option("--input", input, "tree file")->required();
  normalize->add_option("--metric", metric_path, "metric file")->required();
  normalize->add_option("--mode", mode, "4ary | binary | deepen")->required();
  normalize->add_option("--out", out_path);
  normalize->add_option("--report", report_path);

  auto* metrics = sub("metrics", "measure a tree against a metric");
  metrics->add_option("--input", input, "tree file")->required();
  metrics->add_option("--metric", metric_path, "metric file")->required();
  metrics->add_option("--report", report_path);

  auto* oracle = sub("oracle", "exhaustive minima and analytic lower bounds");
  oracle->add_option("--n", n)->required();
  oracle->add_option("--h", h)->required();
  oracle->add_option("--stat", stat, "weight | covering | cost | hamming");
  oracle->add_option("--cap", cap, "enumeration cap (or env LLT_ORACLE_CAP)");

  auto* tradeoff = sub("tradeoff", "depth/lightness table for the line metric");
  tradeoff->add_option("--n", n)->required();
  tradeoff->add_option("--out", csv_path, "csv output file (- for stdout)");
  tradeoff->add_option("--cap", cap);

  auto* hardgraph = sub("hardgraph", "path-plus-expensive-star spanning scan");
  hardgraph->add_option("--n", n)->required();
  hardgraph->add_option("--W", big_w, "star edge weight");

  auto* selftest = sub("selftest", "run the property suite at desk scale");
  selftest->add_option("--seed", seed, "random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "llt: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (build->parsed()) return cmd_build(input, h, root1, out_path, report_path, out, err);
    if (sllt->parsed()) return cmd_sllt(input, h, theta, root1, out_path, report_path, out, err);
    if (normalize->parsed())
      return cmd_normalize(input, metric_path, mode, out_path, report_path, out);
    if (metrics->parsed()) return cmd_metrics(input, metric_path, report_path, out);
    if (oracle->parsed()) return cmd_oracle(n, h, stat, cap, out);
    if (tradeoff->parsed()) return cmd_tradeoff(n, csv_path, cap, out);
    if (hardgraph->parsed()) return cmd_hardgraph(n, big_w, out);
    if (selftest->parsed()) return cmd_selftest(seed, out, err);
  } catch (const std::exception& e) {
    err << "llt: " << e.what() << "\n";
    return 2;
  }
  err << "llt: unknown command\n" << app.help();
  return 2;
}

}  // namespace llt::cli
