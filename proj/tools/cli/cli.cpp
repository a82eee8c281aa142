// Copyright 2026 The telegain Authors
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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sweep.hpp"
#include "telegain/errors.hpp"
#include "telegain/optimize.hpp"
#include "telegain/swap.hpp"
#include "telegain/transition.hpp"
#include "telegain/verify.hpp"

namespace telegain::cli {
namespace {

void kv(std::ostream& out, const char* key, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  out << key << ": " << buf << '\n';
}

void kv(std::ostream& out, const char* key, const std::string& v) {
  out << key << ": " << v << '\n';
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Metric parse_metric(const std::string& name) {
  if (name == "fstate") return Metric::kFState;
  if (name == "fqubit") return Metric::kFQubit;
  if (name == "ln") return Metric::kLogNegativity;
  throw DomainError("unknown metric '" + name + "' (fstate, fqubit, ln)");
}

struct ChannelArgs {
  double r = 0.0;
  double l = 0.0;
  double g = 1.0;
  double eta_d = 1.0;
};

struct OptimizeArgs {
  std::string metric;
  double eta = 1.0;
  double r = 1.0;
  double l = 0.0;
  bool optimize_r = false;
  double g_min = kGainBracket.lo;
  double g_max = kGainBracket.hi;
  double r_min = kSqueezingBracket.lo;
  double r_max = kSqueezingBracket.hi;
};

struct SwapArgs {
  double eta = 1.0;
  double r = 1.0;
  double l = 0.0;
  std::optional<double> g;
  bool optimize_gain = false;
  int blocks = 6;
  bool numeric = false;
};

struct SweepArgs {
  std::string metric = "fstate";
  std::string axis = "g";
  std::string out;
  std::string format = "csv";
  int threads = 1;
  double alpha_re = 1.0;
  double alpha_im = 0.0;
  double beta_re = 0.0;
  double beta_im = 0.0;
  std::optional<double> eta1;
  std::optional<double> g;
  SweepSpec spec;
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<double> tol;
  std::uint64_t seed = VerifyOptions{}.seed;
  int grid_points = GridLayout{}.points;
  double grid_extent = GridLayout{}.half_extent;
};

int cmd_channel(const ChannelArgs& a, std::ostream& out) {
  ResourceParams p{a.r, a.l};
  double g = a.g;
  if (a.eta_d != 1.0) {
    const FoldedParams f = fold_detector_efficiency(1.0, p, g, a.eta_d);
    p.l = f.loss;
    g = f.gain;
  }
  const GaussianChannel ch = teleport_channel(p, g);
  const GainDecomposition dec = decompose(ch);
  const int cutoff = resolve_cutoff(ch);
  kv(out, "tau", ch.tau());
  kv(out, "g", ch.gain());
  kv(out, "lambda", ch.lambda());
  if (p.r > 0.0) {
    const CanonicalGains cg = canonical_gains(p.r);
    kv(out, "g_att", cg.attenuating);
    kv(out, "g_amp", cg.amplifying);
  } else {
    kv(out, "g_att", 0.0);
    kv(out, "g_amp", "inf");
  }
  kv(out, "regime", to_string(dec.regime));
  kv(out, "thermal_tau", dec.thermal_tau);
  if (a.eta_d != 1.0) kv(out, "loss_effective", p.l);
  kv(out, "cutoff", std::to_string(cutoff));
  return kExitOk;
}

int cmd_optimize(const OptimizeArgs& a, std::ostream& out) {
  const Metric m = parse_metric(a.metric);
  const Bracket gains{a.g_min, a.g_max};
  kv(out, "metric", to_string(m));
  if (a.optimize_r) {
    const SqueezingOptimum opt =
        optimize_squeezing(m, a.eta, a.l, {a.r_min, a.r_max}, gains);
    kv(out, "r_opt", opt.r);
    kv(out, "g_opt", opt.gain);
    kv(out, "value", opt.value);
    kv(out, "at_bracket_edge", yes_no(opt.at_bracket_edge));
    return kExitOk;
  }
  const GainOptimum opt = optimize_gain(m, a.eta, {a.r, a.l}, gains);
  kv(out, "g_opt", opt.gain);
  kv(out, "value", opt.value);
  return kExitOk;
}

int cmd_swap(const SwapArgs& a, std::ostream& out) {
  const ResourceParams p{a.r, a.l};
  p.validate();
  if (!a.g && !a.optimize_gain) {
    throw DomainError("swap needs --g or --optimize-gain");
  }
  if (a.numeric) resolve_cutoff(GaussianChannel::identity());  // validates the override
  double g = a.g.value_or(0.0);
  if (a.optimize_gain) {
    const SwapMetrics best = optimize_gain_ln(a.eta, p);
    kv(out, "g_ln_opt", best.g_ln_opt);
    kv(out, "e_ln_max", best.log_negativity);
    if (std::isnan(best.g_ln_opt)) return kExitOk;
    if (!a.g) g = best.g_ln_opt;
  }
  const GaussianChannel ch = teleport_channel(p, g);
  const LogNegativity ln = log_negativity(a.eta, ch);
  kv(out, "g", g);
  kv(out, "ppt_violated", yes_no(ppt_violated(a.eta, ch)));
  kv(out, "ppt_margin", ppt_margin(a.eta, ch));
  kv(out, "e_ln", ln.value);
  kv(out, "e_ln_initial", initial_log_negativity(a.eta));
  if (ln.truncated) kv(out, "e_ln_truncated", "true");
  if (const auto w = violation_window(a.eta, p)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.6f %.6f", w->lo, w->hi);
    kv(out, "violation_window", buf);
  } else {
    kv(out, "violation_window", "none");
  }
  if (a.numeric) {
    const int cutoff = resolve_cutoff(ch);
    kv(out, "cutoff", std::to_string(cutoff));
    kv(out, "e_ln_numeric", log_negativity_numeric(a.eta, ch, cutoff));
  }
  out << "k a_k b_k c_k lambda_minus lambda_plus\n";
  for (const auto& b : ppt_blocks(a.eta, ch, a.blocks)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d %.9g %.9g %.9g %.9g %.9g\n", b.k, b.a,
                  b.b, b.c, b.lambda_minus, b.lambda_plus);
    out << buf;
  }
  return kExitOk;
}

int cmd_sweep(SweepArgs a, std::ostream& out) {
  SweepSpec& s = a.spec;
  s.metrics.clear();
  std::stringstream ss(a.metric);
  for (std::string name; std::getline(ss, name, ',');) {
    const Metric m = parse_metric(name);
    if (std::find(s.metrics.begin(), s.metrics.end(), m) == s.metrics.end()) {
      s.metrics.push_back(m);
    }
  }
  if (a.axis != "g" && a.axis != "r") throw DomainError("axis must be g or r");
  s.axis = a.axis == "g" ? Axis::kGain : Axis::kSqueezing;
  s.alpha = {a.alpha_re, a.alpha_im};
  s.beta = {a.beta_re, a.beta_im};
  s.eta1 = a.eta1;
  s.gain = a.g;
  if (a.format != "csv" && a.format != "jsonl") {
    throw DomainError("format must be csv or jsonl");
  }
  const Format format = a.format == "csv" ? Format::kCsv : Format::kJsonl;
  if (a.threads < 1) throw DomainError("threads must be >= 1");
  const auto rows = compute_sweep(s, a.threads);
  if (a.out.empty() || a.out == "-") {
    write_sweep(out, rows, format);
  } else {
    write_sweep_file(a.out, rows, format);
    kv(out, "rows", std::to_string(rows.size()));
    kv(out, "path", a.out);
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  VerifyOptions o;
  o.tolerance = a.tol;
  o.seed = a.seed;
  o.grid = {a.grid_extent, a.grid_points};
  o.grid.validate();
  const auto results = run_verification(a.suite, o);
  bool ok = true;
  for (const auto& s : results) {
    char head[160];
    std::snprintf(head, sizeof head, "suite %s: %s max_error=%s (%.2f s)\n",
                  s.suite.c_str(), s.passed() ? "PASS" : "FAIL",
                  sci(s.max_error()).c_str(), s.seconds);
    out << head;
    for (const auto& c : s.checks) {
      out << "  " << (c.passed ? "PASS " : "FAIL ") << c.invariant
          << ": max_error=" << sci(c.max_error)
          << (c.exact ? " (exact)" : " tol=" + sci(c.tolerance)) << '\n';
      if (!c.passed) {
        err << "verification failed: " << s.suite << " / " << c.invariant << '\n';
        ok = false;
      }
    }
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

// Inserts config-file arguments right after the subcommand name so that
// flags given on the command line come later and win.
std::vector<std::string> expand_config(const std::vector<std::string>& args,
                                       CLI::App& app) {
  auto it = std::find_if(args.begin(), args.end(), [](const std::string& s) {
    return s == "--config" || s.rfind("--config=", 0) == 0;
  });
  if (it == args.end()) return args;
  std::string path;
  std::vector<std::string> rest(args.begin(), it);
  if (*it == "--config") {
    if (std::next(it) == args.end()) throw DomainError("--config needs a path");
    path = *std::next(it);
    rest.insert(rest.end(), std::next(it, 2), args.end());
  } else {
    path = it->substr(9);
    rest.insert(rest.end(), std::next(it), args.end());
  }
  if (rest.empty()) throw DomainError("--config must follow a command");
  CLI::App* sub = nullptr;
  try {
    sub = app.get_subcommand(rest.front());
  } catch (const CLI::OptionNotFound&) {
    throw DomainError("--config must follow a command");
  }
  const auto extra = read_config(path);
  for (const auto& e : extra) {
    const std::string name = e.substr(0, e.find('='));
    if (name == "--config" || name == "--help" ||
        sub->get_option_no_throw(name) == nullptr) {
      throw DomainError("unknown key '" + name.substr(2) + "' in " + path);
    }
  }
  rest.insert(std::next(rest.begin()), extra.begin(), extra.end());
  return rest;
}

}  // namespace

std::vector<std::string> read_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw DomainError("cannot open config file " + path);
  std::vector<std::string> out;
  std::string line;
  int lineno = 0;
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError(path + ":" + std::to_string(lineno) +
                        ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw DomainError(path + ":" + std::to_string(lineno) + ": empty key");
    }
    out.push_back("--" + key + "=" + value);
  }
  return out;
}

int resolve_cutoff(const GaussianChannel& ch) {
  const char* env = std::getenv("TELEGAIN_CUTOFF");
  if (env == nullptr || *env == '\0') return default_cutoff(ch);
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 8 || v > 40) {
    throw DomainError(std::string("TELEGAIN_CUTOFF must be an integer in "
                                  "[8, 40], got '") + env + "'");
  }
  return static_cast<int>(v);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Continuous-variable teleportation with tunable feedforward gain"};
  app.name("telegain");
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  const auto add_config = [](CLI::App* sub) {
    // consumed before parsing; declared so it shows up in --help
    sub->add_option("--config", "key = value file; command-line flags win");
  };

  ChannelArgs ca;
  auto* channel = app.add_subcommand("channel", "Channel parameters for (r, l, g)");
  channel->add_option("--r", ca.r, "Squeezing parameter")->check(CLI::NonNegativeNumber);
  channel->add_option("--l", ca.l, "Resource loss")->check(CLI::Range(0.0, 1.0));
  channel->add_option("--g", ca.g, "Feedforward gain")->required();
  channel->add_option("--eta-d", ca.eta_d, "Detector efficiency folded into l and g")
      ->check(CLI::Range(0.0, 1.0));
  add_config(channel);

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Metric values along g or r");
  sweep->add_option("--metric", sa.metric, "Comma-separated: fstate, fqubit, ln");
  sweep->add_option("--axis", sa.axis, "Swept parameter: g or r");
  sweep->add_option("--min", sa.spec.min, "First axis value");
  sweep->add_option("--max", sa.spec.max, "Last axis value");
  sweep->add_option("--steps", sa.spec.steps, "Number of points (>= 2)");
  sweep->add_option("--eta", sa.spec.eta, "Input efficiency");
  sweep->add_option("--eta1", sa.eta1, "Single-photon weight (default --eta)");
  sweep->add_option("--eta2", sa.spec.eta2, "Two-photon weight");
  sweep->add_option("--alpha-re", sa.alpha_re);
  sweep->add_option("--alpha-im", sa.alpha_im);
  sweep->add_option("--beta-re", sa.beta_re);
  sweep->add_option("--beta-im", sa.beta_im);
  sweep->add_option("--r", sa.spec.r, "Squeezing (fixed for a g sweep)");
  sweep->add_option("--l", sa.spec.l, "Resource loss");
  sweep->add_option("--g", sa.g, "Gain (fixed for an r sweep)");
  sweep->add_option("--out", sa.out, "Output path (stdout when omitted)");
  sweep->add_option("--format", sa.format, "csv or jsonl");
  sweep->add_option("--threads", sa.threads, "Worker threads");
  add_config(sweep);

  OptimizeArgs oa;
  auto* optimize = app.add_subcommand("optimize", "Optimal gain (and squeezing)");
  optimize->add_option("--metric", oa.metric, "fstate, fqubit or ln")->required();
  optimize->add_option("--eta", oa.eta, "Input efficiency");
  optimize->add_option("--r", oa.r, "Squeezing (ignored with --optimize-r)");
  optimize->add_option("--l", oa.l, "Resource loss");
  optimize->add_flag("--optimize-r", oa.optimize_r, "Also optimize the squeezing");
  optimize->add_option("--g-min", oa.g_min);
  optimize->add_option("--g-max", oa.g_max);
  optimize->add_option("--r-min", oa.r_min);
  optimize->add_option("--r-max", oa.r_max);
  add_config(optimize);

  SwapArgs wa;
  auto* swap = app.add_subcommand("swap", "Entanglement swapping of a split photon");
  swap->add_option("--eta", wa.eta, "Splitting efficiency");
  swap->add_option("--r", wa.r, "Squeezing");
  swap->add_option("--l", wa.l, "Resource loss");
  swap->add_option("--g", wa.g, "Gain");
  swap->add_flag("--optimize-gain", wa.optimize_gain, "Maximize E_LN over g");
  swap->add_option("--blocks", wa.blocks, "Largest block index in the table")
      ->check(CLI::NonNegativeNumber);
  swap->add_flag("--numeric", wa.numeric, "Also diagonalize the truncated state");
  add_config(swap);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--suite", va.suite, "channel, transition, oracle, swap, qubit or all");
  verify->add_option("--tol", va.tol, "Override every non-exact tolerance");
  verify->add_option("--seed", va.seed, "Seed for randomized checks");
  verify->add_option("--grid-points", va.grid_points, "Phase-space points per axis");
  verify->add_option("--grid-extent", va.grid_extent, "Phase-space half extent");
  add_config(verify);

  try {
    std::vector<std::string> argv = expand_config(args, app);
    std::reverse(argv.begin(), argv.end());
    try {
      app.parse(argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }
    if (channel->parsed()) return cmd_channel(ca, out);
    if (sweep->parsed()) return cmd_sweep(sa, out);
    if (optimize->parsed()) return cmd_optimize(oa, out);
    if (swap->parsed()) return cmd_swap(wa, out);
    if (verify->parsed()) return cmd_verify(va, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace telegain::cli
