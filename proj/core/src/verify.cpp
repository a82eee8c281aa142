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

#include "telegain/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "telegain/errors.hpp"
#include "telegain/qubit.hpp"
#include "telegain/swap.hpp"
#include "telegain/transition.hpp"

namespace telegain {
namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

class Collector {
 public:
  explicit Collector(const VerifyOptions& options) : options_(options) {}

  void add(std::string invariant, double max_error, double tolerance,
           bool exact = false) {
    if (!exact && options_.tolerance) tolerance = *options_.tolerance;
    const bool ok = exact ? max_error == 0.0 : max_error <= tolerance;
    checks_.push_back({std::move(invariant), max_error, tolerance, ok, exact});
  }

  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  const VerifyOptions& options_;
  std::vector<CheckResult> checks_;
};

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double channel_diff(const GaussianChannel& a, const GaussianChannel& b) {
  return std::max(rel_diff(a.tau(), b.tau()), rel_diff(a.gain(), b.gain()));
}

GaussianChannel random_channel(Rng& rng) {
  return {uniform(rng, 0.0, 2.0), uniform(rng, 0.2, 3.0)};
}

// Physical teleportation channel with lambda <= max_lambda.
GaussianChannel random_physical(Rng& rng, double max_lambda) {
  for (;;) {
    const ResourceParams p{uniform(rng, 0.1, 2.0), uniform(rng, 0.0, 0.5)};
    const GaussianChannel ch = teleport_channel(p, uniform(rng, 0.3, 1.8));
    if (ch.lambda() <= max_lambda) return ch;
  }
}

Complex random_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

DualRailInput random_qubit(Rng& rng, bool two_photon) {
  DualRailInput in;
  const Complex a = random_complex(rng);
  const Complex b = random_complex(rng);
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  in.alpha = a / norm;
  in.beta = b / norm;
  in.eta1 = uniform(rng, 0.3, 0.9);
  in.eta2 = two_photon ? uniform(rng, 0.0, 1.0 - in.eta1) : 0.0;
  return in;
}

// Random density operator on the span of the supported dyads.
FockOperator random_supported_state(Rng& rng, int cutoff) {
  const Complex a = random_complex(rng);
  const Complex b = random_complex(rng);
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  const double w_pure = uniform(rng, 0.0, 1.0);
  const double w0 = uniform(rng, 0.0, 1.0);
  const double w2 = uniform(rng, 0.0, 1.0);
  const double total = w_pure + w0 + w2;
  FockOperator rho(cutoff);
  rho(0, 0) = (w_pure * std::norm(a) / (norm * norm) + w0) / total;
  rho(1, 1) = w_pure * std::norm(b) / (norm * norm) / total;
  rho(0, 1) = w_pure * a * std::conj(b) / (norm * norm) / total;
  rho(1, 0) = std::conj(rho(0, 1));
  rho(2, 2) = w2 / total;
  return rho;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Largest |entry| with jx + my != kx + ny.
double off_block_max(const TwoModeOperator& op) {
  double worst = 0.0;
  for (int jx = 0; jx <= op.cutoff_x(); ++jx)
    for (int my = 0; my <= op.cutoff_y(); ++my)
      for (int kx = 0; kx <= op.cutoff_x(); ++kx)
        for (int ny = 0; ny <= op.cutoff_y(); ++ny)
          if (jx + my != kx + ny)
            worst = std::max(worst, std::abs(op(jx, my, kx, ny)));
  return worst;
}

std::vector<CheckResult> channel_suite(const VerifyOptions& o) {
  Collector c(o);
  Rng rng(o.seed);
  double assoc = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto a = random_channel(rng);
    const auto b = random_channel(rng);
    const auto d = random_channel(rng);
    assoc = std::max(assoc, channel_diff(compose(compose(a, b), d),
                                         compose(a, compose(b, d))));
  }
  c.add("composition associativity", assoc, 1e-12);

  double recompose = 0.0;
  double att = 0.0;
  double amp = 0.0;
  for (int i = 0; i < 200; ++i) {
    const GaussianChannel ch = random_physical(rng, 1e9);
    const GainDecomposition dec = decompose(ch);
    GaussianChannel acc = GaussianChannel::identity();
    for (const auto& s : dec.stages) acc = compose(acc, s);
    recompose = std::max(recompose, channel_diff(acc, ch));

    const double r = uniform(rng, 0.2, 3.0);
    const auto gains = canonical_gains(r);
    att = std::max(att, channel_diff(teleport_channel({r, 0.0}, gains.attenuating),
                                     attenuation_channel(gains.attenuating *
                                                         gains.attenuating)));
    amp = std::max(amp, channel_diff(teleport_channel({r, 0.0}, gains.amplifying),
                                     amplification_channel(gains.amplifying *
                                                           gains.amplifying)));
  }
  c.add("decomposition recomposes", recompose, 1e-12);
  c.add("tanh r gain is pure attenuation at l = 0", att, 1e-12);
  c.add("coth r gain is pure amplification at l = 0", amp, 1e-12);
  return c.take();
}

std::vector<CheckResult> transition_suite(const VerifyOptions& o) {
  Collector c(o);
  Rng rng(o.seed + 1);

  double trace_err = 0.0;
  for (const auto& [lam, g] : oracle_channels()) {
    const auto ch = channel_from_lambda(lam, g);
    if (!ch.is_physical()) continue;
    for (int m = 0; m <= 2; ++m) {
      trace_err = std::max(trace_err, std::abs(transition_tail(ch, m, m, 400)));
    }
  }
  double applied_trace = 0.0;
  double min_eig = 0.0;
  for (int i = 0; i < 40; ++i) {
    const GaussianChannel ch = random_physical(rng, 2.5);
    const int cutoff = default_cutoff(ch);
    const FockOperator out =
        apply_channel(ch, random_supported_state(rng, cutoff));
    applied_trace = std::max(applied_trace, std::abs(trace(out) - 1.0));
    min_eig = std::min(min_eig, eigvals_hermitian(out).front());
  }
  c.add("trace preservation (closed-form series)", trace_err, 1e-10);
  c.add("trace preservation (truncated output)", applied_trace, 1e-9);
  c.add("PSD preservation (negative eigenvalue floor)", -min_eig, 1e-10);

  double off_rule = 0.0;
  for (const auto& [lam, g] : oracle_channels()) {
    const auto ch = channel_from_lambda(lam, g);
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n) {
        if (!is_supported_source(m, n)) continue;
        for (int j = 0; j <= 12; ++j)
          for (int k = 0; k <= 12; ++k)
            if (j - k != m - n) {
              off_rule = std::max(
                  off_rule, std::abs(transition_coefficient(ch, m, n, j, k)));
            }
      }
  }
  c.add("selection rule j - k = m - n", off_rule, 0.0, true);
  return c.take();
}

std::vector<CheckResult> oracle_suite(const VerifyOptions& o) {
  Collector c(o);
  double worst = 0.0;
  constexpr std::array<std::array<int, 2>, 5> kSources{
      {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}};
  for (const auto& [lam, g] : oracle_channels()) {
    const auto ch = channel_from_lambda(lam, g);
    NumericTransitionOracle oracle(ch, o.grid);
    for (const auto& [m, n] : kSources)
      for (int j = 0; j <= 6; ++j)
        for (int k = 0; k <= 6; ++k) {
          const double exact = transition_coefficient(ch, m, n, j, k);
          worst = std::max(worst, std::abs(exact - oracle.coefficient(m, n, j, k)));
        }
  }
  c.add("closed form vs phase-space quadrature (12 channels, j,k <= 6)", worst,
        1e-6);

  // grid refinement on one channel
  GridLayout fine = o.grid;
  fine.points = 2 * o.grid.points - 1;
  const auto ch = channel_from_lambda(2.0, 0.9);
  NumericTransitionOracle oracle(ch, fine);
  double refined = 0.0;
  for (const auto& [m, n] : kSources)
    for (int j = 0; j <= 6; ++j) {
      const int k = j - (m - n);
      if (k < 0 || k > 6) continue;
      refined = std::max(refined, std::abs(transition_coefficient(ch, m, n, j, k) -
                                           oracle.coefficient(m, n, j, k)));
    }
  c.add("refined grid agreement", refined, 1e-7);
  return c.take();
}

std::vector<CheckResult> swap_suite(const VerifyOptions& o) {
  Collector c(o);
  Rng rng(o.seed + 3);

  double spectrum = 0.0;
  double orthogonality = 0.0;
  constexpr int kCutoff = 12;
  for (int i = 0; i < 20; ++i) {
    const double eta = uniform(rng, 0.0, 1.0);
    const GaussianChannel ch = random_physical(rng, 6.0);
    const TwoModeOperator pt = partial_transpose_x(swapped_state(eta, ch, kCutoff));
    std::vector<double> analytic;
    for (const auto& b : ppt_blocks(eta, ch, kCutoff - 1)) {
      analytic.push_back(b.lambda_minus);
      analytic.push_back(b.lambda_plus);
    }
    analytic.push_back(0.5 * eta * transition_coefficient(ch, 0, 0, 0, 0));
    analytic.push_back((1.0 - eta) * transition_coefficient(ch, 0, 0, kCutoff, kCutoff) +
                       0.5 * eta * transition_coefficient(ch, 1, 1, kCutoff, kCutoff));
    std::sort(analytic.begin(), analytic.end());
    const auto numeric = eigvals_hermitian(pt);
    for (std::size_t k = 0; k < numeric.size(); ++k)
      spectrum = std::max(spectrum, std::abs(numeric[k] - analytic[k]));

    // Blocks live on {|0,k>, |1,k+1>}; any coupling outside them breaks
    // rho_m rho_n = 0.
    for (int jx = 0; jx <= 1; ++jx)
      for (int my = 0; my <= kCutoff; ++my)
        for (int kx = 0; kx <= 1; ++kx)
          for (int ny = 0; ny <= kCutoff; ++ny)
            if (my - jx != ny - kx)
              orthogonality = std::max(orthogonality, std::abs(pt(jx, my, kx, ny)));
  }
  c.add("analytic blocks vs full partial-transpose spectrum", spectrum, 1e-8);
  c.add("block orthogonality", orthogonality, 1e-12);

  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const double eta = uniform(rng, 0.0, 1.0);
    const ResourceParams p{uniform(rng, 0.05, 2.0), uniform(rng, 0.0, 0.5)};
    const GaussianChannel ch = teleport_channel(p, uniform(rng, 0.2, 2.5));
    if (std::abs(ppt_margin(eta, ch)) < 1e-6) continue;
    double min_minus = 0.0;
    for (const auto& b : ppt_blocks(eta, ch, 12)) min_minus = std::min(min_minus, b.lambda_minus);
    if (ppt_violated(eta, ch) != (min_minus < -1e-12)) ++mismatches;
  }
  c.add("PPT condition vs block eigenvalue sign", mismatches, 0.0, true);

  double increase = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double eta = uniform(rng, 0.0, 1.0);
    const GaussianChannel ch = random_physical(rng, 6.0);
    increase = std::max(increase, log_negativity(eta, ch).value -
                                      initial_log_negativity(eta));
  }
  c.add("swapping does not increase log-negativity", std::max(0.0, increase),
        1e-12);
  return c.take();
}

std::vector<CheckResult> qubit_suite(const VerifyOptions& o) {
  Collector c(o);
  Rng rng(o.seed + 4);

  double commutation = 0.0;
  double block = 0.0;
  for (int i = 0; i < 20; ++i) {
    const DualRailInput in = random_qubit(rng, false);
    const GaussianChannel ch = random_physical(rng, 1.8);
    const int cutoff = default_cutoff(ch);
    const TwoModeOperator fast = teleport_dual_rail(in, ch, cutoff);
    const TwoModeOperator generic = apply_two_mode(ch, ch, build_input(in, cutoff));
    commutation = std::max(commutation, max_abs_diff(fast.matrix(), generic.matrix()));
    block = std::max(block, off_block_max(generic));
  }
  c.add("beam splitter commutes with parallel channels", commutation, 1e-9);
  c.add("output photon-number blocks j + k = m + n", block, 0.0, true);

  double independence = 0.0;
  for (const bool two_photon : {false, true}) {
    const GaussianChannel ch = teleport_channel({1.0, 0.2}, 0.8);
    DualRailInput ref;
    ref.eta1 = 0.69;
    ref.eta2 = two_photon ? 0.06 : 0.0;
    const QubitMetrics base = evaluate_qubit(ref, ch).metrics;
    for (int i = 0; i < 20; ++i) {
      DualRailInput in = random_qubit(rng, false);
      in.eta1 = ref.eta1;
      in.eta2 = ref.eta2;
      const QubitMetrics m = evaluate_qubit(in, ch).metrics;
      independence = std::max({independence, std::abs(m.f_state - base.f_state),
                               std::abs(m.f_qubit - base.f_qubit)});
    }
  }
  c.add("metrics independent of alpha, beta", independence, 1e-10);
  return c.take();
}

using SuiteFn = std::vector<CheckResult> (*)(const VerifyOptions&);

SuiteFn lookup(const std::string& name) {
  if (name == "channel") return channel_suite;
  if (name == "transition") return transition_suite;
  if (name == "oracle") return oracle_suite;
  if (name == "swap") return swap_suite;
  if (name == "qubit") return qubit_suite;
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

double SuiteResult::max_error() const {
  double worst = 0.0;
  for (const auto& c : checks) worst = std::max(worst, c.max_error);
  return worst;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"channel", "transition", "oracle",
                                              "swap", "qubit"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  const SuiteFn fn = lookup(name);
  const auto start = std::chrono::steady_clock::now();
  SuiteResult out{name, fn(options), 0.0};
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start).count();
  return out;
}

std::vector<SuiteResult> run_verification(const std::string& name,
                                          const VerifyOptions& options) {
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (const auto& n : suite_names()) out.push_back(run_suite(n, options));
  } else {
    out.push_back(run_suite(name, options));
  }
  return out;
}

std::vector<std::pair<double, double>> oracle_channels() {
  return {{1.0, 0.3}, {1.0, 0.8}, {1.5, 0.5}, {1.5, 1.2},
          {2.0, 0.9}, {2.5, 1.5}, {3.0, 0.3}, {3.0, 1.7},
          {4.0, 1.0}, {4.5, 2.0}, {5.0, 0.6}, {6.0, 2.0}};
}

GaussianChannel channel_from_lambda(double lambda, double gain) {
  return {std::max(0.0, 0.5 * (lambda / (gain * gain) - 1.0)), gain};
}

}  // namespace telegain
