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

#include "telegain/swap.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "telegain/errors.hpp"
#include "telegain/transition.hpp"

namespace telegain {
namespace {

constexpr double kSeriesTolerance = 1e-12;
constexpr int kMaxBlocks = 4096;

void require_eta(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw DomainError("eta must lie in [0, 1], got " + std::to_string(eta));
  }
}

PptBlock make_block(double eta, const GaussianChannel& ch, int k) {
  PptBlock blk;
  blk.k = k;
  blk.a = (1.0 - eta) * transition_coefficient(ch, 0, 0, k, k) +
          0.5 * eta * transition_coefficient(ch, 1, 1, k, k);
  blk.b = 0.5 * eta * transition_coefficient(ch, 1, 0, k + 1, k);
  blk.c = 0.5 * eta * transition_coefficient(ch, 0, 0, k + 1, k + 1);
  const double mean = 0.5 * (blk.a + blk.c);
  const double half_gap = std::hypot(0.5 * (blk.a - blk.c), blk.b);
  blk.lambda_plus = mean + half_gap;
  // product form avoids cancellation when lambda_minus is tiny
  blk.lambda_minus = blk.lambda_plus > 0.0
                         ? (blk.a * blk.c - blk.b * blk.b) / blk.lambda_plus
                         : 0.0;
  return blk;
}

}  // namespace

TwoModeOperator initial_swap_state(double eta) {
  require_eta(eta);
  TwoModeOperator rho(1, 1);
  rho(0, 0, 0, 0) = 1.0 - eta;
  rho(0, 1, 0, 1) = 0.5 * eta;
  rho(1, 0, 1, 0) = 0.5 * eta;
  rho(0, 1, 1, 0) = 0.5 * eta;
  rho(1, 0, 0, 1) = 0.5 * eta;
  return rho;
}

TwoModeOperator swapped_state(double eta, const GaussianChannel& ch,
                              int cutoff) {
  require_eta(eta);
  const TransitionTable table(ch, cutoff);
  TwoModeOperator rho(1, cutoff);
  for (int j = 0; j <= cutoff; ++j) {
    for (int k = 0; k <= cutoff; ++k) {
      rho(0, j, 0, k) = (1.0 - eta) * table(0, 0, j, k) + 0.5 * eta * table(1, 1, j, k);
      rho(1, j, 1, k) = 0.5 * eta * table(0, 0, j, k);
      rho(1, j, 0, k) = 0.5 * eta * table(0, 1, j, k);
      rho(0, j, 1, k) = 0.5 * eta * table(1, 0, j, k);
    }
  }
  return rho;
}

std::vector<PptBlock> ppt_blocks(double eta, const GaussianChannel& ch,
                                 int k_max) {
  require_eta(eta);
  if (k_max < 0) throw IndexError("k_max must be >= 0");
  std::vector<PptBlock> blocks;
  blocks.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) blocks.push_back(make_block(eta, ch, k));
  return blocks;
}

double ppt_margin(double eta, const GaussianChannel& ch) {
  require_eta(eta);
  const double g = ch.gain();
  return (3.0 * eta - 2.0) / (2.0 - eta) - (2.0 * ch.tau() - 1.0 / (g * g));
}

bool ppt_violated(double eta, const GaussianChannel& ch) {
  return ppt_margin(eta, ch) > 0.0;
}

bool ppt_violated(double eta, const ResourceParams& p, double gain) {
  return ppt_violated(eta, teleport_channel(p, gain));
}

std::optional<GainWindow> violation_window(double eta, const ResourceParams& p) {
  require_eta(eta);
  p.validate();
  // In u = 1/g the condition reads (S-1) u^2 - 2 D u + (S - c) < 0.
  const SqueezedVariances v = squeezed_variances(p);
  const double s = v.sum();
  const double d = v.difference();
  const double c = (3.0 * eta - 2.0) / (2.0 - eta);
  const double quad = s - 1.0;
  if (quad <= 0.0) return std::nullopt;
  const double disc = d * d - quad * (s - c);
  if (disc <= 0.0) return std::nullopt;
  const double u_hi = (d + std::sqrt(disc)) / quad;
  if (u_hi <= 0.0) return std::nullopt;
  const double u_lo = (s - c) / (quad * u_hi);
  const double hi = u_lo > 0.0 ? 1.0 / u_lo
                               : std::numeric_limits<double>::infinity();
  return GainWindow{1.0 / u_hi, hi};
}

LogNegativity log_negativity(double eta, const GaussianChannel& ch, int k_max) {
  require_eta(eta);
  if (k_max < 0) throw IndexError("k_max must be >= 0");
  const double lam = ch.lambda();
  const double x = std::max(0.0, (lam - 1.0) / (lam + 1.0));

  LogNegativity out;
  double sum = 0.0;
  int next = 0;
  int limit = std::max(k_max, 1);
  for (;;) {
    for (; next <= limit; ++next) {
      const PptBlock blk = make_block(eta, ch, next);
      if (blk.lambda_minus < 0.0) sum -= 2.0 * blk.lambda_minus;
    }
    // 2 |lambda_k^-| <= 2 b_k, and b_{k+1}/b_k <= x sqrt((limit+3)/(limit+2))
    // for every k > limit.
    const double ratio = x * std::sqrt((limit + 3.0) / (limit + 2.0));
    const double b_next = make_block(eta, ch, limit + 1).b;
    out.tail_bound = ratio < 1.0 ? 2.0 * b_next / (1.0 - ratio)
                                 : std::numeric_limits<double>::infinity();
    out.k_max = limit;
    if (out.tail_bound < kSeriesTolerance || limit >= kMaxBlocks) break;
    limit = std::min(2 * limit, kMaxBlocks);
  }
  out.truncated = !(out.tail_bound < kSeriesTolerance);
  out.value = std::log2(1.0 + sum);
  return out;
}

double log_negativity_numeric(double eta, const GaussianChannel& ch,
                              int cutoff) {
  if (cutoff < 1) throw IndexError("cutoff must be >= 1");
  const auto ev = eigvals_hermitian(partial_transpose_x(swapped_state(eta, ch, cutoff)));
  double sum = 0.0;
  for (const double e : ev) sum += std::abs(e) - e;
  return std::log2(1.0 + sum);
}

double initial_log_negativity(double eta) {
  return log_negativity(eta, GaussianChannel::identity()).value;
}

SwapMetrics optimize_gain_ln(double eta, const ResourceParams& p,
                             const Bracket& bracket, const ScanOptions& options) {
  require_eta(eta);
  p.validate();
  const auto f = [&](double g) {
    return log_negativity(eta, teleport_channel(p, g)).value;
  };
  const Maximum best = maximize(f, bracket, options);
  SwapMetrics out;
  if (!(best.value > 0.0)) {
    out.g_ln_opt = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  if (best.at_edge) {
    throw BracketError("log-negativity maximum at the edge of [" +
                       std::to_string(bracket.lo) + ", " +
                       std::to_string(bracket.hi) + "]");
  }
  out.g_ln_opt = best.x;
  out.log_negativity = best.value;
  out.ppt_violated = ppt_violated(eta, p, best.x);
  return out;
}

}  // namespace telegain
