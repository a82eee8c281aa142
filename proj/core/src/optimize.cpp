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

#include "telegain/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "telegain/errors.hpp"
#include "telegain/qubit.hpp"
#include "telegain/swap.hpp"

namespace telegain {
namespace {

double finite_or_lowest(double v) {
  return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
}

struct Scan {
  std::vector<double> x;
  std::vector<double> f;
};

Scan scan(const std::function<double(double)>& f, const Bracket& b, int n) {
  Scan s;
  s.x.resize(n);
  s.f.resize(n);
  for (int i = 0; i < n; ++i) {
    s.x[i] = i == n - 1 ? b.hi : b.lo + (b.hi - b.lo) * i / (n - 1);
    s.f[i] = finite_or_lowest(f(s.x[i]));
  }
  return s;
}

bool has_separated_maxima(const std::vector<double>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<int> peaks;
  for (int i = 0; i < n; ++i) {
    const bool left = i == 0 || v[i] >= v[i - 1];
    const bool right = i == n - 1 || v[i] > v[i + 1];
    if (left && right) peaks.push_back(i);
  }
  return peaks.size() >= 2 && peaks.back() - peaks.front() > 2;
}

std::pair<double, double> golden_section(const std::function<double(double)>& f,
                                         double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = finite_or_lowest(f(c));
  double fd = finite_or_lowest(f(d));
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = finite_or_lowest(f(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = finite_or_lowest(f(d));
    }
  }
  return fc >= fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

DualRailInput eta_model(double eta) {
  DualRailInput in;
  in.eta1 = eta;
  return in;
}

}  // namespace

void Bracket::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("bracket needs finite lo < hi, got [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

Maximum maximize(const std::function<double(double)>& f, const Bracket& bracket,
                 const ScanOptions& options) {
  bracket.validate();
  if (options.coarse_points < 3 || options.dense_points < 3) {
    throw DomainError("scans need at least 3 points");
  }
  Maximum out;
  Scan s = scan(f, bracket, options.coarse_points);
  if (has_separated_maxima(s.f)) {
    s = scan(f, bracket, options.dense_points);
    out.multimodal = true;
  }
  const auto best = static_cast<int>(
      std::max_element(s.f.begin(), s.f.end()) - s.f.begin());
  const int n = static_cast<int>(s.x.size());
  out.x = s.x[best];
  out.value = s.f[best];
  if (best == 0 || best == n - 1) {
    out.at_edge = true;
    return out;
  }
  const auto [x, v] = golden_section(f, s.x[best - 1], s.x[best + 1],
                                     options.x_tol);
  if (v >= out.value) {
    out.x = x;
    out.value = v;
  }
  return out;
}

const char* to_string(Metric metric) {
  switch (metric) {
    case Metric::kFState: return "fstate";
    case Metric::kFQubit: return "fqubit";
    case Metric::kLogNegativity: return "ln";
  }
  return "unknown";
}

double evaluate_metric(Metric metric, double eta, const ResourceParams& p,
                       double gain) {
  const GaussianChannel ch = teleport_channel(p, gain);
  switch (metric) {
    case Metric::kFState:
      return f_state(eta_model(eta), ch);
    case Metric::kFQubit:
      try {
        return f_qubit(eta_model(eta), ch).f_qubit;
      } catch (const DegenerateError&) {
        return 0.0;
      }
    case Metric::kLogNegativity:
      return log_negativity(eta, ch).value;
  }
  throw DomainError("unknown metric");
}

GainOptimum optimize_gain(Metric metric, double eta, const ResourceParams& p,
                          const Bracket& bracket, const ScanOptions& options) {
  p.validate();
  const Maximum best = maximize(
      [&](double g) { return evaluate_metric(metric, eta, p, g); }, bracket,
      options);
  if (best.at_edge) {
    throw BracketError(std::string(to_string(metric)) +
                       " maximum at the edge of the gain bracket [" +
                       std::to_string(bracket.lo) + ", " +
                       std::to_string(bracket.hi) + "]");
  }
  return {best.x, best.value};
}

SqueezingOptimum optimize_squeezing(Metric metric, double eta, double l,
                                    const Bracket& r_bracket,
                                    const Bracket& gain_bracket,
                                    const ScanOptions& options) {
  r_bracket.validate();
  gain_bracket.validate();
  const auto inner = [&](double r) {
    const ResourceParams p{r, l};
    return maximize([&](double g) { return evaluate_metric(metric, eta, p, g); },
                    gain_bracket, options);
  };
  const Maximum outer =
      maximize([&](double r) { return inner(r).value; }, r_bracket, options);
  const Maximum at_opt = inner(outer.x);
  return {outer.x, at_opt.x, at_opt.value, outer.at_edge};
}

}  // namespace telegain
