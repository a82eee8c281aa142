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

#include "telegain/transition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "telegain/errors.hpp"

namespace telegain {
namespace {

// Every closed form below is written in powers of x = (lambda-1)/(lambda+1)
// so that no negative power of (lambda - 1) is formed; pow(0, 0) == 1 gives
// the attenuation limit at lambda = 1.
struct Geometry {
  double x;
  double s;   // lambda + 1
  double g2;  // g^2
  double a;   // lambda - 2 g^2 + 1
};

Geometry geometry(const GaussianChannel& ch) {
  const double lam = ch.lambda();
  if (lam < 1.0 - 1e-12) {
    throw DomainError("transition coefficients need lambda >= 1, got " +
                      std::to_string(lam));
  }
  const double g2 = ch.gain() * ch.gain();
  return {std::max(0.0, (lam - 1.0) / (lam + 1.0)), lam + 1.0, g2,
          lam - 2.0 * g2 + 1.0};
}

double t00(const Geometry& q, int k) { return 2.0 / q.s * std::pow(q.x, k); }

double t10(const Geometry& q, double g, int k) {
  return 4.0 * g * std::sqrt(k + 1.0) / (q.s * q.s) * std::pow(q.x, k);
}

double t11(const Geometry& q, int k) {
  double v = q.a * std::pow(q.x, k);
  if (k >= 1) v += 4.0 * k * q.g2 * std::pow(q.x, k - 1) / q.s;
  return 2.0 / (q.s * q.s) * v;
}

double t22(const Geometry& q, int k) {
  const double s3 = q.s * q.s * q.s;
  double v = q.a * q.a * std::pow(q.x, k) / s3;
  if (k >= 1) v += 8.0 * k * q.g2 * q.a * std::pow(q.x, k - 1) / (s3 * q.s);
  if (k >= 2) {
    v += 8.0 * k * (k - 1.0) * q.g2 * q.g2 * std::pow(q.x, k - 2) /
         (s3 * q.s * q.s);
  }
  return 2.0 * v;
}

// Coefficient along the band of source (m, n) at band position k = min(j, k).
double band_value(const Geometry& q, double g, int m, int n, int k) {
  if (m == 0 && n == 0) return t00(q, k);
  if (m == 1 && n == 1) return t11(q, k);
  if (m == 2 && n == 2) return t22(q, k);
  return t10(q, g, k);  // (1,0) and (0,1) share the band
}

void require_supported(int m, int n) {
  if (!is_supported_source(m, n)) {
    throw UnsupportedSourceError("no closed-form transition for |" +
                                 std::to_string(m) + "><" + std::to_string(n) +
                                 "|");
  }
}

}  // namespace

bool is_supported_source(int m, int n) {
  return (m == n && m >= 0 && m <= 2) || (m == 1 && n == 0) ||
         (m == 0 && n == 1);
}

double transition_coefficient(const GaussianChannel& ch, int m, int n, int j,
                              int k) {
  require_supported(m, n);
  if (j < 0 || k < 0) throw IndexError("negative output index");
  const Geometry q = geometry(ch);
  if (j - k != m - n) return 0.0;
  return band_value(q, ch.gain(), m, n, std::min(j, k));
}

int default_cutoff(const GaussianChannel& ch) {
  const double lam = std::max(1.0, ch.lambda());
  const double x = (lam - 1.0) / (lam + 1.0);
  if (x <= 0.0) return 8;
  // x^(N+1) < 1e-12, then grow until the polynomial prefactors of the
  // one- and two-photon sources are covered as well
  int n = static_cast<int>(
      std::clamp(std::ceil(std::log(1e-12) / std::log(x)) - 1.0, 8.0, 40.0));
  while (n < 40 && std::max({transition_tail(ch, 0, 0, n),
                             transition_tail(ch, 1, 1, n),
                             transition_tail(ch, 2, 2, n)}) > 1e-12) {
    ++n;
  }
  return n;
}

double transition_tail(const GaussianChannel& ch, int m, int n, int cutoff) {
  require_supported(m, n);
  if (m != n) return 0.0;
  const Geometry q = geometry(ch);
  double sum = 0.0;
  for (int k = 0; k <= cutoff; ++k) sum += band_value(q, ch.gain(), m, n, k);
  return 1.0 - sum;
}

FockOperator transition_operator(const GaussianChannel& ch, int m, int n,
                                 int cutoff) {
  const TransitionTable table(ch, cutoff);
  const double tail = table.tail(m, n);
  if (tail > kTailTolerance) {
    throw CutoffError("cutoff " + std::to_string(cutoff) + " drops weight " +
                      std::to_string(tail) + " of T(|" + std::to_string(m) +
                      "><" + std::to_string(n) + "|)");
  }
  return table.op(m, n);
}

TransitionTable::TransitionTable(const GaussianChannel& ch, int cutoff)
    : channel_(ch), cutoff_(cutoff) {
  if (cutoff < 0) throw IndexError("cutoff must be >= 0");
  const Geometry q = geometry(ch);
  constexpr std::array<std::array<int, 2>, 5> kSources{
      {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}};
  for (const auto& [m, n] : kSources) {
    const int s = slot(m, n);
    const int len = cutoff + 1 - std::abs(m - n);
    auto& band = bands_[s];
    band.resize(std::max(len, 0));
    double sum = 0.0;
    for (int k = 0; k < len; ++k) {
      band[k] = band_value(q, ch.gain(), m, n, k);
      sum += band[k];
    }
    tails_[s] = m == n ? 1.0 - sum : 0.0;
  }
}

int TransitionTable::slot(int m, int n) {
  require_supported(m, n);
  if (m == n) return m == 0 ? 0 : (m == 1 ? 3 : 4);
  return m == 0 ? 1 : 2;
}

double TransitionTable::operator()(int m, int n, int j, int k) const {
  const int s = slot(m, n);
  if (j < 0 || k < 0 || j > cutoff_ || k > cutoff_) {
    throw IndexError("output index beyond table cutoff");
  }
  if (j - k != m - n) return 0.0;
  return bands_[s][std::min(j, k)];
}

double TransitionTable::tail(int m, int n) const { return tails_[slot(m, n)]; }

FockOperator TransitionTable::op(int m, int n) const {
  const auto& band = bands_[slot(m, n)];
  const int d = m - n;
  FockOperator out(cutoff_);
  for (int k = 0; k < static_cast<int>(band.size()); ++k) {
    if (d >= 0) {
      out(k + d, k) = band[k];
    } else {
      out(k, k - d) = band[k];
    }
  }
  return out;
}

namespace {

// Rejects weight on dyads without a closed form.
void collect_check(int m, int n, Complex v) {
  if (std::abs(v) > kSourceTolerance && !is_supported_source(m, n)) {
    throw UnsupportedSourceError(
        "input has weight " + std::to_string(std::abs(v)) + " on |" +
        std::to_string(m) + "><" + std::to_string(n) +
        "|, which has no closed-form transition");
  }
}

// Visits every stored entry (row, col, T) of T(|m><n|).
template <typename Put>
void scatter_band(const TransitionTable& table, int m, int n, Put&& put) {
  const int d = m - n;
  const int len = table.cutoff() + 1 - std::abs(d);
  for (int k = 0; k < len; ++k) {
    const int row = d >= 0 ? k + d : k;
    const int col = d >= 0 ? k : k - d;
    put(row, col, table(m, n, row, col));
  }
}

}  // namespace

FockOperator apply_channel(const GaussianChannel& ch, const FockOperator& rho,
                           std::optional<int> out_cutoff) {
  const int cutoff = out_cutoff.value_or(rho.cutoff());
  const TransitionTable table(ch, cutoff);
  FockOperator out(cutoff);
  double deficit = 0.0;
  for (int m = 0; m < rho.dim(); ++m) {
    for (int n = 0; n < rho.dim(); ++n) {
      const Complex v = rho(m, n);
      collect_check(m, n, v);
      if (v == Complex(0.0) || !is_supported_source(m, n)) continue;
      if (m == n) deficit += std::abs(v) * table.tail(m, n);
      scatter_band(table, m, n, [&](int row, int col, double t) {
        out(row, col) += v * t;
      });
    }
  }
  if (deficit > kTailTolerance) {
    throw CutoffError("output cutoff " + std::to_string(cutoff) +
                      " loses trace " + std::to_string(deficit));
  }
  return out;
}

TwoModeOperator apply_two_mode(const GaussianChannel& ch_x,
                               const GaussianChannel& ch_y,
                               const TwoModeOperator& rho,
                               std::optional<int> out_cutoff_x,
                               std::optional<int> out_cutoff_y) {
  const int cx = out_cutoff_x.value_or(rho.cutoff_x());
  const int cy = out_cutoff_y.value_or(rho.cutoff_y());
  const TransitionTable tx(ch_x, cx);
  const TransitionTable ty(ch_y, cy);
  TwoModeOperator out(cx, cy);
  const int nx = rho.cutoff_x() + 1;
  const int ny = rho.cutoff_y() + 1;
  double deficit = 0.0;
  for (int j = 0; j < nx; ++j) {
    for (int k = 0; k < nx; ++k) {
      for (int m = 0; m < ny; ++m) {
        for (int n = 0; n < ny; ++n) {
          const Complex v = rho(j, m, k, n);
          if (v == Complex(0.0)) continue;
          if (std::abs(v) > kSourceTolerance) {
            collect_check(j, k, v);
            collect_check(m, n, v);
          }
          if (!is_supported_source(j, k) || !is_supported_source(m, n)) {
            continue;
          }
          if (j == k && m == n) {
            const double kept = (1.0 - tx.tail(j, k)) * (1.0 - ty.tail(m, n));
            deficit += std::abs(v) * (1.0 - kept);
          }
          scatter_band(tx, j, k, [&](int a, int b, double t_x) {
            scatter_band(ty, m, n, [&](int c, int d, double t_y) {
              out(a, c, b, d) += v * (t_x * t_y);
            });
          });
        }
      }
    }
  }
  if (deficit > kTailTolerance) {
    throw CutoffError("output cutoffs (" + std::to_string(cx) + ", " +
                      std::to_string(cy) + ") lose trace " +
                      std::to_string(deficit));
  }
  return out;
}

}  // namespace telegain
