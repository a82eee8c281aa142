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

#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "telegain/errors.hpp"
#include "telegain/qubit.hpp"
#include "telegain/swap.hpp"

namespace telegain::cli {
namespace {

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

bool wants(const SweepSpec& s, Metric m) {
  return std::find(s.metrics.begin(), s.metrics.end(), m) != s.metrics.end();
}

SweepRecord evaluate_point(const SweepSpec& s, double x) {
  const double r = s.axis == Axis::kSqueezing ? x : s.r;
  const double g = s.axis == Axis::kGain ? x : *s.gain;
  const GaussianChannel ch = teleport_channel({r, s.l}, g);
  SweepRecord rec;
  rec.axis = quantize(x);
  const bool qubit = wants(s, Metric::kFState) || wants(s, Metric::kFQubit);
  if (qubit) {
    DualRailInput in;
    in.alpha = s.alpha;
    in.beta = s.beta;
    in.eta1 = s.eta1.value_or(s.eta);
    in.eta2 = s.eta2;
    QubitMetrics m;
    try {
      m = evaluate_qubit(in, ch).metrics;
    } catch (const DegenerateError&) {
      m.f_state = in.eta2 == 0.0 ? f_state(in, ch) : std::nan("");
      m.f_qubit = std::nan("");
      m.p_qubit = 0.0;
    }
    if (wants(s, Metric::kFState)) rec.f_state = quantize(m.f_state);
    if (wants(s, Metric::kFQubit)) {
      rec.f_qubit = quantize(m.f_qubit);
      rec.p_qubit = quantize(m.p_qubit);
    }
  }
  if (wants(s, Metric::kLogNegativity)) {
    rec.e_ln = quantize(log_negativity(s.eta, ch).value);
  }
  return rec;
}

std::optional<double> parse_field(const std::string& field) {
  if (field.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size()) {
    throw DomainError("malformed number '" + field + "' in sweep file");
  }
  return v;
}

std::optional<double> json_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<double>();
}

}  // namespace

void SweepSpec::validate() const {
  if (metrics.empty()) throw DomainError("no metric requested");
  if (steps < 2) throw DomainError("steps must be >= 2");
  if (!(min < max)) throw DomainError("sweep needs min < max");
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("eta must lie in [0, 1]");
  if (axis == Axis::kGain) {
    if (min < kMinGain || max > kMaxGain) {
      throw DomainError("gain sweep must stay inside [0.001, 10]");
    }
    ResourceParams{r, l}.validate();
  } else {
    if (!gain) throw DomainError("a squeezing sweep needs a fixed --g");
    if (min < 0.0) throw DomainError("squeezing sweep must start at r >= 0");
    ResourceParams{0.0, l}.validate();
  }
  DualRailInput in;
  in.alpha = alpha;
  in.beta = beta;
  in.eta1 = eta1.value_or(eta);
  in.eta2 = eta2;
  in.validate();
}

double quantize(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_value(v).c_str(), nullptr);
}

std::vector<SweepRecord> compute_sweep(const SweepSpec& spec, int threads) {
  spec.validate();
  const int n = spec.steps;
  std::vector<SweepRecord> rows(n);
  const auto point = [&](int i) {
    return i == n - 1 ? spec.max : spec.min + (spec.max - spec.min) * i / (n - 1);
  };
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        rows[i] = evaluate_point(spec, point(i));
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  const int workers = std::clamp(threads, 1, n);
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_sweep(std::ostream& os, const std::vector<SweepRecord>& rows,
                 Format format) {
  if (format == Format::kCsv) {
    os << kCsvHeader << '\n';
    for (const auto& r : rows) {
      os << format_value(r.axis);
      for (const auto& f : {r.f_state, r.f_qubit, r.p_qubit, r.e_ln}) {
        os << ',';
        if (f) os << format_value(*f);
      }
      os << '\n';
    }
    return;
  }
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["g_or_r"] = r.axis;
    const auto put = [&](const char* key, const std::optional<double>& v) {
      j[key] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    put("f_state", r.f_state);
    put("f_qubit", r.f_qubit);
    put("p_qubit", r.p_qubit);
    put("e_ln", r.e_ln);
    os << j.dump() << '\n';
  }
}

void write_sweep_file(const std::string& path,
                      const std::vector<SweepRecord>& rows, Format format) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".partial";
  try {
    {
      std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
      if (!os) throw DomainError("cannot open " + tmp.string() + " for writing");
      write_sweep(os, rows, format);
      os.flush();
      if (!os) throw DomainError("write to " + tmp.string() + " failed");
    }
    std::filesystem::rename(tmp, target);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
}

std::vector<SweepRecord> read_sweep(std::istream& is, Format format) {
  std::vector<SweepRecord> rows;
  std::string line;
  if (format == Format::kCsv) {
    if (!std::getline(is, line) || line != kCsvHeader) {
      throw DomainError("sweep file does not start with the expected header");
    }
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      std::vector<std::string> fields;
      std::stringstream ss(line);
      std::string f;
      while (std::getline(ss, f, ',')) fields.push_back(f);
      if (!line.empty() && line.back() == ',') fields.emplace_back();
      if (fields.size() != 5) {
        throw DomainError("sweep row has " + std::to_string(fields.size()) +
                          " fields, expected 5");
      }
      SweepRecord r;
      const auto axis = parse_field(fields[0]);
      if (!axis) throw DomainError("sweep row without axis value");
      r.axis = *axis;
      r.f_state = parse_field(fields[1]);
      r.f_qubit = parse_field(fields[2]);
      r.p_qubit = parse_field(fields[3]);
      r.e_ln = parse_field(fields[4]);
      rows.push_back(r);
    }
    return rows;
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    SweepRecord r;
    r.axis = j.at("g_or_r").get<double>();
    r.f_state = json_field(j, "f_state");
    r.f_qubit = json_field(j, "f_qubit");
    r.p_qubit = json_field(j, "p_qubit");
    r.e_ln = json_field(j, "e_ln");
    rows.push_back(r);
  }
  return rows;
}

std::vector<SweepRecord> read_sweep_file(const std::string& path, Format format) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DomainError("cannot open " + path);
  return read_sweep(is, format);
}

}  // namespace telegain::cli
