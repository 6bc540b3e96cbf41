// Copyright 2026 The kanjinet Authors
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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "kanjinet/errors.hpp"
#include "kanjinet/metrics.hpp"

namespace kanjinet {
namespace {

struct Point {
  double x = 0.0;  // ln k
  double y = 0.0;  // ln p(k)
};

std::vector<Point> raw_points(const DegreeDistribution& d, std::size_t k_min, std::size_t k_max) {
  std::vector<Point> points;
  for (auto it = d.counts.lower_bound(k_min); it != d.counts.end() && it->first <= k_max; ++it) {
    if (it->second == 0) continue;
    points.push_back({std::log(static_cast<double>(it->first)), std::log(d.fraction(it->first))});
  }
  return points;
}

std::vector<Point> log_binned_points(const DegreeDistribution& d, std::size_t k_min,
                                     std::size_t k_max, double base) {
  std::vector<Point> points;
  for (int i = 0;; ++i) {
    const double lo = static_cast<double>(k_min) * std::pow(base, i);
    const double hi = static_cast<double>(k_min) * std::pow(base, i + 1);
    if (lo > static_cast<double>(k_max)) break;
    const auto first = static_cast<std::size_t>(std::ceil(lo));
    auto last = static_cast<std::size_t>(std::ceil(hi)) - 1;
    if (last > k_max) last = k_max;
    if (first > last) continue;

    std::uint64_t mass = 0;
    for (auto it = d.counts.lower_bound(first); it != d.counts.end() && it->first <= last; ++it) {
      mass += it->second;
    }
    if (mass == 0) continue;
    double log_sum = 0.0;
    for (std::size_t k = first; k <= last; ++k) log_sum += std::log(static_cast<double>(k));
    const auto width = static_cast<double>(last - first + 1);
    const double density = static_cast<double>(mass) / static_cast<double>(d.n_nodes) / width;
    points.push_back({log_sum / width, std::log(density)});
  }
  return points;
}

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

double DegreeDistribution::fraction(std::size_t k) const {
  const auto it = counts.find(k);
  if (it == counts.end() || n_nodes == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(n_nodes);
}

DegreeDistribution degree_distribution(const SimpleGraph& g) {
  DegreeDistribution d;
  d.n_nodes = g.n_nodes();
  for (NodeId v = 0; v < g.n_nodes(); ++v) ++d.counts[g.degree(v)];
  return d;
}

std::string binning_name(const BinningSpec& b) {
  if (b.kind == Binning::raw) return "raw";
  return "log" + format_double(b.base);
}

PowerLawFit fit_power_law(const DegreeDistribution& d, std::size_t k_min, std::size_t k_max,
                          BinningSpec binning) {
  if (k_min < 1) throw DomainError("fit window must start at k >= 1");
  if (k_min >= k_max) throw DomainError("fit window needs k_min < k_max");
  if (binning.kind == Binning::log && !(binning.base > 1.0)) {
    throw DomainError("log-binning base must exceed 1");
  }

  bool any = false;
  for (auto it = d.counts.lower_bound(k_min); it != d.counts.end() && it->first <= k_max; ++it) {
    any = any || it->second > 0;
  }
  if (!any) throw DomainError("fit window contains no nodes");

  const std::vector<Point> points = binning.kind == Binning::raw
                                        ? raw_points(d, k_min, k_max)
                                        : log_binned_points(d, k_min, k_max, binning.base);
  if (points.size() < 3) {
    throw DomainError("fit window has " + std::to_string(points.size()) +
                      " nonempty bins; at least 3 are needed");
  }

  PowerLawFit fit;
  fit.k_min = k_min;
  fit.k_max = k_max;
  fit.binning = binning;
  fit.bins = points.size();
  const bool flat = std::all_of(points.begin(), points.end(),
                                [&](const Point& p) { return p.y == points.front().y; });
  if (flat) {
    fit.r_squared = 1.0;
    return fit;
  }

  const auto n = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const Point& p : points) {
    mean_x += p.x;
    mean_y += p.y;
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const Point& p : points) {
    sxx += (p.x - mean_x) * (p.x - mean_x);
    sxy += (p.x - mean_x) * (p.y - mean_y);
    syy += (p.y - mean_y) * (p.y - mean_y);
  }
  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;
  double ss_res = 0.0;
  for (const Point& p : points) {
    const double r = p.y - (intercept + slope * p.x);
    ss_res += r * r;
  }

  fit.gamma = slope == 0.0 ? 0.0 : -slope;
  fit.stderr_gamma = std::sqrt(ss_res / (n - 2.0) / sxx);
  fit.r_squared = 1.0 - ss_res / syy;
  return fit;
}

void write_degree_csv(std::ostream& out, const DegreeDistribution& d) {
  out << "k,count,fraction\n";
  for (const auto& [k, count] : d.counts) {
    out << k << ',' << count << ',' << format_double(d.fraction(k)) << '\n';
  }
}

DegreeDistribution read_degree_csv(std::istream& in) {
  DegreeDistribution d;
  std::string line;
  std::size_t number = 0;
  if (!std::getline(in, line)) throw ParseError(0, "degree CSV is empty");
  ++number;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "k,count,fraction") throw ParseError(1, "expected header 'k,count,fraction'");

  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos) throw ParseError(number, "expected 3 comma-separated fields");
    std::size_t k = 0;
    std::uint64_t count = 0;
    const char* b = line.data();
    const auto r1 = std::from_chars(b, b + c1, k);
    const auto r2 = std::from_chars(b + c1 + 1, b + c2, count);
    if (r1.ec != std::errc() || r1.ptr != b + c1 || r2.ec != std::errc() || r2.ptr != b + c2) {
      throw ParseError(number, "k and count must be non-negative integers");
    }
    if (!d.counts.emplace(k, count).second) throw ParseError(number, "repeated degree");
    d.n_nodes += count;
  }
  return d;
}

}  // namespace kanjinet
