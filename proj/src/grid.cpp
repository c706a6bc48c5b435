// Copyright 2026 sumkern developers
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

#include "grid.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace sumkern {

void GridConfig::validate() const {
  if (!(step > 0.0)) fail(ErrorCode::Domain, "grid step must be positive");
  if (!(window_halfwidth >= 0.0))
    fail(ErrorCode::Domain, "grid window halfwidth must be nonnegative");
  if (lattice_truncation < 1)
    fail(ErrorCode::Domain, "lattice truncation must be at least 1");
  if (!(tolerance > 0.0)) fail(ErrorCode::Domain, "grid tolerance must be positive");
  const double ratio = window_halfwidth / step;
  if (std::abs(ratio - std::round(ratio)) > 1e-9 * (1.0 + ratio))
    fail(ErrorCode::Domain, "window halfwidth must be an integer multiple of the step");
}

std::size_t GridConfig::count() const {
  return 2 * static_cast<std::size_t>(std::llround(window_halfwidth / step)) + 1;
}

GridFunction GridFunction::on_window(const GridConfig& grid) {
  grid.validate();
  GridFunction g;
  const std::size_t n = grid.count();
  g.xs.resize(n);
  g.values.assign(n, cplx(0.0, 0.0));
  for (std::size_t j = 0; j < n; ++j) g.xs[j] = grid.point(j);
  return g;
}

GridFunction GridFunction::on_unit_interval(std::size_t points) {
  if (points == 0) fail(ErrorCode::Domain, "need at least one sample point");
  GridFunction g;
  g.xs.resize(points);
  g.values.assign(points, cplx(0.0, 0.0));
  for (std::size_t j = 0; j < points; ++j)
    g.xs[j] = static_cast<double>(j) / static_cast<double>(points);
  return g;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

std::string format_double(double v) {
  // std::to_chars is locale-independent, unlike printf-family formatting.
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string GridFunction::to_csv() const {
  std::string out = "# tail_bound=" + format_double(tail_bound) + "\n";
  out += "xi,re,im\n";
  for (std::size_t j = 0; j < xs.size(); ++j) {
    out += format_double(xs[j]);
    out += ',';
    out += format_double(values[j].real());
    out += ',';
    out += format_double(values[j].imag());
    out += '\n';
  }
  return out;
}

}  // namespace sumkern
