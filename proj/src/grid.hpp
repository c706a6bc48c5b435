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

#ifndef SUMKERN_GRID_HPP
#define SUMKERN_GRID_HPP

#include <string>
#include <vector>

#include "common.hpp"

namespace sumkern {

// Sampling window [-L, L] with step h, lattice truncation N for integer
// sums, and per-point tolerance eps.
struct GridConfig {
  double window_halfwidth = 8.0;
  double step = 1.0 / 64.0;
  int lattice_truncation = 64;
  double tolerance = 1e-8;

  void validate() const;
  std::size_t count() const;       // 2L/h + 1 points
  double point(std::size_t j) const { return -window_halfwidth + static_cast<double>(j) * step; }
};

// Samples of a function on an explicit axis, with a bound on whatever lattice
// tail was discarded while producing them.
struct GridFunction {
  std::vector<double> xs;
  std::vector<cplx> values;
  double tail_bound = 0.0;

  static GridFunction on_window(const GridConfig& grid);
  static GridFunction on_unit_interval(std::size_t points);

  double max_abs() const;
  std::string to_csv() const;  // header "# tail_bound=..." then xi,re,im rows
};

// Fixed 17-significant-digit formatting used by every serialized number, so
// repeated runs are byte-identical.
std::string format_double(double v);

}  // namespace sumkern

#endif
