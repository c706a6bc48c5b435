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

#ifndef SUMKERN_QUADRATURE_HPP
#define SUMKERN_QUADRATURE_HPP

#include <functional>

#include "common.hpp"

namespace sumkern {

struct QuadResult {
  cplx value{0.0, 0.0};
  double abs_error = 0.0;  // estimated absolute error of the quadrature
  std::size_t evaluations = 0;
};

// Adaptive Gauss-Kronrod (G7,K15) on a finite interval. Splits the worst
// segment until the summed error estimate drops below abs_tol or the
// segment budget is exhausted; the achieved estimate is reported either way.
QuadResult integrate(const std::function<cplx(double)>& f, double a, double b,
                     double abs_tol, std::size_t max_segments = 4000);

// Real-valued convenience wrapper (integrates Re f, requires Im f == 0).
double integrate_real(const std::function<double(double)>& f, double a,
                      double b, double abs_tol);

}  // namespace sumkern

#endif
