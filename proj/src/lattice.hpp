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

#ifndef SUMKERN_LATTICE_HPP
#define SUMKERN_LATTICE_HPP

#include "expr.hpp"
#include "grid.hpp"
#include "sequence.hpp"

namespace sumkern {

// Points per unit period used when a supremum over the torus is estimated by
// a grid maximum. The estimate is a lower bound of the essential supremum;
// refining the grid is the caller's control for non-smooth inputs.
inline constexpr std::size_t kPeriodGridPoints = 2048;

// Certified bound on sum_{m >= 1} c (a + m)^-k  (k > 1, a >= 0).
double lattice_side_tail(double c, double k, double a);

struct PeriodizationResult {
  double delta = 0.0;       // max over the period grid of the truncated sum
  double tail_bound = 0.0;  // certified bound on the discarded lattice tail
};

// delta_f: grid estimate of ess sup_x sum_n |f(x+n)|. Requires compact
// support or a decay certificate with exponent > 1.
PeriodizationResult periodization_sup(const ExprPtr& f, const GridConfig& grid);

// Truncated sup of sum_{|n|<=N} |f(x+n)| over the period grid, with no
// certification; used by the divergence probe.
double periodization_partial_max(const ExprPtr& f, int N);

// Samples of sum_n f(x+n) on [0,1).
GridFunction periodize(const ExprPtr& f, const GridConfig& grid);

// W_{phi,Lambda}(xi) = sum_n phi(n) Lambda(xi - n), sampled on the window.
// Exact (tail 0) for finitely supported phi or compactly supported Lambda;
// otherwise truncated with a certified tail from Lambda's decay.
GridFunction extend(const SequenceSpec& phi, const ExprPtr& lambda,
                    const GridConfig& grid);

// Point evaluation of the same series (same truncation rule).
cplx extend_point(const SequenceSpec& phi, const ExprPtr& lambda, double xi,
                  int lattice_truncation);

// phi(n) -> max(0, 1 - |n|/(N+1)) phi(n); finitely supported with radius N.
SequenceSpec fejer_regularize(const SequenceSpec& phi, long long N);

// hat f on the window: closed form when available, else per-point adaptive
// quadrature with target tolerance grid.tolerance.
GridFunction fourier_transform(const ExprPtr& f, const GridConfig& grid);

struct PoissonResult {
  double constant_estimate = 0.0;  // mean of the lattice sums over the grid
  double max_deviation = 0.0;      // max |sum - S(0)| over the grid
  double tail_bound = 0.0;
};

// Lattice sums sum_{|n|<=N} hat S(x+n) over a grid of [0,1), compared with
// S(0). Requires supp S inside [1/4, 3/4] and a continuous S.
PoissonResult poisson_constant(const ExprPtr& s, const GridConfig& grid);

}  // namespace sumkern

#endif
