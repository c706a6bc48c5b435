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

#ifndef SUMKERN_EXTENSION_HPP
#define SUMKERN_EXTENSION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expr.hpp"
#include "grid.hpp"
#include "membership.hpp"
#include "norms.hpp"
#include "rational.hpp"
#include "sequence.hpp"

namespace sumkern {

// Admissible q interval for extending l_p sequences; endpoints are exact
// rationals and Hoelder conjugate of each other, with an open upper end at
// p = 2 (every finite q works).
struct QRange {
  Rational p;
  Rational q_lo;
  std::optional<Rational> q_hi;  // nullopt encodes the open upper end (infinity)

  std::string str() const;  // e.g. "[4/3, 4]" or "[1, inf)"
};

QRange q_range(const Rational& p);

// Fourier coefficients of the 1-periodic extension of a window function
// supported in [1/4, 3/4] (they coincide with hat S at the integers), plus a
// quadratic decay fit for the truncated tail. The fit is justified for C^1
// windows and is flagged as an estimate either way.
struct WindowCoeffs {
  long long radius = 0;
  std::vector<cplx> c;  // index n + radius
  double fit_c2 = 0.0;  // |c(n)| <= fit_c2 / n^2 fitted on the outer half
  cplx at(long long n) const { return c[n + radius]; }
};

WindowCoeffs window_coefficients(const ExprPtr& s, const GridConfig& grid);

// tau_p = (sum |c(n)|^p)^{1/p} including the fitted tail.
double coeff_lp_sum(const WindowCoeffs& wc, double p, double* tail_out = nullptr);

struct ExtensionResult {
  GridFunction w;
  NormCertificate bound;
  std::optional<QRange> range;
  std::vector<std::pair<double, double>> abel;  // (r, sup-grid distance to W)
  std::vector<std::pair<std::string, std::string>> trace;
};

// Piecewise-constant (order 0) or piecewise-linear (order 1) extension.
GridFunction jodeit_piecewise(const SequenceSpec& phi, int order,
                              const GridConfig& grid);

// W_{phi, hat S} for a window S supported in [1/4, 3/4] with absolutely
// summable periodized coefficients; bound tau * sup|phi| with the
// p-dependent constant reported symbolically as 1.
ExtensionResult jodeit_bound(const SequenceSpec& phi, const ExprPtr& s,
                             const GridConfig& grid);

// Abel-regularized extension of phi in l_{p'}: damps phi by r^|n| along the
// schedule, checks the sup-distance to the undamped limit decreases, and
// reports the bound tau_p ||phi||_{p'} with q_range(p).
ExtensionResult lp_extend(const SequenceSpec& phi, const ExprPtr& s,
                          const Rational& p, const std::vector<double>& r_schedule,
                          const GridConfig& grid);

inline std::vector<double> default_r_schedule() { return {0.5, 0.9, 0.99, 0.999}; }

struct ConvolutionReport {
  NormCertificate a_norm;  // l_r
  NormCertificate b_norm;  // l_{r'}
  double bound = 0.0;      // ||a||_r ||b||_{r'}
  QRange range;
  double tail = 0.0;  // truncation slack when inputs are not finite
};

// c = a * b with the Hoelder bound as multiplier-norm witness; exact for
// finitely supported inputs, window-truncated with a recorded tail otherwise.
std::pair<SequenceSpec, ConvolutionReport> convolve_sequences(const SequenceSpec& a,
                                                              const SequenceSpec& b,
                                                              const Rational& r);

// S(4Nx - 2N): maps supp S inside [-N, N] onto [1/4, 3/4].
ExprPtr support_normalize(const ExprPtr& s, int big_n);

struct RescaleResult {
  ExprPtr fn;
  std::optional<MembershipReport> propagated;
};

// Lambda(alpha x) for nonzero integer alpha; summability-kernel membership
// recorded on the input is carried to the output with a provenance note.
RescaleResult rescale(const ExprPtr& lambda, long long alpha,
                      const MembershipReport* note = nullptr);

// Compactly supported S in L^p, phi in l_p, 1 < p < 2: normalizes the
// support, runs the Abel machinery, and reports ||phi||_p ||S||_p with the
// full q range [1, infinity).
ExtensionResult compact_support_lp(const SequenceSpec& phi, const ExprPtr& s,
                                   const Rational& p, const GridConfig& grid);

}  // namespace sumkern

#endif
