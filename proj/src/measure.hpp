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

#ifndef SUMKERN_MEASURE_HPP
#define SUMKERN_MEASURE_HPP

#include <vector>

#include "expr.hpp"
#include "grid.hpp"

namespace sumkern {

struct MembershipReport;  // membership.hpp

// Bounded measure on the torus [0,1): finitely many atoms plus an optional
// absolutely continuous part given by a density on [0,1).
struct TorusMeasure {
  struct Atom {
    double x = 0.0;  // in [0,1)
    cplx weight{0.0, 0.0};
  };
  std::vector<Atom> atoms;
  ExprPtr density;  // may be null

  // Checks atom locations, merges duplicates, drops zero weights.
  void normalize();
  double atom_variation() const;
  // hat nu(n) = sum_j a_j exp(-2 pi i n x_j) + int_0^1 F(x) exp(-2 pi i n x) dx
  cplx fourier_coeff(long long n, double tol) const;
};

// Measure on the line, the output side of the transfer.
struct LineMeasure {
  struct Atom {
    double y = 0.0;
    cplx weight{0.0, 0.0};
  };
  std::vector<Atom> atoms;
  ExprPtr density;          // may be null
  double tail_bound = 0.0;  // bound on atom mass beyond the lattice window
};

// Pushes nu through the kernel: the measure whose Fourier-Stieltjes
// transform is W_{hat nu, Lambda}. Requires Lambda = hat g with g integrable,
// delta_g finite, and delta_Lambda finite. Atom (x_j, a_j) contributes atoms
// a_j g(-(x_j+n)) at x_j + n; a density F contributes the density
// F(frac(x)) g(x). On rejection, fills *rejection when given and throws.
LineMeasure transfer(const TorusMeasure& nu, const ExprPtr& lambda,
                     const GridConfig& grid, MembershipReport* rejection = nullptr);

struct MajorantReport {
  bool radial = false;        // even, real, |values| nonincreasing on [0, L]
  bool integrable = false;    // certified L1
  bool dominates = false;     // |Lambda| <= |Lambda1(|.|)| on the grid
  bool majorant_delta_finite = false;
  double l1_value = 0.0;
  double delta_value = 0.0;
  bool all_pass() const { return radial && integrable && dominates; }
};

// Checks that lambda1 is a decreasing radial integrable envelope of lambda.
MajorantReport radial_majorant_check(const ExprPtr& lambda, const ExprPtr& lambda1,
                                     const GridConfig& grid);

}  // namespace sumkern

#endif
