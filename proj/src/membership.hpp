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

#ifndef SUMKERN_MEMBERSHIP_HPP
#define SUMKERN_MEMBERSHIP_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "expr.hpp"
#include "grid.hpp"

namespace sumkern {

// Verdicts are sound rather than complete: the grammar cannot prove
// non-membership in general, so absent witnesses yield "undecided" with the
// structural reason, and "fails" is reserved for positive divergence
// evidence.
struct MembershipReport {
  std::string space;  // S2 | S1_0 | F_p | M_p_block | S_p_product
  enum class Verdict { Holds, Fails, Undecided } verdict = Verdict::Undecided;
  std::vector<std::pair<std::string, double>> witness;
  std::string reason;
  std::vector<MembershipReport> sub;

  bool holds() const { return verdict == Verdict::Holds; }
};

const char* verdict_name(MembershipReport::Verdict v);

// Bounded with finite periodization sup. Divergence is probed with partial
// sums at N in {16,64,256}: if the increments refuse to shrink by 10x the
// report fails with the partial sums as witness.
MembershipReport classify_s2(const ExprPtr& lambda, const GridConfig& grid);

// Lambda = hat F for an integrable F in the grammar with delta_F finite.
MembershipReport classify_s1(const ExprPtr& lambda, const GridConfig& grid);

struct S1Analysis {
  MembershipReport report;
  ExprPtr witness;      // F with hat F = lambda (null unless holds)
  double delta_f = 0.0;
  double delta_f_tail = 0.0;
};
S1Analysis classify_s1_full(const ExprPtr& lambda, const GridConfig& grid);

// Fiber condition: sup over x in [0,1) of the multiplier norm of the
// periodized modulated fiber. Exact sweeps at p in {1,2}; conv-operator
// lower bounds (marked conditional) otherwise.
MembershipReport fiber_norms(const ExprPtr& lambda, double p, const GridConfig& grid,
                             std::uint64_t seed = 42);

// Sum over unit blocks chi_[k,k+1) Lambda of the block multiplier norms plus
// a decay tail; certifies membership for p = 2.
MembershipReport block_sum_criterion(const ExprPtr& lambda, double p,
                                     const GridConfig& grid, int blocks,
                                     std::uint64_t seed = 42);

struct ProductKernelResult {
  MembershipReport report;
  ExprPtr product;
};

// Product criterion: both factors in the Fourier algebra (structural witness)
// with uniformly bounded fibers puts the product in S_p^0; a finite
// periodization sup on either factor upgrades it to S_p.
ProductKernelResult product_kernel(const ExprPtr& lambda1, const ExprPtr& lambda2,
                                   double p, const GridConfig& grid,
                                   std::uint64_t seed = 42);

}  // namespace sumkern

#endif
