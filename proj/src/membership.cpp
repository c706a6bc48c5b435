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

#include "membership.hpp"

#include <algorithm>
#include <cmath>

#include "lattice.hpp"
#include "norms.hpp"
#include "parallel.hpp"

namespace sumkern {

const char* verdict_name(MembershipReport::Verdict v) {
  switch (v) {
    case MembershipReport::Verdict::Holds:
      return "holds";
    case MembershipReport::Verdict::Fails:
      return "fails";
    case MembershipReport::Verdict::Undecided:
      return "undecided";
  }
  return "undecided";
}

MembershipReport classify_s2(const ExprPtr& lambda, const GridConfig& grid) {
  grid.validate();
  MembershipReport rep;
  rep.space = "S2";

  if (!sup_bound_of(*lambda)) {
    rep.reason = "input is not certifiably bounded";
    return rep;
  }

  const bool compact = support_of(*lambda).has_value();
  const auto d = decay_of(*lambda);
  if (compact || (d && d->k > 1.0)) {
    PeriodizationResult per = periodization_sup(lambda, grid);
    rep.verdict = MembershipReport::Verdict::Holds;
    rep.witness.emplace_back("delta", per.delta);
    rep.witness.emplace_back("tail", per.tail_bound);
    // The periodization sup is also the extension-norm constant at p = 2.
    rep.witness.emplace_back("extension_bound", per.delta + per.tail_bound);
    return rep;
  }

  // Divergence probe: partial sums of the periodization at N = 16, 64, 256.
  const double s16 = periodization_partial_max(lambda, 16);
  const double s64 = periodization_partial_max(lambda, 64);
  const double s256 = periodization_partial_max(lambda, 256);
  rep.witness.emplace_back("partial_sum_16", s16);
  rep.witness.emplace_back("partial_sum_64", s64);
  rep.witness.emplace_back("partial_sum_256", s256);
  const double inc1 = s64 - s16;
  const double inc2 = s256 - s64;
  if (inc1 > 10.0 * grid.tolerance && inc2 > 0.1 * inc1) {
    rep.verdict = MembershipReport::Verdict::Fails;
    rep.reason = "partial sums keep growing (increments do not shrink 10x); "
                 "periodization appears divergent";
  } else {
    rep.reason = "no decay certificate; truncated sums look stable but the "
                 "tail cannot be certified";
  }
  return rep;
}

S1Analysis classify_s1_full(const ExprPtr& lambda, const GridConfig& grid) {
  grid.validate();
  S1Analysis out;
  out.report.space = "S1_0";

  auto witness = inverse_ft_witness(lambda);
  if (!witness) {
    out.report.reason = "no inverse-transform witness in the grammar";
    return out;
  }
  auto l1 = l1_bound_of(**witness);
  if (!l1) {
    out.report.reason = "inverse-transform witness exists but is not "
                        "certifiably integrable";
    return out;
  }
  PeriodizationResult per;
  try {
    per = periodization_sup(*witness, grid);
  } catch (const Error& e) {
    out.report.reason = std::string("witness periodization not certifiable: ") + e.what();
    return out;
  }
  out.report.verdict = MembershipReport::Verdict::Holds;
  out.report.witness.emplace_back("delta_F", per.delta);
  out.report.witness.emplace_back("tail", per.tail_bound);
  out.report.witness.emplace_back("witness_l1_bound", *l1);
  // ||W_{phi,Lambda}||_{M_1} <= delta_F ||phi||_{M_1}.
  out.report.witness.emplace_back("p1_extension_bound", per.delta + per.tail_bound);
  out.witness = *witness;
  out.delta_f = per.delta;
  out.delta_f_tail = per.tail_bound;
  return out;
}

MembershipReport classify_s1(const ExprPtr& lambda, const GridConfig& grid) {
  return classify_s1_full(lambda, grid).report;
}

namespace {

struct FiberPlan {
  bool compact = false;
  double lo = 0.0, hi = 0.0;
  double c = 0.0, k = 0.0;
  bool ok = false;
};

FiberPlan fiber_plan(const ExprPtr& f) {
  FiberPlan p;
  if (auto s = support_of(*f)) {
    p.compact = true;
    p.lo = s->lo;
    p.hi = s->hi;
    p.ok = true;
  } else if (auto d = decay_of(*f); d && d->k > 1.0) {
    p.c = d->c;
    p.k = d->k;
    p.ok = true;
  }
  return p;
}

}  // namespace

MembershipReport fiber_norms(const ExprPtr& lambda, double p, const GridConfig& grid,
                             std::uint64_t seed) {
  grid.validate();
  MembershipReport rep;
  rep.space = "F_p";
  rep.witness.emplace_back("p", p);
  const int N = grid.lattice_truncation;

  if (p == 1.0) {
    // Fibers are the sequences {F(x+n)} acting by convolution on l_1; the
    // operator norm is the l_1 norm, so the sup over x is the periodization
    // sup of the witness.
    S1Analysis s1 = classify_s1_full(lambda, grid);
    if (!s1.report.holds())
      fail(ErrorCode::Precondition,
           "fiber_norms at p=1 needs the integrable witness from classify_s1 (" +
               s1.report.reason + ")");
    rep.verdict = MembershipReport::Verdict::Holds;
    rep.witness.emplace_back("fiber_sup", s1.delta_f);
    rep.witness.emplace_back("tail", s1.delta_f_tail);
    return rep;
  }

  if (p == 2.0) {
    const FiberPlan plan = fiber_plan(lambda);
    const ExprPtr lam = resolve_transforms(lambda);
    if (!plan.ok) {
      rep.reason = "fiber sums not certifiable (no compact support or decay > 1)";
      return rep;
    }
    const std::size_t nx = 64;
    const std::size_t nxi = 512;  // aligned sub-grid of the periodization grid
    std::vector<double> per_x(nx, 0.0);
    parallel_for(nx, [&](std::size_t ix) {
      const double x = static_cast<double>(ix) / static_cast<double>(nx);
      double worst = 0.0;
      for (std::size_t j = 0; j < nxi; ++j) {
        const double xi = static_cast<double>(j) / static_cast<double>(nxi);
        cplx acc(0.0, 0.0);
        if (plan.compact) {
          const long long n0 = static_cast<long long>(std::floor(plan.lo - xi)) - 1;
          const long long n1 = static_cast<long long>(std::ceil(plan.hi - xi)) + 1;
          for (long long n = n0; n <= n1; ++n)
            acc += cis(kTwoPi * x * static_cast<double>(n)) *
                   eval(lam, xi + static_cast<double>(n));
        } else {
          for (long long n = -N; n <= N; ++n)
            acc += cis(kTwoPi * x * static_cast<double>(n)) *
                   eval(lam, xi + static_cast<double>(n));
        }
        worst = std::max(worst, std::abs(acc));
      }
      per_x[ix] = worst;
    });
    rep.verdict = MembershipReport::Verdict::Holds;
    rep.witness.emplace_back("fiber_sup", *std::max_element(per_x.begin(), per_x.end()));
    rep.witness.emplace_back("tail", plan.compact
                                         ? 0.0
                                         : lattice_side_tail(plan.c, plan.k, N + 1.0) +
                                               lattice_side_tail(plan.c, plan.k, static_cast<double>(N)));
    return rep;
  }

  if (!(p > 1.0) || std::isinf(p))
    fail(ErrorCode::Domain, "fiber_norms: p must lie in [1, infinity)");

  // General p: only conv-operator lower bounds on the witness fibers.
  S1Analysis s1 = classify_s1_full(lambda, grid);
  if (!s1.report.holds())
    fail(ErrorCode::Precondition,
         "fiber_norms at p outside {1,2} needs the integrable witness from "
         "classify_s1 (" + s1.report.reason + ")");
  const std::size_t nx = 32;
  std::vector<double> per_x(nx, 0.0);
  for (std::size_t ix = 0; ix < nx; ++ix) {
    const double x = static_cast<double>(ix) / static_cast<double>(nx);
    std::vector<cplx> kernel;
    kernel.reserve(2 * N + 1);
    for (long long n = -N; n <= N; ++n)
      kernel.push_back(eval(s1.witness, x + static_cast<double>(n)));
    per_x[ix] = cyclic_conv_lp_lower_bound(kernel, p, seed + ix);
  }
  rep.verdict = MembershipReport::Verdict::Undecided;
  rep.reason = "lower-bound evidence only for p outside {1,2}; verdict is conditional";
  rep.witness.emplace_back("fiber_lower_bound_sup",
                           *std::max_element(per_x.begin(), per_x.end()));
  return rep;
}

MembershipReport block_sum_criterion(const ExprPtr& lambda, double p,
                                     const GridConfig& grid, int blocks,
                                     std::uint64_t seed) {
  grid.validate();
  if (blocks < 1) fail(ErrorCode::Domain, "block_sum_criterion: need at least one block");
  MembershipReport rep;
  rep.space = "M_p_block";
  rep.witness.emplace_back("p", p);

  const auto supp = support_of(*lambda);
  const auto d = decay_of(*lambda);
  if (!supp && (!d || d->k <= 1.0)) {
    rep.reason = "no decay certificate: the block tail cannot be bounded";
    return rep;
  }

  double total = 0.0;
  int counted = 0;
  for (int k = -blocks; k <= blocks; ++k) {
    if (supp && (k + 1.0 < supp->lo || static_cast<double>(k) > supp->hi)) continue;
    double block_norm = 0.0;
    if (p == 2.0) {
      // ess sup over [k, k+1): fine interior grid plus a probe hugging the
      // open right endpoint (one-sided limits count for the essential sup).
      const std::size_t m = 512;
      for (std::size_t j = 0; j < m; ++j) {
        const double xi = k + static_cast<double>(j) / static_cast<double>(m);
        block_norm = std::max(block_norm, std::abs(eval(lambda, xi)));
      }
      block_norm = std::max(block_norm, std::abs(eval(lambda, k + 1.0 - 1e-9)));
    } else {
      GridConfig block_grid = grid;
      block_grid.window_halfwidth = 1.0;
      block_grid.step = 1.0 / 64.0;
      ExprPtr block = product({indicator(k, k + 1.0), lambda});
      ExprPtr centered = translate(block, -(k + 0.5));
      block_norm = mp_norm_lower_bound(centered, p, block_grid, seed).value;
    }
    total += block_norm;
    ++counted;
  }

  double tail = 0.0;
  if (!supp) {
    const int K = blocks;
    tail = lattice_side_tail(d->c, d->k, static_cast<double>(K) + 1.0) +
           lattice_side_tail(d->c, d->k, static_cast<double>(K));
  }

  rep.witness.emplace_back("block_sum", total);
  rep.witness.emplace_back("tail", tail);
  rep.witness.emplace_back("blocks_counted", static_cast<double>(counted));
  if (p == 2.0) {
    rep.verdict = MembershipReport::Verdict::Holds;
  } else {
    rep.verdict = MembershipReport::Verdict::Undecided;
    rep.reason = "block norms are lower bounds for p != 2; sum is evidence only";
  }
  return rep;
}

ProductKernelResult product_kernel(const ExprPtr& lambda1, const ExprPtr& lambda2,
                                   double p, const GridConfig& grid,
                                   std::uint64_t seed) {
  grid.validate();
  ProductKernelResult out;
  out.product = product({lambda1, lambda2});
  MembershipReport& rep = out.report;
  rep.space = "S_p_product";
  rep.witness.emplace_back("p", p);

  const ExprPtr factors[2] = {lambda1, lambda2};
  bool all_algebra = true;
  bool all_fibers = true;
  bool fibers_conditional = false;
  std::string missing;

  for (int i = 0; i < 2; ++i) {
    MembershipReport sub;
    sub.space = std::string("factor") + std::to_string(i + 1);
    auto w = inverse_ft_witness(factors[i]);
    std::optional<double> l1 = w ? l1_bound_of(**w) : std::nullopt;
    if (!w || !l1) {
      all_algebra = false;
      sub.reason = "no certifiably integrable inverse-transform witness "
                   "(Fourier-algebra membership unknown)";
      if (missing.empty())
        missing = "factor " + std::to_string(i + 1) + " lacks a Fourier-algebra witness";
      rep.sub.push_back(std::move(sub));
      continue;
    }
    sub.witness.emplace_back("witness_l1_bound", *l1);
    try {
      MembershipReport fib = fiber_norms(factors[i], p, grid, seed + i);
      if (fib.holds()) {
        for (const auto& kv : fib.witness)
          if (kv.first == "fiber_sup") sub.witness.emplace_back("fiber_sup", kv.second);
        sub.verdict = MembershipReport::Verdict::Holds;
      } else if (!fib.reason.empty() && fib.verdict == MembershipReport::Verdict::Undecided &&
                 !fib.witness.empty()) {
        fibers_conditional = true;
        sub.verdict = MembershipReport::Verdict::Undecided;
        sub.reason = fib.reason;
        for (const auto& kv : fib.witness) sub.witness.push_back(kv);
      } else {
        all_fibers = false;
        sub.reason = fib.reason;
      }
    } catch (const Error& e) {
      all_fibers = false;
      sub.reason = e.what();
    }
    // delta upgrade evidence
    try {
      PeriodizationResult per = periodization_sup(factors[i], grid);
      sub.witness.emplace_back("delta", per.delta + per.tail_bound);
    } catch (const Error&) {
      // no certificate; not required
    }
    rep.sub.push_back(std::move(sub));
  }

  if (!all_algebra || !all_fibers) {
    rep.verdict = MembershipReport::Verdict::Undecided;
    rep.reason = missing.empty() ? "fiber condition could not be established" : missing;
    return out;
  }

  bool delta_finite = false;
  for (const auto& sub : rep.sub)
    for (const auto& kv : sub.witness)
      if (kv.first == "delta") delta_finite = true;

  if (fibers_conditional) {
    rep.verdict = MembershipReport::Verdict::Undecided;
    rep.reason = "conditional: fibers lower-bounded only for p outside {1,2}";
  } else {
    rep.verdict = MembershipReport::Verdict::Holds;
    rep.witness.emplace_back("s_p_zero", 1.0);
    if (delta_finite) rep.witness.emplace_back("s_p_full", 1.0);
  }
  return out;
}

}  // namespace sumkern
