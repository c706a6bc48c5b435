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

#include "lattice.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"

namespace sumkern {

double lattice_side_tail(double c, double k, double a) {
  // sum_{m>=1} c (a+m)^-k <= c [(a+1)^-k + (a+1)^{1-k}/(k-1)]
  if (!(k > 1.0)) fail(ErrorCode::Internal, "tail bound needs decay exponent > 1");
  const double base = a + 1.0;
  return c * (std::pow(base, -k) + std::pow(base, 1.0 - k) / (k - 1.0));
}

namespace {

// Integer range of n with x + n possibly inside [lo, hi], padded by one.
std::pair<long long, long long> shift_range(double x, double lo, double hi) {
  return {static_cast<long long>(std::floor(lo - x)) - 1,
          static_cast<long long>(std::ceil(hi - x)) + 1};
}

struct LatticePlan {
  bool compact = false;
  double lo = 0.0, hi = 0.0;  // support when compact
  double decay_c = 0.0, decay_k = 0.0;
};

LatticePlan plan_for(const ExprPtr& f, const char* op) {
  LatticePlan plan;
  if (auto s = support_of(*f)) {
    plan.compact = true;
    plan.lo = s->lo;
    plan.hi = s->hi;
    return plan;
  }
  if (auto d = decay_of(*f); d && d->k > 1.0) {
    plan.decay_c = d->c;
    plan.decay_k = d->k;
    return plan;
  }
  fail(ErrorCode::Precondition,
       std::string(op) + ": cannot certify the lattice sum (no compact support "
                         "and no decay certificate with exponent > 1)");
}

}  // namespace

PeriodizationResult periodization_sup(const ExprPtr& f_in, const GridConfig& grid) {
  grid.validate();
  // Certificates come from the original tree (ft nodes carry sharper decay
  // envelopes than their expanded closed forms); evaluation uses the
  // resolved tree.
  const LatticePlan plan = plan_for(f_in, "periodization_sup");
  const ExprPtr f = resolve_transforms(f_in);
  const int N = grid.lattice_truncation;
  const std::size_t m = kPeriodGridPoints;

  std::vector<double> sums(m, 0.0);
  parallel_for(m, [&](std::size_t j) {
    const double x = static_cast<double>(j) / static_cast<double>(m);
    double acc = 0.0;
    if (plan.compact) {
      auto [n0, n1] = shift_range(x, plan.lo, plan.hi);
      for (long long n = n0; n <= n1; ++n)
        acc += std::abs(eval(f, x + static_cast<double>(n)));
    } else {
      for (long long n = -N; n <= N; ++n)
        acc += std::abs(eval(f, x + static_cast<double>(n)));
    }
    sums[j] = acc;
  });

  PeriodizationResult out;
  out.delta = *std::max_element(sums.begin(), sums.end());
  if (!plan.compact) {
    // Discarded n > N sit at distance >= n from [0,1); n < -N at |n|-1.
    out.tail_bound = lattice_side_tail(plan.decay_c, plan.decay_k, static_cast<double>(N) + 1.0) +
                     lattice_side_tail(plan.decay_c, plan.decay_k, static_cast<double>(N));
  }
  return out;
}

double periodization_partial_max(const ExprPtr& f_in, int N) {
  const ExprPtr f = resolve_transforms(f_in);
  const std::size_t m = kPeriodGridPoints;
  std::vector<double> sums(m, 0.0);
  parallel_for(m, [&](std::size_t j) {
    const double x = static_cast<double>(j) / static_cast<double>(m);
    double acc = 0.0;
    for (long long n = -N; n <= N; ++n)
      acc += std::abs(eval(f, x + static_cast<double>(n)));
    sums[j] = acc;
  });
  return *std::max_element(sums.begin(), sums.end());
}

GridFunction periodize(const ExprPtr& f_in, const GridConfig& grid) {
  grid.validate();
  const LatticePlan plan = plan_for(f_in, "periodize");
  const ExprPtr f = resolve_transforms(f_in);
  const int N = grid.lattice_truncation;
  const std::size_t m =
      std::max<std::size_t>(2, static_cast<std::size_t>(std::llround(1.0 / grid.step)));
  GridFunction out = GridFunction::on_unit_interval(m);
  parallel_for(m, [&](std::size_t j) {
    const double x = out.xs[j];
    cplx acc(0.0, 0.0);
    if (plan.compact) {
      auto [n0, n1] = shift_range(x, plan.lo, plan.hi);
      for (long long n = n0; n <= n1; ++n) acc += eval(f, x + static_cast<double>(n));
    } else {
      for (long long n = -N; n <= N; ++n) acc += eval(f, x + static_cast<double>(n));
    }
    out.values[j] = acc;
  });
  if (!plan.compact)
    out.tail_bound =
        lattice_side_tail(plan.decay_c, plan.decay_k, static_cast<double>(N) + 1.0) +
        lattice_side_tail(plan.decay_c, plan.decay_k, static_cast<double>(N));
  return out;
}

namespace {

struct ExtendPlan {
  bool finite_phi = false;
  bool compact_lambda = false;
  double lo = 0.0, hi = 0.0;
  double decay_c = 0.0, decay_k = 0.0;
  double phi_sup = 0.0;
};

ExtendPlan extend_plan(const SequenceSpec& phi, const ExprPtr& lambda) {
  ExtendPlan plan;
  plan.phi_sup = phi.sup_bound();
  if (phi.is_finite()) {
    plan.finite_phi = true;
    return plan;
  }
  if (auto s = support_of(*lambda)) {
    plan.compact_lambda = true;
    plan.lo = s->lo;
    plan.hi = s->hi;
    return plan;
  }
  if (auto d = decay_of(*lambda); d && d->k > 1.0) {
    plan.decay_c = d->c;
    plan.decay_k = d->k;
    return plan;
  }
  fail(ErrorCode::Precondition,
       "extend: series convergence is not certifiable (phi is not finitely "
       "supported, and the kernel has neither compact support nor a decay "
       "certificate with exponent > 1)");
}

cplx extend_point_planned(const SequenceSpec& phi, const ExprPtr& lambda,
                          double xi, int N, const ExtendPlan& plan) {
  cplx acc(0.0, 0.0);
  if (plan.finite_phi) {
    for (const auto& [n, v] : phi.entries)
      acc += phi.eval(n) * eval(lambda, xi - static_cast<double>(n));
    return acc;
  }
  if (plan.compact_lambda) {
    // Lambda(xi - n) != 0 forces n in [xi - hi, xi - lo].
    const long long n0 = static_cast<long long>(std::floor(xi - plan.hi)) - 1;
    const long long n1 = static_cast<long long>(std::ceil(xi - plan.lo)) + 1;
    for (long long n = n0; n <= n1; ++n)
      acc += phi.eval(n) * eval(lambda, xi - static_cast<double>(n));
    return acc;
  }
  const long long center = std::llround(xi);
  for (long long n = center - N; n <= center + N; ++n)
    acc += phi.eval(n) * eval(lambda, xi - static_cast<double>(n));
  return acc;
}

double extend_tail(const ExtendPlan& plan, int N) {
  if (plan.finite_phi || plan.compact_lambda) return 0.0;
  // Excluded terms sit at distance |xi - n| >= |n - round(xi)| - 1/2.
  return 2.0 * plan.phi_sup *
         lattice_side_tail(plan.decay_c, plan.decay_k, static_cast<double>(N) + 0.5);
}

}  // namespace

GridFunction extend(const SequenceSpec& phi, const ExprPtr& lambda_in,
                    const GridConfig& grid) {
  grid.validate();
  phi.validate();
  const ExtendPlan plan = extend_plan(phi, lambda_in);
  const ExprPtr lambda = resolve_transforms(lambda_in);
  GridFunction out = GridFunction::on_window(grid);
  const int N = grid.lattice_truncation;
  parallel_for(out.xs.size(), [&](std::size_t j) {
    out.values[j] = extend_point_planned(phi, lambda, out.xs[j], N, plan);
  });
  out.tail_bound = extend_tail(plan, N);
  return out;
}

cplx extend_point(const SequenceSpec& phi, const ExprPtr& lambda_in, double xi,
                  int lattice_truncation) {
  const ExtendPlan plan = extend_plan(phi, lambda_in);
  const ExprPtr lambda = resolve_transforms(lambda_in);
  return extend_point_planned(phi, lambda, xi, lattice_truncation, plan);
}

SequenceSpec fejer_regularize(const SequenceSpec& phi, long long N) {
  if (N < 1) fail(ErrorCode::Domain, "fejer_regularize: N must be a positive integer");
  phi.validate();
  std::map<long long, cplx> entries;
  const double width = static_cast<double>(N + 1);
  for (long long n = -N; n <= N; ++n) {
    const double w = 1.0 - static_cast<double>(std::abs(n)) / width;
    const cplx v = phi.eval(n) * w;
    if (v != cplx(0.0, 0.0)) entries[n] = v;
  }
  return SequenceSpec::finite(std::move(entries));
}

GridFunction fourier_transform(const ExprPtr& f, const GridConfig& grid) {
  grid.validate();
  if (!l1_bound_of(*f))
    fail(ErrorCode::Precondition,
         "fourier_transform: input is not certifiably integrable (needs a decay "
         "certificate or compact support)");
  GridFunction out = GridFunction::on_window(grid);
  if (auto cf = analytic_ft(*f)) {
    parallel_for(out.xs.size(),
                 [&](std::size_t j) { out.values[j] = eval(**cf, out.xs[j]); });
    return out;
  }
  parallel_for(out.xs.size(), [&](std::size_t j) {
    out.values[j] = ft_by_quadrature(*f, out.xs[j], grid.tolerance);
  });
  return out;
}

PoissonResult poisson_constant(const ExprPtr& s, const GridConfig& grid) {
  grid.validate();
  auto supp = support_of(*s);
  constexpr double kSlack = 1e-12;
  if (!supp || supp->lo < 0.25 - kSlack || supp->hi > 0.75 + kSlack)
    fail(ErrorCode::Precondition,
         "poisson_constant: support must lie inside [1/4, 3/4] "
         "(apply support_normalize first)");
  if (!is_continuous_structural(*s))
    fail(ErrorCode::Precondition, "poisson_constant: input must be continuous");

  const double kft = ft_max_decay_exponent(*s);
  if (kft <= 1.0)
    fail(ErrorCode::Precondition,
         "poisson_constant: no certified decay for hat S; lattice tail unbounded");
  const double k_use = std::isinf(kft) ? 8.0 : kft;
  auto cft = ft_decay_coeff_at(*s, k_use);
  if (!cft)
    fail(ErrorCode::Precondition, "poisson_constant: no decay coefficient for hat S");

  const int N = grid.lattice_truncation;
  const std::size_t m =
      std::max<std::size_t>(3, static_cast<std::size_t>(std::llround(1.0 / grid.step)));

  auto hat = analytic_ft(*s);
  auto hat_eval = [&](double xi) {
    return hat ? eval(**hat, xi) : ft_by_quadrature(*s, xi, grid.tolerance);
  };

  const cplx s0 = eval(*s, 0.0);
  std::vector<cplx> sums(m);
  parallel_for(m, [&](std::size_t j) {
    const double x = static_cast<double>(j) / static_cast<double>(m);
    cplx acc(0.0, 0.0);
    for (long long n = -N; n <= N; ++n) acc += hat_eval(x + static_cast<double>(n));
    sums[j] = acc;
  });

  PoissonResult out;
  double mean = 0.0, dev = 0.0;
  for (const auto& v : sums) {
    mean += v.real();
    dev = std::max(dev, std::abs(v - s0));
  }
  out.constant_estimate = mean / static_cast<double>(m);
  out.max_deviation = dev;
  out.tail_bound = lattice_side_tail(*cft, k_use, static_cast<double>(N) + 1.0) +
                   lattice_side_tail(*cft, k_use, static_cast<double>(N));
  return out;
}

}  // namespace sumkern
