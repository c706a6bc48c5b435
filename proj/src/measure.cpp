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

#include "measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lattice.hpp"
#include "membership.hpp"
#include "quadrature.hpp"

namespace sumkern {

void TorusMeasure::normalize() {
  std::map<double, cplx> merged;
  for (const auto& a : atoms) {
    if (!(a.x >= 0.0) || a.x >= 1.0)
      fail(ErrorCode::Parse, "torus atom location must lie in [0,1)");
    if (!std::isfinite(a.weight.real()) || !std::isfinite(a.weight.imag()))
      fail(ErrorCode::Parse, "torus atom weight must be finite");
    merged[a.x] += a.weight;
  }
  atoms.clear();
  for (const auto& [x, w] : merged)
    if (w != cplx(0.0, 0.0)) atoms.push_back({x, w});
}

double TorusMeasure::atom_variation() const {
  double acc = 0.0;
  for (const auto& a : atoms) acc += std::abs(a.weight);
  return acc;
}

cplx TorusMeasure::fourier_coeff(long long n, double tol) const {
  cplx acc(0.0, 0.0);
  for (const auto& a : atoms)
    acc += a.weight * cis(-kTwoPi * static_cast<double>(n) * a.x);
  if (density) {
    auto integrand = [this, n](double x) {
      return eval(density, x) * cis(-kTwoPi * static_cast<double>(n) * x);
    };
    acc += integrate(integrand, 0.0, 1.0, tol).value;
  }
  return acc;
}

LineMeasure transfer(const TorusMeasure& nu, const ExprPtr& lambda,
                     const GridConfig& grid, MembershipReport* rejection) {
  grid.validate();

  S1Analysis s1 = classify_s1_full(lambda, grid);
  MembershipReport gate = s1.report;
  gate.space = "F_0";
  if (gate.holds()) {
    // F_0 additionally needs delta_Lambda < infinity.
    try {
      PeriodizationResult per = periodization_sup(lambda, grid);
      gate.witness.emplace_back("delta_lambda", per.delta + per.tail_bound);
    } catch (const Error& e) {
      gate.verdict = MembershipReport::Verdict::Undecided;
      gate.reason = std::string("delta_Lambda not certifiable: ") + e.what();
    }
  }
  if (!gate.holds()) {
    if (rejection) *rejection = gate;
    fail(ErrorCode::Precondition,
         "transfer: kernel is not certified in F_0 (" + gate.reason + ")");
  }

  const ExprPtr g = s1.witness;                             // lambda = hat g
  const ExprPtr g_tilde = resolve_transforms(reflect(g));   // g(-x), structurally

  LineMeasure out;
  const int N = grid.lattice_truncation;

  // Atom images: (x_j, a_j) -> sum_n a_j g~(x_j + n) delta_{x_j + n}.
  auto g_supp = support_of(*g_tilde);
  double atom_var = 0.0;
  for (const auto& a : nu.atoms) atom_var += std::abs(a.weight);
  for (const auto& a : nu.atoms) {
    long long n0 = -N, n1 = N;
    if (g_supp) {
      n0 = static_cast<long long>(std::floor(g_supp->lo - a.x)) - 1;
      n1 = static_cast<long long>(std::ceil(g_supp->hi - a.x)) + 1;
    }
    for (long long n = n0; n <= n1; ++n) {
      const double y = a.x + static_cast<double>(n);
      const cplx w = a.weight * eval(g_tilde, y);
      if (w != cplx(0.0, 0.0)) out.atoms.push_back({y, w});
    }
  }
  std::sort(out.atoms.begin(), out.atoms.end(),
            [](const LineMeasure::Atom& a, const LineMeasure::Atom& b) { return a.y < b.y; });
  if (!g_supp && atom_var > 0.0) {
    auto d = decay_of(*g);
    if (d && d->k > 1.0)
      out.tail_bound = 2.0 * atom_var *
                       lattice_side_tail(d->c, d->k, static_cast<double>(N) - 1.0);
  }

  // Density image: F(frac(x)) g(x).
  if (nu.density) out.density = product({wrap(nu.density), g});
  return out;
}

MajorantReport radial_majorant_check(const ExprPtr& lambda, const ExprPtr& lambda1,
                                     const GridConfig& grid) {
  grid.validate();
  MajorantReport rep;

  // (a) radial and decreasing: structural evenness plus a grid sweep of
  // |Lambda1| on [0, L].
  bool monotone = true;
  const std::size_t n = grid.count() / 2 + 1;
  double prev = std::abs(eval(lambda1, 0.0));
  for (std::size_t j = 1; j < n; ++j) {
    const double x = static_cast<double>(j) * grid.step;
    const double v = std::abs(eval(lambda1, x));
    if (v > prev + 1e-12) {
      monotone = false;
      break;
    }
    prev = v;
  }
  rep.radial = is_even_structural(*lambda1) && is_real_structural(*lambda1) && monotone;

  // (b) integrable with a certificate; record the quadrature value.
  if (auto l1 = l1_bound_of(*lambda1)) {
    rep.integrable = true;
    double lo = -grid.window_halfwidth, hi = grid.window_halfwidth;
    if (auto s = support_of(*lambda1)) {
      lo = s->lo;
      hi = s->hi;
    }
    rep.l1_value =
        integrate([&](double x) { return cplx(std::abs(eval(lambda1, x)), 0.0); }, lo,
                  hi, grid.tolerance)
            .value.real();
  }

  // (c) |Lambda(xi)| <= |Lambda1(|xi|)| on the window grid.
  rep.dominates = true;
  for (std::size_t j = 0; j < grid.count(); ++j) {
    const double xi = grid.point(j);
    if (std::abs(eval(lambda, xi)) > std::abs(eval(lambda1, std::abs(xi))) + 1e-12) {
      rep.dominates = false;
      break;
    }
  }

  // Decreasing radial integrable functions have finite periodization sup.
  try {
    PeriodizationResult per = periodization_sup(lambda1, grid);
    rep.majorant_delta_finite = true;
    rep.delta_value = per.delta + per.tail_bound;
  } catch (const Error&) {
    rep.majorant_delta_finite = false;
  }
  return rep;
}

}  // namespace sumkern
