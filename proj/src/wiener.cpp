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

#include "wiener.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "quadrature.hpp"

namespace sumkern {

SeriesMuHat::SeriesMuHat(const TorusMeasure& nu, const ExprPtr& lambda,
                         const GridConfig& grid, double sample_step,
                         double max_abs_xi) {
  grid.validate();
  lambda_ = resolve_transforms(lambda);
  window_ = grid.lattice_truncation;
  if (!(sample_step > 0.0)) fail(ErrorCode::Domain, "sample step must be positive");
  const double inv = 1.0 / sample_step;
  inv_step_ = std::llround(inv);
  if (inv_step_ < 1 || std::abs(inv - static_cast<double>(inv_step_)) > 1e-9)
    fail(ErrorCode::Domain, "sample step must divide 1 (1/step integral)");
  step_ = 1.0 / static_cast<double>(inv_step_);

  coeff_radius_ = static_cast<long long>(std::ceil(max_abs_xi)) + window_ + 2;
  nu_hat_.assign(2 * coeff_radius_ + 1, cplx(0.0, 0.0));
  for (long long n = -coeff_radius_; n <= coeff_radius_; ++n) {
    cplx acc(0.0, 0.0);
    for (const auto& a : nu.atoms)
      acc += a.weight * cis(-kTwoPi * static_cast<double>(n) * a.x);
    nu_hat_[n + coeff_radius_] = acc;
  }
  if (nu.density) {
    // Coefficients of the density, stopping once both sides sit below
    // tolerance for a stretch; the remainder is recorded as slack.
    const double tol = std::min(grid.tolerance, 1e-8);
    const long long hard_cap = std::min<long long>(coeff_radius_, 1024);
    auto coeff = [&](long long n) {
      return integrate(
                 [&](double x) {
                   return eval(nu.density, x) * cis(-kTwoPi * static_cast<double>(n) * x);
                 },
                 0.0, 1.0, 0.1 * tol)
          .value;
    };
    nu_hat_[coeff_radius_] += coeff(0);
    int quiet = 0;
    long long reached = hard_cap;
    for (long long n = 1; n <= hard_cap; ++n) {
      const cplx cp = coeff(n), cm = coeff(-n);
      nu_hat_[n + coeff_radius_] += cp;
      nu_hat_[-n + coeff_radius_] += cm;
      if (std::abs(cp) < tol && std::abs(cm) < tol)
        ++quiet;
      else
        quiet = 0;
      if (quiet >= 8) {
        reached = n;
        break;
      }
    }
    coeff_slack_ = (reached >= hard_cap) ? tol : tol;  // omitted coefficients < tol
  }

  table_radius_ = static_cast<long long>(window_ + 2) * inv_step_;
  lambda_table_.resize(2 * table_radius_ + 1);
  parallel_for(lambda_table_.size(), [&](std::size_t idx) {
    const long long j = static_cast<long long>(idx) - table_radius_;
    lambda_table_[idx] = eval(lambda_, static_cast<double>(j) * step_);
  });
}

cplx SeriesMuHat::nu_hat(long long n) const {
  if (n < -coeff_radius_ || n > coeff_radius_) return cplx(0.0, 0.0);
  return nu_hat_[n + coeff_radius_];
}

cplx SeriesMuHat::operator()(double xi) const {
  const long long c = std::llround(xi);
  cplx acc(0.0, 0.0);
  for (long long n = c - window_; n <= c + window_; ++n)
    acc += nu_hat(n) * eval(lambda_, xi - static_cast<double>(n));
  return acc;
}

cplx SeriesMuHat::sample(long long i, double step) const {
  if (std::abs(step - step_) > 1e-15)
    return (*this)(static_cast<double>(i) * step);
  const long long c = std::llround(static_cast<double>(i) * step_);
  cplx acc(0.0, 0.0);
  for (long long n = c - window_; n <= c + window_; ++n) {
    const long long j = i - n * inv_step_;
    if (j < -table_radius_ || j > table_radius_) continue;
    const cplx nh = nu_hat(n);
    if (nh != cplx(0.0, 0.0)) acc += nh * lambda_table_[j + table_radius_];
  }
  return acc;
}

WienerAverager::WienerAverager(const MuHatProvider& mu, WienerSchedule schedule)
    : sched_(std::move(schedule)) {
  if (sched_.lambdas.empty()) fail(ErrorCode::Domain, "empty lambda schedule");
  if (!(sched_.step > 0.0)) fail(ErrorCode::Domain, "sample step must be positive");
  double prev = 0.0;
  for (double& l : sched_.lambdas) {
    if (!(l > prev)) fail(ErrorCode::Domain, "lambda schedule must be positive increasing");
    const long long k = std::max<long long>(1, std::llround(l / sched_.step));
    l = static_cast<double>(k) * sched_.step;  // snap to the sample lattice
    half_counts_.push_back(k);
    prev = l;
  }
  half_max_ = half_counts_.back();
  samples_.resize(2 * half_max_ + 1);
  const double step = sched_.step;
  parallel_for(samples_.size(), [&](std::size_t idx) {
    const long long i = static_cast<long long>(idx) - half_max_;
    samples_[idx] = mu.sample(i, step);
  });
}

WienerAverager::AtomEstimate WienerAverager::atom(double y) const {
  AtomEstimate out;
  const double step = sched_.step;
  for (std::size_t li = 0; li < half_counts_.size(); ++li) {
    const long long K = half_counts_[li];
    const double lambda = sched_.lambdas[li];
    // Simpson over [-lambda, lambda] of hat mu(xi) e^{2 pi i xi y}.
    const cplx rot_step = cis(kTwoPi * y * step);
    cplx rot = cis(kTwoPi * y * (-lambda));
    cplx acc(0.0, 0.0);
    for (long long i = -K; i <= K; ++i) {
      double w = (i == -K || i == K) ? 1.0 : ((i + K) % 2 == 1 ? 4.0 : 2.0);
      acc += w * samples_[i + half_max_] * rot;
      rot *= rot_step;
      if ((i + K) % 4096 == 4095)  // re-sync the rotor against drift
        rot = cis(kTwoPi * y * (static_cast<double>(i + 1) * step));
    }
    acc *= step / 3.0;
    out.per_lambda.push_back(acc / (2.0 * lambda));
  }
  out.value = out.per_lambda.back();
  out.converged = out.per_lambda.size() < 2 ||
                  std::abs(out.per_lambda.back() -
                           out.per_lambda[out.per_lambda.size() - 2]) <= sched_.eps;
  return out;
}

WienerAverager::EnergyEstimate WienerAverager::energy() const {
  EnergyEstimate out;
  const double step = sched_.step;
  for (std::size_t li = 0; li < half_counts_.size(); ++li) {
    const long long K = half_counts_[li];
    const double lambda = sched_.lambdas[li];
    double acc = 0.0;
    for (long long i = -K; i <= K; ++i) {
      const double w = (i == -K || i == K) ? 1.0 : ((i + K) % 2 == 1 ? 4.0 : 2.0);
      acc += w * std::norm(samples_[i + half_max_]);
    }
    acc *= step / 3.0;
    out.per_lambda.push_back(acc / (2.0 * lambda));
  }
  out.value = out.per_lambda.back();
  out.converged = out.per_lambda.size() < 2 ||
                  std::abs(out.per_lambda.back() -
                           out.per_lambda[out.per_lambda.size() - 2]) <= sched_.eps;
  return out;
}

WienerAverager::AtomEstimate wiener_atom(const MuHatProvider& mu, double y,
                                         const WienerSchedule& schedule) {
  return WienerAverager(mu, schedule).atom(y);
}

WienerAverager::EnergyEstimate wiener_energy(const MuHatProvider& mu,
                                             const WienerSchedule& schedule) {
  return WienerAverager(mu, schedule).energy();
}

}  // namespace sumkern
