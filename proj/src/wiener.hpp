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

#ifndef SUMKERN_WIENER_HPP
#define SUMKERN_WIENER_HPP

#include <vector>

#include "expr.hpp"
#include "grid.hpp"
#include "measure.hpp"

namespace sumkern {

// Something that can produce hat mu on arbitrarily large windows.
class MuHatProvider {
public:
  virtual ~MuHatProvider() = default;
  virtual cplx operator()(double xi) const = 0;
  // Lattice sample hook; overridden where xi = i*step admits a fast path.
  virtual cplx sample(long long i, double step) const {
    return (*this)(static_cast<double>(i) * step);
  }
};

// hat mu given directly as a symbolic function (synthetic inputs).
class ExprMuHat final : public MuHatProvider {
public:
  explicit ExprMuHat(ExprPtr f) : f_(resolve_transforms(std::move(f))) {}
  cplx operator()(double xi) const override { return eval(f_, xi); }

private:
  ExprPtr f_;
};

// hat mu = W_{hat nu, Lambda} as a lattice series. The Fourier coefficients
// of nu and the kernel samples are tabulated once, so lattice-aligned
// sampling is a table convolution. Density coefficients are computed by
// quadrature until they stay below tolerance; the omitted remainder is
// reported as coefficient slack.
class SeriesMuHat final : public MuHatProvider {
public:
  SeriesMuHat(const TorusMeasure& nu, const ExprPtr& lambda, const GridConfig& grid,
              double sample_step, double max_abs_xi);

  cplx operator()(double xi) const override;
  cplx sample(long long i, double step) const override;
  double coefficient_slack() const { return coeff_slack_; }

private:
  cplx nu_hat(long long n) const;

  ExprPtr lambda_;
  int window_;
  long long inv_step_ = 0;
  double step_ = 0.0;
  long long coeff_radius_ = 0;
  std::vector<cplx> nu_hat_;      // index n + coeff_radius_
  long long table_radius_ = 0;    // lambda table, in index units
  std::vector<cplx> lambda_table_;
  double coeff_slack_ = 0.0;
};

struct WienerSchedule {
  std::vector<double> lambdas{256.0, 1024.0, 4096.0};
  double step = 1.0 / 64.0;
  double eps = 1e-3;  // convergence tolerance between successive lambdas
};

// Symmetric averages (1/2L) int_{-L}^{L} of hat mu against a character
// (atom mass at y) or of |hat mu|^2 (sum of squared atom masses). Samples
// are taken once on the largest window and reused across the schedule;
// each average is a composite Simpson rule, no extrapolation.
class WienerAverager {
public:
  WienerAverager(const MuHatProvider& mu, WienerSchedule schedule);

  struct AtomEstimate {
    cplx value{0.0, 0.0};
    bool converged = false;
    std::vector<cplx> per_lambda;
  };
  AtomEstimate atom(double y) const;

  struct EnergyEstimate {
    double value = 0.0;
    bool converged = false;
    std::vector<double> per_lambda;
  };
  EnergyEstimate energy() const;

  const std::vector<double>& lambdas() const { return sched_.lambdas; }

private:
  WienerSchedule sched_;
  std::vector<long long> half_counts_;
  std::vector<cplx> samples_;  // index i + half_max_
  long long half_max_ = 0;
};

WienerAverager::AtomEstimate wiener_atom(const MuHatProvider& mu, double y,
                                         const WienerSchedule& schedule);
WienerAverager::EnergyEstimate wiener_energy(const MuHatProvider& mu,
                                             const WienerSchedule& schedule);

}  // namespace sumkern

#endif
