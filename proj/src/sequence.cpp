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

#include "sequence.hpp"

#include <algorithm>
#include <cmath>

namespace sumkern {

SequenceSpec SequenceSpec::finite(std::map<long long, cplx> entries) {
  SequenceSpec s;
  long long radius = 0;
  for (auto it = entries.begin(); it != entries.end();) {
    if (it->second == cplx(0.0, 0.0)) {
      it = entries.erase(it);
    } else {
      radius = std::max(radius, std::abs(it->first));
      ++it;
    }
  }
  s.entries = std::move(entries);
  s.support_radius = radius;
  return s;
}

SequenceSpec SequenceSpec::delta(long long at, cplx weight) {
  return finite({{at, weight}});
}

SequenceSpec SequenceSpec::closed(ClosedForm cf, double damp) {
  SequenceSpec s;
  s.closed_form = cf;
  s.damp = damp;
  s.validate();
  return s;
}

void SequenceSpec::validate() const {
  if (!(damp > 0.0) || damp > 1.0)
    fail(ErrorCode::Parse, "sequence damp factor must lie in (0, 1]");
  if (closed_form) {
    if (!entries.empty())
      fail(ErrorCode::Parse, "sequence cannot carry both entries and a closed form");
    if (support_radius)
      fail(ErrorCode::Parse, "closed-form sequences are not finitely supported");
    if (!std::isfinite(closed_form->amplitude))
      fail(ErrorCode::Parse, "closed form amplitude must be finite");
    if (closed_form->form == Form::Geometric &&
        !(std::abs(closed_form->ratio) < 1.0))
      fail(ErrorCode::Parse, "geometric ratio must satisfy |r| < 1");
  } else {
    long long radius = 0;
    for (const auto& [n, v] : entries) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        fail(ErrorCode::Parse, "sequence entry must be finite");
      if (v != cplx(0.0, 0.0)) radius = std::max(radius, std::abs(n));
    }
    if (!support_radius)
      fail(ErrorCode::Parse, "finitely supported sequence needs a support radius");
    if (*support_radius < radius)
      fail(ErrorCode::Parse, "nonzero entry outside the stated support radius");
  }
}

cplx SequenceSpec::eval(long long n) const {
  const double an = static_cast<double>(std::abs(n));
  const double d = damp == 1.0 ? 1.0 : std::pow(damp, an);
  if (!closed_form) {
    auto it = entries.find(n);
    return it == entries.end() ? cplx(0.0, 0.0) : it->second * d;
  }
  switch (closed_form->form) {
    case Form::Geometric:
      return cplx(closed_form->amplitude * std::pow(closed_form->ratio, an) * d, 0.0);
    case Form::InverseSquare:
      return cplx(closed_form->amplitude / (1.0 + an * an) * d, 0.0);
    case Form::Alternating:
      return cplx(closed_form->amplitude * (n % 2 == 0 ? 1.0 : -1.0) * d, 0.0);
    case Form::Constant:
      return cplx(closed_form->amplitude * d, 0.0);
  }
  fail(ErrorCode::Internal, "sequence eval: unreachable");
}

double SequenceSpec::sup_bound() const {
  if (!closed_form) {
    double m = 0.0;
    for (const auto& [n, v] : entries) m = std::max(m, std::abs(v));
    return m;
  }
  return std::abs(closed_form->amplitude);
}

std::optional<double> SequenceSpec::lp_norm(double p) const {
  if (!(p >= 1.0)) return std::nullopt;
  if (!closed_form) {
    double acc = 0.0;
    for (const auto& [n, v] : entries) {
      const double a = std::abs(eval(n));
      acc += std::pow(a, p);
    }
    return std::pow(acc, 1.0 / p);
  }
  const double amp = std::abs(closed_form->amplitude);
  switch (closed_form->form) {
    case Form::Geometric: {
      const double q = std::pow(std::abs(closed_form->ratio) * damp, p);
      return amp * std::pow(1.0 + 2.0 * q / (1.0 - q), 1.0 / p);
    }
    case Form::Alternating:
    case Form::Constant: {
      // |phi(n)| = amp * damp^|n| exactly; summable only when damped.
      if (damp >= 1.0) return std::nullopt;
      const double q = std::pow(damp, p);
      return amp * std::pow(1.0 + 2.0 * q / (1.0 - q), 1.0 / p);
    }
    case Form::InverseSquare: {
      // Direct sum with an integral tail bound for (1+n^2)^-p.
      const long long cutoff = 4096;
      double acc = std::pow(std::abs(eval(0)), p);
      for (long long n = 1; n <= cutoff; ++n)
        acc += 2.0 * std::pow(std::abs(eval(n)), p);
      // Tail: 2 amp^p sum_{n>cutoff} n^{-2p} <= 2 amp^p cutoff^{1-2p}/(2p-1).
      acc += 2.0 * std::pow(amp, p) * std::pow(static_cast<double>(cutoff), 1.0 - 2.0 * p) /
             (2.0 * p - 1.0);
      return std::pow(acc, 1.0 / p);
    }
  }
  return std::nullopt;
}

std::optional<double> SequenceSpec::l1_tail(long long radius) const {
  if (radius < 0) radius = 0;
  if (!closed_form) {
    double acc = 0.0;
    for (const auto& [n, v] : entries)
      if (std::abs(n) > radius) acc += std::abs(eval(n));
    return acc;
  }
  const double amp = std::abs(closed_form->amplitude);
  switch (closed_form->form) {
    case Form::Geometric:
    case Form::Alternating:
    case Form::Constant: {
      const double q = (closed_form->form == Form::Geometric)
                           ? std::abs(closed_form->ratio) * damp
                           : damp;
      if (q >= 1.0) return std::nullopt;
      return 2.0 * amp * std::pow(q, static_cast<double>(radius + 1)) / (1.0 - q);
    }
    case Form::InverseSquare:
      // sum_{n > r} 1/(1+n^2) <= integral_r^inf dt/t^2 = 1/r.
      return 2.0 * amp / std::max<double>(1.0, static_cast<double>(radius));
  }
  return std::nullopt;
}

SequenceSpec SequenceSpec::damped(double r) const {
  if (!(r > 0.0) || r > 1.0) fail(ErrorCode::Domain, "abel factor must lie in (0, 1]");
  SequenceSpec out = *this;
  out.damp = damp * r;
  return out;
}

SequenceSpec SequenceSpec::modulated(double x) const {
  if (!is_finite())
    fail(ErrorCode::Domain, "modulation is only materialized for finite sequences");
  SequenceSpec out = *this;
  for (auto& [n, v] : out.entries) v *= cis(-kTwoPi * x * static_cast<double>(n));
  return out;
}

}  // namespace sumkern
