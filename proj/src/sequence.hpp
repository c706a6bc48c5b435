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

#ifndef SUMKERN_SEQUENCE_HPP
#define SUMKERN_SEQUENCE_HPP

#include <map>
#include <optional>
#include <vector>

#include "common.hpp"

namespace sumkern {

// A complex sequence on the integers: either finitely supported (explicit
// entries) or given by a closed-form rule with known decay. `damp` applies an
// extra Abel factor damp^|n| on top of either representation.
struct SequenceSpec {
  enum class Form { Geometric, InverseSquare, Alternating, Constant };
  struct ClosedForm {
    Form form;
    double amplitude = 1.0;
    double ratio = 0.5;  // Geometric only
  };

  std::map<long long, cplx> entries;
  std::optional<long long> support_radius;
  std::optional<ClosedForm> closed_form;
  double damp = 1.0;

  static SequenceSpec finite(std::map<long long, cplx> entries);
  static SequenceSpec delta(long long at = 0, cplx weight = cplx(1.0, 0.0));
  static SequenceSpec closed(ClosedForm cf, double damp = 1.0);

  bool is_finite() const { return !closed_form.has_value(); }
  cplx eval(long long n) const;
  double sup_bound() const;  // certified sup_n |phi(n)|

  // l_p norm with a certified tail; nullopt when the sequence is not
  // certifiably in l_p (e.g. an undamped alternating or constant sequence).
  std::optional<double> lp_norm(double p) const;

  // Certified bound on sum_{|n| > radius} |phi(n)|; nullopt when |phi| is not
  // certifiably summable.
  std::optional<double> l1_tail(long long radius) const;

  SequenceSpec damped(double r) const;       // multiply by r^|n|
  SequenceSpec modulated(double x) const;    // n -> exp(-2 pi i x n) phi(n), finite only

  // Validates the stated invariants (support radius consistency, damp range).
  void validate() const;
};

}  // namespace sumkern

#endif
