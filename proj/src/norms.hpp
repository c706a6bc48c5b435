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

#ifndef SUMKERN_NORMS_HPP
#define SUMKERN_NORMS_HPP

#include <cstdint>
#include <string>

#include "expr.hpp"
#include "grid.hpp"
#include "measure.hpp"

namespace sumkern {

struct NormCertificate {
  double p = 2.0;
  double value = 0.0;
  enum class Kind { Exact, LowerBound, UpperBound } kind = Kind::Exact;
  std::string provenance;
};

const char* certificate_kind_name(NormCertificate::Kind k);

// Multiplier norm on L^2: the essential sup of |Lambda|, estimated by the
// window grid maximum. Rejects inputs that are not certifiably bounded.
NormCertificate m2_norm(const ExprPtr& lambda, const GridConfig& grid);

// Multiplier norm on L^1: the total variation of the measure (atom mass plus
// the quadrature of |density|).
NormCertificate m1_norm(const LineMeasure& mu, const GridConfig& grid);

// Lower bound for the L^p multiplier norm, 1 < p < infinity: realizes the
// multiplier on a discretized circle (FFT, multiply samples, inverse FFT)
// and maximizes ||Tf||_p/||f||_p over pure tones plus a seeded test family
// of Gaussian packets, modulated boxes and random band signals. The tone at
// the grid argmax of |Lambda| makes the p=2 value coincide with m2_norm.
NormCertificate mp_norm_lower_bound(const ExprPtr& lambda, double p,
                                    const GridConfig& grid, std::uint64_t seed);

// Conv-operator lower bound on l_p(Z) for an explicit kernel sequence,
// realized on a cyclic group; used for fiber reports at p outside {1,2}.
double cyclic_conv_lp_lower_bound(const std::vector<cplx>& kernel, double p,
                                  std::uint64_t seed);

}  // namespace sumkern

#endif
